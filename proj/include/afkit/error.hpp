#pragma once

#include <stdexcept>
#include <string>

namespace afkit {

enum class ErrorCode {
    LoopEdge,
    DuplicateEdge,
    BadVertex,
    Disconnected,
    CapExceeded,
    NoPerfectMatching,
    NotPerfect,
    NotAlternating,
    NotBipartite,
    NotElementary,
    BadFaceSet,
    SyntaxError,
    OddLength,
    OffsetOutOfRange,
    MissingOffset,
    UnexpectedOffset,
    BadModes,
    VerificationFailed,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

} // namespace afkit
