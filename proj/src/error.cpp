#include "afkit/error.hpp"

namespace afkit {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::BadVertex: return "BadVertex";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::CapExceeded: return "CapExceeded";
        case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
        case ErrorCode::NotPerfect: return "NotPerfect";
        case ErrorCode::NotAlternating: return "NotAlternating";
        case ErrorCode::NotBipartite: return "NotBipartite";
        case ErrorCode::NotElementary: return "NotElementary";
        case ErrorCode::BadFaceSet: return "BadFaceSet";
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::OddLength: return "OddLength";
        case ErrorCode::OffsetOutOfRange: return "OffsetOutOfRange";
        case ErrorCode::MissingOffset: return "MissingOffset";
        case ErrorCode::UnexpectedOffset: return "UnexpectedOffset";
        case ErrorCode::BadModes: return "BadModes";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
    }
    return "Unknown";
}

} // namespace afkit
