#pragma once

#include <string>
#include <vector>

#include "afkit/chain.hpp"
#include "afkit/solver.hpp"

namespace afkit {

/// Values the linear-time chain algorithms claim for a chain.
struct ChainAnswers {
    int af = 0;
    int max_af = 0;
    std::vector<int> spectrum;
};

ChainAnswers chain_answers(const ChainSpec& spec);

struct VerifyMismatch {
    std::string field;
    std::string chain_value;
    std::string oracle_value;
};

struct VerifyOutcome {
    ChainAnswers chain;
    ChainAnswers oracle;
    std::vector<VerifyMismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Cross-validates the chain decompositions against the exact solver on the
/// realized graph: af, max af, full spectrum, af = c' per matching, the
/// pendant-stripping view of the block recursion, and the min witness.
/// `answers` overrides the chain side (used to exercise mismatch reporting).
VerifyOutcome verify_chain(const ChainSpec& spec, const Caps& caps = {}, int jobs = 1,
                           const ChainAnswers* answers = nullptr);

} // namespace afkit
