#pragma once

// Deterministic chain corpus shared by the acceptance criteria: exhaustive
// small instances, the named families, and seeded random chains.

#include <vector>

#include "afkit/chain.hpp"

namespace afkit::test {

inline std::vector<ChainSpec> chain_corpus() {
    std::vector<ChainSpec> corpus;
    // every single face
    for (int len : {4, 6, 8}) corpus.push_back(ChainSpec{{len}, {}});
    // every two-face chain
    for (int a : {4, 6, 8})
        for (int b : {4, 6, 8}) corpus.push_back(ChainSpec{{a, b}, {}});
    // every three-face chain over lengths {4, 6}, all offsets
    for (int a : {4, 6})
        for (int b : {4, 6})
            for (int c : {4, 6})
                for (int d = 0; d <= b - 2; ++d) corpus.push_back(ChainSpec{{a, b, c}, {d}});
    // named families
    for (int n = 2; n <= 6; ++n) corpus.push_back(generate(ChainFamily::StraightPolyomino, n));
    for (int n = 2; n <= 6; ++n) corpus.push_back(generate(ChainFamily::AllkinkCatahex, n));
    for (int n = 3; n <= 6; ++n) corpus.push_back(generate(ChainFamily::Hexchain, n)); // linear
    corpus.push_back(generate(ChainFamily::Phenylene, 3));
    corpus.push_back(generate(ChainFamily::Phenylene, 5));
    // seeded random
    for (int i = 0; i < 20; ++i)
        corpus.push_back(generate(ChainFamily::Random, 4 + i % 3, "", 0xC0FFEE + i));
    return corpus;
}

} // namespace afkit::test
