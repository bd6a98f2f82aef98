#pragma once

// Test-only brute-force oracles, deliberately independent of the library's
// search paths: perfect matchings by scanning all edge subsets of the right
// size, alternating cycles by scanning all edge subsets, anti-forcing numbers
// by explicit minimum hitting set over the full brute-forced cycle family.
// Only usable on small graphs (edge count <= ~20).

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

#include "afkit/graph.hpp"

namespace afkit::test {

inline std::vector<int> bits_to_ids(std::uint64_t bits) {
    std::vector<int> ids;
    for (int i = 0; bits; ++i, bits >>= 1)
        if (bits & 1) ids.push_back(i);
    return ids;
}

inline bool subset_is_perfect_matching(const Graph& g, std::uint64_t bits) {
    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (!(bits >> e & 1)) continue;
        auto [u, v] = g.endpoints(e);
        if (covered[u] || covered[v]) return false;
        covered[u] = covered[v] = 1;
    }
    for (char c : covered)
        if (!c) return false;
    return true;
}

inline std::vector<std::vector<int>> oracle_perfect_matchings(const Graph& g) {
    std::vector<std::vector<int>> out;
    if (g.vertex_count() % 2) return out;
    const int m = g.edge_count();
    for (std::uint64_t bits = 0; bits < (1ull << m); ++bits)
        if (std::popcount(bits) * 2 == g.vertex_count() && subset_is_perfect_matching(g, bits))
            out.push_back(bits_to_ids(bits));
    std::sort(out.begin(), out.end());
    return out;
}

// A subset forms a single cycle iff it induces a connected 2-regular subgraph.
inline bool subset_is_cycle(const Graph& g, std::uint64_t bits) {
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    int edges = 0;
    for (int e = 0; e < g.edge_count(); ++e)
        if (bits >> e & 1) {
            auto [u, v] = g.endpoints(e);
            ++deg[u];
            ++deg[v];
            ++edges;
        }
    if (edges < 3) return false;
    int support = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] == 0) continue;
        if (deg[v] != 2) return false;
        ++support;
    }
    if (support != edges) return false;
    // connectivity over the chosen edges
    int start = -1;
    for (int e = 0; e < g.edge_count(); ++e)
        if (bits >> e & 1) {
            start = g.endpoints(e).first;
            break;
        }
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (const auto& inc : g.incident(v))
            if ((bits >> inc.edge & 1) && !seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++reached;
                stack.push_back(inc.neighbor);
            }
    }
    return reached == support;
}

inline bool subset_alternates(const Graph& g, const std::vector<int>& matching, std::uint64_t bits) {
    // even cycle, every cycle vertex incident to exactly one matched cycle edge
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> mdeg(static_cast<size_t>(g.vertex_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e)
        if (bits >> e & 1) {
            auto [u, v] = g.endpoints(e);
            ++deg[u];
            ++deg[v];
            if (std::binary_search(matching.begin(), matching.end(), e)) {
                ++mdeg[u];
                ++mdeg[v];
            }
        }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (deg[v] == 2 && mdeg[v] != 1) return false;
    return true;
}

inline std::vector<std::vector<int>> oracle_alternating_cycles(const Graph& g,
                                                               const std::vector<int>& matching) {
    std::vector<std::vector<int>> out;
    const int m = g.edge_count();
    for (std::uint64_t bits = 0; bits < (1ull << m); ++bits)
        if (subset_is_cycle(g, bits) && subset_alternates(g, matching, bits))
            out.push_back(bits_to_ids(bits));
    std::sort(out.begin(), out.end());
    return out;
}

// Minimum hitting set over the explicit alternating-cycle family, hitting
// each cycle on an edge outside the matching. Independent dual route to the
// solver's unique-matching-counting branch and bound.
inline int oracle_anti_forcing(const Graph& g, const std::vector<int>& matching) {
    auto cycles = oracle_alternating_cycles(g, matching);
    std::vector<std::uint64_t> targets;
    for (const auto& c : cycles) {
        std::uint64_t bits = 0;
        for (int e : c)
            if (!std::binary_search(matching.begin(), matching.end(), e)) bits |= 1ull << e;
        targets.push_back(bits);
    }
    std::vector<int> candidates;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!std::binary_search(matching.begin(), matching.end(), e)) candidates.push_back(e);

    const int k_max = static_cast<int>(candidates.size());
    for (int k = 0; k <= k_max; ++k) {
        std::vector<int> pick(static_cast<size_t>(k));
        // iterate k-combinations of candidates
        std::vector<int> idx(static_cast<size_t>(k));
        for (int i = 0; i < k; ++i) idx[i] = i;
        while (true) {
            std::uint64_t set = 0;
            for (int i = 0; i < k; ++i) set |= 1ull << candidates[idx[i]];
            bool hits_all = true;
            for (std::uint64_t t : targets)
                if (!(t & set)) {
                    hits_all = false;
                    break;
                }
            if (hits_all) return k;
            int pos = k - 1;
            while (pos >= 0 && idx[pos] == k_max - k + pos) --pos;
            if (pos < 0) break;
            ++idx[pos];
            for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
        }
        if (k == 0 && targets.empty()) return 0;
    }
    return -1; // unreachable: removing all non-matching edges always works
}

// Deterministic cross-platform generator for property tests (SplitMix64).
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    // unbiased via rejection
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

} // namespace afkit::test
