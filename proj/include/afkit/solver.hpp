#pragma once

#include <optional>
#include <vector>

#include "afkit/graph.hpp"

namespace afkit {

/// Enumeration guard rails. Exceeding a cap raises CapExceeded, never silent
/// truncation.
struct Caps {
    long long pm_cap = 1'000'000;
    long long cycle_cap = 100'000;
};

/// Anti-forcing number of one matching plus an optimal witness: a minimum set
/// of edges outside M whose removal leaves M as the unique perfect matching.
struct AfResult {
    int value = 0;
    std::vector<int> witness;
};

/// Pairwise compatible M-alternating cycles (shared edges all in M).
struct CompatibleSet {
    std::vector<AltCycle> cycles;

    int size() const { return static_cast<int>(cycles.size()); }
};

struct SpectrumResult {
    std::vector<int> values; // sorted, distinct
    std::optional<std::vector<std::pair<Matching, int>>> per_matching;
};

/// Ear decomposition where every stage keeps a perfect restriction of M and
/// each ear's endpoints are joined by an edge of M in the previous stage.
/// Stage 0 is the base edge; stage i adds ears[i-1] (vertex path, endpoints
/// first and last).
struct EarDecomposition {
    int base_edge = -1;
    std::vector<std::vector<int>> ears;
};

AfResult af_of_matching(const Graph& g, const Matching& m, const Caps& caps = {});

/// Maximum pairwise-compatible set of M-alternating cycles. Exact: errors out
/// if cycle enumeration trips the cap rather than returning a possibly
/// non-maximum set. Tie-break: lexicographically least cycle-index set.
CompatibleSet c_prime(const Graph& g, const Matching& m, const Caps& caps = {});

std::pair<int, Matching> min_anti_forcing(const Graph& g, const Caps& caps = {}, int jobs = 1);

/// Maximum anti-forcing number with all argmax matchings in canonical order.
std::pair<int, std::vector<Matching>> max_anti_forcing(const Graph& g, const Caps& caps = {},
                                                       int jobs = 1);

SpectrumResult spectrum_exact(const Graph& g, const Caps& caps = {}, bool want_per_matching = false,
                              int jobs = 1);

/// Edges e with G - e having a unique perfect matching.
std::vector<int> anti_forcing_edges(const Graph& g);

/// Edges contained in exactly one perfect matching.
std::vector<int> forcing_edges(const Graph& g);

/// Whether the maximum anti-forcing number attains the cyclomatic number.
bool is_extremal(const Graph& g, const Caps& caps = {});

std::optional<EarDecomposition> find_extremal_ear_decomposition(const Graph& g, const Matching& m,
                                                                const Caps& caps = {});

/// Replays an ear decomposition and checks every stage invariant.
bool check_ear_decomposition(const Graph& g, const Matching& m, const EarDecomposition& d);

/// af(G, M) vs the sum of af over the normal components of G.
bool af_additivity_check(const Graph& g, const Matching& m, const Caps& caps = {});

} // namespace afkit
