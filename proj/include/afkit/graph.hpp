#pragma once

#include <compare>
#include <optional>
#include <utility>
#include <vector>

#include "afkit/error.hpp"

namespace afkit {

/// Simple undirected graph with canonical edge identity: edge id = index into
/// the sorted (u,v) list, u < v. Immutable after construction; every operation
/// in this library is a pure function of its inputs.
class Graph {
public:
    struct Incidence {
        int neighbor;
        int edge;
    };

    Graph() = default;

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    std::pair<int, int> endpoints(int edge) const { return edges_[edge]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<Incidence>& incident(int vertex) const { return adjacency_[vertex]; }
    int degree(int vertex) const { return static_cast<int>(adjacency_[vertex].size()); }

    /// Edge id for the pair {u, v}, if present.
    std::optional<int> edge_id(int u, int v) const;

private:
    friend Graph build_graph(int, const std::vector<std::pair<int, int>>&);

    int vertex_count_ = 0;
    std::vector<std::pair<int, int>> edges_;          // sorted, u < v
    std::vector<std::vector<Incidence>> adjacency_;    // neighbors ascending
};

/// Sorted set of edge ids forming a matching of some graph.
struct Matching {
    std::vector<int> edge_ids;

    int size() const { return static_cast<int>(edge_ids.size()); }
    bool contains(int edge) const;
    auto operator<=>(const Matching&) const = default;
};

/// Sorted edge-id set of a single cycle. Relative to a matching M the edges
/// alternate in and out of M; exactly half lie in M.
struct AltCycle {
    std::vector<int> edge_ids;

    int length() const { return static_cast<int>(edge_ids.size()); }
    bool contains(int edge) const;
    auto operator<=>(const AltCycle&) const = default;
};

/// Edge classification: fixed_single (in no perfect matching), fixed_double
/// (in all), remainder grouped into connected elementary components reported
/// as vertex sets. The three classes partition E(G).
struct ComponentReport {
    std::vector<int> fixed_single;
    std::vector<int> fixed_double;
    std::vector<std::vector<int>> elementary_components;
};

/// Subgraph view: edges/vertices switched off are gone; a vertex switched off
/// does not need covering and its incident edges are unusable.
struct Mask {
    std::vector<char> edge_on;
    std::vector<char> vertex_on;

    static Mask full(const Graph& g);
    void drop_edge(int edge) { edge_on[edge] = 0; }
    void drop_vertex(const Graph& g, int vertex);
};

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs);

/// Two-coloring (0 = black, 1 = white) per connected component, BFS from the
/// lowest vertex which is colored black; absent if any odd cycle exists.
std::optional<std::vector<int>> bipartition(const Graph& g);

/// |E| - |V| + 1; rejects disconnected graphs.
int cyclomatic_number(const Graph& g);

bool is_connected(const Graph& g);

/// Component label per vertex, labels assigned in order of lowest member.
std::vector<int> connected_components(const Graph& g);

/// All perfect matchings in canonical (lexicographic edge-id set) order.
/// Enumerates per connected component and combines. Throws CapExceeded when
/// more than cap matchings exist; odd vertex count yields an empty list.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, long long cap);

long long count_perfect_matchings_upto(const Graph& g, long long limit);
long long count_perfect_matchings_upto(const Graph& g, const Mask& mask, long long limit);

/// Up to how_many perfect matchings of the masked subgraph, in deterministic
/// generation order (not necessarily canonically sorted).
std::vector<Matching> first_perfect_matchings(const Graph& g, const Mask& mask, int how_many);

bool is_perfect_matching(const Graph& g, const Matching& m);
bool is_alternating_cycle(const Graph& g, const Matching& m, const AltCycle& c);

/// True iff e lies in some perfect matching of g. Requires g to have one.
bool is_allowed_edge(const Graph& g, int edge);

ComponentReport normal_components(const Graph& g);

/// Connected, bipartite, perfectly matchable, and every edge allowed.
bool is_elementary(const Graph& g);

std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g, const Matching& m, long long cap);

/// Some M-alternating cycle of the masked subgraph, or absent if M is its
/// unique perfect matching. Deterministic: the shortest cycle (ties broken by
/// lexicographic edge set) of M Δ M' for the first enumerated M' ≠ M.
std::optional<AltCycle> find_alternating_cycle(const Graph& g, const Mask& mask, const Matching& m);

Matching symmetric_difference(const Graph& g, const Matching& m, const AltCycle& c);

/// Subgraph on the given edges; vertex_map/edge_map (new -> old) are filled
/// when non-null.
Graph induced_by_edges(const Graph& g, const std::vector<int>& edge_ids,
                       std::vector<int>* vertex_map, std::vector<int>* edge_map);

} // namespace afkit
