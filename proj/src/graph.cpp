#include "afkit/graph.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <string>

namespace afkit {

std::optional<int> Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
    if (it == edges_.end() || *it != std::make_pair(u, v)) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

bool Matching::contains(int edge) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), edge);
}

bool AltCycle::contains(int edge) const {
    return std::binary_search(edge_ids.begin(), edge_ids.end(), edge);
}

Mask Mask::full(const Graph& g) {
    Mask m;
    m.edge_on.assign(static_cast<size_t>(g.edge_count()), 1);
    m.vertex_on.assign(static_cast<size_t>(g.vertex_count()), 1);
    return m;
}

void Mask::drop_vertex(const Graph& g, int vertex) {
    vertex_on[vertex] = 0;
    for (const auto& inc : g.incident(vertex)) edge_on[inc.edge] = 0;
}

Graph build_graph(int vertex_count, const std::vector<std::pair<int, int>>& edge_pairs) {
    if (vertex_count < 0) fail(ErrorCode::BadVertex, "negative vertex count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
            fail(ErrorCode::BadVertex,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") out of range");
        if (u == v) fail(ErrorCode::LoopEdge, "self-loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        edges.emplace_back(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        fail(ErrorCode::DuplicateEdge,
             "edge (" + std::to_string(dup->first) + "," + std::to_string(dup->second) + ") repeated");

    Graph g;
    g.vertex_count_ = vertex_count;
    g.edges_ = std::move(edges);
    g.adjacency_.assign(static_cast<size_t>(vertex_count), {});
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges_[e];
        g.adjacency_[u].push_back({v, e});
        g.adjacency_[v].push_back({u, e});
    }
    for (auto& inc : g.adjacency_)
        std::sort(inc.begin(), inc.end(),
                  [](const Graph::Incidence& a, const Graph::Incidence& b) {
                      return a.neighbor < b.neighbor;
                  });
    return g;
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> color(static_cast<size_t>(g.vertex_count()), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& inc : g.incident(v)) {
                if (color[inc.neighbor] == -1) {
                    color[inc.neighbor] = 1 - color[v];
                    q.push(inc.neighbor);
                } else if (color[inc.neighbor] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

std::vector<int> connected_components(const Graph& g) {
    std::vector<int> label(static_cast<size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int start = 0; start < g.vertex_count(); ++start) {
        if (label[start] != -1) continue;
        label[start] = next;
        std::queue<int> q;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& inc : g.incident(v))
                if (label[inc.neighbor] == -1) {
                    label[inc.neighbor] = next;
                    q.push(inc.neighbor);
                }
        }
        ++next;
    }
    return label;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() <= 1) return true;
    auto label = connected_components(g);
    return std::all_of(label.begin(), label.end(), [](int l) { return l == 0; });
}

int cyclomatic_number(const Graph& g) {
    if (!is_connected(g)) fail(ErrorCode::Disconnected, "cyclomatic number needs a connected graph");
    return g.edge_count() - g.vertex_count() + 1;
}

namespace {

// Backtracking perfect-matching engine over a masked subgraph. Covered
// vertices are those already matched or switched off. For counting, branches
// on a minimum-available-degree vertex with degree-1 propagation; for
// generation, branches on the lowest uncovered vertex so the emission order
// is deterministic.
class PmEngine {
public:
    PmEngine(const Graph& g, const Mask& mask) : g_(g), mask_(mask) {
        covered_.assign(static_cast<size_t>(g.vertex_count()), 0);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (!mask.vertex_on[v]) covered_[v] = 1;
    }

    long long count_upto(long long limit) {
        if (limit <= 0) return 0;
        return count_rec(limit);
    }

    // visit(sorted edge ids) -> keep going?
    template <typename Visit>
    void generate(Visit&& visit) {
        stop_ = false;
        chosen_.clear();
        gen_rec(visit);
    }

private:
    long long count_rec(long long limit) {
        std::vector<int> trail;
        auto undo = [&] {
            for (int v : trail) covered_[v] = 0;
        };
        while (true) {
            int best_v = -1, best_deg = 0, partner = -1;
            for (int v = 0; v < g_.vertex_count(); ++v) {
                if (covered_[v]) continue;
                int deg = 0, last = -1;
                for (const auto& inc : g_.incident(v))
                    if (mask_.edge_on[inc.edge] && !covered_[inc.neighbor]) {
                        ++deg;
                        last = inc.neighbor;
                    }
                if (deg == 0) {
                    undo();
                    return 0;
                }
                if (best_v == -1 || deg < best_deg) {
                    best_v = v;
                    best_deg = deg;
                    partner = last;
                    if (deg == 1) break;
                }
            }
            if (best_v == -1) {
                undo();
                return 1;
            }
            if (best_deg == 1) {
                covered_[best_v] = covered_[partner] = 1;
                trail.push_back(best_v);
                trail.push_back(partner);
                continue;
            }
            long long total = 0;
            for (const auto& inc : g_.incident(best_v)) {
                if (!mask_.edge_on[inc.edge] || covered_[inc.neighbor]) continue;
                covered_[best_v] = covered_[inc.neighbor] = 1;
                total += count_rec(limit - total);
                covered_[best_v] = covered_[inc.neighbor] = 0;
                if (total >= limit) break;
            }
            undo();
            return total;
        }
    }

    template <typename Visit>
    void gen_rec(Visit&& visit) {
        if (stop_) return;
        int v = -1;
        for (int i = 0; i < g_.vertex_count(); ++i)
            if (!covered_[i]) {
                v = i;
                break;
            }
        if (v == -1) {
            std::vector<int> ids(chosen_);
            std::sort(ids.begin(), ids.end());
            if (!visit(ids)) stop_ = true;
            return;
        }
        for (const auto& inc : g_.incident(v)) {
            if (!mask_.edge_on[inc.edge] || covered_[inc.neighbor]) continue;
            covered_[v] = covered_[inc.neighbor] = 1;
            chosen_.push_back(inc.edge);
            gen_rec(visit);
            chosen_.pop_back();
            covered_[v] = covered_[inc.neighbor] = 0;
            if (stop_) return;
        }
    }

    const Graph& g_;
    const Mask& mask_;
    std::vector<char> covered_;
    std::vector<int> chosen_;
    bool stop_ = false;
};

} // namespace

long long count_perfect_matchings_upto(const Graph& g, const Mask& mask, long long limit) {
    PmEngine engine(g, mask);
    return engine.count_upto(limit);
}

long long count_perfect_matchings_upto(const Graph& g, long long limit) {
    Mask mask = Mask::full(g);
    return count_perfect_matchings_upto(g, mask, limit);
}

std::vector<Matching> first_perfect_matchings(const Graph& g, const Mask& mask, int how_many) {
    std::vector<Matching> out;
    if (how_many <= 0) return out;
    PmEngine engine(g, mask);
    engine.generate([&](const std::vector<int>& ids) {
        out.push_back(Matching{ids});
        return static_cast<int>(out.size()) < how_many;
    });
    return out;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, long long cap) {
    if (cap < 1) fail(ErrorCode::CapExceeded, "cap must be at least 1");
    if (g.vertex_count() % 2 != 0) return {};

    auto label = connected_components(g);
    int parts = label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    if (parts == 0) return {{Matching{}}};

    // Count per component first so the cap check never materializes anything.
    std::vector<Mask> masks;
    masks.reserve(static_cast<size_t>(parts));
    long long total = 1;
    for (int c = 0; c < parts; ++c) {
        Mask mask = Mask::full(g);
        for (int v = 0; v < g.vertex_count(); ++v)
            if (label[v] != c) mask.drop_vertex(g, v);
        long long n = count_perfect_matchings_upto(g, mask, cap + 1);
        if (n == 0) return {};
        if (total > cap / n)
            fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " perfect matchings");
        total *= n;
        masks.push_back(std::move(mask));
    }

    std::vector<Matching> combined{Matching{}};
    for (const auto& mask : masks) {
        std::vector<Matching> part;
        PmEngine engine(g, mask);
        engine.generate([&](const std::vector<int>& ids) {
            part.push_back(Matching{ids});
            return true;
        });
        std::vector<Matching> next;
        next.reserve(combined.size() * part.size());
        for (const auto& base : combined)
            for (const auto& extra : part) {
                Matching m = base;
                m.edge_ids.insert(m.edge_ids.end(), extra.edge_ids.begin(), extra.edge_ids.end());
                next.push_back(std::move(m));
            }
        combined = std::move(next);
    }
    for (auto& m : combined) std::sort(m.edge_ids.begin(), m.edge_ids.end());
    std::sort(combined.begin(), combined.end());
    return combined;
}

bool is_perfect_matching(const Graph& g, const Matching& m) {
    std::vector<char> covered(static_cast<size_t>(g.vertex_count()), 0);
    for (int e : m.edge_ids) {
        if (e < 0 || e >= g.edge_count()) return false;
        auto [u, v] = g.endpoints(e);
        if (covered[u] || covered[v]) return false;
        covered[u] = covered[v] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

bool is_alternating_cycle(const Graph& g, const Matching& m, const AltCycle& c) {
    if (c.length() < 4 || c.length() % 2 != 0) return false;
    if (!std::is_sorted(c.edge_ids.begin(), c.edge_ids.end())) return false;
    // 2-regular on its support
    std::vector<int> deg(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<int> matched_deg(static_cast<size_t>(g.vertex_count()), 0);
    int in_m = 0;
    for (int e : c.edge_ids) {
        if (e < 0 || e >= g.edge_count()) return false;
        auto [u, v] = g.endpoints(e);
        ++deg[u];
        ++deg[v];
        if (m.contains(e)) {
            ++in_m;
            ++matched_deg[u];
            ++matched_deg[v];
        }
    }
    if (in_m * 2 != c.length()) return false;
    int support = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (deg[v] == 0) continue;
        if (deg[v] != 2) return false;
        if (matched_deg[v] != 1) return false; // alternation at every cycle vertex
        ++support;
    }
    if (support != c.length()) return false;
    // connectivity of the cycle subgraph
    std::vector<char> seen_edge(static_cast<size_t>(g.edge_count()), 0);
    for (int e : c.edge_ids) seen_edge[e] = 1;
    auto [su, sv] = g.endpoints(c.edge_ids[0]);
    std::vector<char> seen(static_cast<size_t>(g.vertex_count()), 0);
    std::queue<int> q;
    q.push(su);
    seen[su] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (const auto& inc : g.incident(v))
            if (seen_edge[inc.edge] && !seen[inc.neighbor]) {
                seen[inc.neighbor] = 1;
                ++reached;
                q.push(inc.neighbor);
            }
    }
    (void)sv;
    return reached == support;
}

bool is_allowed_edge(const Graph& g, int edge) {
    if (count_perfect_matchings_upto(g, 1) == 0)
        fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    Mask mask = Mask::full(g);
    auto [u, v] = g.endpoints(edge);
    mask.drop_vertex(g, u);
    mask.drop_vertex(g, v);
    return count_perfect_matchings_upto(g, mask, 1) > 0;
}

ComponentReport normal_components(const Graph& g) {
    if (count_perfect_matchings_upto(g, 1) == 0)
        fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    ComponentReport report;
    std::vector<char> non_fixed(static_cast<size_t>(g.edge_count()), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        Mask allow = Mask::full(g);
        allow.drop_vertex(g, u);
        allow.drop_vertex(g, v);
        bool allowed = count_perfect_matchings_upto(g, allow, 1) > 0;
        if (!allowed) {
            report.fixed_single.push_back(e);
            continue;
        }
        Mask avoid = Mask::full(g);
        avoid.drop_edge(e);
        bool avoidable = count_perfect_matchings_upto(g, avoid, 1) > 0;
        if (!avoidable)
            report.fixed_double.push_back(e);
        else
            non_fixed[e] = 1;
    }
    // components of the non-fixed subgraph
    std::vector<int> comp(static_cast<size_t>(g.vertex_count()), -1);
    for (int start = 0; start < g.vertex_count(); ++start) {
        bool touches = false;
        for (const auto& inc : g.incident(start))
            if (non_fixed[inc.edge]) touches = true;
        if (!touches || comp[start] != -1) continue;
        std::vector<int> members;
        std::queue<int> q;
        comp[start] = start;
        q.push(start);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            members.push_back(v);
            for (const auto& inc : g.incident(v))
                if (non_fixed[inc.edge] && comp[inc.neighbor] == -1) {
                    comp[inc.neighbor] = start;
                    q.push(inc.neighbor);
                }
        }
        std::sort(members.begin(), members.end());
        report.elementary_components.push_back(std::move(members));
    }
    return report;
}

bool is_elementary(const Graph& g) {
    if (!is_connected(g)) return false;
    if (!bipartition(g)) return false;
    if (count_perfect_matchings_upto(g, 1) == 0) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!is_allowed_edge(g, e)) return false;
    return true;
}

namespace {

// DFS for alternating cycles: start at each matched edge (a,b) with the
// constraint that it is the minimum matched edge id on the cycle, walk from b
// alternating unmatched/matched, record when an unmatched edge closes back to
// a. Each cycle is reached by exactly one (start edge, direction) pair.
class AltCycleEnum {
public:
    AltCycleEnum(const Graph& g, const Matching& m) : g_(g), m_(m) {
        partner_.assign(static_cast<size_t>(g.vertex_count()), -1);
        partner_edge_.assign(static_cast<size_t>(g.vertex_count()), -1);
        for (int e : m.edge_ids) {
            auto [u, v] = g.endpoints(e);
            partner_[u] = v;
            partner_[v] = u;
            partner_edge_[u] = e;
            partner_edge_[v] = e;
        }
    }

    // visit(sorted edge ids) -> keep going?
    template <typename Visit>
    void run(Visit&& visit) {
        stop_ = false;
        visited_.assign(static_cast<size_t>(g_.vertex_count()), 0);
        for (int e : m_.edge_ids) {
            start_edge_ = e;
            auto [a, b] = g_.endpoints(e);
            anchor_ = a;
            visited_[a] = visited_[b] = 1;
            path_.assign(1, e);
            walk_unmatched(b, visit);
            visited_[a] = visited_[b] = 0;
            if (stop_) return;
        }
    }

private:
    template <typename Visit>
    void walk_unmatched(int at, Visit&& visit) {
        for (const auto& inc : g_.incident(at)) {
            if (stop_) return;
            if (inc.edge == partner_edge_[at]) continue; // matched edge of `at`
            if (m_.contains(inc.edge)) continue;
            if (inc.neighbor == anchor_) {
                path_.push_back(inc.edge);
                std::vector<int> ids(path_);
                std::sort(ids.begin(), ids.end());
                if (!visit(ids)) stop_ = true;
                path_.pop_back();
                continue;
            }
            if (visited_[inc.neighbor]) continue;
            int next = partner_[inc.neighbor];
            int next_edge = partner_edge_[inc.neighbor];
            if (next_edge < start_edge_) continue; // canonical start only
            if (visited_[next]) continue;          // anchor is matched by start edge
            visited_[inc.neighbor] = visited_[next] = 1;
            path_.push_back(inc.edge);
            path_.push_back(next_edge);
            walk_unmatched(next, visit);
            path_.pop_back();
            path_.pop_back();
            visited_[inc.neighbor] = visited_[next] = 0;
        }
    }

    const Graph& g_;
    const Matching& m_;
    std::vector<int> partner_;
    std::vector<int> partner_edge_;
    std::vector<char> visited_;
    std::vector<int> path_;
    int start_edge_ = -1;
    int anchor_ = -1;
    bool stop_ = false;
};

} // namespace

std::vector<AltCycle> enumerate_alternating_cycles(const Graph& g, const Matching& m, long long cap) {
    if (!is_perfect_matching(g, m)) fail(ErrorCode::NotPerfect, "matching is not perfect on this graph");
    if (cap < 1) fail(ErrorCode::CapExceeded, "cap must be at least 1");
    std::vector<AltCycle> out;
    bool exceeded = false;
    AltCycleEnum en(g, m);
    en.run([&](const std::vector<int>& ids) {
        if (static_cast<long long>(out.size()) >= cap) {
            exceeded = true;
            return false;
        }
        out.push_back(AltCycle{ids});
        return true;
    });
    if (exceeded) fail(ErrorCode::CapExceeded, "more than " + std::to_string(cap) + " alternating cycles");
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<AltCycle> find_alternating_cycle(const Graph& g, const Mask& mask, const Matching& m) {
    auto found = first_perfect_matchings(g, mask, 2);
    if (found.size() < 2) return std::nullopt;
    const Matching& other = (found[0] == m) ? found[1] : found[0];

    std::vector<int> diff;
    std::set_symmetric_difference(m.edge_ids.begin(), m.edge_ids.end(), other.edge_ids.begin(),
                                  other.edge_ids.end(), std::back_inserter(diff));
    // The difference is a disjoint union of even M-alternating cycles; walk them.
    std::vector<int> next_at(static_cast<size_t>(g.vertex_count()) * 2, -1); // two slots per vertex
    auto slot = [&](int v) -> int {
        return next_at[2 * v] == -1 ? 2 * v : 2 * v + 1;
    };
    for (int e : diff) {
        auto [u, v] = g.endpoints(e);
        next_at[slot(u)] = e;
        next_at[slot(v)] = e;
    }
    std::vector<char> used(static_cast<size_t>(g.edge_count()), 0);
    std::optional<AltCycle> best;
    for (int e0 : diff) {
        if (used[e0]) continue;
        std::vector<int> cycle;
        int cur_edge = e0;
        int cur_vertex = g.endpoints(e0).first;
        while (true) {
            used[cur_edge] = 1;
            cycle.push_back(cur_edge);
            auto [a, b] = g.endpoints(cur_edge);
            int nxt = (a == cur_vertex) ? b : a;
            int e1 = next_at[2 * nxt];
            int e2 = next_at[2 * nxt + 1];
            int step = (e1 == cur_edge) ? e2 : e1;
            if (step == -1 || used[step]) break;
            cur_edge = step;
            cur_vertex = nxt;
        }
        std::sort(cycle.begin(), cycle.end());
        AltCycle c{cycle};
        if (!best || c.length() < best->length() ||
            (c.length() == best->length() && c.edge_ids < best->edge_ids))
            best = std::move(c);
    }
    return best;
}

Matching symmetric_difference(const Graph& g, const Matching& m, const AltCycle& c) {
    if (!is_alternating_cycle(g, m, c))
        fail(ErrorCode::NotAlternating, "cycle is not alternating for this matching");
    std::vector<int> out;
    std::set_symmetric_difference(m.edge_ids.begin(), m.edge_ids.end(), c.edge_ids.begin(),
                                  c.edge_ids.end(), std::back_inserter(out));
    return Matching{out};
}

Graph induced_by_edges(const Graph& g, const std::vector<int>& edge_ids,
                       std::vector<int>* vertex_map, std::vector<int>* edge_map) {
    std::vector<int> verts;
    for (int e : edge_ids) {
        auto [u, v] = g.endpoints(e);
        verts.push_back(u);
        verts.push_back(v);
    }
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    std::vector<int> to_new(static_cast<size_t>(g.vertex_count()), -1);
    for (int i = 0; i < static_cast<int>(verts.size()); ++i) to_new[verts[i]] = i;

    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edge_ids.size());
    for (int e : edge_ids) {
        auto [u, v] = g.endpoints(e);
        pairs.emplace_back(to_new[u], to_new[v]);
    }
    Graph sub = build_graph(static_cast<int>(verts.size()), pairs);
    if (vertex_map) *vertex_map = verts;
    if (edge_map) {
        edge_map->assign(edge_ids.size(), -1);
        for (int e = 0; e < sub.edge_count(); ++e) {
            auto [u, v] = sub.endpoints(e);
            (*edge_map)[e] = *g.edge_id(verts[u], verts[v]);
        }
    }
    return sub;
}

} // namespace afkit
