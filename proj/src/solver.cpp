#include "afkit/solver.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <queue>
#include <string>
#include <thread>

namespace afkit {

namespace {

void require_perfect(const Graph& g, const Matching& m) {
    if (!is_perfect_matching(g, m)) fail(ErrorCode::NotPerfect, "matching is not perfect on this graph");
}

void require_matchable(const Graph& g) {
    if (g.vertex_count() % 2 != 0 || count_perfect_matchings_upto(g, 1) == 0)
        fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
}

// Branch and bound for the minimum hitting set over M-alternating cycles,
// restricted to edges outside M. Feasibility and optimality rest on
// unique-matching counting (never on cycle enumeration): a partial set S is
// complete exactly when G - S has no alternating cycle left. The lower bound
// greedily packs cycles with pairwise disjoint non-M edge sets.
class HittingSetSearch {
public:
    HittingSetSearch(const Graph& g, const Matching& m) : g_(g), m_(m), mask_(Mask::full(g)) {
        excluded_.assign(static_cast<size_t>(g.edge_count()), 0);
    }

    AfResult run() {
        // greedy incumbent
        {
            Mask work = mask_;
            std::vector<int> greedy;
            while (auto cyc = find_alternating_cycle(g_, work, m_)) {
                int pick = -1;
                for (int e : cyc->edge_ids)
                    if (!m_.contains(e)) {
                        pick = e;
                        break;
                    }
                work.drop_edge(pick);
                greedy.push_back(pick);
            }
            std::sort(greedy.begin(), greedy.end());
            best_ = AfResult{static_cast<int>(greedy.size()), std::move(greedy)};
        }
        if (best_.value > 0) descend();
        return best_;
    }

private:
    void descend() {
        auto cyc = find_alternating_cycle(g_, mask_, m_);
        if (!cyc) {
            if (static_cast<int>(chosen_.size()) < best_.value) {
                std::vector<int> witness(chosen_);
                std::sort(witness.begin(), witness.end());
                best_ = AfResult{static_cast<int>(witness.size()), std::move(witness)};
            }
            return;
        }
        int lb = packing_bound(*cyc);
        if (lb < 0) return; // some surviving cycle can no longer be hit
        if (static_cast<int>(chosen_.size()) + lb >= best_.value) return;

        std::vector<int> branch;
        for (int e : cyc->edge_ids)
            if (!m_.contains(e) && !excluded_[e]) branch.push_back(e);
        for (size_t i = 0; i < branch.size(); ++i) {
            int e = branch[i];
            mask_.drop_edge(e);
            chosen_.push_back(e);
            descend();
            chosen_.pop_back();
            mask_.edge_on[e] = 1;
            excluded_[e] = 1;
        }
        for (int e : branch) excluded_[e] = 0;
    }

    // Number of alternating cycles packable with pairwise disjoint non-M edge
    // sets in G - S; -1 when a cycle has every non-M edge excluded.
    int packing_bound(const AltCycle& first) {
        Mask work = mask_;
        int packed = 0;
        std::optional<AltCycle> cyc = first;
        while (cyc) {
            bool hittable = false;
            for (int e : cyc->edge_ids)
                if (!m_.contains(e)) {
                    if (!excluded_[e]) hittable = true;
                    work.drop_edge(e);
                }
            if (!hittable) return -1;
            ++packed;
            cyc = find_alternating_cycle(g_, work, m_);
        }
        return packed;
    }

    const Graph& g_;
    const Matching& m_;
    Mask mask_;
    std::vector<char> excluded_;
    std::vector<int> chosen_;
    AfResult best_;
};

} // namespace

AfResult af_of_matching(const Graph& g, const Matching& m, const Caps&) {
    require_perfect(g, m);
    if (count_perfect_matchings_upto(g, 2) == 1) return AfResult{0, {}};

    HittingSetSearch search(g, m);
    AfResult result = search.run();

    // witness soundness: G - witness keeps M as its unique perfect matching
    Mask check = Mask::full(g);
    for (int e : result.witness) check.drop_edge(e);
    auto left = first_perfect_matchings(g, check, 2);
    if (left.size() != 1 || !(left[0] == m))
        fail(ErrorCode::VerificationFailed, "anti-forcing witness failed the uniqueness check");
    return result;
}

namespace {

bool cycles_compatible(const Matching& m, const AltCycle& a, const AltCycle& b) {
    std::vector<int> shared;
    std::set_intersection(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end(),
                          std::back_inserter(shared));
    for (int e : shared)
        if (!m.contains(e)) return false;
    return true;
}

// Maximum-clique style search on the compatibility relation; keeps the
// lexicographically least index set among maximum ones.
class CompatibleSearch {
public:
    explicit CompatibleSearch(std::vector<std::vector<char>> compat)
        : compat_(std::move(compat)) {}

    std::vector<int> run() {
        std::vector<int> all(compat_.size());
        std::iota(all.begin(), all.end(), 0);
        std::vector<int> cur;
        descend(cur, all);
        return best_;
    }

private:
    void descend(std::vector<int>& cur, const std::vector<int>& cand) {
        if (cur.size() + cand.size() < best_.size()) return;
        if (cand.empty()) {
            if (cur.size() > best_.size() || (cur.size() == best_.size() && cur < best_)) best_ = cur;
            return;
        }
        int pivot = cand[0];
        std::vector<int> rest(cand.begin() + 1, cand.end());
        std::vector<int> kept;
        for (int j : rest)
            if (compat_[pivot][j]) kept.push_back(j);
        cur.push_back(pivot);
        descend(cur, kept);
        cur.pop_back();
        descend(cur, rest);
    }

    std::vector<std::vector<char>> compat_;
    std::vector<int> best_;
};

} // namespace

CompatibleSet c_prime(const Graph& g, const Matching& m, const Caps& caps) {
    require_perfect(g, m);
    auto cycles = enumerate_alternating_cycles(g, m, caps.cycle_cap);
    const int n = static_cast<int>(cycles.size());
    std::vector<std::vector<char>> compat(static_cast<size_t>(n),
                                          std::vector<char>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            compat[i][j] = compat[j][i] = cycles_compatible(m, cycles[i], cycles[j]);

    CompatibleSearch search(std::move(compat));
    CompatibleSet out;
    for (int i : search.run()) out.cycles.push_back(cycles[i]);
    return out;
}

namespace {

template <typename F>
void parallel_for(int count, int jobs, F&& body) {
    jobs = std::min(jobs, count);
    if (jobs <= 1) {
        for (int i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<int> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                    return;
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
}

std::vector<int> af_values(const Graph& g, const std::vector<Matching>& ms, const Caps& caps,
                           int jobs) {
    std::vector<int> values(ms.size(), 0);
    parallel_for(static_cast<int>(ms.size()), jobs,
                 [&](int i) { values[i] = af_of_matching(g, ms[i], caps).value; });
    return values;
}

} // namespace

std::pair<int, Matching> min_anti_forcing(const Graph& g, const Caps& caps, int jobs) {
    auto ms = enumerate_perfect_matchings(g, caps.pm_cap);
    if (ms.empty()) fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    auto values = af_values(g, ms, caps, jobs);
    int arg = static_cast<int>(std::min_element(values.begin(), values.end()) - values.begin());
    return {values[arg], ms[arg]};
}

std::pair<int, std::vector<Matching>> max_anti_forcing(const Graph& g, const Caps& caps, int jobs) {
    auto ms = enumerate_perfect_matchings(g, caps.pm_cap);
    if (ms.empty()) fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    auto values = af_values(g, ms, caps, jobs);
    int top = *std::max_element(values.begin(), values.end());
    std::vector<Matching> argmax;
    for (size_t i = 0; i < ms.size(); ++i)
        if (values[i] == top) argmax.push_back(ms[i]);
    return {top, argmax};
}

SpectrumResult spectrum_exact(const Graph& g, const Caps& caps, bool want_per_matching, int jobs) {
    auto ms = enumerate_perfect_matchings(g, caps.pm_cap);
    if (ms.empty()) fail(ErrorCode::NoPerfectMatching, "graph has no perfect matching");
    auto values = af_values(g, ms, caps, jobs);
    SpectrumResult out;
    out.values = values;
    std::sort(out.values.begin(), out.values.end());
    out.values.erase(std::unique(out.values.begin(), out.values.end()), out.values.end());
    if (want_per_matching) {
        out.per_matching.emplace();
        for (size_t i = 0; i < ms.size(); ++i) out.per_matching->emplace_back(ms[i], values[i]);
    }
    return out;
}

std::vector<int> anti_forcing_edges(const Graph& g) {
    require_matchable(g);
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        Mask mask = Mask::full(g);
        mask.drop_edge(e);
        if (count_perfect_matchings_upto(g, mask, 2) == 1) out.push_back(e);
    }
    return out;
}

std::vector<int> forcing_edges(const Graph& g) {
    require_matchable(g);
    std::vector<int> out;
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        Mask mask = Mask::full(g);
        mask.drop_vertex(g, u);
        mask.drop_vertex(g, v);
        if (count_perfect_matchings_upto(g, mask, 2) == 1) out.push_back(e);
    }
    return out;
}

bool is_extremal(const Graph& g, const Caps& caps) {
    int r = cyclomatic_number(g); // rejects disconnected graphs
    require_matchable(g);
    return max_anti_forcing(g, caps).first == r;
}

namespace {

// Reverse ear peeling: repeatedly detach a maximal path of degree-2 vertices
// whose attachment vertices are joined by an edge of M and whose interior is
// matched within the path, keeping the rest connected; succeeds when a single
// M-alternating cycle remains.
class PeelSearch {
public:
    PeelSearch(const Graph& g, const Matching& m, long long budget)
        : g_(g), m_(m), budget_(budget) {
        alive_.assign(static_cast<size_t>(g.vertex_count()), 1);
        partner_.assign(static_cast<size_t>(g.vertex_count()), -1);
        for (int e : m.edge_ids) {
            auto [u, v] = g.endpoints(e);
            partner_[u] = v;
            partner_[v] = u;
        }
    }

    std::optional<EarDecomposition> run() {
        if (!descend()) return std::nullopt;
        // peeled_ is filled while unwinding, so it already lists ears in
        // addition order (last peel first)
        EarDecomposition d;
        d.base_edge = base_edge_;
        d.ears.push_back(base_ear_);
        d.ears.insert(d.ears.end(), peeled_.begin(), peeled_.end());
        return d;
    }

private:
    int degree(int v) const {
        int deg = 0;
        for (const auto& inc : g_.incident(v))
            if (alive_[inc.neighbor]) ++deg;
        return deg;
    }

    bool descend() {
        if (--budget_ < 0) fail(ErrorCode::CapExceeded, "ear decomposition search budget exhausted");

        std::vector<int> alive_list;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (alive_[v]) alive_list.push_back(v);

        bool all_degree_two = true;
        for (int v : alive_list)
            if (degree(v) != 2) {
                all_degree_two = false;
                break;
            }
        if (all_degree_two) return close_cycle(alive_list);

        for (const auto& run : candidate_runs(alive_list)) {
            for (size_t i = 1; i + 1 < run.size(); ++i) alive_[run[i]] = 0;
            bool ok = remains_connected() && descend();
            if (ok) {
                peeled_.push_back(run);
                return true;
            }
            for (size_t i = 1; i + 1 < run.size(); ++i) alive_[run[i]] = 1;
        }
        return false;
    }

    // Maximal alive degree-2 runs [u, x1..xk, v] with k >= 2 even, uv an
    // M-edge of the current graph, interior matched within the run.
    std::vector<std::vector<int>> candidate_runs(const std::vector<int>& alive_list) {
        std::vector<std::vector<int>> runs;
        std::vector<char> taken(static_cast<size_t>(g_.vertex_count()), 0);
        for (int x : alive_list) {
            if (taken[x] || degree(x) != 2) continue;
            std::vector<int> path{x};
            taken[x] = 1;
            for (int dir = 0; dir < 2; ++dir) {
                auto extend = [&](int vertex) {
                    if (dir == 0)
                        path.insert(path.begin(), vertex);
                    else
                        path.push_back(vertex);
                };
                int prev = x;
                int cur = neighbor_of(x, dir);
                while (alive_[cur] && degree(cur) == 2 && !taken[cur]) {
                    taken[cur] = 1;
                    extend(cur);
                    int nxt = step(cur, prev);
                    prev = cur;
                    cur = nxt;
                }
                extend(cur);
            }
            int u = path.front(), v = path.back();
            size_t inner = path.size() - 2;
            if (inner < 2 || inner % 2 != 0) continue;
            if (u == v) continue;
            auto uv = g_.edge_id(u, v);
            if (!uv || !m_.contains(*uv)) continue;
            bool matched_inside = true;
            for (size_t i = 1; i + 1 < path.size(); i += 2)
                if (partner_[path[i]] != path[i + 1]) {
                    matched_inside = false;
                    break;
                }
            if (!matched_inside) continue;
            runs.push_back(path);
        }
        std::sort(runs.begin(), runs.end());
        return runs;
    }

    int neighbor_of(int v, int which) const {
        int count = 0;
        for (const auto& inc : g_.incident(v))
            if (alive_[inc.neighbor]) {
                if (count == which) return inc.neighbor;
                ++count;
            }
        return -1;
    }

    int step(int cur, int prev) const {
        for (const auto& inc : g_.incident(cur))
            if (alive_[inc.neighbor] && inc.neighbor != prev) return inc.neighbor;
        return -1;
    }

    bool remains_connected() {
        int start = -1, alive_count = 0;
        for (int v = 0; v < g_.vertex_count(); ++v)
            if (alive_[v]) {
                if (start == -1) start = v;
                ++alive_count;
            }
        if (start == -1) return false;
        std::vector<char> seen(static_cast<size_t>(g_.vertex_count()), 0);
        std::queue<int> q;
        q.push(start);
        seen[start] = 1;
        int reached = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const auto& inc : g_.incident(v))
                if (alive_[inc.neighbor] && !seen[inc.neighbor]) {
                    seen[inc.neighbor] = 1;
                    ++reached;
                    q.push(inc.neighbor);
                }
        }
        return reached == alive_count;
    }

    // The remaining graph is 2-regular; it must be a single cycle with a
    // perfect restriction of M. Base edge: least M-edge on it.
    bool close_cycle(const std::vector<int>& alive_list) {
        if (alive_list.empty()) return false;
        if (!remains_connected()) return false;
        for (int v : alive_list)
            if (partner_[v] == -1 || !alive_[partner_[v]]) return false;
        int base = -1;
        for (int e : m_.edge_ids) {
            auto [u, v] = g_.endpoints(e);
            if (alive_[u] && alive_[v]) {
                base = e;
                break;
            }
        }
        if (base == -1) return false;
        auto [bu, bv] = g_.endpoints(base);
        // ear = the cycle minus the base edge, walked from bu away from bv
        std::vector<int> path{bu};
        int prev = bv, cur = bu;
        do {
            int nxt = step(cur, prev);
            path.push_back(nxt);
            prev = cur;
            cur = nxt;
        } while (cur != bv);
        base_edge_ = base;
        base_ear_ = path;
        return true;
    }

    const Graph& g_;
    const Matching& m_;
    std::vector<char> alive_;
    std::vector<int> partner_;
    std::vector<std::vector<int>> peeled_;
    std::vector<int> base_ear_;
    int base_edge_ = -1;
    long long budget_;
};

} // namespace

std::optional<EarDecomposition> find_extremal_ear_decomposition(const Graph& g, const Matching& m,
                                                                const Caps& caps) {
    if (!is_elementary(g)) fail(ErrorCode::NotElementary, "graph is not elementary bipartite");
    require_perfect(g, m);
    if (g.edge_count() == 1) return EarDecomposition{0, {}};
    PeelSearch search(g, m, caps.cycle_cap);
    return search.run();
}

bool check_ear_decomposition(const Graph& g, const Matching& m, const EarDecomposition& d) {
    if (d.base_edge < 0 || d.base_edge >= g.edge_count()) return false;
    if (!m.contains(d.base_edge)) return false;
    std::vector<char> in_stage(static_cast<size_t>(g.vertex_count()), 0);
    std::vector<char> edge_in_stage(static_cast<size_t>(g.edge_count()), 0);
    auto [bu, bv] = g.endpoints(d.base_edge);
    in_stage[bu] = in_stage[bv] = 1;
    edge_in_stage[d.base_edge] = 1;

    auto stage_matching_perfect = [&] {
        std::vector<int> cover(static_cast<size_t>(g.vertex_count()), 0);
        for (int e : m.edge_ids) {
            if (!edge_in_stage[e]) continue;
            auto [u, v] = g.endpoints(e);
            ++cover[u];
            ++cover[v];
        }
        for (int v = 0; v < g.vertex_count(); ++v)
            if (in_stage[v] && cover[v] != 1) return false;
        return true;
    };
    if (!stage_matching_perfect()) return false;

    for (size_t i = 0; i < d.ears.size(); ++i) {
        const auto& path = d.ears[i];
        if (path.size() < 4 || path.size() % 2 != 0) return false; // odd edge count >= 3
        int u = path.front(), v = path.back();
        if (!in_stage[u] || !in_stage[v]) return false;
        auto uv = g.edge_id(u, v);
        if (!uv || !edge_in_stage[*uv] || !m.contains(*uv)) return false;
        for (size_t j = 1; j + 1 < path.size(); ++j)
            if (in_stage[path[j]]) return false;
        for (size_t j = 0; j + 1 < path.size(); ++j) {
            auto e = g.edge_id(path[j], path[j + 1]);
            if (!e) return false;
            edge_in_stage[*e] = 1;
        }
        for (size_t j = 1; j + 1 < path.size(); ++j) in_stage[path[j]] = 1;
        if (!stage_matching_perfect()) return false;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (!in_stage[v]) return false;
    for (int e = 0; e < g.edge_count(); ++e)
        if (!edge_in_stage[e]) return false;
    return true;
}

bool af_additivity_check(const Graph& g, const Matching& m, const Caps& caps) {
    if (!bipartition(g)) fail(ErrorCode::NotBipartite, "additivity check needs a bipartite graph");
    require_perfect(g, m);
    int direct = af_of_matching(g, m, caps).value;

    auto report = normal_components(g);
    std::vector<char> fixed(static_cast<size_t>(g.edge_count()), 0);
    for (int e : report.fixed_single) fixed[e] = 1;
    for (int e : report.fixed_double) fixed[e] = 1;

    int sum = 0;
    for (const auto& comp : report.elementary_components) {
        std::vector<char> in_comp(static_cast<size_t>(g.vertex_count()), 0);
        for (int v : comp) in_comp[v] = 1;
        std::vector<int> comp_edges;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (!fixed[e] && in_comp[u] && in_comp[v]) comp_edges.push_back(e);
        }
        std::vector<int> vmap, emap;
        Graph sub = induced_by_edges(g, comp_edges, &vmap, &emap);
        std::vector<int> restricted;
        for (int e = 0; e < sub.edge_count(); ++e)
            if (m.contains(emap[e])) restricted.push_back(e);
        sum += af_of_matching(sub, Matching{restricted}, caps).value;
    }
    return direct == sum;
}

} // namespace afkit
