#include "afkit/resonance.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <functional>
#include <string>

namespace afkit {

namespace {

AltCycle face_to_edges(const Graph& g, const std::vector<int>& cycle, int face_number) {
    auto at = "face " + std::to_string(face_number);
    if (cycle.size() < 3) fail(ErrorCode::BadFaceSet, at + ": fewer than 3 vertices");
    std::set<int> distinct(cycle.begin(), cycle.end());
    if (distinct.size() != cycle.size()) fail(ErrorCode::BadFaceSet, at + ": repeated vertex");
    std::vector<int> ids;
    for (size_t i = 0; i < cycle.size(); ++i) {
        int u = cycle[i];
        int v = cycle[(i + 1) % cycle.size()];
        if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
            fail(ErrorCode::BadFaceSet, at + ": vertex out of range");
        auto e = g.edge_id(u, v);
        if (!e)
            fail(ErrorCode::BadFaceSet, at + ": (" + std::to_string(u) + "," + std::to_string(v) +
                                            ") is not an edge");
        ids.push_back(*e);
    }
    std::sort(ids.begin(), ids.end());
    return AltCycle{ids};
}

bool face_resonant(const AltCycle& boundary, const Matching& m) {
    int in_m = 0;
    for (int e : boundary.edge_ids)
        if (m.contains(e)) ++in_m;
    return in_m * 2 == boundary.length();
}

} // namespace

FaceSet make_face_set(const Graph& g, const std::vector<std::vector<int>>& face_vertex_cycles,
                      std::optional<int> exterior_index) {
    FaceSet fs;
    for (int i = 0; i < static_cast<int>(face_vertex_cycles.size()); ++i) {
        AltCycle boundary = face_to_edges(g, face_vertex_cycles[i], i);
        if (exterior_index && *exterior_index == i) {
            if (fs.exterior) fail(ErrorCode::BadFaceSet, "two exterior faces");
            fs.exterior = std::move(boundary);
            fs.exterior_vertices = face_vertex_cycles[i];
        } else {
            for (const auto& seen : fs.interior)
                if (seen == boundary) fail(ErrorCode::BadFaceSet, "duplicate interior face");
            fs.interior.push_back(std::move(boundary));
            fs.interior_vertices.push_back(face_vertex_cycles[i]);
        }
    }
    return fs;
}

std::vector<int> resonant_faces(const Graph& g, const FaceSet& faces, const Matching& m,
                                bool include_exterior) {
    if (!is_perfect_matching(g, m)) fail(ErrorCode::NotPerfect, "matching is not perfect on this graph");
    std::vector<int> out;
    for (int i = 0; i < faces.interior_count(); ++i)
        if (face_resonant(faces.interior[i], m)) out.push_back(i);
    if (include_exterior && faces.exterior && face_resonant(*faces.exterior, m))
        out.push_back(faces.exterior_face_index());
    return out;
}

ZGraph z_graph(const Graph& g, const FaceSet& faces, const Caps& caps) {
    ZGraph z;
    z.nodes = enumerate_perfect_matchings(g, caps.pm_cap);
    std::set<std::vector<int>> boundaries;
    for (const auto& f : faces.interior) boundaries.insert(f.edge_ids);
    for (int i = 0; i < static_cast<int>(z.nodes.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(z.nodes.size()); ++j) {
            std::vector<int> diff;
            std::set_symmetric_difference(z.nodes[i].edge_ids.begin(), z.nodes[i].edge_ids.end(),
                                          z.nodes[j].edge_ids.begin(), z.nodes[j].edge_ids.end(),
                                          std::back_inserter(diff));
            if (boundaries.count(diff)) z.links.emplace_back(i, j);
        }
    return z;
}

bool z_connected(const ZGraph& z) {
    const int n = static_cast<int>(z.nodes.size());
    if (n <= 1) return true;
    std::vector<std::vector<int>> adj(static_cast<size_t>(n));
    for (auto [i, j] : z.links) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    return reached == n;
}

int common_path_length(const Graph& g, const AltCycle& a, const AltCycle& b) {
    if (a == b) return a.length();
    std::vector<int> shared;
    std::set_intersection(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(), b.edge_ids.end(),
                          std::back_inserter(shared));
    if (shared.empty()) return 0;
    // Shared edges meeting at a vertex are consecutive in both cycles, so
    // each vertex-connected group is a common subpath; report the largest.
    std::vector<int> group(shared.size());
    for (size_t i = 0; i < shared.size(); ++i) group[i] = static_cast<int>(i);
    std::function<int(int)> root = [&](int i) { return group[i] == i ? i : group[i] = root(group[i]); };
    std::map<int, int> edge_at_vertex;
    for (size_t i = 0; i < shared.size(); ++i) {
        auto [u, v] = g.endpoints(shared[i]);
        for (int vertex : {u, v}) {
            auto [it, fresh] = edge_at_vertex.emplace(vertex, static_cast<int>(i));
            if (!fresh) group[root(it->second)] = root(static_cast<int>(i));
        }
    }
    std::map<int, int> sizes;
    int best = 0;
    for (size_t i = 0; i < shared.size(); ++i) best = std::max(best, ++sizes[root(static_cast<int>(i))]);
    return best;
}

bool has_antiforcing_edge_characterization(const Graph& g, const FaceSet& faces, const Caps& caps,
                                           bool include_exterior) {
    if (!is_elementary(g)) fail(ErrorCode::NotElementary, "graph is not elementary bipartite");
    auto ms = enumerate_perfect_matchings(g, caps.pm_cap);
    for (const auto& m : ms) {
        auto res = resonant_faces(g, faces, m, include_exterior);
        if (res.size() != 2) continue;
        auto boundary = [&](int idx) -> const AltCycle& {
            return idx == faces.exterior_face_index() ? *faces.exterior : faces.interior[idx];
        };
        if (common_path_length(g, boundary(res[0]), boundary(res[1])) >= 3) return true;
    }
    return false;
}

bool has_forcing_edge_characterization(const Graph& g, const FaceSet& faces, const Caps& caps) {
    if (!is_elementary(g)) fail(ErrorCode::NotElementary, "graph is not elementary bipartite");
    if (!faces.exterior) fail(ErrorCode::BadFaceSet, "exterior boundary required");
    auto ms = enumerate_perfect_matchings(g, caps.pm_cap);
    for (const auto& m : ms) {
        auto res = resonant_faces(g, faces, m, true);
        if (res.size() != 2) continue;
        auto boundary = [&](int idx) -> const AltCycle& {
            return idx == faces.exterior_face_index() ? *faces.exterior : faces.interior[idx];
        };
        std::vector<int> shared;
        const auto& a = boundary(res[0]);
        const auto& b = boundary(res[1]);
        std::set_intersection(a.edge_ids.begin(), a.edge_ids.end(), b.edge_ids.begin(),
                              b.edge_ids.end(), std::back_inserter(shared));
        if (!shared.empty()) return true;
    }
    return false;
}

} // namespace afkit
