#pragma once

#include <optional>
#include <vector>

#include "afkit/graph.hpp"
#include "afkit/solver.hpp"

namespace afkit {

/// Explicit plane structure: interior face boundaries plus an optional
/// exterior boundary, stored as canonical edge sets (vertex-cyclic input is
/// converted on construction).
struct FaceSet {
    std::vector<AltCycle> interior;
    std::vector<std::vector<int>> interior_vertices;
    std::optional<AltCycle> exterior;
    std::optional<std::vector<int>> exterior_vertices;

    int interior_count() const { return static_cast<int>(interior.size()); }
    /// Face index used for the exterior in resonance reports.
    int exterior_face_index() const { return interior_count(); }
};

/// Validates each face as a cycle of g; duplicate interior faces rejected
/// (the exterior may coincide with an interior face, e.g. a single cycle).
FaceSet make_face_set(const Graph& g, const std::vector<std::vector<int>>& face_vertex_cycles,
                      std::optional<int> exterior_index);

/// Matchings as nodes, linked when their symmetric difference is the boundary
/// of one interior face.
struct ZGraph {
    std::vector<Matching> nodes;
    std::vector<std::pair<int, int>> links;
};

/// Indices of faces whose boundary is M-alternating; the exterior (index
/// interior_count) only when include_exterior is set and present.
std::vector<int> resonant_faces(const Graph& g, const FaceSet& faces, const Matching& m,
                                bool include_exterior = false);

ZGraph z_graph(const Graph& g, const FaceSet& faces, const Caps& caps = {});

bool z_connected(const ZGraph& z);

/// Longest common subpath (in edges) of two cycles of g; 0 when
/// edge-disjoint, the full length for identical cycles.
int common_path_length(const Graph& g, const AltCycle& a, const AltCycle& b);

/// Whether some perfect matching has exactly two resonant faces whose
/// boundaries share a common path of length >= 3. The exterior face counts by
/// default; include_exterior = false restricts to interior faces.
bool has_antiforcing_edge_characterization(const Graph& g, const FaceSet& faces,
                                           const Caps& caps = {}, bool include_exterior = true);

/// Whether some perfect matching has exactly two resonant faces (exterior
/// counted) with intersecting boundaries. Requires the exterior boundary.
bool has_forcing_edge_characterization(const Graph& g, const FaceSet& faces, const Caps& caps = {});

} // namespace afkit
