#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "afkit/graph.hpp"
#include "afkit/resonance.hpp"
#include "afkit/solver.hpp"

namespace afkit {

/// Even polygonal chain: face lengths L_1..L_n (even, >= 4) plus one gluing
/// offset per internal face. offsets[i] belongs to face i+1 (0-based); it
/// counts the path edges strictly between that face's entry and exit edges on
/// the side where the realization walk starts.
struct ChainSpec {
    std::vector<int> lengths;
    std::vector<int> offsets;

    int face_count() const { return static_cast<int>(lengths.size()); }
    int internal_count() const { return std::max(0, face_count() - 2); }
    int offset_of_face(int face) const { return offsets[face - 1]; }
};

/// Kink flags for internal faces: face i+1 (0-based) is a kink iff its two
/// shared edges fit into one perfect matching of the face cycle, which
/// happens exactly when offsets[i] is odd.
struct KinkFlags {
    std::vector<char> flags;

    /// Kink status by global face index; terminal faces are never kinks.
    bool is_kink(int face, int face_count) const {
        return face >= 1 && face < face_count - 1 && flags[face - 1];
    }
};

/// Inclusive face-index intervals partitioning the chain left to right.
struct SegmentDecomposition {
    std::vector<std::pair<int, int>> segments;

    int count() const { return static_cast<int>(segments.size()); }
};

/// Maximal all-kink blocks; faces consumed between blocks are in skipped.
struct BlockDecomposition {
    std::vector<std::pair<int, int>> blocks;
    std::vector<int> skipped;

    int total_faces() const {
        int total = 0;
        for (auto [a, b] : blocks) total += b - a + 1;
        return total;
    }
};

struct Realization {
    Graph graph;
    FaceSet faces;
    std::vector<int> shared_edges; // entry edge of face i+1, i = 0..n-2
};

/// Grammar: whitespace-separated tokens `L` or `L@d`; terminal faces carry no
/// offset, internal faces must.
ChainSpec parse_chain(const std::string& text);

std::string chain_to_string(const ChainSpec& spec);

KinkFlags kink_flags(const ChainSpec& spec);

Realization realize(const ChainSpec& spec);

SegmentDecomposition segment_decomposition(const ChainSpec& spec);

/// Anti-forcing number of the chain: the segment count.
int af_chain(const ChainSpec& spec);

BlockDecomposition all_kink_decomposition(const ChainSpec& spec);

/// Maximum anti-forcing number of the chain: faces covered by the blocks.
int max_af_chain(const ChainSpec& spec);

/// The integer interval [af_chain, max_af_chain].
SpectrumResult spectrum_chain(const ChainSpec& spec);

/// One anti-forcing edge per segment, in realized-graph edge ids; the union
/// is verified to leave a unique perfect matching.
std::vector<int> min_witness(const ChainSpec& spec, const Caps& caps = {});

/// Number of maximal runs of consecutive faces with no internal kink.
int maximal_linear_chain_count(const ChainSpec& spec);

/// Vertices of g surviving after deleting `removed` and then repeatedly
/// deleting both ends of every pendant edge.
std::vector<int> ominus_vertices(const Graph& g, const std::vector<int>& removed);

enum class ChainFamily {
    Hexchain,
    Polyomino,
    StraightPolyomino,
    AllkinkCatahex,
    Phenylene,
    Random,
};

ChainFamily chain_family_from_string(const std::string& name);

/// Families: hexchain (modes S/L/R -> d 2/1/3), polyomino (S -> 1, B -> 0),
/// straight-polyomino (all d = 1), allkink-catahex (all d = 1), phenylene
/// (odd n, faces 6,4,...,6; internal squares d = 1, internal hexagons by
/// modes), random (lengths from {4,6,8}, offsets uniform, SplitMix64 seeded).
ChainSpec generate(ChainFamily family, int n, const std::string& modes = "",
                   std::uint64_t seed = 0);

} // namespace afkit
