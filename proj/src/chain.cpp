#include "afkit/chain.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace afkit {

namespace {

int parse_int(const std::string& token, const std::string& where) {
    size_t pos = 0;
    int value = 0;
    try {
        value = std::stoi(token, &pos);
    } catch (const std::exception&) {
        fail(ErrorCode::SyntaxError, where + ": not a number: '" + token + "'");
    }
    if (pos != token.size()) fail(ErrorCode::SyntaxError, where + ": trailing characters in '" + token + "'");
    return value;
}

} // namespace

ChainSpec parse_chain(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> tokens;
    std::string tok;
    while (in >> tok) tokens.push_back(tok);
    if (tokens.empty()) fail(ErrorCode::SyntaxError, "empty chain spec");

    const int n = static_cast<int>(tokens.size());
    ChainSpec spec;
    for (int i = 0; i < n; ++i) {
        const std::string& t = tokens[i];
        auto where = "token " + std::to_string(i + 1);
        auto at = t.find('@');
        bool internal = (i > 0 && i < n - 1);
        if (!internal && at != std::string::npos)
            fail(ErrorCode::UnexpectedOffset, where + ": terminal face must not carry an offset");
        if (internal && at == std::string::npos)
            fail(ErrorCode::MissingOffset, where + ": internal face needs an offset");

        int length = parse_int(at == std::string::npos ? t : t.substr(0, at), where);
        if (length % 2 != 0) fail(ErrorCode::OddLength, where + ": face length " + std::to_string(length));
        if (length < 4) fail(ErrorCode::SyntaxError, where + ": face length must be at least 4");
        spec.lengths.push_back(length);

        if (internal) {
            int offset = parse_int(t.substr(at + 1), where);
            if (offset < 0 || offset > length - 2)
                fail(ErrorCode::OffsetOutOfRange, where + ": offset " + std::to_string(offset) +
                                                      " not in [0, " + std::to_string(length - 2) + "]");
            spec.offsets.push_back(offset);
        }
    }
    return spec;
}

std::string chain_to_string(const ChainSpec& spec) {
    std::ostringstream out;
    const int n = spec.face_count();
    for (int i = 0; i < n; ++i) {
        if (i) out << ' ';
        out << spec.lengths[i];
        if (i > 0 && i < n - 1) out << '@' << spec.offset_of_face(i);
    }
    return out.str();
}

KinkFlags kink_flags(const ChainSpec& spec) {
    KinkFlags kf;
    for (int d : spec.offsets) kf.flags.push_back(d % 2 != 0);
    return kf;
}

Realization realize(const ChainSpec& spec) {
    const int n = spec.face_count();
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> face_cycles;
    std::vector<std::pair<int, int>> shared_pairs;

    const int first_len = spec.lengths[0];
    std::vector<int> first_cycle(static_cast<size_t>(first_len));
    std::iota(first_cycle.begin(), first_cycle.end(), 0);
    for (int i = 0; i < first_len; ++i) pairs.emplace_back(i, (i + 1) % first_len);
    face_cycles.push_back(first_cycle);

    int next_vertex = first_len;
    int exit_u = 0, exit_v = 1;
    for (int face = 1; face < n; ++face) {
        const int len = spec.lengths[face];
        const int u = exit_u, v = exit_v;
        shared_pairs.emplace_back(std::min(u, v), std::max(u, v));

        // path v -> x_1 -> ... -> x_{len-2} -> u of fresh vertices
        std::vector<int> walk{v};
        for (int i = 0; i < len - 2; ++i) walk.push_back(next_vertex++);
        walk.push_back(u);
        for (size_t i = 0; i + 1 < walk.size(); ++i) pairs.emplace_back(walk[i], walk[i + 1]);

        std::vector<int> cycle{u};
        cycle.insert(cycle.end(), walk.begin(), walk.end() - 1);
        face_cycles.push_back(cycle);

        if (face < n - 1) {
            const int d = spec.offset_of_face(face);
            exit_u = walk[static_cast<size_t>(d)];
            exit_v = walk[static_cast<size_t>(d) + 1];
        }
    }

    Realization real;
    real.graph = build_graph(next_vertex, pairs);
    for (auto [u, v] : shared_pairs) real.shared_edges.push_back(*real.graph.edge_id(u, v));

    // exterior boundary: every non-shared edge, walked from vertex 0
    std::vector<char> is_shared(static_cast<size_t>(real.graph.edge_count()), 0);
    for (int e : real.shared_edges) is_shared[e] = 1;
    auto exterior_step = [&](int cur, int prev) {
        for (const auto& inc : real.graph.incident(cur))
            if (!is_shared[inc.edge] && inc.neighbor != prev) return inc.neighbor;
        return -1;
    };
    std::vector<int> exterior_cycle{0};
    int prev = -1, cur = 0;
    while (true) {
        int nxt = exterior_step(cur, prev);
        if (nxt == -1) fail(ErrorCode::VerificationFailed, "realizer: exterior walk failed");
        if (nxt == 0) break;
        exterior_cycle.push_back(nxt);
        prev = cur;
        cur = nxt;
    }
    if (static_cast<int>(exterior_cycle.size()) != real.graph.vertex_count())
        fail(ErrorCode::VerificationFailed, "realizer: exterior boundary does not span all vertices");

    auto all_faces = face_cycles;
    all_faces.push_back(exterior_cycle);
    real.faces = make_face_set(real.graph, all_faces, static_cast<int>(all_faces.size()) - 1);
    return real;
}

SegmentDecomposition segment_decomposition(const ChainSpec& spec) {
    const int n = spec.face_count();
    KinkFlags kf = kink_flags(spec);
    auto first_kink_in = [&](int lo, int hi) { // faces in [lo, hi], internal window
        for (int f = lo; f <= hi; ++f)
            if (kf.is_kink(f, n)) return f;
        return -1;
    };

    SegmentDecomposition out;
    int cur = 0;
    while (cur < n) {
        int first = first_kink_in(cur + 1, n - 2);
        if (first == -1) {
            out.segments.emplace_back(cur, n - 1);
            break;
        }
        if (spec.lengths[first] == 4) {
            out.segments.emplace_back(cur, first);
            cur = first + 1;
            continue;
        }
        int second = first_kink_in(first + 1, n - 2);
        if (second == -1) {
            out.segments.emplace_back(cur, n - 1);
            break;
        }
        out.segments.emplace_back(cur, second);
        cur = second + 1;
    }
    return out;
}

int af_chain(const ChainSpec& spec) { return segment_decomposition(spec).count(); }

BlockDecomposition all_kink_decomposition(const ChainSpec& spec) {
    const int n = spec.face_count();
    KinkFlags kf = kink_flags(spec);

    BlockDecomposition out;
    int cur = 0;
    while (cur < n) {
        int non_kink = -1;
        for (int f = cur + 1; f <= n - 2; ++f)
            if (!kf.is_kink(f, n)) {
                non_kink = f;
                break;
            }
        if (non_kink == -1) {
            out.blocks.emplace_back(cur, n - 1);
            break;
        }
        out.blocks.emplace_back(cur, non_kink);
        int next_kink = -1;
        for (int f = non_kink + 1; f <= n - 2; ++f)
            if (kf.is_kink(f, n)) {
                next_kink = f;
                break;
            }
        if (next_kink == -1) {
            for (int f = non_kink + 1; f < n; ++f) out.skipped.push_back(f);
            break;
        }
        for (int f = non_kink + 1; f <= next_kink; ++f) out.skipped.push_back(f);
        cur = next_kink + 1;
    }
    return out;
}

int max_af_chain(const ChainSpec& spec) { return all_kink_decomposition(spec).total_faces(); }

SpectrumResult spectrum_chain(const ChainSpec& spec) {
    SpectrumResult out;
    for (int v = af_chain(spec); v <= max_af_chain(spec); ++v) out.values.push_back(v);
    return out;
}

int maximal_linear_chain_count(const ChainSpec& spec) {
    KinkFlags kf = kink_flags(spec);
    int kinks = 0;
    for (int f = 1; f < spec.face_count() - 1; ++f)
        if (kf.is_kink(f, spec.face_count())) ++kinks;
    return kinks + 1;
}

std::vector<int> min_witness(const ChainSpec& spec, const Caps& caps) {
    Realization real = realize(spec);
    SegmentDecomposition segs = segment_decomposition(spec);

    std::vector<std::vector<int>> candidates; // per segment, parent edge ids
    for (auto [a, b] : segs.segments) {
        std::vector<int> edges;
        for (int f = a; f <= b; ++f)
            edges.insert(edges.end(), real.faces.interior[f].edge_ids.begin(),
                         real.faces.interior[f].edge_ids.end());
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        std::vector<int> vmap, emap;
        Graph sub = induced_by_edges(real.graph, edges, &vmap, &emap);
        std::vector<int> picks;
        for (int e : anti_forcing_edges(sub)) picks.push_back(emap[e]);
        std::sort(picks.begin(), picks.end());
        if (picks.empty()) fail(ErrorCode::VerificationFailed, "segment without anti-forcing edge");
        candidates.push_back(std::move(picks));
    }

    auto unique_after_removal = [&](const std::vector<int>& removed) {
        Mask mask = Mask::full(real.graph);
        for (int e : removed) mask.drop_edge(e);
        return count_perfect_matchings_upto(real.graph, mask, 2) == 1;
    };

    // first per-segment choice, with a deterministic combination fallback
    std::vector<size_t> pick(candidates.size(), 0);
    while (true) {
        std::vector<int> witness;
        for (size_t i = 0; i < candidates.size(); ++i) witness.push_back(candidates[i][pick[i]]);
        std::sort(witness.begin(), witness.end());
        if (unique_after_removal(witness)) return witness;
        size_t pos = candidates.size();
        while (pos > 0) {
            --pos;
            if (++pick[pos] < candidates[pos].size()) break;
            pick[pos] = 0;
            if (pos == 0) fail(ErrorCode::VerificationFailed, "no per-segment witness combination works");
        }
        (void)caps;
    }
}

std::vector<int> ominus_vertices(const Graph& g, const std::vector<int>& removed) {
    std::vector<char> alive(static_cast<size_t>(g.vertex_count()), 1);
    for (int v : removed) alive[v] = 0;
    auto alive_degree_and_partner = [&](int v) {
        int deg = 0, partner = -1;
        for (const auto& inc : g.incident(v))
            if (alive[inc.neighbor]) {
                ++deg;
                partner = inc.neighbor;
            }
        return std::make_pair(deg, partner);
    };
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (!alive[v]) continue;
            auto [deg, partner] = alive_degree_and_partner(v);
            if (deg == 1) {
                alive[v] = 0;
                alive[partner] = 0;
                changed = true;
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (alive[v]) out.push_back(v);
    return out;
}

ChainFamily chain_family_from_string(const std::string& name) {
    if (name == "hexchain") return ChainFamily::Hexchain;
    if (name == "polyomino") return ChainFamily::Polyomino;
    if (name == "straight-polyomino") return ChainFamily::StraightPolyomino;
    if (name == "allkink-catahex") return ChainFamily::AllkinkCatahex;
    if (name == "phenylene") return ChainFamily::Phenylene;
    if (name == "random") return ChainFamily::Random;
    fail(ErrorCode::BadModes, "unknown family '" + name + "'");
}

namespace {

// SplitMix64; fixed algorithm so generated instances are identical on every
// platform.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t threshold = -bound % bound;
        while (true) {
            std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }
};

int hex_mode_offset(char mode) {
    switch (mode) {
        case 'S': return 2;
        case 'L': return 1;
        case 'R': return 3;
    }
    fail(ErrorCode::BadModes, std::string("bad hexagon mode '") + mode + "' (want S, L or R)");
}

std::string default_modes(int count, char fill) { return std::string(static_cast<size_t>(count), fill); }

} // namespace

ChainSpec generate(ChainFamily family, int n, const std::string& modes, std::uint64_t seed) {
    if (n < 1) fail(ErrorCode::BadModes, "n must be at least 1");
    ChainSpec spec;
    const int internal = std::max(0, n - 2);
    switch (family) {
        case ChainFamily::Hexchain: {
            std::string m = modes.empty() ? default_modes(internal, 'S') : modes;
            if (static_cast<int>(m.size()) != internal)
                fail(ErrorCode::BadModes, "hexchain wants " + std::to_string(internal) + " modes");
            spec.lengths.assign(static_cast<size_t>(n), 6);
            for (char c : m) spec.offsets.push_back(hex_mode_offset(c));
            break;
        }
        case ChainFamily::Polyomino: {
            std::string m = modes.empty() ? default_modes(internal, 'S') : modes;
            if (static_cast<int>(m.size()) != internal)
                fail(ErrorCode::BadModes, "polyomino wants " + std::to_string(internal) + " modes");
            spec.lengths.assign(static_cast<size_t>(n), 4);
            for (char c : m) {
                if (c == 'S')
                    spec.offsets.push_back(1);
                else if (c == 'B')
                    spec.offsets.push_back(0);
                else
                    fail(ErrorCode::BadModes, std::string("bad polyomino mode '") + c + "' (want S or B)");
            }
            break;
        }
        case ChainFamily::StraightPolyomino: {
            if (!modes.empty()) fail(ErrorCode::BadModes, "straight-polyomino takes no modes");
            spec.lengths.assign(static_cast<size_t>(n), 4);
            spec.offsets.assign(static_cast<size_t>(internal), 1);
            break;
        }
        case ChainFamily::AllkinkCatahex: {
            if (!modes.empty()) fail(ErrorCode::BadModes, "allkink-catahex takes no modes");
            spec.lengths.assign(static_cast<size_t>(n), 6);
            spec.offsets.assign(static_cast<size_t>(internal), 1);
            break;
        }
        case ChainFamily::Phenylene: {
            if (n % 2 == 0) fail(ErrorCode::BadModes, "phenylene needs an odd face count");
            int internal_hexagons = std::max(0, (n + 1) / 2 - 2);
            std::string m = modes.empty() ? default_modes(internal_hexagons, 'S') : modes;
            if (static_cast<int>(m.size()) != internal_hexagons)
                fail(ErrorCode::BadModes, "phenylene wants " + std::to_string(internal_hexagons) + " modes");
            int used = 0;
            for (int f = 0; f < n; ++f) spec.lengths.push_back(f % 2 == 0 ? 6 : 4);
            for (int f = 1; f <= n - 2; ++f)
                spec.offsets.push_back(f % 2 == 1 ? 1 : hex_mode_offset(m[static_cast<size_t>(used++)]));
            break;
        }
        case ChainFamily::Random: {
            if (!modes.empty()) fail(ErrorCode::BadModes, "random takes no modes");
            SplitMix64 rng{seed};
            constexpr int kLengths[] = {4, 6, 8};
            for (int f = 0; f < n; ++f)
                spec.lengths.push_back(kLengths[rng.below(3)]);
            for (int f = 1; f <= n - 2; ++f)
                spec.offsets.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.lengths[f] - 1))));
            break;
        }
    }
    return spec;
}

} // namespace afkit
