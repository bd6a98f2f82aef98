#include "afkit/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace afkit {

namespace {

std::string show(int v) { return std::to_string(v); }

std::string show(const std::vector<int>& v) {
    std::ostringstream out;
    out << "{";
    for (size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i];
    out << "}";
    return out.str();
}

ChainSpec suffix_spec(const ChainSpec& spec, int from) {
    ChainSpec out;
    out.lengths.assign(spec.lengths.begin() + from, spec.lengths.end());
    const int n = spec.face_count();
    if (n - from >= 3)
        out.offsets.assign(spec.offsets.begin() + from, spec.offsets.begin() + (n - 2));
    return out;
}

std::vector<int> face_vertex_union(const Realization& real, int from, int to) {
    std::set<int> verts;
    for (int f = from; f <= to; ++f)
        for (int v : real.faces.interior_vertices[f]) verts.insert(v);
    return {verts.begin(), verts.end()};
}

// Replays the all-kink block recursion against the graph-level view: deleting
// a block plus the stretch to the next kink, then stripping pendant edges,
// must leave exactly the faces the face-level recursion continues on.
bool pendant_strip_agrees(const ChainSpec& spec) {
    ChainSpec cur = spec;
    while (true) {
        const int n = cur.face_count();
        Realization real = realize(cur);
        BlockDecomposition blocks = all_kink_decomposition(cur);
        if (blocks.blocks.size() == 1 && blocks.skipped.empty()) return true; // block consumed all
        // delete the block's vertices only; stripping must then consume the
        // faces up to (and including) the next kink
        int block_end = blocks.blocks[0].second;
        auto got = ominus_vertices(real.graph, face_vertex_union(real, 0, block_end));
        if (blocks.blocks.size() == 1) return got.empty(); // linear tail, stripped away entirely
        int cut = blocks.blocks[1].first - 1; // last face consumed by the step
        if (got != face_vertex_union(real, cut + 1, n - 1)) return false;
        cur = suffix_spec(cur, cut + 1);
    }
}

} // namespace

ChainAnswers chain_answers(const ChainSpec& spec) {
    ChainAnswers out;
    out.af = af_chain(spec);
    out.max_af = max_af_chain(spec);
    out.spectrum = spectrum_chain(spec).values;
    return out;
}

VerifyOutcome verify_chain(const ChainSpec& spec, const Caps& caps, int jobs,
                           const ChainAnswers* answers) {
    VerifyOutcome out;
    out.chain = answers ? *answers : chain_answers(spec);

    Realization real = realize(spec);
    auto spectrum = spectrum_exact(real.graph, caps, true, jobs);
    out.oracle.spectrum = spectrum.values;
    out.oracle.af = spectrum.values.front();
    out.oracle.max_af = spectrum.values.back();

    auto mismatch = [&](const std::string& field, const std::string& chain_v,
                        const std::string& oracle_v) {
        out.mismatches.push_back({field, chain_v, oracle_v});
    };

    if (out.chain.af != out.oracle.af) mismatch("af", show(out.chain.af), show(out.oracle.af));
    if (out.chain.max_af != out.oracle.max_af)
        mismatch("max_af", show(out.chain.max_af), show(out.oracle.max_af));
    if (out.chain.spectrum != out.oracle.spectrum)
        mismatch("spectrum", show(out.chain.spectrum), show(out.oracle.spectrum));

    // af(G, M) = |c'(M)| for every perfect matching of the realized chain
    for (const auto& [m, af_value] : *spectrum.per_matching) {
        int compatible = c_prime(real.graph, m, caps).size();
        if (compatible != af_value) {
            mismatch("c_prime(" + show(m.edge_ids) + ")", show(af_value), show(compatible));
            break;
        }
    }

    if (!pendant_strip_agrees(spec))
        mismatch("pendant_strip", "block recursion", "graph-level strip differs");

    try {
        auto witness = min_witness(spec, caps);
        if (static_cast<int>(witness.size()) != out.chain.af && !answers)
            mismatch("min_witness_size", show(static_cast<int>(witness.size())), show(out.oracle.af));
    } catch (const Error& e) {
        if (e.code() == ErrorCode::CapExceeded) throw;
        mismatch("min_witness", "error", e.what());
    }

    return out;
}

} // namespace afkit
