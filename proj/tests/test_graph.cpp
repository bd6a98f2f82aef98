#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "afkit/graph.hpp"
#include "afkit/io.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace afkit;
using namespace afkit::test;

namespace {

std::vector<std::vector<int>> matchings_as_ids(const std::vector<Matching>& ms) {
    std::vector<std::vector<int>> out;
    for (const auto& m : ms) out.push_back(m.edge_ids);
    return out;
}

Matching matching_of(std::vector<int> ids) {
    std::sort(ids.begin(), ids.end());
    return Matching{ids};
}

// Random simple graph on n vertices, each pair kept with probability num/den.
Graph random_graph(Rng& rng, int n, int num, int den) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(static_cast<std::uint64_t>(den)) < static_cast<std::uint64_t>(num))
                pairs.emplace_back(u, v);
    return build_graph(n, pairs);
}

} // namespace

TEST_CASE("build_graph canonicalizes and validates") {
    Graph g = build_graph(2, {{1, 0}});
    CHECK(g.edge_count() == 1);
    CHECK(g.endpoints(0) == std::pair<int, int>{0, 1});

    CHECK(c6().edge_count() == 6);
    CHECK(k4().edge_count() == 6);

    CHECK_THROWS_AS(build_graph(3, {{0, 0}}), Error);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}, {1, 0}}), Error);
    CHECK_THROWS_AS(build_graph(2, {{0, 2}}), Error);
    try {
        build_graph(3, {{0, 1}, {1, 0}});
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DuplicateEdge);
    }
}

TEST_CASE("edge ids follow the sorted pair list") {
    Graph g = k4();
    CHECK(*g.edge_id(0, 1) == 0);
    CHECK(*g.edge_id(2, 3) == 5);
    CHECK(*g.edge_id(3, 1) == 4);
    CHECK(!g.edge_id(0, 0).has_value());
}

TEST_CASE("bipartition") {
    Graph hex = c6();
    auto col = bipartition(hex);
    REQUIRE(col.has_value());
    for (auto [u, v] : hex.edges()) CHECK((*col)[u] != (*col)[v]);
    CHECK((*col)[0] == 0);

    CHECK(!bipartition(k4()).has_value());

    auto k2col = bipartition(k2());
    REQUIRE(k2col.has_value());
    CHECK((*k2col)[0] == 0);
    CHECK((*k2col)[1] == 1);
}

TEST_CASE("cyclomatic number") {
    CHECK(cyclomatic_number(c6()) == 1);
    CHECK(cyclomatic_number(k4()) == 3);
    Graph disconnected = build_graph(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(cyclomatic_number(disconnected), Error);
}

TEST_CASE("perfect matching enumeration matches brute force") {
    auto c6_ms = enumerate_perfect_matchings(c6(), 100);
    CHECK(c6_ms.size() == 2);
    CHECK(matchings_as_ids(c6_ms) == oracle_perfect_matchings(c6()));

    auto k4_ms = enumerate_perfect_matchings(k4(), 100);
    CHECK(k4_ms.size() == 3);
    CHECK(matchings_as_ids(k4_ms) == oracle_perfect_matchings(k4()));

    // odd order short-circuits
    CHECK(enumerate_perfect_matchings(build_graph(3, {{0, 1}, {1, 2}}), 10).empty());

    CHECK_THROWS_AS(enumerate_perfect_matchings(c6(), 1), Error);
    try {
        enumerate_perfect_matchings(c6(), 1);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::CapExceeded);
    }
}

TEST_CASE("enumeration combines components") {
    // two disjoint 4-cycles: 2 x 2 matchings
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 4; ++i) pairs.emplace_back(i, (i + 1) % 4);
    for (int i = 0; i < 4; ++i) pairs.emplace_back(4 + i, 4 + (i + 1) % 4);
    Graph g = build_graph(8, pairs);
    auto ms = enumerate_perfect_matchings(g, 100);
    CHECK(ms.size() == 4);
    CHECK(matchings_as_ids(ms) == oracle_perfect_matchings(g));
    for (const auto& m : ms) CHECK(is_perfect_matching(g, m));
}

TEST_CASE("count with limit") {
    CHECK(count_perfect_matchings_upto(p4(), 2) == 1);
    CHECK(count_perfect_matchings_upto(c6(), 2) == 2);
    CHECK(count_perfect_matchings_upto(c6(), 1) == 1);
    Mask mask = Mask::full(c6());
    mask.drop_edge(0);
    CHECK(count_perfect_matchings_upto(c6(), mask, 2) == 1);
}

TEST_CASE("allowed edges") {
    for (int e = 0; e < c6().edge_count(); ++e) CHECK(is_allowed_edge(c6(), e));
    CHECK(is_allowed_edge(k2(), 0));

    Graph g = two_hexagons_bridge();
    int bridge = *g.edge_id(0, 6);
    CHECK(!is_allowed_edge(g, bridge));
    CHECK_THROWS_AS(is_allowed_edge(build_graph(3, {{0, 1}, {1, 2}}), 0), Error);
}

TEST_CASE("normal components") {
    Graph g = two_hexagons_bridge();
    auto report = normal_components(g);
    int bridge = *g.edge_id(0, 6);
    CHECK(report.fixed_single == std::vector<int>{bridge});
    CHECK(report.fixed_double.empty());
    REQUIRE(report.elementary_components.size() == 2);
    CHECK(report.elementary_components[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(report.elementary_components[1] == std::vector<int>{6, 7, 8, 9, 10, 11});

    auto c6_report = normal_components(c6());
    CHECK(c6_report.fixed_single.empty());
    CHECK(c6_report.fixed_double.empty());
    CHECK(c6_report.elementary_components.size() == 1);

    auto p4_report = normal_components(p4());
    CHECK(p4_report.fixed_double == std::vector<int>{0, 2});
    CHECK(p4_report.fixed_single == std::vector<int>{1});
    CHECK(p4_report.elementary_components.empty());
}

TEST_CASE("normal components partition the edge set") {
    for (const Graph& g : {two_hexagons_bridge(), c6(), p4(), k4()}) {
        auto report = normal_components(g);
        std::set<int> seen;
        for (int e : report.fixed_single) CHECK(seen.insert(e).second);
        for (int e : report.fixed_double) CHECK(seen.insert(e).second);
        for (const auto& comp : report.elementary_components) {
            std::set<int> verts(comp.begin(), comp.end());
            for (auto [u, v] : g.edges())
                if (verts.count(u) && verts.count(v)) seen.insert(*g.edge_id(u, v));
        }
        CHECK(static_cast<int>(seen.size()) == g.edge_count());
    }
}

TEST_CASE("component enumeration reproduces global matching restrictions") {
    Graph g = two_hexagons_bridge();
    auto report = normal_components(g);
    auto global = enumerate_perfect_matchings(g, 100);
    for (const auto& comp : report.elementary_components) {
        std::set<int> verts(comp.begin(), comp.end());
        std::vector<int> comp_edges;
        for (int e = 0; e < g.edge_count(); ++e) {
            auto [u, v] = g.endpoints(e);
            if (verts.count(u) && verts.count(v)) comp_edges.push_back(e);
        }
        std::vector<int> vmap, emap;
        Graph sub = induced_by_edges(g, comp_edges, &vmap, &emap);
        std::set<std::vector<int>> local;
        for (const auto& m : enumerate_perfect_matchings(sub, 100)) {
            std::vector<int> parent_ids;
            for (int e : m.edge_ids) parent_ids.push_back(emap[e]);
            std::sort(parent_ids.begin(), parent_ids.end());
            local.insert(parent_ids);
        }
        std::set<std::vector<int>> restrictions;
        for (const auto& m : global) {
            std::vector<int> restricted;
            for (int e : m.edge_ids)
                if (std::binary_search(comp_edges.begin(), comp_edges.end(), e)) restricted.push_back(e);
            restrictions.insert(restricted);
        }
        CHECK(local == restrictions);
    }
}

TEST_CASE("is_elementary") {
    CHECK(is_elementary(c6()));
    CHECK(!is_elementary(two_hexagons_bridge()));
    CHECK(!is_elementary(k4())); // not bipartite
    CHECK(is_elementary(k2()));
}

TEST_CASE("alternating cycles match brute force") {
    Graph g = c6();
    auto ms = enumerate_perfect_matchings(g, 10);
    for (const auto& m : ms) {
        auto cycles = enumerate_alternating_cycles(g, m, 100);
        REQUIRE(cycles.size() == 1);
        CHECK(cycles[0].length() == 6);
    }

    Graph h = k4();
    Matching m = matching_of({*h.edge_id(0, 1), *h.edge_id(2, 3)});
    auto cycles = enumerate_alternating_cycles(h, m, 100);
    CHECK(cycles.size() == 2);
    std::vector<std::vector<int>> got;
    for (const auto& c : cycles) got.push_back(c.edge_ids);
    CHECK(got == oracle_alternating_cycles(h, m.edge_ids));

    CHECK_THROWS_AS(enumerate_alternating_cycles(h, m, 1), Error);
}

TEST_CASE("symmetric difference") {
    Graph g = c6();
    auto ms = enumerate_perfect_matchings(g, 10);
    AltCycle hexagon{{0, 1, 2, 3, 4, 5}};
    CHECK(symmetric_difference(g, ms[0], hexagon) == ms[1]);
    CHECK(symmetric_difference(g, symmetric_difference(g, ms[0], hexagon), hexagon) == ms[0]);

    Graph h = k4();
    Matching m = matching_of({*h.edge_id(0, 1), *h.edge_id(2, 3)});
    std::vector<int> square_ids{*h.edge_id(0, 1), *h.edge_id(1, 2), *h.edge_id(2, 3), *h.edge_id(0, 3)};
    std::sort(square_ids.begin(), square_ids.end());
    AltCycle square{square_ids};
    Matching flipped = symmetric_difference(h, m, square);
    CHECK(flipped == matching_of({*h.edge_id(1, 2), *h.edge_id(0, 3)}));

    AltCycle not_alternating{{0, 1, 2}};
    CHECK_THROWS_AS(symmetric_difference(g, ms[0], not_alternating), Error);
}

TEST_CASE("find_alternating_cycle") {
    Graph g = c6();
    auto ms = enumerate_perfect_matchings(g, 10);
    Mask mask = Mask::full(g);
    auto cycle = find_alternating_cycle(g, mask, ms[0]);
    REQUIRE(cycle.has_value());
    CHECK(cycle->length() == 6);

    mask.drop_edge(1);
    CHECK(!find_alternating_cycle(g, mask, ms[0]).has_value());
}

TEST_CASE("induced subgraph keeps edge identity") {
    Graph g = two_hexagons_bridge();
    std::vector<int> hex_edges;
    for (int i = 0; i < 6; ++i) hex_edges.push_back(*g.edge_id(6 + i, 6 + (i + 1) % 6));
    std::sort(hex_edges.begin(), hex_edges.end());
    std::vector<int> vmap, emap;
    Graph sub = induced_by_edges(g, hex_edges, &vmap, &emap);
    CHECK(sub.vertex_count() == 6);
    CHECK(sub.edge_count() == 6);
    CHECK(cyclomatic_number(sub) == 1);
    for (int e = 0; e < sub.edge_count(); ++e) {
        auto [u, v] = sub.endpoints(e);
        CHECK(*g.edge_id(vmap[u], vmap[v]) == emap[e]);
    }
}

TEST_CASE("properties on random graphs") {
    Rng rng(20260810);
    int graphs_with_matchings = 0;
    for (int trial = 0; trial < 60; ++trial) {
        int n = 4 + static_cast<int>(rng.below(4)) * 2; // 4..10 even
        Graph g = random_graph(rng, n, 2, 5);
        if (g.edge_count() > 18) continue;
        auto oracle = oracle_perfect_matchings(g);
        if (count_perfect_matchings_upto(g, 1) == 0) {
            CHECK(oracle.empty());
            continue;
        }
        ++graphs_with_matchings;
        auto ms = enumerate_perfect_matchings(g, 1000);
        CHECK(matchings_as_ids(ms) == oracle);
        for (const auto& m : ms) {
            CHECK(is_perfect_matching(g, m));
            CHECK(m.size() * 2 == g.vertex_count());
            auto cycles = enumerate_alternating_cycles(g, m, 5000);
            std::vector<std::vector<int>> got;
            for (const auto& c : cycles) got.push_back(c.edge_ids);
            CHECK(got == oracle_alternating_cycles(g, m.edge_ids));
            for (const auto& c : cycles) {
                int in_m = 0;
                for (int e : c.edge_ids)
                    if (m.contains(e)) ++in_m;
                CHECK(in_m * 2 == c.length());
                CHECK(is_perfect_matching(g, symmetric_difference(g, m, c)));
            }
        }
        // determinism
        CHECK(matchings_as_ids(enumerate_perfect_matchings(g, 1000)) == matchings_as_ids(ms));
    }
    CHECK(graphs_with_matchings > 10);
}

TEST_CASE("unique-matching bipartite graphs have degree-1 vertices in both classes") {
    Rng rng(42);
    int checked = 0;
    for (int trial = 0; trial < 400; ++trial) {
        int n = 4 + static_cast<int>(rng.below(2)) * 2;
        Graph g = random_graph(rng, n, 1, 3);
        auto col = bipartition(g);
        if (!col) continue;
        if (count_perfect_matchings_upto(g, 2) != 1) continue;
        ++checked;
        bool deg1_black = false, deg1_white = false;
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (g.degree(v) != 1) continue;
            ((*col)[v] == 0 ? deg1_black : deg1_white) = true;
        }
        CHECK(deg1_black);
        CHECK(deg1_white);
    }
    CHECK(checked > 5);
}

TEST_CASE("graph text format round-trip") {
    std::string text =
        "# sample\n"
        "graph 6\n"
        "e 0 1\n"
        "e 1 2\n"
        "e 2 3\n"
        "e 3 4\n"
        "e 4 5\n"
        "e 0 5\n"
        "\n"
        "f 0 1 2 3 4 5\n"
        "# exterior\n"
        "f 0 1 2 3 4 5\n";
    std::istringstream in(text);
    GraphFile gf = read_graph_text(in);
    CHECK(gf.graph.vertex_count() == 6);
    CHECK(gf.graph.edge_count() == 6);
    REQUIRE(gf.faces.size() == 2);
    REQUIRE(gf.exterior_index.has_value());
    CHECK(*gf.exterior_index == 1);

    std::ostringstream out;
    write_graph_text(out, gf.graph, gf.faces, gf.exterior_index);
    std::istringstream in2(out.str());
    GraphFile gf2 = read_graph_text(in2);
    CHECK(gf2.graph.edges() == gf.graph.edges());
    CHECK(gf2.faces == gf.faces);
    CHECK(gf2.exterior_index == gf.exterior_index);
}

TEST_CASE("graph text format errors") {
    auto parse = [](const std::string& s) {
        std::istringstream in(s);
        return read_graph_text(in);
    };
    CHECK_THROWS_AS(parse("e 0 1\n"), Error);
    CHECK_THROWS_AS(parse("graph 2\nq 1\n"), Error);
    CHECK_THROWS_AS(parse("graph 2\ne 0\n"), Error);
    CHECK_THROWS_AS(parse(""), Error);
    CHECK_THROWS_AS(parse("graph 4\nf 0 1\n"), Error);
}
