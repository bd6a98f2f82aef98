#pragma once

// Shared small instances for tests.

#include <vector>

#include "afkit/graph.hpp"

namespace afkit::test {

inline Graph k2() { return build_graph(2, {{0, 1}}); }

inline Graph p4() { return build_graph(4, {{0, 1}, {1, 2}, {2, 3}}); }

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
    return build_graph(n, pairs);
}

inline Graph c6() { return cycle(6); }

inline Graph k4() {
    return build_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

// Two hexagons joined by a single bridge edge (vertex 0 of each copy).
inline Graph two_hexagons_bridge() {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < 6; ++i) pairs.emplace_back(i, (i + 1) % 6);
    for (int i = 0; i < 6; ++i) pairs.emplace_back(6 + i, 6 + (i + 1) % 6);
    pairs.emplace_back(0, 6);
    return build_graph(12, pairs);
}

inline Graph c6_plus_chord() {
    return build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 2}});
}

} // namespace afkit::test
