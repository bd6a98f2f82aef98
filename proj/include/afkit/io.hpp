#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "afkit/graph.hpp"

namespace afkit {

/// Parsed graph text file. Faces are kept as the vertex cycles from the `f`
/// lines; exterior_index marks the face preceded by a `# exterior` line.
struct GraphFile {
    Graph graph;
    std::vector<std::vector<int>> faces;
    std::optional<int> exterior_index;
};

/// Graph text format: `graph N` header, `e U V` per edge, optional
/// `f V1 V2 ... Vk` face-boundary lines (cyclic vertex order), `#` comment
/// lines, blank lines ignored. A `# exterior` comment marks the next face
/// line as the exterior boundary.
GraphFile read_graph_text(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph_text(std::ostream& out, const Graph& g,
                      const std::vector<std::vector<int>>& faces = {},
                      std::optional<int> exterior_index = std::nullopt);
void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::vector<int>>& faces = {},
                      std::optional<int> exterior_index = std::nullopt);

} // namespace afkit
