#include "afkit/io.hpp"

#include <fstream>
#include <sstream>

namespace afkit {

GraphFile read_graph_text(std::istream& in) {
    std::optional<int> vertex_count;
    std::vector<std::pair<int, int>> pairs;
    std::vector<std::vector<int>> faces;
    std::optional<int> exterior_index;
    bool next_face_is_exterior = false;

    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue; // blank
        if (head[0] == '#') {
            std::string word;
            if (ls >> word && word == "exterior") next_face_is_exterior = true;
            continue;
        }
        auto at = "line " + std::to_string(lineno);
        if (head == "graph") {
            int n;
            if (!(ls >> n) || n < 0) fail(ErrorCode::SyntaxError, at + ": bad vertex count");
            if (vertex_count) fail(ErrorCode::SyntaxError, at + ": repeated graph header");
            vertex_count = n;
        } else if (head == "e") {
            if (!vertex_count) fail(ErrorCode::SyntaxError, at + ": edge before graph header");
            int u, v;
            if (!(ls >> u >> v)) fail(ErrorCode::SyntaxError, at + ": bad edge line");
            pairs.emplace_back(u, v);
        } else if (head == "f") {
            if (!vertex_count) fail(ErrorCode::SyntaxError, at + ": face before graph header");
            std::vector<int> cycle;
            int v;
            while (ls >> v) cycle.push_back(v);
            if (cycle.size() < 3) fail(ErrorCode::SyntaxError, at + ": face needs at least 3 vertices");
            if (next_face_is_exterior) {
                if (exterior_index) fail(ErrorCode::SyntaxError, at + ": two exterior faces");
                exterior_index = static_cast<int>(faces.size());
                next_face_is_exterior = false;
            }
            faces.push_back(std::move(cycle));
        } else {
            fail(ErrorCode::SyntaxError, at + ": unknown directive '" + head + "'");
        }
    }
    if (!vertex_count) fail(ErrorCode::SyntaxError, "missing graph header");

    GraphFile out;
    out.graph = build_graph(*vertex_count, pairs);
    out.faces = std::move(faces);
    out.exterior_index = exterior_index;
    return out;
}

GraphFile read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::SyntaxError, "cannot open " + path);
    return read_graph_text(in);
}

void write_graph_text(std::ostream& out, const Graph& g,
                      const std::vector<std::vector<int>>& faces,
                      std::optional<int> exterior_index) {
    out << "graph " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) out << "e " << u << " " << v << "\n";
    for (int i = 0; i < static_cast<int>(faces.size()); ++i) {
        if (exterior_index && *exterior_index == i) out << "# exterior\n";
        out << "f";
        for (int v : faces[i]) out << " " << v;
        out << "\n";
    }
}

void write_graph_file(const std::string& path, const Graph& g,
                      const std::vector<std::vector<int>>& faces,
                      std::optional<int> exterior_index) {
    std::ofstream out(path);
    if (!out) fail(ErrorCode::SyntaxError, "cannot open " + path + " for writing");
    write_graph_text(out, g, faces, exterior_index);
}

} // namespace afkit
