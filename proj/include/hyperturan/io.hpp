#pragma once

#include "hypergraph.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace hyperturan {

// Text layout:
//   n=<n> r=<r>
//   <v> <v> ... <v>        one edge per line, vertices ascending
// Blank lines and lines starting with '#' are skipped.

inline std::string to_text(const Hypergraph& h)
{
    std::ostringstream out;
    out << "n=" << h.order() << " r=" << h.uniformity() << '\n';
    for (VertexSet e : h.edges()) {
        bool first = true;
        for (int v : members(e)) {
            out << (first ? "" : " ") << v;
            first = false;
        }
        out << '\n';
    }
    return out.str();
}

inline Hypergraph parse_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1;
    int r = -1;
    std::vector<std::vector<int>> edges;
    auto fail = [&](const std::string& why) {
        throw HypergraphError("line " + std::to_string(line_no) + ": " + why);
    };
    while (std::getline(in, line)) {
        ++line_no;
        const auto start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        if (n < 0) {
            char tail = 0;
            if (std::sscanf(line.c_str() + start, "n=%d r=%d %c", &n, &r, &tail) != 2)
                fail("expected header 'n=<n> r=<r>'");
            if (n < 0 || n > kMaxVertices || r < 1)
                fail("header values out of range");
            continue;
        }
        std::istringstream fields(line);
        std::vector<int> edge;
        std::string token;
        while (fields >> token) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(token, &used);
            } catch (const std::exception&) {
                fail("non-numeric vertex '" + token + "'");
            }
            if (used != token.size())
                fail("non-numeric vertex '" + token + "'");
            edge.push_back(v);
        }
        if (static_cast<int>(edge.size()) != r)
            fail("edge has " + std::to_string(edge.size()) + " vertices, expected " +
                 std::to_string(r));
        edges.push_back(std::move(edge));
    }
    if (n < 0)
        throw HypergraphError("missing header 'n=<n> r=<r>'");
    return make_hypergraph(n, r, edges);
}

inline Hypergraph read_hypergraph(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw HypergraphError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_text(buffer.str());
}

inline void write_hypergraph(const std::string& path, const Hypergraph& h)
{
    std::ofstream out(path);
    if (!out)
        throw HypergraphError("cannot write " + path);
    out << to_text(h);
}

/// Edges as ascending vertex lists, the layout used in JSON documents.
inline std::vector<std::vector<int>> edge_lists(const Hypergraph& h)
{
    std::vector<std::vector<int>> out;
    out.reserve(h.size());
    for (VertexSet e : h.edges())
        out.push_back(members(e));
    return out;
}

} // namespace hyperturan
