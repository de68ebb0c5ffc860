#ifndef SIERPDOM_CODECS_HPP
#define SIERPDOM_CODECS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

#include "sierpdom/graph.hpp"

namespace sierpdom {

enum class GraphFormat { graph6, dot, edge_list_json };

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t byte, int line = -1)
        : std::runtime_error(msg + " (at " + (line >= 0 ? "line " + std::to_string(line) + ", " : "") +
                             "byte " + std::to_string(byte) + ")"),
          byte_offset(byte),
          line_number(line) {}

    std::size_t byte_offset;
    int line_number;  // -1 for formats without a line structure
};

// graph6: the standard 6-bit encoding, supports 1 <= n <= 258047.
// dot: undirected DOT with every vertex declared; `//` comments tolerated.
// edge_list_json: {"n": int, "edges": [[u,v], ...]} with 1-based labels.
std::string encode(const Graph& g, GraphFormat format);
Graph decode(const std::string& text, GraphFormat format);

}  // namespace sierpdom

#endif
