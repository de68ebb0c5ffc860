#include "sierpdom/codecs.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

namespace sierpdom {

namespace {

constexpr int kGraph6MaxOrder = 258047;

std::string encode_graph6(const Graph& g) {
    int n = g.order();
    if (n > kGraph6MaxOrder)
        throw GraphError("graph6 supports at most " + std::to_string(kGraph6MaxOrder) + " vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int bit = 0, acc = 0;
    for (Vertex j = 2; j <= n; ++j)
        for (Vertex i = 1; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(acc + 63));
                bit = 0;
                acc = 0;
            }
        }
    if (bit > 0) out.push_back(static_cast<char>((acc << (6 - bit)) + 63));
    return out;
}

Graph decode_graph6(const std::string& text) {
    std::size_t len = text.size();
    while (len > 0 && (text[len - 1] == '\n' || text[len - 1] == '\r')) --len;
    if (len == 0) throw ParseError("empty graph6 input", 0);
    std::size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= len) throw ParseError("unexpected end of graph6 data", pos);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) throw ParseError("invalid graph6 character", pos);
        ++pos;
        return c - 63;
    };
    long long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        ++pos;
        if (pos < len && static_cast<unsigned char>(text[pos]) == 126)
            throw ParseError("graph6 orders above 258047 unsupported", pos);
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    } else {
        n = next();
    }
    if (n < 1) throw ParseError("graph6 order must be positive", 0);
    if (n > kGraph6MaxOrder) throw ParseError("graph6 order too large", 0);
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(len - pos) != nbytes)
        throw ParseError("graph6 body length mismatch: expected " + std::to_string(nbytes) +
                             " data characters, got " + std::to_string(len - pos),
                         pos);
    EdgeList edges;
    int bit = 0, acc = 0;
    for (Vertex j = 2; j <= n; ++j)
        for (Vertex i = 1; i < j; ++i) {
            if (bit == 0) acc = next();
            if (acc & (1 << (5 - bit))) edges.emplace_back(i, j);
            bit = (bit + 1) % 6;
        }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 1; v <= g.order(); ++v) out << "  " << v << ";\n";
    for (const auto& [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

struct DotLexer {
    const std::string& text;
    std::size_t pos = 0;
    int line = 1;

    void skip_space() {
        while (pos < text.size()) {
            char c = text[pos];
            if (c == '\n') {
                ++line;
                ++pos;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos;
            } else if (c == '/' && pos + 1 < text.size() && text[pos + 1] == '/') {
                while (pos < text.size() && text[pos] != '\n') ++pos;
            } else {
                break;
            }
        }
    }

    bool eof() {
        skip_space();
        return pos >= text.size();
    }

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos, line); }

    std::string token() {
        skip_space();
        if (pos >= text.size()) fail("unexpected end of DOT input");
        char c = text[pos];
        if (c == '{' || c == '}' || c == ';') {
            ++pos;
            return std::string(1, c);
        }
        if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '-') {
            pos += 2;
            return "--";
        }
        if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            return text.substr(start, pos - start);
        }
        fail("unexpected character '" + std::string(1, c) + "' in DOT input");
    }

    int vertex_token() {
        skip_space();
        std::size_t at = pos;
        int at_line = line;
        std::string t = token();
        if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) {
                return std::isdigit(static_cast<unsigned char>(c));
            }))
            throw ParseError("expected a vertex number, got '" + t + "'", at, at_line);
        long long v = std::stoll(t);
        if (v < 1 || v > kGraph6MaxOrder)
            throw ParseError("vertex label " + t + " out of range", at, at_line);
        return static_cast<int>(v);
    }
};

Graph decode_dot(const std::string& text) {
    DotLexer lex{text};
    if (lex.token() != "graph") lex.fail("DOT input must start with 'graph'");
    std::string t = lex.token();
    if (t != "{") {
        // optional graph name
        if (lex.token() != "{") lex.fail("expected '{'");
    }
    int n = 0;
    EdgeList edges;
    while (true) {
        lex.skip_space();
        if (lex.eof()) lex.fail("missing closing '}'");
        std::size_t at = lex.pos;
        int at_line = lex.line;
        std::string tok = lex.token();
        if (tok == "}") break;
        if (tok == ";") continue;
        if (!std::all_of(tok.begin(), tok.end(),
                         [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            throw ParseError("expected a vertex number, got '" + tok + "'", at, at_line);
        int u = static_cast<int>(std::stoll(tok));
        n = std::max(n, u);
        lex.skip_space();
        if (lex.pos + 1 < text.size() && text[lex.pos] == '-' && text[lex.pos + 1] == '-') {
            lex.pos += 2;
            int v = lex.vertex_token();
            n = std::max(n, v);
            edges.emplace_back(u, v);
        }
        lex.skip_space();
        if (lex.pos < text.size() && text[lex.pos] == ';') ++lex.pos;
    }
    if (n == 0) throw ParseError("DOT input declares no vertices", 0, 1);
    try {
        return Graph::from_edges(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid DOT graph: ") + e.what(), 0, 1);
    }
}

std::string encode_edge_list_json(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.order();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j.dump();
}

Graph decode_edge_list_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ParseError("edge-list JSON must be an object with \"n\" and \"edges\"", 0);
    if (!j["n"].is_number_integer()) throw ParseError("\"n\" must be an integer", 0);
    if (!j["edges"].is_array()) throw ParseError("\"edges\" must be an array", 0);
    int n = j["n"].get<int>();
    EdgeList edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
            throw ParseError("each edge must be a pair of integers", 0);
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    try {
        return Graph::from_edges(n, edges);
    } catch (const GraphError& e) {
        throw ParseError(std::string("invalid edge-list graph: ") + e.what(), 0);
    }
}

}  // namespace

std::string encode(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return encode_graph6(g);
        case GraphFormat::dot: return encode_dot(g);
        case GraphFormat::edge_list_json: return encode_edge_list_json(g);
    }
    throw GraphError("unknown graph format");
}

Graph decode(const std::string& text, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6: return decode_graph6(text);
        case GraphFormat::dot: return decode_dot(text);
        case GraphFormat::edge_list_json: return decode_edge_list_json(text);
    }
    throw GraphError("unknown graph format");
}

}  // namespace sierpdom
