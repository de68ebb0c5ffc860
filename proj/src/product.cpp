#include "sierpdom/product.hpp"

#include <sstream>

#include <json.hpp>

#include "sierpdom/codecs.hpp"

namespace sierpdom {

FunctionAssignment assignment_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("f"))
        throw ParseError("assignment JSON must be an object with \"n\" and \"f\"", 0);
    int n = j["n"].get<int>();
    if (!j["f"].is_array() || static_cast<int>(j["f"].size()) != n)
        throw ParseError("\"f\" must be an array of length n", 0);
    FunctionAssignment f;
    for (const auto& v : j["f"]) {
        if (!v.is_number_integer()) throw ParseError("assignment values must be integers", 0);
        f.values.push_back(v.get<int>());
    }
    return f;
}

std::string assignment_to_json(const FunctionAssignment& f) {
    nlohmann::ordered_json j;
    j["n"] = f.domain_size();
    j["f"] = f.values;
    return j.dump();
}

SierpinskiProduct::SierpinskiProduct(Graph base, Graph fiber, FunctionAssignment f)
    : base_(std::move(base)), fiber_(std::move(fiber)), f_(std::move(f)) {
    int nG = base_.order();
    int nH = fiber_.order();
    if (f_.domain_size() != nG)
        throw GraphError("assignment covers " + std::to_string(f_.domain_size()) +
                         " vertices, base graph has " + std::to_string(nG));
    for (Vertex g = 1; g <= nG; ++g)
        if (!fiber_.has_vertex(f_(g)))
            throw GraphError("f(g_" + std::to_string(g) + ") = " + std::to_string(f_(g)) +
                             " is not a vertex of H");

    EdgeList edges;
    edges.reserve(static_cast<std::size_t>(nG) * fiber_.size() + base_.size());
    for (Vertex g = 1; g <= nG; ++g)
        for (const auto& [h1, h2] : fiber_.edges())
            edges.emplace_back(flat({g, h1}), flat({g, h2}));
    for (const auto& [g1, g2] : base_.edges()) {
        Vertex a = flat({g1, f_(g2)});
        Vertex b = flat({g2, f_(g1)});
        edges.emplace_back(a, b);
        connecting_.emplace_back(a, b);
    }
    graph_ = Graph::from_edges(nG * nH, edges);
}

Vertex SierpinskiProduct::flat(ProductVertex pv) const {
    if (!base_.has_vertex(pv.g) || !fiber_.has_vertex(pv.h))
        throw GraphError("product vertex (" + std::to_string(pv.g) + "," + std::to_string(pv.h) +
                         ") out of range");
    return (pv.g - 1) * fiber_.order() + pv.h;
}

ProductVertex SierpinskiProduct::unflat(Vertex v) const {
    if (!graph_.has_vertex(v))
        throw GraphError("flat vertex " + std::to_string(v) + " out of range");
    int nH = fiber_.order();
    return {(v - 1) / nH + 1, (v - 1) % nH + 1};
}

std::pair<ProductVertex, ProductVertex> SierpinskiProduct::connecting_vertices(int layer) const {
    if (!is_cycle_layout(base_))
        throw UnsupportedStructureError(
            "connecting_vertices requires a cycle base graph with consecutive labels");
    int n = base_.order();
    if (layer < 1 || layer > n)
        throw GraphError("layer index " + std::to_string(layer) + " out of range");
    ProductVertex y{layer, f_(mod_star(layer - 1, n))};
    ProductVertex x{layer, f_(mod_star(layer + 1, n))};
    return {y, x};
}

Graph SierpinskiProduct::layer_subgraph(Vertex g) const {
    if (!base_.has_vertex(g)) throw GraphError("layer " + std::to_string(g) + " out of range");
    int nH = fiber_.order();
    EdgeList edges;
    for (Vertex h = 1; h <= nH; ++h) {
        Vertex fv = flat({g, h});
        for (Vertex w : graph_.neighbors(fv)) {
            ProductVertex pw = unflat(w);
            if (pw.g == g && h < pw.h) edges.emplace_back(h, pw.h);
        }
    }
    return Graph::from_edges(nH, edges);
}

std::string SierpinskiProduct::to_dot() const {
    std::ostringstream out;
    out << "graph G {\n";
    for (Vertex v = 1; v <= graph_.order(); ++v) {
        ProductVertex pv = unflat(v);
        out << "  " << v << "; // (" << pv.g << "," << pv.h << ")\n";
    }
    for (const auto& [u, v] : graph_.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

SierpinskiProduct product(const Graph& G, const Graph& H, const FunctionAssignment& f) {
    return SierpinskiProduct(G, H, f);
}

}  // namespace sierpdom
