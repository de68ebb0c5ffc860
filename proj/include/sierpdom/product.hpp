#ifndef SIERPDOM_PRODUCT_HPP
#define SIERPDOM_PRODUCT_HPP

#include <string>
#include <utility>
#include <vector>

#include "sierpdom/graph.hpp"

namespace sierpdom {

class UnsupportedStructureError : public std::runtime_error {
public:
    explicit UnsupportedStructureError(const std::string& msg) : std::runtime_error(msg) {}
};

// Total map f: V(G) -> V(H); values[i-1] = f(g_i), 1-based on both sides.
struct FunctionAssignment {
    std::vector<Vertex> values;

    int domain_size() const { return static_cast<int>(values.size()); }
    Vertex operator()(Vertex g) const { return values[g - 1]; }

    friend bool operator==(const FunctionAssignment&, const FunctionAssignment&) = default;
};

// JSON form {"n": int, "f": [int,...]}.
FunctionAssignment assignment_from_json(const std::string& text);
std::string assignment_to_json(const FunctionAssignment& f);

struct ProductVertex {
    Vertex g;
    Vertex h;

    friend bool operator==(const ProductVertex&, const ProductVertex&) = default;
    friend auto operator<=>(const ProductVertex&, const ProductVertex&) = default;
};

// G (x)_f H: one copy of H per vertex of G, plus the connecting edge
// (g,f(g'))(g',f(g)) for every edge gg' of G. Flat labels are row-major:
// (g,h) -> (g-1)*n(H) + h.
class SierpinskiProduct {
public:
    SierpinskiProduct(Graph base, Graph fiber, FunctionAssignment f);

    const Graph& graph() const { return graph_; }
    const Graph& base() const { return base_; }
    const Graph& fiber() const { return fiber_; }
    const FunctionAssignment& assignment() const { return f_; }

    Vertex flat(ProductVertex pv) const;
    ProductVertex unflat(Vertex v) const;

    // One type-2 edge per edge of G, as flat endpoint pairs.
    const EdgeList& connecting_edges() const { return connecting_; }

    // For cycle G: (y_i, x_i) with y_i = (g_i, f(g_{i-1})), x_i = (g_i, f(g_{i+1})).
    std::pair<ProductVertex, ProductVertex> connecting_vertices(int layer) const;

    // Induced subgraph on {g} x V(H), relabeled 1..n(H) in h order.
    Graph layer_subgraph(Vertex g) const;

    // DOT export with "(g,h)" coordinates in comments.
    std::string to_dot() const;

private:
    Graph base_;
    Graph fiber_;
    FunctionAssignment f_;
    Graph graph_;
    EdgeList connecting_;
};

SierpinskiProduct product(const Graph& G, const Graph& H, const FunctionAssignment& f);

}  // namespace sierpdom

#endif
