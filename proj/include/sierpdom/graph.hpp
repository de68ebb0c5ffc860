#ifndef SIERPDOM_GRAPH_HPP
#define SIERPDOM_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sierpdom {

// Vertex labels are 1-based: a graph of order n has vertices exactly 1..n.
using Vertex = int;

using EdgeList = std::vector<std::pair<Vertex, Vertex>>;

class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& msg) : std::runtime_error(msg) {}
};

// 1-based wraparound: mod_star(t, n) = (t-1) mod n + 1, defined for any t.
inline int mod_star(long long t, int n) {
    return static_cast<int>(((t - 1) % n + n) % n) + 1;
}

// Immutable simple undirected graph. Construct through from_edges or the
// family builders below; all derived graphs are new values.
class Graph {
public:
    Graph() = default;

    // Validates labels in [1,n], rejects self-loops and duplicate edges.
    static Graph from_edges(int n, const EdgeList& edges);

    int order() const { return n_; }
    int size() const { return m_; }
    bool has_vertex(Vertex v) const { return v >= 1 && v <= n_; }

    const std::vector<Vertex>& neighbors(Vertex v) const;
    bool adjacent(Vertex u, Vertex v) const;
    int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
    int max_degree() const;

    // All edges with u < v, sorted lexicographically.
    EdgeList edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;  // index 0 unused; lists sorted
};

Graph build_cycle(int n);
Graph build_path(int n);
Graph build_complete(int n);

// Circulant C_n<L>: vertex i adjacent to i +- j (mod* n) for every j in L.
// Requires 1 <= j <= floor(n/2) for each jump, L nonempty and duplicate free.
Graph build_circulant(int n, const std::vector<int>& jumps);

// Shortest-path length; nullopt when u and v lie in different components.
std::optional<int> distance(const Graph& g, Vertex u, Vertex v);

struct InducedSubgraph {
    Graph graph;
    // original_label[w] = label in the parent graph of the vertex now named w;
    // index 0 unused.
    std::vector<Vertex> original_label;
};

// G - S with contiguous relabeling and a back-mapping to the parent labels.
InducedSubgraph delete_vertices(const Graph& g, const std::vector<Vertex>& to_delete);

// Edge set equals build_cycle(n): i ~ i mod* n + 1 and nothing else.
bool is_cycle_layout(const Graph& g);

// Edge set invariant under the rotation i -> i mod* n + 1. Holds for the
// cycle, complete and circulant builders; justifies fixing f(g_1) in
// orbit-reduced search.
bool is_circulant_layout(const Graph& g);

}  // namespace sierpdom

#endif
