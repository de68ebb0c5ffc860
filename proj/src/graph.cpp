#include "sierpdom/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace sierpdom {

Graph Graph::from_edges(int n, const EdgeList& edges) {
    if (n < 1)
        throw GraphError("graph order must be positive, got " + std::to_string(n));
    Graph g;
    g.n_ = n;
    g.adj_.assign(n + 1, {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw GraphError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") out of range for order " + std::to_string(n));
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        std::pair<Vertex, Vertex> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw GraphError("duplicate edge (" + std::to_string(key.first) + "," +
                             std::to_string(key.second) + ")");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& list : g.adj_) std::sort(list.begin(), list.end());
    g.m_ = static_cast<int>(seen.size());
    return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (!has_vertex(v))
        throw GraphError("vertex " + std::to_string(v) + " out of range [1," +
                         std::to_string(n_) + "]");
    return adj_[v];
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    const auto& list = neighbors(u);
    if (!has_vertex(v))
        throw GraphError("vertex " + std::to_string(v) + " out of range [1," +
                         std::to_string(n_) + "]");
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const {
    int d = 0;
    for (Vertex v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

EdgeList Graph::edges() const {
    EdgeList out;
    out.reserve(m_);
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph build_cycle(int n) {
    if (n < 3)
        throw GraphError("cycle order must be at least 3, got " + std::to_string(n));
    EdgeList edges;
    for (Vertex i = 1; i <= n; ++i) edges.emplace_back(i, mod_star(i + 1, n));
    return Graph::from_edges(n, edges);
}

Graph build_path(int n) {
    if (n < 1)
        throw GraphError("path order must be at least 1, got " + std::to_string(n));
    EdgeList edges;
    for (Vertex i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edges(n, edges);
}

Graph build_complete(int n) {
    if (n < 1)
        throw GraphError("complete graph order must be at least 1, got " + std::to_string(n));
    EdgeList edges;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

Graph build_circulant(int n, const std::vector<int>& jumps) {
    if (n < 3)
        throw GraphError("circulant order must be at least 3, got " + std::to_string(n));
    if (jumps.empty()) throw GraphError("circulant jump list must be nonempty");
    std::set<int> seen_jumps;
    for (int j : jumps) {
        if (j < 1 || j > n / 2)
            throw GraphError("circulant jump " + std::to_string(j) + " outside [1," +
                             std::to_string(n / 2) + "]");
        if (!seen_jumps.insert(j).second)
            throw GraphError("duplicate circulant jump " + std::to_string(j));
    }
    std::set<std::pair<Vertex, Vertex>> edge_set;
    for (Vertex i = 1; i <= n; ++i)
        for (int j : seen_jumps) {
            Vertex a = i, b = mod_star(i + j, n);
            if (a > b) std::swap(a, b);
            edge_set.insert({a, b});
        }
    return Graph::from_edges(n, EdgeList(edge_set.begin(), edge_set.end()));
}

std::optional<int> distance(const Graph& g, Vertex u, Vertex v) {
    if (!g.has_vertex(u) || !g.has_vertex(v))
        throw GraphError("distance: vertex out of range");
    if (u == v) return 0;
    std::vector<int> dist(g.order() + 1, -1);
    std::queue<Vertex> q;
    dist[u] = 0;
    q.push(u);
    while (!q.empty()) {
        Vertex w = q.front();
        q.pop();
        for (Vertex x : g.neighbors(w)) {
            if (dist[x] >= 0) continue;
            dist[x] = dist[w] + 1;
            if (x == v) return dist[x];
            q.push(x);
        }
    }
    return std::nullopt;
}

InducedSubgraph delete_vertices(const Graph& g, const std::vector<Vertex>& to_delete) {
    std::vector<char> gone(g.order() + 1, 0);
    for (Vertex v : to_delete) {
        if (!g.has_vertex(v))
            throw GraphError("delete_vertices: vertex " + std::to_string(v) + " out of range");
        gone[v] = 1;
    }
    std::vector<Vertex> new_of(g.order() + 1, 0);
    InducedSubgraph out;
    out.original_label.push_back(0);
    int next = 0;
    for (Vertex v = 1; v <= g.order(); ++v) {
        if (gone[v]) continue;
        new_of[v] = ++next;
        out.original_label.push_back(v);
    }
    if (next == 0)
        throw GraphError("delete_vertices: cannot delete every vertex");
    EdgeList edges;
    for (const auto& [u, v] : g.edges())
        if (!gone[u] && !gone[v]) edges.emplace_back(new_of[u], new_of[v]);
    out.graph = Graph::from_edges(next, edges);
    return out;
}

bool is_cycle_layout(const Graph& g) {
    int n = g.order();
    if (n < 3 || g.size() != n) return false;
    for (Vertex i = 1; i <= n; ++i)
        if (!g.adjacent(i, mod_star(i + 1, n))) return false;
    return true;
}

bool is_circulant_layout(const Graph& g) {
    int n = g.order();
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v : g.neighbors(u))
            if (!g.adjacent(mod_star(u + 1, n), mod_star(v + 1, n))) return false;
    return true;
}

}  // namespace sierpdom
