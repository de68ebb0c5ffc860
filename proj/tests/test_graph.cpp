#include <doctest.h>

#include <random>
#include <set>

#include "sierpdom/graph.hpp"

using namespace sierpdom;

TEST_CASE("mod_star wraps 1-based indices") {
    CHECK(mod_star(1, 5) == 1);
    CHECK(mod_star(5, 5) == 5);
    CHECK(mod_star(6, 5) == 1);
    CHECK(mod_star(0, 5) == 5);
    CHECK(mod_star(-1, 5) == 4);
    CHECK(mod_star(12, 7) == 5);
}

TEST_CASE("build_cycle basics") {
    Graph c5 = build_cycle(5);
    CHECK(c5.order() == 5);
    CHECK(c5.size() == 5);
    for (Vertex v = 1; v <= 5; ++v) CHECK(c5.degree(v) == 2);

    CHECK(build_cycle(3) == build_complete(3));
    CHECK(distance(build_cycle(7), 1, 5) == 3);
    CHECK_THROWS_AS(build_cycle(2), GraphError);
}

TEST_CASE("build_path basics") {
    Graph p1 = build_path(1);
    CHECK(p1.order() == 1);
    CHECK(p1.size() == 0);

    Graph p6 = build_path(6);
    std::vector<int> degs;
    for (Vertex v = 1; v <= 6; ++v) degs.push_back(p6.degree(v));
    CHECK(degs == std::vector<int>{1, 2, 2, 2, 2, 1});

    CHECK(distance(build_path(4), 1, 4) == 3);
    CHECK_THROWS_AS(build_path(0), GraphError);
}

TEST_CASE("build_complete basics") {
    CHECK(build_complete(4).size() == 6);
    CHECK(build_complete(1).size() == 0);
    Graph k5 = build_complete(5);
    for (Vertex u = 1; u <= 5; ++u)
        for (Vertex v = 1; v <= 5; ++v) CHECK(*distance(k5, u, v) <= 1);
}

TEST_CASE("build_circulant basics") {
    CHECK(build_circulant(7, {1}) == build_cycle(7));

    Graph c11 = build_circulant(11, {1, 2});
    CHECK(c11.size() == 22);
    for (Vertex v = 1; v <= 11; ++v) CHECK(c11.degree(v) == 4);

    Graph matching = build_circulant(6, {3});
    CHECK(matching.size() == 3);
    for (Vertex v = 1; v <= 6; ++v) CHECK(matching.degree(v) == 1);

    CHECK_THROWS_AS(build_circulant(7, {}), GraphError);
    CHECK_THROWS_AS(build_circulant(7, {0}), GraphError);
    CHECK_THROWS_AS(build_circulant(7, {4}), GraphError);
    CHECK_THROWS_AS(build_circulant(8, {2, 2}), GraphError);
}

TEST_CASE("circulant with jump list {1} equals the cycle for all small n") {
    for (int n = 3; n <= 30; ++n) CHECK(build_circulant(n, {1}) == build_cycle(n));
}

TEST_CASE("distance") {
    CHECK(distance(build_cycle(8), 1, 5) == 4);
    Graph c9 = build_cycle(9);
    for (Vertex v = 1; v <= 9; ++v) CHECK(distance(c9, v, v) == 0);

    // two disjoint P_2
    Graph two = Graph::from_edges(4, {{1, 2}, {3, 4}});
    CHECK(!distance(two, 1, 3).has_value());
    CHECK(distance(two, 3, 4) == 1);

    CHECK_THROWS_AS(distance(c9, 0, 1), GraphError);
    CHECK_THROWS_AS(distance(c9, 1, 10), GraphError);
}

TEST_CASE("delete_vertices") {
    Graph c7 = build_cycle(7);
    CHECK(delete_vertices(c7, {1}).graph == build_path(6));
    CHECK(delete_vertices(c7, {1, 2}).graph == build_path(5));
    CHECK(delete_vertices(c7, {1, 4}).graph ==
          Graph::from_edges(5, {{1, 2}, {3, 4}, {4, 5}}));  // P_2 + P_3

    InducedSubgraph sub = delete_vertices(c7, {3});
    CHECK(sub.original_label == std::vector<Vertex>{0, 1, 2, 4, 5, 6, 7});

    CHECK_THROWS_AS(delete_vertices(c7, {8}), GraphError);
    CHECK_THROWS_AS(delete_vertices(build_path(1), {1}), GraphError);
}

TEST_CASE("deletion composes under the back-mapping") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50; ++t) {
        int n = 4 + static_cast<int>(rng() % 8);
        EdgeList edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        Vertex a = 1 + static_cast<int>(rng() % n);
        InducedSubgraph first = delete_vertices(g, {a});
        Vertex b_new = 1 + static_cast<int>(rng() % first.graph.order());
        Vertex b_old = first.original_label[b_new];
        InducedSubgraph second = delete_vertices(first.graph, {b_new});
        CHECK(second.graph == delete_vertices(g, {a, b_old}).graph);
    }
}

TEST_CASE("handshake lemma on builders and random graphs") {
    std::mt19937_64 rng(11);
    auto degree_sum = [](const Graph& g) {
        long long sum = 0;
        for (Vertex v = 1; v <= g.order(); ++v) sum += g.degree(v);
        return sum;
    };
    for (int n = 3; n <= 10; ++n) {
        CHECK(degree_sum(build_cycle(n)) == 2LL * build_cycle(n).size());
        CHECK(degree_sum(build_path(n)) == 2LL * build_path(n).size());
        CHECK(degree_sum(build_complete(n)) == 2LL * build_complete(n).size());
    }
    for (int t = 0; t < 30; ++t) {
        int n = 1 + static_cast<int>(rng() % 12);
        EdgeList edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        CHECK(degree_sum(g) == 2LL * g.size());
    }
}

TEST_CASE("from_edges validation") {
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 2}, {2, 1}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(3, {{1, 4}}), GraphError);
    CHECK_THROWS_AS(Graph::from_edges(0, {}), GraphError);
    CHECK_THROWS_AS(build_cycle(5).neighbors(6), GraphError);
}

TEST_CASE("layout recognition") {
    CHECK(is_cycle_layout(build_cycle(6)));
    CHECK(!is_cycle_layout(build_path(6)));
    CHECK(is_cycle_layout(build_complete(3)));  // C_3 = K_3
    CHECK(!is_cycle_layout(build_complete(4)));

    CHECK(is_circulant_layout(build_cycle(9)));
    CHECK(is_circulant_layout(build_complete(5)));
    CHECK(is_circulant_layout(build_circulant(10, {2, 5})));
    CHECK(!is_circulant_layout(build_path(4)));
    CHECK(!is_circulant_layout(Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}})));
}
