#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>

#include "sierpdom/codecs.hpp"
#include "sierpdom/constructions.hpp"
#include "sierpdom/product.hpp"

using namespace sierpdom;

namespace {

FunctionAssignment random_assignment(std::mt19937_64& rng, int nG, int nH) {
    FunctionAssignment f;
    for (int i = 0; i < nG; ++i) f.values.push_back(1 + static_cast<int>(rng() % nH));
    return f;
}

// components of the product after dropping the type-2 edges
std::vector<std::vector<Vertex>> layer_components(const SierpinskiProduct& P) {
    const Graph& g = P.graph();
    std::set<std::pair<Vertex, Vertex>> skip;
    for (auto [a, b] : P.connecting_edges()) skip.insert({std::min(a, b), std::max(a, b)});
    std::vector<int> comp(g.order() + 1, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 1; s <= g.order(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            out[id].push_back(v);
            for (Vertex w : g.neighbors(v)) {
                if (comp[w] >= 0) continue;
                if (skip.count({std::min(v, w), std::max(v, w)})) continue;
                comp[w] = id;
                q.push(w);
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("product with a K_1 base is a single H layer") {
    Graph H = build_cycle(6);
    SierpinskiProduct P = product(build_complete(1), H, FunctionAssignment{{3}});
    CHECK(P.graph() == H);
    CHECK(P.connecting_edges().empty());
}

TEST_CASE("C_18 (x) C_7 has the forced vertex and edge counts") {
    SierpinskiProduct P = product(build_cycle(18), build_cycle(7), f_c18_c7());
    CHECK(P.graph().order() == 126);
    CHECK(P.graph().size() == 18 * 7 + 18);
}

TEST_CASE("constant assignment on C_3 (x) C_3 makes the connectors a triangle") {
    SierpinskiProduct P = product(build_cycle(3), build_cycle(3), FunctionAssignment{{1, 1, 1}});
    CHECK(P.graph().order() == 9);
    CHECK(P.graph().size() == 12);
    Vertex a = P.flat({1, 1}), b = P.flat({2, 1}), c = P.flat({3, 1});
    CHECK(P.graph().adjacent(a, b));
    CHECK(P.graph().adjacent(a, c));
    CHECK(P.graph().adjacent(b, c));
}

TEST_CASE("connecting vertices on cycle bases") {
    SierpinskiProduct P44 = product(build_cycle(4), build_cycle(4), f_3k1(4));
    auto [y1, x1] = P44.connecting_vertices(1);
    CHECK(y1 == ProductVertex{1, 3});
    CHECK(x1 == ProductVertex{1, 1});

    SierpinskiProduct Pc = product(build_cycle(5), build_cycle(6), f_constant(build_cycle(5), build_cycle(6), 2));
    for (int i = 1; i <= 5; ++i) {
        auto [y, x] = Pc.connecting_vertices(i);
        CHECK(y == ProductVertex{i, 2});
        CHECK(x == ProductVertex{i, 2});
    }

    SierpinskiProduct P54 = product(build_cycle(5), build_cycle(4), f_3k1(5));
    auto [y, x] = P54.connecting_vertices(1);
    CHECK(y == ProductVertex{1, 1});
    CHECK(x == ProductVertex{1, 1});

    CHECK_THROWS_AS(P44.connecting_vertices(5), GraphError);
    SierpinskiProduct Ppath = product(build_path(4), build_cycle(3), FunctionAssignment{{1, 1, 1, 1}});
    CHECK_THROWS_AS(Ppath.connecting_vertices(1), UnsupportedStructureError);
}

TEST_CASE("layer subgraphs reproduce H") {
    Graph H = build_path(4);
    SierpinskiProduct P = product(build_cycle(3), H, FunctionAssignment{{2, 4, 1}});
    for (Vertex g = 1; g <= 3; ++g) CHECK(P.layer_subgraph(g) == H);
    CHECK_THROWS_AS(P.layer_subgraph(4), GraphError);
}

TEST_CASE("flat labeling is row-major and round-trips") {
    SierpinskiProduct P = product(build_cycle(3), build_cycle(5), FunctionAssignment{{1, 2, 3}});
    CHECK(P.flat({1, 1}) == 1);
    CHECK(P.flat({2, 1}) == 6);
    CHECK(P.flat({3, 5}) == 15);
    for (Vertex v = 1; v <= 15; ++v) CHECK(P.flat(P.unflat(v)) == v);
    CHECK_THROWS_AS(P.flat({4, 1}), GraphError);
}

TEST_CASE("assignment validation") {
    CHECK_THROWS_AS(product(build_cycle(3), build_cycle(4), FunctionAssignment{{1, 2}}), GraphError);
    CHECK_THROWS_AS(product(build_cycle(3), build_cycle(4), FunctionAssignment{{1, 2, 5}}),
                    GraphError);
}

TEST_CASE("assignment JSON round trip") {
    FunctionAssignment f{{1, 2, 1}};
    CHECK(assignment_to_json(f) == R"({"n":3,"f":[1,2,1]})");
    CHECK(assignment_from_json(assignment_to_json(f)) == f);
    CHECK_THROWS_AS(assignment_from_json("nope"), ParseError);
    CHECK_THROWS_AS(assignment_from_json(R"({"n":3,"f":[1,2]})"), ParseError);
}

TEST_CASE("product structure invariants over random assignments") {
    std::mt19937_64 rng(99);
    for (int t = 0; t < 100; ++t) {
        int nG = 2 + static_cast<int>(rng() % 5);
        int nH = 2 + static_cast<int>(rng() % 5);
        Graph G = (nG >= 3 && (rng() & 1)) ? build_cycle(nG) : build_path(nG);
        Graph H = (nH >= 3 && (rng() & 1)) ? build_cycle(nH) : build_path(nH);
        FunctionAssignment f = random_assignment(rng, G.order(), H.order());
        SierpinskiProduct P = product(G, H, f);

        CHECK(P.graph().order() == G.order() * H.order());
        CHECK(P.graph().size() == G.order() * H.size() + G.size());
        CHECK(static_cast<int>(P.connecting_edges().size()) == G.size());

        auto comps = layer_components(P);
        CHECK(static_cast<int>(comps.size()) == G.order());
        for (Vertex g = 1; g <= G.order(); ++g) CHECK(P.layer_subgraph(g) == H);

        // every product vertex sits in at most deg_G(g) connecting edges
        std::vector<int> incident(P.graph().order() + 1, 0);
        for (auto [a, b] : P.connecting_edges()) {
            ++incident[a];
            ++incident[b];
        }
        for (Vertex v = 1; v <= P.graph().order(); ++v)
            CHECK(incident[v] <= G.degree(P.unflat(v).g));

        if (is_cycle_layout(G)) {
            for (int i = 1; i <= G.order(); ++i) {
                auto [y_next, x_i] = std::pair{P.connecting_vertices(mod_star(i + 1, G.order())).first,
                                               P.connecting_vertices(i).second};
                CHECK(P.graph().adjacent(P.flat(x_i), P.flat(y_next)));
            }
        }
    }
}

TEST_CASE("product DOT export carries (g,h) coordinates") {
    SierpinskiProduct P = product(build_cycle(3), build_path(2), FunctionAssignment{{1, 2, 1}});
    std::string dot = P.to_dot();
    CHECK(dot.find("// (1,1)") != std::string::npos);
    CHECK(dot.find("// (3,2)") != std::string::npos);
}
