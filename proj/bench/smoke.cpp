#include <cstdio>
#include <random>
#include "sierpdom/domination.hpp"
#include "sierpdom/graph.hpp"
using namespace sierpdom;
int main() {
    // closed forms
    for (int n = 3; n <= 12; ++n) {
        int expect = (n + 2) / 3;
        if (gamma(build_cycle(n)) != expect) { std::printf("FAIL C_%d\n", n); return 1; }
        if (gamma(build_path(n)) != expect) { std::printf("FAIL P_%d\n", n); return 1; }
    }
    // random oracle agreement incl. constraints
    std::mt19937_64 rng(12345);
    auto below = [&](int k) { return (int)(rng() % (unsigned)k); };
    for (int t = 0; t < 300; ++t) {
        int n = 1 + below(14);
        EdgeList edges;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v)
                if (rng() & 1) edges.emplace_back(u, v);
        Graph g = Graph::from_edges(n, edges);
        DominationInstance inst{g, {}, {}, {}};
        for (int i = below(3); i > 0; --i) inst.pre_dominated.push_back(1 + below(n));
        if (n >= 2) {
            for (int i = below(3); i > 0; --i) {
                int v = 1 + below(n);
                bool clash = false;
                for (int d : inst.deleted) if (d == v) clash = true;
                if (!clash) inst.forced_in.push_back(v);
            }
            int remaining = n;
            for (int i = below(3); i > 0 && remaining > 1; --i) {
                int v = 1 + below(n);
                bool clash = false;
                for (int f : inst.forced_in) if (f == v) clash = true;
                for (int d : inst.deleted) if (d == v) clash = true;
                if (!clash) { inst.deleted.push_back(v); --remaining; }
            }
        }
        int a = solve(inst).gamma;
        int b = brute_force_gamma(inst);
        if (a != b) { std::printf("MISMATCH t=%d n=%d solve=%d brute=%d\n", t, n, a, b); return 1; }
    }
    std::printf("smoke OK\n");
    return 0;
}
