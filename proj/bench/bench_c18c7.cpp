// scratch benchmark: gamma of the C18 (x)_f C7 example from the concluding remarks
#include <chrono>
#include <cstdio>

#include "sierpdom/domination.hpp"
#include "sierpdom/graph.hpp"
#include "sierpdom/product.hpp"

using namespace sierpdom;

int main() {
    Graph G = build_cycle(18), H = build_cycle(7);
    FunctionAssignment f{{4, 2, 2, 4, 4, 2, 2, 7, 7, 5, 5, 3, 3, 1, 1, 6, 6, 4}};
    auto P = product(G, H, f);
    std::printf("product: n=%d m=%d\n", P.graph().order(), P.graph().size());
    auto t0 = std::chrono::steady_clock::now();
    auto cert = solve(DominationInstance{P.graph(), {}, {}, {}});
    auto t1 = std::chrono::steady_clock::now();
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    std::printf("gamma=%d nodes=%lld millis=%lld\n", cert.gamma, cert.nodes_explored, (long long)ms);
    return 0;
}
