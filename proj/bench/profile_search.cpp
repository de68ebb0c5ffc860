#include <chrono>
#include <cstdio>
#include "sierpdom/search.hpp"
#include "sierpdom/domination.hpp"
using namespace sierpdom;
using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

int main() {
    for (auto [n, m] : {std::pair{6,8}, {6,5}, {7,6}, {6,7}}) {
        auto t0 = Clock::now();
        auto [lo, hi] = sierpinski_gamma_minmax(build_cycle(n), build_cycle(m),
                                                SearchStrategy::distance_sequence, {});
        std::printf("(%d,%d): min=%d max=%d classes=%lld  %lld ms\n", n, m, lo.value, hi.value,
                    lo.candidates_evaluated, ms_since(t0));
    }
    // worst-case single product: which class is slowest?
    auto classes = enumerate_distance_sequences(6, 8);
    std::printf("classes(6,8)=%zu\n", classes.size());
    long long worst = 0; size_t worst_i = 0; long long total_nodes = 0;
    for (size_t i = 0; i < classes.size(); ++i) {
        auto P = product(build_cycle(6), build_cycle(8), classes[i].realizing);
        auto t0 = Clock::now();
        auto cert = solve(DominationInstance{P.graph(), {}, {}, {}});
        total_nodes += cert.nodes_explored;
        auto dt = ms_since(t0);
        if (dt > worst) { worst = dt; worst_i = i; }
    }
    std::printf("worst class %zu: %lld ms; total nodes %lld\n", worst_i, worst, total_nodes);
    return 0;
}
