#include "sierpdom/domination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>

namespace sierpdom {

namespace {

constexpr int kWords = kSolverVertexCap / 64;

// Fixed-width bit vector over vertex indices 0..511.
struct Bits {
    std::array<std::uint64_t, kWords> w{};

    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void reset(int i) { w[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }

    bool empty() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }

    int count() const {
        int c = 0;
        for (auto x : w) c += std::popcount(x);
        return c;
    }

    bool intersects(const Bits& o) const {
        for (int i = 0; i < kWords; ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }

    Bits& operator|=(const Bits& o) {
        for (int i = 0; i < kWords; ++i) w[i] |= o.w[i];
        return *this;
    }

    Bits& operator&=(const Bits& o) {
        for (int i = 0; i < kWords; ++i) w[i] &= o.w[i];
        return *this;
    }

    Bits and_not(const Bits& o) const {
        Bits r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & ~o.w[i];
        return r;
    }

    Bits intersect(const Bits& o) const {
        Bits r;
        for (int i = 0; i < kWords; ++i) r.w[i] = w[i] & o.w[i];
        return r;
    }

    int count_and(const Bits& o) const {
        int c = 0;
        for (int i = 0; i < kWords; ++i) c += std::popcount(w[i] & o.w[i]);
        return c;
    }

    template <typename Fn>
    void for_each(Fn fn) const {
        for (int i = 0; i < kWords; ++i) {
            std::uint64_t x = w[i];
            while (x) {
                fn(i * 64 + std::countr_zero(x));
                x &= x - 1;
            }
        }
    }
};

constexpr int kInfeasible = 1 << 28;

struct Solver {
    int n;
    Bits selectable;               // not deleted
    std::vector<Bits> cover;      // cover[v] = N[v] in the deleted-reduced graph
    Bits need;                     // vertices that must end up dominated

    long long nodes = 0;
    int best = kInfeasible;
    std::vector<int> best_set;     // 0-based
    std::vector<int> chosen;       // current branch, 0-based

    explicit Solver(const DominationInstance& inst) {
        const Graph& g = inst.graph;
        n = g.order();
        std::vector<char> deleted(n + 1, 0), predom(n + 1, 0);
        for (Vertex v : inst.deleted) deleted[v] = 1;
        for (Vertex v : inst.pre_dominated) predom[v] = 1;
        for (int v = 1; v <= n; ++v)
            if (!deleted[v]) selectable.set(v - 1);
        cover.assign(n, Bits{});
        for (Vertex v = 1; v <= n; ++v) {
            if (deleted[v]) continue;
            cover[v - 1].set(v - 1);
            for (Vertex u : g.neighbors(v))
                if (!deleted[u]) cover[v - 1].set(u - 1);
        }
        for (Vertex v = 1; v <= n; ++v)
            if (!deleted[v] && !predom[v]) need.set(v - 1);
    }

    // Greedy 2-packing (uncovered vertices with pairwise disjoint dominator
    // sets) combined with a prefix-sum coverage bound: t more vertices can
    // cover at most the t largest useful coverages.
    int lower_bound(const Bits& uncovered, const Bits& banned,
                    const std::vector<int>& useful_counts) const {
        std::vector<std::pair<int, int>> order;  // (candidate count, vertex)
        Bits pool = selectable.and_not(banned);
        uncovered.for_each([&](int u) {
            int c = cover[u].count_and(pool);
            order.emplace_back(c, u);
        });
        std::sort(order.begin(), order.end());
        if (!order.empty() && order.front().first == 0) return kInfeasible;
        Bits used;
        int packing = 0;
        for (const auto& [c, u] : order) {
            Bits cov = cover[u].intersect(pool);
            if (!cov.intersects(used)) {
                ++packing;
                used |= cov;
            }
        }
        int need = uncovered.count();
        int prefix = 0, covered = 0;
        for (int c : useful_counts) {  // sorted descending by caller
            if (covered >= need) break;
            covered += c;
            ++prefix;
        }
        if (covered < need) return kInfeasible;
        return std::max(packing, prefix);
    }

    void seed_greedy(Bits uncovered, int base_count) {
        std::vector<int> set = chosen;
        int count = base_count;
        while (!uncovered.empty()) {
            int best_v = -1, best_c = 0;
            selectable.for_each([&](int v) {
                int c = cover[v].count_and(uncovered);
                if (c > best_c) {
                    best_c = c;
                    best_v = v;
                }
            });
            set.push_back(best_v);
            ++count;
            uncovered = uncovered.and_not(cover[best_v]);
        }
        best = count;
        best_set = set;
    }

    // Bans candidates that cover nothing new or whose useful coverage is
    // contained in another candidate's (with the smaller label kept on ties);
    // a swap argument keeps at least one optimum of the subproblem intact.
    std::vector<int> subsumption_reduce(const Bits& uncovered, Bits& banned) const {
        struct Entry {
            int v;
            int cnt;
            Bits useful;
        };
        std::vector<Entry> pool;
        selectable.and_not(banned).for_each([&](int v) {
            Bits useful = cover[v].intersect(uncovered);
            int c = useful.count();
            if (c == 0)
                banned.set(v);
            else
                pool.push_back({v, c, useful});
        });
        std::vector<int> counts;
        counts.reserve(pool.size());
        for (const auto& a : pool) {
            bool subsumed = false;
            for (const auto& b : pool) {
                if (a.v == b.v || a.cnt > b.cnt) continue;
                if (a.useful.and_not(b.useful).empty() && (a.cnt < b.cnt || b.v < a.v)) {
                    subsumed = true;
                    break;
                }
            }
            if (subsumed)
                banned.set(a.v);
            else
                counts.push_back(a.cnt);
        }
        std::sort(counts.begin(), counts.end(), std::greater<>());
        return counts;
    }

    void dfs(const Bits& uncovered, Bits banned, int count) {
        ++nodes;
        if (uncovered.empty()) {
            if (count < best) {
                best = count;
                best_set = chosen;
            }
            return;
        }
        if (count + 1 >= best) return;
        std::vector<int> useful_counts = subsumption_reduce(uncovered, banned);
        int lb = lower_bound(uncovered, banned, useful_counts);
        if (count + lb >= best) return;

        // branch vertex: fewest remaining candidate dominators, then label
        int pick = -1, pick_c = kInfeasible;
        Bits candidates_pool = selectable.and_not(banned);
        uncovered.for_each([&](int u) {
            int c = cover[u].count_and(candidates_pool);
            if (c < pick_c) {
                pick_c = c;
                pick = u;
            }
        });
        Bits cands = cover[pick].intersect(candidates_pool);
        std::vector<int> cand_list;
        cands.for_each([&](int v) { cand_list.push_back(v); });
        for (int v : cand_list) {
            chosen.push_back(v);
            dfs(uncovered.and_not(cover[v]), banned, count + 1);
            chosen.pop_back();
            banned.set(v);  // later children take solutions avoiding v
        }
    }
};

std::uint32_t closed_mask(const Graph& g, Vertex v, const std::vector<char>& deleted) {
    std::uint32_t m = std::uint32_t(1) << (v - 1);
    for (Vertex u : g.neighbors(v))
        if (!deleted[u]) m |= std::uint32_t(1) << (u - 1);
    return m;
}

}  // namespace

void DominationInstance::validate() const {
    for (const auto* set : {&forced_in, &pre_dominated, &deleted})
        for (Vertex v : *set)
            if (!graph.has_vertex(v))
                throw GraphError("constraint vertex " + std::to_string(v) + " out of range");
    for (Vertex v : forced_in)
        if (std::find(deleted.begin(), deleted.end(), v) != deleted.end())
            throw GraphError("vertex " + std::to_string(v) + " both forced and deleted");
}

DominationCertificate solve(const DominationInstance& inst) {
    inst.validate();
    int n = inst.graph.order();
    if (n > kSolverVertexCap)
        throw SolverCapError("instance has " + std::to_string(n) + " vertices; solver cap is " +
                             std::to_string(kSolverVertexCap));
    if (n == static_cast<int>(inst.deleted.size()))
        throw GraphError("cannot delete every vertex");

    Solver s(inst);
    Bits uncovered = s.need;
    std::vector<int> forced;
    for (Vertex v : inst.forced_in) forced.push_back(v - 1);
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    for (int v : forced) uncovered = uncovered.and_not(s.cover[v]);
    s.chosen = forced;

    s.seed_greedy(uncovered, static_cast<int>(forced.size()));
    s.dfs(uncovered, Bits{}, static_cast<int>(forced.size()));

    if (s.best >= kInfeasible)
        throw InfeasibleError("no dominating set exists under the given constraints");

    DominationCertificate cert;
    cert.gamma = s.best;
    for (int v : s.best_set) cert.witness.push_back(v + 1);
    std::sort(cert.witness.begin(), cert.witness.end());
    cert.instance = inst;
    cert.nodes_explored = s.nodes;
    if (!validate_certificate(cert))
        throw std::logic_error("solver produced an invalid certificate");
    return cert;
}

int gamma(const Graph& g) { return solve(DominationInstance{g, {}, {}, {}}).gamma; }

int brute_force_gamma(const DominationInstance& inst, int cap) {
    inst.validate();
    const Graph& g = inst.graph;
    int n = g.order();
    if (cap > 26) cap = 26;
    if (n > cap)
        throw SolverCapError("brute force refused: " + std::to_string(n) + " vertices exceeds cap " +
                             std::to_string(cap));

    std::vector<char> deleted(n + 1, 0), predom(n + 1, 0), forced(n + 1, 0);
    for (Vertex v : inst.deleted) deleted[v] = 1;
    for (Vertex v : inst.pre_dominated) predom[v] = 1;
    for (Vertex v : inst.forced_in) forced[v] = 1;

    std::uint32_t target = 0;
    for (Vertex v = 1; v <= n; ++v)
        if (!deleted[v] && !predom[v]) target |= std::uint32_t(1) << (v - 1);

    std::uint32_t base_cover = 0;
    int forced_count = 0;
    std::vector<std::uint32_t> pool_cover;
    std::vector<Vertex> pool;
    for (Vertex v = 1; v <= n; ++v) {
        if (deleted[v]) continue;
        if (forced[v]) {
            base_cover |= closed_mask(g, v, deleted);
            ++forced_count;
        } else {
            pool.push_back(v);
            pool_cover.push_back(closed_mask(g, v, deleted));
        }
    }
    if ((target & ~base_cover) == 0) return forced_count;

    int p = static_cast<int>(pool.size());
    for (int r = 1; r <= p; ++r) {
        // Gosper's hack over r-subsets of the pool
        std::uint64_t sub = (std::uint64_t(1) << r) - 1;
        std::uint64_t limit = std::uint64_t(1) << p;
        while (sub < limit) {
            std::uint32_t cov = base_cover;
            std::uint64_t bits = sub;
            while (bits) {
                int i = std::countr_zero(bits);
                cov |= pool_cover[i];
                bits &= bits - 1;
            }
            if ((target & ~cov) == 0) return forced_count + r;
            std::uint64_t c = sub & (~sub + 1);
            std::uint64_t rr = sub + c;
            sub = (((rr ^ sub) >> 2) / c) | rr;
        }
    }
    throw InfeasibleError("no dominating set exists under the given constraints");
}

int brute_force_gamma(const Graph& g, int cap) {
    return brute_force_gamma(DominationInstance{g, {}, {}, {}}, cap);
}

bool validate_certificate(const DominationCertificate& cert) {
    const DominationInstance& inst = cert.instance;
    const Graph& g = inst.graph;
    std::vector<char> deleted(g.order() + 1, 0), predom(g.order() + 1, 0),
        in_witness(g.order() + 1, 0);
    for (Vertex v : inst.deleted) deleted[v] = 1;
    for (Vertex v : inst.pre_dominated) predom[v] = 1;
    for (Vertex v : cert.witness) {
        if (!g.has_vertex(v) || deleted[v] || in_witness[v]) return false;
        in_witness[v] = 1;
    }
    for (Vertex v : inst.forced_in)
        if (!in_witness[v]) return false;
    if (static_cast<int>(cert.witness.size()) != cert.gamma) return false;
    for (Vertex u = 1; u <= g.order(); ++u) {
        if (deleted[u] || predom[u]) continue;
        bool covered = in_witness[u] != 0;
        for (Vertex w : g.neighbors(u)) {
            if (covered) break;
            covered = in_witness[w] && !deleted[w];
        }
        if (!covered) return false;
    }
    return true;
}

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set) {
    std::vector<char> covered(g.order() + 1, 0);
    for (Vertex v : set) {
        if (!g.has_vertex(v)) return false;
        covered[v] = 1;
        for (Vertex u : g.neighbors(v)) covered[u] = 1;
    }
    for (Vertex v = 1; v <= g.order(); ++v)
        if (!covered[v]) return false;
    return true;
}

}  // namespace sierpdom
