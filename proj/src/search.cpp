#include "sierpdom/search.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <exception>
#include <thread>

#include <json.hpp>

#include "sierpdom/domination.hpp"

namespace sierpdom {

namespace {

long long default_budget(SearchStrategy s) {
    return s == SearchStrategy::distance_sequence ? 100'000 : 2'000'000;
}

// m^e, saturating at cap+1
long long pow_capped(long long m, int e, long long cap) {
    long long r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > cap / m) return cap + 1;
        r *= m;
    }
    return r;
}

FunctionAssignment assignment_from_index(long long idx, int n, int m, bool fix_first) {
    FunctionAssignment f;
    f.values.assign(n, 1);
    int lo = fix_first ? 1 : 0;
    for (int i = n - 1; i >= lo; --i) {
        f.values[i] = static_cast<int>(idx % m) + 1;
        idx /= m;
    }
    return f;
}

// Min/max folded together; ties broken toward the lexicographically
// smallest assignment, so the merge order cannot change the result.
struct Fold {
    bool has = false;
    int min_v = 0, max_v = 0;
    FunctionAssignment min_f, max_f;

    void add(int v, const FunctionAssignment& f) {
        if (!has) {
            has = true;
            min_v = max_v = v;
            min_f = max_f = f;
            return;
        }
        if (v < min_v || (v == min_v && f.values < min_f.values)) {
            min_v = v;
            min_f = f;
        }
        if (v > max_v || (v == max_v && f.values < max_f.values)) {
            max_v = v;
            max_f = f;
        }
    }

    void merge(const Fold& o) {
        if (!o.has) return;
        if (!has) {
            *this = o;
            return;
        }
        if (o.min_v < min_v || (o.min_v == min_v && o.min_f.values < min_f.values)) {
            min_v = o.min_v;
            min_f = o.min_f;
        }
        if (o.max_v > max_v || (o.max_v == max_v && o.max_f.values < max_f.values)) {
            max_v = o.max_v;
            max_f = o.max_f;
        }
    }
};

int eval_gamma(const Graph& G, const Graph& H, const FunctionAssignment& f) {
    return solve(DominationInstance{product(G, H, f).graph(), {}, {}, {}}).gamma;
}

using RangeFn = std::function<void(long long, long long, Fold&)>;

Fold parallel_chunks(long long count, int workers, const RangeFn& run_range) {
    workers = std::max(1, workers);
    if (workers == 1 || count < 64) {
        Fold f;
        run_range(0, count, f);
        return f;
    }
    int nthreads = static_cast<int>(std::min<long long>(workers, count));
    std::vector<Fold> folds(nthreads);
    std::vector<std::exception_ptr> errors(nthreads);
    std::vector<std::thread> threads;
    for (int t = 0; t < nthreads; ++t) {
        long long lo = count * t / nthreads;
        long long hi = count * (t + 1) / nthreads;
        threads.emplace_back([&, t, lo, hi] {
            try {
                run_range(lo, hi, folds[t]);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    Fold out;
    for (auto& f : folds) out.merge(f);
    return out;
}

// FKM generation of necklaces (lexicographically least rotations) of length n
// over {0..K-1}, emitted in lex order. emit returning false stops the stream.
bool fkm_necklaces(int n, int K, const std::function<bool(const std::vector<int>&)>& emit) {
    std::vector<int> a(n + 1, 0);
    std::vector<int> out(n);
    std::function<bool(int, int)> gen = [&](int t, int p) -> bool {
        if (t > n) {
            if (n % p == 0) {
                std::copy(a.begin() + 1, a.end(), out.begin());
                return emit(out);
            }
            return true;
        }
        a[t] = a[t - p];
        if (!gen(t + 1, p)) return false;
        for (int v = a[t - p] + 1; v < K; ++v) {
            a[t] = v;
            if (!gen(t + 1, t)) return false;
        }
        return true;
    };
    return gen(1, 1);
}

std::vector<int> min_rotation(const std::vector<int>& w) {
    int n = static_cast<int>(w.size());
    std::vector<int> best = w;
    std::vector<int> rot(n);
    for (int s = 1; s < n; ++s) {
        for (int i = 0; i < n; ++i) rot[i] = w[(i + s) % n];
        if (rot < best) best = rot;
    }
    return best;
}

// A necklace also represents its bracelet class iff it does not exceed the
// least rotation of its reversal.
bool is_bracelet_rep(const std::vector<int>& w) {
    std::vector<int> rev(w.rbegin(), w.rend());
    return !(min_rotation(rev) < w);
}

// Step order of the constraint chain starting at position `start`: the step
// from position p to p+2 is governed by d at index p+1 (all mod* n). Odd n
// gives a single chain through every position; even n gives two.
std::vector<int> chain_steps(int n, int start) {
    std::vector<int> steps;
    int len = (n % 2 == 0) ? n / 2 : n;
    int pos = start;
    for (int j = 0; j < len; ++j) {
        steps.push_back(mod_star(pos + 1, n) - 1);
        pos = mod_star(pos + 2, n);
    }
    return steps;
}

// Signs making the signed step sum vanish mod m, via DP over partial sums.
std::optional<std::vector<int>> chain_signs(const std::vector<int>& steps,
                                            const std::vector<int>& d, int m) {
    int len = static_cast<int>(steps.size());
    std::vector<std::vector<char>> reach(len + 1, std::vector<char>(m, 0));
    reach[0][0] = 1;
    for (int j = 0; j < len; ++j) {
        int dj = d[steps[j]];
        for (int s = 0; s < m; ++s) {
            if (!reach[j][s]) continue;
            reach[j + 1][(s + dj) % m] = 1;
            reach[j + 1][(s - dj % m + m) % m] = 1;
        }
    }
    if (!reach[len][0]) return std::nullopt;
    std::vector<int> signs(len, 1);
    int target = 0;
    for (int j = len - 1; j >= 0; --j) {
        int dj = d[steps[j]] % m;
        int before_plus = (target - dj + m) % m;
        if (reach[j][before_plus]) {
            signs[j] = 1;
            target = before_plus;
        } else {
            signs[j] = -1;
            target = (target + dj) % m;
        }
    }
    return signs;
}

int cyclic_distance(int a, int b, int m) {
    int delta = std::abs(a - b);
    return std::min(delta, m - delta);
}

std::optional<FunctionAssignment> realize_sequence(const std::vector<int>& d, int m) {
    int n = static_cast<int>(d.size());
    std::vector<int> v(n + 1, 0);
    auto run_chain = [&](int start) -> bool {
        auto steps = chain_steps(n, start);
        auto signs = chain_signs(steps, d, m);
        if (!signs) return false;
        int pos = start;
        v[pos] = 1;
        for (std::size_t j = 0; j < steps.size(); ++j) {
            int next = mod_star(pos + 2, n);
            v[next] = mod_star(v[pos] + (*signs)[j] * d[steps[j]], m);
            pos = next;
        }
        return true;
    };
    if (n % 2 == 0) {
        if (!run_chain(1) || !run_chain(2)) return std::nullopt;
    } else {
        if (!run_chain(1)) return std::nullopt;
    }
    FunctionAssignment f;
    f.values.assign(v.begin() + 1, v.end());
    for (int i = 1; i <= n; ++i) {
        int hy = f(mod_star(i - 1, n));
        int hx = f(mod_star(i + 1, n));
        if (cyclic_distance(hx, hy, m) != d[i - 1])
            throw std::logic_error("realized assignment does not reproduce its distance sequence");
    }
    return f;
}

// Realizable canonical classes in lex order; emit returning false stops.
// Returns true when the stream ran to completion.
bool for_each_realizable_class(
    int n, int m,
    const std::function<bool(const std::vector<int>&, const FunctionAssignment&)>& emit) {
    int K = m / 2 + 1;
    return fkm_necklaces(n, K, [&](const std::vector<int>& w) {
        if (!is_bracelet_rep(w)) return true;
        auto f = realize_sequence(w, m);
        if (!f) return true;
        return emit(w, *f);
    });
}

SearchStrategy pick_auto(const Graph& G, const Graph& H) {
    if (is_cycle_layout(G) && is_cycle_layout(H)) return SearchStrategy::distance_sequence;
    if (is_circulant_layout(H)) return SearchStrategy::orbit_reduced;
    return SearchStrategy::exhaustive;
}

struct StreamResult {
    Fold fold;
    long long evaluated = 0;
    bool complete = true;
};

StreamResult run_indexed(const Graph& G, const Graph& H, bool fix_first, long long budget,
                         int workers) {
    int n = G.order(), m = H.order();
    long long total = pow_capped(m, fix_first ? n - 1 : n, LLONG_MAX / 2);
    StreamResult res;
    res.complete = total <= budget;
    long long limit = std::min(total, budget);
    res.evaluated = limit;
    res.fold = parallel_chunks(limit, workers, [&](long long lo, long long hi, Fold& fold) {
        for (long long idx = lo; idx < hi; ++idx) {
            FunctionAssignment f = assignment_from_index(idx, n, m, fix_first);
            fold.add(eval_gamma(G, H, f), f);
        }
    });
    return res;
}

StreamResult run_distance_sequence(const Graph& G, const Graph& H, long long budget, int workers) {
    int n = G.order(), m = H.order();
    std::vector<FunctionAssignment> candidates;
    StreamResult res;
    res.complete = for_each_realizable_class(n, m, [&](const std::vector<int>&,
                                                       const FunctionAssignment& f) {
        if (static_cast<long long>(candidates.size()) == budget) return false;
        candidates.push_back(f);
        return true;
    });
    res.evaluated = static_cast<long long>(candidates.size());
    res.fold = parallel_chunks(res.evaluated, workers, [&](long long lo, long long hi, Fold& fold) {
        for (long long i = lo; i < hi; ++i) fold.add(eval_gamma(G, H, candidates[i]), candidates[i]);
    });
    return res;
}

}  // namespace

std::string to_string(SearchMode mode) { return mode == SearchMode::min ? "min" : "max"; }

std::string to_string(SearchStrategy strategy) {
    switch (strategy) {
        case SearchStrategy::exhaustive: return "exhaustive";
        case SearchStrategy::orbit_reduced: return "orbit-reduced";
        case SearchStrategy::distance_sequence: return "distance-sequence";
        case SearchStrategy::automatic: return "auto";
    }
    return "?";
}

std::string outcome_to_json(const SearchOutcome& outcome) {
    nlohmann::ordered_json j;
    j["mode"] = to_string(outcome.mode);
    j["value"] = outcome.value;
    j["witness_f"] = outcome.witness_f.values;
    j["strategy"] = to_string(outcome.strategy);
    j["candidates"] = outcome.candidates_evaluated;
    j["exact"] = outcome.exact;
    if (outcome.two_value) {
        j["two_value"] = {{"set", outcome.two_value->value_set},
                          {"attained", outcome.two_value->attained_lower ? "lower" : "upper"}};
    }
    return j.dump();
}

std::pair<SearchOutcome, SearchOutcome> sierpinski_gamma_minmax(const Graph& G, const Graph& H,
                                                                SearchStrategy strategy,
                                                                SearchLimits limits) {
    if (static_cast<long long>(G.order()) * H.order() > kSolverVertexCap)
        throw SolverCapError("product order " + std::to_string(G.order() * H.order()) +
                             " exceeds solver cap");
    SearchStrategy actual = strategy == SearchStrategy::automatic ? pick_auto(G, H) : strategy;
    if (actual == SearchStrategy::distance_sequence &&
        !(is_cycle_layout(G) && is_cycle_layout(H)))
        throw UnsupportedStructureError("distance-sequence strategy requires two cycles");
    if (actual == SearchStrategy::orbit_reduced && !is_circulant_layout(H))
        throw UnsupportedStructureError(
            "orbit-reduced strategy requires a vertex-transitive H (cycle, complete or circulant "
            "labeling)");

    long long budget = limits.budget > 0 ? limits.budget : default_budget(actual);
    StreamResult res;
    switch (actual) {
        case SearchStrategy::exhaustive:
            res = run_indexed(G, H, false, budget, limits.workers);
            break;
        case SearchStrategy::orbit_reduced:
            res = run_indexed(G, H, true, budget, limits.workers);
            break;
        case SearchStrategy::distance_sequence:
            res = run_distance_sequence(G, H, budget, limits.workers);
            break;
        case SearchStrategy::automatic: break;  // unreachable
    }

    SearchOutcome lo, hi;
    lo.mode = SearchMode::min;
    hi.mode = SearchMode::max;
    lo.value = res.fold.min_v;
    hi.value = res.fold.max_v;
    lo.witness_f = res.fold.min_f;
    hi.witness_f = res.fold.max_f;
    lo.strategy = hi.strategy = actual;
    lo.candidates_evaluated = hi.candidates_evaluated = res.evaluated;
    lo.exact = hi.exact = res.complete;
    return {lo, hi};
}

SearchOutcome sierpinski_gamma(const Graph& G, const Graph& H, SearchMode mode,
                               SearchStrategy strategy, SearchLimits limits) {
    auto [lo, hi] = sierpinski_gamma_minmax(G, H, strategy, limits);
    return mode == SearchMode::min ? lo : hi;
}

std::vector<DistanceSequence> enumerate_distance_sequences(int n, int m) {
    if (n < 3 || m < 3) throw GraphError("distance sequences require cycle orders >= 3");
    std::vector<DistanceSequence> out;
    for_each_realizable_class(n, m, [&](const std::vector<int>& seq, const FunctionAssignment& f) {
        out.push_back({seq, f});
        return true;
    });
    return out;
}

SearchOutcome resolve_two_value(int n, int k, int p, SearchLimits limits) {
    if (p != 1 && p != 2) throw GraphError("resolve_two_value requires p in {1,2}");
    if (n < 3 || k < 1) throw GraphError("resolve_two_value requires n >= 3, k >= 1");
    int m = 3 * k + p;
    auto out = sierpinski_gamma(build_cycle(n), build_cycle(m), SearchMode::min,
                                SearchStrategy::automatic, limits);
    std::vector<int> set = p == 1 ? std::vector<int>{k * n, k * n + 1}
                                  : std::vector<int>{k * n + n / 2, k * n + n / 2 + 1};
    out.two_value = TwoValueResolution{set, out.value == set[0]};
    if (out.exact && out.value != set[0] && out.value != set[1])
        throw TheoremViolationError("gamma_S(C_" + std::to_string(n) + ",C_" + std::to_string(m) +
                                    ") = " + std::to_string(out.value) +
                                    " lies outside the theorem's value set");
    return out;
}

}  // namespace sierpdom
