#ifndef SIERPDOM_SEARCH_HPP
#define SIERPDOM_SEARCH_HPP

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sierpdom/graph.hpp"
#include "sierpdom/product.hpp"

namespace sierpdom {

class TheoremViolationError : public std::runtime_error {
public:
    explicit TheoremViolationError(const std::string& msg) : std::runtime_error(msg) {}
};

enum class SearchMode { min, max };

enum class SearchStrategy { exhaustive, orbit_reduced, distance_sequence, automatic };

std::string to_string(SearchMode mode);
std::string to_string(SearchStrategy strategy);

struct SearchLimits {
    // 0 = per-strategy default: 2e6 solver calls for exhaustive/orbit-reduced,
    // 1e5 for distance-sequence.
    long long budget = 0;
    int workers = 1;
};

struct TwoValueResolution {
    std::vector<int> value_set;  // the theorem's admissible values, ascending
    bool attained_lower = false;
};

struct SearchOutcome {
    SearchMode mode = SearchMode::min;
    int value = 0;
    FunctionAssignment witness_f;
    SearchStrategy strategy = SearchStrategy::exhaustive;  // the strategy actually run
    long long candidates_evaluated = 0;
    // False when the budget ran out: value is then only a bound (an upper
    // bound for mode=min, a lower bound for mode=max).
    bool exact = true;
    std::optional<TwoValueResolution> two_value;
};

std::string outcome_to_json(const SearchOutcome& outcome);

// gamma_S (mode=min) or Gamma_S (mode=max) of G (x)_f H over all f in H^G.
SearchOutcome sierpinski_gamma(const Graph& G, const Graph& H, SearchMode mode,
                               SearchStrategy strategy = SearchStrategy::automatic,
                               SearchLimits limits = {});

// Both extrema from one enumeration pass.
std::pair<SearchOutcome, SearchOutcome> sierpinski_gamma_minmax(
    const Graph& G, const Graph& H, SearchStrategy strategy = SearchStrategy::automatic,
    SearchLimits limits = {});

// Cyclic sequence d_i = d_H(y_i, x_i) for cycle-by-cycle products, canonical
// under rotation and reflection, with one realizing assignment.
struct DistanceSequence {
    std::vector<int> seq;
    FunctionAssignment realizing;
};

// All realizable canonical classes for C_n (x) C_m, each exactly once.
std::vector<DistanceSequence> enumerate_distance_sequences(int n, int m);

// Runs a min search for gamma_S(C_n, C_{3k+p}) and reports which element of
// the theorem's 2-element value set was attained. A value outside the set is
// an implementation bug and raises TheoremViolationError.
SearchOutcome resolve_two_value(int n, int k, int p, SearchLimits limits = {});

}  // namespace sierpdom

#endif
