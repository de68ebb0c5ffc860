#ifndef SIERPDOM_DOMINATION_HPP
#define SIERPDOM_DOMINATION_HPP

#include <string>
#include <vector>

#include "sierpdom/graph.hpp"

namespace sierpdom {

// Neighborhood bit vectors are fixed width; larger instances are refused.
inline constexpr int kSolverVertexCap = 512;

class SolverCapError : public std::runtime_error {
public:
    explicit SolverCapError(const std::string& msg) : std::runtime_error(msg) {}
};

class InfeasibleError : public std::runtime_error {
public:
    explicit InfeasibleError(const std::string& msg) : std::runtime_error(msg) {}
};

// Minimum domination with three constraint knobs:
//   forced_in      must belong to the solution,
//   pre_dominated  need not be dominated (gamma(G|S); members may still be chosen),
//   deleted        removed from the graph before solving (gamma(G - S)).
struct DominationInstance {
    Graph graph;
    std::vector<Vertex> forced_in;
    std::vector<Vertex> pre_dominated;
    std::vector<Vertex> deleted;

    void validate() const;
};

struct DominationCertificate {
    int gamma = 0;
    std::vector<Vertex> witness;  // sorted ascending
    DominationInstance instance;
    long long nodes_explored = 0;
};

// Branch-and-bound on the set-cover view. Deterministic: branches on an
// uncovered vertex with the fewest candidate dominators, children in
// increasing label order; the reported witness is the first optimum found.
DominationCertificate solve(const DominationInstance& inst);

int gamma(const Graph& g);

// Independent oracle: subsets by increasing cardinality. Refuses n > cap.
int brute_force_gamma(const Graph& g, int cap = 26);
int brute_force_gamma(const DominationInstance& inst, int cap = 26);

// Re-verifies a certificate straight from the instance definition,
// sharing no code with the solver's bitset machinery.
bool validate_certificate(const DominationCertificate& cert);

bool is_dominating_set(const Graph& g, const std::vector<Vertex>& set);

}  // namespace sierpdom

#endif
