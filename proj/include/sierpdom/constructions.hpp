#ifndef SIERPDOM_CONSTRUCTIONS_HPP
#define SIERPDOM_CONSTRUCTIONS_HPP

#include <string>
#include <vector>

#include "sierpdom/graph.hpp"
#include "sierpdom/product.hpp"
#include "sierpdom/search.hpp"

namespace sierpdom {

class ConstructionError : public std::runtime_error {
public:
    explicit ConstructionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Membership report for the class H_k: gamma(H) = k+1 with gamma(H-v) = k for
// every v (property a), and a minimum dominating set through any prescribed
// pair x,y, x=y allowed (property b).
struct HkVertexEvidence {
    Vertex v;
    int gamma_without;  // gamma(H - v)
};

struct HkPairEvidence {
    Vertex x, y;
    int gamma_forced;  // minimum size of a dominating set containing both
};

struct HkReport {
    int k = 0;
    int gamma_h = 0;
    bool property_a = false;
    bool property_b = false;
    bool member = false;
    std::vector<HkVertexEvidence> vertex_evidence;
    std::vector<HkPairEvidence> pair_evidence;
};

HkReport check_Hk(const Graph& H, int k);

FunctionAssignment f_constant(const Graph& G, const Graph& H, Vertex h);

// f(g_i) = 1 when i mod 4 in {1,2}, else 3; targets H = C_{3k+1}.
FunctionAssignment f_3k1(int n);

// f(g_i) = 1 when i = 1 (mod 4), 2 when i = 2 (mod 4), else 3; targets C_{3k+2}.
FunctionAssignment f_3k2(int n);

// The 18-entry assignment from the C_18 (x) C_7 example.
FunctionAssignment f_c18_c7();

enum class LayerTag { d1, d2, d3, custom };

std::string to_string(LayerTag tag);

struct LayerChoice {
    int layer = 0;
    LayerTag tag = LayerTag::custom;
    std::vector<ProductVertex> set;
};

// A per-layer dominating-set plan. Builders validate the assembled union
// against the product (it must dominate) and against the closed-form size;
// a mismatch is a hard ConstructionError, never silently repaired.
struct LayerSetPlan {
    std::vector<LayerChoice> layers;
    std::vector<ProductVertex> assembled;
    int expected_size = 0;
};

std::string plan_to_json(const LayerSetPlan& plan, const std::string& family, int n, int k);

// D_{i,1}/D_{i,2}/D_{i,3} assembly by i mod 3 (with the i=n exception) for a
// cycle G and H in H_k, any f; |D| = kn + ceil(n/3).
LayerSetPlan build_claim2_set(const Graph& G, const Graph& H, const FunctionAssignment& f);

// Distance-2-mod-3 layer sets for C_n (x) C_{3k+1} under f_3k1, plus the
// case-specific extra vertex; |D| = kn + ceil(n/4) - floor(n/4).
LayerSetPlan build_3k1_set(int n, int k);

// Case-split layer sets for C_n (x) C_{3k+2} under f_3k2;
// |D| = kn + floor(n/2) + ceil(n/4) - floor(n/4).
LayerSetPlan build_3k2_set(int n, int k);

// Does some x in V(H) satisfy gamma(H|x) = gamma(H)? Cross-checked against
// Gamma_S(G,H) = n(G) * gamma(H) computed by search.
struct EquUpperEvidence {
    int gamma_h = 0;
    std::vector<std::pair<Vertex, int>> gamma_given;  // (x, gamma(H|x))
    bool exists_x = false;
    int upper_sierpinski = 0;
    bool equality = false;  // Gamma_S(G,H) == n(G) * gamma(H)
    bool matches = false;   // equality <=> exists_x
};

EquUpperEvidence check_equ_upper(const Graph& G, const Graph& H, SearchLimits limits = {});

}  // namespace sierpdom

#endif
