#include "sierpdom/constructions.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

#include "sierpdom/domination.hpp"

namespace sierpdom {

namespace {

// gamma-set of H - del containing all of forced, in H's own labels.
std::vector<Vertex> gamma_set(const Graph& H, std::vector<Vertex> forced, std::vector<Vertex> del,
                              int expected_size, const std::string& what) {
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    auto cert = solve(DominationInstance{H, forced, {}, del});
    if (cert.gamma != expected_size)
        throw ConstructionError(what + ": expected a set of size " + std::to_string(expected_size) +
                                ", solver found " + std::to_string(cert.gamma));
    return cert.witness;
}

std::vector<ProductVertex> to_layer(int layer, const std::vector<Vertex>& hs) {
    std::vector<ProductVertex> out;
    out.reserve(hs.size());
    for (Vertex h : hs) out.push_back({layer, h});
    return out;
}

void validate_plan(const SierpinskiProduct& P, LayerSetPlan& plan, const std::string& what) {
    std::set<ProductVertex> uniq;
    for (const auto& choice : plan.layers)
        for (const auto& pv : choice.set) uniq.insert(pv);
    plan.assembled.assign(uniq.begin(), uniq.end());
    if (static_cast<int>(plan.assembled.size()) != plan.expected_size)
        throw ConstructionError(what + ": assembled set has " +
                                std::to_string(plan.assembled.size()) + " vertices, proof states " +
                                std::to_string(plan.expected_size));
    std::vector<Vertex> flat;
    flat.reserve(plan.assembled.size());
    for (const auto& pv : plan.assembled) flat.push_back(P.flat(pv));
    if (!is_dominating_set(P.graph(), flat))
        throw ConstructionError(what + ": assembled set does not dominate the product");
}

}  // namespace

HkReport check_Hk(const Graph& H, int k) {
    if (H.order() > kSolverVertexCap)
        throw SolverCapError("check_Hk: graph exceeds solver cap");
    if (k < 1) throw GraphError("check_Hk requires k >= 1");
    HkReport report;
    report.k = k;
    report.gamma_h = gamma(H);

    report.property_a = report.gamma_h == k + 1;
    if (H.order() > 1) {
        for (Vertex v = 1; v <= H.order(); ++v) {
            int gv = solve(DominationInstance{H, {}, {}, {v}}).gamma;
            report.vertex_evidence.push_back({v, gv});
            if (gv != k) report.property_a = false;
        }
    } else {
        report.property_a = false;  // no vertex-deleted subgraphs to witness property (a)
    }

    report.property_b = true;
    for (Vertex x = 1; x <= H.order(); ++x)
        for (Vertex y = x; y <= H.order(); ++y) {
            std::vector<Vertex> forced = x == y ? std::vector<Vertex>{x} : std::vector<Vertex>{x, y};
            int gf = solve(DominationInstance{H, forced, {}, {}}).gamma;
            report.pair_evidence.push_back({x, y, gf});
            if (gf != report.gamma_h) report.property_b = false;
        }

    report.member = report.property_a && report.property_b;
    return report;
}

FunctionAssignment f_constant(const Graph& G, const Graph& H, Vertex h) {
    if (!H.has_vertex(h))
        throw GraphError("constant value " + std::to_string(h) + " is not a vertex of H");
    FunctionAssignment f;
    f.values.assign(G.order(), h);
    return f;
}

FunctionAssignment f_3k1(int n) {
    if (n < 3) throw GraphError("f_3k1 requires n >= 3");
    FunctionAssignment f;
    f.values.reserve(n);
    for (int i = 1; i <= n; ++i) f.values.push_back(i % 4 == 1 || i % 4 == 2 ? 1 : 3);
    return f;
}

FunctionAssignment f_3k2(int n) {
    if (n < 3) throw GraphError("f_3k2 requires n >= 3");
    FunctionAssignment f;
    f.values.reserve(n);
    for (int i = 1; i <= n; ++i) {
        if (i % 4 == 1)
            f.values.push_back(1);
        else if (i % 4 == 2)
            f.values.push_back(2);
        else
            f.values.push_back(3);
    }
    return f;
}

FunctionAssignment f_c18_c7() {
    return FunctionAssignment{{4, 2, 2, 4, 4, 2, 2, 7, 7, 5, 5, 3, 3, 1, 1, 6, 6, 4}};
}

std::string to_string(LayerTag tag) {
    switch (tag) {
        case LayerTag::d1: return "D1";
        case LayerTag::d2: return "D2";
        case LayerTag::d3: return "D3";
        case LayerTag::custom: return "custom";
    }
    return "?";
}

std::string plan_to_json(const LayerSetPlan& plan, const std::string& family, int n, int k) {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["n"] = n;
    j["k"] = k;
    j["size"] = static_cast<int>(plan.assembled.size());
    j["expected_size"] = plan.expected_size;
    auto layers = nlohmann::ordered_json::array();
    for (const auto& choice : plan.layers) {
        nlohmann::ordered_json row;
        row["layer"] = choice.layer;
        row["tag"] = to_string(choice.tag);
        auto set = nlohmann::ordered_json::array();
        for (const auto& pv : choice.set) set.push_back({pv.g, pv.h});
        row["set"] = std::move(set);
        layers.push_back(std::move(row));
    }
    j["layers"] = std::move(layers);
    return j.dump();
}

LayerSetPlan build_claim2_set(const Graph& G, const Graph& H, const FunctionAssignment& f) {
    if (!is_cycle_layout(G))
        throw UnsupportedStructureError("build_claim2_set requires a cycle base graph");
    int n = G.order();
    int k = gamma(H) - 1;
    if (k < 1 || !check_Hk(H, k).member)
        throw ConstructionError("build_claim2_set: H is not in the class H_k");

    SierpinskiProduct P = product(G, H, f);
    LayerSetPlan plan;
    for (int i = 1; i <= n; ++i) {
        auto [y, x] = P.connecting_vertices(i);
        LayerChoice choice;
        choice.layer = i;
        if (i % 3 == 1 && i != n) {
            choice.tag = LayerTag::d1;
            choice.set = to_layer(i, gamma_set(H, {}, {x.h}, k, "D_{i,1} layer " + std::to_string(i)));
        } else if (i % 3 == 2 || (i % 3 == 1 && i == n)) {
            choice.tag = LayerTag::d2;
            choice.set =
                to_layer(i, gamma_set(H, {x.h, y.h}, {}, k + 1, "D_{i,2} layer " + std::to_string(i)));
        } else {
            choice.tag = LayerTag::d3;
            choice.set = to_layer(i, gamma_set(H, {}, {y.h}, k, "D_{i,3} layer " + std::to_string(i)));
        }
        plan.layers.push_back(std::move(choice));
    }
    plan.expected_size = k * n + (n + 2) / 3;
    validate_plan(P, plan, "build_claim2_set");
    return plan;
}

LayerSetPlan build_3k1_set(int n, int k) {
    if (n < 3 || k < 1) throw GraphError("build_3k1_set requires n >= 3, k >= 1");
    int m = 3 * k + 1;
    Graph G = build_cycle(n), H = build_cycle(m);
    FunctionAssignment f = f_3k1(n);
    SierpinskiProduct P = product(G, H, f);

    LayerSetPlan plan;
    for (int i = 1; i <= n; ++i) {
        auto [y, x] = P.connecting_vertices(i);
        (void)x;
        LayerChoice choice;
        choice.layer = i;
        choice.tag = LayerTag::custom;
        // the unique gamma-set of H_i - y_i: everything at distance 2 mod 3 from y_i
        for (Vertex h = 1; h <= m; ++h) {
            int dist = *distance(H, y.h, h);
            if (dist % 3 == 2) choice.set.push_back({i, h});
        }
        if (static_cast<int>(choice.set.size()) != k)
            throw ConstructionError("build_3k1_set: layer " + std::to_string(i) +
                                    " distance rule produced " + std::to_string(choice.set.size()) +
                                    " vertices, expected " + std::to_string(k));
        plan.layers.push_back(std::move(choice));
    }
    int r = n % 4;
    if (r != 0) {
        LayerChoice extra;
        extra.tag = LayerTag::custom;
        int layer = (r == 3) ? n : 1;  // x_{4l+3} closes the n=4l+3 case, x_1 the others
        extra.layer = layer;
        auto [y, x] = P.connecting_vertices(layer);
        (void)y;
        extra.set.push_back(x);
        plan.layers.push_back(std::move(extra));
    }
    plan.expected_size = k * n + (r != 0 ? 1 : 0);
    validate_plan(P, plan, "build_3k1_set");
    return plan;
}

LayerSetPlan build_3k2_set(int n, int k) {
    if (n < 3 || k < 1) throw GraphError("build_3k2_set requires n >= 3, k >= 1");
    int m = 3 * k + 2;
    Graph G = build_cycle(n), H = build_cycle(m);
    FunctionAssignment f = f_3k2(n);
    SierpinskiProduct P = product(G, H, f);

    int r = n % 4;
    auto layer_choice = [&](int i, bool delete_both, bool force_both) {
        auto [y, x] = P.connecting_vertices(i);
        LayerChoice choice;
        choice.layer = i;
        choice.tag = LayerTag::custom;
        std::string what = "build_3k2_set layer " + std::to_string(i);
        if (delete_both) {
            choice.set = to_layer(i, gamma_set(H, {}, {x.h, y.h}, k, what));
        } else if (force_both) {
            choice.set = to_layer(i, gamma_set(H, {x.h, y.h}, {}, k + 1, what));
        } else {
            choice.set = to_layer(i, gamma_set(H, {x.h}, {}, k + 1, what));
        }
        return choice;
    };

    LayerSetPlan plan;
    int body = n - r;  // 4*floor(n/4) layers follow the periodic pattern
    for (int i = 1; i <= body; ++i) {
        if (i == 1 && r == 2) {
            // n = 2 (mod 4) wraps the pattern so that x_1 = y_1; a gamma-set
            // through x_1 stands in for the distance-1 pair deletion
            plan.layers.push_back(layer_choice(1, false, false));
        } else {
            plan.layers.push_back(
                layer_choice(i, /*delete_both=*/i % 2 == 1, /*force_both=*/i % 2 == 0));
        }
    }
    if (r == 1) {
        plan.layers.push_back(layer_choice(n, false, false));  // gamma-set through x_n
    } else if (r == 2) {
        plan.layers.push_back(layer_choice(n - 1, true, false));
        plan.layers.push_back(layer_choice(n, false, false));  // here x_n = y_n
    } else if (r == 3) {
        plan.layers.push_back(layer_choice(n - 2, true, false));
        plan.layers.push_back(layer_choice(n - 1, false, false));
        plan.layers.push_back(layer_choice(n, false, false));
    }
    plan.expected_size = k * n + n / 2 + (n % 4 != 0 ? 1 : 0);
    validate_plan(P, plan, "build_3k2_set");
    return plan;
}

EquUpperEvidence check_equ_upper(const Graph& G, const Graph& H, SearchLimits limits) {
    EquUpperEvidence ev;
    ev.gamma_h = gamma(H);
    for (Vertex x = 1; x <= H.order(); ++x) {
        int gx = solve(DominationInstance{H, {}, {x}, {}}).gamma;
        ev.gamma_given.emplace_back(x, gx);
        if (gx == ev.gamma_h) ev.exists_x = true;
    }
    ev.upper_sierpinski =
        sierpinski_gamma(G, H, SearchMode::max, SearchStrategy::automatic, limits).value;
    ev.equality = ev.upper_sierpinski == G.order() * ev.gamma_h;
    ev.matches = ev.equality == ev.exists_x;
    return ev;
}

}  // namespace sierpdom
