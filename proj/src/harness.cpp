#include "sierpdom/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <random>
#include <sstream>

#include <json.hpp>

#include "sierpdom/codecs.hpp"
#include "sierpdom/constructions.hpp"
#include "sierpdom/domination.hpp"
#include "sierpdom/search.hpp"

namespace sierpdom {

namespace {

using nlohmann::ordered_json;

const std::map<CheckId, std::string>& id_names() {
    static const std::map<CheckId, std::string> names = {
        {CheckId::elementary, "elementary"},
        {CheckId::equ_upper, "equ-upper"},
        {CheckId::gamma1_prop, "gamma1-prop"},
        {CheckId::main_1, "main-1"},
        {CheckId::main_2, "main-2"},
        {CheckId::thm1_Hk, "thm1-Hk"},
        {CheckId::prop1_Hk, "prop1-Hk"},
        {CheckId::dom_3k1, "3k1-dom"},
        {CheckId::udom_3k1, "3k1-Udom"},
        {CheckId::dom_3k2, "3k2-dom"},
        {CheckId::udom_3k2, "3k2-Udom"},
        {CheckId::dom_3k, "3k-dom"},
        {CheckId::c18c7_example, "c18c7-example"},
    };
    return names;
}

int below(std::mt19937_64& rng, int k) { return static_cast<int>(rng() % static_cast<std::uint64_t>(k)); }

Graph random_graph(std::mt19937_64& rng, int max_n) {
    int n = 1 + below(rng, max_n);
    EdgeList edges;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (rng() & 1) edges.emplace_back(u, v);
    return Graph::from_edges(n, edges);
}

FunctionAssignment random_assignment(std::mt19937_64& rng, int nG, int nH) {
    FunctionAssignment f;
    f.values.reserve(nG);
    for (int i = 0; i < nG; ++i) f.values.push_back(1 + below(rng, nH));
    return f;
}

std::string fmt_values(const std::vector<int>& values) {
    std::string s = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(values[i]);
    }
    return s + "]";
}

// Theorem formulas, computed in one place rather than hard-coded per row.
int main2_expected(int n, int k, int p) {
    if (p == 0) return k * n;
    if (p == 1) return k * n + (n + 2) / 3;
    return (k + 1) * n;
}

std::vector<int> main1_value_set(int n, int k, int p) {
    if (p == 0) return {k * n};
    if (p == 1) return {k * n, k * n + 1};
    return {k * n + n / 2, k * n + n / 2 + 1};
}

std::string set_to_string(const std::vector<int>& set) {
    std::string s = "{";
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(set[i]);
    }
    return s + "}";
}

struct CheckContext {
    const CheckParams& pm;
    const RunConfig& cfg;
    TheoremCheck& out;

    SearchLimits limits() const { return SearchLimits{cfg.budget, cfg.workers}; }

    void ensure_cap(int order) const {
        if (order > cfg.solver_cap || order > kSolverVertexCap)
            throw SolverCapError("instance with " + std::to_string(order) +
                                 " vertices exceeds the configured cap");
    }

    EvidenceRow& row() {
        out.rows.emplace_back();
        return out.rows.back();
    }
};

void check_elementary(CheckContext& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed);
    for (int t = 1; t <= ctx.pm.pairs; ++t) {
        Graph G = random_graph(rng, 5), H = random_graph(rng, 5);
        int gH = gamma(H);
        int lo = G.order() * gH - G.size();
        int hi = G.order() * gH;
        int violations = 0;
        for (int j = 0; j < ctx.pm.funcs; ++j) {
            FunctionAssignment f = random_assignment(rng, G.order(), H.order());
            int val = gamma(product(G, H, f).graph());
            if (val < lo || val > hi) ++violations;
        }
        EvidenceRow& row = ctx.row();
        row.n = t;
        row.label = "pair " + std::to_string(t) + ": n(G)=" + std::to_string(G.order()) +
                    " m(G)=" + std::to_string(G.size()) + " n(H)=" + std::to_string(H.order());
        row.computed = violations;
        row.expected = "0 violations of [" + std::to_string(lo) + "," + std::to_string(hi) + "]";
        row.ok = violations == 0;
    }
}

void check_equ_upper_id(CheckContext& ctx) {
    const std::vector<std::pair<std::string, Graph>> hs = {
        {"K3", build_complete(3)}, {"K4", build_complete(4)}, {"C4", build_cycle(4)},
        {"C5", build_cycle(5)},    {"C7", build_cycle(7)},
    };
    for (int ng = 3; ng <= 4; ++ng) {
        Graph G = build_cycle(ng);
        for (const auto& [name, H] : hs) {
            ctx.ensure_cap(G.order() * H.order());
            EquUpperEvidence ev = check_equ_upper(G, H, ctx.limits());
            EvidenceRow& row = ctx.row();
            row.n = ng;
            row.label = "G=C" + std::to_string(ng) + " H=" + name;
            row.computed = ev.upper_sierpinski;
            row.expected = "Gamma_S = n(G)*gamma(H) iff some x has gamma(H|x)=gamma(H)";
            row.ok = ev.matches;
            row.note = std::string(ev.exists_x ? "x exists" : "no such x") + ", Gamma_S=" +
                       std::to_string(ev.upper_sierpinski) + " vs " +
                       std::to_string(G.order() * ev.gamma_h);
        }
    }
}

void check_gamma1(CheckContext& ctx) {
    Graph G = build_cycle(5);
    Graph star = Graph::from_edges(4, {{1, 2}, {1, 3}, {1, 4}});
    ctx.ensure_cap(G.order() * star.order());
    auto [lo, hi] = sierpinski_gamma_minmax(G, star, SearchStrategy::automatic, ctx.limits());
    for (const SearchOutcome* outcome : {&lo, &hi}) {
        EvidenceRow& row = ctx.row();
        row.label = "C5 (x) K_{1,3}, mode=" + to_string(outcome->mode);
        row.computed = outcome->value;
        row.expected = "5";
        row.partial = !outcome->exact;
        row.ok = outcome->exact && outcome->value == 5;
        row.note = "f=" + fmt_values(outcome->witness_f.values);
    }
}

void two_value_row(CheckContext& ctx, int n, int k, int p) {
    ctx.ensure_cap(n * (3 * k + p));
    std::vector<int> set = main1_value_set(n, k, p);
    EvidenceRow& row = ctx.row();
    row.n = n;
    row.k = k;
    row.p = p;
    if (p == 0) {
        SearchOutcome outcome = sierpinski_gamma(build_cycle(n), build_cycle(3 * k), SearchMode::min,
                                                 SearchStrategy::automatic, ctx.limits());
        row.computed = outcome.value;
        row.expected = set_to_string(set);
        row.partial = !outcome.exact;
        row.ok = outcome.exact && outcome.value == set[0];
        row.note = "f=" + fmt_values(outcome.witness_f.values);
        return;
    }
    try {
        SearchOutcome outcome = resolve_two_value(n, k, p, ctx.limits());
        row.computed = outcome.value;
        row.expected = set_to_string(set);
        row.partial = !outcome.exact;
        bool member = outcome.value == set[0] || outcome.value == set[1];
        bool mod4_ok = n % 4 != 0 || outcome.value == set[0];
        row.ok = outcome.exact && member && mod4_ok;
        row.note = std::string(outcome.two_value->attained_lower ? "lower" : "upper") +
                   ", f=" + fmt_values(outcome.witness_f.values);
        if (n % 4 == 0 && !mod4_ok) row.note += " (n=0 mod 4 demands the lower element)";
    } catch (const TheoremViolationError& e) {
        row.computed = -1;
        row.expected = set_to_string(set);
        row.ok = false;
        row.note = e.what();
    }
}

void check_main1(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k)
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n)
            for (int p : ctx.pm.ps) two_value_row(ctx, n, k, p);
}

void check_main2(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k)
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n)
            for (int p : ctx.pm.ps) {
                int m = 3 * k + p;
                ctx.ensure_cap(n * m);
                SearchOutcome outcome = sierpinski_gamma(build_cycle(n), build_cycle(m),
                                                         SearchMode::max, SearchStrategy::automatic,
                                                         ctx.limits());
                EvidenceRow& row = ctx.row();
                row.n = n;
                row.k = k;
                row.p = p;
                row.computed = outcome.value;
                row.expected = std::to_string(main2_expected(n, k, p));
                row.partial = !outcome.exact;
                row.ok = outcome.exact && outcome.value == main2_expected(n, k, p);
                row.note = "f=" + fmt_values(outcome.witness_f.values);
            }
}

void claim2_rows(CheckContext& ctx, const std::string& hname, const Graph& H, int k,
                 std::mt19937_64& rng) {
    for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
        ctx.ensure_cap(n * H.order());
        Graph G = build_cycle(n);
        std::vector<std::pair<std::string, FunctionAssignment>> fs;
        fs.emplace_back("constant:1", f_constant(G, H, 1));
        fs.emplace_back("random", random_assignment(rng, n, H.order()));
        for (const auto& [fname, f] : fs) {
            EvidenceRow& row = ctx.row();
            row.n = n;
            row.k = k;
            row.label = "claim2 H=" + hname + " f=" + fname;
            row.expected = std::to_string(k * n + (n + 2) / 3);
            try {
                LayerSetPlan plan = build_claim2_set(G, H, f);
                row.computed = static_cast<long long>(plan.assembled.size());
                row.ok = true;
                row.note = "dominates, size matches";
            } catch (const ConstructionError& e) {
                row.computed = -1;
                row.ok = false;
                row.note = e.what();
            }
        }
    }
}

void check_thm1_Hk(CheckContext& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed);
    const std::vector<std::tuple<std::string, Graph, int>> members = {
        {"C4", build_cycle(4), 1},
        {"C7", build_cycle(7), 2},
        {"circulant(6,{1,2})", build_circulant(6, {1, 2}), 1},
        {"circulant(11,{1,2})", build_circulant(11, {1, 2}), 2},
    };
    for (const auto& [name, H, k] : members) {
        HkReport report = check_Hk(H, k);
        EvidenceRow& mrow = ctx.row();
        mrow.k = k;
        mrow.label = "H_k membership: " + name;
        mrow.computed = report.member ? 1 : 0;
        mrow.expected = "member";
        mrow.ok = report.member;

        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
            ctx.ensure_cap(n * H.order());
            SearchOutcome outcome = sierpinski_gamma(build_cycle(n), H, SearchMode::max,
                                                     SearchStrategy::automatic, ctx.limits());
            int expected = k * n + (n + 2) / 3;
            EvidenceRow& row = ctx.row();
            row.n = n;
            row.k = k;
            row.label = "Gamma_S(C" + std::to_string(n) + ", " + name + ")";
            row.computed = outcome.value;
            row.expected = std::to_string(expected);
            row.partial = !outcome.exact;
            row.ok = outcome.exact && outcome.value == expected;
            row.note = "f=" + fmt_values(outcome.witness_f.values);
        }
        claim2_rows(ctx, name, H, k, rng);
    }
}

void check_prop1_Hk(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k) {
        HkReport report = check_Hk(build_cycle(3 * k + 1), k);
        EvidenceRow& row = ctx.row();
        row.k = k;
        row.label = "C_" + std::to_string(3 * k + 1);
        row.computed = report.member ? 1 : 0;
        row.expected = "member";
        row.ok = report.member;
    }
    for (int k = 1; k <= 3; ++k) {
        HkReport report = check_Hk(build_cycle(8), k);
        EvidenceRow& row = ctx.row();
        row.k = k;
        row.label = "C_8";
        row.computed = report.member ? 1 : 0;
        row.expected = "non-member";
        row.ok = !report.member;
        row.note = "gamma(C_8)=" + std::to_string(report.gamma_h);
    }
    for (int k = 1; k <= 2; ++k)
        for (int p = 1; p <= 2; ++p) {
            int order = k * (2 * p + 1) + 1;
            std::vector<int> jumps;
            for (int j = 1; j <= p; ++j) jumps.push_back(j);
            HkReport report = check_Hk(build_circulant(order, jumps), k);
            EvidenceRow& row = ctx.row();
            row.k = k;
            row.p = p;
            row.label = "circulant(" + std::to_string(order) + ",[1.." + std::to_string(p) + "])";
            row.computed = report.member ? 1 : 0;
            row.expected = "member";
            row.ok = report.member;
        }
}

void construction_row(CheckContext& ctx, const std::string& family, int n, int k,
                      LayerSetPlan (*builder)(int, int), int expected_size) {
    EvidenceRow& row = ctx.row();
    row.n = n;
    row.k = k;
    row.label = family;
    row.expected = std::to_string(expected_size);
    try {
        LayerSetPlan plan = builder(n, k);
        row.computed = static_cast<long long>(plan.assembled.size());
        row.ok = static_cast<int>(plan.assembled.size()) == expected_size;
        row.note = "dominates, size matches";
    } catch (const ConstructionError& e) {
        row.computed = -1;
        row.ok = false;
        row.note = e.what();
    }
}

// Per-layer tally of the d(x_i,y_i) mod 3 size pattern on a solver-produced
// optimum; anomalies are recorded, never failed.
std::string subclaim_note(int n, int k, const FunctionAssignment& f) {
    int m = 3 * k + 2;
    Graph G = build_cycle(n), H = build_cycle(m);
    SierpinskiProduct P = product(G, H, f);
    DominationCertificate cert = solve(DominationInstance{P.graph(), {}, {}, {}});
    std::vector<int> layer_size(n + 1, 0);
    for (Vertex v : cert.witness) ++layer_size[P.unflat(v).g];
    int match = 0;
    std::string anomalies;
    for (int i = 1; i <= n; ++i) {
        auto [y, x] = P.connecting_vertices(i);
        int d = *distance(H, y.h, x.h);
        bool pattern = d % 3 == 1 ? layer_size[i] == k : layer_size[i] == k + 1;
        if (pattern)
            ++match;
        else
            anomalies += " layer " + std::to_string(i) + ": d=" + std::to_string(d) +
                         " |D_i|=" + std::to_string(layer_size[i]);
    }
    std::string note = "subclaim pattern " + std::to_string(match) + "/" + std::to_string(n);
    if (!anomalies.empty()) note += "; recorded:" + anomalies;
    return note;
}

void check_3k1_dom(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k)
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
            ctx.ensure_cap(n * (3 * k + 1));
            construction_row(ctx, "build_3k1_set", n, k, build_3k1_set,
                             k * n + (n % 4 != 0 ? 1 : 0));
        }
    for (int k = ctx.pm.k_lo; k <= std::min(ctx.pm.k_hi, 2); ++k)
        for (int n = ctx.pm.n_lo; n <= std::min(ctx.pm.n_hi, 6); ++n) two_value_row(ctx, n, k, 1);
}

void check_3k2_dom(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k)
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
            ctx.ensure_cap(n * (3 * k + 2));
            construction_row(ctx, "build_3k2_set", n, k, build_3k2_set,
                             k * n + n / 2 + (n % 4 != 0 ? 1 : 0));
        }
    for (int k = ctx.pm.k_lo; k <= std::min(ctx.pm.k_hi, 2); ++k)
        for (int n = ctx.pm.n_lo; n <= std::min(ctx.pm.n_hi, 6); ++n) {
            two_value_row(ctx, n, k, 2);
            EvidenceRow& last = ctx.out.rows.back();
            last.note += "; " + subclaim_note(n, k, f_3k2(n));
        }
}

void check_3k1_udom(CheckContext& ctx) {
    std::mt19937_64 rng(ctx.cfg.seed);
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k) {
        int m = 3 * k + 1;
        for (int n = ctx.pm.n_lo; n <= std::min(ctx.pm.n_hi, 6); ++n) {
            ctx.ensure_cap(n * m);
            SearchOutcome outcome = sierpinski_gamma(build_cycle(n), build_cycle(m), SearchMode::max,
                                                     SearchStrategy::automatic, ctx.limits());
            int expected = k * n + (n + 2) / 3;
            EvidenceRow& row = ctx.row();
            row.n = n;
            row.k = k;
            row.p = 1;
            row.computed = outcome.value;
            row.expected = std::to_string(expected);
            row.partial = !outcome.exact;
            row.ok = outcome.exact && outcome.value == expected;
            row.note = "f=" + fmt_values(outcome.witness_f.values);
        }
        // Claim 2 assembly for arbitrary f at every n in range
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
            ctx.ensure_cap(n * m);
            Graph G = build_cycle(n), H = build_cycle(m);
            std::vector<std::pair<std::string, FunctionAssignment>> fs;
            fs.emplace_back("constant:1", f_constant(G, H, 1));
            fs.emplace_back("pattern:3k1", f_3k1(n));
            fs.emplace_back("random", random_assignment(rng, n, m));
            for (const auto& [fname, f] : fs) {
                EvidenceRow& row = ctx.row();
                row.n = n;
                row.k = k;
                row.label = "claim2 H=C" + std::to_string(m) + " f=" + fname;
                row.expected = std::to_string(k * n + (n + 2) / 3);
                try {
                    LayerSetPlan plan = build_claim2_set(G, H, f);
                    row.computed = static_cast<long long>(plan.assembled.size());
                    row.ok = true;
                    row.note = "dominates, size matches";
                } catch (const ConstructionError& e) {
                    row.computed = -1;
                    row.ok = false;
                    row.note = e.what();
                }
            }
        }
    }
}

void check_3k2_udom(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k)
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
            int m = 3 * k + 2;
            ctx.ensure_cap(n * m);
            SearchOutcome outcome = sierpinski_gamma(build_cycle(n), build_cycle(m), SearchMode::max,
                                                     SearchStrategy::automatic, ctx.limits());
            int expected = (k + 1) * n;
            EvidenceRow& row = ctx.row();
            row.n = n;
            row.k = k;
            row.p = 2;
            row.computed = outcome.value;
            row.expected = std::to_string(expected);
            row.partial = !outcome.exact;
            row.ok = outcome.exact && outcome.value == expected;
            row.note = "f=" + fmt_values(outcome.witness_f.values);
        }
}

void check_3k_dom(CheckContext& ctx) {
    for (int k = ctx.pm.k_lo; k <= ctx.pm.k_hi; ++k)
        for (int n = ctx.pm.n_lo; n <= ctx.pm.n_hi; ++n) {
            int m = 3 * k;
            if (m < 3) continue;
            ctx.ensure_cap(n * m);
            auto [lo, hi] =
                sierpinski_gamma_minmax(build_cycle(n), build_cycle(m),
                                        SearchStrategy::automatic, ctx.limits());
            for (const SearchOutcome* outcome : {&lo, &hi}) {
                EvidenceRow& row = ctx.row();
                row.n = n;
                row.k = k;
                row.p = 0;
                row.label = "mode=" + to_string(outcome->mode);
                row.computed = outcome->value;
                row.expected = std::to_string(k * n);
                row.partial = !outcome->exact;
                row.ok = outcome->exact && outcome->value == k * n;
            }
        }
}

void check_c18c7(CheckContext& ctx) {
    ctx.ensure_cap(18 * 7);
    FunctionAssignment f = f_c18_c7();
    SierpinskiProduct P = product(build_cycle(18), build_cycle(7), f);
    DominationCertificate cert = solve(DominationInstance{P.graph(), {}, {}, {}});
    EvidenceRow& row = ctx.row();
    row.n = 18;
    row.k = 2;
    row.p = 1;
    row.label = "gamma(C18 (x)_f C7)";
    row.computed = cert.gamma;
    row.expected = "36";
    row.ok = cert.gamma == 36;
    row.note = "the smaller element of {36,37}; nodes=" + std::to_string(cert.nodes_explored);
}

Verdict assemble_verdict(const std::vector<EvidenceRow>& rows) {
    bool any_partial = false;
    for (const auto& row : rows) {
        if (row.partial) {
            any_partial = true;
        } else if (!row.ok) {
            return Verdict::fail;
        }
    }
    return any_partial ? Verdict::partial : Verdict::pass;
}

std::string repro_command(CheckId id, const CheckParams& pm, const RunConfig& cfg) {
    std::string cmd = "sierpdom verify --id " + to_string(id) + " --seed " + std::to_string(cfg.seed);
    if (pm.n_lo > 0) cmd += " --n-lo " + std::to_string(pm.n_lo) + " --n-hi " + std::to_string(pm.n_hi);
    if (pm.k_lo > 0) cmd += " --k-lo " + std::to_string(pm.k_lo) + " --k-hi " + std::to_string(pm.k_hi);
    for (int p : pm.ps) cmd += " --p " + std::to_string(p);
    if (pm.pairs > 0) cmd += " --pairs " + std::to_string(pm.pairs);
    if (pm.funcs > 0) cmd += " --funcs " + std::to_string(pm.funcs);
    if (cfg.budget > 0) cmd += " --budget " + std::to_string(cfg.budget);
    return cmd;
}

ordered_json params_to_json(const CheckParams& pm) {
    ordered_json j;
    if (pm.n_lo > 0) {
        j["n_lo"] = pm.n_lo;
        j["n_hi"] = pm.n_hi;
    }
    if (pm.k_lo > 0) {
        j["k_lo"] = pm.k_lo;
        j["k_hi"] = pm.k_hi;
    }
    if (!pm.ps.empty()) j["ps"] = pm.ps;
    if (pm.pairs > 0) j["pairs"] = pm.pairs;
    if (pm.funcs > 0) j["funcs"] = pm.funcs;
    return j;
}

ordered_json row_to_json(const EvidenceRow& row) {
    ordered_json j;
    j["n"] = row.n;
    j["k"] = row.k;
    j["p"] = row.p;
    j["label"] = row.label;
    j["computed"] = row.computed;
    j["expected"] = row.expected;
    j["ok"] = row.ok;
    j["partial"] = row.partial;
    j["note"] = row.note;
    return j;
}

ordered_json check_to_json_obj(const TheoremCheck& check) {
    ordered_json j;
    j["id"] = to_string(check.id);
    j["verdict"] = to_string(check.verdict);
    j["params"] = params_to_json(check.params);
    auto rows = ordered_json::array();
    for (const auto& row : check.rows) rows.push_back(row_to_json(row));
    j["rows"] = std::move(rows);
    if (!check.repro.empty()) j["repro"] = check.repro;
    j["millis"] = check.millis;
    return j;
}

}  // namespace

const std::vector<CheckId>& all_check_ids() {
    static const std::vector<CheckId> ids = {
        CheckId::elementary, CheckId::equ_upper, CheckId::gamma1_prop, CheckId::main_1,
        CheckId::main_2,     CheckId::thm1_Hk,   CheckId::prop1_Hk,    CheckId::dom_3k1,
        CheckId::udom_3k1,   CheckId::dom_3k2,   CheckId::udom_3k2,    CheckId::dom_3k,
        CheckId::c18c7_example,
    };
    return ids;
}

std::string to_string(CheckId id) { return id_names().at(id); }

CheckId check_id_from_string(const std::string& name) {
    for (const auto& [id, n] : id_names())
        if (n == name) return id;
    throw std::invalid_argument("unknown check id '" + name + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::pass: return "pass";
        case Verdict::fail: return "fail";
        case Verdict::partial: return "partial";
    }
    return "?";
}

CheckParams default_params(CheckId id) {
    CheckParams pm;
    switch (id) {
        case CheckId::elementary:
            pm.pairs = 50;
            pm.funcs = 20;
            break;
        case CheckId::equ_upper:
        case CheckId::gamma1_prop:
        case CheckId::c18c7_example: break;
        case CheckId::main_1:
            pm.n_lo = 3;
            pm.n_hi = 6;
            pm.k_lo = pm.k_hi = 1;
            pm.ps = {1, 2};
            break;
        case CheckId::main_2:
            pm.n_lo = 3;
            pm.n_hi = 6;
            pm.k_lo = pm.k_hi = 1;
            pm.ps = {0, 1, 2};
            break;
        case CheckId::thm1_Hk:
            pm.n_lo = 3;
            pm.n_hi = 4;
            break;
        case CheckId::prop1_Hk:
            pm.k_lo = 1;
            pm.k_hi = 4;
            break;
        case CheckId::dom_3k1:
        case CheckId::dom_3k2:
        case CheckId::udom_3k1:
            pm.n_lo = 3;
            pm.n_hi = 8;
            pm.k_lo = 1;
            pm.k_hi = 2;
            break;
        case CheckId::udom_3k2:
            pm.n_lo = 3;
            pm.n_hi = 6;
            pm.k_lo = 1;
            pm.k_hi = 2;
            break;
        case CheckId::dom_3k:
            pm.n_lo = 3;
            pm.n_hi = 7;
            pm.k_lo = 1;
            pm.k_hi = 2;
            break;
    }
    return pm;
}

TheoremCheck verify(CheckId id, const CheckParams& params, const RunConfig& config) {
    TheoremCheck check;
    check.id = id;
    check.params = params;
    auto t0 = std::chrono::steady_clock::now();
    CheckContext ctx{params, config, check};
    switch (id) {
        case CheckId::elementary: check_elementary(ctx); break;
        case CheckId::equ_upper: check_equ_upper_id(ctx); break;
        case CheckId::gamma1_prop: check_gamma1(ctx); break;
        case CheckId::main_1: check_main1(ctx); break;
        case CheckId::main_2: check_main2(ctx); break;
        case CheckId::thm1_Hk: check_thm1_Hk(ctx); break;
        case CheckId::prop1_Hk: check_prop1_Hk(ctx); break;
        case CheckId::dom_3k1: check_3k1_dom(ctx); break;
        case CheckId::udom_3k1: check_3k1_udom(ctx); break;
        case CheckId::dom_3k2: check_3k2_dom(ctx); break;
        case CheckId::udom_3k2: check_3k2_udom(ctx); break;
        case CheckId::dom_3k: check_3k_dom(ctx); break;
        case CheckId::c18c7_example: check_c18c7(ctx); break;
    }
    check.verdict = assemble_verdict(check.rows);
    if (check.verdict == Verdict::fail) check.repro = repro_command(id, params, config);
    auto t1 = std::chrono::steady_clock::now();
    check.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return check;
}

std::string render_table(CheckId id, const CheckParams& params, const RunConfig& config) {
    if (id != CheckId::main_1 && id != CheckId::main_2)
        throw std::invalid_argument("table supports main-1 and main-2 only");
    struct Cell {
        long long value;
        std::string annotation;
    };
    std::vector<int> ps = params.ps.empty() ? std::vector<int>{0, 1, 2} : params.ps;
    std::map<std::pair<int, int>, Cell> cells;  // (n, p) -> cell, k fixed per table
    int k = params.k_lo;
    SearchLimits limits{config.budget, config.workers};
    for (int n = params.n_lo; n <= params.n_hi; ++n)
        for (int p : ps) {
            Cell cell{};
            if (id == CheckId::main_2) {
                SearchOutcome outcome = sierpinski_gamma(build_cycle(n), build_cycle(3 * k + p),
                                                         SearchMode::max, SearchStrategy::automatic,
                                                         limits);
                cell.value = outcome.value;
                cell.annotation = outcome.exact ? "exact" : "partial";
            } else if (p == 0) {
                SearchOutcome outcome = sierpinski_gamma(build_cycle(n), build_cycle(3 * k),
                                                         SearchMode::min, SearchStrategy::automatic,
                                                         limits);
                cell.value = outcome.value;
                cell.annotation = outcome.exact ? "exact" : "partial";
            } else {
                SearchOutcome outcome = resolve_two_value(n, k, p, limits);
                cell.value = outcome.value;
                cell.annotation = !outcome.exact ? "partial"
                                  : outcome.two_value->attained_lower ? "lower" : "upper";
            }
            cells[{n, p}] = cell;
        }

    std::ostringstream out;
    if (config.format == "csv") {
        out << "id,n,k,p,value,annotation\n";
        for (int n = params.n_lo; n <= params.n_hi; ++n)
            for (int p : ps) {
                const Cell& c = cells[{n, p}];
                out << to_string(id) << "," << n << "," << k << "," << p << "," << c.value << ","
                    << c.annotation << "\n";
            }
    } else {
        out << "| n \\ p |";
        for (int p : ps) out << " " << p << " |";
        out << "\n|---|";
        for (std::size_t i = 0; i < ps.size(); ++i) out << "---|";
        out << "\n";
        for (int n = params.n_lo; n <= params.n_hi; ++n) {
            out << "| " << n << " |";
            for (int p : ps) {
                const Cell& c = cells[{n, p}];
                out << " " << c.value << " (" << c.annotation << ") |";
            }
            out << "\n";
        }
    }
    return out.str();
}

SummaryReport run_all(const RunConfig& config) {
    SummaryReport report;
    report.config = config;
    auto t0 = std::chrono::steady_clock::now();
    for (CheckId id : all_check_ids())
        report.checks.push_back(verify(id, default_params(id), config));
    report.overall = Verdict::pass;
    for (const auto& check : report.checks) {
        if (check.verdict == Verdict::fail) {
            report.overall = Verdict::fail;
            break;
        }
        if (check.verdict == Verdict::partial) report.overall = Verdict::partial;
    }
    auto t1 = std::chrono::steady_clock::now();
    report.millis = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
    return report;
}

std::string check_to_json(const TheoremCheck& check) { return check_to_json_obj(check).dump(2); }

std::string check_to_csv(const TheoremCheck& check, bool header) {
    std::ostringstream out;
    if (header) out << "id,n,k,p,computed,expected,ok,partial,note,label\n";
    auto quote = [](std::string s) {
        for (auto& c : s)
            if (c == ',') c = ';';
        return s;
    };
    for (const auto& row : check.rows)
        out << to_string(check.id) << "," << row.n << "," << row.k << "," << row.p << ","
            << row.computed << "," << quote(row.expected) << "," << (row.ok ? 1 : 0) << ","
            << (row.partial ? 1 : 0) << "," << quote(row.note) << "," << quote(row.label) << "\n";
    return out.str();
}

std::string check_to_markdown(const TheoremCheck& check) {
    std::ostringstream out;
    out << "### " << to_string(check.id) << " - " << to_string(check.verdict) << "\n\n";
    out << "| n | k | p | label | computed | expected | ok | note |\n";
    out << "|---|---|---|-------|----------|----------|----|------|\n";
    for (const auto& row : check.rows)
        out << "| " << row.n << " | " << row.k << " | " << row.p << " | " << row.label << " | "
            << row.computed << " | " << row.expected << " | " << (row.ok ? "yes" : "NO") << " | "
            << row.note << " |\n";
    if (!check.repro.empty()) out << "\nrepro: `" << check.repro << "`\n";
    return out.str();
}

std::string report_to_json(const SummaryReport& report) {
    ordered_json j;
    j["tool"] = "sierpdom";
    j["seed"] = report.config.seed;
    j["config"] = {{"solver_cap", report.config.solver_cap},
                   {"budget", report.config.budget},
                   {"workers", report.config.workers},
                   {"format", report.config.format}};
    auto checks = ordered_json::array();
    for (const auto& check : report.checks) checks.push_back(check_to_json_obj(check));
    j["checks"] = std::move(checks);
    j["overall"] = to_string(report.overall);
    j["millis"] = report.millis;
    return j.dump(2);
}

std::string report_to_markdown(const SummaryReport& report) {
    std::ostringstream out;
    out << "# sierpdom verification report\n\n";
    out << "overall: **" << to_string(report.overall) << "** (seed " << report.config.seed
        << ", workers " << report.config.workers << ")\n\n";
    out << "| check | verdict | rows | millis |\n|-------|---------|------|--------|\n";
    for (const auto& check : report.checks)
        out << "| " << to_string(check.id) << " | " << to_string(check.verdict) << " | "
            << check.rows.size() << " | " << check.millis << " |\n";
    out << "\n";
    for (const auto& check : report.checks) out << check_to_markdown(check) << "\n";
    return out.str();
}

Graph parse_graph_spec(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("graph spec '" + spec +
                                    "' (expected cycle:N | path:N | complete:N | "
                                    "circulant:N:j1,j2 | file:PATH)");
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    auto to_int = [&](const std::string& s) {
        try {
            return std::stoi(s);
        } catch (...) {
            throw std::invalid_argument("graph spec '" + spec + "': bad integer '" + s + "'");
        }
    };
    if (kind == "cycle") return build_cycle(to_int(rest));
    if (kind == "path") return build_path(to_int(rest));
    if (kind == "complete") return build_complete(to_int(rest));
    if (kind == "circulant") {
        auto colon2 = rest.find(':');
        if (colon2 == std::string::npos)
            throw std::invalid_argument("circulant spec needs circulant:N:j1,j2,...");
        int n = to_int(rest.substr(0, colon2));
        std::vector<int> jumps;
        std::stringstream ss(rest.substr(colon2 + 1));
        std::string item;
        while (std::getline(ss, item, ',')) jumps.push_back(to_int(item));
        return build_circulant(n, jumps);
    }
    if (kind == "file") {
        std::ifstream in(rest, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open graph file '" + rest + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        std::string text = buffer.str();
        auto ends_with = [&](const std::string& suffix) {
            return rest.size() >= suffix.size() &&
                   rest.compare(rest.size() - suffix.size(), suffix.size(), suffix) == 0;
        };
        if (ends_with(".g6") || ends_with(".graph6")) return decode(text, GraphFormat::graph6);
        if (ends_with(".dot") || ends_with(".gv")) return decode(text, GraphFormat::dot);
        if (ends_with(".json")) return decode(text, GraphFormat::edge_list_json);
        throw std::invalid_argument("cannot infer graph format of '" + rest +
                                    "' (use .g6, .dot or .json)");
    }
    throw std::invalid_argument("unknown graph spec kind '" + kind + "'");
}

FunctionAssignment parse_f_spec(const std::string& spec, const Graph& G, const Graph& H) {
    FunctionAssignment f;
    if (spec == "c18c7") {
        if (G.order() != 18 || H.order() != 7)
            throw std::invalid_argument("f spec c18c7 requires --g cycle:18 --h cycle:7");
        f = f_c18_c7();
    } else if (spec == "pattern:3k1") {
        f = f_3k1(G.order());
    } else if (spec == "pattern:3k2") {
        f = f_3k2(G.order());
    } else if (spec.rfind("constant:", 0) == 0) {
        int h;
        try {
            h = std::stoi(spec.substr(9));
        } catch (...) {
            throw std::invalid_argument("bad constant value in f spec '" + spec + "'");
        }
        if (!H.has_vertex(h))
            throw std::invalid_argument("constant value " + std::to_string(h) +
                                        " is not a vertex of H");
        f = f_constant(G, H, h);
    } else if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        std::ifstream in(path, std::ios::binary);
        if (!in) throw std::invalid_argument("cannot open assignment file '" + path + "'");
        std::stringstream buffer;
        buffer << in.rdbuf();
        f = assignment_from_json(buffer.str());
    } else {
        throw std::invalid_argument("unknown f spec '" + spec +
                                    "' (file:PATH | constant:H | pattern:3k1 | pattern:3k2 | c18c7)");
    }
    if (f.domain_size() != G.order())
        throw std::invalid_argument("assignment covers " + std::to_string(f.domain_size()) +
                                    " vertices, G has " + std::to_string(G.order()));
    for (Vertex g = 1; g <= G.order(); ++g)
        if (!H.has_vertex(f(g)))
            throw std::invalid_argument("f(g_" + std::to_string(g) + ") = " + std::to_string(f(g)) +
                                        " is not a vertex of H");
    return f;
}

}  // namespace sierpdom
