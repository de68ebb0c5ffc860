#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sierpdom/codecs.hpp"
#include "sierpdom/constructions.hpp"
#include "sierpdom/domination.hpp"
#include "sierpdom/harness.hpp"
#include "sierpdom/product.hpp"
#include "sierpdom/search.hpp"

using namespace sierpdom;
using nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitPartial = 2;
constexpr int kExitUsage = 64;

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text << std::endl;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write to '" + out_path + "'");
        out << text;
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

DominationInstance parse_instance(const Graph& g, const std::string& constraints_path) {
    DominationInstance inst{g, {}, {}, {}};
    if (constraints_path.empty()) return inst;
    nlohmann::json j = nlohmann::json::parse(read_file(constraints_path));
    auto read_set = [&](const char* key, std::vector<Vertex>& into) {
        if (!j.contains(key)) return;
        for (const auto& v : j[key]) into.push_back(v.get<int>());
    };
    read_set("forced_in", inst.forced_in);
    read_set("pre_dominated", inst.pre_dominated);
    read_set("deleted", inst.deleted);
    return inst;
}

SearchStrategy strategy_from_string(const std::string& s) {
    if (s == "auto") return SearchStrategy::automatic;
    if (s == "exhaustive") return SearchStrategy::exhaustive;
    if (s == "orbit-reduced") return SearchStrategy::orbit_reduced;
    if (s == "distance-sequence") return SearchStrategy::distance_sequence;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

int verdict_exit(Verdict v) {
    switch (v) {
        case Verdict::pass: return kExitPass;
        case Verdict::fail: return kExitFail;
        case Verdict::partial: return kExitPartial;
    }
    return kExitFail;
}

std::string strip_json_ext(const std::string& path) {
    if (path.size() > 5 && path.compare(path.size() - 5, 5, ".json") == 0)
        return path.substr(0, path.size() - 5);
    return path;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sierpdom: Sierpinski products, exact domination, and the theorem harness"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help");  // frees -h/--h for graph specs
    auto add_subcommand = [&](const std::string& name, const std::string& desc) {
        CLI::App* sub = app.add_subcommand(name, desc);
        sub->set_help_flag("--help", "print help");
        sub->fallthrough();  // global flags may follow the subcommand
        return sub;
    };

    RunConfig config;
    std::string out_path;
    app.add_option("--cap", config.solver_cap, "max product order accepted by harness checks");
    app.add_option("--budget", config.budget, "search budget in solver calls (0 = strategy default)");
    app.add_option("--workers", config.workers, "worker threads for candidate evaluation");
    app.add_option("--seed", config.seed, "seed for the random-instance suites");
    app.add_option("--format", config.format, "json | csv | markdown-table")
        ->check(CLI::IsMember({"json", "csv", "markdown-table"}));
    app.add_option("--out", out_path, "write output to this file instead of stdout");

    // gamma
    auto* cmd_gamma = add_subcommand("gamma", "minimum domination with optional constraints");
    std::string g_spec, h_spec, f_spec, constraints_path;
    cmd_gamma->add_option("--g", g_spec, "graph spec")->required();
    cmd_gamma->add_option("--constraints", constraints_path,
                          "JSON {\"forced_in\":[],\"pre_dominated\":[],\"deleted\":[]}");

    // product
    auto* cmd_product = add_subcommand("product", "construct G (x)_f H and export it");
    std::string product_format = "json";
    cmd_product->add_option("--g", g_spec, "base graph spec")->required();
    cmd_product->add_option("--h", h_spec, "fiber graph spec")->required();
    cmd_product->add_option("--f", f_spec, "assignment spec")->required();
    cmd_product->add_option("--product-format", product_format, "graph6 | dot | json")
        ->check(CLI::IsMember({"graph6", "dot", "json"}));

    // search
    auto* cmd_search = add_subcommand("search", "gamma_S / Gamma_S over all assignments");
    std::string mode = "min", strategy = "auto";
    cmd_search->add_option("--g", g_spec, "base graph spec")->required();
    cmd_search->add_option("--h", h_spec, "fiber graph spec")->required();
    cmd_search->add_option("--mode", mode, "min | max")->check(CLI::IsMember({"min", "max"}));
    cmd_search->add_option("--strategy", strategy,
                           "auto | exhaustive | orbit-reduced | distance-sequence")
        ->check(CLI::IsMember({"auto", "exhaustive", "orbit-reduced", "distance-sequence"}));

    // construct
    auto* cmd_construct = add_subcommand("construct", "assemble a proof's dominating set");
    std::string family;
    int opt_n = 0, opt_k = 1;
    std::string emit_path;
    cmd_construct->add_option("--family", family, "3k1 | 3k2 | claim2")
        ->required()
        ->check(CLI::IsMember({"3k1", "3k2", "claim2"}));
    cmd_construct->add_option("--n", opt_n, "cycle length of G")->required();
    cmd_construct->add_option("--k", opt_k, "k parameter");
    cmd_construct->add_option("--h", h_spec, "fiber graph spec (claim2 only)");
    cmd_construct->add_option("--f", f_spec, "assignment spec (claim2 only)");
    cmd_construct->add_option("--emit", emit_path, "write the plan JSON to this file");

    // check-hk
    auto* cmd_hk = add_subcommand("check-hk", "test membership in the class H_k");
    cmd_hk->add_option("--h", h_spec, "graph spec")->required();
    cmd_hk->add_option("--k", opt_k, "k parameter")->required();

    // verify
    auto* cmd_verify = add_subcommand("verify", "run one theorem check");
    std::string check_name;
    CheckParams params;
    cmd_verify->add_option("--id", check_name, "check id (see README)")->required();
    cmd_verify->add_option("--n-lo", params.n_lo, "low end of the n range");
    cmd_verify->add_option("--n-hi", params.n_hi, "high end of the n range");
    cmd_verify->add_option("--k-lo", params.k_lo, "low end of the k range");
    cmd_verify->add_option("--k-hi", params.k_hi, "high end of the k range");
    cmd_verify->add_option("--p", params.ps, "p values (repeatable)");
    cmd_verify->add_option("--pairs", params.pairs, "random (G,H) pairs");
    cmd_verify->add_option("--funcs", params.funcs, "random assignments per pair");

    // table
    auto* cmd_table = add_subcommand("table", "resolved value table for main-1 or main-2");
    cmd_table->add_option("--id", check_name, "main-1 | main-2")->required();
    cmd_table->add_option("--n-lo", params.n_lo, "low end of the n range");
    cmd_table->add_option("--n-hi", params.n_hi, "high end of the n range");
    cmd_table->add_option("--k", params.k_lo, "k parameter");

    // run-all
    auto* cmd_all = add_subcommand("run-all", "run the whole desk-scale suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        SearchLimits limits{config.budget, config.workers};

        if (*cmd_gamma) {
            Graph g = parse_graph_spec(g_spec);
            DominationInstance inst = parse_instance(g, constraints_path);
            auto t0 = std::chrono::steady_clock::now();
            DominationCertificate cert = solve(inst);
            auto t1 = std::chrono::steady_clock::now();
            ordered_json j;
            j["gamma"] = cert.gamma;
            j["witness"] = cert.witness;
            j["nodes_explored"] = cert.nodes_explored;
            j["millis"] = std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
            emit(j.dump(), out_path);
            return kExitPass;
        }

        if (*cmd_product) {
            Graph G = parse_graph_spec(g_spec);
            Graph H = parse_graph_spec(h_spec);
            FunctionAssignment f = parse_f_spec(f_spec, G, H);
            SierpinskiProduct P = product(G, H, f);
            std::string text;
            if (product_format == "dot")
                text = P.to_dot();
            else if (product_format == "graph6")
                text = encode(P.graph(), GraphFormat::graph6);
            else
                text = encode(P.graph(), GraphFormat::edge_list_json);
            emit(text, out_path);
            return kExitPass;
        }

        if (*cmd_search) {
            Graph G = parse_graph_spec(g_spec);
            Graph H = parse_graph_spec(h_spec);
            SearchOutcome outcome =
                sierpinski_gamma(G, H, mode == "min" ? SearchMode::min : SearchMode::max,
                                 strategy_from_string(strategy), limits);
            emit(outcome_to_json(outcome), out_path);
            return outcome.exact ? kExitPass : kExitPartial;
        }

        if (*cmd_construct) {
            LayerSetPlan plan;
            if (family == "3k1") {
                plan = build_3k1_set(opt_n, opt_k);
            } else if (family == "3k2") {
                plan = build_3k2_set(opt_n, opt_k);
            } else {
                if (h_spec.empty() || f_spec.empty())
                    throw std::invalid_argument("claim2 needs --h and --f");
                Graph G = build_cycle(opt_n);
                Graph H = parse_graph_spec(h_spec);
                FunctionAssignment f = parse_f_spec(f_spec, G, H);
                plan = build_claim2_set(G, H, f);
                opt_k = gamma(H) - 1;
            }
            std::string text = plan_to_json(plan, family, opt_n, opt_k);
            if (!emit_path.empty())
                emit(text, emit_path);
            else
                emit(text, out_path);
            return kExitPass;
        }

        if (*cmd_hk) {
            Graph H = parse_graph_spec(h_spec);
            HkReport report = check_Hk(H, opt_k);
            ordered_json j;
            j["k"] = report.k;
            j["gamma"] = report.gamma_h;
            j["property_a"] = report.property_a;
            j["property_b"] = report.property_b;
            j["member"] = report.member;
            auto va = ordered_json::array();
            for (const auto& ev : report.vertex_evidence) va.push_back({{"v", ev.v}, {"gamma_without", ev.gamma_without}});
            j["vertex_evidence"] = std::move(va);
            auto pb = ordered_json::array();
            for (const auto& ev : report.pair_evidence)
                pb.push_back({{"x", ev.x}, {"y", ev.y}, {"gamma_forced", ev.gamma_forced}});
            j["pair_evidence"] = std::move(pb);
            emit(j.dump(2), out_path);
            return report.member ? kExitPass : kExitFail;
        }

        if (*cmd_verify) {
            CheckId id = check_id_from_string(check_name);
            CheckParams defaults = default_params(id);
            if (params.n_lo == 0) params.n_lo = defaults.n_lo;
            if (params.n_hi == 0) params.n_hi = defaults.n_hi;
            if (params.k_lo == 0) params.k_lo = defaults.k_lo;
            if (params.k_hi == 0) params.k_hi = defaults.k_hi;
            if (params.ps.empty()) params.ps = defaults.ps;
            if (params.pairs == 0) params.pairs = defaults.pairs;
            if (params.funcs == 0) params.funcs = defaults.funcs;
            TheoremCheck check = verify(id, params, config);
            std::string text;
            if (config.format == "csv")
                text = check_to_csv(check);
            else if (config.format == "markdown-table")
                text = check_to_markdown(check);
            else
                text = check_to_json(check);
            emit(text, out_path);
            std::cerr << to_string(check.id) << ": " << to_string(check.verdict) << " ("
                      << check.rows.size() << " rows, " << check.millis << " ms)\n";
            return verdict_exit(check.verdict);
        }

        if (*cmd_table) {
            CheckId id = check_id_from_string(check_name);
            if (params.n_lo == 0) params.n_lo = 3;
            if (params.n_hi == 0) params.n_hi = 8;
            if (params.k_lo == 0) params.k_lo = 1;
            emit(render_table(id, params, config), out_path);
            return kExitPass;
        }

        if (*cmd_all) {
            SummaryReport report = run_all(config);
            for (const auto& check : report.checks)
                std::cerr << to_string(check.id) << ": " << to_string(check.verdict) << " ("
                          << check.millis << " ms)\n";
            if (!out_path.empty()) {
                std::string base = strip_json_ext(out_path);
                emit(report_to_json(report), base + ".json");
                emit(report_to_markdown(report), base + ".md");
            } else if (config.format == "markdown-table") {
                emit(report_to_markdown(report), "");
            } else {
                emit(report_to_json(report), "");
            }
            std::cerr << "overall: " << to_string(report.overall) << " (" << report.millis
                      << " ms)\n";
            return verdict_exit(report.overall);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
