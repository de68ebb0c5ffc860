#ifndef SIERPDOM_HARNESS_HPP
#define SIERPDOM_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "sierpdom/graph.hpp"
#include "sierpdom/product.hpp"

namespace sierpdom {

enum class CheckId {
    elementary,
    equ_upper,
    gamma1_prop,
    main_1,
    main_2,
    thm1_Hk,
    prop1_Hk,
    dom_3k1,
    udom_3k1,
    dom_3k2,
    udom_3k2,
    dom_3k,
    c18c7_example,
};

const std::vector<CheckId>& all_check_ids();
std::string to_string(CheckId id);
CheckId check_id_from_string(const std::string& name);

enum class Verdict { pass, fail, partial };
std::string to_string(Verdict v);

struct RunConfig {
    int solver_cap = 512;
    long long budget = 0;  // 0 = per-strategy search defaults
    int workers = 1;
    std::string format = "json";  // json | csv | markdown-table
    std::uint64_t seed = 1;
};

// Instance ranges; checks read the fields they need.
struct CheckParams {
    int n_lo = 0, n_hi = 0;
    int k_lo = 0, k_hi = 0;
    std::vector<int> ps;
    int pairs = 0;  // elementary: random (G,H) pairs
    int funcs = 0;  // elementary: random f per pair
};

CheckParams default_params(CheckId id);

struct EvidenceRow {
    int n = -1, k = -1, p = -1;  // -1 when not applicable
    std::string label;
    long long computed = 0;
    std::string expected;
    bool ok = false;
    bool partial = false;  // budget exhaustion, never a mismatch
    std::string note;
};

struct TheoremCheck {
    CheckId id = CheckId::elementary;
    CheckParams params;
    Verdict verdict = Verdict::pass;
    std::vector<EvidenceRow> rows;
    std::string repro;  // minimal reproduction command for a fail
    long long millis = 0;
};

TheoremCheck verify(CheckId id, const CheckParams& params, const RunConfig& config);

// Per-(n,p) table of exact values for main-1 or main-2, with lower/upper
// annotations where the theorem pins a 2-element set. Format from config.
std::string render_table(CheckId id, const CheckParams& params, const RunConfig& config);

struct SummaryReport {
    RunConfig config;
    std::vector<TheoremCheck> checks;
    Verdict overall = Verdict::pass;
    long long millis = 0;
};

SummaryReport run_all(const RunConfig& config);

std::string check_to_json(const TheoremCheck& check);
std::string check_to_csv(const TheoremCheck& check, bool header = true);
std::string check_to_markdown(const TheoremCheck& check);
std::string report_to_json(const SummaryReport& report);
std::string report_to_markdown(const SummaryReport& report);

// cycle:N | path:N | complete:N | circulant:N:j1,j2 | file:PATH
Graph parse_graph_spec(const std::string& spec);

// file:PATH | constant:h | pattern:3k1 | pattern:3k2 | c18c7
FunctionAssignment parse_f_spec(const std::string& spec, const Graph& G, const Graph& H);

}  // namespace sierpdom

#endif
