#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <functional>

#include <json.hpp>

#include "sierpdom/codecs.hpp"
#include "sierpdom/domination.hpp"
#include "sierpdom/harness.hpp"

using namespace sierpdom;

namespace {

nlohmann::json without_millis(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    std::function<void(nlohmann::json&)> scrub = [&](nlohmann::json& node) {
        if (node.is_object()) {
            node.erase("millis");
            for (auto& [key, value] : node.items()) scrub(value);
        } else if (node.is_array()) {
            for (auto& value : node) scrub(value);
        }
    };
    scrub(j);
    return j;
}

struct TempFile {
    std::string path;
    TempFile(const std::string& name, const std::string& content)
        : path("/tmp/sierpdom_test_" + name) {
        std::ofstream out(path, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("check ids round-trip through their names") {
    for (CheckId id : all_check_ids()) CHECK(check_id_from_string(to_string(id)) == id);
    CHECK_THROWS_AS(check_id_from_string("nope"), std::invalid_argument);
}

TEST_CASE("every check passes on a trimmed range") {
    RunConfig config;
    for (CheckId id : all_check_ids()) {
        CheckParams pm = default_params(id);
        if (pm.n_hi > 5) pm.n_hi = 5;
        if (pm.k_hi > 1 && id != CheckId::prop1_Hk) pm.k_hi = 1;
        if (pm.pairs > 10) pm.pairs = 10;
        if (pm.funcs > 5) pm.funcs = 5;
        TheoremCheck check = verify(id, pm, config);
        CAPTURE(to_string(id));
        CHECK(check.verdict == Verdict::pass);
        CHECK(!check.rows.empty());
        CHECK(check.repro.empty());
    }
}

TEST_CASE("reports are byte-identical across runs, up to timing") {
    RunConfig config;
    config.seed = 7;
    CheckParams pm = default_params(CheckId::main_1);
    pm.n_hi = 4;
    std::string a = check_to_json(verify(CheckId::main_1, pm, config));
    std::string b = check_to_json(verify(CheckId::main_1, pm, config));
    CHECK(without_millis(a) == without_millis(b));

    RunConfig parallel = config;
    parallel.workers = 4;
    std::string c = check_to_json(verify(CheckId::main_1, pm, parallel));
    CHECK(without_millis(a) == without_millis(c));
}

TEST_CASE("budget exhaustion yields partial, never fail") {
    RunConfig config;
    config.budget = 2;
    CheckParams pm = default_params(CheckId::main_2);
    pm.n_hi = 4;
    TheoremCheck check = verify(CheckId::main_2, pm, config);
    CHECK(check.verdict == Verdict::partial);
    for (const auto& row : check.rows) CHECK((row.ok || row.partial));
}

TEST_CASE("different seeds still pass the random suites") {
    RunConfig config;
    config.seed = 424242;
    CheckParams pm = default_params(CheckId::elementary);
    pm.pairs = 15;
    pm.funcs = 10;
    CHECK(verify(CheckId::elementary, pm, config).verdict == Verdict::pass);
}

TEST_CASE("graph specs parse") {
    CHECK(parse_graph_spec("cycle:5") == build_cycle(5));
    CHECK(parse_graph_spec("path:3") == build_path(3));
    CHECK(parse_graph_spec("complete:4") == build_complete(4));
    CHECK(parse_graph_spec("circulant:7:1,2") == build_circulant(7, {1, 2}));

    TempFile g6("g.g6", encode(build_cycle(9), GraphFormat::graph6));
    CHECK(parse_graph_spec("file:" + g6.path) == build_cycle(9));
    TempFile js("g.json", encode(build_cycle(9), GraphFormat::edge_list_json));
    CHECK(parse_graph_spec("file:" + js.path) == build_cycle(9));
    TempFile dot("g.dot", encode(build_cycle(9), GraphFormat::dot));
    CHECK(parse_graph_spec("file:" + dot.path) == build_cycle(9));

    CHECK_THROWS_AS(parse_graph_spec("torus:3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("cycle:x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph_spec("file:/tmp/does_not_exist.g6"), std::invalid_argument);
}

TEST_CASE("assignment specs parse") {
    Graph G = build_cycle(4), H = build_cycle(4);
    CHECK(parse_f_spec("constant:2", G, H).values == std::vector<int>(4, 2));
    CHECK(parse_f_spec("pattern:3k1", G, H).values == std::vector<int>{1, 1, 3, 3});
    CHECK(parse_f_spec("pattern:3k2", G, build_cycle(5)).values == std::vector<int>{1, 2, 3, 3});
    CHECK(parse_f_spec("c18c7", build_cycle(18), build_cycle(7)).domain_size() == 18);

    TempFile f("f.json", R"({"n":4,"f":[2,1,4,3]})");
    CHECK(parse_f_spec("file:" + f.path, G, H).values == std::vector<int>{2, 1, 4, 3});

    CHECK_THROWS_AS(parse_f_spec("c18c7", G, H), std::invalid_argument);
    CHECK_THROWS_AS(parse_f_spec("constant:9", G, H), std::invalid_argument);
    CHECK_THROWS_AS(parse_f_spec("mystery", G, H), std::invalid_argument);
    TempFile bad("fbad.json", R"({"n":4,"f":[2,1,4,9]})");
    CHECK_THROWS_AS(parse_f_spec("file:" + bad.path, G, H), std::invalid_argument);
}

TEST_CASE("tables render in markdown and csv") {
    RunConfig config;
    CheckParams pm;
    pm.n_lo = 3;
    pm.n_hi = 4;
    pm.k_lo = 1;

    std::string md = render_table(CheckId::main_2, pm, config);
    CHECK(md.find("| n \\ p |") != std::string::npos);
    CHECK(md.find("(exact)") != std::string::npos);

    config.format = "csv";
    std::string csv = render_table(CheckId::main_1, pm, config);
    CHECK(csv.rfind("id,n,k,p,value,annotation\n", 0) == 0);
    CHECK(csv.find("main-1,4,1,1,4,lower") != std::string::npos);
    CHECK(csv.find("main-1,3,1,0,3,exact") != std::string::npos);

    CHECK_THROWS_AS(render_table(CheckId::elementary, pm, config), std::invalid_argument);
}

TEST_CASE("serialization shapes") {
    RunConfig config;
    CheckParams pm = default_params(CheckId::c18c7_example);
    TheoremCheck check = verify(CheckId::c18c7_example, pm, config);

    std::string j = check_to_json(check);
    CHECK(j.find("\"id\": \"c18c7-example\"") != std::string::npos);
    CHECK(j.find("\"verdict\": \"pass\"") != std::string::npos);

    std::string csv = check_to_csv(check);
    CHECK(csv.rfind("id,n,k,p,computed,expected,ok,partial,note,label\n", 0) == 0);
    CHECK(csv.find("c18c7-example,18,2,1,36,36,1,0") != std::string::npos);

    std::string md = check_to_markdown(check);
    CHECK(md.find("### c18c7-example - pass") != std::string::npos);
}

TEST_CASE("over-cap params are refused") {
    RunConfig config;
    config.solver_cap = 1;
    CheckParams pm = default_params(CheckId::main_2);
    pm.n_hi = 3;
    CHECK_THROWS_AS(verify(CheckId::main_2, pm, config), SolverCapError);
}
