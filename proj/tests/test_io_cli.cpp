#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "dsc/dsc.hpp"

using namespace dsc;

namespace {

std::filesystem::path temp_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() / "dsc_cli_tests";
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

int run_cli(const std::string& args, const std::string& stdout_file = "",
            const std::string& env = "") {
    std::string cmd;
    if (!env.empty()) cmd += env + " ";
    cmd += "\"" DSC_CLI_PATH "\" " + args;
    if (!stdout_file.empty()) cmd += " > \"" + stdout_file + "\" 2>/dev/null";
    else cmd += " > /dev/null 2>&1";
    int rc = std::system(cmd.c_str());
    return WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    out << text;
}

} // namespace

TEST_CASE("complex json round trip") {
    SimplicialComplex ico = icosahedron_complex();
    auto j = complex_to_json(ico);
    SimplicialComplex back = complex_from_json(j);
    REQUIRE(back == ico);

    SimplicialComplex empty;
    REQUIRE(complex_from_json(complex_to_json(empty)) == empty);
}

TEST_CASE("graph json round trip") {
    Graph g = icosahedron_graph();
    Graph back = graph_from_json(graph_to_json(g));
    REQUIRE(back == g);
    Graph lonely = Graph::from_vertices_edges({5}, {});
    REQUIRE(graph_from_json(graph_to_json(lonely)) == lonely);
}

TEST_CASE("input detection") {
    LoadedInput a = parse_input_json(graph_to_json(cycle_graph(5)));
    REQUIRE(a.from_graph);
    REQUIRE(a.graph.vertex_count() == 5);
    LoadedInput b = parse_input_json(complex_to_json(moebius_complex()));
    REQUIRE_FALSE(b.from_graph);
    REQUIRE(b.complex.fvector() == std::vector<long long>{8, 16, 8});
}

TEST_CASE("malformed inputs are rejected with diagnostics") {
    REQUIRE_THROWS_AS(parse_input_json(nlohmann::json{{"foo", 1}}), invalid_input_error);
    REQUIRE_THROWS_AS(complex_from_json(nlohmann::json{{"facets", "x"}}),
                      invalid_input_error);
    REQUIRE_THROWS_AS(complex_from_json(nlohmann::json{{"facets", {{-1, 2}}}}),
                      invalid_input_error);
    REQUIRE_THROWS_AS(
        graph_from_json(nlohmann::json{{"vertices", {1}}, {"edges", {{1, 2}}}}),
        invalid_input_error);
    try {
        complex_from_json(nlohmann::json{{"facets", "x"}});
        FAIL("expected a throw");
    } catch (const invalid_input_error& e) {
        REQUIRE(std::string(e.what()).find("facets") != std::string::npos);
    }
}

TEST_CASE("analysis report for the icosahedron") {
    LoadedInput in = parse_input_json(graph_to_json(icosahedron_graph()));
    AnalysisReport r = analyze(in);
    REQUIRE(r.dimension == 2);
    REQUIRE(r.chi == 2);
    REQUIRE(r.fvector == std::vector<long long>{12, 30, 20});
    REQUIRE(r.hvector == std::vector<Integer>{1, 9, 9, 1});
    REQUIRE(r.ds);
    REQUIRE(r.roots_available);
    auto j = report_to_json(r);
    REQUIRE(j["ds_symmetric"] == true);
    REQUIRE(j["fvector"].size() == 3);
    std::string csv = report_to_csv(r);
    REQUIRE(csv.find("ds_symmetric,true") != std::string::npos);
}

TEST_CASE("cli generate and analyze") {
    auto dir = temp_dir();
    auto ico = (dir / "ico.json").string();
    REQUIRE(run_cli("generate icosahedron -o \"" + ico + "\"") == 0);

    auto out = (dir / "ico_report.json").string();
    REQUIRE(run_cli("analyze \"" + ico + "\"", out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    REQUIRE(j["ds_symmetric"] == true);
    REQUIRE(j["chi"] == 2);
    REQUIRE(j["hvector"] == nlohmann::json::array({"1", "9", "9", "1"}));

    auto csv_out = (dir / "ico_report.csv").string();
    REQUIRE(run_cli("analyze --csv \"" + ico + "\"", csv_out) == 0);
    REQUIRE(slurp(csv_out).find("ds_symmetric,true") != std::string::npos);
}

TEST_CASE("cli exit codes") {
    auto dir = temp_dir();
    REQUIRE(run_cli("--help") == 0);
    REQUIRE(run_cli("") == 2);                       // missing subcommand
    REQUIRE(run_cli("analyze /nonexistent.json") == 2);
    auto bad = dir / "bad.json";
    spit(bad, "{ not json");
    REQUIRE(run_cli("analyze \"" + bad.string() + "\"") == 2);
    REQUIRE(run_cli("generate cycle 2") == 2);       // cycles need at least 3 vertices
    REQUIRE(run_cli("generate nosuchkind 1") == 2);

    auto k8 = dir / "k8.json";
    REQUIRE(run_cli("generate complete 8 -o \"" + k8.string() + "\"") == 0);
    REQUIRE(run_cli("refine --mode barycentric \"" + k8.string() + "\" -o \"" +
                        (dir / "k8b.json").string() + "\"",
                    "", "DSC_CAP_SIMPLICES=10") == 3);
}

TEST_CASE("cli refine modes") {
    auto dir = temp_dir();
    auto c4 = (dir / "c4.json").string();
    REQUIRE(run_cli("generate cycle 4 -o \"" + c4 + "\"") == 0);

    auto b = (dir / "c4b.json").string();
    REQUIRE(run_cli("refine --mode barycentric \"" + c4 + "\" -o \"" + b + "\"") == 0);
    SimplicialComplex refined = complex_from_json(nlohmann::json::parse(slurp(b)));
    REQUIRE(refined.fvector() == std::vector<long long>{8, 8});

    auto e = (dir / "c4e.json").string();
    REQUIRE(run_cli("refine --mode edge --edge 1,2 \"" + c4 + "\" -o \"" + e + "\"") == 0);
    LoadedInput in = parse_input_json(nlohmann::json::parse(slurp(e)));
    REQUIRE(in.from_graph);
    REQUIRE(whitney(in.graph).fvector() == std::vector<long long>{5, 5});

    auto r = (dir / "c4r.json").string();
    REQUIRE(run_cli("refine --mode edge --random 3 --seed 11 \"" + c4 + "\" -o \"" + r +
                    "\"") == 0);
    LoadedInput rin = parse_input_json(nlohmann::json::parse(slurp(r)));
    REQUIRE(whitney(rin.graph).fvector() == std::vector<long long>{7, 7});

    REQUIRE(run_cli("refine --mode edge --edge 1,3 \"" + c4 + "\"") == 2); // not an edge
}

TEST_CASE("cli operator output") {
    auto dir = temp_dir();
    auto out = (dir / "op3.json").string();
    REQUIRE(run_cli("operator --dim 3 --matrix --json", out) == 0);
    auto j = nlohmann::json::parse(slurp(out));
    REQUIRE(j["matrix"][1] == nlohmann::json::array({"0", "2", "6", "14"}));

    auto txt = (dir / "op3.txt").string();
    REQUIRE(run_cli("operator --dim 3", txt) == 0);
    std::string text = slurp(txt);
    REQUIRE(text.find("24") != std::string::npos);

    REQUIRE(run_cli("operator --dim -1") == 2);
}

TEST_CASE("cli experiments are deterministic") {
    auto dir = temp_dir();
    auto base1 = (dir / "roots1").string();
    auto base2 = (dir / "roots2").string();
    std::string args = "experiment-roots --dim 2 --steps 4 --seed 5 --refinements 3 -o ";
    REQUIRE(run_cli(args + "\"" + base1 + "\"") == 0);
    REQUIRE(run_cli(args + "\"" + base2 + "\"") == 0);
    REQUIRE(slurp(base1 + ".csv") == slurp(base2 + ".csv"));
    REQUIRE(slurp(base1 + ".svg") == slurp(base2 + ".svg"));
    REQUIRE_FALSE(slurp(base1 + ".csv").empty());
    REQUIRE_FALSE(slurp(base1 + ".svg").empty());

    auto s1 = (dir / "search1.csv").string();
    auto s2 = (dir / "search2.csv").string();
    std::string sargs = "experiment-search --n 6 --p 0.4 --trials 40 --seed 9";
    REQUIRE(run_cli(sargs, s1) == 0);
    REQUIRE(run_cli(sargs, s2) == 0);
    REQUIRE(slurp(s1) == slurp(s2));
    REQUIRE_FALSE(slurp(s1).empty());
}

TEST_CASE("roots experiment output shape") {
    RootsExperimentConfig cfg;
    cfg.start_f = {6, 12, 8};
    cfg.source_label = "octahedron";
    cfg.refinements = 2;
    cfg.seed = 0;
    RootsExperimentResult r = run_roots_experiment(cfg);
    REQUIRE(r.steps.size() == 3);
    REQUIRE_FALSE(r.truncated);
    REQUIRE(r.csv.rfind("source,seed,step,degree,all_real,pairing_symmetric,"
                        "residual_bound,root_index,re,im,is_real\n",
                        0) == 0);
    // 3 steps, 3 roots each, plus the header
    REQUIRE(std::count(r.csv.begin(), r.csv.end(), '\n') == 10);
    REQUIRE(r.steps[1].fvec == std::vector<Integer>{26, 72, 48});
    REQUIRE(r.svg.find("<svg") != std::string::npos);

    REQUIRE_THROWS_AS(run_roots_experiment(RootsExperimentConfig{}), invalid_input_error);
    RootsExperimentConfig bad;
    bad.start_f = {1};
    bad.refinements = 65;
    REQUIRE_THROWS_AS(run_roots_experiment(bad), invalid_input_error);
}

TEST_CASE("roots experiment truncates runaway coefficients") {
    RootsExperimentConfig cfg;
    cfg.start_f = std::vector<Integer>(13, 1); // dimension 12 grows by 13! per step
    cfg.source_label = "big";
    cfg.refinements = 64;
    RootsExperimentResult r = run_roots_experiment(cfg);
    REQUIRE(r.truncated);
    REQUIRE_FALSE(r.truncation_reason.empty());
    REQUIRE(r.steps.size() < 64);
    REQUIRE(r.csv.find("unsolved") != std::string::npos); // the truncated row
}

TEST_CASE("search experiment output shape") {
    SearchExperimentConfig cfg;
    cfg.n = 5;
    cfg.exhaustive = true;
    SearchExperimentResult r = run_search_experiment(cfg);
    REQUIRE(r.csv.rfind("record,n,p,seed,trialOrClass,dimension,ds,labeled_count,"
                        "fvector,edges\n",
                        0) == 0);
    REQUIRE(r.graphs_examined == 1024);
    REQUIRE(r.ds_hits == 72); // 12 labeled 5-cycles plus 60 labeled tailed 4-cycles
    REQUIRE(r.csv.find("summary") != std::string::npos);

    SearchExperimentConfig bad;
    bad.n = 8;
    bad.exhaustive = true;
    REQUIRE_THROWS_AS(run_search_experiment(bad), invalid_input_error);
    bad = SearchExperimentConfig{};
    bad.p = 1.5;
    REQUIRE_THROWS_AS(run_search_experiment(bad), invalid_input_error);
    bad = SearchExperimentConfig{};
    bad.n = 0;
    REQUIRE_THROWS_AS(run_search_experiment(bad), invalid_input_error);
}

TEST_CASE("sampling search is seed stable") {
    SearchExperimentConfig cfg;
    cfg.n = 7;
    cfg.p = 0.35;
    cfg.trials = 30;
    cfg.seed = 4;
    SearchExperimentResult a = run_search_experiment(cfg);
    SearchExperimentResult b = run_search_experiment(cfg);
    REQUIRE(a.csv == b.csv);
    REQUIRE(a.graphs_examined == 30);
}

TEST_CASE("polynomial and report serialization helpers") {
    FPolynomial f = FPolynomial::from_coeffs({1, 12, 30, 20});
    auto j = polynomial_to_json(f);
    REQUIRE(j == nlohmann::json::array({"1", "12", "30", "20"}));
    RootSet rs = roots(f);
    auto rj = roots_to_json(rs);
    REQUIRE(rj["roots"].size() == 3);
    REQUIRE(rj.contains("residual_bound"));
}
