#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dsc/dsc.hpp"

namespace {

void emit(const std::string& content, const std::string& out_path) {
    if (out_path.empty())
        std::cout << content;
    else
        dsc::write_text_file(out_path, content);
}

std::string aligned_integer_grid(const std::vector<std::vector<dsc::Integer>>& m) {
    std::size_t width = 0;
    for (const auto& row : m)
        for (const auto& x : row) width = std::max(width, x.str().size());
    std::ostringstream out;
    for (const auto& row : m) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            std::string s = row[j].str();
            out << std::string(width - s.size() + (j ? 2 : 0), ' ') << s;
        }
        out << "\n";
    }
    return out.str();
}

std::string functional_lines(const std::vector<dsc::Functional>& fs) {
    std::ostringstream out;
    for (const auto& f : fs) {
        out << "eigenvalue " << f.eigenvalue.str() << ": [";
        for (std::size_t i = 0; i < f.coefficients.size(); ++i) {
            if (i) out << ", ";
            out << f.coefficients[i].str();
        }
        out << "]\n";
    }
    return out.str();
}

std::vector<dsc::Integer> parse_fvector(const std::string& text) {
    std::vector<dsc::Integer> out;
    std::string token;
    std::istringstream ss(text);
    while (std::getline(ss, token, ',')) {
        if (token.empty()) throw dsc::invalid_input_error("--fvector: empty entry");
        try {
            out.emplace_back(dsc::Integer(token));
        } catch (const std::exception&) {
            throw dsc::invalid_input_error("--fvector: cannot parse '" + token + "'");
        }
    }
    if (out.empty()) throw dsc::invalid_input_error("--fvector: no entries");
    return out;
}

int run(int argc, char** argv) {
    CLI::App app{"exact simplicial-complex calculator"};
    app.require_subcommand(1);

    // analyze
    std::string an_input;
    bool an_csv = false;
    CLI::App* analyze = app.add_subcommand("analyze", "full report for a complex or graph file");
    analyze->add_option("input", an_input, "input JSON file")->required();
    analyze->add_flag("--csv", an_csv, "emit key,value CSV instead of JSON");

    // generate
    std::string gen_kind, gen_out;
    std::vector<std::string> gen_params;
    std::uint64_t gen_seed = 0;
    CLI::App* generate = app.add_subcommand("generate", "write a named graph or complex");
    generate->add_option("kind", gen_kind,
                         "cross_polytope|cycle|complete|star|wheel|sun|icosahedron|moebius|"
                         "erdos_renyi|random_sphere")
        ->required();
    generate->add_option("params", gen_params, "numeric parameters for the kind");
    generate->add_option("--seed", gen_seed, "seed for random kinds");
    generate->add_option("-o,--output", gen_out, "output file (default stdout)");

    // refine
    std::string rf_mode = "barycentric", rf_edge, rf_input, rf_out;
    int rf_random = 0;
    std::uint64_t rf_seed = 0;
    CLI::App* refine = app.add_subcommand("refine", "barycentric or edge refinement");
    refine->add_option("--mode", rf_mode, "barycentric|edge")
        ->check(CLI::IsMember({"barycentric", "edge"}));
    refine->add_option("--edge", rf_edge, "a,b edge to refine (edge mode)");
    refine->add_option("--random", rf_random, "number of random edge refinements (edge mode)");
    refine->add_option("--seed", rf_seed, "seed for --random");
    refine->add_option("input", rf_input, "input JSON file")->required();
    refine->add_option("-o,--output", rf_out, "output file (default stdout)");

    // operator
    int op_dim = 2;
    bool op_matrix = false, op_functionals = false, op_invariants = false, op_perron = false,
         op_json = false;
    CLI::App* oper = app.add_subcommand("operator", "refinement-operator tables");
    oper->add_option("--dim", op_dim, "dimension d")->required();
    oper->add_flag("--matrix", op_matrix, "print the operator matrix (default)");
    oper->add_flag("--functionals", op_functionals, "print all eigen-functionals");
    oper->add_flag("--invariants", op_invariants, "print the symmetry-invariant functionals");
    oper->add_flag("--perron", op_perron, "print the Perron vector");
    oper->add_flag("--json", op_json, "emit JSON instead of text");

    // experiment-roots
    std::string er_input, er_fvector, er_out;
    int er_dim = -1, er_steps = 0, er_refinements = 8;
    std::uint64_t er_seed = 0;
    CLI::App* exroots = app.add_subcommand("experiment-roots",
                                           "root loci under repeated refinement");
    exroots->add_option("--input", er_input, "complex/graph JSON file as the start");
    exroots->add_option("--fvector", er_fvector, "comma-separated starting f-vector");
    exroots->add_option("--dim", er_dim, "random sphere dimension");
    exroots->add_option("--steps", er_steps, "random sphere edge refinements");
    exroots->add_option("--refinements", er_refinements, "operator applications to track");
    exroots->add_option("--seed", er_seed, "seed for the random sphere");
    exroots->add_option("-o,--output", er_out, "output base path (writes .csv and .svg)");

    // experiment-search
    int es_n = 8, es_trials = 100;
    double es_p = 0.5;
    std::uint64_t es_seed = 0;
    bool es_exhaustive = false;
    std::string es_out;
    CLI::App* exsearch = app.add_subcommand("experiment-search",
                                            "search graphs for f-function symmetry");
    exsearch->add_option("--n", es_n, "vertex count")->required();
    exsearch->add_option("--p", es_p, "edge probability (sampling mode)");
    exsearch->add_option("--trials", es_trials, "sample count (sampling mode)");
    exsearch->add_option("--seed", es_seed, "seed");
    exsearch->add_flag("--exhaustive", es_exhaustive, "enumerate all labeled graphs (n <= 7)");
    exsearch->add_option("-o,--output", es_out, "output CSV file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*analyze) {
        dsc::LoadedInput in = dsc::read_input(an_input);
        dsc::AnalysisReport r = dsc::analyze(in);
        if (an_csv)
            std::cout << dsc::report_to_csv(r);
        else
            std::cout << dsc::report_to_json(r).dump(2) << "\n";
        return 0;
    }

    if (*generate) {
        auto need = [&](std::size_t k) {
            if (gen_params.size() != k)
                throw dsc::invalid_input_error("generate " + gen_kind + ": expected " +
                                               std::to_string(k) + " parameter(s)");
        };
        auto as_int = [&](std::size_t i) {
            try {
                return std::stoi(gen_params.at(i));
            } catch (const std::exception&) {
                throw dsc::invalid_input_error("generate: bad integer '" + gen_params.at(i) +
                                               "'");
            }
        };
        auto as_double = [&](std::size_t i) {
            try {
                return std::stod(gen_params.at(i));
            } catch (const std::exception&) {
                throw dsc::invalid_input_error("generate: bad number '" + gen_params.at(i) +
                                               "'");
            }
        };
        dsc::json j;
        if (gen_kind == "cross_polytope") {
            need(1);
            j = dsc::graph_to_json(dsc::cross_polytope_graph(as_int(0)));
        } else if (gen_kind == "cycle") {
            need(1);
            j = dsc::graph_to_json(dsc::cycle_graph(as_int(0)));
        } else if (gen_kind == "complete") {
            need(1);
            j = dsc::graph_to_json(dsc::complete_graph(as_int(0)));
        } else if (gen_kind == "star") {
            need(1);
            j = dsc::graph_to_json(dsc::star_graph(as_int(0)));
        } else if (gen_kind == "wheel") {
            need(1);
            j = dsc::graph_to_json(dsc::wheel_graph(as_int(0)));
        } else if (gen_kind == "sun") {
            need(2);
            j = dsc::graph_to_json(dsc::sun_graph(as_int(0), as_int(1)));
        } else if (gen_kind == "icosahedron") {
            need(0);
            j = dsc::complex_to_json(dsc::icosahedron_complex());
        } else if (gen_kind == "moebius") {
            need(0);
            j = dsc::complex_to_json(dsc::moebius_complex());
        } else if (gen_kind == "erdos_renyi") {
            need(2);
            j = dsc::graph_to_json(dsc::erdos_renyi(as_int(0), as_double(1), gen_seed));
        } else if (gen_kind == "random_sphere") {
            need(2);
            j = dsc::graph_to_json(dsc::random_sphere(as_int(0), as_int(1), gen_seed));
        } else {
            throw dsc::invalid_input_error("generate: unknown kind '" + gen_kind + "'");
        }
        emit(j.dump(2) + "\n", gen_out);
        return 0;
    }

    if (*refine) {
        dsc::LoadedInput in = dsc::read_input(rf_input);
        if (rf_mode == "barycentric") {
            dsc::SimplicialComplex refined = dsc::barycentric(in.complex);
            emit(dsc::complex_to_json(refined).dump(2) + "\n", rf_out);
            return 0;
        }
        dsc::Graph g;
        if (in.from_graph) {
            g = in.graph;
        } else if (dsc::is_whitney_of_skeleton(in.complex)) {
            g = in.complex.skeleton();
        } else {
            throw dsc::invalid_input_error(
                "refine --mode edge: input complex is not the Whitney complex of its skeleton");
        }
        if (!rf_edge.empty()) {
            auto comma = rf_edge.find(',');
            if (comma == std::string::npos)
                throw dsc::invalid_input_error("refine --edge: expected a,b");
            int a = 0, b = 0;
            try {
                a = std::stoi(rf_edge.substr(0, comma));
                b = std::stoi(rf_edge.substr(comma + 1));
            } catch (const std::exception&) {
                throw dsc::invalid_input_error("refine --edge: expected a,b with integers");
            }
            g = g.edge_refine(a, b);
        }
        if (rf_random > 0) {
            dsc::CounterRng rng(rf_seed);
            for (int i = 0; i < rf_random; ++i) {
                if (g.edges().empty())
                    throw dsc::invalid_input_error("refine --random: graph has no edges");
                auto [a, b] = g.edges()[static_cast<std::size_t>(
                    rng.next_below(g.edges().size()))];
                g = g.edge_refine(a, b);
            }
        }
        emit(dsc::graph_to_json(g).dump(2) + "\n", rf_out);
        return 0;
    }

    if (*oper) {
        if (!op_matrix && !op_functionals && !op_invariants && !op_perron) op_matrix = true;
        std::ostringstream text;
        dsc::json j;
        if (op_matrix) {
            dsc::RefinementOperator op = dsc::operator_matrix(op_dim);
            text << aligned_integer_grid(op.a);
            j["matrix"] = dsc::integer_matrix_to_json(op.a);
        }
        if (op_functionals) {
            auto fs = dsc::eigen_functionals(op_dim);
            text << functional_lines(fs);
            dsc::json arr = dsc::json::array();
            for (const auto& f : fs)
                arr.push_back(dsc::json{{"eigenvalue", f.eigenvalue.str()},
                                        {"coefficients",
                                         dsc::integer_vector_to_json(f.coefficients)}});
            j["functionals"] = arr;
        }
        if (op_invariants) {
            auto fs = dsc::ds_invariant_functionals(op_dim);
            text << functional_lines(fs);
            dsc::json arr = dsc::json::array();
            for (const auto& f : fs)
                arr.push_back(dsc::json{{"eigenvalue", f.eigenvalue.str()},
                                        {"coefficients",
                                         dsc::integer_vector_to_json(f.coefficients)}});
            j["invariants"] = arr;
        }
        if (op_perron) {
            auto w = dsc::perron_vector(op_dim);
            text << "[";
            for (std::size_t i = 0; i < w.size(); ++i) {
                if (i) text << ", ";
                text << w[i].str();
            }
            text << "]\n";
            j["perron"] = dsc::integer_vector_to_json(w);
        }
        if (op_json)
            std::cout << j.dump(2) << "\n";
        else
            std::cout << text.str();
        return 0;
    }

    if (*exroots) {
        int sources = (!er_input.empty() ? 1 : 0) + (!er_fvector.empty() ? 1 : 0) +
                      (er_dim >= 0 ? 1 : 0);
        if (sources != 1)
            throw dsc::invalid_input_error(
                "experiment-roots: give exactly one of --input, --fvector, --dim/--steps");
        dsc::RootsExperimentConfig cfg;
        cfg.refinements = er_refinements;
        cfg.seed = er_seed;
        if (!er_input.empty()) {
            dsc::LoadedInput in = dsc::read_input(er_input);
            for (long long k : in.complex.fvector()) cfg.start_f.emplace_back(k);
            if (cfg.start_f.empty())
                throw dsc::invalid_input_error("experiment-roots: input complex is empty");
            cfg.source_label = er_input;
        } else if (!er_fvector.empty()) {
            cfg.start_f = parse_fvector(er_fvector);
            cfg.source_label = "fvector";
        } else {
            dsc::Graph g = dsc::random_sphere(er_dim, er_steps, er_seed);
            for (long long k : dsc::whitney(g).fvector()) cfg.start_f.emplace_back(k);
            cfg.source_label = "random_sphere_d" + std::to_string(er_dim) + "_s" +
                               std::to_string(er_steps);
        }
        dsc::RootsExperimentResult res = dsc::run_roots_experiment(cfg);
        if (res.truncated) std::cerr << "note: " << res.truncation_reason << "\n";
        if (er_out.empty()) {
            std::cout << res.csv;
        } else {
            dsc::write_text_file(er_out + ".csv", res.csv);
            dsc::write_text_file(er_out + ".svg", res.svg);
        }
        return 0;
    }

    if (*exsearch) {
        dsc::SearchExperimentConfig cfg;
        cfg.n = es_n;
        cfg.p = es_p;
        cfg.trials = es_trials;
        cfg.seed = es_seed;
        cfg.exhaustive = es_exhaustive;
        dsc::SearchExperimentResult res = dsc::run_search_experiment(cfg);
        emit(res.csv, es_out);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const dsc::invalid_input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const dsc::cap_exceeded_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dsc::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dsc::numeric_failure_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 4;
    }
}
