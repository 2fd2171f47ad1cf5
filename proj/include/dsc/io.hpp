#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dsc/complex.hpp"
#include "dsc/errors.hpp"
#include "dsc/graph.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"
#include "dsc/roots.hpp"
#include "dsc/wu.hpp"

namespace dsc {

using nlohmann::json;

inline json complex_to_json(const SimplicialComplex& c) {
    json facets = json::array();
    for (const auto& s : c.maximal_simplices()) facets.push_back(s.vertices());
    return json{{"facets", facets}};
}

inline json graph_to_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [a, b] : g.edges()) edges.push_back(json::array({a, b}));
    return json{{"vertices", g.vertices()}, {"edges", edges}};
}

inline SimplicialComplex complex_from_json(const json& j) {
    if (!j.contains("facets") || !j["facets"].is_array())
        throw invalid_input_error("complex json: expected a \"facets\" array");
    std::vector<std::vector<int>> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw invalid_input_error("complex json: facet is not an array");
        std::vector<int> verts;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw invalid_input_error("complex json: facet entry is not an integer");
            int label = v.get<int>();
            if (label < 0)
                throw invalid_input_error("complex json: vertex labels must be non-negative");
            verts.push_back(label);
        }
        facets.push_back(std::move(verts));
    }
    return SimplicialComplex::from_facets(facets);
}

inline Graph graph_from_json(const json& j) {
    if (!j.contains("vertices") || !j["vertices"].is_array())
        throw invalid_input_error("graph json: expected a \"vertices\" array");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw invalid_input_error("graph json: expected an \"edges\" array");
    std::vector<int> verts;
    for (const auto& v : j["vertices"]) {
        if (!v.is_number_integer())
            throw invalid_input_error("graph json: vertex is not an integer");
        int label = v.get<int>();
        if (label < 0) throw invalid_input_error("graph json: vertex labels must be non-negative");
        verts.push_back(label);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw invalid_input_error("graph json: edge is not a pair of integers");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Graph::from_vertices_edges(verts, edges);
}

/// A parsed input file: complexes are taken as written, graphs are
/// interpreted through their Whitney complex.
struct LoadedInput {
    bool from_graph = false;
    Graph graph;
    SimplicialComplex complex;
};

inline LoadedInput parse_input_json(const json& j, const std::string& where = "input") {
    LoadedInput in;
    if (j.contains("facets")) {
        in.from_graph = false;
        in.complex = complex_from_json(j);
    } else if (j.contains("vertices") || j.contains("edges")) {
        in.from_graph = true;
        in.graph = graph_from_json(j);
        in.complex = whitney(in.graph);
    } else {
        throw invalid_input_error(where + ": expected \"facets\" or \"vertices\"/\"edges\"");
    }
    return in;
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw invalid_input_error(path + ": cannot open for reading");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

inline void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) throw invalid_input_error(path + ": cannot open for writing");
    f << content;
    if (!f) throw invalid_input_error(path + ": write failed");
}

inline LoadedInput read_input(const std::string& path) {
    json j;
    try {
        j = json::parse(read_text_file(path));
    } catch (const json::parse_error& e) {
        throw invalid_input_error(path + ": " + e.what());
    }
    return parse_input_json(j, path);
}

inline json polynomial_to_json(const FPolynomial& f) {
    json coeffs = json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(to_string(c));
    return coeffs;
}

inline json integer_vector_to_json(const std::vector<Integer>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(x.str());
    return out;
}

inline json integer_matrix_to_json(const std::vector<std::vector<Integer>>& m) {
    json out = json::array();
    for (const auto& row : m) out.push_back(integer_vector_to_json(row));
    return out;
}

inline json bipolynomial_to_json(const BiPolynomial& p) {
    json grid = json::array();
    for (const auto& row : p.grid()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(to_string(x));
        grid.push_back(r);
    }
    return grid;
}

inline json roots_to_json(const RootSet& rs) {
    json arr = json::array();
    for (const auto& z : rs.roots)
        arr.push_back(json{{"re", z.real()}, {"im", z.imag()}, {"real", RootSet::is_real(z)}});
    return json{{"roots", arr}, {"residual_bound", rs.residual_bound}};
}

} // namespace dsc
