#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dsc/class_xd.hpp"
#include "dsc/curvature.hpp"
#include "dsc/io.hpp"
#include "dsc/polynomial.hpp"
#include "dsc/roots.hpp"

namespace dsc {

/// Everything the analyze command reports about one input.  Graph-level
/// verdicts (sphere flatness, class membership) are only available when the
/// complex is the Whitney complex of its own edge skeleton; otherwise they
/// are left unset.
struct AnalysisReport {
    bool from_graph = false;
    bool graph_verdicts = false;
    int dimension = -1;
    long long chi = 0;
    std::vector<long long> fvector;
    FPolynomial f;
    std::vector<Integer> hvector;
    bool ds = false;
    int ds_sign_used = 1;
    DsSigns signs;
    std::optional<bool> ds_flat;
    std::optional<bool> class_xd;
    std::vector<int> class_witness;
    std::string verdict_note; // set when a verdict was skipped on resource limits
    bool roots_available = false;
    RootSet root_set;
    PairingReport pairing;
};

inline AnalysisReport analyze(const LoadedInput& in) {
    AnalysisReport r;
    r.from_graph = in.from_graph;
    const SimplicialComplex& c = in.complex;
    r.dimension = c.dimension();
    r.chi = c.euler_characteristic();
    r.fvector = c.fvector();
    r.f = f_function(c);
    r.hvector = h_polynomial(r.f, r.dimension).h;
    r.ds = ds_symmetric(r.f, r.dimension);
    r.ds_sign_used = (((r.dimension % 2) + 2) % 2 == 0) ? 1 : -1;
    r.signs = ds_signs(r.f);

    Graph g;
    bool have_graph = false;
    if (in.from_graph) {
        g = in.graph;
        have_graph = true;
    } else if (is_whitney_of_skeleton(c)) {
        g = c.skeleton();
        have_graph = true;
    }
    r.graph_verdicts = have_graph;
    if (have_graph) {
        try {
            r.ds_flat = ds_flat(g);
            ClassWitness w = in_class_xd(g, r.dimension);
            r.class_xd = w.verdict;
            r.class_witness = w.chain;
        } catch (const resource_error& e) {
            r.ds_flat.reset();
            r.class_xd.reset();
            r.verdict_note = e.what();
        }
    }

    if (r.f.degree() >= 1) {
        try {
            r.root_set = roots(r.f);
            r.roots_available = true;
            r.pairing = root_pairing_check(r.root_set, r.dimension);
        } catch (const root_convergence_error& e) {
            r.roots_available = false;
            r.verdict_note = e.what();
        }
    }
    return r;
}

inline json report_to_json(const AnalysisReport& r) {
    json j;
    j["input"] = r.from_graph ? "graph" : "complex";
    j["dimension"] = r.dimension;
    j["chi"] = r.chi;
    j["fvector"] = r.fvector;
    j["f_function"] = r.f.to_string();
    j["f_coefficients"] = polynomial_to_json(r.f);
    j["hvector"] = integer_vector_to_json(r.hvector);
    j["ds_symmetric"] = r.ds;
    j["ds_sign_used"] = r.ds_sign_used;
    j["ds_plus_holds"] = r.signs.plus;
    j["ds_minus_holds"] = r.signs.minus;
    j["ds_flat"] = r.ds_flat ? json(*r.ds_flat) : json(nullptr);
    j["class_xd"] = r.class_xd ? json(*r.class_xd) : json(nullptr);
    j["class_witness"] = r.class_witness;
    if (!r.verdict_note.empty()) j["note"] = r.verdict_note;
    if (r.roots_available) {
        j["roots"] = roots_to_json(r.root_set);
        j["root_pairing_symmetric"] = r.pairing.symmetric;
        j["root_on_mirror_line"] = r.pairing.center_root;
        j["mirror_line_applicable"] = r.pairing.center_applicable;
    } else {
        j["roots"] = json(nullptr);
    }
    return j;
}

inline std::string report_to_csv(const AnalysisReport& r) {
    std::ostringstream out;
    auto list = [](const auto& v) {
        std::ostringstream s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s << ' ';
            s << to_string(Integer(v[i]));
        }
        return s.str();
    };
    out << "key,value\n";
    out << "input," << (r.from_graph ? "graph" : "complex") << "\n";
    out << "dimension," << r.dimension << "\n";
    out << "chi," << r.chi << "\n";
    out << "fvector," << list(r.fvector) << "\n";
    out << "hvector," << list(r.hvector) << "\n";
    out << "f_function,\"" << r.f.to_string() << "\"\n";
    out << "ds_symmetric," << (r.ds ? "true" : "false") << "\n";
    out << "ds_sign_used," << r.ds_sign_used << "\n";
    auto opt = [](const std::optional<bool>& v) {
        return v ? (*v ? std::string("true") : std::string("false")) : std::string("null");
    };
    out << "ds_flat," << opt(r.ds_flat) << "\n";
    out << "class_xd," << opt(r.class_xd) << "\n";
    out << "class_witness," << list(r.class_witness) << "\n";
    if (r.roots_available) {
        out << "root_pairing_symmetric," << (r.pairing.symmetric ? "true" : "false") << "\n";
        for (const auto& z : r.root_set.roots) {
            std::ostringstream zs;
            zs.setf(std::ios::fmtflags(0), std::ios::floatfield);
            zs.precision(17);
            zs << z.real() << ' ' << z.imag();
            out << "root," << zs.str() << "\n";
        }
    }
    return out.str();
}

} // namespace dsc
