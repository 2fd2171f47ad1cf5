#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

#include "dsc/complex.hpp"
#include "dsc/errors.hpp"
#include "dsc/generators.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"
#include "dsc/refinement_operator.hpp"
#include "dsc/roots.hpp"
#include "dsc/rng.hpp"
#include "dsc/svg.hpp"

namespace dsc {

namespace detail {

inline std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Root-locus experiment: track the roots of the f-function under repeated
// application of the refinement operator.  Evidence gathering only; nothing
// here asserts that roots become or stay real.
// ---------------------------------------------------------------------------

struct RootsExperimentConfig {
    std::vector<Integer> start_f;
    std::string source_label = "input";
    int refinements = 8;
    std::uint64_t seed = 0; // recorded in the output for provenance
};

struct RootsExperimentStep {
    int step = 0;
    std::vector<Integer> fvec;
    bool roots_ok = false;
    RootSet root_set;
    bool all_real = false;
    PairingReport pairing;
};

struct RootsExperimentResult {
    RootsExperimentConfig config;
    std::vector<RootsExperimentStep> steps;
    bool truncated = false;
    std::string truncation_reason;
    std::string csv;
    std::string svg;
};

inline RootsExperimentResult run_roots_experiment(const RootsExperimentConfig& config) {
    if (config.start_f.empty())
        throw invalid_input_error("roots experiment: empty starting f-vector");
    if (config.refinements < 0 || config.refinements > 64)
        throw invalid_input_error("roots experiment: refinements must lie in [0,64]");
    int d = static_cast<int>(config.start_f.size()) - 1;
    RefinementOperator op = operator_matrix(d);
    RootsExperimentResult res;
    res.config = config;
    std::vector<Integer> f = config.start_f;
    for (int step = 0; step <= config.refinements; ++step) {
        RootsExperimentStep row;
        row.step = step;
        row.fvec = f;
        std::vector<Rational> coeffs(d + 2, Rational(0));
        coeffs[0] = 1;
        for (int k = 0; k <= d; ++k) coeffs[k + 1] = Rational(f[k]);
        FPolynomial poly = FPolynomial::from_coeffs(coeffs);
        bool fits = true;
        for (int k = 0; k <= d; ++k)
            if (boost::multiprecision::abs(f[k]) > Integer(1) << 900) fits = false;
        if (!fits) {
            res.truncated = true;
            res.truncation_reason =
                "coefficients exceed the floating-point range at step " + std::to_string(step);
            res.steps.push_back(std::move(row));
            break;
        }
        if (poly.degree() >= 1) {
            try {
                row.root_set = roots(poly);
                row.roots_ok = true;
                row.all_real = row.root_set.all_real();
                row.pairing = root_pairing_check(row.root_set, d);
            } catch (const root_convergence_error&) {
                row.roots_ok = false;
            }
        }
        res.steps.push_back(std::move(row));
        if (step < config.refinements) f = apply_operator(op, f);
    }

    std::string csv;
    csv += "source,seed,step,degree,all_real,pairing_symmetric,residual_bound,root_index,"
           "re,im,is_real\n";
    std::string prefix = config.source_label + "," + std::to_string(config.seed) + ",";
    for (const auto& s : res.steps) {
        std::string base = prefix + std::to_string(s.step) + "," + std::to_string(d + 1) + ",";
        if (!s.roots_ok) {
            csv += base + "unsolved,,,,,,\n";
            continue;
        }
        std::string flags = std::string(s.all_real ? "true" : "false") + "," +
                            (s.pairing.symmetric ? "true" : "false") + "," +
                            detail::fmt_double(s.root_set.residual_bound) + ",";
        for (std::size_t i = 0; i < s.root_set.roots.size(); ++i) {
            const auto& z = s.root_set.roots[i];
            csv += base + flags + std::to_string(i) + "," + detail::fmt_double(z.real()) +
                   "," + detail::fmt_double(z.imag()) + "," +
                   (RootSet::is_real(z) ? "true" : "false") + "\n";
        }
    }
    res.csv = std::move(csv);

    std::vector<RootPlotSeries> series;
    for (const auto& s : res.steps) {
        if (!s.roots_ok) continue;
        series.push_back({"step " + std::to_string(s.step), s.root_set.roots});
    }
    res.svg = render_root_plot_svg(series);
    return res;
}

// ---------------------------------------------------------------------------
// Symmetric-graph search: sample Erdos-Renyi space (or exhaust all labeled
// graphs for small n) and record which graphs have a symmetric f-function.
// ---------------------------------------------------------------------------

struct SearchExperimentConfig {
    int n = 8;
    double p = 0.5;
    int trials = 100;
    std::uint64_t seed = 0;
    bool exhaustive = false;
};

struct SearchHit {
    std::vector<long long> fvector;
    int dimension = 0;
    std::vector<std::pair<int, int>> edges; // representative, vertices 1..n
    long long labeled_count = 1;            // exhaustive mode only
};

struct SearchExperimentResult {
    SearchExperimentConfig config;
    long long graphs_examined = 0;
    long long ds_hits = 0; // labeled count in exhaustive mode, trial count otherwise
    std::vector<SearchHit> hits; // up to isomorphism in exhaustive mode
    std::string csv;
};

namespace detail {

/// f + (-1)^d f(-1-t) with small integer coefficients; zero iff symmetric.
inline bool ds_symmetric_int(const std::vector<long long>& fvec, int d) {
    int n = d + 2;
    std::vector<long long> c(n, 0);
    c[0] = 1;
    for (int k = 0; k <= d; ++k) c[k + 1] = fvec[k];
    long long sign = (d % 2 == 0) ? 1 : -1;
    for (int j = 0; j < n; ++j) {
        long long reflected = 0;
        for (int i = j; i < n; ++i) {
            long long b = 1; // C(i, j)
            for (int t = 0; t < j; ++t) b = b * (i - t) / (t + 1);
            reflected += ((i % 2 == 0) ? b : -b) * c[i];
        }
        if (c[j] + sign * reflected != 0) return false;
    }
    return true;
}

/// Edge-pair bitmask needed for each vertex subset to form a clique.
inline std::vector<std::uint64_t> clique_requirements(int n,
                                                      const std::vector<int>& pair_index) {
    std::vector<std::uint64_t> req(std::size_t(1) << n, 0);
    for (std::uint32_t s = 1; s < (std::uint32_t(1) << n); ++s) {
        std::uint64_t need = 0;
        for (int a = 0; a < n; ++a) {
            if (!(s & (std::uint32_t(1) << a))) continue;
            for (int b = a + 1; b < n; ++b)
                if (s & (std::uint32_t(1) << b)) need |= std::uint64_t(1) << pair_index[a * n + b];
        }
        req[s] = need;
    }
    return req;
}

} // namespace detail

inline SearchExperimentResult run_search_experiment(const SearchExperimentConfig& config) {
    if (config.n < 1 || config.n > 16)
        throw invalid_input_error("search experiment: n must lie in [1,16]");
    if (config.exhaustive && config.n > 7)
        throw invalid_input_error("search experiment: exhaustive mode needs n <= 7");
    if (!(config.p >= 0.0 && config.p <= 1.0))
        throw invalid_input_error("search experiment: p must lie in [0,1]");
    if (config.trials < 0)
        throw invalid_input_error("search experiment: trials must be non-negative");

    SearchExperimentResult res;
    res.config = config;
    std::string csv;

    if (config.exhaustive) {
        int n = config.n;
        int pairs = n * (n - 1) / 2;
        std::vector<int> pair_index(n * n, -1);
        std::vector<std::pair<int, int>> pair_of(pairs);
        int pi = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                pair_index[a * n + b] = pi;
                pair_of[pi] = {a, b};
                ++pi;
            }
        std::vector<std::uint64_t> req = detail::clique_requirements(n, pair_index);
        std::uint32_t subsets = std::uint32_t(1) << n;
        // group hits by canonical (minimum over vertex permutations) edge mask
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::vector<std::pair<std::uint64_t, std::uint64_t>> classes; // canon mask, count
        std::vector<std::uint64_t> class_rep;
        std::vector<long long> fbuf(n, 0);
        for (std::uint64_t e = 0; e < (std::uint64_t(1) << pairs); ++e) {
            ++res.graphs_examined;
            std::fill(fbuf.begin(), fbuf.end(), 0);
            int d = -1;
            for (std::uint32_t s = 1; s < subsets; ++s)
                if ((req[s] & ~e) == 0) {
                    int k = std::popcount(s) - 1;
                    ++fbuf[k];
                    d = std::max(d, k);
                }
            std::vector<long long> fvec(fbuf.begin(), fbuf.begin() + (d + 1));
            if (!detail::ds_symmetric_int(fvec, d)) continue;
            ++res.ds_hits;
            // canonical form over all vertex permutations
            std::uint64_t canon = ~std::uint64_t(0);
            std::sort(perm.begin(), perm.end());
            do {
                std::uint64_t img = 0;
                for (int q = 0; q < pairs; ++q) {
                    if (!(e & (std::uint64_t(1) << q))) continue;
                    int a = perm[pair_of[q].first], b = perm[pair_of[q].second];
                    if (a > b) std::swap(a, b);
                    img |= std::uint64_t(1) << pair_index[a * n + b];
                }
                canon = std::min(canon, img);
            } while (std::next_permutation(perm.begin(), perm.end()));
            bool found = false;
            for (auto& [mask, count] : classes)
                if (mask == canon) {
                    ++count;
                    found = true;
                    break;
                }
            if (!found) {
                classes.emplace_back(canon, 1);
                class_rep.push_back(e);
            }
        }
        csv += "record,n,p,seed,trialOrClass,dimension,ds,labeled_count,fvector,edges\n";
        for (std::size_t ci = 0; ci < classes.size(); ++ci) {
            std::uint64_t e = class_rep[ci];
            std::fill(fbuf.begin(), fbuf.end(), 0);
            int d = -1;
            for (std::uint32_t s = 1; s < subsets; ++s)
                if ((req[s] & ~e) == 0) {
                    int k = std::popcount(s) - 1;
                    ++fbuf[k];
                    d = std::max(d, k);
                }
            SearchHit hit;
            hit.fvector.assign(fbuf.begin(), fbuf.begin() + (d + 1));
            hit.dimension = d;
            hit.labeled_count = static_cast<long long>(classes[ci].second);
            std::string fstr, estr;
            for (std::size_t k = 0; k < hit.fvector.size(); ++k)
                fstr += (k ? " " : "") + std::to_string(hit.fvector[k]);
            for (int q = 0; q < pairs; ++q)
                if (e & (std::uint64_t(1) << q)) {
                    hit.edges.emplace_back(pair_of[q].first + 1, pair_of[q].second + 1);
                    if (!estr.empty()) estr += " ";
                    estr += std::to_string(pair_of[q].first + 1) + "-" +
                            std::to_string(pair_of[q].second + 1);
                }
            csv += "class," + std::to_string(config.n) + "," + detail::fmt_double(config.p) +
                   "," + std::to_string(config.seed) + "," + std::to_string(ci) + "," +
                   std::to_string(d) + ",true," + std::to_string(hit.labeled_count) + ",\"" +
                   fstr + "\",\"" + estr + "\"\n";
            res.hits.push_back(std::move(hit));
        }
        csv += "summary," + std::to_string(config.n) + "," + detail::fmt_double(config.p) +
               "," + std::to_string(config.seed) + ",," + "," + "," +
               std::to_string(res.ds_hits) + ",\"examined " +
               std::to_string(res.graphs_examined) + "\",\"classes " +
               std::to_string(res.hits.size()) + "\"\n";
    } else {
        csv += "record,n,p,seed,trialOrClass,dimension,ds,labeled_count,fvector,edges\n";
        for (int trial = 0; trial < config.trials; ++trial) {
            std::uint64_t trial_seed = CounterRng::at(config.seed, static_cast<std::uint64_t>(trial));
            Graph g = erdos_renyi(config.n, config.p, trial_seed);
            SimplicialComplex c = whitney(g);
            ++res.graphs_examined;
            int d = c.dimension();
            bool ds = d >= 0 && detail::ds_symmetric_int(c.fvector(), d);
            std::string fstr;
            for (std::size_t k = 0; k < c.fvector().size(); ++k)
                fstr += (k ? " " : "") + std::to_string(c.fvector()[k]);
            if (ds) {
                ++res.ds_hits;
                SearchHit hit;
                hit.fvector = c.fvector();
                hit.dimension = d;
                hit.edges = g.edges();
                res.hits.push_back(std::move(hit));
            }
            std::string estr;
            if (ds)
                for (const auto& [a, b] : g.edges()) {
                    if (!estr.empty()) estr += " ";
                    estr += std::to_string(a) + "-" + std::to_string(b);
                }
            csv += "trial," + std::to_string(config.n) + "," + detail::fmt_double(config.p) +
                   "," + std::to_string(config.seed) + "," + std::to_string(trial) + "," +
                   std::to_string(d) + "," + (ds ? "true" : "false") + ",1,\"" + fstr +
                   "\",\"" + estr + "\"\n";
        }
        csv += "summary," + std::to_string(config.n) + "," + detail::fmt_double(config.p) +
               "," + std::to_string(config.seed) + ",," + "," + "," +
               std::to_string(res.ds_hits) + ",\"examined " +
               std::to_string(res.graphs_examined) + "\",\"hits " +
               std::to_string(res.hits.size()) + "\"\n";
    }
    res.csv = std::move(csv);
    return res;
}

} // namespace dsc
