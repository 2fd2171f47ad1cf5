#pragma once

#include <map>
#include <vector>

#include "dsc/complex.hpp"
#include "dsc/graph.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"

namespace dsc {

/// Curvature polynomial of a vertex: the antiderivative (vanishing at 0) of
/// the f-function of the Whitney complex of the unit sphere S(v).
inline FPolynomial curvature_polynomial(const Graph& g, int v) {
    return f_function(whitney(g.unit_sphere(v))).antiderivative();
}

/// Parametrized Gauss-Bonnet: f_G(t) = 1 + sum_v F_{S(v)}(t), exactly.
inline bool gauss_bonnet_check(const Graph& g) {
    FPolynomial total = FPolynomial::one();
    for (int v : g.vertices()) total = total + curvature_polynomial(g, v);
    return total == f_function(whitney(g));
}

/// Differentiated Gauss-Bonnet: f_G'(t) = sum_v f_{S(v)}(t).
inline bool gauss_bonnet_derivative_check(const Graph& g) {
    FPolynomial total = FPolynomial::zero();
    for (int v : g.vertices()) total = total + f_function(whitney(g.unit_sphere(v)));
    return total == f_function(whitney(g)).derivative();
}

/// Euler curvature K(v) = -F_{S(v)}(-1) = sum_{k>=-1} (-1)^(k+1) f_k(S(v))/(k+2);
/// these values sum to chi(G) over the vertices.
inline Rational levitt_curvature(const Graph& g, int v) {
    return -curvature_polynomial(g, v).evaluate(Rational(-1));
}

/// Per-vertex curvature data for a graph.
struct CurvatureReport {
    std::map<int, FPolynomial> polynomials;
    std::map<int, Rational> euler; // levitt_curvature values
    FPolynomial f;                 // f-function of whitney(g)
    long long chi = 0;
};

inline CurvatureReport curvature_report(const Graph& g) {
    CurvatureReport r;
    SimplicialComplex w = whitney(g);
    r.f = f_function(w);
    r.chi = w.euler_characteristic();
    FPolynomial total = FPolynomial::one();
    Rational chi_sum = 0;
    for (int v : g.vertices()) {
        FPolynomial k = curvature_polynomial(g, v);
        total = total + k;
        Rational e = -k.evaluate(Rational(-1));
        chi_sum += e;
        r.polynomials.emplace(v, std::move(k));
        r.euler.emplace(v, e);
    }
    if (!(total == r.f) || chi_sum != Rational(r.chi))
        throw internal_inconsistency_error("curvature report failed Gauss-Bonnet");
    return r;
}

/// Linear valuation on f-vectors: X(G) = sum_j X_j f_j(G), zero-padded.
using ValuationVector = std::vector<Rational>;

inline Rational valuation_eval(const ValuationVector& x, const std::vector<long long>& fvec) {
    Rational acc = 0;
    for (std::size_t j = 0; j < x.size() && j < fvec.size(); ++j)
        acc += x[j] * Rational(fvec[j]);
    return acc;
}

inline Rational valuation_eval(const ValuationVector& x, const SimplicialComplex& c) {
    return valuation_eval(x, c.fvector());
}

/// Dehn-Sommerville valuation X_{k,d} (0 <= k <= d-1), a vector of length d
/// over simplex dimensions 0..d-1:
///   X_{k,d}[j] = (-1)^(j+d) C(j+1, k+1) for k <= j <= d-1, plus 1 at j = k.
/// These valuations vanish on geometric graphs of dimension d-1.
inline ValuationVector ds_valuation_vector(int k, int d) {
    if (d < 1 || k < 0 || k > d - 1)
        throw invalid_input_error("ds_valuation_vector: need 0 <= k <= d-1");
    ValuationVector x(d, Rational(0));
    for (int j = k; j <= d - 1; ++j) {
        Rational sign = ((j + d) % 2 == 0) ? 1 : -1;
        x[j] = sign * Rational(binomial(j + 1, k + 1));
    }
    x[k] += 1;
    return x;
}

/// Curvature of a valuation at a vertex:
///   K_X(v) = sum_l X_l f_{l-1}(S(v)) / (l+1), with f_{-1} = 1.
/// Gauss-Bonnet for valuations: sum_v K_X(v) = X(G).
inline Rational valuation_curvature(const ValuationVector& x, const Graph& g, int v) {
    SimplicialComplex s = whitney(g.unit_sphere(v));
    Rational acc = 0;
    for (std::size_t l = 0; l < x.size(); ++l) {
        Rational fl1 = (l == 0) ? Rational(1)
                                : (static_cast<int>(l) - 1 <= s.dimension()
                                       ? Rational(s.fvector()[l - 1])
                                       : Rational(0));
        acc += x[l] * fl1 / Rational(l + 1);
    }
    return acc;
}

inline bool valuation_gauss_bonnet_check(const ValuationVector& x, const Graph& g) {
    Rational total = 0;
    for (int v : g.vertices()) total += valuation_curvature(x, g, v);
    return total == valuation_eval(x, whitney(g));
}

/// Component recursion linking consecutive DS valuations:
///   X_{k+1,d+1}[l+1] (k+2) == X_{k,d}[l] (l+2) for 0 <= l <= d-1,
/// and X_{k+1,d+1}[0] == 0.
inline bool valuation_identity_check(int k, int d) {
    ValuationVector lo = ds_valuation_vector(k, d);
    ValuationVector hi = ds_valuation_vector(k + 1, d + 1);
    if (hi[0] != 0) return false;
    for (int l = 0; l <= d - 1; ++l)
        if (hi[l + 1] * Rational(k + 2) != lo[l] * Rational(l + 2)) return false;
    return true;
}

/// Generalized handshake: f_k(G) = sum_v f_{k-1}(S(v)) / (k+1) for all k >= 0.
inline bool generalized_handshake_check(const Graph& g) {
    SimplicialComplex w = whitney(g);
    std::vector<Rational> sums(w.dimension() + 2, Rational(0));
    for (int v : g.vertices()) {
        SimplicialComplex s = whitney(g.unit_sphere(v));
        sums[0] += 1; // f_{-1}(S(v)) = 1
        for (int k = 0; k <= s.dimension(); ++k) sums[k + 1] += Rational(s.fvector()[k]);
    }
    for (int k = 0; k <= w.dimension(); ++k)
        if (Rational(w.fvector()[k]) != sums[k] / Rational(k + 1)) return false;
    // no simplices above the dimension of the whole complex
    for (std::size_t k = w.dimension() + 1; k < sums.size(); ++k)
        if (sums[k] != 0) return false;
    return true;
}

/// Whether every unit sphere satisfies the Dehn-Sommerville symmetry for its
/// own dimension.
inline bool ds_flat(const Graph& g) {
    for (int v : g.vertices()) {
        SimplicialComplex s = whitney(g.unit_sphere(v));
        if (!ds_symmetric(f_function(s), s.dimension())) return false;
    }
    return true;
}

} // namespace dsc
