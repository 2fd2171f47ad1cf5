#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dsc/caps.hpp"
#include "dsc/complex.hpp"
#include "dsc/errors.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"
#include "dsc/refinement_operator.hpp"

namespace dsc {

/// Symmetric 0/1 intersection matrix over the complex's simplices in their
/// canonical (dimension, lexicographic) order.
struct ConnectionMatrix {
    std::vector<std::vector<int>> l;
};

/// Exact integer inverse of the connection matrix.
struct GreenFunction {
    std::vector<std::vector<Integer>> g;
    int det_sign = 0; // determinant of L, +1 or -1
};

inline ConnectionMatrix connection_matrix(const SimplicialComplex& c) {
    std::size_t n = c.simplices().size();
    if (n > caps().connection_cap)
        throw cap_exceeded_error("connection_matrix: simplex count exceeds cap", n,
                                 caps().connection_cap);
    std::vector<int> verts = c.vertices();
    std::size_t words = (verts.size() + 63) / 64;
    std::vector<std::vector<std::uint64_t>> mask(n, std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (int v : c.simplices()[i].vertices()) {
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            mask[i][idx / 64] |= std::uint64_t(1) << (idx % 64);
        }
    ConnectionMatrix m;
    m.l.assign(n, std::vector<int>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            bool meet = false;
            for (std::size_t w = 0; w < words && !meet; ++w)
                meet = (mask[i][w] & mask[j][w]) != 0;
            m.l[i][j] = m.l[j][i] = meet ? 1 : 0;
        }
    return m;
}

namespace detail {

/// Fraction-free Gauss-Jordan elimination on [M | I].  Every division is
/// checked to be exact and the final left block is checked to be a scalar
/// matrix; the scalar is the determinant up to the row-swap sign.
inline GreenFunction invert_unimodular(const std::vector<std::vector<int>>& l) {
    std::size_t n = l.size();
    std::vector<std::vector<Integer>> m(n, std::vector<Integer>(2 * n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i][j] = l[i][j];
        m[i][n + i] = 1;
    }
    Integer prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t r = k;
        while (r < n && m[r][k] == 0) ++r;
        if (r == n)
            throw internal_inconsistency_error(
                "connection matrix is singular, contradicting unimodularity");
        if (r != k) {
            std::swap(m[r], m[k]);
            sign = -sign;
        }
        Integer pivot = m[k][k];
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k) continue;
            Integer factor = m[i][k];
            // all columns, including the ones already processed: their stale
            // diagonal entries rescale to the current pivot by exact cancellation
            for (std::size_t j = 0; j < 2 * n; ++j) {
                Integer num = m[i][j] * pivot - factor * m[k][j];
                Integer q = num / prev;
                if (q * prev != num)
                    throw internal_inconsistency_error(
                        "fraction-free elimination produced an inexact division");
                m[i][j] = q;
            }
        }
        prev = pivot;
    }
    Integer scale = m[n - 1][n - 1];
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m[i][j] != ((i == j) ? scale : Integer(0)))
                throw internal_inconsistency_error(
                    "fraction-free elimination left a non-scalar block");
    Integer det = scale * sign;
    if (det != 1 && det != -1)
        throw internal_inconsistency_error("connection matrix determinant is " + det.str() +
                                           ", expected +1 or -1");
    GreenFunction gf;
    gf.det_sign = (det == 1) ? 1 : -1;
    gf.g.assign(n, std::vector<Integer>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Integer num = m[i][n + j];
            Integer q = num / scale;
            if (q * scale != num)
                throw internal_inconsistency_error("inverse entry is not an integer");
            gf.g[i][j] = q;
        }
    return gf;
}

} // namespace detail

inline GreenFunction green(const SimplicialComplex& c) {
    ConnectionMatrix m = connection_matrix(c);
    GreenFunction gf = detail::invert_unimodular(m.l);
    std::size_t n = m.l.size();
    if (n <= 512) {
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Integer s = 0;
                for (std::size_t k = 0; k < n; ++k)
                    if (m.l[i][k] != 0) s += gf.g[k][j];
                if (s != ((i == j) ? 1 : 0))
                    throw internal_inconsistency_error("inverse verification failed");
            }
    }
    return gf;
}

/// Total energy: the sum of all Green-function entries equals chi.
inline bool energy_check(const SimplicialComplex& c) {
    GreenFunction gf = green(c);
    Integer total = 0;
    for (const auto& row : gf.g)
        for (const auto& x : row) total += x;
    return total == c.euler_characteristic();
}

/// Diagonal identity: g(x,x) = 1 - chi(S(x)) where S(x) is the unit sphere
/// of the simplex x in the refinement graph of the complex.
inline bool green_diagonal_check(const SimplicialComplex& c) {
    GreenFunction gf = green(c);
    Graph refinement = comparability_graph(c);
    std::size_t n = c.simplices().size();
    for (std::size_t i = 0; i < n; ++i) {
        Graph sphere = refinement.unit_sphere(static_cast<int>(i));
        long long chi = whitney(sphere).euler_characteristic();
        if (gf.g[i][i] != Integer(1 - chi)) return false;
    }
    return true;
}

/// Trace-level quantities relating the Green function to the refined
/// f-function; the derivative identity is asserted, the rest is reported.
struct HydrogenReport {
    Integer tr_g;
    Integer tr_l;
    Rational refined_derivative_at_minus_one;
    Integer sum_one_minus_chi;
    Integer tr_l_minus_tr_g;
};

namespace detail {

inline FPolynomial refined_f_polynomial(const SimplicialComplex& c) {
    int d = c.dimension();
    if (d < 0) return FPolynomial::one();
    RefinementOperator op = operator_matrix(d);
    std::vector<Integer> rf = apply_operator(op, c.fvector());
    std::vector<Rational> coeffs(d + 2, Rational(0));
    coeffs[0] = 1;
    for (int k = 0; k <= d; ++k) coeffs[k + 1] = Rational(rf[k]);
    return FPolynomial::from_coeffs(coeffs);
}

} // namespace detail

inline HydrogenReport hydrogen_report(const SimplicialComplex& c) {
    GreenFunction gf = green(c);
    HydrogenReport r;
    r.tr_g = 0;
    for (std::size_t i = 0; i < gf.g.size(); ++i) r.tr_g += gf.g[i][i];
    r.tr_l = static_cast<long long>(gf.g.size()); // diagonal of L is all ones
    FPolynomial f1 = detail::refined_f_polynomial(c);
    r.refined_derivative_at_minus_one = f1.derivative().evaluate(Rational(-1));
    Graph refinement = comparability_graph(c);
    r.sum_one_minus_chi = 0;
    for (std::size_t i = 0; i < c.simplices().size(); ++i)
        r.sum_one_minus_chi +=
            Integer(1 - whitney(refinement.unit_sphere(static_cast<int>(i)))
                            .euler_characteristic());
    r.tr_l_minus_tr_g = r.tr_l - r.tr_g;
    if (Rational(r.tr_g) != r.refined_derivative_at_minus_one)
        throw internal_inconsistency_error(
            "trace of the Green function disagrees with the refined derivative");
    return r;
}

/// Logarithmic-derivative candidates at t = -1, reported side by side and
/// never asserted against each other; denominators that vanish are flagged.
struct LogDerivativeReport {
    bool chi_is_one = false;  // 1 - chi vanishes
    bool chi_is_zero = false; // total energy vanishes
    std::optional<Rational> f_log_derivative;     // f'/f at -1 for the refinement
    std::optional<Rational> trg_over_energy;      // tr(g) / sum g
    std::optional<Rational> trg_over_one_minus_chi;
};

inline LogDerivativeReport log_derivative_report(const SimplicialComplex& c) {
    GreenFunction gf = green(c);
    Integer tr_g = 0, energy = 0;
    for (std::size_t i = 0; i < gf.g.size(); ++i) {
        tr_g += gf.g[i][i];
        for (const auto& x : gf.g[i]) energy += x;
    }
    long long chi = c.euler_characteristic();
    LogDerivativeReport r;
    r.chi_is_one = (chi == 1);
    r.chi_is_zero = (chi == 0);
    FPolynomial f1 = detail::refined_f_polynomial(c);
    Rational value = f1.evaluate(Rational(-1));
    if (value != 0)
        r.f_log_derivative = f1.derivative().evaluate(Rational(-1)) / value;
    if (energy != 0) r.trg_over_energy = Rational(tr_g) / Rational(energy);
    if (chi != 1) r.trg_over_one_minus_chi = Rational(tr_g) / Rational(1 - chi);
    return r;
}

} // namespace dsc
