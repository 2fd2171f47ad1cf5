#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "dsc/errors.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"

namespace dsc {

/// Exact matrix of the Barycentric refinement operator in one dimension:
/// the refined complex's f-vector is this matrix times the old f-vector.
struct RefinementOperator {
    int dimension = 0;
    std::vector<std::vector<Integer>> a; // (d+1) x (d+1), upper triangular
};

/// Left eigenvector of the refinement matrix together with its eigenvalue k!.
/// Coefficients are coprime integers with the last non-zero entry positive.
struct Functional {
    Integer eigenvalue;
    std::vector<Integer> coefficients;
};

inline RefinementOperator operator_matrix(int d) {
    if (d < 0 || d > 30)
        throw invalid_input_error("operator_matrix: dimension must lie in [0,30], got " +
                                  std::to_string(d));
    RefinementOperator op;
    op.dimension = d;
    op.a.assign(d + 1, std::vector<Integer>(d + 1, 0));
    for (int r = 0; r <= d; ++r) {
        Integer rf = factorial(r + 1);
        for (int c = r; c <= d; ++c) op.a[r][c] = stirling2(c + 1, r + 1) * rf;
    }
    return op;
}

/// Image of an f-vector under the operator; shorter inputs are zero-padded.
inline std::vector<Integer> apply_operator(const RefinementOperator& op,
                                  const std::vector<Integer>& f) {
    int n = op.dimension + 1;
    if (static_cast<int>(f.size()) > n)
        throw invalid_input_error(
            "apply_operator: f-vector longer than operator dimension allows");
    std::vector<Integer> out(n, 0);
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < static_cast<int>(f.size()); ++c) out[r] += op.a[r][c] * f[c];
    return out;
}

inline std::vector<Integer> apply_operator(const RefinementOperator& op,
                                  const std::vector<long long>& f) {
    return apply_operator(op, std::vector<Integer>(f.begin(), f.end()));
}

namespace detail {

/// Scale a rational vector to coprime integers with the last non-zero entry
/// positive.  The zero vector is returned unchanged.
inline std::vector<Integer> normalize_integer_direction(const std::vector<Rational>& v) {
    Integer lcm_den = 1;
    for (const auto& x : v) {
        Integer den = boost::multiprecision::denominator(x);
        lcm_den = lcm_den / boost::multiprecision::gcd(lcm_den, den) * den;
    }
    std::vector<Integer> out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(boost::multiprecision::numerator(x * Rational(lcm_den)));
    Integer g = 0;
    for (const auto& x : out) g = boost::multiprecision::gcd(g, x);
    if (g > 1)
        for (auto& x : out) x /= g;
    for (auto it = out.rbegin(); it != out.rend(); ++it)
        if (*it != 0) {
            if (*it < 0)
                for (auto& x : out) x = -x;
            break;
        }
    return out;
}

/// Solution of a rational linear system M x = rhs: one particular solution
/// plus a basis of the homogeneous nullspace.
struct AffineSolution {
    bool consistent = false;
    std::vector<Rational> particular;
    std::vector<std::vector<Rational>> nullspace;
};

inline AffineSolution solve_affine(std::vector<std::vector<Rational>> m,
                                   std::vector<Rational> rhs) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<int> pivot_col_of_row;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        std::swap(rhs[piv], rhs[r]);
        Rational inv = Rational(1) / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rational fac = m[i][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= fac * m[r][j];
            rhs[i] -= fac * rhs[r];
        }
        pivot_col_of_row.push_back(static_cast<int>(c));
        ++r;
    }
    AffineSolution sol;
    for (std::size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return sol; // inconsistent
    sol.consistent = true;
    sol.particular.assign(cols, Rational(0));
    std::vector<char> is_pivot(cols, 0);
    for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i) {
        sol.particular[pivot_col_of_row[i]] = rhs[i];
        is_pivot[pivot_col_of_row[i]] = 1;
    }
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rational> w(cols, Rational(0));
        w[c] = 1;
        for (std::size_t i = 0; i < pivot_col_of_row.size(); ++i)
            w[pivot_col_of_row[i]] = -m[i][c];
        sol.nullspace.push_back(std::move(w));
    }
    return sol;
}

/// The affine set of f-vectors (f_0..f_d) whose f-function satisfies the
/// symmetry f(t) + (-1)^d f(-1-t) = 0, as particular solution + nullspace.
/// Equations come from matching coefficients of t^j for j = 0..d+1 with the
/// constant term 1 supplying the inhomogeneity.
inline AffineSolution ds_affine_set(int d) {
    int n = d + 2; // c_0 = 1, c_{k+1} = f_k
    int sign = (((d % 2) + 2) % 2 == 0) ? 1 : -1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(d + 1, Rational(0)));
    std::vector<Rational> rhs(n, Rational(0));
    // coefficient of t^j in p(-1-t) is sum_i c_i (-1)^i C(i,j)
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            if (i < j) continue;
            Integer term = binomial(i, j);
            Rational coef = Rational((i % 2 == 0) ? term : -term) * sign;
            if (i == j) coef += 1; // the c_j from p(t) itself
            if (i == 0)
                rhs[j] -= coef; // c_0 = 1 moves to the right-hand side
            else
                m[j][i - 1] += coef;
        }
    }
    return solve_affine(std::move(m), std::move(rhs));
}

} // namespace detail

/// All d+1 left eigenvectors of the operator matrix, eigenvalues k! for
/// k = d+1 down to 1, in descending eigenvalue order.
inline std::vector<Functional> eigen_functionals(int d) {
    RefinementOperator op = operator_matrix(d);
    std::vector<Functional> out;
    for (int m = d + 1; m >= 1; --m) {
        Integer lam = factorial(m);
        std::vector<Rational> v(d + 1, Rational(0));
        v[m - 1] = 1;
        for (int c = m; c <= d; ++c) {
            Rational s(0);
            for (int r = m - 1; r < c; ++r) s += v[r] * Rational(op.a[r][c]);
            v[c] = -s / Rational(factorial(c + 1) - lam);
        }
        out.push_back({lam, detail::normalize_integer_direction(v)});
    }
    return out;
}

/// The subset of eigen-functionals vanishing identically on the affine set
/// of symmetric f-vectors for dimension d.
inline std::vector<Functional> ds_invariant_functionals(int d) {
    detail::AffineSolution ds = detail::ds_affine_set(d);
    if (!ds.consistent)
        throw internal_inconsistency_error("ds_invariant_functionals: empty symmetric set");
    auto annihilates = [&](const std::vector<Integer>& phi) {
        auto dot = [&](const std::vector<Rational>& x) {
            Rational s(0);
            for (std::size_t i = 0; i < x.size(); ++i) s += Rational(phi[i]) * x[i];
            return s;
        };
        if (dot(ds.particular) != 0) return false;
        for (const auto& w : ds.nullspace)
            if (dot(w) != 0) return false;
        return true;
    };
    std::vector<Functional> out;
    for (auto& f : eigen_functionals(d))
        if (annihilates(f.coefficients)) out.push_back(std::move(f));
    return out;
}

/// Positive right eigenvector of the operator matrix for the top eigenvalue
/// (d+1)!, normalized to coprime positive integers.
inline std::vector<Integer> perron_vector(int d) {
    RefinementOperator op = operator_matrix(d);
    Integer top = factorial(d + 1);
    std::vector<Rational> w(d + 1, Rational(0));
    w[d] = 1;
    for (int r = d - 1; r >= 0; --r) {
        Rational s(0);
        for (int c = r + 1; c <= d; ++c) s += Rational(op.a[r][c]) * w[c];
        w[r] = s / Rational(top - factorial(r + 1));
    }
    std::vector<Integer> out = detail::normalize_integer_direction(w);
    for (const auto& x : out)
        if (x <= 0)
            throw internal_inconsistency_error("perron_vector: non-positive entry");
    return out;
}

/// Exact invariance tests for the symmetric structure in dimension d:
///  - the operator maps the symmetric affine set into itself,
///  - the Perron polynomial p(t) = sum w_k t^{k+1} obeys
///    p(-1-t) = (-1)^{d+1} p(t),
///  - the eigenvalue-1 functional is the alternating Euler vector.
inline bool symmetry_invariance_check(int d) {
    detail::AffineSolution ds = detail::ds_affine_set(d);
    if (!ds.consistent) return false;
    RefinementOperator op = operator_matrix(d);
    auto is_symmetric = [&](const std::vector<Rational>& fvec) {
        std::vector<Rational> coeffs(d + 2, Rational(0));
        coeffs[0] = 1;
        for (int k = 0; k <= d; ++k) coeffs[k + 1] = fvec[k];
        FPolynomial p = FPolynomial::from_coeffs(coeffs);
        int sign = (((d % 2) + 2) % 2 == 0) ? 1 : -1;
        return (p + p.reflect() * Rational(sign)).is_zero();
    };
    auto image = [&](const std::vector<Rational>& fvec) {
        std::vector<Rational> out(d + 1, Rational(0));
        for (int r = 0; r <= d; ++r)
            for (int c = 0; c <= d; ++c) out[r] += Rational(op.a[r][c]) * fvec[c];
        return out;
    };
    if (!is_symmetric(image(ds.particular))) return false;
    for (const auto& w : ds.nullspace) {
        std::vector<Rational> x = ds.particular;
        for (int k = 0; k <= d; ++k) x[k] += w[k];
        if (!is_symmetric(image(x))) return false;
    }
    {
        std::vector<Integer> w = perron_vector(d);
        std::vector<Rational> coeffs(d + 2, Rational(0));
        for (int k = 0; k <= d; ++k) coeffs[k + 1] = Rational(w[k]);
        FPolynomial p = FPolynomial::from_coeffs(coeffs);
        int sign = (d % 2 == 0) ? -1 : 1; // (-1)^(d+1)
        if (!(p.reflect() + p * Rational(-sign)).is_zero()) return false;
    }
    {
        std::vector<Functional> fs = eigen_functionals(d);
        const std::vector<Integer>& e = fs.back().coefficients;
        if (fs.back().eigenvalue != 1) return false;
        for (int k = 0; k <= d; ++k) {
            Integer want = ((d - k) % 2 == 0) ? 1 : -1;
            if (e[k] != want) return false;
        }
    }
    return true;
}

} // namespace dsc
