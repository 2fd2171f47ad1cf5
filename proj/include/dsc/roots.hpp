#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <utility>
#include <vector>

#include "dsc/errors.hpp"
#include "dsc/numbers.hpp"
#include "dsc/polynomial.hpp"

namespace dsc {

/// Non-convergence of the root iteration; carries the best iterate found.
class root_convergence_error : public numeric_failure_error {
public:
    root_convergence_error(const std::string& what, std::vector<std::complex<double>> best)
        : numeric_failure_error(what), best_iterate(std::move(best)) {}
    std::vector<std::complex<double>> best_iterate;
};

namespace detail {

/// Quotient and remainder of exact rational polynomial division.
inline std::pair<FPolynomial, FPolynomial> poly_divmod(const FPolynomial& a,
                                                       const FPolynomial& b) {
    if (b.is_zero()) throw invalid_input_error("polynomial division by zero");
    std::vector<Rational> r(a.coeffs());
    std::vector<Rational> q;
    int db = b.degree();
    Rational lead = b.coeff(db);
    int da = static_cast<int>(r.size()) - 1;
    if (da < db) return {FPolynomial::zero(), a};
    q.assign(da - db + 1, Rational(0));
    for (int k = da; k >= db; --k) {
        Rational c = r[k] / lead;
        q[k - db] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j) r[k - db + j] -= c * b.coeff(j);
    }
    return {FPolynomial::from_coeffs(std::move(q)), FPolynomial::from_coeffs(std::move(r))};
}

inline FPolynomial poly_exact_div(const FPolynomial& a, const FPolynomial& b) {
    auto [q, r] = poly_divmod(a, b);
    if (!r.is_zero()) throw internal_inconsistency_error("inexact polynomial division");
    return q;
}

inline FPolynomial make_monic(const FPolynomial& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.coeff(p.degree()));
}

/// Monic gcd by the Euclidean algorithm over exact rationals.
inline FPolynomial poly_gcd(FPolynomial a, FPolynomial b) {
    a = make_monic(a);
    b = make_monic(b);
    while (!b.is_zero()) {
        auto [q, r] = poly_divmod(a, b);
        (void)q;
        a = std::move(b);
        b = make_monic(r);
    }
    return a;
}

/// Yun's algorithm: returns (factor, multiplicity) pairs with the factors
/// square-free and pairwise coprime; the product of factor^multiplicity
/// recovers p up to a constant.
inline std::vector<std::pair<FPolynomial, int>> square_free_decomposition(const FPolynomial& p) {
    std::vector<std::pair<FPolynomial, int>> out;
    FPolynomial f = make_monic(p);
    if (f.degree() < 1) return out;
    FPolynomial fp = f.derivative();
    FPolynomial g = poly_gcd(f, fp);
    if (g.degree() == 0) {
        out.emplace_back(f, 1);
        return out;
    }
    FPolynomial b = poly_exact_div(f, g);
    FPolynomial c = poly_exact_div(fp, g);
    FPolynomial d = c - b.derivative();
    for (int i = 1; b.degree() > 0; ++i) {
        FPolynomial a = poly_gcd(b, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        b = poly_exact_div(b, a);
        c = poly_exact_div(d, a);
        d = c - b.derivative();
    }
    return out;
}

/// Aberth-Ehrlich simultaneous iteration on a square-free real polynomial
/// given by ascending coefficients.  Starts from a circle of radius set by
/// the root magnitude estimate and iterates at most max_iter rounds.
inline std::vector<std::complex<double>> aberth(const std::vector<double>& coeffs,
                                                int max_iter, double* out_residual) {
    int m = static_cast<int>(coeffs.size()) - 1;
    std::vector<double> c(coeffs);
    double lead = c[m];
    for (double& x : c) x /= lead;
    double scale = 0.0;
    for (int k = 0; k <= m; ++k) scale = std::max(scale, std::abs(c[k]));

    double r = std::abs(c[0]);
    r = (r > 0) ? std::pow(r, 1.0 / m) : 0.5;
    double cauchy = 1.0 + scale;
    r = std::clamp(r, 1e-3, cauchy);
    std::vector<std::complex<double>> z(m);
    for (int i = 0; i < m; ++i) {
        double th = 2.0 * M_PI * (i + 0.35) / m + 0.42;
        z[i] = std::polar(r * (1.0 + 0.05 * i / std::max(1, m - 1)), th);
    }

    auto eval = [&](std::complex<double> x, std::complex<double>& p, std::complex<double>& dp) {
        p = c[m];
        dp = 0.0;
        for (int k = m - 1; k >= 0; --k) {
            dp = dp * x + p;
            p = p * x + c[k];
        }
    };

    double tol = 1e-12 * (1.0 + scale);
    bool converged = false;
    for (int it = 0; it < max_iter && !converged; ++it) {
        converged = true;
        for (int i = 0; i < m; ++i) {
            std::complex<double> p, dp;
            eval(z[i], p, dp);
            if (std::abs(p) <= 1e-3 * tol) continue;
            if (dp == std::complex<double>(0.0, 0.0)) {
                z[i] += std::complex<double>(1e-6, 1e-6);
                converged = false;
                continue;
            }
            std::complex<double> n = p / dp;
            std::complex<double> s = 0.0;
            for (int j = 0; j < m; ++j)
                if (j != i) {
                    std::complex<double> diff = z[i] - z[j];
                    if (std::abs(diff) < 1e-300) diff = std::complex<double>(1e-12, 1e-12);
                    s += 1.0 / diff;
                }
            std::complex<double> w = n / (1.0 - n * s);
            z[i] -= w;
            if (std::abs(w) > 1e-14 * (1.0 + std::abs(z[i]))) converged = false;
        }
    }

    double res = 0.0;
    for (int i = 0; i < m; ++i) {
        std::complex<double> p, dp;
        eval(z[i], p, dp);
        res = std::max(res, std::abs(p));
    }
    if (out_residual) *out_residual = res;
    if (res > tol)
        throw root_convergence_error("root iteration did not converge (residual " +
                                     std::to_string(res) + ")", z);
    return z;
}

inline std::vector<std::complex<double>> solve_square_free(const FPolynomial& f, int max_iter) {
    int m = f.degree();
    if (m == 1) {
        double a = to_double(f.coeff(1)), b = to_double(f.coeff(0));
        return {std::complex<double>(-b / a, 0.0)};
    }
    if (m == 2) {
        double a = to_double(f.coeff(2)), b = to_double(f.coeff(1)), d0 = to_double(f.coeff(0));
        double disc = b * b - 4.0 * a * d0;
        if (disc >= 0.0) {
            double sq = std::sqrt(disc);
            double q = -0.5 * (b + std::copysign(sq, b));
            double r1 = (q != 0.0) ? d0 / q : 0.0;
            double r2 = (a != 0.0 && q != 0.0) ? q / a : -b / (2.0 * a);
            return {std::complex<double>(r1, 0.0), std::complex<double>(r2, 0.0)};
        }
        double re = -b / (2.0 * a), im = std::sqrt(-disc) / (2.0 * a);
        return {std::complex<double>(re, im), std::complex<double>(re, -im)};
    }
    std::vector<double> c(m + 1);
    for (int k = 0; k <= m; ++k) c[k] = to_double(f.coeff(k));
    return aberth(c, max_iter, nullptr);
}

} // namespace detail

/// Numeric roots with multiplicity.  A root is classified real when
/// |Im z| < 1e-8 (1 + |Re z|).
struct RootSet {
    std::vector<std::complex<double>> roots; // multiplicity = repetition
    double residual_bound = 0.0;             // max |f(root)| over the set

    static bool is_real(const std::complex<double>& z) {
        return std::abs(z.imag()) < 1e-8 * (1.0 + std::abs(z.real()));
    }
    bool all_real() const {
        return std::all_of(roots.begin(), roots.end(), is_real);
    }
};

/// All complex roots of f (degree >= 1).  Multiple roots are split off
/// exactly by square-free decomposition before the Aberth-Ehrlich iteration,
/// so each numeric solve sees simple roots only.
inline RootSet roots(const FPolynomial& f, int max_iter = 200) {
    if (f.degree() < 1) throw invalid_input_error("roots: need degree >= 1");
    auto factors = detail::square_free_decomposition(f);
    RootSet out;
    for (auto& [factor, mult] : factors) {
        auto zs = detail::solve_square_free(factor, max_iter);
        for (const auto& z : zs)
            for (int i = 0; i < mult; ++i) out.roots.push_back(z);
    }
    if (static_cast<int>(out.roots.size()) != f.degree())
        throw internal_inconsistency_error("root count does not match degree");
    std::sort(out.roots.begin(), out.roots.end(), [](const auto& a, const auto& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    });
    for (const auto& z : out.roots)
        out.residual_bound = std::max(out.residual_bound, std::abs(f.evaluate(z)));
    return out;
}

/// Whether the root multiset is invariant under z -> -1-z, and whether a
/// root sits on the mirror line Re z = -1/2 (reported for even d).
struct PairingReport {
    bool symmetric = false;
    bool center_root = false;   // some root with |Re z + 1/2| <= tol
    bool center_applicable = false; // true when d is even
};

inline PairingReport root_pairing_check(const RootSet& rs, int d, double tol = 1e-6) {
    auto cmp = [](const std::complex<double>& a, const std::complex<double>& b) {
        if (a.real() != b.real()) return a.real() < b.real();
        return a.imag() < b.imag();
    };
    std::vector<std::complex<double>> a = rs.roots;
    std::vector<std::complex<double>> b;
    b.reserve(a.size());
    for (const auto& z : a) b.push_back(std::complex<double>(-1.0, 0.0) - z);
    std::sort(a.begin(), a.end(), cmp);
    std::sort(b.begin(), b.end(), cmp);
    PairingReport rep;
    rep.symmetric = true;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::abs(a[i] - b[i]) > tol) {
            rep.symmetric = false;
            break;
        }
    rep.center_applicable = (d % 2 == 0);
    for (const auto& z : a)
        if (std::abs(z.real() + 0.5) <= tol) {
            rep.center_root = true;
            break;
        }
    return rep;
}

} // namespace dsc
