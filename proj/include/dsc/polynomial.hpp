#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dsc/complex.hpp"
#include "dsc/numbers.hpp"

namespace dsc {

/// Polynomial with exact rational coefficients, ascending powers,
/// normalized so the leading coefficient is non-zero (zero = empty).
class FPolynomial {
public:
    FPolynomial() = default;

    static FPolynomial from_coeffs(std::vector<Rational> c) {
        FPolynomial p;
        p.c_ = std::move(c);
        p.trim();
        return p;
    }

    static FPolynomial zero() { return {}; }
    static FPolynomial one() { return constant(1); }

    static FPolynomial constant(const Rational& r) {
        return from_coeffs({r});
    }

    /// t^k
    static FPolynomial monomial(int k, const Rational& coeff = 1) {
        std::vector<Rational> c(k + 1, Rational(0));
        c[k] = coeff;
        return from_coeffs(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
        return c_[k];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const FPolynomial&) const = default;

    FPolynomial operator+(const FPolynomial& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return from_coeffs(std::move(r));
    }

    FPolynomial operator-(const FPolynomial& o) const { return *this + o * Rational(-1); }

    FPolynomial operator*(const Rational& s) const {
        if (s == 0) return zero();
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= s;
        return from_coeffs(std::move(r));
    }

    FPolynomial operator*(const FPolynomial& o) const {
        if (is_zero() || o.is_zero()) return zero();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] += c_[i] * o.c_[j];
        return from_coeffs(std::move(r));
    }

    Rational evaluate(const Rational& t) const {
        Rational acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    std::complex<double> evaluate(const std::complex<double>& z) const {
        std::complex<double> acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * z + to_double(*it);
        return acc;
    }

    FPolynomial derivative() const {
        if (c_.size() <= 1) return zero();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(i);
        return from_coeffs(std::move(r));
    }

    /// Antiderivative with zero constant term.
    FPolynomial antiderivative() const {
        if (is_zero()) return zero();
        std::vector<Rational> r(c_.size() + 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            r[i + 1] = c_[i] / Rational(i + 1);
        return from_coeffs(std::move(r));
    }

    /// f(-1-t); an involution on polynomials.
    FPolynomial reflect() const {
        std::vector<Rational> r(c_.size(), Rational(0));
        for (std::size_t k = 0; k < c_.size(); ++k) {
            // (-1-t)^k = (-1)^k sum_j C(k,j) t^j
            Rational sign = (k % 2 == 0) ? 1 : -1;
            for (std::size_t j = 0; j <= k; ++j)
                r[j] += c_[k] * sign * Rational(binomial(static_cast<unsigned>(k),
                                                         static_cast<unsigned>(j)));
        }
        return from_coeffs(std::move(r));
    }

    std::string to_string(const std::string& var = "t") const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (c_[k] == 0) continue;
            Rational a = c_[k];
            if (out.empty()) {
                if (a < 0) { out += "-"; a = -a; }
            } else {
                out += (a < 0) ? " - " : " + ";
                if (a < 0) a = -a;
            }
            bool unit = (a == 1) && k > 0;
            if (!unit) out += dsc::to_string(a);
            if (k >= 1) {
                if (!unit) out += "*";
                out += var;
                if (k >= 2) out += "^" + std::to_string(k);
            }
        }
        return out;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Simplex generating function f_G(t) = 1 + sum_k f_k t^(k+1).
/// The empty complex gives the constant 1; f_G(-1) = 1 - chi(G).
inline FPolynomial f_function(const SimplicialComplex& c) {
    std::vector<Rational> r(c.dimension() + 2, Rational(0));
    r[0] = 1;
    for (int k = 0; k <= c.dimension(); ++k) r[k + 1] = Rational(c.fvector()[k]);
    return FPolynomial::from_coeffs(std::move(r));
}

inline FPolynomial f_function(const std::vector<Integer>& fvec) {
    std::vector<Rational> r(fvec.size() + 1, Rational(0));
    r[0] = 1;
    for (std::size_t k = 0; k < fvec.size(); ++k) r[k + 1] = Rational(fvec[k]);
    return FPolynomial::from_coeffs(std::move(r));
}

/// h-vector: coefficients of (x-1)^(d+1) f(1/(x-1)), ascending in x.
struct HVector {
    std::vector<Integer> h; // h[0..d+1]

    bool palindromic() const {
        for (std::size_t i = 0, j = h.size(); i < j; ++i, --j)
            if (h[i] != h[j - 1]) return false;
        return true;
    }
    bool operator==(const HVector&) const = default;
};

/// Requires deg(f) = d+1 (dimension matches); entries come out integral
/// for integer f-vectors.
inline HVector h_polynomial(const FPolynomial& f, int d) {
    if (f.degree() != d + 1)
        throw invalid_input_error("h_polynomial: degree " + std::to_string(f.degree()) +
                                  " does not match dimension " + std::to_string(d));
    int n = d + 1;
    std::vector<Rational> acc(n + 1, Rational(0));
    // sum_k c_k (x-1)^(n-k)
    for (int k = 0; k <= n; ++k) {
        Rational ck = f.coeff(k);
        if (ck == 0) continue;
        int m = n - k;
        for (int j = 0; j <= m; ++j) {
            Rational sign = ((m - j) % 2 == 0) ? 1 : -1;
            acc[j] += ck * sign * Rational(binomial(m, j));
        }
    }
    HVector out;
    out.h.resize(n + 1);
    for (int j = 0; j <= n; ++j) {
        if (boost::multiprecision::denominator(acc[j]) != 1)
            throw internal_inconsistency_error("non-integral h-vector entry");
        out.h[j] = boost::multiprecision::numerator(acc[j]);
    }
    return out;
}

/// Dehn-Sommerville symmetry for dimension d: f(t) + (-1)^d f(-1-t) == 0.
/// d may be negative (the empty complex has dimension -1).
inline bool ds_symmetric(const FPolynomial& f, int d) {
    Rational sign = (((d % 2) + 2) % 2 == 0) ? 1 : -1;
    return (f + f.reflect() * sign).is_zero();
}

/// Which reflection signs hold: f + f(-1-t) == 0 ("plus") and/or
/// f - f(-1-t) == 0 ("minus").
struct DsSigns {
    bool plus = false;
    bool minus = false;
};

inline DsSigns ds_signs(const FPolynomial& f) {
    FPolynomial r = f.reflect();
    return DsSigns{(f + r).is_zero(), (f - r).is_zero()};
}

} // namespace dsc
