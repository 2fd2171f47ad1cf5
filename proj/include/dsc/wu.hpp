#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "dsc/caps.hpp"
#include "dsc/complex.hpp"
#include "dsc/errors.hpp"
#include "dsc/graph.hpp"
#include "dsc/numbers.hpp"

namespace dsc {

/// Counts of ordered intersecting simplex pairs by dimension:
/// entry (k,l) counts pairs (x,y) with dim x = k, dim y = l, x meets y.
struct FMatrix {
    std::vector<std::vector<long long>> counts;
};

/// Rational polynomial in two variables held as a rectangular coefficient
/// grid: entry (i,j) multiplies t^i s^j.
class BiPolynomial {
public:
    BiPolynomial() = default;

    static BiPolynomial zero() { return BiPolynomial(); }

    static BiPolynomial one() {
        BiPolynomial p;
        p.c_ = {{Rational(1)}};
        return p;
    }

    static BiPolynomial from_grid(std::vector<std::vector<Rational>> grid) {
        std::size_t cols = 0;
        for (const auto& row : grid) cols = std::max(cols, row.size());
        for (auto& row : grid) row.resize(cols, Rational(0));
        BiPolynomial p;
        p.c_ = std::move(grid);
        p.trim();
        return p;
    }

    const std::vector<std::vector<Rational>>& grid() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    int degree_t() const { return static_cast<int>(c_.size()) - 1; }
    int degree_s() const { return c_.empty() ? -1 : static_cast<int>(c_[0].size()) - 1; }

    Rational coeff(int i, int j) const {
        if (i < 0 || j < 0 || i > degree_t() || j > degree_s()) return Rational(0);
        return c_[i][j];
    }

    void add_term(int i, int j, const Rational& v) {
        if (static_cast<int>(c_.size()) <= i) {
            std::size_t cols = c_.empty() ? 0 : c_[0].size();
            c_.resize(i + 1, std::vector<Rational>(cols, Rational(0)));
        }
        if (c_[0].size() <= static_cast<std::size_t>(j))
            for (auto& row : c_) row.resize(j + 1, Rational(0));
        c_[i][j] += v;
        if (c_[i][j] == 0) trim();
    }

    BiPolynomial operator+(const BiPolynomial& o) const {
        BiPolynomial r;
        std::size_t rows = std::max(c_.size(), o.c_.size());
        std::size_t cols = std::max(c_.empty() ? 0 : c_[0].size(),
                                    o.c_.empty() ? 0 : o.c_[0].size());
        r.c_.assign(rows, std::vector<Rational>(cols, Rational(0)));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r.c_[i][j] = coeff(i, j) + o.coeff(i, j);
        r.trim();
        return r;
    }

    BiPolynomial operator-(const BiPolynomial& o) const { return *this + o * Rational(-1); }

    BiPolynomial operator*(const Rational& k) const {
        BiPolynomial r = *this;
        for (auto& row : r.c_)
            for (auto& x : row) x *= k;
        r.trim();
        return r;
    }

    bool operator==(const BiPolynomial& o) const { return c_ == o.c_; }

    Rational evaluate(const Rational& t, const Rational& s) const {
        Rational total(0);
        for (int i = degree_t(); i >= 0; --i) {
            Rational row(0);
            for (int j = degree_s(); j >= 0; --j) row = row * s + c_[i][j];
            total = total * t + row;
        }
        return total;
    }

    /// Substitute t -> -1-t.
    BiPolynomial reflect_t() const {
        if (c_.empty()) return *this;
        std::size_t rows = c_.size(), cols = c_[0].size();
        BiPolynomial r;
        r.c_.assign(rows, std::vector<Rational>(cols, Rational(0)));
        for (std::size_t i = 0; i < rows; ++i) {
            int neg = (i % 2 == 0) ? 1 : -1; // (-1-t)^i = (-1)^i (1+t)^i
            for (std::size_t k = 0; k <= i; ++k) {
                Rational b = Rational(binomial(static_cast<int>(i), static_cast<int>(k)) * neg);
                for (std::size_t j = 0; j < cols; ++j) r.c_[k][j] += b * c_[i][j];
            }
        }
        r.trim();
        return r;
    }

    BiPolynomial swap_vars() const {
        if (c_.empty()) return *this;
        std::size_t rows = c_.size(), cols = c_[0].size();
        BiPolynomial r;
        r.c_.assign(cols, std::vector<Rational>(rows, Rational(0)));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j) r.c_[j][i] = c_[i][j];
        r.trim();
        return r;
    }

    /// Substitute s -> -1-s.
    BiPolynomial reflect_s() const { return swap_vars().reflect_t().swap_vars(); }

    /// Antiderivative in t with zero constant.
    BiPolynomial antiderivative_t() const {
        if (c_.empty()) return *this;
        std::size_t rows = c_.size(), cols = c_[0].size();
        BiPolynomial r;
        r.c_.assign(rows + 1, std::vector<Rational>(cols, Rational(0)));
        for (std::size_t i = 0; i < rows; ++i)
            for (std::size_t j = 0; j < cols; ++j)
                r.c_[i + 1][j] = c_[i][j] / Rational(static_cast<int>(i) + 1);
        r.trim();
        return r;
    }

private:
    std::vector<std::vector<Rational>> c_;

    void trim() {
        while (!c_.empty()) {
            bool all_zero = true;
            for (const auto& x : c_.back())
                if (x != 0) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) break;
            c_.pop_back();
        }
        if (c_.empty()) return;
        std::size_t cols = c_[0].size();
        while (cols > 0) {
            bool all_zero = true;
            for (const auto& row : c_)
                if (row[cols - 1] != 0) {
                    all_zero = false;
                    break;
                }
            if (!all_zero) break;
            --cols;
        }
        if (cols == 0) {
            c_.clear();
            return;
        }
        for (auto& row : c_) row.resize(cols);
    }
};

namespace detail {

/// Visit every ordered intersecting pair (i, j) of simplex indices exactly
/// once, using a per-vertex inverted index instead of the quadratic scan.
template <typename Fn>
void for_each_intersecting_pair(const SimplicialComplex& c, Fn&& fn) {
    const auto& simplices = c.simplices();
    std::vector<int> verts = c.vertices();
    std::vector<std::vector<int>> incident(verts.size());
    for (std::size_t i = 0; i < simplices.size(); ++i)
        for (int v : simplices[i].vertices()) {
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            incident[idx].push_back(static_cast<int>(i));
        }
    std::vector<std::uint32_t> stamp(simplices.size(), 0);
    std::uint32_t round = 0;
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < simplices.size(); ++i) {
        ++round;
        for (int v : simplices[i].vertices()) {
            std::size_t idx = static_cast<std::size_t>(
                std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
            for (int j : incident[idx]) {
                if (stamp[j] == round) continue;
                stamp[j] = round;
                if (++pairs > caps().pair_cap)
                    throw cap_exceeded_error("intersecting pair enumeration exceeds cap",
                                             pairs, caps().pair_cap);
                fn(static_cast<int>(i), j);
            }
        }
    }
}

} // namespace detail

inline FMatrix f_matrix(const SimplicialComplex& c) {
    FMatrix m;
    int d = c.dimension();
    if (d < 0) return m;
    m.counts.assign(d + 1, std::vector<long long>(d + 1, 0));
    detail::for_each_intersecting_pair(c, [&](int i, int j) {
        int k = c.simplices()[i].dimension();
        int l = c.simplices()[j].dimension();
        ++m.counts[k][l];
    });
    return m;
}

/// f(t,s) = 1 + sum over intersecting ordered pairs of t^{dim x + 1} s^{dim y + 1}.
inline BiPolynomial pair_generating_function(const SimplicialComplex& c) {
    FMatrix m = f_matrix(c);
    int d = c.dimension();
    std::vector<std::vector<Rational>> grid(d + 2, std::vector<Rational>(d + 2, Rational(0)));
    grid[0][0] = 1;
    for (int k = 0; k <= d; ++k)
        for (int l = 0; l <= d; ++l) grid[k + 1][l + 1] = Rational(m.counts[k][l]);
    return BiPolynomial::from_grid(std::move(grid));
}

/// Direct double sum of (-1)^{dim x + dim y} over intersecting ordered pairs.
inline long long wu_characteristic(const SimplicialComplex& c) {
    long long total = 0;
    detail::for_each_intersecting_pair(c, [&](int i, int j) {
        int k = c.simplices()[i].dimension();
        int l = c.simplices()[j].dimension();
        total += ((k + l) % 2 == 0) ? 1 : -1;
    });
    return total;
}

/// Partial antiderivative in the first variable of the unit-sphere pair
/// generating function.
inline BiPolynomial bivariate_curvature(const Graph& g, int v) {
    Graph sphere = g.unit_sphere(v);
    return pair_generating_function(whitney(sphere)).antiderivative_t();
}

/// Local pair charge at a vertex: each intersecting ordered pair (x,y) with
/// v in the intersection contributes t^{|x|} s^{|y|} split evenly over the
/// intersection's vertices.  Summing over all vertices recovers f(t,s) - 1;
/// the splitting constant is fixed once by the edge-complex oracle.
inline BiPolynomial wu_curvature(const SimplicialComplex& c, int v) {
    std::vector<int> star;
    const auto& simplices = c.simplices();
    for (std::size_t i = 0; i < simplices.size(); ++i)
        if (simplices[i].contains_vertex(v)) star.push_back(static_cast<int>(i));
    BiPolynomial k;
    for (int i : star)
        for (int j : star) {
            int cut = simplices[i].intersection_size(simplices[j]);
            k.add_term(simplices[i].size(), simplices[j].size(), Rational(1, cut));
        }
    return k;
}

/// Bivariate curvature theorem: f_G(t,s) = 1 + sum over vertices of the
/// local pair charge, with both sides built by independent enumerations.
inline bool wu_gauss_bonnet_check(const Graph& g) {
    SimplicialComplex c = whitney(g);
    BiPolynomial rhs = BiPolynomial::one();
    for (int v : g.vertices()) rhs = rhs + wu_curvature(c, v);
    return pair_generating_function(c) == rhs;
}

/// Literal per-variable symmetry test:
/// f(t,s) + (-1)^d f(-1-t,s) = 0 and the same with the roles swapped.
inline bool wu_ds_check(const SimplicialComplex& c, int d) {
    BiPolynomial f = pair_generating_function(c);
    Rational sign((((d % 2) + 2) % 2 == 0) ? 1 : -1);
    if (!(f + f.reflect_t() * sign).is_zero()) return false;
    return (f + f.reflect_s() * sign).is_zero();
}

} // namespace dsc
