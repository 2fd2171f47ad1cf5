#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "dsc/caps.hpp"
#include "dsc/errors.hpp"
#include "dsc/graph.hpp"
#include "dsc/simplex.hpp"

namespace dsc {

/// A finite abstract simplicial complex: a set of non-empty simplices closed
/// under taking non-empty subsets.  Simplices are stored in canonical order
/// (dimension, then lexicographic) so derived matrices are reproducible.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Builds the downward closure of the given facets.
    static SimplicialComplex from_facets(const std::vector<std::vector<int>>& facets,
                                         std::size_t cap = caps().barycentric_cap) {
        std::set<Simplex> acc;
        for (const auto& f : facets) {
            Simplex fs = Simplex::of(f); // throws on empty facet
            const auto& v = fs.vertices();
            int k = fs.size();
            if (k > 30)
                throw cap_exceeded_error("facet too large", std::size_t(1) << 30, cap);
            for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) sub.push_back(v[i]);
                acc.insert(Simplex::of(std::move(sub)));
                if (acc.size() > cap)
                    throw cap_exceeded_error("complex closure too large", acc.size(), cap);
            }
        }
        return from_closed_set(std::vector<Simplex>(acc.begin(), acc.end()));
    }

    /// Accepts an already-closed simplex set; validates the closure property.
    static SimplicialComplex from_closed_set(std::vector<Simplex> simplices) {
        std::sort(simplices.begin(), simplices.end());
        simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
        SimplicialComplex c;
        c.s_ = std::move(simplices);
        c.finish();
        for (const Simplex& s : c.s_)
            if (s.size() > 1)
                for (int v : s.vertices())
                    if (!c.contains(s.without_vertex(v)))
                        throw invalid_input_error("complex not closed under subsets at " +
                                                  s.to_string());
        return c;
    }

    const std::vector<Simplex>& simplices() const { return s_; }
    std::size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int dimension() const { return dim_; }

    /// f_k counts, k = 0..dimension.  Empty complex gives an empty vector.
    const std::vector<long long>& fvector() const { return f_; }

    long long euler_characteristic() const {
        long long chi = 0;
        for (std::size_t k = 0; k < f_.size(); ++k)
            chi += (k % 2 == 0) ? f_[k] : -f_[k];
        return chi;
    }

    bool contains(const Simplex& s) const {
        return std::binary_search(s_.begin(), s_.end(), s);
    }

    /// Index of s in canonical order; -1 when absent.
    long long index_of(const Simplex& s) const {
        auto it = std::lower_bound(s_.begin(), s_.end(), s);
        if (it == s_.end() || *it != s) return -1;
        return it - s_.begin();
    }

    std::vector<int> vertices() const {
        std::vector<int> v;
        for (const Simplex& s : s_) {
            if (s.size() > 1) break;
            v.push_back(s.vertices()[0]);
        }
        return v;
    }

    /// Facets: simplices not properly contained in any other simplex.
    std::vector<Simplex> maximal_simplices() const {
        std::vector<char> covered(s_.size(), 0);
        for (const Simplex& s : s_) {
            const auto& v = s.vertices();
            int k = s.size();
            if (k == 1) continue;
            if (k > 30) throw cap_exceeded_error("simplex too large", std::size_t(1) << 30, 1u << 30);
            for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < k; ++i)
                    if (mask & (1u << i)) sub.push_back(v[i]);
                long long idx = index_of(Simplex::of(std::move(sub)));
                if (idx >= 0) covered[idx] = 1;
            }
        }
        std::vector<Simplex> out;
        for (std::size_t i = 0; i < s_.size(); ++i)
            if (!covered[i]) out.push_back(s_[i]);
        return out;
    }

    /// 1-skeleton as a graph.
    Graph skeleton() const {
        std::vector<std::pair<int, int>> es;
        for (const Simplex& s : s_) {
            if (s.size() > 2) break;
            if (s.size() == 2) es.emplace_back(s.vertices()[0], s.vertices()[1]);
        }
        return Graph::from_vertices_edges(vertices(), std::move(es));
    }

    bool operator==(const SimplicialComplex& o) const { return s_ == o.s_; }

private:
    void finish() {
        dim_ = -1;
        for (const Simplex& s : s_) dim_ = std::max(dim_, s.dimension());
        f_.assign(dim_ + 1, 0);
        for (const Simplex& s : s_) ++f_[s.dimension()];
    }

    std::vector<Simplex> s_;
    std::vector<long long> f_;
    int dim_ = -1;
};

/// Whitney complex: all cliques of g, enumerated by ascending-vertex extension.
inline SimplicialComplex whitney(const Graph& g, std::size_t cap = caps().barycentric_cap) {
    std::vector<Simplex> out;
    std::vector<int> prefix;
    auto emit = [&](const std::vector<int>& clique) {
        out.push_back(Simplex::of(clique));
        if (out.size() > cap)
            throw cap_exceeded_error("whitney complex too large", out.size(), cap);
    };
    // extend(prefix, cands): cands are vertices > prefix.back() adjacent to all of prefix
    auto extend = [&](auto&& self, const std::vector<int>& cands) -> void {
        for (std::size_t i = 0; i < cands.size(); ++i) {
            int v = cands[i];
            prefix.push_back(v);
            emit(prefix);
            std::vector<int> next;
            const auto& nv = g.neighbors(v);
            for (std::size_t j = i + 1; j < cands.size(); ++j)
                if (std::binary_search(nv.begin(), nv.end(), cands[j]))
                    next.push_back(cands[j]);
            if (!next.empty()) self(self, next);
            prefix.pop_back();
        }
    };
    extend(extend, g.vertices());
    return SimplicialComplex::from_closed_set(std::move(out));
}

/// Join: every vertex of a is connected to every vertex of b.  Vertex labels
/// of b are shifted above those of a.  Simplex counts multiply:
/// (|a|+1)(|b|+1) = |join|+1.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b,
                              std::size_t cap = caps().barycentric_cap) {
    std::size_t total = (a.size() + 1) * (b.size() + 1) - 1;
    if (total > cap) throw cap_exceeded_error("join too large", total, cap);
    int offset = 0;
    for (int v : a.vertices()) offset = std::max(offset, v + 1);
    std::vector<Simplex> out;
    out.reserve(total);
    for (const Simplex& s : a.simplices()) out.push_back(s);
    std::vector<Simplex> shifted;
    shifted.reserve(b.size());
    for (const Simplex& s : b.simplices()) {
        std::vector<int> v = s.vertices();
        for (int& x : v) x += offset;
        shifted.push_back(Simplex::of(std::move(v)));
    }
    for (const Simplex& s : shifted) out.push_back(s);
    for (const Simplex& x : a.simplices())
        for (const Simplex& y : shifted) {
            std::vector<int> v = x.vertices();
            const auto& w = y.vertices();
            v.insert(v.end(), w.begin(), w.end());
            out.push_back(Simplex::of(std::move(v)));
        }
    return SimplicialComplex::from_closed_set(std::move(out));
}

/// Disjoint union; vertex labels of b are shifted above those of a.
inline SimplicialComplex disjoint_union(const SimplicialComplex& a,
                                        const SimplicialComplex& b) {
    int offset = 0;
    for (int v : a.vertices()) offset = std::max(offset, v + 1);
    std::vector<Simplex> out;
    out.reserve(a.size() + b.size());
    for (const Simplex& s : a.simplices()) out.push_back(s);
    for (const Simplex& s : b.simplices()) {
        std::vector<int> v = s.vertices();
        for (int& x : v) x += offset;
        out.push_back(Simplex::of(std::move(v)));
    }
    return SimplicialComplex::from_closed_set(std::move(out));
}

namespace detail {

/// For each simplex index, the indices of its proper subsets present in c.
inline std::vector<std::vector<int>> subset_lists(const SimplicialComplex& c) {
    std::vector<std::vector<int>> subs(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        const Simplex& s = c.simplices()[i];
        const auto& v = s.vertices();
        int k = s.size();
        if (k > 30) throw cap_exceeded_error("simplex too large", std::size_t(1) << 30, 1u << 30);
        for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
            std::vector<int> sub;
            for (int j = 0; j < k; ++j)
                if (mask & (1u << j)) sub.push_back(v[j]);
            long long idx = c.index_of(Simplex::of(std::move(sub)));
            if (idx < 0)
                throw internal_inconsistency_error("missing subset in closed complex");
            subs[i].push_back(static_cast<int>(idx));
        }
    }
    return subs;
}

} // namespace detail

/// Comparability graph of the inclusion order: vertex i is the i-th simplex
/// of c in canonical order; i and j are adjacent iff one contains the other.
inline Graph comparability_graph(const SimplicialComplex& c) {
    auto subs = detail::subset_lists(c);
    std::vector<int> verts(c.size());
    for (std::size_t i = 0; i < c.size(); ++i) verts[i] = static_cast<int>(i);
    std::vector<std::pair<int, int>> es;
    for (std::size_t i = 0; i < c.size(); ++i)
        for (int j : subs[i]) es.emplace_back(j, static_cast<int>(i));
    return Graph::from_vertices_edges(std::move(verts), std::move(es));
}

/// Number of simplices of the Barycentric refinement (chains in the inclusion
/// order), saturating at cap+1.
inline std::size_t barycentric_size_estimate(const SimplicialComplex& c,
                                             std::size_t cap = caps().barycentric_cap) {
    auto subs = detail::subset_lists(c);
    // chains counted at their maximal element: cnt[i] = 1 + sum over proper
    // subsets j of cnt[j]; subsets precede i in canonical order.
    std::vector<unsigned long long> cnt(c.size(), 0);
    unsigned long long total = 0;
    const unsigned long long lim = cap;
    for (std::size_t i = 0; i < c.size(); ++i) {
        unsigned long long x = 1;
        for (int j : subs[i]) {
            x += cnt[j];
            if (x > lim) return cap + 1;
        }
        cnt[i] = x;
        total += x;
        if (total > lim) return cap + 1;
    }
    return static_cast<std::size_t>(total);
}

/// Barycentric refinement: simplices of c become vertices (labeled by their
/// canonical index) and chains under inclusion become simplices.
inline SimplicialComplex barycentric(const SimplicialComplex& c,
                                     std::size_t cap = caps().barycentric_cap) {
    std::size_t est = barycentric_size_estimate(c, cap);
    if (est > cap) throw cap_exceeded_error("barycentric refinement too large", est, cap);
    auto subs = detail::subset_lists(c);
    std::vector<Simplex> out;
    out.reserve(est);
    // Chains are extended downward from their maximal element so candidates
    // are exactly the proper subsets of the last-added simplex.
    std::vector<int> chain;
    auto extend = [&](auto&& self, int top) -> void {
        chain.push_back(top);
        out.push_back(Simplex::of(chain));
        for (int j : subs[top]) self(self, j);
        chain.pop_back();
    };
    for (std::size_t i = 0; i < c.size(); ++i) extend(extend, static_cast<int>(i));
    return SimplicialComplex::from_closed_set(std::move(out));
}

/// True iff c equals the Whitney complex of its own 1-skeleton.
inline bool is_whitney_of_skeleton(const SimplicialComplex& c) {
    if (c.empty()) return true;
    try {
        return whitney(c.skeleton()) == c;
    } catch (const cap_exceeded_error&) {
        return false;
    }
}

} // namespace dsc
