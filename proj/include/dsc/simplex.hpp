#pragma once

#include <algorithm>
#include <compare>
#include <string>
#include <vector>

#include "dsc/errors.hpp"

namespace dsc {

/// A non-empty finite set of integer vertex labels, stored strictly increasing.
class Simplex {
public:
    Simplex() = default;

    static Simplex of(std::vector<int> verts) {
        if (verts.empty()) throw invalid_input_error("simplex must be non-empty");
        std::sort(verts.begin(), verts.end());
        verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
        Simplex s;
        s.v_ = std::move(verts);
        return s;
    }

    static Simplex single(int v) { return of({v}); }

    const std::vector<int>& vertices() const { return v_; }
    int size() const { return static_cast<int>(v_.size()); }
    int dimension() const { return size() - 1; }

    bool contains_vertex(int v) const {
        return std::binary_search(v_.begin(), v_.end(), v);
    }

    bool subset_of(const Simplex& o) const {
        return std::includes(o.v_.begin(), o.v_.end(), v_.begin(), v_.end());
    }

    bool intersects(const Simplex& o) const {
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return true;
        }
        return false;
    }

    int intersection_size(const Simplex& o) const {
        int n = 0;
        auto a = v_.begin();
        auto b = o.v_.begin();
        while (a != v_.end() && b != o.v_.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else { ++n; ++a; ++b; }
        }
        return n;
    }

    Simplex with_vertex(int v) const {
        std::vector<int> w = v_;
        w.push_back(v);
        return of(std::move(w));
    }

    Simplex without_vertex(int v) const {
        std::vector<int> w;
        w.reserve(v_.size());
        for (int x : v_)
            if (x != v) w.push_back(x);
        return of(std::move(w));
    }

    /// Canonical order: by cardinality, then lexicographically on vertices.
    std::strong_ordering operator<=>(const Simplex& o) const {
        if (auto c = v_.size() <=> o.v_.size(); c != 0) return c;
        return v_ <=> o.v_;
    }
    bool operator==(const Simplex&) const = default;

    std::string to_string() const {
        std::string s = "{";
        for (std::size_t i = 0; i < v_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(v_[i]);
        }
        return s + "}";
    }

private:
    std::vector<int> v_;
};

} // namespace dsc
