#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "dsc/errors.hpp"

namespace dsc {

/// A finite simple graph with integer vertex labels.  Vertices and edges are
/// kept sorted so identical graphs serialize identically.
class Graph {
public:
    Graph() = default;

    static Graph from_vertices_edges(std::vector<int> vertices,
                                     std::vector<std::pair<int, int>> edges) {
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        Graph g;
        g.verts_ = std::move(vertices);
        for (auto& [a, b] : edges) {
            if (a == b) throw invalid_input_error("loop edge at vertex " + std::to_string(a));
            if (!g.has_vertex(a) || !g.has_vertex(b))
                throw invalid_input_error("edge endpoint not in vertex set: (" +
                                          std::to_string(a) + "," + std::to_string(b) + ")");
            if (a > b) std::swap(a, b);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        g.edges_ = std::move(edges);
        g.build_adjacency();
        return g;
    }

    /// Vertices are inferred from the edge list.
    static Graph from_edges(const std::vector<std::pair<int, int>>& edges) {
        std::vector<int> verts;
        for (auto& [a, b] : edges) {
            verts.push_back(a);
            verts.push_back(b);
        }
        return from_vertices_edges(std::move(verts), edges);
    }

    const std::vector<int>& vertices() const { return verts_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int vertex_count() const { return static_cast<int>(verts_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return verts_.empty(); }

    bool has_vertex(int v) const {
        return std::binary_search(verts_.begin(), verts_.end(), v);
    }

    bool has_edge(int a, int b) const {
        if (a > b) std::swap(a, b);
        return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
    }

    const std::vector<int>& neighbors(int v) const {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw invalid_input_error("no vertex " + std::to_string(v));
        return it->second;
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_vertex_label() const { return verts_.empty() ? -1 : verts_.back(); }

    std::vector<int> common_neighbors(int a, int b) const {
        const auto& na = neighbors(a);
        const auto& nb = neighbors(b);
        std::vector<int> out;
        std::set_intersection(na.begin(), na.end(), nb.begin(), nb.end(),
                              std::back_inserter(out));
        return out;
    }

    /// Subgraph induced on the given vertex subset.
    Graph induced(const std::vector<int>& subset) const {
        std::vector<int> keep = subset;
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        for (int v : keep)
            if (!has_vertex(v)) throw invalid_input_error("induced: no vertex " + std::to_string(v));
        std::vector<std::pair<int, int>> es;
        for (int v : keep)
            for (int w : neighbors(v))
                if (v < w && std::binary_search(keep.begin(), keep.end(), w))
                    es.emplace_back(v, w);
        return from_vertices_edges(std::move(keep), std::move(es));
    }

    /// Unit sphere S(v): subgraph induced on the neighbors of v.
    Graph unit_sphere(int v) const { return induced(neighbors(v)); }

    Graph remove_vertex(int v) const {
        if (!has_vertex(v)) throw invalid_input_error("remove_vertex: no vertex " + std::to_string(v));
        std::vector<int> keep;
        keep.reserve(verts_.size() - 1);
        for (int w : verts_)
            if (w != v) keep.push_back(w);
        return induced(keep);
    }

    /// Edge refinement: the edge (a,b) is removed and a new vertex c
    /// (max label + 1) is joined to a, b and every common neighbor of a, b.
    Graph edge_refine(int a, int b) const {
        if (!has_edge(a, b))
            throw invalid_input_error("edge_refine: (" + std::to_string(a) + "," +
                                      std::to_string(b) + ") is not an edge");
        int c = max_vertex_label() + 1;
        std::vector<int> verts = verts_;
        verts.push_back(c);
        std::vector<std::pair<int, int>> es;
        es.reserve(edges_.size() + 8);
        for (auto& e : edges_)
            if (!(e.first == std::min(a, b) && e.second == std::max(a, b)))
                es.push_back(e);
        es.emplace_back(a, c);
        es.emplace_back(b, c);
        for (int w : common_neighbors(a, b)) es.emplace_back(w, c);
        return from_vertices_edges(std::move(verts), std::move(es));
    }

    bool operator==(const Graph& o) const {
        return verts_ == o.verts_ && edges_ == o.edges_;
    }

private:
    void build_adjacency() {
        adj_.clear();
        for (int v : verts_) adj_[v];
        for (auto& [a, b] : edges_) {
            adj_[a].push_back(b);
            adj_[b].push_back(a);
        }
        for (auto& [v, ns] : adj_) std::sort(ns.begin(), ns.end());
    }

    std::vector<int> verts_;
    std::vector<std::pair<int, int>> edges_;
    std::map<int, std::vector<int>> adj_;
};

} // namespace dsc
