#pragma once

#include <cstdint>
#include <vector>

#include "dsc/complex.hpp"
#include "dsc/graph.hpp"
#include "dsc/rng.hpp"

namespace dsc {

inline Graph cycle_graph(int n) {
    if (n < 3) throw invalid_input_error("cycle needs n >= 3");
    std::vector<int> v(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) {
        v[i] = i + 1;
        e.emplace_back(i + 1, (i + 1) % n + 1);
    }
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

inline Graph complete_graph(int n) {
    if (n < 1) throw invalid_input_error("complete graph needs n >= 1");
    std::vector<int> v(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

/// Hub vertex 1 joined to n-1 leaves.
inline Graph star_graph(int n) {
    if (n < 2) throw invalid_input_error("star needs n >= 2");
    std::vector<int> v(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = 2; i <= n; ++i) e.emplace_back(1, i);
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

/// Hub vertex 1 joined to the cycle 2..n.
inline Graph wheel_graph(int n) {
    if (n < 4) throw invalid_input_error("wheel needs n >= 4");
    std::vector<int> v(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = 2; i <= n; ++i) {
        e.emplace_back(1, i);
        e.emplace_back(i, i == n ? 2 : i + 1);
    }
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

/// d-dimensional cross polytope skeleton: 2(d+1) vertices, all edges except
/// the d+1 antipodal pairs (2i-1, 2i).  Whitney complex is the d-sphere with
/// f-function (1+2t)^(d+1).
inline Graph cross_polytope_graph(int d) {
    if (d < 0) throw invalid_input_error("cross polytope needs d >= 0");
    int n = 2 * (d + 1);
    std::vector<int> v(n);
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            bool antipodal = (i % 2 == 1) && (j == i + 1);
            if (!antipodal) e.emplace_back(i, j);
        }
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

/// The 20 icosahedron faces on vertices 1..12.
inline const std::vector<std::vector<int>>& icosahedron_facets() {
    static const std::vector<std::vector<int>> f = {
        {1, 2, 5},   {1, 2, 6},   {1, 3, 4},  {1, 3, 5},  {1, 4, 6},
        {2, 5, 9},   {2, 6, 10},  {2, 9, 10}, {3, 4, 8},  {3, 5, 11},
        {3, 8, 11},  {4, 6, 12},  {4, 8, 12}, {5, 9, 11}, {6, 10, 12},
        {7, 8, 11},  {7, 8, 12},  {7, 9, 10}, {7, 9, 11}, {7, 10, 12}};
    return f;
}

/// Moebius strip triangulated with 8 vertices, 16 edges, 8 faces.
inline const std::vector<std::vector<int>>& moebius_facets() {
    static const std::vector<std::vector<int>> f = {
        {1, 2, 5}, {1, 5, 8}, {2, 3, 6}, {2, 5, 6},
        {3, 4, 7}, {3, 6, 7}, {4, 5, 8}, {4, 7, 8}};
    return f;
}

inline Graph graph_from_facets(const std::vector<std::vector<int>>& facets) {
    return SimplicialComplex::from_facets(facets).skeleton();
}

inline Graph icosahedron_graph() { return graph_from_facets(icosahedron_facets()); }
inline Graph moebius_graph() { return graph_from_facets(moebius_facets()); }

inline SimplicialComplex icosahedron_complex() {
    return SimplicialComplex::from_facets(icosahedron_facets());
}
inline SimplicialComplex moebius_complex() {
    return SimplicialComplex::from_facets(moebius_facets());
}

/// Erdos-Renyi G(n, p).  Edge (i,j), i<j, is present iff draw k of the
/// counter stream is below p, where k is the rank of (i,j) in lexicographic
/// order.  Vertices are 1..n.
inline Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (n < 0) throw invalid_input_error("erdos_renyi needs n >= 0");
    if (!(p >= 0.0 && p <= 1.0)) throw invalid_input_error("erdos_renyi needs p in [0,1]");
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    std::vector<std::pair<int, int>> e;
    CounterRng rng(seed);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng.next_double() < p) e.emplace_back(i, j);
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

/// Random d-sphere: the cross polytope graph refined by `steps` random edge
/// refinements.  Each step picks a uniform edge of the current graph.
inline Graph random_sphere(int d, int steps, std::uint64_t seed) {
    if (steps < 0) throw invalid_input_error("random_sphere needs steps >= 0");
    Graph g = cross_polytope_graph(d);
    CounterRng rng(seed);
    for (int s = 0; s < steps; ++s) {
        const auto& es = g.edges();
        auto [a, b] = es[static_cast<std::size_t>(rng.next_below(es.size()))];
        g = g.edge_refine(a, b);
    }
    return g;
}

/// Cycle with pendant vertices ("sun"): hairs attach to cycle vertices 1..h.
inline Graph sun_graph(int cycle_n, int hairs) {
    if (hairs < 0 || hairs > cycle_n) throw invalid_input_error("sun: bad hair count");
    Graph g = cycle_graph(cycle_n);
    std::vector<int> v = g.vertices();
    std::vector<std::pair<int, int>> e = g.edges();
    for (int i = 0; i < hairs; ++i) {
        v.push_back(cycle_n + 1 + i);
        e.emplace_back(i + 1, cycle_n + 1 + i);
    }
    return Graph::from_vertices_edges(std::move(v), std::move(e));
}

} // namespace dsc
