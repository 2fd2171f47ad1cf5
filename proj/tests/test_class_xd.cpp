#include <catch2/catch_amalgamated.hpp>

#include "dsc/class_xd.hpp"
#include "dsc/generators.hpp"

using namespace dsc;

TEST_CASE("canonical key is isomorphism invariant") {
    Graph a = cycle_graph(6);
    // same cycle with scrambled labels
    Graph b = Graph::from_vertices_edges({10, 20, 30, 40, 50, 60},
                                         {{10, 30}, {30, 50}, {50, 20}, {20, 40},
                                          {40, 60}, {60, 10}});
    auto ka = detail::canonical_key(a);
    auto kb = detail::canonical_key(b);
    REQUIRE(ka.has_value());
    REQUIRE(kb.has_value());
    REQUIRE(*ka == *kb);

    // two triangles vs a hexagon: same degree sequence, different graphs
    Graph c = Graph::from_vertices_edges({1, 2, 3, 4, 5, 6},
                                         {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}});
    auto kc = detail::canonical_key(c);
    REQUIRE(kc.has_value());
    REQUIRE_FALSE(*ka == *kc);

    REQUIRE_FALSE(detail::canonical_key(erdos_renyi(14, 0.5, 1)).has_value());
}

TEST_CASE("contractibility verdicts") {
    REQUIRE(is_contractible(Graph::from_vertices_edges({1}, {})));
    REQUIRE_FALSE(is_contractible(Graph()));
    REQUIRE_FALSE(is_contractible(cycle_graph(4)));
    REQUIRE_FALSE(is_contractible(cycle_graph(7)));
    REQUIRE(is_contractible(complete_graph(2)));
    REQUIRE(is_contractible(complete_graph(5)));
    REQUIRE(is_contractible(star_graph(6)));
    REQUIRE(is_contractible(wheel_graph(5)));
    REQUIRE_FALSE(is_contractible(cross_polytope_graph(2)));
    REQUIRE_THROWS_AS(is_contractible(erdos_renyi(14, 0.3, 1)), resource_error);
}

TEST_CASE("sphere verdicts") {
    REQUIRE(is_sphere(Graph(), -1));
    REQUIRE_FALSE(is_sphere(Graph(), 0));
    Graph two = Graph::from_vertices_edges({1, 2}, {});
    REQUIRE(is_sphere(two, 0));
    REQUIRE_FALSE(is_sphere(Graph::from_vertices_edges({1}, {}), 0));
    for (int n = 4; n <= 8; ++n) REQUIRE(is_sphere(cycle_graph(n), 1));
    REQUIRE_FALSE(is_sphere(cycle_graph(5), 2));
    REQUIRE(is_sphere(cross_polytope_graph(2), 2));
    REQUIRE(is_sphere(icosahedron_graph(), 2));
    REQUIRE_FALSE(is_sphere(complete_graph(4), 2));
    REQUIRE_FALSE(is_sphere(complete_graph(3), 1));
    REQUIRE(is_sphere(cross_polytope_graph(3), 3));
}

TEST_CASE("manifold verdicts") {
    REQUIRE(is_manifold(cycle_graph(9), 1));
    REQUIRE(is_manifold(icosahedron_graph(), 2));
    REQUIRE(is_manifold(cross_polytope_graph(2), 2));
    REQUIRE_FALSE(is_manifold(complete_graph(4), 2));
    REQUIRE_FALSE(is_manifold(moebius_graph(), 2)); // boundary vertices have arc spheres
}

TEST_CASE("variety verdicts") {
    REQUIRE(is_variety(Graph(), -1));
    REQUIRE_FALSE(is_variety(Graph(), 0));
    Graph pts = Graph::from_vertices_edges({1, 2, 3}, {});
    REQUIRE(is_variety(pts, 0));
    REQUIRE(is_variety(sun_graph(20, 9), 1));
    REQUIRE(is_variety(cycle_graph(6), 1));
    // icosahedron with pendant vertices: pendant spheres are points, not 1-varieties
    Graph hairy = icosahedron_graph();
    std::vector<int> verts = hairy.vertices();
    std::vector<std::pair<int, int>> edges(hairy.edges().begin(), hairy.edges().end());
    for (int i = 0; i < 8; ++i) {
        verts.push_back(100 + i);
        edges.push_back({i + 1, 100 + i});
    }
    Graph g = Graph::from_vertices_edges(verts, edges);
    REQUIRE(whitney(g).fvector() == std::vector<long long>{20, 38, 20});
    REQUIRE_FALSE(is_variety(g, 2));
}

TEST_CASE("class membership with witnesses") {
    REQUIRE(in_class_xd(cross_polytope_graph(2), 2).verdict);
    REQUIRE(in_class_xd(icosahedron_graph(), 2).verdict);
    for (int n = 4; n <= 8; ++n) REQUIRE(in_class_xd(cycle_graph(n), 1).verdict);
    REQUIRE(in_class_xd(cross_polytope_graph(3), 3).verdict);
    REQUIRE_FALSE(in_class_xd(complete_graph(4), 2).verdict);

    // the sun graph is symmetric but fails the local sphere recursion
    ClassWitness w = in_class_xd(sun_graph(20, 9), 1);
    REQUIRE_FALSE(w.verdict);
    REQUIRE_FALSE(w.chain.empty());
    REQUIRE(w.chain.front() == 1); // first vertex whose sphere leaves the class
}

TEST_CASE("verdicts are stable across repeated calls") {
    Graph g = icosahedron_graph();
    REQUIRE(in_class_xd(g, 2).verdict == in_class_xd(g, 2).verdict);
    REQUIRE(is_sphere(g, 2));
    REQUIRE(is_sphere(g, 2)); // memoized path
}

TEST_CASE("empty graph class membership") {
    REQUIRE(in_class_xd(Graph(), -1).verdict);
    REQUIRE_FALSE(in_class_xd(Graph(), 0).verdict);
    Graph two = Graph::from_vertices_edges({1, 2}, {});
    REQUIRE(in_class_xd(two, 0).verdict);
    Graph three = Graph::from_vertices_edges({1, 2, 3}, {});
    REQUIRE_FALSE(in_class_xd(three, 0).verdict); // wrong Euler characteristic
}
