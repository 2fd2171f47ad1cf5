#include <catch2/catch_amalgamated.hpp>

#include "dsc/connection.hpp"
#include "dsc/generators.hpp"

using namespace dsc;

namespace {

Integer trace(const GreenFunction& gf) {
    Integer t = 0;
    for (std::size_t i = 0; i < gf.g.size(); ++i) t += gf.g[i][i];
    return t;
}

Integer total(const GreenFunction& gf) {
    Integer t = 0;
    for (const auto& row : gf.g)
        for (const auto& x : row) t += x;
    return t;
}

Integer super_trace(const SimplicialComplex& c, const GreenFunction& gf) {
    Integer t = 0;
    for (std::size_t i = 0; i < gf.g.size(); ++i) {
        int d = c.simplices()[i].dimension();
        t += (d % 2 == 0) ? gf.g[i][i] : -gf.g[i][i];
    }
    return t;
}

} // namespace

TEST_CASE("edge complex connection matrix and inverse") {
    SimplicialComplex edge = SimplicialComplex::from_facets({{1, 2}});
    ConnectionMatrix m = connection_matrix(edge);
    std::vector<std::vector<int>> expect_l = {{1, 0, 1}, {0, 1, 1}, {1, 1, 1}};
    REQUIRE(m.l == expect_l);

    GreenFunction gf = green(edge);
    std::vector<std::vector<Integer>> expect_g = {{0, -1, 1}, {-1, 0, 1}, {1, 1, -1}};
    REQUIRE(gf.g == expect_g);
    REQUIRE(trace(gf) == -1);
    REQUIRE(total(gf) == 1); // chi of an edge
    REQUIRE((gf.det_sign == 1 || gf.det_sign == -1));
}

TEST_CASE("cycle connection matrix row sums by dimension") {
    // a vertex meets itself and its two edges; an edge meets itself, its two
    // endpoints, and its two neighboring edges
    SimplicialComplex c4 = whitney(cycle_graph(4));
    ConnectionMatrix m = connection_matrix(c4);
    REQUIRE(m.l.size() == 8);
    for (std::size_t i = 0; i < m.l.size(); ++i) {
        int s = 0;
        for (int x : m.l[i]) s += x;
        REQUIRE(s == (c4.simplices()[i].dimension() == 0 ? 3 : 5));
    }
}

TEST_CASE("energy theorem on fixtures") {
    REQUIRE(energy_check(SimplicialComplex::from_facets({{1, 2}})));
    REQUIRE(energy_check(whitney(cycle_graph(4))));
    REQUIRE(energy_check(whitney(cycle_graph(7))));
    REQUIRE(energy_check(whitney(cross_polytope_graph(2))));
    REQUIRE(energy_check(whitney(complete_graph(4))));
    REQUIRE(energy_check(moebius_complex()));
}

TEST_CASE("green diagonal identity on fixtures") {
    REQUIRE(green_diagonal_check(SimplicialComplex::from_facets({{1, 2}})));
    REQUIRE(green_diagonal_check(whitney(cycle_graph(4))));
    REQUIRE(green_diagonal_check(whitney(cross_polytope_graph(2))));
    REQUIRE(green_diagonal_check(whitney(complete_graph(4))));
    REQUIRE(green_diagonal_check(moebius_complex()));
}

TEST_CASE("cycle diagonal entries are all -1") {
    // every unit sphere in the refinement of a cycle has two vertices
    GreenFunction gf = green(whitney(cycle_graph(4)));
    for (std::size_t i = 0; i < gf.g.size(); ++i) REQUIRE(gf.g[i][i] == -1);
}

TEST_CASE("super trace of the inverse equals chi") {
    std::vector<SimplicialComplex> fixtures = {
        SimplicialComplex::from_facets({{1, 2}}), whitney(cycle_graph(4)),
        whitney(cross_polytope_graph(2)), whitney(complete_graph(5)),
        moebius_complex()};
    for (const auto& c : fixtures) {
        GreenFunction gf = green(c);
        REQUIRE(super_trace(c, gf) == c.euler_characteristic());
    }
}

TEST_CASE("hydrogen trace identities") {
    SimplicialComplex edge = SimplicialComplex::from_facets({{1, 2}});
    HydrogenReport r = hydrogen_report(edge);
    REQUIRE(r.tr_g == -1);
    REQUIRE(r.tr_l == 3);
    REQUIRE(r.refined_derivative_at_minus_one == Rational(-1));
    REQUIRE(r.sum_one_minus_chi == -1);
    REQUIRE(r.tr_l_minus_tr_g == 4);

    HydrogenReport c4 = hydrogen_report(whitney(cycle_graph(4)));
    REQUIRE(c4.tr_g == -8);
    REQUIRE(c4.tr_l == 8);
    REQUIRE(c4.refined_derivative_at_minus_one == Rational(-8));

    hydrogen_report(whitney(cross_polytope_graph(2))); // asserts internally
    hydrogen_report(moebius_complex());
}

TEST_CASE("log derivative report flags vanishing denominators") {
    // chi = 1: the refined f-function vanishes at -1
    LogDerivativeReport tree = log_derivative_report(whitney(star_graph(5)));
    REQUIRE(tree.chi_is_one);
    REQUIRE_FALSE(tree.f_log_derivative.has_value());
    REQUIRE_FALSE(tree.trg_over_one_minus_chi.has_value());

    // chi = 0: the total energy vanishes
    LogDerivativeReport cyc = log_derivative_report(whitney(cycle_graph(5)));
    REQUIRE(cyc.chi_is_zero);
    REQUIRE_FALSE(cyc.trg_over_energy.has_value());
    REQUIRE(cyc.trg_over_one_minus_chi.has_value());

    // chi = 2: everything is defined
    LogDerivativeReport oct = log_derivative_report(whitney(cross_polytope_graph(2)));
    REQUIRE_FALSE(oct.chi_is_one);
    REQUIRE_FALSE(oct.chi_is_zero);
    REQUIRE(oct.f_log_derivative.has_value());
    REQUIRE(oct.trg_over_energy.has_value());
    REQUIRE(oct.trg_over_one_minus_chi.has_value());
    REQUIRE(*oct.trg_over_energy == Rational(13));
    REQUIRE(*oct.trg_over_one_minus_chi == Rational(-26));
}

TEST_CASE("determinant is unimodular on random complexes") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 50; ++seed) {
        int n = 4 + static_cast<int>(seed % 5); // 4..8
        SimplicialComplex c = whitney(erdos_renyi(n, 0.5, seed));
        if (c.simplices().empty()) continue;
        GreenFunction gf = green(c);
        REQUIRE((gf.det_sign == 1 || gf.det_sign == -1));
        REQUIRE(total(gf) == c.euler_characteristic());
        ++tested;
    }
    REQUIRE(tested == 50);
}

TEST_CASE("identities hold on larger random complexes") {
    int tested = 0;
    for (std::uint64_t seed = 1; tested < 25; ++seed) {
        SimplicialComplex c = whitney(erdos_renyi(10, 0.45, seed));
        if (c.simplices().size() > 200 || c.simplices().empty()) continue;
        REQUIRE(energy_check(c));
        REQUIRE(green_diagonal_check(c));
        hydrogen_report(c); // internal assertion must not fire
        ++tested;
    }
    REQUIRE(tested == 25);
}

TEST_CASE("connection matrix respects the simplex cap") {
    // a 13-vertex complete graph yields 8191 simplices, above the default cap
    REQUIRE_THROWS_AS(connection_matrix(whitney(complete_graph(13))), cap_exceeded_error);
}
