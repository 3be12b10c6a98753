#include <doctest.h>

#include <random>

#include "graphineq/errors.hpp"
#include "graphineq/graph.hpp"
#include "graphineq/sampler.hpp"
#include "graphineq/summation.hpp"
#include "graphineq/vertex.hpp"
#include "graphineq/vertex_function.hpp"

using namespace graphineq;

TEST_CASE("lattice vertex ids round-trip across the documented range") {
    // exact corners first
    for (int dim = 1; dim <= 5; ++dim) {
        for (std::int64_t c : {std::int64_t(-(1 << 20)), std::int64_t(0), std::int64_t(1 << 20)}) {
            std::vector<std::int64_t> coords(static_cast<std::size_t>(dim), c);
            CHECK(lattice_coords(lattice_vertex(coords), dim) == coords);
        }
    }
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 2000; ++trial) {
        const int dim = 1 + static_cast<int>(uniform_index(rng, 5));
        std::vector<std::int64_t> coords(static_cast<std::size_t>(dim));
        for (auto& c : coords)
            c = static_cast<std::int64_t>(uniform_index(rng, (1 << 21) + 1)) - (1 << 20);
        CHECK(lattice_coords(lattice_vertex(coords), dim) == coords);
    }
    CHECK(vertex_to_string(VertexId(-7)) == "-7");
    CHECK(vertex_to_string(kInfinityVertex) == "inf");
}

TEST_CASE("line graph neighbors, degree bound, standard weights") {
    LineGraph line;
    CHECK(line.standard_weights());
    CHECK(*line.degree_bound() == doctest::Approx(2.0));
    const auto at0 = line.neighbors(0);
    REQUIRE(at0.size() == 1);
    CHECK(at0[0].vertex == VertexId(1));
    const auto at5 = line.neighbors(5);
    REQUIRE(at5.size() == 2);
    CHECK(at5[0].weight == 1.0);
    CHECK_THROWS_AS((void)line.neighbors(-1), DomainViolation);
}

TEST_CASE("lattice and quadrant adjacency") {
    LatticeGraph z2(2);
    const VertexId origin = lattice_vertex({0, 0});
    CHECK(z2.neighbors(origin).size() == 4);

    QuadrantGraph q2(2);
    CHECK(q2.neighbors(lattice_vertex({0, 0})).size() == 2); // corner
    CHECK(q2.neighbors(lattice_vertex({1, 0})).size() == 3); // edge of the quadrant
    CHECK(q2.neighbors(lattice_vertex({1, 1})).size() == 4);
    CHECK_THROWS_AS((void)q2.neighbors(lattice_vertex({-1, 2})), DomainViolation);
}

TEST_CASE("finite graphs stay symmetric and reject bad edges") {
    FiniteGraph g;
    g.add_edge(0, 1, 2.5);
    g.add_edge(1, 2, 0.5);
    CHECK(g.weight(1, 0) == 2.5);
    CHECK(g.weight(0, 1) == 2.5);
    CHECK(g.weight(0, 2) == 0.0);
    CHECK_THROWS_AS(g.add_edge(3, 3, 1.0), DomainViolation);
    CHECK_THROWS_AS(g.add_edge(0, 4, 0.0), DomainViolation);
    CHECK_THROWS_AS(g.add_edge(0, 1, 3.0), DomainViolation);

    const auto verts = g.vertices();
    CHECK(audit_symmetry(g, verts) == 4); // two edges, both orientations
}

TEST_CASE("edge-list loader completes symmetry and validates") {
    const auto g = load_edge_list("0 1 2.0\n# comment line\n2 1 0.25\n1 0 2.0\n");
    CHECK(g->weight(0, 1) == 2.0);
    CHECK(g->weight(1, 2) == 0.25);
    CHECK_THROWS_AS(load_edge_list("0 1 1.0\n1 0 2.0\n"), ConfigError);
    CHECK_THROWS_AS(load_edge_list("0 1\n"), ConfigError);
    CHECK_THROWS_AS(load_edge_list("0 1 1.0 7\n"), ConfigError);
}

TEST_CASE("graph generators are addressable by name") {
    CHECK(make_graph("line")->standard_weights());
    CHECK(*make_graph("lattice:3")->degree_bound() == doctest::Approx(6.0));
    CHECK(*make_graph("quadrant:2")->degree_bound() == doctest::Approx(4.0));
    CHECK_THROWS_AS(make_graph("torus:2"), ConfigError);
    CHECK_THROWS_AS(make_graph("lattice:x"), ConfigError);
}

TEST_CASE("measures must be positive; potentials default to zero") {
    Measure unit;
    CHECK(unit(123) == 1.0);
    Measure bad([](VertexId) { return -1.0; });
    CHECK_THROWS_AS((void)bad(0), DomainViolation);
    Potential q;
    CHECK(q(55) == 0.0);
}

TEST_CASE("vertex functions: support semantics and windows") {
    std::map<VertexId, double> values{{3, 1.5}, {7, 0.0}, {9, -2.0}};
    const VertexFunction f = VertexFunction::from_support(values);
    CHECK(f(3) == 1.5);
    CHECK(f(9) == -2.0);
    CHECK(f(7) == 0.0);  // stored zero is dropped
    CHECK(f(1000) == 0.0);
    REQUIRE(f.support().size() == 2); // support holds exactly the nonzero entries
    CHECK(f.support()[0] == VertexId(3));

    const VertexFunction lazy = VertexFunction::lazy(
        [](VertexId x) { return static_cast<double>(x); },
        [](VertexId x) { return x >= 0 && x <= 10; }, "test window");
    CHECK(lazy(10) == 10.0);
    CHECK_THROWS_AS((void)lazy(11), WindowViolation);
    CHECK_THROWS_AS((void)lazy.support(), DomainViolation);
}

TEST_CASE("bfs balls respect membership and radius") {
    LineGraph line;
    const auto ball = bfs_ball(line, 1, 3, [](VertexId x) { return x >= 1; });
    CHECK(ball == std::vector<VertexId>{1, 2, 3, 4});
    const auto full = bfs_ball(line, 2, 2);
    CHECK(full == std::vector<VertexId>{0, 1, 2, 3, 4});
}

TEST_CASE("pairwise summation matches exact sums on integers") {
    std::vector<double> terms;
    double expect = 0.0;
    for (int i = 1; i <= 1000; ++i) {
        terms.push_back(i);
        expect += i;
    }
    CHECK(pairwise_sum(terms) == expect);
    SumAccumulator acc;
    acc.add(-3.0);
    acc.add(4.0);
    CHECK(acc.value() == 1.0);
    CHECK(acc.abs_scale() == 7.0);
}
