#include <random>

#include "doctest.h"
#include "logext/discrepancy.hpp"
#include "logext/errors.hpp"
#include "testutil.hpp"

using namespace logext;
using namespace logext::testutil;

TEST_SUITE("dualgraph") {

TEST_CASE("construction validation") {
    DualGraph g;
    g.add_curve("A", -2);
    CHECK_THROWS_AS(g.add_curve("A", -3), GraphError);
    CHECK_THROWS_AS(g.add_curve("B", 0), GraphError);
    CHECK_THROWS_AS(g.add_curve("B", -1, -1), GraphError);
    g.add_curve("B", -3);
    CHECK_THROWS_AS(g.add_edge("A", "A"), GraphError);
    CHECK_THROWS_AS(g.add_edge("A", "B", 0), GraphError);
    g.add_edge("A", "B", 2);
    CHECK_THROWS_AS(g.add_edge("B", "A"), GraphError);
    CHECK(g.edge_multiplicity("B", "A") == 2);
    CHECK_THROWS_AS(g.add_boundary({"A", {{"B", 1}}}), GraphError);
    CHECK_THROWS_AS(g.add_boundary({"D", {{"B", 0}}}), GraphError);
    g.add_boundary({"D", {{"B", 1}}});
    CHECK(g.boundary_multiplicity("B") == 1);
    CHECK(g.boundary_multiplicity("A") == 0);
}

TEST_CASE("intersection matrix and connectivity") {
    DualGraph g = make_chain({2, 2, 2});
    auto m = intersection_matrix(g);
    CHECK(m.at(0, 0) == Rational(-2));
    CHECK(m.at(0, 1) == Rational(1));
    CHECK(m.at(0, 2) == Rational(0));
    CHECK(m.is_symmetric());
    CHECK(g.is_connected());
    g.add_curve("X", -2);
    CHECK(!g.is_connected());
}

TEST_CASE("negative definiteness") {
    CHECK(is_negative_definite(make_chain({2, 2, 2})).negative_definite);
    CHECK(is_negative_definite(make_e8()).negative_definite);

    // cycle of (-2)-curves: determinant 0, degenerate lattice
    auto res = is_negative_definite(make_cycle(3, 2));
    CHECK(!res.negative_definite);
    CHECK(res.violating_minor == 3);

    // (-3)-cycle is fine
    CHECK(is_negative_definite(make_cycle(3, 3)).negative_definite);

    DualGraph pos;
    pos.add_curve("A", -1);
    pos.add_curve("B", -1);
    pos.add_edge("A", "B", 2);
    auto res2 = is_negative_definite(pos);
    CHECK(!res2.negative_definite);
}

TEST_CASE("json round trip") {
    DualGraph g = make_e8();
    g.add_boundary({"D", {{"E1", 1}}});
    DualGraph h = DualGraph::from_json(g.to_json());
    CHECK(h.to_json() == g.to_json());
    CHECK(h.vertices().size() == 8);
    CHECK(h.boundary_multiplicity("E1") == 1);
}

TEST_CASE("json schema errors carry the offending key") {
    CHECK_THROWS_AS(DualGraph::from_json("{"), GraphError);
    CHECK_THROWS_WITH_AS(
        DualGraph::from_json(R"({"curves": [], "extra": 1})"),
        doctest::Contains("extra"), GraphError);
    CHECK_THROWS_WITH_AS(
        DualGraph::from_json(
            R"({"curves": [{"id": "A", "selff": -2}]})"),
        doctest::Contains("selff"), GraphError);
    CHECK_THROWS_AS(
        DualGraph::from_json(
            R"({"curves": [{"id": "A", "self": -2}], "edges": [["A"]]})"),
        GraphError);
}

TEST_CASE("blowup rules") {
    // single-curve center r = 1: self-intersection drops by 1
    DualGraph g = make_chain({2, 3});
    DualGraph h = blowup(g, {"C1", 1, std::nullopt, 0}, "N");
    CHECK(h.curve("C1").self_intersection == -3);
    CHECK(h.curve("N").self_intersection == -1);
    CHECK(h.edge_multiplicity("N", "C1") == 1);

    // two-curve center (r, s) = (1, 1): edge multiplicity drops
    DualGraph k = blowup(g, {"C1", 1, "C2", 1});
    CHECK(k.vertices().size() == 3);
    CHECK(k.edge_multiplicity("C1", "C2") == 0);
    CHECK(k.curve("C1").self_intersection == -3);
    CHECK(k.curve("C2").self_intersection == -4);
    const std::string new_id = k.vertices().back().id;
    CHECK(k.edge_multiplicity(new_id, "C1") == 1);
    CHECK(k.edge_multiplicity(new_id, "C2") == 1);

    // rs exceeding the available multiplicity is rejected
    CHECK_THROWS_AS(blowup(g, {"C1", 2, "C2", 1}), GraphError);
    CHECK_THROWS_AS(blowup(g, {"Z", 1, std::nullopt, 0}), GraphError);
}

TEST_CASE("blowup preserves |det| and definiteness (random suite)") {
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> rr(1, 2);
    for (int iter = 0; iter < 100; ++iter) {
        DualGraph g = random_tree(rng, 8);
        Rational d0 = det(intersection_matrix(g));
        bool nd0 = is_negative_definite(g).negative_definite;

        BlowupCenter c;
        std::uniform_int_distribution<std::size_t> vd(
            0, g.vertices().size() - 1);
        c.first = g.vertices()[vd(rng)].id;
        c.r = rr(rng);
        auto nbrs = g.neighbors(c.first);
        if (!nbrs.empty() && iter % 2 == 0) {
            c.second = nbrs.front();
            c.s = 1;
            c.r = 1;  // tree edges have multiplicity 1
        }
        DualGraph h = blowup(g, c);
        CHECK(det(intersection_matrix(h)).abs() == d0.abs());
        CHECK(is_negative_definite(h).negative_definite == nd0);
    }
}

}  // TEST_SUITE
