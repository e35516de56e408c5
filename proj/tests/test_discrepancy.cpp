#include "doctest.h"
#include "logext/discrepancy.hpp"
#include "logext/errors.hpp"
#include "testutil.hpp"

using namespace logext;
using namespace logext::testutil;

TEST_SUITE("discrepancy") {

TEST_CASE("single (-p)-curve: veronese cone values") {
    for (long p : {2L, 3L, 5L, 7L}) {
        DualGraph g;
        g.add_curve("E", -p);
        auto rep = discrepancies(g);
        CHECK(rep.values.at("E") == Rational(-1) + Rational(2, p));
        CHECK(rep.sing_class == (p == 2 ? SingClass::Canonical
                                        : SingClass::Klt));
        CHECK(rep.cartier_index_proxy == (p == 2 ? 1 : p));

        // transverse boundary curve
        DualGraph gb = g;
        gb.add_boundary({"D", {{"E", 1}}});
        auto repb = discrepancies(gb);
        CHECK(repb.values.at("E") == -Rational(p - 1, p));
    }
}

TEST_CASE("E8 is canonical with trivial determinant") {
    auto rep = discrepancies(make_e8());
    for (const auto& [id, a] : rep.values) {
        (void)id;
        CHECK(a == Rational(0));
    }
    CHECK(rep.sing_class == SingClass::Canonical);
    CHECK(rep.cartier_index_proxy == 1);
    auto detres = tame_determinant_check(make_e8(), 7);
    CHECK(detres.abs_det == 1);
    CHECK(detres.coprime_to_p);
}

TEST_CASE("tame determinant check at char p") {
    DualGraph g;
    g.add_curve("E", -5);
    auto r5 = tame_determinant_check(g, 5);
    CHECK(r5.abs_det == 5);
    CHECK(!r5.coprime_to_p);
    CHECK(tame_determinant_check(g, 3).coprime_to_p);
    CHECK_THROWS_AS(tame_determinant_check(g, 1), UsageError);
}

TEST_CASE("classification thresholds") {
    // terminal: impossible for exceptional curves of a minimal resolution,
    // but a (-1)-curve alone gives a = -1 + 2 = 1 > 0
    DualGraph t;
    t.add_curve("E", -1);
    CHECK(discrepancies(t).sing_class == SingClass::Terminal);

    // lc-not-klt: cusp cycle of (-3)s, all a = -1
    auto cusp = discrepancies(make_cycle(3, 3));
    CHECK(cusp.sing_class == SingClass::LcNotKlt);
    CHECK(cusp.partition.e_minus1.size() == 3);
    CHECK(cusp.proxy_only);  // integral discrepancies, proxy is blind

    // not-lc: cusp with a boundary curve through it
    DualGraph bad = make_cycle(3, 3);
    bad.add_boundary({"D", {{"C1", 1}}});
    auto repbad = discrepancies(bad);
    CHECK(repbad.sing_class == SingClass::NotLc);
    CHECK(!repbad.is_lc());

    // degenerate lattice
    CHECK_THROWS_AS(discrepancies(make_cycle(3, 2)), LatticeError);
}

TEST_CASE("partition by sign") {
    // simple elliptic: single genus-1 curve
    DualGraph se;
    se.add_curve("E", -1, 1);
    auto rep = discrepancies(se);
    CHECK(rep.values.at("E") == Rational(-1));
    CHECK(rep.partition.e_minus1.count("E") == 1);
    CHECK(rep.proxy_only);

    auto rep8 = discrepancies(make_e8());
    CHECK(rep8.partition.e_zero.size() == 8);
    CHECK(rep8.is_plt());
}

TEST_CASE("different coefficients") {
    CHECK(different(1, true).coefficient == Rational(1));
    CHECK(different(2, false).coefficient == Rational(1, 2));
    CHECK(different(3, false).coefficient == Rational(2, 3));
    CHECK(different(1, false).coefficient == Rational(0));
    CHECK_THROWS_AS(different(0, false), UsageError);
}

TEST_CASE("local pair discrepancies: leaf, interior, fork") {
    // contract a (-2)-leaf of a chain; one surviving neighbor:
    // lambda (-2) = (K + D).F = -2 + 2g + cross(1) = ... rhs = -2 + 1 = -1
    // lambda = 1/2, a = -1/2
    {
        DualGraph g = make_chain({2, 2, 2});
        ContractionState st(g);
        st.contracted = {"C1"};
        auto loc = local_pair_discrepancies(st, {"C1"});
        CHECK(loc.at("C1") == Rational(-1, 2));
    }
    // interior (-2) with two surviving neighbors: crepant, a = -1
    {
        DualGraph g = make_chain({2, 2, 2});
        ContractionState st(g);
        st.contracted = {"C2"};
        auto loc = local_pair_discrepancies(st, {"C2"});
        CHECK(loc.at("C2") == Rational(-1));
    }
    // (-2)-fork with three surviving branches: a = -3/2, not dlt
    {
        DualGraph g;
        g.add_curve("F", -2);
        for (int i = 1; i <= 3; ++i) {
            g.add_curve("B" + std::to_string(i), -2);
            g.add_edge("F", "B" + std::to_string(i));
        }
        ContractionState st(g);
        st.contracted = {"F"};
        auto loc = local_pair_discrepancies(st, {"F"});
        CHECK(loc.at("F") == Rational(-3, 2));
    }
}

TEST_CASE("local pair discrepancies input validation") {
    DualGraph g = make_chain({2, 2, 2});
    ContractionState st(g);
    st.contracted = {"C1", "C3"};
    CHECK_THROWS_AS(local_pair_discrepancies(st, {"C1", "C3"}), Error);
    CHECK_THROWS_AS(local_pair_discrepancies(st, {"C2"}), Error);
    auto comps = st.contracted_components();
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<std::string>{"C1"});
    CHECK(comps[1] == std::vector<std::string>{"C3"});
}

TEST_CASE("index proxy") {
    std::map<std::string, Rational> vals = {
        {"A", Rational(-1, 2)}, {"B", Rational(-2, 3)}};
    CHECK(index_proxy(vals) == 6);
    CHECK(index_proxy({}) == 1);
}

}  // TEST_SUITE
