#include <random>

#include "doctest.h"
#include "logext/errors.hpp"
#include "logext/formpull.hpp"

using namespace logext;

namespace {

Poly random_poly(std::mt19937& rng, PrimeField f, std::size_t nvars) {
    std::uniform_int_distribution<int> nterms(1, 4), expd(0, 3),
        coeff(1, static_cast<int>(f.p - 1));
    Poly out(f, nvars);
    int n = nterms(rng);
    for (int t = 0; t < n; ++t) {
        Poly::Exps e(nvars);
        for (auto& x : e) x = static_cast<unsigned>(expd(rng));
        out = out + Poly::monomial(f, nvars, e, coeff(rng));
    }
    return out;
}

}  // namespace

TEST_SUITE("formpull") {

TEST_CASE("prime field") {
    CHECK_THROWS_AS(PrimeField(4), UsageError);
    CHECK_THROWS_AS(PrimeField(1), UsageError);
    PrimeField f(7);
    CHECK(f.add(5, 4) == 2);
    CHECK(f.mul(3, 5) == 1);
    CHECK(f.inv(3) == 5);
    CHECK(f.reduce(-1) == 6);
    CHECK(f.pow(3, 6) == 1);
    CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("polynomial arithmetic basics") {
    PrimeField f(5);
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    Poly p = x * x + y.scaled(3);
    CHECK(p.degree(0) == 2);
    CHECK(p.degree(1) == 1);
    CHECK((p - p).is_zero());
    CHECK((x * y) == (y * x));
    CHECK(p.pow(0).is_constant());
    // coefficients reduce mod p
    CHECK((x.scaled(5)).is_zero());
}

TEST_CASE("exact division") {
    PrimeField f(7);
    Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
    Poly a = (x + y) * (x - y);
    CHECK(a.divided_by(x + y) == (x - y));
    CHECK_THROWS_AS(x.divided_by(y), Error);
    CHECK_THROWS_AS(x.divided_by(Poly(f, 2)), Error);
}

TEST_CASE("gcd recovers common factors") {
    std::mt19937 rng(5150);
    for (std::uint64_t pp : {2ull, 5ull, 7ull}) {
        PrimeField f(pp);
        for (int iter = 0; iter < 25; ++iter) {
            Poly g = random_poly(rng, f, 3);
            if (g.is_zero()) continue;
            Poly a = random_poly(rng, f, 3), b = random_poly(rng, f, 3);
            if (a.is_zero() || b.is_zero()) continue;
            Poly d = poly_gcd(a * g, b * g);
            // d is divisible by g up to units: (a g, b g) / d exact and
            // d / gcd contains g
            CHECK_NOTHROW((a * g).divided_by(d));
            CHECK_NOTHROW((b * g).divided_by(d));
            // g divides d
            if (!poly_gcd(a, b).is_constant()) continue;
            CHECK_NOTHROW(d.divided_by(poly_gcd(d, g)));
            CHECK(poly_gcd(d, g) == poly_gcd(g, g));
        }
    }
}

TEST_CASE("ratfunc reduction is canonical") {
    PrimeField f(7);
    Poly x = Poly::variable(f, 1, 0);
    Poly one = Poly::constant(f, 1, 1);
    RatFunc a(x * x - one, x - one);  // (x-1)(x+1)/(x-1)
    CHECK(a == RatFunc(x + one));
    RatFunc b(one.scaled(2), x.scaled(2));
    CHECK(b == RatFunc(one, x));
    CHECK_THROWS_AS(RatFunc(one, Poly(f, 1)), Error);
}

TEST_CASE("differential examples") {
    // d(u^2) = 0 over F_2
    {
        Chart c{PrimeField(2), {"u", "v"}};
        auto d = differential(c, c.var("u").pow(2));
        CHECK(d.coeffs.empty());
    }
    // d(u v^3) = v^3 du over F_3
    {
        Chart c{PrimeField(3), {"u", "v"}};
        auto d = differential(c, c.var("u") * c.var("v").pow(3));
        CHECK(d.coeffs.size() == 1);
        CHECK(d.coeffs.at("u") == c.var("v").pow(3));
    }
    // d(w^2/(u(u+1))) = w^2/(u(u+1))^2 du over F_2
    {
        Chart c{PrimeField(2), {"u", "w"}};
        RatFunc u = c.var("u"), w = c.var("w");
        auto d = differential(c, w.pow(2) / (u * (u + c.constant(1))));
        CHECK(d.coeffs.size() == 1);
        CHECK(d.coeffs.at("u") ==
              w.pow(2) / (u * (u + c.constant(1))).pow(2));
    }
}

TEST_CASE("leibniz and frobenius kernel (randomized)") {
    std::mt19937 rng(31337);
    for (std::uint64_t pp : {2ull, 3ull, 7ull}) {
        PrimeField f(pp);
        Chart c{f, {"x", "y"}};
        for (int iter = 0; iter < 20; ++iter) {
            RatFunc a = RatFunc(random_poly(rng, f, 2));
            RatFunc b = RatFunc(random_poly(rng, f, 2));
            for (std::size_t v = 0; v < 2; ++v) {
                CHECK((a * b).derivative(v) ==
                      a * b.derivative(v) + b * a.derivative(v));
            }
            // d(f^p) = 0
            RatFunc ap = a.pow(static_cast<long>(pp));
            CHECK(ap.derivative(0).is_zero());
            CHECK(ap.derivative(1).is_zero());
        }
    }
}

TEST_CASE("pullback examples") {
    // identity substitution leaves the form unchanged
    {
        Chart c{PrimeField(5), {"x", "y"}};
        LogForm s;
        s.coeffs.emplace("x", c.var("y").pow(-2));
        std::map<std::string, RatFunc> id = {{"x", c.var("x")},
                                             {"y", c.var("y")}};
        auto t = pullback(c, c, id, s);
        CHECK(t.coeffs == s.coeffs);
    }
    // p = 2: sigma = y^-4 dx, x -> u^2 v^5, y -> u v^3 gives u^-2 v^-8 dv
    {
        Chart xy{PrimeField(2), {"x", "y"}};
        Chart uv{PrimeField(2), {"u", "v"}};
        LogForm s;
        s.coeffs.emplace("x", xy.var("y").pow(-4));
        std::map<std::string, RatFunc> m = {
            {"x", uv.var("u").pow(2) * uv.var("v").pow(5)},
            {"y", uv.var("u") * uv.var("v").pow(3)}};
        auto t = pullback(xy, uv, m, s);
        CHECK(t.coeffs.count("u") == 0);
        CHECK(t.coeffs.at("v") ==
              uv.var("u").pow(-2) * uv.var("v").pow(-8));
    }
}

TEST_CASE("pullback functoriality on monomial maps (randomized)") {
    std::mt19937 rng(777);
    PrimeField f(5);
    Chart a{f, {"x", "y"}}, b{f, {"s", "t"}}, c{f, {"u", "v"}};
    std::uniform_int_distribution<int> ed(1, 3);
    for (int iter = 0; iter < 15; ++iter) {
        std::map<std::string, RatFunc> fm = {
            {"x", b.var("s").pow(ed(rng)) * b.var("t").pow(ed(rng))},
            {"y", b.var("t").pow(ed(rng))}};
        std::map<std::string, RatFunc> gm = {
            {"s", c.var("u").pow(ed(rng))},
            {"t", c.var("u").pow(ed(rng)) * c.var("v").pow(ed(rng))}};
        LogForm s;
        s.coeffs.emplace("x", RatFunc(random_poly(rng, f, 2)));
        s.coeffs.emplace("y", a.var("x") * a.var("y"));

        auto lhs = pullback(b, c, gm, pullback(a, b, fm, s));
        // composite map: substitute g into f
        std::vector<RatFunc> gimg = {gm.at("s"), gm.at("t")};
        std::map<std::string, RatFunc> comp = {
            {"x", fm.at("x").substitute(gimg)},
            {"y", fm.at("y").substitute(gimg)}};
        auto rhs = pullback(a, c, comp, s);
        CHECK(lhs.coeffs == rhs.coeffs);
    }
}

TEST_CASE("pole orders and verdicts") {
    Chart c{PrimeField(2), {"u", "w"}};
    RatFunc u = c.var("u"), w = c.var("w");
    LogForm worse;
    worse.coeffs.emplace(
        "u", u.pow(4) * (u + c.constant(1)).pow(6) * w.pow(-14));
    auto r = pole_order_along(c, worse, "w");
    CHECK(r.orders.at("u") == -14);
    CHECK(r.verdict == FormVerdict::WorseThanLogarithmic);

    LogForm logf;
    logf.coeffs.emplace("w", w.pow(-1));
    CHECK(pole_order_along(c, logf, "w").verdict ==
          FormVerdict::Logarithmic);

    LogForm reg;
    reg.coeffs.emplace("u", c.constant(1));
    auto rr = pole_order_along(c, reg, "w");
    CHECK(rr.orders.at("u") == 0);
    CHECK(rr.verdict == FormVerdict::Regular);
}

TEST_CASE("pole order of sums") {
    Chart c{PrimeField(7), {"u", "w"}};
    RatFunc w = c.var("w");
    RatFunc a = w.pow(-3), b = w.pow(-1);
    CHECK((a + b).order_along(1) == -3);  // min of the orders
    CHECK((a + a.pow(1) * c.constant(-1) + b).order_along(1) == -1);
}

TEST_CASE("hypersurface differential consistency") {
    // 3x^2 dx + 5y^4 dy + 2z dz = d f pulls back to d(phi* f)
    for (long p : {2L, 3L, 5L}) {
        Chart xyz{PrimeField(static_cast<std::uint64_t>(p)), {"x", "y", "z"}};
        Chart uvw{PrimeField(static_cast<std::uint64_t>(p)), {"u", "v", "w"}};
        RatFunc fx = xyz.var("z").pow(2) + xyz.var("x").pow(3) +
                     xyz.var("y").pow(5);
        std::map<std::string, RatFunc> phi = {
            {"x", uvw.var("u").pow(2) * uvw.var("v").pow(5)},
            {"y", uvw.var("u") * uvw.var("v").pow(3)},
            {"z", uvw.var("u").pow(2) * uvw.var("v").pow(7) * uvw.var("w")}};
        auto lhs = pullback(xyz, uvw, phi, differential(xyz, fx));
        auto rhs = differential(
            uvw, fx.substitute({phi.at("x"), phi.at("y"), phi.at("z")}));
        CHECK(lhs.coeffs == rhs.coeffs);
    }
}

TEST_CASE("verify_e8 full reproduction") {
    auto r2 = verify_e8(2);
    CHECK(r2.matches_expected);
    CHECK(r2.gamma == 14);
    CHECK(r2.alpha == 4);
    CHECK(r2.beta == 6);

    auto r3 = verify_e8(3);
    CHECK(r3.matches_expected);
    CHECK(r3.gamma == 9);
    CHECK(r3.alpha == 2);
    CHECK(r3.beta == 4);

    auto r5 = verify_e8(5);
    CHECK(r5.matches_expected);
    CHECK(r5.gamma == 5);
    CHECK(r5.alpha == 1);
    CHECK(r5.beta == 2);
    CHECK(r5.unit == 2);

    CHECK_THROWS_AS(verify_e8(7), UsageError);
}

TEST_CASE("verify_veronese") {
    for (long p : {2L, 3L, 7L, 11L}) {
        auto r = verify_veronese(p);
        CHECK(r.matches_expected);
        CHECK(r.chart_compatible);
        CHECK(r.pole_order_chart0 == 1);
        CHECK(!r.dy_transfers);
        CHECK(r.involution_identity);
    }
    CHECK_THROWS_AS(verify_veronese(6), UsageError);
}

TEST_CASE("pole on substitution is reported") {
    Chart c{PrimeField(3), {"x"}};
    RatFunc f = c.constant(1) / c.var("x");
    CHECK_THROWS_WITH_AS(f.substitute({c.constant(0)}),
                         doctest::Contains("pole on substitution"), Error);
}

}  // TEST_SUITE
