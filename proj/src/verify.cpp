#include "logext/errors.hpp"
#include "logext/formpull.hpp"

namespace logext {

namespace {

bool form_equal(const LogForm& a, const LogForm& b) {
    return a.coeffs == b.coeffs;
}

}  // namespace

E8Report verify_e8(long p) {
    if (p != 2 && p != 3 && p != 5)
        throw UsageError("e8 example is defined for p in {2, 3, 5}");
    PrimeField F(static_cast<std::uint64_t>(p));
    Chart xyz{F, {"x", "y", "z"}};
    Chart uvw{F, {"u", "v", "w"}};
    Chart uw{F, {"u", "w"}};

    RatFunc u = uvw.var("u"), v = uvw.var("v"), w = uvw.var("w");
    std::map<std::string, RatFunc> phi = {
        {"x", u.pow(2) * v.pow(5)},
        {"y", u * v.pow(3)},
        {"z", u.pow(2) * v.pow(7) * w},
    };

    // strict-transform factorization of f = z^2 + x^3 + y^5
    RatFunc f = xyz.var("z").pow(2) + xyz.var("x").pow(3) + xyz.var("y").pow(5);
    RatFunc fpull =
        f.substitute({phi.at("x"), phi.at("y"), phi.at("z")});
    RatFunc expected_f = u.pow(4) * v.pow(14) *
                         (w.pow(2) + u * v * (u + uvw.constant(1)));
    bool strict_ok = fpull == expected_f;

    // the reflexive generator, per case
    LogForm sigma;
    std::string sigma_desc;
    if (p == 2) {
        sigma.coeffs.emplace("x", xyz.var("y").pow(-4));
        sigma_desc = "y^-4 dx";
    } else if (p == 3) {
        sigma.coeffs.emplace("y", xyz.var("z").pow(-1));
        sigma_desc = "z^-1 dy";
    } else {
        sigma.coeffs.emplace("x", xyz.var("z").pow(-1));
        sigma_desc = "z^-1 dx";
    }

    LogForm tau = pullback(xyz, uvw, phi, sigma);

    // eliminate v along the branch through the singular point of the
    // strict transform: v = -w^2 / (u(u+1))
    RatFunc U = uw.var("u"), W = uw.var("w");
    std::map<std::string, RatFunc> param = {
        {"u", U},
        {"v", -(W.pow(2)) / (U * (U + uw.constant(1)))},
        {"w", W},
    };
    LogForm rho = pullback(uvw, uw, param, tau);

    long gamma_e = p == 2 ? 14 : p == 3 ? 9 : 5;
    long alpha_e = p == 2 ? 4 : p == 3 ? 2 : 1;
    long beta_e = p == 2 ? 6 : p == 3 ? 4 : 2;

    E8Report rep;
    rep.p = p;
    rep.strict_transform_ok = strict_ok;
    rep.sigma = sigma_desc;
    auto itw = rho.coeffs.find("w");
    rep.dw_coefficient_zero = itw == rho.coeffs.end() || itw->second.is_zero();
    rep.gamma = rep.alpha = rep.beta = 0;
    rep.unit = 0;
    bool du_ok = false;
    auto itu = rho.coeffs.find("u");
    if (itu != rho.coeffs.end() && !itu->second.is_zero()) {
        const RatFunc& g = itu->second;
        std::size_t ui = uw.index_of("u"), wi = uw.index_of("w");
        rep.gamma = -g.order_along(wi);
        rep.alpha = g.order_along(ui);
        RatFunc shape = U.pow(alpha_e) *
                        (U + uw.constant(1)).pow(static_cast<long>(beta_e)) *
                        W.pow(-gamma_e);
        RatFunc q = g / shape;
        du_ok = q.is_constant() && !q.is_zero();
        if (du_ok) {
            rep.unit = q.num().constant_value();
            rep.beta = beta_e;
        } else {
            rep.beta = g.num().degree(ui) - rep.alpha;
        }
    }
    rep.verdict = pole_order_along(uw, rho, "w").verdict;
    rep.matches_expected = strict_ok && rep.dw_coefficient_zero && du_ok &&
                           rep.gamma == gamma_e && rep.alpha == alpha_e &&
                           rep.unit != 0 &&
                           rep.verdict == FormVerdict::WorseThanLogarithmic;
    return rep;
}

VeroneseReport verify_veronese(long p) {
    PrimeField F(static_cast<std::uint64_t>(p));
    Chart c0{F, {"x0", "y0"}};
    Chart c1{F, {"x1", "y1"}};

    RatFunc x0 = c0.var("x0"), y0 = c0.var("y0");
    // transition of the degree-p cone charts:
    // (x1, y1) = (x0^-1, x0^p y0), and symmetrically back
    std::map<std::string, RatFunc> t10 = {
        {"x1", x0.pow(-1)},
        {"y1", x0.pow(p) * y0},
    };
    RatFunc x1 = c1.var("x1"), y1 = c1.var("y1");
    std::map<std::string, RatFunc> t01 = {
        {"x0", x1.pow(-1)},
        {"y0", x1.pow(p) * y1},
    };

    VeroneseReport rep;
    rep.p = p;

    LogForm sigma1;
    sigma1.coeffs.emplace("y1", y1.pow(-1));
    LogForm sigma0;
    sigma0.coeffs.emplace("y0", y0.pow(-1));
    LogForm pulled = pullback(c1, c0, t10, sigma1);
    rep.chart_compatible = form_equal(pulled, sigma0);

    auto rep0 = pole_order_along(c0, sigma0, "y0");
    auto rep1 = pole_order_along(c1, sigma1, "y1");
    rep.pole_order_chart0 = -rep0.orders.at("y0");
    rep.pole_order_chart1 = -rep1.orders.at("y1");
    rep.verdict = rep0.verdict;

    LogForm dy1;
    dy1.coeffs.emplace("y1", c1.constant(1));
    LogForm dy0;
    dy0.coeffs.emplace("y0", c0.constant(1));
    rep.dy_transfers = form_equal(pullback(c1, c0, t10, dy1), dy0);

    // transition composed with itself is the identity substitution
    std::vector<RatFunc> back = {t01.at("x0"), t01.at("y0")};
    rep.involution_identity =
        t10.at("x1").substitute(back) == x1 &&
        t10.at("y1").substitute(back) == y1;

    rep.matches_expected =
        rep.chart_compatible && rep.pole_order_chart0 == 1 &&
        rep.pole_order_chart1 == 1 &&
        rep.verdict == FormVerdict::Logarithmic && !rep.dy_transfers &&
        rep.involution_identity;
    return rep;
}

}  // namespace logext
