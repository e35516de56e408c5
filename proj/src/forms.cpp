#include <algorithm>

#include "logext/errors.hpp"
#include "logext/formpull.hpp"

namespace logext {

RatFunc::RatFunc(Poly num)
    : num_(std::move(num)), den_(Poly::constant(num_.field(), num_.nvars(), 1)) {}

RatFunc::RatFunc(Poly num, Poly den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw Error("zero denominator");
    reduce();
}

RatFunc RatFunc::constant(PrimeField f, std::size_t nvars, long long c) {
    return RatFunc(Poly::constant(f, nvars, c));
}

RatFunc RatFunc::variable(PrimeField f, std::size_t nvars, std::size_t idx) {
    return RatFunc(Poly::variable(f, nvars, idx));
}

void RatFunc::reduce() {
    if (num_.is_zero()) {
        den_ = Poly::constant(num_.field(), num_.nvars(), 1);
        return;
    }
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant() || g.constant_value() != 1) {
        num_ = num_.divided_by(g);
        den_ = den_.divided_by(g);
    }
    // canonical scaling: denominator lex-leading coefficient 1
    std::uint64_t lc = den_.terms().rbegin()->second;
    if (lc != 1) {
        std::uint64_t inv = den_.field().inv(lc);
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

bool RatFunc::is_constant() const {
    return num_.is_constant() && den_.is_constant();
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
    return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
    if (o.is_zero()) throw Error("division by the zero function");
    return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::pow(long e) const {
    if (e < 0) {
        if (is_zero()) throw Error("negative power of the zero function");
        return RatFunc(den_, num_).pow(-e);
    }
    return RatFunc(num_.pow(static_cast<unsigned>(e)),
                   den_.pow(static_cast<unsigned>(e)));
}

RatFunc RatFunc::derivative(std::size_t var) const {
    // quotient rule, exact over F_p
    return RatFunc(den_ * num_.derivative(var) - num_ * den_.derivative(var),
                   den_ * den_);
}

namespace {

RatFunc substitute_poly(const Poly& f, const std::vector<RatFunc>& images) {
    if (images.empty()) throw UsageError("no substitution images");
    PrimeField tf = images[0].num().field();
    std::size_t tn = images[0].num().nvars();
    RatFunc out = RatFunc::constant(tf, tn, 0);
    for (const auto& [e, c] : f.terms()) {
        RatFunc term = RatFunc::constant(tf, tn, static_cast<long long>(c));
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) term = term * images[i].pow(e[i]);
        out = out + term;
    }
    return out;
}

}  // namespace

RatFunc RatFunc::substitute(const std::vector<RatFunc>& images) const {
    if (images.size() != num_.nvars())
        throw UsageError("substitution must cover every variable");
    RatFunc dn = substitute_poly(den_, images);
    if (dn.is_zero())
        throw Error("pole on substitution: denominator maps to 0");
    return substitute_poly(num_, images) / dn;
}

long RatFunc::order_along(std::size_t var) const {
    if (is_zero()) throw Error("order of the zero function is undefined");
    return static_cast<long>(num_.min_exponent(var)) -
           static_cast<long>(den_.min_exponent(var));
}

bool RatFunc::operator==(const RatFunc& o) const {
    // representation is canonical after reduce()
    return num_ == o.num_ && den_ == o.den_;
}

std::string RatFunc::str(const std::vector<std::string>& vars) const {
    if (den_.is_constant() && den_.constant_value() == 1)
        return num_.str(vars);
    return "(" + num_.str(vars) + ") / (" + den_.str(vars) + ")";
}

std::size_t Chart::index_of(const std::string& v) const {
    auto it = std::find(vars.begin(), vars.end(), v);
    if (it == vars.end()) throw UsageError("unknown variable " + v);
    return static_cast<std::size_t>(it - vars.begin());
}

RatFunc Chart::var(const std::string& v) const {
    return RatFunc::variable(field, vars.size(), index_of(v));
}

RatFunc Chart::constant(long long c) const {
    return RatFunc::constant(field, vars.size(), c);
}

LogForm differential(const Chart& chart, const RatFunc& f) {
    LogForm out;
    for (std::size_t i = 0; i < chart.vars.size(); ++i) {
        RatFunc d = f.derivative(i);
        if (!d.is_zero()) out.coeffs.emplace(chart.vars[i], d);
    }
    return out;
}

LogForm pullback(const Chart& source, const Chart& target,
                 const std::map<std::string, RatFunc>& images,
                 const LogForm& form) {
    std::vector<RatFunc> img;
    for (const auto& v : source.vars) {
        auto it = images.find(v);
        if (it == images.end())
            throw UsageError("substitution misses variable " + v);
        img.push_back(it->second);
    }
    LogForm out;
    for (const auto& [v, f] : form.coeffs) {
        RatFunc fstar = f.substitute(img);
        LogForm dimg = differential(target, img[source.index_of(v)]);
        for (const auto& [w, g] : dimg.coeffs) {
            RatFunc add = fstar * g;
            auto it = out.coeffs.find(w);
            if (it == out.coeffs.end()) {
                if (!add.is_zero()) out.coeffs.emplace(w, add);
            } else {
                it->second = it->second + add;
                if (it->second.is_zero()) out.coeffs.erase(it);
            }
        }
    }
    return out;
}

const char* to_string(FormVerdict v) {
    switch (v) {
        case FormVerdict::Regular: return "regular";
        case FormVerdict::Logarithmic: return "logarithmic";
        case FormVerdict::WorseThanLogarithmic:
            return "worse than logarithmic";
    }
    return "?";
}

PoleOrderReport pole_order_along(const Chart& chart, const LogForm& form,
                                 const std::string& var) {
    std::size_t vi = chart.index_of(var);
    PoleOrderReport rep;
    bool others_ok = true;
    long dvar_order = 0;  // no pole when the d(var) coefficient is absent
    for (const auto& [v, f] : form.coeffs) {
        if (f.is_zero()) continue;
        long ord = f.order_along(vi);
        rep.orders[v] = ord;
        if (v == var) dvar_order = ord;
        else if (ord < 0) others_ok = false;
    }
    if (others_ok && dvar_order >= 0)
        rep.verdict = FormVerdict::Regular;
    else if (others_ok && dvar_order == -1)
        rep.verdict = FormVerdict::Logarithmic;
    else
        rep.verdict = FormVerdict::WorseThanLogarithmic;
    return rep;
}

}  // namespace logext
