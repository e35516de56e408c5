#include <algorithm>
#include <optional>
#include <sstream>

#include "logext/errors.hpp"
#include "logext/formpull.hpp"

namespace logext {

PrimeField::PrimeField(std::uint64_t p_) : p(p_) {
    if (p < 2) throw UsageError("characteristic must be a prime >= 2");
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            throw UsageError(std::to_string(p) + " is not prime");
    if (p >= (1ull << 32)) throw UsageError("modulus too large");
}

std::uint64_t PrimeField::reduce(long long c) const {
    long long m = c % static_cast<long long>(p);
    if (m < 0) m += static_cast<long long>(p);
    return static_cast<std::uint64_t>(m);
}

std::uint64_t PrimeField::add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p ? s - p : s;
}

std::uint64_t PrimeField::sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p - b;
}

std::uint64_t PrimeField::mul(std::uint64_t a, std::uint64_t b) const {
    return (a * b) % p;  // both < 2^32
}

std::uint64_t PrimeField::neg(std::uint64_t a) const {
    return a == 0 ? 0 : p - a;
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
    if (a % p == 0) throw Error("inverse of 0 in F_" + std::to_string(p));
    return pow(a, p - 2);
}

Poly::Poly(PrimeField f, std::size_t nvars) : field_(f), nvars_(nvars) {}

Poly Poly::constant(PrimeField f, std::size_t nvars, long long c) {
    Poly out(f, nvars);
    out.add_term(Exps(nvars, 0), f.reduce(c));
    return out;
}

Poly Poly::variable(PrimeField f, std::size_t nvars, std::size_t idx) {
    if (idx >= nvars) throw UsageError("variable index out of range");
    Exps e(nvars, 0);
    e[idx] = 1;
    Poly out(f, nvars);
    out.add_term(e, 1 % f.p);
    return out;
}

Poly Poly::monomial(PrimeField f, std::size_t nvars, const Exps& e,
                    long long c) {
    if (e.size() != nvars) throw UsageError("exponent vector length mismatch");
    Poly out(f, nvars);
    out.add_term(e, f.reduce(c));
    return out;
}

void Poly::add_term(const Exps& e, std::uint64_t c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace(e, c);
    if (!fresh) {
        it->second = field_.add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

bool Poly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 &&
            terms_.begin()->first == Exps(nvars_, 0));
}

std::uint64_t Poly::constant_value() const {
    if (!is_constant()) throw Error("polynomial is not constant");
    return terms_.empty() ? 0 : terms_.begin()->second;
}

long Poly::degree(std::size_t var) const {
    long d = -1;
    for (const auto& [e, c] : terms_) {
        (void)c;
        d = std::max(d, static_cast<long>(e[var]));
    }
    return d;
}

Poly Poly::coeff_of(std::size_t var, unsigned k) const {
    Poly out(field_, nvars_);
    for (const auto& [e, c] : terms_)
        if (e[var] == k) {
            Exps e2 = e;
            e2[var] = 0;
            out.add_term(e2, c);
        }
    return out;
}

unsigned Poly::min_exponent(std::size_t var) const {
    unsigned m = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        (void)c;
        m = first ? e[var] : std::min(m, e[var]);
        first = false;
    }
    return m;
}

Poly Poly::operator-() const {
    Poly out(field_, nvars_);
    for (const auto& [e, c] : terms_) out.terms_[e] = field_.neg(c);
    return out;
}

Poly Poly::operator+(const Poly& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw UsageError("polynomial context mismatch");
    Poly out = *this;
    for (const auto& [e, c] : o.terms_) out.add_term(e, c);
    return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (!(field_ == o.field_) || nvars_ != o.nvars_)
        throw UsageError("polynomial context mismatch");
    Poly out(field_, nvars_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            Exps e(nvars_);
            for (std::size_t i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
            out.add_term(e, field_.mul(c1, c2));
        }
    return out;
}

Poly Poly::scaled(std::uint64_t c) const {
    Poly out(field_, nvars_);
    c %= field_.p;
    for (const auto& [e, c0] : terms_) out.add_term(e, field_.mul(c0, c));
    return out;
}

Poly Poly::pow(unsigned e) const {
    Poly r = Poly::constant(field_, nvars_, 1);
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

Poly Poly::derivative(std::size_t var) const {
    Poly out(field_, nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exps e2 = e;
        e2[var] -= 1;
        out.add_term(e2, field_.mul(c, e[var] % field_.p));
    }
    return out;
}

Poly Poly::divided_by(const Poly& o) const {
    if (o.is_zero()) throw Error("division by the zero polynomial");
    Poly r = *this;
    Poly q(field_, nvars_);
    const auto& [eg, cg] = *o.terms_.rbegin();
    std::uint64_t cg_inv = field_.inv(cg);
    while (!r.is_zero()) {
        const auto& [er, cr] = *r.terms_.rbegin();
        Exps e(nvars_);
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (er[i] < eg[i])
                throw Error("polynomial division is not exact");
            e[i] = er[i] - eg[i];
        }
        Poly t = Poly::monomial(
            field_, nvars_, e,
            static_cast<long long>(field_.mul(cr, cg_inv)));
        q = q + t;
        r = r - t * o;
    }
    return q;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && nvars_ == o.nvars_ && terms_ == o.terms_;
}

std::string Poly::str(const std::vector<std::string>& vars) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // highest lex term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) out << " + ";
        first = false;
        bool any = false;
        std::ostringstream mono;
        for (std::size_t i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << vars[i];
            if (e[i] > 1) mono << "^" << e[i];
        }
        if (!any) out << c;
        else if (c == 1) out << mono.str();
        else out << c << "*" << mono.str();
    }
    return out.str();
}

namespace {

// normalize lexicographic leading coefficient to 1
Poly monic(const Poly& f) {
    if (f.is_zero()) return f;
    return f.scaled(f.field().inv(f.terms().rbegin()->second));
}

std::optional<std::size_t> main_variable(const Poly& a, const Poly& b) {
    std::size_t n = a.nvars();
    for (std::size_t i = n; i-- > 0;)
        if (a.degree(i) > 0 || b.degree(i) > 0) return i;
    return std::nullopt;
}

}  // namespace

Poly prem(const Poly& f, const Poly& g, std::size_t var) {
    if (g.is_zero()) throw Error("pseudo-division by zero");
    long m = g.degree(var);
    if (m <= 0) return Poly(f.field(), f.nvars());  // divides exactly
    Poly lc_g = g.coeff_of(var, static_cast<unsigned>(m));
    Poly r = f;
    while (!r.is_zero() && r.degree(var) >= m) {
        long dr = r.degree(var);
        Poly lead = r.coeff_of(var, static_cast<unsigned>(dr));
        Poly shift = Poly::variable(f.field(), f.nvars(), var)
                         .pow(static_cast<unsigned>(dr - m));
        r = r * lc_g - lead * shift * g;
    }
    return r;
}

Poly content(const Poly& f, std::size_t var) {
    Poly c(f.field(), f.nvars());
    long d = f.degree(var);
    for (long k = 0; k <= d; ++k)
        c = poly_gcd(c, f.coeff_of(var, static_cast<unsigned>(k)));
    return c;
}

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    auto var = main_variable(a, b);
    if (!var) return Poly::constant(a.field(), a.nvars(), 1);
    std::size_t v = *var;
    Poly ca = content(a, v), cb = content(b, v);
    Poly d = poly_gcd(ca, cb);
    Poly f = a.divided_by(ca), g = b.divided_by(cb);
    if (f.degree(v) < g.degree(v)) std::swap(f, g);
    // primitive pseudo-remainder sequence
    while (!g.is_zero()) {
        Poly r = prem(f, g, v);
        f = g;
        if (!r.is_zero()) r = r.divided_by(content(r, v));
        g = r;
    }
    if (f.degree(v) > 0) f = f.divided_by(content(f, v));
    else f = Poly::constant(a.field(), a.nvars(), 1);
    return monic(d * f);
}

}  // namespace logext
