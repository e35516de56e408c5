#ifndef LOGEXT_FORMPULL_HPP
#define LOGEXT_FORMPULL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace logext {

/// Prime field F_p, p up to 32 bits (products stay in 64).
struct PrimeField {
    std::uint64_t p;

    explicit PrimeField(std::uint64_t p_);  // trial-division primality check

    std::uint64_t reduce(long long c) const;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
    std::uint64_t neg(std::uint64_t a) const;
    std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
    std::uint64_t inv(std::uint64_t a) const;  // throws on 0

    bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Sparse multivariate polynomial over F_p in a fixed number of
/// variables. Terms are kept in lexicographic exponent order.
class Poly {
  public:
    using Exps = std::vector<unsigned>;

    Poly(PrimeField f, std::size_t nvars);
    static Poly constant(PrimeField f, std::size_t nvars, long long c);
    static Poly variable(PrimeField f, std::size_t nvars, std::size_t idx);
    static Poly monomial(PrimeField f, std::size_t nvars, const Exps& e,
                         long long c);

    const PrimeField& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const std::map<Exps, std::uint64_t>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::uint64_t constant_value() const;  // requires is_constant

    long degree(std::size_t var) const;  // -1 for the zero polynomial
    // Coefficient of var^k, as a polynomial with that exponent cleared.
    Poly coeff_of(std::size_t var, unsigned k) const;
    // Smallest exponent of var over the terms; 0 for the zero polynomial.
    unsigned min_exponent(std::size_t var) const;

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(std::uint64_t c) const;
    Poly pow(unsigned e) const;
    Poly derivative(std::size_t var) const;

    // Exact division; throws Error when o does not divide *this.
    Poly divided_by(const Poly& o) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& vars) const;

  private:
    PrimeField field_;
    std::size_t nvars_;
    std::map<Exps, std::uint64_t> terms_;

    void add_term(const Exps& e, std::uint64_t c);
    friend Poly poly_gcd(const Poly& a, const Poly& b);
};

// Pseudo-remainder of f by g with respect to var (g must involve var or
// be a nonzero constant).
Poly prem(const Poly& f, const Poly& g, std::size_t var);
// gcd of the var-coefficients of f.
Poly content(const Poly& f, std::size_t var);
// Multivariate gcd via primitive pseudo-remainder sequences, normalized
// to lexicographic leading coefficient 1. gcd(0, 0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

/// gcd-reduced fraction of polynomials; the denominator is normalized to
/// leading coefficient 1, making the representation canonical.
class RatFunc {
  public:
    explicit RatFunc(Poly num);
    RatFunc(Poly num, Poly den);  // throws on zero denominator
    static RatFunc constant(PrimeField f, std::size_t nvars, long long c);
    static RatFunc variable(PrimeField f, std::size_t nvars, std::size_t idx);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const;

    RatFunc operator-() const;
    RatFunc operator+(const RatFunc& o) const;
    RatFunc operator-(const RatFunc& o) const;
    RatFunc operator*(const RatFunc& o) const;
    RatFunc operator/(const RatFunc& o) const;  // throws on 0
    RatFunc pow(long e) const;                  // negative exponents allowed

    RatFunc derivative(std::size_t var) const;

    // Substitutes images[i] for variable i; the images live in a common
    // target variable set. Throws a pole-on-substitution Error when a
    // denominator specializes to 0.
    RatFunc substitute(const std::vector<RatFunc>& images) const;

    // ord_{var=0}: min exponent of var in the numerator minus the same
    // for the denominator (negative = pole). Requires a nonzero function.
    long order_along(std::size_t var) const;

    bool operator==(const RatFunc& o) const;
    bool operator!=(const RatFunc& o) const { return !(*this == o); }

    std::string str(const std::vector<std::string>& vars) const;

  private:
    Poly num_, den_;
    void reduce();
};

/// Named coordinate chart: the ambient variable set of forms and maps.
struct Chart {
    PrimeField field;
    std::vector<std::string> vars;

    std::size_t index_of(const std::string& v) const;  // throws UsageError
    RatFunc var(const std::string& v) const;
    RatFunc constant(long long c) const;
};

/// Sum f_v dv over the chart variables; absent keys mean 0.
struct LogForm {
    std::map<std::string, RatFunc> coeffs;
};

LogForm differential(const Chart& chart, const RatFunc& f);

// Pullback of a form on `source` through the map whose coordinate images
// (functions on `target`) are given per source variable.
LogForm pullback(const Chart& source, const Chart& target,
                 const std::map<std::string, RatFunc>& images,
                 const LogForm& form);

enum class FormVerdict { Regular, Logarithmic, WorseThanLogarithmic };
const char* to_string(FormVerdict v);

struct PoleOrderReport {
    // var name -> ord_{var=0} of that d-coefficient (nonzero coeffs only).
    std::map<std::string, long> orders;
    FormVerdict verdict;
};

PoleOrderReport pole_order_along(const Chart& chart, const LogForm& form,
                                 const std::string& var);

struct E8Report {
    long p;
    bool strict_transform_ok;  // phi*(f) = u^4 v^14 (w^2 + uv(u+1))
    long gamma, alpha, beta;   // observed exponents of the du coefficient
    std::uint64_t unit;        // leading scalar c of c u^a (u+1)^b w^-g
    bool dw_coefficient_zero;
    FormVerdict verdict;  // along w; expected worse-than-logarithmic
    bool matches_expected;
    std::string sigma;  // which reflexive form was pulled back
};

// Pulls the case form through phi(u,v,w) = (u^2 v^5, u v^3, u^2 v^7 w)
// and the parametrization v = -w^2 / (u(u+1)); p in {2, 3, 5}.
E8Report verify_e8(long p);

struct VeroneseReport {
    long p;
    bool chart_compatible;  // y1^-1 dy1 pulls back to y0^-1 dy0
    long pole_order_chart0;  // along y0 (positive = pole)
    long pole_order_chart1;  // along y1
    FormVerdict verdict;     // expected logarithmic
    bool dy_transfers;       // dy1 pulls back to dy0 (expected false)
    bool involution_identity;
    bool matches_expected;
};

VeroneseReport verify_veronese(long p);

enum class ConeCase { Fano, FanoSqrt, CalabiYau };
const char* to_string(ConeCase c);
ConeCase cone_case_from_string(const std::string& s);  // throws UsageError

struct KollarRecord {
    ConeCase cone_case;
    long n, p;
    bool feasible;
    std::string violated_bound;  // named when infeasible
    long d;             // hypersurface degree
    long twist_degree;  // c with L = O(c)
    long k_pm1_deg;     // deg of K_X + (p-1) L
    long k_p_deg;       // deg of K_X + p L
    long cone_discrepancy;
    std::string cone_class;  // lc / canonical / terminal
};

// Degree ledger of the cyclic-cover constructions; verifies
// -(n+2) + d + c (p-1) and -(n+2) + d + c p as exact integer identities.
KollarRecord kollar_params(ConeCase cse, long n, long p);

}  // namespace logext

#endif
