#include "logext/discrepancy.hpp"

#include <algorithm>

#include "logext/errors.hpp"

namespace logext {

const char* to_string(SingClass c) {
    switch (c) {
        case SingClass::Terminal: return "terminal";
        case SingClass::Canonical: return "canonical";
        case SingClass::Klt: return "klt";
        case SingClass::LcNotKlt: return "lc-not-klt";
        case SingClass::NotLc: return "not-lc";
    }
    return "?";
}

namespace {

// (K_Y + B) . F_j with B the strict boundary transform:
// K.F = -F^2 + 2g - 2 by adjunction, plus boundary.F.
Rational adjunction_rhs(const DualGraph& g, const CurveVertex& v) {
    return Rational(-v.self_intersection + 2 * v.genus - 2 +
                    g.boundary_multiplicity(v.id));
}

}  // namespace

DiscrepancyReport discrepancies(const DualGraph& g) {
    auto a = intersection_matrix(g);
    auto defres = is_negative_definite(a);
    if (!defres.negative_definite)
        throw LatticeError(
            "exceptional lattice is not negative definite (violating minor k=" +
            std::to_string(defres.violating_minor.value_or(0)) + ")");

    std::size_t n = g.vertices().size();
    std::vector<Rational> rhs(n);
    for (std::size_t j = 0; j < n; ++j)
        rhs[j] = adjunction_rhs(g, g.vertices()[j]);
    auto sol = solve(a, rhs);

    DiscrepancyReport report;
    bool all_pos = true, all_nonneg = true, all_gt_m1 = true, all_ge_m1 = true;
    const Rational minus1(-1), zero(0);
    mpz_class proxy = 1;
    bool integral = true;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string& id = g.vertices()[i].id;
        const Rational& ai = sol[i];
        report.values[id] = ai;
        proxy = lcm_z(proxy, ai.denominator());
        if (!ai.is_integer()) integral = false;
        if (!(ai > zero)) all_pos = false;
        if (ai < zero) all_nonneg = false;
        if (!(ai > minus1)) all_gt_m1 = false;
        if (ai < minus1) all_ge_m1 = false;
        if (ai == minus1) report.partition.e_minus1.insert(id);
        else if (ai < zero) report.partition.e_gt_minus1.insert(id);
        else if (ai == zero) report.partition.e_zero.insert(id);
        else report.partition.e_gt0.insert(id);
    }
    if (all_pos) report.sing_class = SingClass::Terminal;
    else if (all_nonneg) report.sing_class = SingClass::Canonical;
    else if (all_gt_m1) report.sing_class = SingClass::Klt;
    else if (all_ge_m1) report.sing_class = SingClass::LcNotKlt;
    else report.sing_class = SingClass::NotLc;
    report.cartier_index_proxy = proxy;
    // For lc-not-klt points with integral discrepancies (simple elliptic,
    // cusp) the denominator lcm is blind to non-Cartier behaviour.
    report.proxy_only =
        integral && report.sing_class == SingClass::LcNotKlt;
    return report;
}

TameDeterminantResult tame_determinant_check(const DualGraph& g, long p) {
    if (p < 2) throw UsageError("characteristic must be a prime >= 2");
    Rational d = det(intersection_matrix(g));
    mpz_class num = d.numerator();  // integer matrix, so denominator is 1
    mpz_class ad = ::abs(num);
    mpz_class rem = ad % p;
    return {ad, rem != 0};
}

DifferentCoefficient different(long m, bool snc_type,
                               const std::string& point_id) {
    if (m < 1) throw UsageError("Cartier index must be >= 1");
    if (snc_type) return {point_id, Rational(1), m};
    return {point_id, Rational(1) - Rational(1, m), m};
}

bool ContractionState::is_contracted(const std::string& id) const {
    return std::find(contracted.begin(), contracted.end(), id) !=
           contracted.end();
}

std::vector<std::string> ContractionState::surviving() const {
    std::vector<std::string> out;
    for (const auto& v : base.vertices())
        if (!is_contracted(v.id)) out.push_back(v.id);
    return out;
}

std::vector<std::vector<std::string>> ContractionState::contracted_components()
    const {
    std::vector<std::vector<std::string>> comps;
    std::set<std::string> todo(contracted.begin(), contracted.end());
    while (!todo.empty()) {
        std::vector<std::string> comp;
        std::vector<std::string> stack{*todo.begin()};
        todo.erase(todo.begin());
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (const auto& w : base.neighbors(v)) {
                auto it = todo.find(w);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end(),
                  [this](const std::string& a, const std::string& b) {
                      return base.index_of(a) < base.index_of(b);
                  });
        comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [this](const auto& a, const auto& b) {
                  return base.index_of(a.front()) < base.index_of(b.front());
              });
    return comps;
}

std::map<std::string, Rational> local_pair_discrepancies(
    const ContractionState& state, const std::vector<std::string>& component) {
    const DualGraph& g = state.base;
    for (const auto& id : component)
        if (!state.is_contracted(id))
            throw Error("component curve " + id + " is not contracted");

    // connectivity of the component within the base graph
    if (component.empty()) return {};
    {
        std::set<std::string> todo(component.begin(), component.end());
        std::vector<std::string> stack{component.front()};
        todo.erase(component.front());
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            for (const auto& w : g.neighbors(v)) {
                auto it = todo.find(w);
                if (it != todo.end()) {
                    todo.erase(it);
                    stack.push_back(w);
                }
            }
        }
        if (!todo.empty())
            throw Error("component is not connected: " + *todo.begin());
    }

    std::size_t n = component.size();
    RationalMatrix a(n, n);
    std::vector<Rational> rhs(n);
    for (std::size_t j = 0; j < n; ++j) {
        const CurveVertex& vj = g.curve(component[j]);
        for (std::size_t i = 0; i < n; ++i) {
            a.at(j, i) = (i == j)
                             ? Rational(vj.self_intersection)
                             : Rational(g.edge_multiplicity(component[i],
                                                            component[j]));
        }
        // (K_Y + D_full).F_j with D_full = all exceptional + boundary:
        // = 2g - 2 + sum_{other exceptional} (F.F_j) + boundary.F_j
        long cross = 0;
        for (const auto& v : g.vertices())
            if (v.id != vj.id) cross += g.edge_multiplicity(v.id, vj.id);
        rhs[j] =
            Rational(2 * vj.genus - 2 + cross + g.boundary_multiplicity(vj.id));
    }

    std::vector<Rational> lambda;
    try {
        lambda = solve(a, rhs);
    } catch (const SingularMatrixError&) {
        throw LatticeError("contracted component lattice is singular");
    }
    std::map<std::string, Rational> out;
    for (std::size_t i = 0; i < n; ++i)
        out[component[i]] = lambda[i] - Rational(1);
    return out;
}

mpz_class index_proxy(const std::map<std::string, Rational>& values) {
    mpz_class proxy = 1;
    for (const auto& [id, a] : values) {
        (void)id;
        proxy = lcm_z(proxy, a.denominator());
    }
    return proxy;
}

}  // namespace logext
