#include "logext/mmp.hpp"

#include <algorithm>
#include <sstream>

#include "logext/errors.hpp"

namespace logext {

namespace {

// Pairing of a formal class with a single exceptional curve on the base.
Rational pair_with_curve(const DualGraph& g, const FormalClass& c,
                         const std::string& fj) {
    const CurveVertex& vj = g.curve(fj);
    Rational out(0);
    if (!c.k.is_zero())
        out += c.k * Rational(-vj.self_intersection + 2 * vj.genus - 2);
    for (const auto& [id, coeff] : c.curves) {
        if (coeff.is_zero()) continue;
        long mult;
        if (g.has_curve(id)) {
            mult = (id == fj) ? vj.self_intersection
                              : g.edge_multiplicity(id, fj);
        } else {
            // boundary component
            mult = 0;
            for (const auto& b : g.boundary())
                if (b.id == id) {
                    auto it = b.meets.find(fj);
                    mult = it == b.meets.end() ? 0 : it->second;
                }
        }
        out += coeff * Rational(mult);
    }
    return out;
}

FormalClass drop_contracted(const ContractionState& state,
                            const FormalClass& c) {
    FormalClass out;
    out.k = c.k;
    for (const auto& [id, coeff] : c.curves)
        if (!state.is_contracted(id)) out.curves[id] = coeff;
    return out;
}

}  // namespace

FormalClass FormalClass::log_canonical(const DualGraph& g) {
    FormalClass c;
    c.k = Rational(1);
    for (const auto& v : g.vertices()) c.curves[v.id] = Rational(1);
    for (const auto& b : g.boundary()) c.curves[b.id] = Rational(1);
    return c;
}

FormalClass FormalClass::canonical_plus_boundary(const DualGraph& g) {
    FormalClass c;
    c.k = Rational(1);
    for (const auto& b : g.boundary()) c.curves[b.id] = Rational(1);
    return c;
}

Rational pushforward_pairing(const ContractionState& state,
                             const FormalClass& c0, const FormalClass& d0) {
    const DualGraph& g = state.base;
    FormalClass c = drop_contracted(state, c0);
    FormalClass d = drop_contracted(state, d0);

    const auto& contracted = state.contracted;
    FormalClass corrected = c;
    if (!contracted.empty()) {
        std::size_t n = contracted.size();
        RationalMatrix a(n, n);
        std::vector<Rational> rhs(n);
        for (std::size_t j = 0; j < n; ++j) {
            const CurveVertex& vj = g.curve(contracted[j]);
            for (std::size_t i = 0; i < n; ++i)
                a.at(j, i) =
                    (i == j) ? Rational(vj.self_intersection)
                             : Rational(g.edge_multiplicity(contracted[i],
                                                            contracted[j]));
            rhs[j] = -pair_with_curve(g, c, contracted[j]);
        }
        auto def = is_negative_definite(a);
        if (!def.negative_definite)
            throw LatticeError(
                "contracted sublattice is not negative definite");
        auto gamma = solve(a, rhs);
        for (std::size_t i = 0; i < n; ++i)
            corrected.curves[contracted[i]] = gamma[i];
    }

    // pair corrected class with d; d is supported on surviving divisors
    Rational out(0);
    if (!d.k.is_zero())
        throw Error("pushforward_pairing: cannot pair against K");
    for (const auto& [id, coeff] : d.curves) {
        if (coeff.is_zero()) continue;
        if (!g.has_curve(id))
            throw GraphError(
                "pushforward_pairing: boundary-boundary intersections are "
                "not recorded (" + id + ")");
        out += coeff * pair_with_curve(g, corrected, id);
    }
    return out;
}

Rational pushforward_intersection(const ContractionState& state,
                                  const std::string& c, const std::string& d) {
    auto check = [&](const std::string& id) {
        bool is_curve = state.base.has_curve(id);
        bool is_bdry = false;
        for (const auto& b : state.base.boundary())
            if (b.id == id) is_bdry = true;
        if (!is_curve && !is_bdry)
            throw GraphError("unknown class: " + id);
        if (is_curve && state.is_contracted(id))
            throw GraphError("class " + id + " is already contracted");
    };
    check(c);
    check(d);
    if (!state.base.has_curve(d)) {
        if (!state.base.has_curve(c))
            throw GraphError(
                "pushforward_intersection: boundary-boundary intersections "
                "are not recorded");
        return pushforward_pairing(state, FormalClass::curve(d),
                                   FormalClass::curve(c));
    }
    return pushforward_pairing(state, FormalClass::curve(c),
                               FormalClass::curve(d));
}

Rational log_degree(const ContractionState& state, const std::string& p) {
    return pushforward_pairing(state, FormalClass::log_canonical(state.base),
                               FormalClass::curve(p));
}

PairAssessment assess_pair(const ContractionState& state, long p) {
    PairAssessment out;
    out.dlt_ok = true;
    out.tame = true;
    for (const auto& comp : state.contracted_components()) {
        SingularPointReport pt;
        pt.component = comp;
        pt.local_discrepancies = local_pair_discrepancies(state, comp);
        pt.proxy = index_proxy(pt.local_discrepancies);

        pt.meets_divisor = false;
        std::set<std::string> in_comp(comp.begin(), comp.end());
        for (const auto& id : comp) {
            if (state.base.boundary_multiplicity(id) > 0)
                pt.meets_divisor = true;
            for (const auto& nb : state.base.neighbors(id))
                if (!in_comp.count(nb) && !state.is_contracted(nb))
                    pt.meets_divisor = true;
        }

        const Rational minus1(-1);
        for (const auto& [id, a] : pt.local_discrepancies) {
            (void)id;
            if (a < minus1) out.dlt_ok = false;
            // a point on the pair must be snc or plt there: no discrepancy
            // -1 curve may land on the divisor
            if (pt.meets_divisor && a == minus1) out.dlt_ok = false;
        }
        if (pt.proxy % p == 0) out.tame = false;
        out.points.push_back(std::move(pt));
    }
    out.tame = out.tame && out.dlt_ok;
    return out;
}

std::pair<ContractionState, StepReport> contract(const ContractionState& state,
                                                 const std::string& vertex,
                                                 long p) {
    if (state.is_contracted(vertex))
        throw Error("contract: " + vertex + " is already contracted");
    state.base.index_of(vertex);

    auto global = discrepancies(state.base);
    if (global.partition.e_minus1.count(vertex))
        throw Error("contract: " + vertex +
                    " has discrepancy -1 and must survive");

    Rational self =
        pushforward_pairing(state, FormalClass::curve(vertex),
                            FormalClass::curve(vertex));
    if (!(self < Rational(0)))
        throw Error("contract: " + vertex +
                    " has nonnegative self-intersection " + self.str());
    Rational deg = log_degree(state, vertex);
    if (deg > Rational(0))
        throw Error("contract: " + vertex + " has positive log degree " +
                    deg.str());

    ContractionState next = state;
    next.contracted.push_back(vertex);

    StepReport report;
    report.contracted_vertex = vertex;
    auto assessment = assess_pair(next, p);
    report.tame = assessment.tame;
    report.singular_points = assessment.points;
    for (const auto& pt : assessment.points)
        if (std::find(pt.component.begin(), pt.component.end(), vertex) !=
            pt.component.end())
            report.lambda = pt.local_discrepancies.at(vertex) + Rational(1);
    return {std::move(next), std::move(report)};
}

LiftElemResult check_lift_elem(const ContractionState& state) {
    for (const auto& id : state.surviving()) {
        Rational deg = log_degree(state, id);
        if (deg > Rational(0)) return {false, {{id, deg}}};
    }
    return {true, std::nullopt};
}

namespace {

struct SearchContext {
    const DualGraph& g;
    long p;
    std::vector<std::string> candidates;  // insertion order
    bool plt_input;
    std::map<unsigned, bool> pair_ok;  // contracted bitmask -> valid pair
    std::set<unsigned> dead;           // masks with no completion

    bool state_ok(const ContractionState& st, unsigned mask) {
        auto it = pair_ok.find(mask);
        if (it != pair_ok.end()) return it->second;
        bool final_state = mask + 1 == (1u << candidates.size());
        auto a = assess_pair(st, p);
        bool ok = a.dlt_ok && (a.tame || (final_state && plt_input));
        pair_ok[mask] = ok;
        return ok;
    }

    bool admissible(const ContractionState& st, const std::string& v) {
        try {
            Rational self = pushforward_pairing(st, FormalClass::curve(v),
                                                FormalClass::curve(v));
            if (!(self < Rational(0))) return false;
            return !(log_degree(st, v) > Rational(0));
        } catch (const LatticeError&) {
            return false;
        }
    }

    bool dfs(ContractionState& st, unsigned mask,
             std::vector<std::string>& order) {
        if (order.size() == candidates.size()) return true;
        if (dead.count(mask)) return false;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (mask & (1u << i)) continue;
            const std::string& v = candidates[i];
            if (!admissible(st, v)) continue;
            unsigned next_mask = mask | (1u << i);
            st.contracted.push_back(v);
            if (state_ok(st, next_mask)) {
                order.push_back(v);
                if (dfs(st, next_mask, order)) return true;
                order.pop_back();
            }
            st.contracted.pop_back();
        }
        dead.insert(mask);
        return false;
    }
};

}  // namespace

std::optional<TameOrder> find_tame_order(const DualGraph& g, long p,
                                         SearchMode mode) {
    auto report = discrepancies(g);
    if (!report.is_lc())
        throw NotLcError("input pair is not log canonical");

    std::vector<std::string> candidates;
    for (const auto& v : g.vertices())
        if (!report.partition.e_minus1.count(v.id)) candidates.push_back(v.id);

    if (candidates.size() > 14)
        throw SearchCapError(
            "contraction search capped at 14 curves, got " +
            std::to_string(candidates.size()));

    SearchContext ctx{g, p, candidates, report.is_plt(), {}, {}};
    ContractionState st(g);
    std::vector<std::string> order;

    if (mode == SearchMode::Exhaustive) {
        if (!ctx.dfs(st, 0, order)) return std::nullopt;
    } else {
        // greedy: first admissible, tame step in insertion order; no
        // backtracking
        while (order.size() < candidates.size()) {
            bool advanced = false;
            for (std::size_t i = 0; i < candidates.size(); ++i) {
                const std::string& v = candidates[i];
                if (st.is_contracted(v)) continue;
                if (!ctx.admissible(st, v)) continue;
                unsigned mask = 0;
                for (std::size_t j = 0; j < candidates.size(); ++j)
                    if (st.is_contracted(candidates[j]) || i == j)
                        mask |= (1u << j);
                st.contracted.push_back(v);
                if (ctx.state_ok(st, mask)) {
                    order.push_back(v);
                    advanced = true;
                    break;
                }
                st.contracted.pop_back();
            }
            if (!advanced) return std::nullopt;
        }
    }

    // replay through contract() to collect step reports
    TameOrder result;
    ContractionState replay(g);
    for (const auto& v : order) {
        auto [next, step] = contract(replay, v, p);
        replay = std::move(next);
        result.steps.push_back(std::move(step));
    }
    result.order = order;
    return result;
}

const char* to_string(VerdictStatus s) {
    switch (s) {
        case VerdictStatus::Holds: return "holds";
        case VerdictStatus::FailsByExample: return "fails-by-example";
        case VerdictStatus::Unknown: return "unknown";
    }
    return "?";
}

bool is_e8_dynkin_graph(const DualGraph& g) {
    if (g.vertices().size() != 8 || !g.boundary().empty()) return false;
    for (const auto& v : g.vertices())
        if (v.self_intersection != -2 || v.genus != 0) return false;
    for (const auto& [pair, m] : g.edges()) {
        (void)pair;
        if (m != 1) return false;
    }
    if (g.edges().size() != 7 || !g.is_connected()) return false;  // tree
    // exactly one fork, whose removal leaves chains of sizes {1, 2, 4}
    std::string fork;
    for (const auto& v : g.vertices()) {
        std::size_t deg = g.neighbors(v.id).size();
        if (deg > 3) return false;
        if (deg == 3) {
            if (!fork.empty()) return false;
            fork = v.id;
        }
    }
    if (fork.empty()) return false;
    std::multiset<std::size_t> branch_sizes;
    std::set<std::string> seen{fork};
    for (const auto& start : g.neighbors(fork)) {
        std::size_t len = 0;
        std::string cur = start, prev = fork;
        while (true) {
            ++len;
            seen.insert(cur);
            auto nbs = g.neighbors(cur);
            if (nbs.size() > 2) return false;
            std::string next;
            for (const auto& nb : nbs)
                if (nb != prev) next = nb;
            if (next.empty()) break;
            prev = cur;
            cur = next;
        }
        branch_sizes.insert(len);
    }
    return branch_sizes == std::multiset<std::size_t>{1, 2, 4};
}

bool is_single_minus_p_curve(const DualGraph& g, long p) {
    return g.vertices().size() == 1 && g.boundary().empty() &&
           g.vertices()[0].genus == 0 &&
           g.vertices()[0].self_intersection == -p;
}

ExtensionVerdict extension_verdict(const DualGraph& g, long p) {
    ExtensionVerdict verdict{VerdictStatus::Unknown, VerdictStatus::Unknown, {}};

    std::optional<DiscrepancyReport> report;
    try {
        report = discrepancies(g);
    } catch (const LatticeError&) {
        verdict.justification.push_back(
            "exceptional lattice not negative definite: no verdict");
        return verdict;
    }

    if (report->is_lc() && p >= 7) {
        verdict.log_ext_1forms = VerdictStatus::Holds;
        verdict.justification.push_back("Thm 1.2: lc pair at characteristic >= 7");
    }
    if (report->is_lc()) {
        try {
            if (find_tame_order(g, p, SearchMode::Exhaustive)) {
                verdict.log_ext_1forms = VerdictStatus::Holds;
                verdict.justification.push_back(
                    "Prop tame lext: tame resolution order exists");
            }
        } catch (const SearchCapError&) {
            verdict.justification.push_back(
                "tame-order search skipped: size cap");
        }
    }
    if (check_lift_elem(ContractionState(g)).ok) {
        verdict.log_ext_1forms = VerdictStatus::Holds;
        verdict.justification.push_back(
            "Thm lift elem: -(K+D) nef on the uncontracted resolution");
    }
    if (verdict.log_ext_1forms != VerdictStatus::Holds) {
        if (is_e8_dynkin_graph(g) && (p == 2 || p == 3 || p == 5)) {
            verdict.log_ext_1forms = VerdictStatus::FailsByExample;
            verdict.justification.push_back(
                "Example E8 sharp: E8 rational double point at p <= 5");
        }
    }

    auto detres = tame_determinant_check(g, p);
    if (verdict.log_ext_1forms == VerdictStatus::Holds && detres.coprime_to_p) {
        verdict.reg_ext_1forms = VerdictStatus::Holds;
        verdict.justification.push_back(
            "Thm 1.3: log extension holds and p does not divide det = " +
            detres.abs_det.get_str());
    } else if (is_single_minus_p_curve(g, p)) {
        verdict.reg_ext_1forms = VerdictStatus::FailsByExample;
        verdict.justification.push_back(
            "Example lext no et: (-p)-curve at characteristic p");
    }
    return verdict;
}

}  // namespace logext
