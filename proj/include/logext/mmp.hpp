#ifndef LOGEXT_MMP_HPP
#define LOGEXT_MMP_HPP

#include <optional>

#include "logext/discrepancy.hpp"

namespace logext {

/// Formal Q-divisor class on the base resolution: a multiple of K plus a
/// combination of exceptional and boundary curves. Carrier for numerical
/// pushforward/pullback computations.
struct FormalClass {
    Rational k;                              // coefficient of K_Y
    std::map<std::string, Rational> curves;  // exceptional or boundary ids

    static FormalClass curve(const std::string& id) {
        FormalClass c;
        c.curves[id] = Rational(1);
        return c;
    }
    // K + all exceptional curves + all boundary components.
    static FormalClass log_canonical(const DualGraph& g);
    // K + boundary only.
    static FormalClass canonical_plus_boundary(const DualGraph& g);
};

// Intersection on the partially contracted surface: replaces each class by
// its Mumford pullback (orthogonal to the contracted curves) and pairs on
// the base. Contracted coefficients of the inputs are dropped first, so
// this computes (pushforward(c) . pushforward(d)).
// Throws LatticeError if the contracted sublattice is degenerate.
Rational pushforward_pairing(const ContractionState& state,
                             const FormalClass& c, const FormalClass& d);

// Spec surface: c, d named surviving exceptional or boundary curves.
Rational pushforward_intersection(const ContractionState& state,
                                  const std::string& c, const std::string& d);

// (K + D_tilde) . P on the partially contracted surface, for surviving P.
Rational log_degree(const ContractionState& state, const std::string& p);

struct SingularPointReport {
    std::vector<std::string> component;
    std::map<std::string, Rational> local_discrepancies;
    mpz_class proxy;
    bool meets_divisor;  // residual point lies on the pushed-forward pair
};

struct PairAssessment {
    bool dlt_ok;  // every singular point passes the dichotomy constraints
    bool tame;    // dlt_ok and p divides no index proxy
    std::vector<SingularPointReport> points;
};

// Tameness data of the pair represented by the state, at characteristic p.
PairAssessment assess_pair(const ContractionState& state, long p);

struct StepReport {
    std::string contracted_vertex;
    Rational lambda;  // a(P, next pair) + 1
    bool tame;        // the resulting pair is tamely dlt
    std::vector<SingularPointReport> singular_points;
};

// One divisorial contraction. Preconditions: the vertex survives, is not a
// discrepancy -1 curve, has negative self-intersection on the current
// surface, and nonpositive log degree. Throws Error with the offending
// exact number otherwise.
std::pair<ContractionState, StepReport> contract(const ContractionState& state,
                                                 const std::string& vertex,
                                                 long p);

struct LiftElemResult {
    bool ok;
    // First surviving curve with positive log degree, and that degree.
    std::optional<std::pair<std::string, Rational>> witness;
};

// Nefness hypothesis of the lifting theorem: (K + D_tilde) . P <= 0 for
// every surviving exceptional curve P.
LiftElemResult check_lift_elem(const ContractionState& state);

enum class SearchMode { Greedy, Exhaustive };

struct TameOrder {
    std::vector<std::string> order;
    std::vector<StepReport> steps;
};

// Searches for a contraction order of the discrepancy > -1 curves such
// that every prefix is MMP-admissible and every intermediate pair is
// tamely dlt (the final pair too, unless the input is plt). Exhaustive
// mode backtracks and returns the lexicographically first success in
// vertex insertion order; greedy takes the first admissible step and
// never backtracks. Throws NotLcError on non-lc input, SearchCapError
// beyond 14 contractible curves.
std::optional<TameOrder> find_tame_order(const DualGraph& g, long p,
                                         SearchMode mode);

enum class VerdictStatus { Holds, FailsByExample, Unknown };

const char* to_string(VerdictStatus s);

struct ExtensionVerdict {
    VerdictStatus log_ext_1forms;
    VerdictStatus reg_ext_1forms;
    std::vector<std::string> justification;
};

// Decision procedure for the extension properties of the singularity with
// this resolution graph, at characteristic p.
ExtensionVerdict extension_verdict(const DualGraph& g, long p);

// Shape tests backing the counterexample registry.
bool is_e8_dynkin_graph(const DualGraph& g);
bool is_single_minus_p_curve(const DualGraph& g, long p);

}  // namespace logext

#endif
