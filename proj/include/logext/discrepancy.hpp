#ifndef LOGEXT_DISCREPANCY_HPP
#define LOGEXT_DISCREPANCY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "logext/dual_graph.hpp"

namespace logext {

enum class SingClass { Terminal, Canonical, Klt, LcNotKlt, NotLc };

const char* to_string(SingClass c);

/// Sign partition of the exceptional curves by discrepancy:
/// a = -1 / -1 < a < 0 / a = 0 / a > 0.
struct DiscrepancyPartition {
    std::set<std::string> e_minus1;
    std::set<std::string> e_gt_minus1;
    std::set<std::string> e_zero;
    std::set<std::string> e_gt0;
};

struct DiscrepancyReport {
    std::map<std::string, Rational> values;  // vertex id -> a_i
    SingClass sing_class;
    mpz_class cartier_index_proxy;  // lcm of discrepancy denominators
    // The proxy is exact in the quotient regime; for points with integral
    // discrepancies and possibly non-Cartier K+D it may under-report.
    bool proxy_only;
    DiscrepancyPartition partition;

    bool is_lc() const { return sing_class != SingClass::NotLc; }
    bool is_plt() const { return partition.e_minus1.empty() && is_lc(); }
};

// Numerical pullback: solves A a = c with
//   c_j = -E_j^2 + 2 genus_j - 2 + (boundary . E_j),
// i.e. (K_Y + strict boundary) . F_j = sum a_i (F_i . F_j) for all j.
// Throws LatticeError when the exceptional lattice is not negative
// definite (the contraction does not exist).
DiscrepancyReport discrepancies(const DualGraph& g);

struct TameDeterminantResult {
    mpz_class abs_det;
    bool coprime_to_p;  // p does not divide det A
};

// |det (E_i . E_j)| and whether it is prime to p.
TameDeterminantResult tame_determinant_check(const DualGraph& g, long p);

struct DifferentCoefficient {
    std::string point;
    Rational coefficient;
    long cartier_index;
};

// Coefficient of a point in the different: 1 for an snc point of the
// boundary, 1 - 1/m for a plt point of Cartier index m.
DifferentCoefficient different(long m, bool snc_type,
                               const std::string& point_id = "x");

/// Ordered contraction history over a fixed base graph; step i represents
/// the partially contracted surface implicitly.
struct ContractionState {
    DualGraph base;
    std::vector<std::string> contracted;

    explicit ContractionState(DualGraph g) : base(std::move(g)) {}

    bool is_contracted(const std::string& id) const;
    std::vector<std::string> surviving() const;
    // Connected components of the contracted set (as subgraph of base).
    std::vector<std::vector<std::string>> contracted_components() const;
};

// Local discrepancies lambda_i - 1 of a fully contracted connected
// component, measured against the pair living on the partially contracted
// surface: solves, on the component only,
//   sum_i lambda_i (F_i . F_j) = (K_Y + D_full) . F_j,  j in component,
// with D_full = all exceptional curves + boundary, and returns
// a_i = lambda_i - 1.
std::map<std::string, Rational> local_pair_discrepancies(
    const ContractionState& state, const std::vector<std::string>& component);

// lcm of the denominators of the given discrepancies.
mpz_class index_proxy(const std::map<std::string, Rational>& values);

}  // namespace logext

#endif
