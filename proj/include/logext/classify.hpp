#ifndef LOGEXT_CLASSIFY_HPP
#define LOGEXT_CLASSIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "logext/dual_graph.hpp"

namespace logext {

enum class LcTag {
    SimpleElliptic,
    Cusp,
    Z2QuotientCuspOrElliptic,
    OtherQuotientSimpleElliptic,
    Cyclic,
    Dihedral,
    OtherQuotientSmooth,
};

const char* to_string(LcTag t);

struct LcClass {
    LcTag tag;
    // Sorted branch determinants for the fork cases.
    std::vector<long> det_triple;
    // Number of boundary curves on chain ends (cyclic case: 0, 1 or 2).
    int boundary_ends = 0;
};

struct ClassifyResult {
    std::optional<LcClass> cls;
    std::string rejection;  // first structural mismatch when !cls

    bool ok() const { return cls.has_value(); }
};

// |det| of the intersection matrix of a chain of curves with
// self-intersections -b_i, via the subchain recurrence
// det(b_1..b_n) = b_1 det(b_2..b_n) - det(b_3..b_n). All b_i >= 2.
long chain_determinant(const std::vector<long>& weights);

// Structural match of an lc resolution graph against the seven
// classification shapes. Throws NotLcError when the input is not lc.
ClassifyResult classify_lc_graph(const DualGraph& g);

struct LcRationale {
    std::string case_name;
    std::string route;     // which argument certifies log extension
    bool valid_at_p;
    std::string blocking;  // what fails at this p, when !valid_at_p
    std::vector<std::string> citations;
};

// Names the classification case and the argument route certifying log
// extension at characteristic p, or what blocks the argument.
LcRationale main_lc_rationale(const DualGraph& g, long p);

}  // namespace logext

#endif
