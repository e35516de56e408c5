#ifndef LOGEXT_DUAL_GRAPH_HPP
#define LOGEXT_DUAL_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "logext/matrix.hpp"

namespace logext {

/// An exceptional curve of the resolution.
struct CurveVertex {
    std::string id;
    long self_intersection = -1;  // always <= -1
    long genus = 0;
};

/// Strict transform of a boundary component; records intersection
/// multiplicities against the exceptional curves.
struct BoundaryCurve {
    std::string id;
    std::map<std::string, long> meets;  // curve id -> multiplicity >= 0
};

/// Weighted dual graph of a resolution, with boundary decorations.
/// Vertex order is insertion order and is the row order of the
/// intersection matrix.
class DualGraph {
  public:
    DualGraph() = default;

    // Throws GraphError on invalid data (duplicate id, self >= 0, ...).
    void add_curve(const std::string& id, long self_intersection,
                   long genus = 0);
    void add_edge(const std::string& a, const std::string& b,
                  long multiplicity = 1);
    void add_boundary(const BoundaryCurve& b);

    const std::vector<CurveVertex>& vertices() const { return vertices_; }
    const std::vector<BoundaryCurve>& boundary() const { return boundary_; }

    bool has_curve(const std::string& id) const;
    const CurveVertex& curve(const std::string& id) const;
    std::size_t index_of(const std::string& id) const;

    // E_a . E_b for distinct exceptional curves (0 if no edge).
    long edge_multiplicity(const std::string& a, const std::string& b) const;
    // Sum over boundary components of (boundary . E).
    long boundary_multiplicity(const std::string& curve_id) const;

    std::vector<std::pair<std::pair<std::string, std::string>, long>> edges()
        const;

    std::vector<std::string> neighbors(const std::string& id) const;

    bool is_connected() const;

    // Serialization (see doc/graph format in the README).
    static DualGraph from_json(const std::string& text);
    std::string to_json() const;

  private:
    std::vector<CurveVertex> vertices_;
    std::map<std::string, std::size_t> index_;
    std::map<std::pair<std::size_t, std::size_t>, long> edges_;  // i < j
    std::vector<BoundaryCurve> boundary_;
};

// Symmetric integer intersection matrix (E_i . E_j) in insertion order.
RationalMatrix intersection_matrix(const DualGraph& g);

struct DefinitenessResult {
    bool negative_definite;
    // First k with (-1)^k * minor_k <= 0, when not negative definite.
    std::optional<std::size_t> violating_minor;
};

DefinitenessResult is_negative_definite(const RationalMatrix& a);
DefinitenessResult is_negative_definite(const DualGraph& g);

/// Blowup center: one curve with multiplicity r, or two curves with
/// multiplicities (r, s).
struct BlowupCenter {
    std::string first;
    long r = 1;
    std::optional<std::string> second;
    long s = 0;
};

// Appends a new (-1)-curve and updates the intersection data per the
// strict-transform rule: first loses r^2 of self-intersection, the pair
// loses r*s of mutual intersection, the new curve meets them with
// multiplicities r and s. |det| of the intersection matrix is invariant.
DualGraph blowup(const DualGraph& g, const BlowupCenter& center,
                 const std::string& new_id = "");

}  // namespace logext

#endif
