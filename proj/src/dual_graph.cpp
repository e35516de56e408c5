#include "logext/dual_graph.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "logext/errors.hpp"

namespace logext {

void DualGraph::add_curve(const std::string& id, long self_intersection,
                          long genus) {
    if (id.empty()) throw GraphError("curve id must be nonempty");
    if (index_.count(id)) throw GraphError("duplicate curve id: " + id);
    for (const auto& b : boundary_)
        if (b.id == id) throw GraphError("id collides with boundary: " + id);
    if (self_intersection > -1)
        throw GraphError("curve " + id + ": self-intersection must be <= -1");
    if (genus < 0) throw GraphError("curve " + id + ": genus must be >= 0");
    index_[id] = vertices_.size();
    vertices_.push_back({id, self_intersection, genus});
}

void DualGraph::add_edge(const std::string& a, const std::string& b,
                         long multiplicity) {
    std::size_t i = index_of(a), j = index_of(b);
    if (i == j) throw GraphError("self-edge on " + a);
    if (multiplicity < 1) throw GraphError("edge multiplicity must be >= 1");
    auto key = std::minmax(i, j);
    if (edges_.count({key.first, key.second}))
        throw GraphError("duplicate edge " + a + "-" + b);
    edges_[{key.first, key.second}] = multiplicity;
}

void DualGraph::add_boundary(const BoundaryCurve& b) {
    if (b.id.empty()) throw GraphError("boundary id must be nonempty");
    if (index_.count(b.id))
        throw GraphError("id collides with curve: " + b.id);
    for (const auto& other : boundary_)
        if (other.id == b.id) throw GraphError("duplicate boundary id: " + b.id);
    bool positive = false;
    for (const auto& [cid, m] : b.meets) {
        index_of(cid);  // must exist
        if (m < 0) throw GraphError("boundary multiplicity must be >= 0");
        if (m > 0) positive = true;
    }
    if (!positive)
        throw GraphError("boundary " + b.id + " meets no exceptional curve");
    boundary_.push_back(b);
}

bool DualGraph::has_curve(const std::string& id) const {
    return index_.count(id) != 0;
}

const CurveVertex& DualGraph::curve(const std::string& id) const {
    return vertices_[index_of(id)];
}

std::size_t DualGraph::index_of(const std::string& id) const {
    auto it = index_.find(id);
    if (it == index_.end()) throw GraphError("unknown curve id: " + id);
    return it->second;
}

long DualGraph::edge_multiplicity(const std::string& a,
                                  const std::string& b) const {
    std::size_t i = index_of(a), j = index_of(b);
    if (i == j) throw GraphError("edge_multiplicity: identical curves");
    auto key = std::minmax(i, j);
    auto it = edges_.find({key.first, key.second});
    return it == edges_.end() ? 0 : it->second;
}

long DualGraph::boundary_multiplicity(const std::string& curve_id) const {
    index_of(curve_id);
    long total = 0;
    for (const auto& b : boundary_) {
        auto it = b.meets.find(curve_id);
        if (it != b.meets.end()) total += it->second;
    }
    return total;
}

std::vector<std::pair<std::pair<std::string, std::string>, long>>
DualGraph::edges() const {
    std::vector<std::pair<std::pair<std::string, std::string>, long>> out;
    for (const auto& [key, m] : edges_)
        out.push_back({{vertices_[key.first].id, vertices_[key.second].id}, m});
    return out;
}

std::vector<std::string> DualGraph::neighbors(const std::string& id) const {
    std::size_t i = index_of(id);
    std::vector<std::string> out;
    for (const auto& [key, m] : edges_) {
        (void)m;
        if (key.first == i) out.push_back(vertices_[key.second].id);
        if (key.second == i) out.push_back(vertices_[key.first].id);
    }
    std::sort(out.begin(), out.end(),
              [this](const std::string& a, const std::string& b) {
                  return index_of(a) < index_of(b);
              });
    return out;
}

bool DualGraph::is_connected() const {
    if (vertices_.empty()) return true;
    std::set<std::size_t> seen{0};
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (const auto& [key, m] : edges_) {
            (void)m;
            std::size_t other;
            if (key.first == v) other = key.second;
            else if (key.second == v) other = key.first;
            else continue;
            if (seen.insert(other).second) stack.push_back(other);
        }
    }
    return seen.size() == vertices_.size();
}

namespace {

using json = nlohmann::ordered_json;

void check_keys(const json& obj, std::initializer_list<const char*> allowed,
                const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* k : allowed)
            if (it.key() == k) ok = true;
        if (!ok) throw GraphError("unknown key \"" + it.key() + "\" in " + where);
    }
}

}  // namespace

DualGraph DualGraph::from_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw GraphError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw GraphError("graph file must be a JSON object");
    check_keys(doc, {"curves", "edges", "boundary"}, "graph");
    if (!doc.contains("curves") || !doc["curves"].is_array())
        throw GraphError("missing \"curves\" array");

    DualGraph g;
    try {
        for (const auto& c : doc["curves"]) {
            if (!c.is_object()) throw GraphError("curve entry must be object");
            check_keys(c, {"id", "self", "genus"}, "curve");
            if (!c.contains("id") || !c.contains("self"))
                throw GraphError("curve entry needs \"id\" and \"self\"");
            g.add_curve(c["id"].get<std::string>(), c["self"].get<long>(),
                        c.value("genus", 0L));
        }
        if (doc.contains("edges")) {
            for (const auto& e : doc["edges"]) {
                if (!e.is_array() || (e.size() != 2 && e.size() != 3))
                    throw GraphError(
                        "edge entry must be [a, b] or [a, b, mult]");
                long mult = e.size() == 3 ? e[2].get<long>() : 1;
                g.add_edge(e[0].get<std::string>(), e[1].get<std::string>(),
                           mult);
            }
        }
        if (doc.contains("boundary")) {
            for (const auto& b : doc["boundary"]) {
                if (!b.is_object())
                    throw GraphError("boundary entry must be object");
                check_keys(b, {"id", "meets"}, "boundary");
                if (!b.contains("id") || !b.contains("meets"))
                    throw GraphError("boundary entry needs \"id\" and \"meets\"");
                BoundaryCurve bc;
                bc.id = b["id"].get<std::string>();
                for (auto it = b["meets"].begin(); it != b["meets"].end(); ++it)
                    bc.meets[it.key()] = it.value().get<long>();
                g.add_boundary(bc);
            }
        }
    } catch (const json::exception& e) {
        throw GraphError(std::string("schema violation: ") + e.what());
    }
    return g;
}

std::string DualGraph::to_json() const {
    json doc;
    doc["curves"] = json::array();
    for (const auto& v : vertices_)
        doc["curves"].push_back(
            {{"id", v.id}, {"self", v.self_intersection}, {"genus", v.genus}});
    doc["edges"] = json::array();
    for (const auto& [key, m] : edges_)
        doc["edges"].push_back(
            {vertices_[key.first].id, vertices_[key.second].id, m});
    doc["boundary"] = json::array();
    for (const auto& b : boundary_) {
        json meets = json::object();
        // meets in vertex insertion order, for stable output
        std::vector<std::pair<std::size_t, long>> ordered;
        for (const auto& [cid, m] : b.meets)
            ordered.push_back({index_.at(cid), m});
        std::sort(ordered.begin(), ordered.end());
        for (const auto& [idx, m] : ordered) meets[vertices_[idx].id] = m;
        doc["boundary"].push_back({{"id", b.id}, {"meets", meets}});
    }
    return doc.dump(2) + "\n";
}

RationalMatrix intersection_matrix(const DualGraph& g) {
    std::size_t n = g.vertices().size();
    RationalMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        a.at(i, i) = Rational(g.vertices()[i].self_intersection);
    for (const auto& [pair, m] : g.edges()) {
        std::size_t i = g.index_of(pair.first), j = g.index_of(pair.second);
        a.at(i, j) = Rational(m);
        a.at(j, i) = Rational(m);
    }
    return a;
}

DefinitenessResult is_negative_definite(const RationalMatrix& a) {
    auto minors = leading_principal_minors(a);
    for (std::size_t k = 1; k <= minors.size(); ++k) {
        // (-1)^k * minor_k must be positive
        Rational signed_minor = (k % 2 == 0) ? minors[k - 1] : -minors[k - 1];
        if (!(signed_minor > Rational(0)))
            return {false, k};
    }
    return {true, std::nullopt};
}

DefinitenessResult is_negative_definite(const DualGraph& g) {
    return is_negative_definite(intersection_matrix(g));
}

DualGraph blowup(const DualGraph& g, const BlowupCenter& center,
                 const std::string& new_id) {
    if (center.r < 1) throw GraphError("blowup: multiplicity r must be >= 1");
    if (center.second && center.s < 1)
        throw GraphError("blowup: multiplicity s must be >= 1");
    const CurveVertex& a = g.curve(center.first);
    const CurveVertex* b = nullptr;
    long s = 0;
    if (center.second) {
        if (*center.second == center.first)
            throw GraphError("blowup: center curves must be distinct");
        b = &g.curve(*center.second);
        s = center.s;
    }
    long r = center.r;

    long new_self_a = a.self_intersection - r * r;
    long new_mult_ab = 0;
    long new_self_b = 0;
    if (b) {
        new_mult_ab = g.edge_multiplicity(a.id, b->id) - r * s;
        if (new_mult_ab < 0)
            throw GraphError(
                "blowup: center multiplicities exceed the intersection of " +
                a.id + " and " + b->id);
        new_self_b = b->self_intersection - s * s;
    }

    std::string cid = new_id;
    if (cid.empty()) {
        int n = 1;
        do {
            cid = "C" + std::to_string(n++);
        } while (g.has_curve(cid));
    }

    DualGraph out;
    for (const auto& v : g.vertices()) {
        long self = v.self_intersection;
        if (v.id == a.id) self = new_self_a;
        if (b && v.id == b->id) self = new_self_b;
        out.add_curve(v.id, self, v.genus);
    }
    out.add_curve(cid, -1, 0);
    for (const auto& [pair, m] : g.edges()) {
        long mult = m;
        if (b && ((pair.first == a.id && pair.second == b->id) ||
                  (pair.first == b->id && pair.second == a.id)))
            mult = new_mult_ab;
        if (mult > 0) out.add_edge(pair.first, pair.second, mult);
    }
    out.add_edge(a.id, cid, r);
    if (b) out.add_edge(b->id, cid, s);
    for (const auto& bc : g.boundary()) out.add_boundary(bc);
    return out;
}

}  // namespace logext
