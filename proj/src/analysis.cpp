#include "logext/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "json.hpp"

#include "logext/errors.hpp"

namespace logext {

using ojson = nlohmann::ordered_json;

std::string graph_digest(const DualGraph& g) {
    std::string s = g.to_json();
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex;
    for (int i = 15; i >= 0; --i) out << ((h >> (4 * i)) & 0xf);
    return out.str();
}

AnalysisReport run_analysis(const DualGraph& g, long p, SearchMode mode) {
    AnalysisReport r;
    r.input_digest = graph_digest(g);
    r.p = p;
    r.mode = mode;
    r.disc = discrepancies(g);  // LatticeError propagates

    if (r.disc.is_lc()) {
        r.cls = classify_lc_graph(g);
        r.rationale = main_lc_rationale(g, p);
        try {
            r.trace = find_tame_order(g, p, mode);
        } catch (const SearchCapError&) {
            r.search_capped = true;
        }
    }
    r.verdicts = extension_verdict(g, p);

    if (r.rationale)
        r.citations = r.rationale->citations;
    for (const auto& j : r.verdicts.justification)
        if (std::find(r.citations.begin(), r.citations.end(), j) ==
            r.citations.end())
            r.citations.push_back(j);
    return r;
}

namespace {

ojson class_json(const AnalysisReport& r) {
    ojson c;
    c["singularity"] = to_string(r.disc.sing_class);
    c["cartier_index_proxy"] = r.disc.cartier_index_proxy.get_str();
    c["proxy_only"] = r.disc.proxy_only;
    if (r.cls) {
        if (r.cls->ok()) {
            c["structure"] = to_string(r.cls->cls->tag);
            if (!r.cls->cls->det_triple.empty())
                c["det_triple"] = r.cls->cls->det_triple;
            c["boundary_ends"] = r.cls->cls->boundary_ends;
        } else {
            c["structure"] = "unclassified";
            c["rejection"] = r.cls->rejection;
        }
    }
    if (r.rationale) {
        c["route"] = r.rationale->route;
        c["route_valid_at_p"] = r.rationale->valid_at_p;
        if (!r.rationale->valid_at_p) c["blocking"] = r.rationale->blocking;
    }
    return c;
}

ojson trace_json(const AnalysisReport& r) {
    ojson t = ojson::array();
    if (!r.trace) return t;
    for (const auto& s : r.trace->steps) {
        ojson step;
        step["contract"] = s.contracted_vertex;
        step["lambda"] = s.lambda.str();
        step["tame"] = s.tame;
        ojson pts = ojson::array();
        for (const auto& pt : s.singular_points) {
            ojson q;
            q["component"] = pt.component;
            ojson locals;
            for (const auto& [id, a] : pt.local_discrepancies)
                locals[id] = a.str();
            q["local_discrepancies"] = locals;
            q["index_proxy"] = pt.proxy.get_str();
            q["meets_divisor"] = pt.meets_divisor;
            pts.push_back(q);
        }
        step["singular_points"] = pts;
        t.push_back(step);
    }
    return t;
}

}  // namespace

std::string report_json(const AnalysisReport& r) {
    ojson j;
    j["digest"] = r.input_digest;
    j["char"] = r.p;
    j["mode"] = r.mode == SearchMode::Greedy ? "greedy" : "exhaustive";
    ojson d;
    for (const auto& [id, a] : r.disc.values) d[id] = a.str();
    j["discrepancies"] = d;
    j["class"] = class_json(r);
    j["trace"] = trace_json(r);
    ojson v;
    v["log_ext_1forms"] = to_string(r.verdicts.log_ext_1forms);
    v["reg_ext_1forms"] = to_string(r.verdicts.reg_ext_1forms);
    if (r.trace) v["tame_order_found"] = true;
    else if (r.search_capped) v["tame_order_found"] = "search capped";
    else v["tame_order_found"] = false;
    j["verdicts"] = v;
    j["citations"] = r.citations;
    return j.dump(2) + "\n";
}

std::string report_text(const AnalysisReport& r) {
    std::ostringstream out;
    out << "graph " << r.input_digest << ", char " << r.p << "\n";
    out << "discrepancies:\n";
    for (const auto& [id, a] : r.disc.values)
        out << "  " << id << " = " << a.str() << "\n";
    out << "singularity class: " << to_string(r.disc.sing_class)
        << " (index proxy " << r.disc.cartier_index_proxy.get_str()
        << (r.disc.proxy_only ? ", proxy only" : "") << ")\n";
    if (r.cls) {
        if (r.cls->ok())
            out << "structure: " << to_string(r.cls->cls->tag) << "\n";
        else
            out << "structure: unclassified (" << r.cls->rejection << ")\n";
    }
    if (r.rationale) {
        out << "route: " << r.rationale->route << "\n";
        if (!r.rationale->valid_at_p)
            out << "blocked at p = " << r.p << ": " << r.rationale->blocking
                << "\n";
    }
    if (r.trace) {
        out << "tame contraction order:";
        for (const auto& id : r.trace->order) out << " " << id;
        out << "\n";
        for (const auto& s : r.trace->steps)
            out << "  contract " << s.contracted_vertex
                << ": lambda = " << s.lambda.str()
                << (s.tame ? ", tame" : ", wild") << "\n";
    } else if (r.search_capped) {
        out << "tame-order search skipped (size cap)\n";
    } else if (r.disc.is_lc()) {
        out << "no tame contraction order found\n";
    }
    out << "log extension for 1-forms: "
        << to_string(r.verdicts.log_ext_1forms) << "\n";
    out << "regular extension for 1-forms: "
        << to_string(r.verdicts.reg_ext_1forms) << "\n";
    out << "citations:\n";
    for (const auto& c : r.citations) out << "  - " << c << "\n";
    return out.str();
}

}  // namespace logext
