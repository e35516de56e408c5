#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "logext/analysis.hpp"
#include "logext/errors.hpp"
#include "logext/formpull.hpp"

namespace py = pybind11;
using namespace logext;

namespace {

py::dict disc_dict(const DiscrepancyReport& rep) {
    py::dict values;
    for (const auto& [id, a] : rep.values) values[py::str(id)] = a.str();
    py::dict out;
    out["values"] = values;
    out["class"] = to_string(rep.sing_class);
    out["cartier_index_proxy"] = rep.cartier_index_proxy.get_str();
    out["proxy_only"] = rep.proxy_only;
    out["is_lc"] = rep.is_lc();
    out["is_plt"] = rep.is_plt();
    return out;
}

}  // namespace

PYBIND11_MODULE(_logext, m) {
    m.doc() = "exact extension-theorem toolkit for surface singularities";

    // translators run in reverse registration order: base class first
    py::register_exception<Error>(m, "LogextError");
    py::register_exception<NotLcError>(m, "NotLcError");

    py::class_<DualGraph>(m, "DualGraph")
        .def(py::init<>())
        .def("add_curve", &DualGraph::add_curve, py::arg("id"),
             py::arg("self_intersection"), py::arg("genus") = 0)
        .def("add_edge", &DualGraph::add_edge, py::arg("a"), py::arg("b"),
             py::arg("multiplicity") = 1)
        .def("add_boundary",
             [](DualGraph& g, const std::string& id,
                const std::map<std::string, long>& meets) {
                 g.add_boundary(BoundaryCurve{id, meets});
             },
             py::arg("id"), py::arg("meets"))
        .def_static("from_json", &DualGraph::from_json)
        .def("to_json", &DualGraph::to_json)
        .def("is_connected", &DualGraph::is_connected);

    m.def("discrepancies",
          [](const DualGraph& g) { return disc_dict(discrepancies(g)); });

    m.def("is_negative_definite", [](const DualGraph& g) {
        return is_negative_definite(g).negative_definite;
    });

    m.def("abs_det", [](const DualGraph& g) {
        return tame_determinant_check(g, 2).abs_det.get_str();
    });

    m.def(
        "blowup",
        [](const DualGraph& g, const std::string& first, long r,
           const std::optional<std::string>& second, long s,
           const std::string& new_id) {
            BlowupCenter c{first, r, second, s};
            return blowup(g, c, new_id);
        },
        py::arg("graph"), py::arg("first"), py::arg("r") = 1,
        py::arg("second") = std::nullopt, py::arg("s") = 1,
        py::arg("new_id") = "");

    m.def("classify", [](const DualGraph& g) {
        auto res = classify_lc_graph(g);
        py::dict out;
        out["ok"] = res.ok();
        if (res.ok()) {
            out["class"] = to_string(res.cls->tag);
            out["det_triple"] = res.cls->det_triple;
            out["boundary_ends"] = res.cls->boundary_ends;
        } else {
            out["rejection"] = res.rejection;
        }
        return out;
    });

    m.def(
        "find_tame_order",
        [](const DualGraph& g, long p, const std::string& mode) {
            auto order = find_tame_order(g, p,
                                         mode == "greedy"
                                             ? SearchMode::Greedy
                                             : SearchMode::Exhaustive);
            if (!order) return py::object(py::none());
            py::list steps;
            for (const auto& s : order->steps) {
                py::dict d;
                d["contract"] = s.contracted_vertex;
                d["lambda"] = s.lambda.str();
                d["tame"] = s.tame;
                steps.append(d);
            }
            py::dict out;
            out["order"] = order->order;
            out["steps"] = steps;
            return py::object(out);
        },
        py::arg("graph"), py::arg("p"), py::arg("mode") = "exhaustive");

    m.def("extension_verdict", [](const DualGraph& g, long p) {
        auto v = extension_verdict(g, p);
        py::dict out;
        out["log_ext_1forms"] = to_string(v.log_ext_1forms);
        out["reg_ext_1forms"] = to_string(v.reg_ext_1forms);
        out["justification"] = v.justification;
        return out;
    });

    m.def("analyze_json", [](const DualGraph& g, long p) {
        return report_json(run_analysis(g, p, SearchMode::Exhaustive));
    });

    m.def("verify_e8", [](long p) {
        auto r = verify_e8(p);
        py::dict out;
        out["p"] = r.p;
        out["sigma"] = r.sigma;
        out["strict_transform_ok"] = r.strict_transform_ok;
        out["gamma"] = r.gamma;
        out["alpha"] = r.alpha;
        out["beta"] = r.beta;
        out["unit"] = r.unit;
        out["verdict"] = to_string(r.verdict);
        out["pass"] = r.matches_expected;
        return out;
    });

    m.def("verify_veronese", [](long p) {
        auto r = verify_veronese(p);
        py::dict out;
        out["p"] = r.p;
        out["chart_compatible"] = r.chart_compatible;
        out["pole_order"] = r.pole_order_chart0;
        out["verdict"] = to_string(r.verdict);
        out["dy_transfers"] = r.dy_transfers;
        out["involution_identity"] = r.involution_identity;
        out["pass"] = r.matches_expected;
        return out;
    });

    m.def("kollar_params", [](const std::string& cse, long n, long p) {
        auto r = kollar_params(cone_case_from_string(cse), n, p);
        py::dict out;
        out["case"] = to_string(r.cone_case);
        out["n"] = r.n;
        out["p"] = r.p;
        out["feasible"] = r.feasible;
        out["violated_bound"] = r.violated_bound;
        out["d"] = r.d;
        out["twist_degree"] = r.twist_degree;
        out["k_pm1_deg"] = r.k_pm1_deg;
        out["k_p_deg"] = r.k_p_deg;
        out["cone_discrepancy"] = r.cone_discrepancy;
        out["cone_class"] = r.cone_class;
        return out;
    });
}
