#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "poltan/determinantal.hpp"
#include "poltan/json_io.hpp"
#include "poltan/polarize.hpp"
#include "poltan/tangent.hpp"
#include "poltan/trees.hpp"
#include "poltan/verify.hpp"

namespace py = pybind11;
using namespace poltan;

namespace {

std::array<Rational, 3> parse_triple(const std::vector<std::string>& t) {
    if (t.size() != 3) throw std::invalid_argument("t must have three entries");
    return {parse_rational(t[0]), parse_rational(t[1]), parse_rational(t[2])};
}

py::list degree_checks(const std::vector<DegreeCheck>& degrees) {
    py::list rows;
    for (const auto& deg : degrees) {
        py::dict row;
        row["degree"] = deg.degree;
        row["computed"] = deg.computed;
        row["expected"] = deg.expected;
        row["match"] = deg.match;
        rows.append(row);
    }
    return rows;
}

}  // namespace

PYBIND11_MODULE(_poltan, m) {
    m.doc() = "exact toolkit for split power ideals and their deformation spaces";

    py::class_<MonomialIdeal>(m, "Ideal")
        .def_property_readonly("variable_names",
                               [](const MonomialIdeal& i) { return i.universe.names; })
        .def_property_readonly("generators",
                               [](const MonomialIdeal& i) {
                                   std::vector<std::vector<std::pair<int, int>>> out;
                                   for (const auto& g : i.generators) out.push_back(g.entries());
                                   return out;
                               })
        .def_property_readonly("generator_strings",
                               [](const MonomialIdeal& i) {
                                   std::vector<std::string> out;
                                   for (const auto& g : i.generators)
                                       out.push_back(g.str(i.universe));
                                   return out;
                               })
        .def("tangent_dimension", [](const MonomialIdeal& i) { return tangent_dimension(i); })
        .def("variable_deformation_dim",
             [](const MonomialIdeal& i) { return variable_deformation_dim(i); })
        .def(
            "hilbert_function", [](const MonomialIdeal& i, int k) { return hilbert_function(i, k); },
            py::arg("k"))
        .def("hilbert_numerator",
             [](const MonomialIdeal& i) { return hilbert_numerator(i).coefficients; })
        .def(
            "standard_monomials",
            [](const MonomialIdeal& i, int k) {
                std::vector<std::string> out;
                for (const auto& mono : standard_monomials(i, k)) out.push_back(mono.str(i.universe));
                return out;
            },
            py::arg("k"))
        .def("to_json", [](const MonomialIdeal& i) { return ideal_to_json(i).dump(); })
        .def("__len__", [](const MonomialIdeal& i) { return i.generators.size(); })
        .def("__eq__", [](const MonomialIdeal& a, const MonomialIdeal& b) { return a == b; })
        .def("__repr__", [](const MonomialIdeal& i) {
            return "<Ideal with " + std::to_string(i.generators.size()) + " generators in " +
                   std::to_string(i.universe.size()) + " variables>";
        });

    m.def(
        "ideal_from_json",
        [](const std::string& text) { return ideal_from_json(nlohmann::json::parse(text)); },
        py::arg("text"));

    m.def("power_ideal", &power_ideal, py::arg("n"), py::arg("d"));
    m.def("sqfree_power_ideal", &sqfree_power_ideal, py::arg("n"), py::arg("d"));
    m.def("box_polarization", &box_polarization, py::arg("n"), py::arg("d"));
    m.def("standard_polarization", &standard_polarization, py::arg("n"), py::arg("d"));
    m.def("trivial_polarization", &trivial_polarization, py::arg("n"), py::arg("d"));

    m.def(
        "split_grouping", [](int n, int d) { return split_depolarization(n, d).base_of; },
        py::arg("n"), py::arg("d"), "variable grouping x_{i,j} -> i-1 for the nd-variable ring");

    m.def(
        "is_polarization",
        [](const MonomialIdeal& split, const MonomialIdeal& base, const std::vector<int>& grouping) {
            DepolarizationSpec spec{grouping, base.universe};
            const auto report = is_polarization(split, base, spec);
            py::dict out;
            out["ok"] = report.ok;
            out["generator_bijection"] = report.generator_bijection;
            out["numerator_match"] = report.numerator_match;
            out["detail"] = report.detail;
            return out;
        },
        py::arg("split"), py::arg("base"), py::arg("grouping"));

    m.def("determinantal_component_dim", &determinantal_component_dim, py::arg("n"), py::arg("d"));

    py::class_<TreeIdeal>(m, "TreeIdeal")
        .def_property_readonly("ideal", [](const TreeIdeal& t) { return t.ideal; })
        .def_property_readonly("grouping", [](const TreeIdeal& t) { return t.spec.base_of; })
        .def_property_readonly("vertex_generators", [](const TreeIdeal& t) { return t.vertex_gens; });

    m.def(
        "tree_ideal", [](const std::vector<int>& prufer) { return tree_ideal(prufer_decode(prufer)); },
        py::arg("prufer"));
    m.def(
        "tree_edges", [](const std::vector<int>& prufer) { return prufer_decode(prufer).edges; },
        py::arg("prufer"));
    m.def(
        "prufer_encode",
        [](int vertex_count, const std::vector<std::pair<int, int>>& edges) {
            return prufer_encode(make_tree(vertex_count, edges));
        },
        py::arg("vertex_count"), py::arg("edges"));
    m.def(
        "tree_index",
        [](const std::vector<int>& prufer) {
            const auto report = tree_index(prufer_decode(prufer));
            py::dict out;
            out["line_graph_degrees"] = report.line_graph_degrees;
            out["nu1"] = report.nu1;
            out["nu2"] = report.nu2;
            out["index"] = report.index;
            return out;
        },
        py::arg("prufer"));
    m.def(
        "predicted_tangent_dim",
        [](const std::vector<int>& prufer) { return predicted_tangent_dim(prufer_decode(prufer)); },
        py::arg("prufer"));

    m.def(
        "verify_initial_ideal",
        [](int n, int d, int max_degree) {
            const auto report = verify_initial_ideal(n, d, max_degree);
            py::dict out;
            out["degrees"] = degree_checks(report.degrees);
            out["leading_terms_match"] = report.leading_terms_match;
            out["pass"] = report.ok;
            return out;
        },
        py::arg("n"), py::arg("d"), py::arg("max_degree"));

    m.def(
        "verify_flat_family",
        [](int d, const std::vector<std::string>& t, int max_degree) {
            const auto report = verify_flat_family(d, parse_triple(t), max_degree);
            py::dict out;
            out["degrees"] = degree_checks(report.degrees);
            out["pass"] = report.ok;
            return out;
        },
        py::arg("d"), py::arg("t"), py::arg("max_degree") = 6);

    m.def(
        "verify_all",
        [](const std::string& profile, std::uint64_t seed, int jobs, bool exhaustive7) {
            if (profile != "quick" && profile != "full")
                throw std::invalid_argument("profile must be quick or full");
            const RunReport report =
                verify_all(profile == "full" ? Profile::Full : Profile::Quick, seed, jobs, exhaustive7);
            py::list rows;
            for (const auto& row : report.rows) {
                py::dict r;
                r["name"] = row.name;
                r["expected"] = row.expected;
                r["computed"] = row.computed;
                r["match"] = row.match;
                r["millis"] = row.millis;
                rows.append(r);
            }
            py::dict out;
            out["profile"] = report.profile;
            out["seed"] = report.seed;
            out["jobs"] = report.jobs;
            out["checks"] = rows;
            out["pass"] = report.pass;
            return out;
        },
        py::arg("profile") = "quick", py::arg("seed") = 0, py::arg("jobs") = 0,
        py::arg("exhaustive7") = false);

#ifdef VERSION_INFO
    m.attr("__version__") = VERSION_INFO;
#else
    m.attr("__version__") = "dev";
#endif
}
