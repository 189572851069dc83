/* Copyright 2026 The taut Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */
// Python bindings. Algebras cross the boundary as text; graphs and reports as
// their exported renderings plus a few structured accessors.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "taut/errors.hpp"
#include "taut/export.hpp"
#include "taut/reachability.hpp"
#include "taut/reduction.hpp"

namespace py = pybind11;
using namespace taut;

namespace {

struct PyGraph {
    ExchangeGraph graph;

    std::vector<std::string> vertices() const {
        std::vector<std::string> out;
        for (const auto& v : graph.vertices) out.push_back(format_pair(graph.algebra->presentation(), v));
        return out;
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges() const {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (const auto& e : graph.edges) out.emplace_back(e.from, e.to);
        return out;
    }
};

struct PyReduction {
    AlgebraPtr reduced;
    std::size_t co_rank = 0;
    std::vector<std::string> vertex_modules;
};

py::dict validate(const std::string& text) {
    const Presentation p = parse_algebra(text);
    const GentleReport report = check_gentle(p);
    py::list violations;
    for (const auto& v : report.violations)
        violations.append(py::make_tuple(v.axiom, v.message, v.witnesses));
    py::dict out;
    out["gentle"] = report.is_gentle;
    out["violations"] = violations;
    if (p.is_finite_dimensional()) out["dimension"] = path_basis(p).dimension();
    else out["dimension"] = py::none();
    return out;
}

PyGraph graph_of(const AlgebraPtr& alg, std::size_t max_letters, std::size_t max_vertices, std::size_t jobs) {
    py::gil_scoped_release release;
    const CandidateSet cs(alg, max_letters, jobs);
    return {exchange_graph(cs, max_vertices)};
}

PyReduction reduce_at(const AlgebraPtr& alg, const std::string& u_text, std::size_t max_letters) {
    const TauRigidPair u = parse_pair(alg->presentation(), u_text);
    if (!is_tau_rigid_pair(alg, u)) throw PreconditionError("not a tau-rigid pair: " + u_text);
    py::gil_scoped_release release;
    const CandidateSet cs(alg, max_letters);
    const ReductionData rd = reduce(cs, u);
    PyReduction out{rd.reduced, rd.co_rank(), {}};
    for (const auto& w : rd.vertex_words) out.vertex_modules.push_back(format_word(alg->presentation(), w));
    return out;
}

std::vector<std::string> check(const AlgebraPtr& alg, const std::string& property, std::size_t max_letters,
                               std::size_t max_vertices, std::size_t jobs) {
    const bool all = property == "all";
    if (!all && property != "connected" && property != "tau-reachable" && property != "totally-tau-reachable" &&
        property != "reachable-in-face")
        throw py::value_error("unknown property: " + property);
    py::gil_scoped_release release;
    const CandidateSet cs(alg, max_letters, jobs);
    const ExchangeGraph g = exchange_graph(cs, max_vertices);
    std::vector<std::string> out;
    if (all || property == "connected") out.push_back(report_to_json(graph_connected(g)));
    if (all || property == "tau-reachable") out.push_back(report_to_json(has_tau_reachable_property(cs, &g)));
    if (all || property == "totally-tau-reachable") out.push_back(report_to_json(totally_tau_reachable(cs, g, jobs)));
    if (all || property == "reachable-in-face") out.push_back(report_to_json(reachable_in_face(cs, g)));
    return out;
}

} // namespace

PYBIND11_MODULE(_taut, m) {
    m.doc() = "tau-tilting combinatorics of gentle bound quiver algebras";

    auto base = py::register_exception<Error>(m, "Error");
    py::register_exception<ParseError>(m, "ParseError", base);
    py::register_exception<AlgebraError>(m, "AlgebraError", base);
    py::register_exception<BoundExhausted>(m, "BoundExhausted", base);
    py::register_exception<PreconditionError>(m, "PreconditionError", base);
    py::register_exception<ConsistencyError>(m, "ConsistencyError", base);

    py::class_<Algebra, std::shared_ptr<Algebra>>(m, "Algebra")
        .def(py::init([](const std::string& text) {
                 return std::const_pointer_cast<Algebra>(make_algebra(parse_algebra(text)));
             }),
             py::arg("text"))
        .def_property_readonly("label", [](const Algebra& a) { return a.presentation().label(); })
        .def_property_readonly("num_vertices", &Algebra::num_vertices)
        .def_property_readonly("num_arrows", &Algebra::num_arrows)
        .def_property_readonly("dimension", [](const Algebra& a) { return a.basis().dimension(); })
        .def("is_gentle", [](const Algebra& a) { return check_gentle(a.presentation()).is_gentle; })
        .def("to_text", [](const Algebra& a) { return format_algebra(a.presentation()); })
        .def("is_isomorphic", [](const Algebra& a, const Algebra& b) {
            return find_isomorphism(a.presentation(), b.presentation()).has_value();
        })
        .def("__repr__", [](const Algebra& a) { return "<taut.Algebra " + a.presentation().label() + ">"; });

    py::class_<PyGraph>(m, "ExchangeGraph")
        .def_property_readonly("vertices", &PyGraph::vertices)
        .def_property_readonly("edges", &PyGraph::edges)
        .def_property_readonly("complete", [](const PyGraph& g) { return g.graph.complete; })
        .def_property_readonly("status", [](const PyGraph& g) { return g.graph.status(); })
        .def("components", [](const PyGraph& g) { return g.graph.components(); })
        .def("to_dot", [](const PyGraph& g) { return graph_to_dot(g.graph); })
        .def("to_jsonl", [](const PyGraph& g) { return graph_to_jsonl(g.graph); })
        .def("to_text", [](const PyGraph& g) { return graph_to_text(g.graph); });

    py::class_<PyReduction>(m, "Reduction")
        .def_property_readonly("algebra", [](const PyReduction& r) { return std::const_pointer_cast<Algebra>(r.reduced); })
        .def_readonly("co_rank", &PyReduction::co_rank)
        .def_readonly("vertex_modules", &PyReduction::vertex_modules);

    m.def("validate", &validate, py::arg("text"),
          "Gentle-axiom report for presentation text: gentle, violations, dimension.");
    m.def(
        "exchange_graph",
        [](const std::shared_ptr<Algebra>& a, std::size_t max_letters, std::size_t max_vertices, std::size_t jobs) {
            return graph_of(a, max_letters, max_vertices, jobs);
        },
        py::arg("algebra"), py::arg("max_letters") = 8, py::arg("max_vertices") = 10000, py::arg("jobs") = 1);
    m.def(
        "reduce",
        [](const std::shared_ptr<Algebra>& a, const std::string& u, std::size_t max_letters) {
            return reduce_at(a, u, max_letters);
        },
        py::arg("algebra"), py::arg("u") = "", py::arg("max_letters") = 8);
    m.def(
        "check_json",
        [](const std::shared_ptr<Algebra>& a, const std::string& property, std::size_t max_letters,
           std::size_t max_vertices, std::size_t jobs) { return check(a, property, max_letters, max_vertices, jobs); },
        py::arg("algebra"), py::arg("property") = "all", py::arg("max_letters") = 8, py::arg("max_vertices") = 10000,
        py::arg("jobs") = 1);
}
