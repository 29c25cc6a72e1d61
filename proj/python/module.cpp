#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "sg/bound10.hpp"
#include "sg/canonical.hpp"
#include "sg/colouring.hpp"
#include "sg/harness.hpp"
#include "sg/hom_search.hpp"
#include "sg/io.hpp"
#include "sg/targets.hpp"

namespace py = pybind11;

namespace {

using EdgeTuple = std::tuple<int, int, std::string>;

sg::Sign sign_of(const std::string& s) {
    if (s.size() == 1)
        if (auto sign = sg::sign_from_char(s[0])) return *sign;
    throw py::value_error("sign must be '+' or '-', got '" + s + "'");
}

sg::SignedGraph make_graph(int n, const std::vector<EdgeTuple>& edges) {
    std::vector<sg::SignedEdge> out;
    for (const auto& [u, v, s] : edges) out.push_back({u, v, sign_of(s)});
    return sg::SignedGraph(n, out);
}

std::vector<EdgeTuple> edge_list(const sg::SignedGraph& g) {
    std::vector<EdgeTuple> out;
    for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, std::string(1, sg::to_char(e.sign)));
    return out;
}

sg::PinSet make_pins(const std::map<int, int>& pins) {
    sg::PinSet out;
    for (auto [s, t] : pins) out.pin(s, t);
    return out;
}

sg::Colouring make_colouring(const std::vector<int>& labels, std::optional<int> k) {
    sg::Colouring c;
    c.labels = labels;
    int top = -1;
    for (int x : labels) top = std::max(top, x);
    c.k = k.value_or(top + 1);
    return c;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Homomorphisms and colourings of 2-edge-coloured graphs";

    py::register_exception<sg::GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<sg::ParseError>(m, "ParseError", PyExc_ValueError);
    py::register_exception<sg::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<sg::InternalFalsification>(m, "BranchError", PyExc_RuntimeError);

    py::class_<sg::SignedGraph>(m, "SignedGraph")
        .def(py::init(&make_graph), py::arg("n"), py::arg("edges") = std::vector<EdgeTuple>{},
             "Graph on vertices 0..n-1 from (u, v, '+'|'-') triples.")
        .def_property_readonly("n", &sg::SignedGraph::vertex_count)
        .def_property_readonly("m", &sg::SignedGraph::edge_count)
        .def("edges", &edge_list)
        .def("sign", [](const sg::SignedGraph& g, int u, int v) -> std::optional<std::string> {
            auto s = g.sign(u, v);
            if (!s) return std::nullopt;
            return std::string(1, sg::to_char(*s));
        })
        .def("degree", &sg::SignedGraph::degree)
        .def("vertex_class", [](const sg::SignedGraph& g, int v) { return sg::to_string(sg::classify_vertex(g, v)); })
        .def("to_sg", [](const sg::SignedGraph& g) { return sg::to_sg_text(g); })
        .def("__repr__", [](const sg::SignedGraph& g) {
            return "SignedGraph(n=" + std::to_string(g.vertex_count()) + ", m=" + std::to_string(g.edge_count()) +
                   ")";
        });

    m.def("parse_sg", &sg::parse_signed_graph, py::arg("text"));
    m.def("from_graph6", &sg::parse_graph6_with_signs, py::arg("g6"), py::arg("signs"));
    m.def("flip_signs", &sg::flip_signs);
    m.def("canonical_form", &sg::canonical_form);

    m.def(
        "find_homomorphism",
        [](const sg::SignedGraph& g, const sg::SignedGraph& h, const std::map<int, int>& pins) {
            return sg::find_homomorphism(g, h, make_pins(pins));
        },
        py::arg("source"), py::arg("target"), py::arg("pins") = std::map<int, int>{},
        "Image list, or None when no homomorphism exists.");
    m.def(
        "count_homomorphisms",
        [](const sg::SignedGraph& g, const sg::SignedGraph& h, const std::map<int, int>& pins) {
            return sg::count_homomorphisms(g, h, make_pins(pins));
        },
        py::arg("source"), py::arg("target"), py::arg("pins") = std::map<int, int>{});

    m.def(
        "validate_colouring",
        [](const sg::SignedGraph& g, const std::vector<int>& labels, std::optional<int> k) {
            return sg::validate_colouring(g, make_colouring(labels, k));
        },
        py::arg("graph"), py::arg("labels"), py::arg("k") = py::none());
    m.def(
        "find_k_colouring",
        [](const sg::SignedGraph& g, int k) -> std::optional<std::vector<int>> {
            auto c = sg::find_k_colouring(g, k);
            if (!c) return std::nullopt;
            return c->labels;
        },
        py::arg("graph"), py::arg("k"));
    m.def(
        "chromatic",
        [](const sg::SignedGraph& g) {
            auto r = sg::chromatic(g);
            return py::make_tuple(r.chi, r.witness.labels);
        },
        py::arg("graph"), "(chi, witness labels)");

    m.def(
        "ten_colouring",
        [](const sg::SignedGraph& g) {
            sg::TenColouringResult r;
            {
                py::gil_scoped_release release;
                r = sg::ten_colouring(g);
            }
            py::dict out;
            out["labels"] = r.colouring.labels;
            out["k"] = r.colouring.k;
            out["branch"] = r.trace.branch_name();
            out["fallback"] = r.trace.fallback;
            out["trace"] = r.trace.to_json();
            return out;
        },
        py::arg("graph"), "Colouring of a connected cubic graph with at most ten colours.");

    m.def(
        "target", [](const std::string& which) { return sg::catalog_graph(sg::default_catalog(), which); },
        py::arg("which"), "One of sp9, sp9dagger, sp9star, k4s+, k4s-.");

    m.def("verify", [] {
        std::vector<std::tuple<std::string, bool, std::string>> out;
        for (const auto& item : sg::run_verify_suite()) out.emplace_back(item.name, item.passed, item.detail);
        return out;
    });

    m.def(
        "survey",
        [](int max_n, bool reduce, bool exact_chi, bool sp9star, std::size_t sample, std::uint64_t seed,
           unsigned threads) {
            sg::SurveyOptions options;
            options.max_n = max_n;
            options.reduce = reduce;
            options.exact_chi = exact_chi;
            options.sp9star = sp9star;
            options.sample_n10 = sample;
            options.seed = seed;
            options.threads = threads;
            std::string text;
            {
                py::gil_scoped_release release;
                text = sg::report_jsonl(sg::run_survey(options), false);
            }
            return text;
        },
        py::arg("max_n") = 8, py::arg("reduce") = true, py::arg("exact_chi") = true, py::arg("sp9star") = false,
        py::arg("sample") = 1000, py::arg("seed") = sg::SurveyOptions{}.seed, py::arg("threads") = 0,
        "JSONL report (without timings): one line per instance, then a summary line.");
}
