#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "gridmagic/cli.hpp"
#include "gridmagic/document.hpp"
#include "gridmagic/labeling.hpp"
#include "gridmagic/oracle.hpp"
#include "gridmagic/verify.hpp"

namespace py = pybind11;
using namespace gridmagic;

namespace {

py::tuple edge_tuple(const EdgeId& e) { return py::make_tuple(e.base.x, e.axis); }

std::string dims_repr(const GridSpec& spec) {
  std::string s = "GridSpec([";
  for (std::size_t i = 0; i < spec.dimension(); ++i) s += (i ? ", " : "") + std::to_string(spec.dims()[i]);
  return s + "])";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Q_d-magic labelings of grid graphs";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  py::class_<GridSpec>(m, "GridSpec")
      .def(py::init([](std::vector<std::int64_t> dims) { return GridSpec::from_canonical(std::move(dims)); }),
           py::arg("dims"))
      .def_property_readonly("dims", [](const GridSpec& s) {
        return std::vector<std::int64_t>(s.dims().begin(), s.dims().end());
      })
      .def_property_readonly("dimension", &GridSpec::dimension)
      .def_property_readonly("vertex_count", &GridSpec::vertex_count)
      .def_property_readonly("edge_count", &GridSpec::edge_count)
      .def_property_readonly("cube_count", &GridSpec::cube_count)
      .def("__eq__", [](const GridSpec& a, const GridSpec& b) { return a == b; })
      .def("__repr__", &dims_repr);

  m.def("canonicalize", [](std::vector<std::int64_t> dims) {
    auto c = canonicalize(dims);
    return py::make_tuple(c.spec, c.axis_permutation);
  });
  m.def("enumerate_edges", [](const GridSpec& spec) {
    py::list out;
    for (const auto& e : enumerate_edges(spec)) out.append(edge_tuple(e));
    return out;
  });
  m.def("enumerate_cubes", [](const GridSpec& spec) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& c : enumerate_cubes(spec)) out.push_back(c.corner.x);
    return out;
  });
  m.def("check_h_covering", &check_h_covering);

  py::class_<VertexLabeling>(m, "VertexLabeling")
      .def(py::init<GridSpec, std::vector<std::int64_t>>(), py::arg("spec"), py::arg("labels"))
      .def_readonly("spec", &VertexLabeling::spec)
      .def_readonly("labels", &VertexLabeling::labels)
      .def("at", [](const VertexLabeling& f, std::vector<std::int64_t> x) { return f.at({std::move(x)}); });
  py::class_<EdgeLabeling>(m, "EdgeLabeling")
      .def(py::init<GridSpec, std::vector<std::int64_t>>(), py::arg("spec"), py::arg("labels"))
      .def_readonly("spec", &EdgeLabeling::spec)
      .def_readonly("labels", &EdgeLabeling::labels)
      .def("at", [](const EdgeLabeling& g, std::vector<std::int64_t> base, int axis) {
        return g.at({{std::move(base)}, axis});
      });
  py::class_<TotalLabeling>(m, "TotalLabeling")
      .def_readonly("spec", &TotalLabeling::spec)
      .def_readonly("vertex_labels", &TotalLabeling::vertex_labels)
      .def_readonly("edge_labels", &TotalLabeling::edge_labels);

  m.def("base_vertex_labeling", &base_vertex_labeling, py::arg("n1"), py::arg("n2"));
  m.def("base_edge_labeling", &base_edge_labeling, py::arg("n1"), py::arg("n2"));
  m.def("build_labelings", [](const GridSpec& spec) {
    auto p = build_labelings(spec);
    return py::make_tuple(std::move(p.vertex), std::move(p.edge));
  });
  m.def("combine_supermagic", &combine_supermagic);

  py::class_<PredictedSums>(m, "PredictedSums")
      .def_readonly("c_vertex", &PredictedSums::c_vertex)
      .def_readonly("c_edge", &PredictedSums::c_edge)
      .def_readonly("c_total", &PredictedSums::c_total);
  m.def("closed_form_sums", &closed_form_sums);

  py::class_<MagicReport>(m, "MagicReport")
      .def_property_readonly("kind", [](const MagicReport& r) { return std::string(to_string(r.kind)); })
      .def_readonly("bijective", &MagicReport::bijective)
      .def_readonly("vertex_range_ok", &MagicReport::vertex_range_ok)
      .def_readonly("cube_sum_values", &MagicReport::cube_sum_values)
      .def_readonly("distinct_sums", &MagicReport::distinct_sums)
      .def_readonly("magic", &MagicReport::magic)
      .def_readonly("magic_sum", &MagicReport::magic_sum)
      .def_readonly("predicted_sum", &MagicReport::predicted_sum)
      .def_readonly("matches_prediction", &MagicReport::matches_prediction)
      .def("accepted", &MagicReport::accepted);
  m.def("verify_vertex_magic", &verify_vertex_magic);
  m.def("verify_edge_magic", &verify_edge_magic);
  m.def("verify_supermagic", &verify_supermagic);

  py::class_<SearchResult>(m, "SearchResult")
      .def_readonly("examined", &SearchResult::examined)
      .def_readonly("magic_count", &SearchResult::magic_count)
      .def_readonly("sum_histogram", &SearchResult::sum_histogram)
      .def_readonly("probe_found", &SearchResult::probe_found)
      .def_property_readonly("found", [](const SearchResult& r) {
        py::list out;
        for (const auto& f : r.found) out.append(py::make_tuple(f.digest, f.magic_sum, f.labels));
        return out;
      });
  m.def(
      "exhaustive_search",
      [](const GridSpec& spec, const std::string& mode, std::int64_t max_assignments,
         std::optional<std::int64_t> target, std::size_t found_cap) {
        SearchBudget b{max_assignments, search_mode_from_string(mode), target};
        py::gil_scoped_release release;
        return exhaustive_search(spec, b, std::nullopt, found_cap);
      },
      py::arg("spec"), py::arg("mode") = "vertex", py::arg("max_assignments") = SearchBudget{}.max_assignments,
      py::arg("target") = py::none(), py::arg("found_cap") = 64);
  m.def(
      "confirm_construction",
      [](const GridSpec& spec, const std::string& mode, std::int64_t max_assignments) {
        py::gil_scoped_release release;
        return confirm_construction(spec, {max_assignments, search_mode_from_string(mode), std::nullopt});
      },
      py::arg("spec"), py::arg("mode") = "vertex", py::arg("max_assignments") = SearchBudget{}.max_assignments);

  py::class_<LabelingDocument>(m, "LabelingDocument")
      .def_readonly("format_version", &LabelingDocument::format_version)
      .def_readonly("dims", &LabelingDocument::dims)
      .def_readonly("axis_permutation", &LabelingDocument::axis_permutation)
      .def_property_readonly("kind", [](const LabelingDocument& d) { return std::string(to_string(d.kind)); })
      .def_readonly("vertex_labels", &LabelingDocument::vertex_labels)
      .def_readonly("edge_labels", &LabelingDocument::edge_labels)
      .def("vertex_label_at",
           [](const LabelingDocument& d, std::vector<std::int64_t> x) { return vertex_label_at(d, {std::move(x)}); })
      .def("edge_label_at", [](const LabelingDocument& d, std::vector<std::int64_t> base, int axis) {
        return edge_label_at(d, {std::move(base)}, axis);
      });
  m.def(
      "generate_document",
      [](std::vector<std::int64_t> dims, const std::string& kind) {
        return generate_document(dims, label_kind_from_string(kind));
      },
      py::arg("dims"), py::arg("kind") = "total");
  m.def("save", [](const LabelingDocument& d) { return save(d); });
  m.def("load", [](const std::string& text) { return load(text); });
  m.def("verify_document", &verify_document);
  m.def("render",
        [](const LabelingDocument& d, const std::string& style) { return render(d, render_style_from_string(style)); });

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args, const std::string& stdin_text) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        const int code = run_cli(args, in, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), py::arg("stdin") = "");
}
