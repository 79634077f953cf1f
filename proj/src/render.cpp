#include <cstdio>
#include <sstream>

#include "gridmagic/document.hpp"

namespace gridmagic {

RenderStyle render_style_from_string(const std::string& s) {
  if (s == "tikz2d") return RenderStyle::Tikz2d;
  if (s == "tikz3d") return RenderStyle::Tikz3d;
  if (s == "dot") return RenderStyle::Dot;
  if (s == "csv") return RenderStyle::Csv;
  throw std::invalid_argument("unknown render style '" + s + "'");
}

namespace {

struct CallerVertex {
  std::vector<std::int64_t> x;
  std::optional<std::int64_t> label;
};

struct CallerEdge {
  std::vector<std::int64_t> from;
  std::vector<std::int64_t> to;
  int axis;
  std::optional<std::int64_t> label;
};

// Elements in canonical rank order, with coordinates and axes in caller order.
class CallerView {
 public:
  explicit CallerView(const LabelingDocument& doc) : doc_(doc), canon_(document_spec(doc)) {
    const auto& spec = canon_.spec;
    for (std::int64_t r = 0; r < spec.vertex_count(); ++r) {
      CallerVertex v{to_caller(vertex_unrank(spec, r).x), std::nullopt};
      if (!doc.vertex_labels.empty()) v.label = doc.vertex_labels[static_cast<std::size_t>(r)];
      vertices.push_back(std::move(v));
    }
    for (std::int64_t r = 0; r < spec.edge_count(); ++r) {
      const auto e = edge_unrank(spec, r);
      auto tip = e.base;
      tip.x[static_cast<std::size_t>(e.axis - 1)] += 1;
      CallerEdge ce{to_caller(e.base.x), to_caller(tip.x), caller_axis(e.axis), std::nullopt};
      if (!doc.edge_labels.empty()) ce.label = doc.edge_labels[static_cast<std::size_t>(r)];
      edges.push_back(std::move(ce));
    }
  }

  std::vector<CallerVertex> vertices;
  std::vector<CallerEdge> edges;

 private:
  std::vector<std::int64_t> to_caller(const std::vector<std::int64_t>& c) const {
    std::vector<std::int64_t> u(c.size());
    for (std::size_t a = 0; a < u.size(); ++a) u[a] = c[static_cast<std::size_t>(doc_.axis_permutation[a] - 1)];
    return u;
  }

  int caller_axis(int canonical_axis) const {
    for (std::size_t a = 0; a < doc_.axis_permutation.size(); ++a)
      if (doc_.axis_permutation[a] == canonical_axis) return static_cast<int>(a + 1);
    throw std::logic_error("axis permutation is not a permutation");
  }

  const LabelingDocument& doc_;
  Canonicalized canon_;
};

std::string join(const std::vector<std::int64_t>& x, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(x[i]);
  }
  return s;
}

std::string fixed2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string label_text(const std::optional<std::int64_t>& label) { return label ? std::to_string(*label) : ""; }

template <class Place>
std::string tikz(const LabelingDocument& doc, Place place) {
  const CallerView view(doc);
  const bool vertex_labels = !doc.vertex_labels.empty();
  std::ostringstream out;
  if (vertex_labels)
    out << "\\begin{tikzpicture}[every node/.style={draw,shape=circle,inner sep=1pt,minimum size=.7cm}]\n";
  else
    out << "\\begin{tikzpicture}[every node/.style={draw,shape=circle,fill=black,inner sep=1pt,minimum size=.2cm}]\n";
  for (const auto& v : view.vertices) {
    const auto [x, y] = place(v.x);
    out << "  \\node (v" << join(v.x, "-") << ") at (" << x << "," << y << ") {" << label_text(v.label) << "};\n";
  }
  for (const auto& e : view.edges) {
    out << "  \\draw[thick] (v" << join(e.from, "-") << ") to";
    if (e.label) out << " node[draw=none,fill=white,midway] {" << *e.label << "}";
    out << " (v" << join(e.to, "-") << ");\n";
  }
  out << "\\end{tikzpicture}\n";
  return out.str();
}

std::string render_dot(const LabelingDocument& doc) {
  const CallerView view(doc);
  std::ostringstream out;
  out << "graph grid {\n  node [shape=circle];\n";
  for (const auto& v : view.vertices) {
    out << "  v" << join(v.x, "_") << " [label=\"";
    if (v.label)
      out << *v.label;
    else
      out << "(" << join(v.x, ",") << ")";
    out << "\"];\n";
  }
  for (const auto& e : view.edges) {
    out << "  v" << join(e.from, "_") << " -- v" << join(e.to, "_");
    if (e.label) out << " [label=\"" << *e.label << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

std::string render_csv(const LabelingDocument& doc) {
  const CallerView view(doc);
  std::ostringstream out;
  out << "kind";
  for (std::size_t a = 1; a <= doc.dims.size(); ++a) out << ",x" << a;
  out << ",axis,label\n";
  for (const auto& v : view.vertices)
    if (v.label) out << "vertex," << join(v.x, ",") << ",," << *v.label << "\n";
  for (const auto& e : view.edges)
    if (e.label) out << "edge," << join(e.from, ",") << "," << e.axis << "," << *e.label << "\n";
  return out.str();
}

}  // namespace

std::string render(const LabelingDocument& doc, RenderStyle style) {
  const auto d = doc.dims.size();
  switch (style) {
    case RenderStyle::Tikz2d: {
      if (d != 2) throw Error(ErrorCode::UnsupportedDimension, "tikz2d needs a 2-dimensional grid");
      const auto n2 = doc.dims[1];
      // First coordinate runs right, second runs down from the top row.
      return tikz(doc, [n2](const std::vector<std::int64_t>& x) {
        return std::pair{std::to_string(3 * (x[0] - 1)), std::to_string(3 * (n2 - x[1]))};
      });
    }
    case RenderStyle::Tikz3d: {
      if (d != 3) throw Error(ErrorCode::UnsupportedDimension, "tikz3d needs a 3-dimensional grid");
      const auto n3 = doc.dims[2];
      // Oblique projection: the second axis recedes up and to the right.
      return tikz(doc, [n3](const std::vector<std::int64_t>& x) {
        const double px = 3.0 * static_cast<double>(x[0] - 1) + 1.9 * static_cast<double>(x[1] - 1);
        const double py = 3.0 * static_cast<double>(n3 - x[2]) + 1.15 * static_cast<double>(x[1] - 1);
        return std::pair{fixed2(px), fixed2(py)};
      });
    }
    case RenderStyle::Dot: return render_dot(doc);
    case RenderStyle::Csv: return render_csv(doc);
  }
  throw std::logic_error("unreachable");
}

}  // namespace gridmagic
