#include "gridmagic/document.hpp"

#include <algorithm>

#include "json.hpp"

namespace gridmagic {

namespace {

using nlohmann::json;

VertexCoord to_canonical(const std::vector<int>& perm, const VertexCoord& caller) {
  VertexCoord c{std::vector<std::int64_t>(caller.x.size())};
  for (std::size_t a = 0; a < caller.x.size(); ++a) c.x[static_cast<std::size_t>(perm[a] - 1)] = caller.x[a];
  return c;
}

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  }
  return {line, byte - line_start};
}

template <class T>
std::vector<T> int_array(const json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("missing key '") + key + "'");
  const auto& a = j.at(key);
  if (!a.is_array()) throw ParseError(std::string("'") + key + "' must be an array");
  std::vector<T> out;
  out.reserve(a.size());
  for (const auto& v : a) {
    if (!v.is_number_integer()) throw ParseError(std::string("'") + key + "' must hold integers");
    out.push_back(v.get<T>());
  }
  return out;
}

}  // namespace

LabelingDocument generate_document(std::span<const std::int64_t> dims, LabelKind kind) {
  auto canon = canonicalize(dims);
  auto built = build_labelings(canon.spec);
  LabelingDocument doc;
  doc.dims.assign(dims.begin(), dims.end());
  doc.axis_permutation = canon.axis_permutation;
  doc.kind = kind;
  switch (kind) {
    case LabelKind::Vertex: doc.vertex_labels = std::move(built.vertex.labels); break;
    case LabelKind::Edge: doc.edge_labels = std::move(built.edge.labels); break;
    case LabelKind::Total: {
      auto total = combine_supermagic(built.vertex, built.edge);
      doc.vertex_labels = std::move(total.vertex_labels);
      doc.edge_labels = std::move(total.edge_labels);
      break;
    }
  }
  return doc;
}

Canonicalized document_spec(const LabelingDocument& doc) {
  Canonicalized canon = [&] {
    try {
      return canonicalize(doc.dims);
    } catch (const Error& e) {
      throw ParseError(std::string("invalid dims: ") + e.what());
    }
  }();
  if (canon.axis_permutation != doc.axis_permutation) throw ParseError("axis_permutation does not match dims");
  return canon;
}

std::string save(const LabelingDocument& doc) {
  json j;
  j["format_version"] = doc.format_version;
  j["dims"] = doc.dims;
  j["axis_permutation"] = doc.axis_permutation;
  j["kind"] = to_string(doc.kind);
  j["vertex_labels"] = doc.vertex_labels;
  j["edge_labels"] = doc.edge_labels;
  return j.dump() + "\n";
}

LabelingDocument load(std::string_view text) {
  json j;
  try {
    j = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("malformed JSON", line, col);
  }
  if (!j.is_object()) throw ParseError("document must be a JSON object");
  if (!j.contains("format_version") || !j["format_version"].is_string()) throw ParseError("missing format_version");

  LabelingDocument doc;
  doc.format_version = j["format_version"].get<std::string>();
  if (doc.format_version != kFormatVersion)
    throw Error(ErrorCode::VersionMismatch,
                "unsupported format_version '" + doc.format_version + "', expected '" + std::string(kFormatVersion) + "'");
  doc.dims = int_array<std::int64_t>(j, "dims");
  doc.axis_permutation = int_array<int>(j, "axis_permutation");
  if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("missing kind");
  try {
    doc.kind = label_kind_from_string(j["kind"].get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  doc.vertex_labels = int_array<std::int64_t>(j, "vertex_labels");
  doc.edge_labels = int_array<std::int64_t>(j, "edge_labels");

  const auto canon = document_spec(doc);
  const auto nv = static_cast<std::size_t>(canon.spec.vertex_count());
  const auto ne = static_cast<std::size_t>(canon.spec.edge_count());
  const std::size_t want_v = doc.kind == LabelKind::Edge ? 0 : nv;
  const std::size_t want_e = doc.kind == LabelKind::Vertex ? 0 : ne;
  if (doc.vertex_labels.size() != want_v || doc.edge_labels.size() != want_e) throw ParseError("length mismatch");
  return doc;
}

std::int64_t vertex_label_at(const LabelingDocument& doc, const VertexCoord& caller_coord) {
  const auto canon = document_spec(doc);
  if (doc.vertex_labels.empty()) throw std::invalid_argument("document has no vertex labels");
  if (caller_coord.x.size() != doc.dims.size()) throw Error(ErrorCode::CoordOutOfRange, "wrong coordinate count");
  const auto r = vertex_rank(canon.spec, to_canonical(doc.axis_permutation, caller_coord));
  return doc.vertex_labels[static_cast<std::size_t>(r)];
}

std::int64_t edge_label_at(const LabelingDocument& doc, const VertexCoord& caller_base, int caller_axis) {
  const auto canon = document_spec(doc);
  if (doc.edge_labels.empty()) throw std::invalid_argument("document has no edge labels");
  if (caller_base.x.size() != doc.dims.size() || caller_axis < 1 ||
      static_cast<std::size_t>(caller_axis) > doc.dims.size())
    throw Error(ErrorCode::CoordOutOfRange, "edge outside grid");
  const EdgeId e{to_canonical(doc.axis_permutation, caller_base),
                 doc.axis_permutation[static_cast<std::size_t>(caller_axis - 1)]};
  return doc.edge_labels[static_cast<std::size_t>(edge_rank(canon.spec, e))];
}

MagicReport verify_document(const LabelingDocument& doc) {
  const auto canon = document_spec(doc);
  const auto& spec = canon.spec;
  switch (doc.kind) {
    case LabelKind::Vertex: return verify_vertex_magic(spec, {spec, doc.vertex_labels});
    case LabelKind::Edge: return verify_edge_magic(spec, {spec, doc.edge_labels});
    case LabelKind::Total: return verify_supermagic(spec, {spec, doc.vertex_labels, doc.edge_labels});
  }
  throw std::logic_error("unreachable");
}

}  // namespace gridmagic
