#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gridmagic/grid.hpp"
#include "gridmagic/labeling.hpp"
#include "gridmagic/verify.hpp"

namespace gridmagic {

inline constexpr std::string_view kFormatVersion = "1";

/// A labeling as stored on disk. Label arrays are indexed by canonical rank;
/// dims and axis_permutation keep the caller's axis order so coordinates can
/// be reported the way the user wrote them.
///
/// Total documents store F, i.e. edge labels already shifted by |V|. Vertex
/// documents have an empty edge array and edge documents an empty vertex
/// array.
struct LabelingDocument {
  std::string format_version{kFormatVersion};
  std::vector<std::int64_t> dims;
  std::vector<int> axis_permutation;
  LabelKind kind = LabelKind::Total;
  std::vector<std::int64_t> vertex_labels;
  std::vector<std::int64_t> edge_labels;

  friend bool operator==(const LabelingDocument&, const LabelingDocument&) = default;
};

/// Builds the construction for dims given in any order.
LabelingDocument generate_document(std::span<const std::int64_t> dims, LabelKind kind);

/// Canonical spec of a document; checks that axis_permutation matches dims.
Canonicalized document_spec(const LabelingDocument& doc);

/// Canonical JSON: sorted keys, integers only, one trailing newline.
std::string save(const LabelingDocument& doc);

/// Throws ParseError (with line and byte offset for syntax errors) or
/// VersionMismatch.
LabelingDocument load(std::string_view text);

/// Label lookups in the caller's coordinates and axis numbering.
std::int64_t vertex_label_at(const LabelingDocument& doc, const VertexCoord& caller_coord);
std::int64_t edge_label_at(const LabelingDocument& doc, const VertexCoord& caller_base, int caller_axis);

/// Runs the verifier that matches the document kind.
MagicReport verify_document(const LabelingDocument& doc);

enum class RenderStyle { Tikz2d, Tikz3d, Dot, Csv };

RenderStyle render_style_from_string(const std::string& s);

/// Deterministic text output in caller coordinates. tikz2d needs d = 2 and
/// tikz3d needs d = 3; other dimensions throw UnsupportedDimension.
std::string render(const LabelingDocument& doc, RenderStyle style);

}  // namespace gridmagic
