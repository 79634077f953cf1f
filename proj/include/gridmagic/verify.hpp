#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gridmagic/grid.hpp"
#include "gridmagic/labeling.hpp"

namespace gridmagic {

enum class LabelKind { Vertex, Edge, Total };

const char* to_string(LabelKind kind);
LabelKind label_kind_from_string(const std::string& s);

/// Outcome of scanning every unit cube of a grid under a labeling.
struct MagicReport {
  static constexpr std::size_t kMaxListedSums = 32;

  LabelKind kind = LabelKind::Vertex;
  /// Labels form a bijection onto [|V|], [|E|] or [|V| + |E|] by kind.
  bool bijective = false;
  /// Total kind only: F(V) = [|V|].
  std::optional<bool> vertex_range_ok;
  /// Smallest distinct cube sums, ascending, at most kMaxListedSums of them.
  std::vector<std::int64_t> cube_sum_values;
  std::int64_t distinct_sums = 0;
  bool magic = false;
  std::optional<std::int64_t> magic_sum;
  std::optional<std::int64_t> predicted_sum;
  std::optional<bool> matches_prediction;

  bool accepted() const { return bijective && vertex_range_ok.value_or(true) && magic; }

  friend bool operator==(const MagicReport&, const MagicReport&) = default;
};

struct PredictedSums {
  std::int64_t c_vertex = 0;
  std::int64_t c_edge = 0;
  std::int64_t c_total = 0;

  friend bool operator==(const PredictedSums&, const PredictedSums&) = default;
};

/// Magic sums the construction produces, by pure arithmetic: the d = 2 base
/// sums, then the induction recurrences up to d. Throws Overflow.
PredictedSums closed_form_sums(const GridSpec& spec);

// The verifiers accept any labeling sized for the grid; they throw
// SpecMismatch when the labeling belongs to another grid or has the wrong
// number of labels. Cube scanning is split across threads for large grids;
// the report does not depend on the split.

MagicReport verify_vertex_magic(const GridSpec& spec, const VertexLabeling& f);
MagicReport verify_edge_magic(const GridSpec& spec, const EdgeLabeling& g);
MagicReport verify_supermagic(const GridSpec& spec, const TotalLabeling& total);

/// Per-cube sums in enumerate_cubes order. Exposed for diagnostics and tests.
std::vector<std::int64_t> cube_sums(const GridSpec& spec, const std::vector<std::int64_t>* vertex_labels,
                                    const std::vector<std::int64_t>* edge_labels);

}  // namespace gridmagic
