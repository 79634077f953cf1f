#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "gridmagic/grid.hpp"

namespace gridmagic {

/// f : V -> [|V|], stored densely by vertex rank.
struct VertexLabeling {
  GridSpec spec;
  std::vector<std::int64_t> labels;

  std::int64_t at(const VertexCoord& v) const { return labels[static_cast<std::size_t>(vertex_rank(spec, v))]; }
};

/// g : E -> [|E|], stored densely in enumerate_edges order.
struct EdgeLabeling {
  GridSpec spec;
  std::vector<std::int64_t> labels;

  std::int64_t at(const EdgeId& e) const { return labels[static_cast<std::size_t>(edge_rank(spec, e))]; }
};

/// F : V u E -> [|V| + |E|] with vertex labels in [1, |V|] and edge labels
/// in [|V| + 1, |V| + |E|].
struct TotalLabeling {
  GridSpec spec;
  std::vector<std::int64_t> vertex_labels;
  std::vector<std::int64_t> edge_labels;
};

/// Vertex and edge counts of the (d-1)-dimensional layer grid.
struct LayerCounts {
  std::int64_t vertices = 0;  // N
  std::int64_t edges = 0;     // M

  static LayerCounts of(const GridSpec& layer) { return {layer.vertex_count(), layer.edge_count()}; }
};

// Base case d = 2.

/// Closed-form Q_2-magic vertex labeling of Grid(n1, n2), n1 >= n2 >= 2.
VertexLabeling base_vertex_labeling(std::int64_t n1, std::int64_t n2);

/// Closed-form Q_2-magic edge labeling of Grid(n1, n2), n1 >= n2 >= 2.
/// Edges (i,j)-(i,j+1) get (i-1)(2n2-1)+j, edges (i,j)-(i+1,j) get
/// (n1-i)(2n2-1)+1-j.
EdgeLabeling base_edge_labeling(std::int64_t n1, std::int64_t n2);

// Induction step d-1 -> d.

/// Lifts a vertex labeling of Grid(n_1..n_{d-1}) to Grid(n_1..n_{d-1}, nd).
/// Each layer x_d copies the base labeling shifted by a multiple of N; the
/// multiple runs up with x_d on even-sum base points and down on odd ones.
/// Throws DimensionTooSmall if nd < 2, DimensionOrderViolation if nd exceeds
/// the base's last side.
VertexLabeling extend_vertex_labeling(const VertexLabeling& base, std::int64_t nd);

/// Lifts (f~, g~) on Grid(n_1..n_{d-1}) to an edge labeling of the
/// d-dimensional grid. In-layer edges take [1, nd*M]; connecting edges
/// (parallel to axis d) take [nd*M + 1, nd*M + (nd-1)*N]. The in-layer shift
/// direction is chosen by the axis index when d is odd; when d is even, edges
/// along axis d-1 choose it by the parity of x_1 + ... + x_{d-2} instead.
/// Throws SpecMismatch if f~ and g~ are over different grids.
EdgeLabeling extend_edge_labeling(const VertexLabeling& base_f, const EdgeLabeling& base_g, std::int64_t nd);

struct LabelingPair {
  VertexLabeling vertex;
  EdgeLabeling edge;
};

/// Called once per dimension level (d = 2, 3, ..., target) with the
/// labelings built so far, before they are extended.
using LevelHook = std::function<void(const VertexLabeling&, const EdgeLabeling&)>;

/// Q_d-magic vertex and edge labelings for a canonical spec: the d = 2 base
/// case followed by d - 2 extension steps.
LabelingPair build_labelings(const GridSpec& spec, const LevelHook& hook = {});

/// F(v) = f(v), F(e) = g(e) + |V|. Throws SpecMismatch.
TotalLabeling combine_supermagic(const VertexLabeling& f, const EdgeLabeling& g);

}  // namespace gridmagic
