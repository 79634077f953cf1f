#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gridmagic/error.hpp"

namespace gridmagic {

/// The grid graph Grid(n_1, ..., n_d): vertices are the lattice points of
/// [n_1] x ... x [n_d], edges join points at L1 distance one.
///
/// A GridSpec is always canonical: d >= 2, every side >= 2, and the sides are
/// non-increasing. Use canonicalize() to get there from caller order. Axes are
/// numbered from 1 everywhere in the public API.
class GridSpec {
 public:
  /// Accepts dims that are already canonical. Throws DimensionTooSmall,
  /// DimensionOrderViolation, or Overflow (when |V| + |E| exceeds 2^62).
  static GridSpec from_canonical(std::vector<std::int64_t> dims);

  std::size_t dimension() const noexcept { return dims_.size(); }
  std::span<const std::int64_t> dims() const noexcept { return dims_; }
  std::int64_t side(std::size_t axis) const { return dims_.at(axis - 1); }

  std::int64_t vertex_count() const noexcept { return vertex_count_; }
  std::int64_t edge_count() const noexcept { return edge_offsets_.back(); }
  std::int64_t cube_count() const noexcept { return cube_count_; }

  /// Number of edges parallel to `axis`.
  std::int64_t edges_along(std::size_t axis) const;
  /// Position of the first edge parallel to `axis` in enumerate_edges order.
  std::int64_t edge_offset(std::size_t axis) const { return edge_offsets_.at(axis - 1); }

  /// Grid(n_1, ..., n_{d-1}). Requires d >= 3.
  GridSpec drop_last() const;

  friend bool operator==(const GridSpec& a, const GridSpec& b) { return a.dims_ == b.dims_; }

 private:
  explicit GridSpec(std::vector<std::int64_t> dims);

  std::vector<std::int64_t> dims_;
  std::int64_t vertex_count_ = 0;
  std::int64_t cube_count_ = 0;
  std::vector<std::int64_t> edge_offsets_;  // size d + 1
};

struct Canonicalized {
  GridSpec spec;
  /// axis_permutation[a - 1] is the canonical axis of caller axis a (1-based).
  std::vector<int> axis_permutation;
};

/// Stable descending sort of the caller's side lengths.
Canonicalized canonicalize(std::span<const std::int64_t> dims);

/// A lattice point, coordinates 1-based.
struct VertexCoord {
  std::vector<std::int64_t> x;

  friend bool operator==(const VertexCoord&, const VertexCoord&) = default;
  friend auto operator<=>(const VertexCoord&, const VertexCoord&) = default;
};

/// The edge {base, base + e_axis}; base is the lexicographically smaller end.
struct EdgeId {
  VertexCoord base;
  int axis = 1;

  friend bool operator==(const EdgeId&, const EdgeId&) = default;
  friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

/// The unit subcube {corner + eps : eps in {0,1}^d}.
struct CubeId {
  VertexCoord corner;

  friend bool operator==(const CubeId&, const CubeId&) = default;
};

bool is_valid_vertex(const GridSpec& spec, const VertexCoord& v);
bool is_valid_edge(const GridSpec& spec, const EdgeId& e);
bool is_valid_cube(const GridSpec& spec, const CubeId& c);

/// Row-major rank, last axis fastest. Throws CoordOutOfRange.
std::int64_t vertex_rank(const GridSpec& spec, const VertexCoord& v);
VertexCoord vertex_unrank(const GridSpec& spec, std::int64_t rank);

/// Position in enumerate_edges order. Throws CoordOutOfRange.
std::int64_t edge_rank(const GridSpec& spec, const EdgeId& e);
EdgeId edge_unrank(const GridSpec& spec, std::int64_t rank);

/// Grouped by axis ascending, bases row-major within each axis.
std::vector<EdgeId> enumerate_edges(const GridSpec& spec);

/// Corners in row-major order over [n_1 - 1] x ... x [n_d - 1].
std::vector<CubeId> enumerate_cubes(const GridSpec& spec);

/// The 2^d vertices of a cube, in increasing rank.
std::vector<VertexCoord> cube_vertices(const GridSpec& spec, const CubeId& cube);

/// The d * 2^(d-1) edges of a cube, in increasing edge rank.
std::vector<EdgeId> cube_edges(const GridSpec& spec, const CubeId& cube);

/// True iff every edge lies in at least one unit cube. Checked by marking.
bool check_h_covering(const GridSpec& spec);

/// Parity of x_1 + ... + x_k for every point of [dims_1] x ... x [dims_k],
/// in row-major order. Works for any k >= 1 and any positive sides.
std::vector<std::uint8_t> coordinate_sum_parity(std::span<const std::int64_t> dims);

/// Precomputed rank offsets for scanning every unit cube without building
/// coordinate objects. visit(vertex_ranks, edge_ranks) sees 2^d vertex ranks
/// and d * 2^(d-1) edge ranks; edge ranks are grouped by axis.
class CubeIndexer {
 public:
  explicit CubeIndexer(const GridSpec& spec);

  std::size_t vertices_per_cube() const noexcept { return vertex_deltas_.size(); }
  std::size_t edges_per_cube() const noexcept { return edge_deltas_.size(); }

  template <class Visit>
  void for_each(std::int64_t begin, std::int64_t end, Visit&& visit) const {
    const std::size_t d = corner_sides_.size();
    std::vector<std::int64_t> corner(d);
    std::vector<std::int64_t> vranks(vertex_deltas_.size());
    std::vector<std::int64_t> eranks(edge_deltas_.size());
    for (std::int64_t k = begin; k < end; ++k) {
      std::int64_t rest = k;
      for (std::size_t i = d; i-- > 0;) {
        corner[i] = rest % corner_sides_[i];
        rest /= corner_sides_[i];
      }
      std::int64_t vbase = 0;
      for (std::size_t i = 0; i < d; ++i) vbase += corner[i] * vertex_strides_[i];
      for (std::size_t j = 0; j < vranks.size(); ++j) vranks[j] = vbase + vertex_deltas_[j];
      const std::size_t per_axis = eranks.size() / d;
      for (std::size_t a = 0; a < d; ++a) {
        std::int64_t ebase = edge_offsets_[a];
        for (std::size_t i = 0; i < d; ++i) ebase += corner[i] * edge_strides_[a * d + i];
        for (std::size_t j = a * per_axis; j < (a + 1) * per_axis; ++j) eranks[j] = ebase + edge_deltas_[j];
      }
      visit(std::span<const std::int64_t>(vranks), std::span<const std::int64_t>(eranks));
    }
  }

 private:
  std::vector<std::int64_t> corner_sides_;
  std::vector<std::int64_t> vertex_strides_;
  std::vector<std::int64_t> vertex_deltas_;
  std::vector<std::int64_t> edge_offsets_;
  std::vector<std::int64_t> edge_strides_;  // d x d, row per axis
  std::vector<std::int64_t> edge_deltas_;
};

}  // namespace gridmagic
