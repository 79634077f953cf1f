#include "gridmagic/grid.hpp"

#include <algorithm>
#include <numeric>

#include "gridmagic/checked.hpp"

namespace gridmagic {

namespace {

constexpr std::int64_t kMaxElements = std::int64_t{1} << 62;

// Row-major strides for the given sides, last axis fastest.
std::vector<std::int64_t> strides_of(std::span<const std::int64_t> sides) {
  std::vector<std::int64_t> s(sides.size());
  std::int64_t acc = 1;
  for (std::size_t i = sides.size(); i-- > 0;) {
    s[i] = acc;
    acc *= sides[i];
  }
  return s;
}

std::vector<std::int64_t> edge_sides(std::span<const std::int64_t> dims, std::size_t axis) {
  std::vector<std::int64_t> s(dims.begin(), dims.end());
  s[axis - 1] -= 1;
  return s;
}

std::int64_t rank_in(std::span<const std::int64_t> sides, const std::vector<std::int64_t>& x) {
  std::int64_t r = 0;
  for (std::size_t i = 0; i < sides.size(); ++i) r = r * sides[i] + (x[i] - 1);
  return r;
}

std::vector<std::int64_t> unrank_in(std::span<const std::int64_t> sides, std::int64_t r) {
  std::vector<std::int64_t> x(sides.size());
  for (std::size_t i = sides.size(); i-- > 0;) {
    x[i] = r % sides[i] + 1;
    r /= sides[i];
  }
  return x;
}

void require_vertex(const GridSpec& spec, const VertexCoord& v) {
  if (!is_valid_vertex(spec, v)) throw Error(ErrorCode::CoordOutOfRange, "vertex outside grid");
}

}  // namespace

GridSpec::GridSpec(std::vector<std::int64_t> dims) : dims_(std::move(dims)) {
  const std::size_t d = dims_.size();
  vertex_count_ = 1;
  cube_count_ = 1;
  for (auto n : dims_) {
    vertex_count_ = checked_mul(vertex_count_, n, "vertex count");
    cube_count_ = checked_mul(cube_count_, n - 1, "cube count");
  }
  edge_offsets_.assign(d + 1, 0);
  for (std::size_t a = 0; a < d; ++a) {
    const std::int64_t along = checked_mul(vertex_count_ / dims_[a], dims_[a] - 1, "edge count");
    edge_offsets_[a + 1] = checked_add(edge_offsets_[a], along, "edge count");
  }
  if (checked_add(vertex_count_, edge_offsets_.back(), "element count") > kMaxElements)
    throw Error(ErrorCode::Overflow, "|V| + |E| exceeds 2^62");
}

GridSpec GridSpec::from_canonical(std::vector<std::int64_t> dims) {
  if (dims.size() < 2) throw Error(ErrorCode::DimensionTooSmall, "need at least two dimensions");
  for (auto n : dims)
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "every side must be at least 2, got " + std::to_string(n));
  if (!std::is_sorted(dims.begin(), dims.end(), std::greater<>()))
    throw Error(ErrorCode::DimensionOrderViolation, "sides must be non-increasing");
  return GridSpec(std::move(dims));
}

std::int64_t GridSpec::edges_along(std::size_t axis) const {
  return edge_offsets_.at(axis) - edge_offsets_.at(axis - 1);
}

GridSpec GridSpec::drop_last() const {
  if (dims_.size() < 3) throw Error(ErrorCode::DimensionTooSmall, "cannot drop below two dimensions");
  return GridSpec(std::vector<std::int64_t>(dims_.begin(), dims_.end() - 1));
}

Canonicalized canonicalize(std::span<const std::int64_t> dims) {
  if (dims.size() < 2) throw Error(ErrorCode::DimensionTooSmall, "need at least two dimensions");
  for (auto n : dims)
    if (n < 2) throw Error(ErrorCode::DimensionTooSmall, "every side must be at least 2, got " + std::to_string(n));
  std::vector<std::size_t> order(dims.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dims[a] > dims[b]; });
  std::vector<std::int64_t> sorted(dims.size());
  std::vector<int> perm(dims.size());
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    sorted[pos] = dims[order[pos]];
    perm[order[pos]] = static_cast<int>(pos + 1);
  }
  return {GridSpec::from_canonical(std::move(sorted)), std::move(perm)};
}

bool is_valid_vertex(const GridSpec& spec, const VertexCoord& v) {
  if (v.x.size() != spec.dimension()) return false;
  for (std::size_t i = 0; i < v.x.size(); ++i)
    if (v.x[i] < 1 || v.x[i] > spec.dims()[i]) return false;
  return true;
}

bool is_valid_edge(const GridSpec& spec, const EdgeId& e) {
  if (e.axis < 1 || static_cast<std::size_t>(e.axis) > spec.dimension()) return false;
  if (!is_valid_vertex(spec, e.base)) return false;
  return e.base.x[e.axis - 1] <= spec.side(e.axis) - 1;
}

bool is_valid_cube(const GridSpec& spec, const CubeId& c) {
  if (!is_valid_vertex(spec, c.corner)) return false;
  for (std::size_t i = 0; i < spec.dimension(); ++i)
    if (c.corner.x[i] > spec.dims()[i] - 1) return false;
  return true;
}

std::int64_t vertex_rank(const GridSpec& spec, const VertexCoord& v) {
  require_vertex(spec, v);
  return rank_in(spec.dims(), v.x);
}

VertexCoord vertex_unrank(const GridSpec& spec, std::int64_t rank) {
  if (rank < 0 || rank >= spec.vertex_count()) throw Error(ErrorCode::CoordOutOfRange, "vertex rank out of range");
  return {unrank_in(spec.dims(), rank)};
}

std::int64_t edge_rank(const GridSpec& spec, const EdgeId& e) {
  if (!is_valid_edge(spec, e)) throw Error(ErrorCode::CoordOutOfRange, "edge outside grid");
  const auto axis = static_cast<std::size_t>(e.axis);
  return spec.edge_offset(axis) + rank_in(edge_sides(spec.dims(), axis), e.base.x);
}

EdgeId edge_unrank(const GridSpec& spec, std::int64_t rank) {
  if (rank < 0 || rank >= spec.edge_count()) throw Error(ErrorCode::CoordOutOfRange, "edge rank out of range");
  std::size_t axis = 1;
  while (rank >= spec.edge_offset(axis + 1)) ++axis;
  const auto local = rank - spec.edge_offset(axis);
  return {{unrank_in(edge_sides(spec.dims(), axis), local)}, static_cast<int>(axis)};
}

std::vector<EdgeId> enumerate_edges(const GridSpec& spec) {
  std::vector<EdgeId> out;
  out.reserve(static_cast<std::size_t>(spec.edge_count()));
  for (std::int64_t r = 0; r < spec.edge_count(); ++r) out.push_back(edge_unrank(spec, r));
  return out;
}

std::vector<CubeId> enumerate_cubes(const GridSpec& spec) {
  std::vector<std::int64_t> sides(spec.dims().begin(), spec.dims().end());
  for (auto& s : sides) s -= 1;
  std::vector<CubeId> out;
  out.reserve(static_cast<std::size_t>(spec.cube_count()));
  for (std::int64_t r = 0; r < spec.cube_count(); ++r) out.push_back({{unrank_in(sides, r)}});
  return out;
}

std::vector<VertexCoord> cube_vertices(const GridSpec& spec, const CubeId& cube) {
  if (!is_valid_cube(spec, cube)) throw Error(ErrorCode::CoordOutOfRange, "cube outside grid");
  const std::size_t d = spec.dimension();
  std::vector<VertexCoord> out;
  out.reserve(std::size_t{1} << d);
  // eps_1 is the most significant bit so the output is rank-ordered.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    VertexCoord v = cube.corner;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> (d - 1 - i) & 1) v.x[i] += 1;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<EdgeId> cube_edges(const GridSpec& spec, const CubeId& cube) {
  const auto verts = cube_vertices(spec, cube);
  const std::size_t d = spec.dimension();
  std::vector<EdgeId> out;
  out.reserve(d << (d - 1));
  for (std::size_t a = 1; a <= d; ++a)
    for (const auto& v : verts)
      if (v.x[a - 1] == cube.corner.x[a - 1]) out.push_back({v, static_cast<int>(a)});
  return out;
}

bool check_h_covering(const GridSpec& spec) {
  std::vector<std::uint8_t> covered(static_cast<std::size_t>(spec.edge_count()), 0);
  CubeIndexer(spec).for_each(0, spec.cube_count(), [&](auto, std::span<const std::int64_t> edges) {
    for (auto e : edges) covered[static_cast<std::size_t>(e)] = 1;
  });
  return std::all_of(covered.begin(), covered.end(), [](auto c) { return c != 0; });
}

std::vector<std::uint8_t> coordinate_sum_parity(std::span<const std::int64_t> dims) {
  std::int64_t total = 1;
  for (auto n : dims) total = checked_mul(total, n);
  std::vector<std::uint8_t> out(static_cast<std::size_t>(total));
  std::vector<std::int64_t> x(dims.size(), 1);
  std::uint8_t parity = static_cast<std::uint8_t>(dims.size() & 1);
  for (std::size_t r = 0; r < out.size(); ++r) {
    out[r] = parity;
    for (std::size_t i = dims.size(); i-- > 0;) {
      if (x[i] < dims[i]) {
        ++x[i];
        parity ^= 1;
        break;
      }
      // Reset x_i from n_i to 1 flips parity iff n_i - 1 is odd.
      parity ^= static_cast<std::uint8_t>((dims[i] - 1) & 1);
      x[i] = 1;
    }
  }
  return out;
}

CubeIndexer::CubeIndexer(const GridSpec& spec) {
  const std::size_t d = spec.dimension();
  const auto dims = spec.dims();
  corner_sides_.assign(dims.begin(), dims.end());
  for (auto& s : corner_sides_) s -= 1;
  vertex_strides_ = strides_of(dims);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
    std::int64_t delta = 0;
    for (std::size_t i = 0; i < d; ++i)
      if (mask >> (d - 1 - i) & 1) delta += vertex_strides_[i];
    vertex_deltas_.push_back(delta);
  }
  edge_strides_.assign(d * d, 0);
  for (std::size_t a = 0; a < d; ++a) {
    edge_offsets_.push_back(spec.edge_offset(a + 1));
    const auto sides = edge_sides(dims, a + 1);
    const auto strides = strides_of(sides);
    std::copy(strides.begin(), strides.end(), edge_strides_.begin() + static_cast<std::ptrdiff_t>(a * d));
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << d); ++mask) {
      if (mask >> (d - 1 - a) & 1) continue;
      std::int64_t delta = 0;
      for (std::size_t i = 0; i < d; ++i)
        if (mask >> (d - 1 - i) & 1) delta += strides[i];
      edge_deltas_.push_back(delta);
    }
  }
}

}  // namespace gridmagic
