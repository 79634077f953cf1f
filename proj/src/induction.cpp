#include <string>

#include "gridmagic/labeling.hpp"

namespace gridmagic {

namespace {

GridSpec extended_spec(const GridSpec& base, std::int64_t nd) {
  if (nd < 2) throw Error(ErrorCode::DimensionTooSmall, "new side must be at least 2, got " + std::to_string(nd));
  const auto dims = base.dims();
  if (nd > dims.back())
    throw Error(ErrorCode::DimensionOrderViolation,
                "new side " + std::to_string(nd) + " exceeds last side " + std::to_string(dims.back()));
  std::vector<std::int64_t> next(dims.begin(), dims.end());
  next.push_back(nd);
  return GridSpec::from_canonical(std::move(next));
}

}  // namespace

VertexLabeling extend_vertex_labeling(const VertexLabeling& base, std::int64_t nd) {
  auto spec = extended_spec(base.spec, nd);
  const std::int64_t layer = base.spec.vertex_count();
  const auto parity = coordinate_sum_parity(base.spec.dims());
  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(spec.vertex_count()));
  // New rank = base rank * nd + (x_d - 1).
  for (std::size_t r = 0; r < base.labels.size(); ++r) {
    const bool even = parity[r] == 0;
    for (std::int64_t xd = 1; xd <= nd; ++xd)
      labels.push_back(base.labels[r] + (even ? xd - 1 : nd - xd) * layer);
  }
  return {std::move(spec), std::move(labels)};
}

EdgeLabeling extend_edge_labeling(const VertexLabeling& base_f, const EdgeLabeling& base_g, std::int64_t nd) {
  if (!(base_f.spec == base_g.spec)) throw Error(ErrorCode::SpecMismatch, "vertex and edge labelings differ in grid");
  const GridSpec& base = base_f.spec;
  auto spec = extended_spec(base, nd);
  const std::size_t d = spec.dimension();
  const auto [layer_n, layer_m] = LayerCounts::of(base);

  std::vector<std::int64_t> labels(static_cast<std::size_t>(spec.edge_count()));

  // In-layer edges along axis a <= d-1. Within an axis block the new rank is
  // base rank * nd + (x_d - 1), since axis d is the fastest-varying one.
  auto up = [&](std::int64_t xd) { return (xd - 1) * layer_m; };
  auto down = [&](std::int64_t xd) { return (nd - xd) * layer_m; };

  std::vector<std::uint8_t> prefix_parity;
  std::int64_t last_run = 1;
  if (d % 2 == 0) {
    // Axis d-1 edges: parity of x_1 + ... + x_{d-2} over the prefix grid.
    const auto dims = base.dims();
    prefix_parity = coordinate_sum_parity(dims.first(d - 2));
    last_run = dims[d - 2] - 1;
  }

  for (std::size_t a = 1; a + 1 <= d; ++a) {
    const std::int64_t base_off = base.edge_offset(a);
    const std::int64_t new_off = spec.edge_offset(a);
    const std::int64_t count = base.edges_along(a);
    const bool by_prefix = d % 2 == 0 && a == d - 1;
    for (std::int64_t r = 0; r < count; ++r) {
      const std::int64_t g = base_g.labels[static_cast<std::size_t>(base_off + r)];
      bool ascending;
      if (by_prefix)
        ascending = prefix_parity[static_cast<std::size_t>(r / last_run)] == 1;
      else
        ascending = a % 2 == 1;
      auto* out = &labels[static_cast<std::size_t>(new_off + r * nd)];
      for (std::int64_t xd = 1; xd <= nd; ++xd) out[xd - 1] = g + (ascending ? up(xd) : down(xd));
    }
  }

  // Connecting edges {x, x + e_d}; new rank = base vertex rank * (nd-1) + (x_d-1).
  const auto parity = coordinate_sum_parity(base.dims());
  const std::int64_t conn_off = spec.edge_offset(d);
  const std::int64_t shift = nd * layer_m;
  for (std::size_t r = 0; r < base_f.labels.size(); ++r) {
    const std::int64_t f = base_f.labels[r] + shift;
    const bool odd = parity[r] == 1;
    auto* out = &labels[static_cast<std::size_t>(conn_off) + r * static_cast<std::size_t>(nd - 1)];
    for (std::int64_t xd = 1; xd < nd; ++xd) out[xd - 1] = f + (odd ? xd - 1 : nd - 1 - xd) * layer_n;
  }
  return {std::move(spec), std::move(labels)};
}

LabelingPair build_labelings(const GridSpec& spec, const LevelHook& hook) {
  const auto dims = spec.dims();
  LabelingPair cur{base_vertex_labeling(dims[0], dims[1]), base_edge_labeling(dims[0], dims[1])};
  for (std::size_t k = 2; k < dims.size(); ++k) {
    if (hook) hook(cur.vertex, cur.edge);
    // The edge step reads the old vertex labeling, so it runs first.
    auto g = extend_edge_labeling(cur.vertex, cur.edge, dims[k]);
    auto f = extend_vertex_labeling(cur.vertex, dims[k]);
    cur = {std::move(f), std::move(g)};
  }
  if (hook) hook(cur.vertex, cur.edge);
  return cur;
}

TotalLabeling combine_supermagic(const VertexLabeling& f, const EdgeLabeling& g) {
  if (!(f.spec == g.spec)) throw Error(ErrorCode::SpecMismatch, "vertex and edge labelings differ in grid");
  if (f.labels.size() != static_cast<std::size_t>(f.spec.vertex_count()) ||
      g.labels.size() != static_cast<std::size_t>(g.spec.edge_count()))
    throw Error(ErrorCode::SpecMismatch, "label array size does not match grid");
  std::vector<std::int64_t> edges = g.labels;
  const std::int64_t shift = f.spec.vertex_count();
  for (auto& e : edges) e += shift;
  return {f.spec, f.labels, std::move(edges)};
}

}  // namespace gridmagic
