#include "gridmagic/labeling.hpp"

namespace gridmagic {

namespace {

GridSpec base_spec(std::int64_t n1, std::int64_t n2) { return GridSpec::from_canonical({n1, n2}); }

}  // namespace

VertexLabeling base_vertex_labeling(std::int64_t n1, std::int64_t n2) {
  auto spec = base_spec(n1, n2);
  // [2 | n1 and 2 does not divide n2]
  const std::int64_t ind = (n1 % 2 == 0 && n2 % 2 == 1) ? 1 : 0;
  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(spec.vertex_count()));
  for (std::int64_t i = 1; i <= n1; ++i) {
    const bool i_odd = i % 2 == 1;
    for (std::int64_t j = 1; j <= n2; ++j) {
      const bool j_odd = j % 2 == 1;
      std::int64_t f;
      if (i_odd && j_odd)
        f = (i - 1) * n2 + j;
      else if (!i_odd && !j_odd)
        f = (i - 1) * n2 + (n2 + 1 - j);
      else if (i_odd)
        f = (n1 - i) * n2 + j + ind;
      else
        f = (n1 - i) * n2 + (n2 + 1 - j) + ind;
      labels.push_back(f);
    }
  }
  return {std::move(spec), std::move(labels)};
}

EdgeLabeling base_edge_labeling(std::int64_t n1, std::int64_t n2) {
  auto spec = base_spec(n1, n2);
  std::vector<std::int64_t> labels;
  labels.reserve(static_cast<std::size_t>(spec.edge_count()));
  // Axis 1: {(i,j), (i+1,j)}, bases over [n1-1] x [n2].
  for (std::int64_t i = 1; i < n1; ++i)
    for (std::int64_t j = 1; j <= n2; ++j) labels.push_back((n1 - i) * (2 * n2 - 1) + 1 - j);
  // Axis 2: {(i,j), (i,j+1)}, bases over [n1] x [n2-1].
  for (std::int64_t i = 1; i <= n1; ++i)
    for (std::int64_t j = 1; j < n2; ++j) labels.push_back((i - 1) * (2 * n2 - 1) + j);
  return {std::move(spec), std::move(labels)};
}

}  // namespace gridmagic
