#include <algorithm>
#include <set>

#include "doctest.h"
#include "gridmagic/labeling.hpp"
#include "oracle_support.hpp"

using namespace gridmagic;

namespace {

GridSpec grid(std::vector<std::int64_t> dims) { return GridSpec::from_canonical(std::move(dims)); }

bool is_range_permutation(std::vector<std::int64_t> v) {
  std::sort(v.begin(), v.end());
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != static_cast<std::int64_t>(i + 1)) return false;
  return true;
}

std::set<std::int64_t> distinct(const std::vector<std::int64_t>& v) { return {v.begin(), v.end()}; }

std::vector<std::int64_t> dims_of(const GridSpec& g) { return {g.dims().begin(), g.dims().end()}; }

std::int64_t single_sum(const std::vector<std::int64_t>& sums) {
  const auto d = distinct(sums);
  REQUIRE(d.size() == 1);
  return *d.begin();
}

}  // namespace

TEST_CASE("extended vertex labeling on Grid(5,3,3) matches the pictured subcube") {
  const auto f = extend_vertex_labeling(base_vertex_labeling(5, 3), 3);
  CHECK(f.at({{2, 1, 2}}) == 27);
  CHECK(f.at({{3, 1, 1}}) == 7);
  CHECK(f.at({{2, 2, 1}}) == 5);
  CHECK(f.at({{3, 2, 1}}) == 38);
  CHECK(f.at({{2, 1, 1}}) == 42);
  CHECK(f.at({{3, 1, 2}}) == 22);
  CHECK(f.at({{2, 2, 2}}) == 20);
  CHECK(f.at({{3, 2, 2}}) == 23);

  std::int64_t s = 0;
  for (const auto& v : cube_vertices(f.spec, {{{2, 1, 1}}})) s += f.at(v);
  CHECK(s == 184);
  CHECK(distinct(oracle::cube_sums({5, 3, 3}, &f.labels, nullptr)) == std::set<std::int64_t>{184});
}

TEST_CASE("extended edge labeling on Grid(5,3,3) matches the pictured subcube") {
  const auto g = extend_edge_labeling(base_vertex_labeling(5, 3), base_edge_labeling(5, 3), 3);
  // Connecting edges.
  CHECK(g.at({{{2, 1, 1}}, 3}) == 78);
  CHECK(g.at({{{3, 1, 1}}, 3}) == 88);
  CHECK(g.at({{{3, 2, 1}}, 3}) == 74);
  CHECK(g.at({{{2, 2, 1}}, 3}) == 86);
  // In-layer edges.
  CHECK(g.at({{{2, 1, 1}}, 1}) == 15);
  CHECK(g.at({{{3, 1, 1}}, 2}) == 55);
  CHECK(g.at({{{2, 2, 1}}, 1}) == 14);
  CHECK(g.at({{{2, 1, 1}}, 2}) == 50);
  CHECK(g.at({{{2, 1, 2}}, 1}) == 37);
  CHECK(g.at({{{3, 1, 2}}, 2}) == 33);
  CHECK(g.at({{{2, 2, 2}}, 1}) == 36);
  CHECK(g.at({{{2, 1, 2}}, 2}) == 28);

  std::int64_t s = 0;
  for (const auto& e : cube_edges(g.spec, {{{2, 1, 1}}})) s += g.at(e);
  CHECK(s == 594);
  CHECK(is_range_permutation(g.labels));
  CHECK(distinct(oracle::cube_sums({5, 3, 3}, nullptr, &g.labels)) == std::set<std::int64_t>{594});
}

TEST_CASE("Q_3 uses every label once") {
  const auto p = build_labelings(grid({2, 2, 2}));
  CHECK(is_range_permutation(p.vertex.labels));
  CHECK(is_range_permutation(p.edge.labels));
  CHECK(p.vertex.labels.size() == 8);
  CHECK(p.edge.labels.size() == 12);
  CHECK(oracle::cube_sums({2, 2, 2}, &p.vertex.labels, nullptr) == std::vector<std::int64_t>{36});
  CHECK(oracle::cube_sums({2, 2, 2}, nullptr, &p.edge.labels) == std::vector<std::int64_t>{78});
}

TEST_CASE("build_labelings sums on the worked examples") {
  auto p = build_labelings(grid({5, 3}));
  CHECK(single_sum(oracle::cube_sums({5, 3}, &p.vertex.labels, nullptr)) == 32);
  CHECK(single_sum(oracle::cube_sums({5, 3}, nullptr, &p.edge.labels)) == 46);

  p = build_labelings(grid({5, 3, 3}));
  CHECK(single_sum(oracle::cube_sums({5, 3, 3}, &p.vertex.labels, nullptr)) == 184);
  CHECK(single_sum(oracle::cube_sums({5, 3, 3}, nullptr, &p.edge.labels)) == 594);

  p = build_labelings(grid({2, 2, 2, 2}));
  CHECK(oracle::cube_sums({2, 2, 2, 2}, &p.vertex.labels, nullptr) == std::vector<std::int64_t>{136});
  CHECK(oracle::cube_sums({2, 2, 2, 2}, nullptr, &p.edge.labels) == std::vector<std::int64_t>{528});
}

TEST_CASE("constructions in d = 4 and d = 5 are magic under brute-force scanning") {
  for (auto dims : {std::vector<std::int64_t>{3, 3, 2, 2}, {4, 3, 3, 2}, {3, 3, 3, 3}, {3, 2, 2, 2, 2},
                    {3, 3, 3, 2, 2}}) {
    CAPTURE(dims.size());
    const auto p = build_labelings(grid(dims));
    CHECK(is_range_permutation(p.vertex.labels));
    CHECK(is_range_permutation(p.edge.labels));
    CHECK(distinct(oracle::cube_sums(dims, &p.vertex.labels, nullptr)).size() == 1);
    CHECK(distinct(oracle::cube_sums(dims, nullptr, &p.edge.labels)).size() == 1);
  }
}

TEST_CASE("connecting and in-layer labels occupy their blocks") {
  for (auto dims : {std::vector<std::int64_t>{5, 3, 3}, {4, 4, 2}, {3, 3, 3, 3}, {5, 4, 3, 2, 2}}) {
    const auto spec = grid(dims);
    const auto p = build_labelings(spec);
    const auto layer = LayerCounts::of(spec.drop_last());
    const std::int64_t nd = dims.back();
    const std::int64_t split = nd * layer.edges;
    std::int64_t lo_conn = INT64_MAX, hi_conn = INT64_MIN, lo_in = INT64_MAX, hi_in = INT64_MIN;
    const std::int64_t conn_start = spec.edge_offset(dims.size());
    for (std::int64_t r = 0; r < spec.edge_count(); ++r) {
      const auto label = p.edge.labels[static_cast<std::size_t>(r)];
      if (r >= conn_start) {
        lo_conn = std::min(lo_conn, label);
        hi_conn = std::max(hi_conn, label);
      } else {
        lo_in = std::min(lo_in, label);
        hi_in = std::max(hi_in, label);
      }
    }
    CHECK(spec.edge_count() - conn_start == (nd - 1) * layer.vertices);
    CHECK(lo_conn == split + 1);
    CHECK(hi_conn == split + (nd - 1) * layer.vertices);
    CHECK(lo_in == 1);
    CHECK(hi_in == split);
    CHECK(is_range_permutation(p.edge.labels));
  }
}

TEST_CASE("per-part edge sums inside every cube") {
  for (auto dims : {std::vector<std::int64_t>{5, 3, 3}, {4, 3, 3}, {4, 3, 2, 2}, {3, 3, 3, 3}, {3, 3, 2, 2, 2}}) {
    const auto spec = grid(dims);
    const std::size_t d = dims.size();
    const auto base = spec.drop_last();
    const auto base_pair = build_labelings(base);
    const auto base_dims = dims_of(base);
    const std::int64_t s = single_sum(oracle::cube_sums(base_dims, &base_pair.vertex.labels, nullptr));
    const std::int64_t s_edge = single_sum(oracle::cube_sums(base_dims, nullptr, &base_pair.edge.labels));
    const std::int64_t n = base.vertex_count();
    const std::int64_t m = base.edge_count();
    const std::int64_t nd = dims.back();
    const std::int64_t p2 = std::int64_t{1} << (d - 2);

    const auto g = extend_edge_labeling(base_pair.vertex, base_pair.edge, nd);
    const auto f = extend_vertex_labeling(base_pair.vertex, nd);
    const std::int64_t want_e2 = s + 2 * p2 * nd * m + p2 * (nd - 2) * n;
    // (d-1) 2^(d-3) (nd-1) M, written to stay integral at d = 3.
    const std::int64_t want_layer = s_edge + static_cast<std::int64_t>(d - 1) * p2 * (nd - 1) * m / 2;
    const std::int64_t want_f = 2 * s + 2 * p2 * (nd - 1) * n;

    for (const auto& cube : enumerate_cubes(spec)) {
      std::int64_t e0 = 0, e1 = 0, e2 = 0, fv = 0;
      for (const auto& e : cube_edges(spec, cube)) {
        if (e.axis == static_cast<int>(d))
          e2 += g.at(e);
        else if (e.base.x[d - 1] == cube.corner.x[d - 1])
          e0 += g.at(e);
        else
          e1 += g.at(e);
      }
      for (const auto& v : cube_vertices(spec, cube)) fv += f.at(v);
      REQUIRE(e2 == want_e2);
      REQUIRE(e0 == want_layer);
      REQUIRE(e1 == want_layer);
      REQUIRE(fv == want_f);
    }
  }
}

TEST_CASE("build_labelings visits one level per dimension and each level is magic") {
  for (auto dims : {std::vector<std::int64_t>{5, 3}, {5, 3, 3}, {4, 3, 3, 2}, {3, 3, 2, 2, 2, 2}}) {
    int levels = 0;
    build_labelings(grid(dims), [&](const VertexLabeling& f, const EdgeLabeling& g) {
      ++levels;
      const auto ld = dims_of(f.spec);
      CHECK(ld.size() == static_cast<std::size_t>(levels + 1));
      CHECK(is_range_permutation(f.labels));
      CHECK(is_range_permutation(g.labels));
      CHECK(distinct(oracle::cube_sums(ld, &f.labels, nullptr)).size() == 1);
      CHECK(distinct(oracle::cube_sums(ld, nullptr, &g.labels)).size() == 1);
    });
    // Base level plus d - 2 extensions.
    CHECK(levels == static_cast<int>(dims.size()) - 1);
  }
}

TEST_CASE("extension preconditions") {
  const auto f = base_vertex_labeling(5, 3);
  const auto g = base_edge_labeling(5, 3);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    FAIL("expected an error");
    return ErrorCode::Overflow;
  };
  CHECK(code_of([&] { extend_vertex_labeling(f, 4); }) == ErrorCode::DimensionOrderViolation);
  CHECK(code_of([&] { extend_edge_labeling(f, g, 4); }) == ErrorCode::DimensionOrderViolation);
  CHECK(code_of([&] { extend_vertex_labeling(f, 1); }) == ErrorCode::DimensionTooSmall);
  const auto g_other = base_edge_labeling(4, 3);
  CHECK(code_of([&] { extend_edge_labeling(f, g_other, 2); }) == ErrorCode::SpecMismatch);
  CHECK(code_of([&] { combine_supermagic(f, g_other); }) == ErrorCode::SpecMismatch);
}

TEST_CASE("n_d = 2 needs no special case") {
  const auto p = build_labelings(grid({6, 5, 2}));
  CHECK(is_range_permutation(p.vertex.labels));
  CHECK(is_range_permutation(p.edge.labels));
  CHECK(distinct(oracle::cube_sums({6, 5, 2}, &p.vertex.labels, nullptr)).size() == 1);
  CHECK(distinct(oracle::cube_sums({6, 5, 2}, nullptr, &p.edge.labels)).size() == 1);
}

TEST_CASE("combine_supermagic shifts edge labels by |V|") {
  const auto p = build_labelings(grid({5, 3}));
  const auto t = combine_supermagic(p.vertex, p.edge);
  CHECK(t.vertex_labels == p.vertex.labels);
  for (std::size_t k = 0; k < t.edge_labels.size(); ++k) CHECK(t.edge_labels[k] == p.edge.labels[k] + 15);
  // First (i,j)-(i,j+1) edge carries 1 + 15.
  CHECK(t.edge_labels[static_cast<std::size_t>(edge_rank(t.spec, {{{1, 1}}, 2}))] == 16);
  CHECK(distinct(oracle::cube_sums({5, 3}, &t.vertex_labels, &t.edge_labels)) == std::set<std::int64_t>{138});

  const auto p3 = build_labelings(grid({5, 3, 3}));
  const auto t3 = combine_supermagic(p3.vertex, p3.edge);
  CHECK(distinct(oracle::cube_sums({5, 3, 3}, &t3.vertex_labels, &t3.edge_labels)) ==
        std::set<std::int64_t>{1318});
}
