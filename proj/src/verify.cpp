#include "gridmagic/verify.hpp"

#include <algorithm>
#include <thread>

#include "gridmagic/checked.hpp"

namespace gridmagic {

const char* to_string(LabelKind kind) {
  switch (kind) {
    case LabelKind::Vertex: return "vertex";
    case LabelKind::Edge: return "edge";
    case LabelKind::Total: return "total";
  }
  return "unknown";
}

LabelKind label_kind_from_string(const std::string& s) {
  if (s == "vertex") return LabelKind::Vertex;
  if (s == "edge") return LabelKind::Edge;
  if (s == "total") return LabelKind::Total;
  throw std::invalid_argument("unknown labeling kind '" + s + "'");
}

PredictedSums closed_form_sums(const GridSpec& spec) {
  const auto dims = spec.dims();
  const std::int64_t n1 = dims[0];
  const std::int64_t n2 = dims[1];
  const std::int64_t bump = (n1 % 2 == 0 && n2 % 2 == 1) ? 1 : 0;
  // S = 2(n1 n2 + 1 + bump), S' = (2n1 - 1)(2n2 - 1) + 1
  std::int64_t s = checked_mul(2, checked_add(checked_mul(n1, n2), 1 + bump));
  std::int64_t s_edge = checked_add(checked_mul(2 * n1 - 1, 2 * n2 - 1), 1);
  std::int64_t layer_n = n1 * n2;
  std::int64_t layer_m = 2 * n1 * n2 - n1 - n2;

  for (std::size_t k = 2; k < dims.size(); ++k) {
    const std::int64_t d = static_cast<std::int64_t>(k) + 1;
    const std::int64_t nd = dims[k];
    const std::int64_t p_lo = checked_pow2(d - 2);
    // c(f)  = 2S + 2^(d-1)(nd - 1) N
    const std::int64_t next_s =
        checked_add(checked_mul(2, s), checked_mul(checked_mul(2 * p_lo, nd - 1), layer_n));
    // c'(g) = S + 2S' + 2^(d-2)(nd - 2) N + 2^(d-2)(2nd + (d-1)(nd-1)) M
    const std::int64_t m_coeff = checked_add(2 * nd, checked_mul(d - 1, nd - 1));
    std::int64_t next_edge = checked_add(s, checked_mul(2, s_edge));
    next_edge = checked_add(next_edge, checked_mul(checked_mul(p_lo, nd - 2), layer_n));
    next_edge = checked_add(next_edge, checked_mul(checked_mul(p_lo, m_coeff), layer_m));
    // M_d = nd M + (nd - 1) N, N_d = nd N
    layer_m = checked_add(checked_mul(nd, layer_m), checked_mul(nd - 1, layer_n));
    layer_n = checked_mul(nd, layer_n);
    s = next_s;
    s_edge = next_edge;
  }

  const std::int64_t d = static_cast<std::int64_t>(dims.size());
  const std::int64_t cube_edges = checked_mul(d, checked_pow2(d - 1));
  const std::int64_t c_total = checked_add(checked_add(s, s_edge), checked_mul(cube_edges, spec.vertex_count()));
  return {s, s_edge, c_total};
}

std::vector<std::int64_t> cube_sums(const GridSpec& spec, const std::vector<std::int64_t>* vertex_labels,
                                    const std::vector<std::int64_t>* edge_labels) {
  const CubeIndexer indexer(spec);
  const std::int64_t cubes = spec.cube_count();
  std::vector<std::int64_t> sums(static_cast<std::size_t>(cubes));
  const std::int64_t work_per_cube =
      static_cast<std::int64_t>(indexer.vertices_per_cube() + indexer.edges_per_cube());

  auto scan = [&](std::int64_t begin, std::int64_t end) {
    std::int64_t k = begin;
    indexer.for_each(begin, end, [&](std::span<const std::int64_t> vr, std::span<const std::int64_t> er) {
      std::int64_t s = 0;
      if (vertex_labels)
        for (auto r : vr) s = checked_add(s, (*vertex_labels)[static_cast<std::size_t>(r)], "cube sum");
      if (edge_labels)
        for (auto r : er) s = checked_add(s, (*edge_labels)[static_cast<std::size_t>(r)], "cube sum");
      sums[static_cast<std::size_t>(k++)] = s;
    });
  };

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::int64_t total_work = cubes * work_per_cube;
  const std::int64_t shards = std::min<std::int64_t>(hw, std::max<std::int64_t>(1, total_work / (1 << 20)));
  if (shards <= 1) {
    scan(0, cubes);
    return sums;
  }
  std::vector<std::jthread> workers;
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(shards));
  for (std::int64_t t = 0; t < shards; ++t) {
    workers.emplace_back([&, t] {
      try {
        scan(cubes * t / shards, cubes * (t + 1) / shards);
      } catch (...) {
        errors[static_cast<std::size_t>(t)] = std::current_exception();
      }
    });
  }
  workers.clear();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return sums;
}

namespace {

bool is_permutation_of_range(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>* b) {
  const std::size_t n = a.size() + (b ? b->size() : 0);
  std::vector<std::uint8_t> seen(n + 1, 0);
  auto mark = [&](std::int64_t v) {
    if (v < 1 || static_cast<std::uint64_t>(v) > n || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
    return true;
  };
  for (auto v : a)
    if (!mark(v)) return false;
  if (b)
    for (auto v : *b)
      if (!mark(v)) return false;
  return true;
}

void fill_sums(MagicReport& report, std::vector<std::int64_t> sums) {
  std::sort(sums.begin(), sums.end());
  sums.erase(std::unique(sums.begin(), sums.end()), sums.end());
  report.distinct_sums = static_cast<std::int64_t>(sums.size());
  report.magic = sums.size() == 1;
  if (report.magic) report.magic_sum = sums.front();
  if (sums.size() > MagicReport::kMaxListedSums) sums.resize(MagicReport::kMaxListedSums);
  report.cube_sum_values = std::move(sums);
}

void fill_prediction(MagicReport& report, const GridSpec& spec) {
  try {
    const auto p = closed_form_sums(spec);
    switch (report.kind) {
      case LabelKind::Vertex: report.predicted_sum = p.c_vertex; break;
      case LabelKind::Edge: report.predicted_sum = p.c_edge; break;
      case LabelKind::Total: report.predicted_sum = p.c_total; break;
    }
  } catch (const Error&) {
    return;
  }
  report.matches_prediction = report.magic && report.magic_sum == report.predicted_sum;
}

void require_same(const GridSpec& spec, const GridSpec& other, std::size_t have, std::int64_t want) {
  if (!(spec == other)) throw Error(ErrorCode::SpecMismatch, "labeling belongs to a different grid");
  if (have != static_cast<std::size_t>(want)) throw Error(ErrorCode::SpecMismatch, "label count does not match grid");
}

}  // namespace

MagicReport verify_vertex_magic(const GridSpec& spec, const VertexLabeling& f) {
  require_same(spec, f.spec, f.labels.size(), spec.vertex_count());
  MagicReport report;
  report.kind = LabelKind::Vertex;
  report.bijective = is_permutation_of_range(f.labels, nullptr);
  fill_sums(report, cube_sums(spec, &f.labels, nullptr));
  fill_prediction(report, spec);
  return report;
}

MagicReport verify_edge_magic(const GridSpec& spec, const EdgeLabeling& g) {
  require_same(spec, g.spec, g.labels.size(), spec.edge_count());
  MagicReport report;
  report.kind = LabelKind::Edge;
  report.bijective = is_permutation_of_range(g.labels, nullptr);
  fill_sums(report, cube_sums(spec, nullptr, &g.labels));
  fill_prediction(report, spec);
  return report;
}

MagicReport verify_supermagic(const GridSpec& spec, const TotalLabeling& total) {
  require_same(spec, total.spec, total.vertex_labels.size(), spec.vertex_count());
  require_same(spec, total.spec, total.edge_labels.size(), spec.edge_count());
  MagicReport report;
  report.kind = LabelKind::Total;
  report.bijective = is_permutation_of_range(total.vertex_labels, &total.edge_labels);
  report.vertex_range_ok = is_permutation_of_range(total.vertex_labels, nullptr);
  fill_sums(report, cube_sums(spec, &total.vertex_labels, &total.edge_labels));
  fill_prediction(report, spec);
  return report;
}

}  // namespace gridmagic
