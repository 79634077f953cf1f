#include "gridmagic/oracle.hpp"

#include <stdexcept>

#include "gridmagic/checked.hpp"
#include "gridmagic/labeling.hpp"
#include "gridmagic/verify.hpp"

namespace gridmagic {

const char* to_string(SearchMode mode) {
  switch (mode) {
    case SearchMode::Vertex: return "vertex";
    case SearchMode::Edge: return "edge";
    case SearchMode::Supermagic: return "supermagic";
  }
  return "unknown";
}

SearchMode search_mode_from_string(const std::string& s) {
  if (s == "vertex") return SearchMode::Vertex;
  if (s == "edge") return SearchMode::Edge;
  if (s == "supermagic") return SearchMode::Supermagic;
  throw std::invalid_argument("unknown search mode '" + s + "'");
}

std::uint64_t labeling_digest(const std::vector<std::int64_t>& labels) {
  std::uint64_t h = 14695981039346656037ull;
  for (auto v : labels) {
    auto u = static_cast<std::uint64_t>(v);
    for (int b = 0; b < 8; ++b) {
      h ^= (u >> (8 * b)) & 0xff;
      h *= 1099511628211ull;
    }
  }
  return h;
}

namespace {

std::optional<std::int64_t> factorial(std::int64_t n) {
  std::int64_t r = 1;
  for (std::int64_t k = 2; k <= n; ++k)
    if (__builtin_mul_overflow(r, k, &r)) return std::nullopt;
  return r;
}

class Search {
 public:
  Search(const GridSpec& spec, const SearchBudget& budget, const std::optional<std::vector<std::int64_t>>& probe,
         std::size_t cap)
      : spec_(spec), budget_(budget), probe_(probe), cap_(cap) {
    const bool use_vertices = budget.mode != SearchMode::Edge;
    const bool use_edges = budget.mode != SearchMode::Vertex;
    const std::int64_t nv = use_vertices ? spec.vertex_count() : 0;
    const std::int64_t ne = use_edges ? spec.edge_count() : 0;
    length_ = static_cast<std::size_t>(nv + ne);
    split_ = static_cast<std::size_t>(nv);

    const auto cubes = enumerate_cubes(spec);
    cube_sum_.assign(cubes.size(), 0);
    cubes_of_.resize(length_);
    for (std::size_t c = 0; c < cubes.size(); ++c) {
      if (use_vertices)
        for (const auto& v : cube_vertices(spec, cubes[c]))
          cubes_of_[static_cast<std::size_t>(vertex_rank(spec, v))].push_back(c);
      if (use_edges)
        for (const auto& e : cube_edges(spec, cubes[c]))
          cubes_of_[split_ + static_cast<std::size_t>(edge_rank(spec, e))].push_back(c);
    }
    // Position p completes cube c when p is c's last member.
    completes_.resize(length_);
    std::vector<std::size_t> last(cubes.size(), 0);
    for (std::size_t p = 0; p < length_; ++p)
      for (auto c : cubes_of_[p]) last[c] = p;
    for (std::size_t c = 0; c < cubes.size(); ++c) completes_[last[c]].push_back(c);

    labels_.assign(length_, 0);
    used_.assign(length_ + 1, 0);
  }

  SearchResult run() {
    if (probe_) result_.probe_found = false;
    descend(0);
    return std::move(result_);
  }

 private:
  void descend(std::size_t pos) {
    if (pos == length_) {
      leaf();
      return;
    }
    // Vertex positions draw from [1, split], edge positions from the rest.
    const std::size_t lo = pos < split_ ? 1 : split_ + 1;
    const std::size_t hi = pos < split_ ? split_ : length_;
    for (std::size_t v = lo; v <= hi; ++v) {
      if (used_[v]) continue;
      used_[v] = 1;
      labels_[pos] = static_cast<std::int64_t>(v);
      for (auto c : cubes_of_[pos]) cube_sum_[c] += labels_[pos];
      if (!pruned(pos)) descend(pos + 1);
      for (auto c : cubes_of_[pos]) cube_sum_[c] -= labels_[pos];
      used_[v] = 0;
    }
  }

  bool pruned(std::size_t pos) const {
    if (!budget_.target_sum) return false;
    const auto target = *budget_.target_sum;
    for (auto c : cubes_of_[pos])
      if (cube_sum_[c] > target) return true;
    for (auto c : completes_[pos])
      if (cube_sum_[c] != target) return true;
    return false;
  }

  void leaf() {
    ++result_.examined;
    const std::int64_t first = cube_sum_.front();
    for (auto s : cube_sum_)
      if (s != first) return;
    ++result_.magic_count;
    ++result_.sum_histogram[first];
    if (result_.found.size() < cap_) result_.found.push_back({labeling_digest(labels_), first, labels_});
    if (probe_ && *probe_ == labels_) result_.probe_found = true;
  }

  const GridSpec& spec_;
  const SearchBudget& budget_;
  const std::optional<std::vector<std::int64_t>>& probe_;
  std::size_t cap_;
  std::size_t length_ = 0;
  std::size_t split_ = 0;
  std::vector<std::vector<std::size_t>> cubes_of_;
  std::vector<std::vector<std::size_t>> completes_;
  std::vector<std::int64_t> cube_sum_;
  std::vector<std::int64_t> labels_;
  std::vector<std::uint8_t> used_;
  SearchResult result_;
};

void recheck(const GridSpec& spec, SearchMode mode, const FoundLabeling& found) {
  const auto nv = static_cast<std::ptrdiff_t>(spec.vertex_count());
  MagicReport report;
  switch (mode) {
    case SearchMode::Vertex: report = verify_vertex_magic(spec, {spec, found.labels}); break;
    case SearchMode::Edge: report = verify_edge_magic(spec, {spec, found.labels}); break;
    case SearchMode::Supermagic:
      report = verify_supermagic(spec, {spec, {found.labels.begin(), found.labels.begin() + nv},
                                        {found.labels.begin() + nv, found.labels.end()}});
      break;
  }
  if (!report.accepted() || report.magic_sum != found.magic_sum)
    throw std::logic_error("oracle and verifier disagree on a found labeling");
}

}  // namespace

std::optional<std::int64_t> search_space_size(const GridSpec& spec, SearchMode mode) {
  const auto fv = factorial(spec.vertex_count());
  const auto fe = factorial(spec.edge_count());
  switch (mode) {
    case SearchMode::Vertex: return fv;
    case SearchMode::Edge: return fe;
    case SearchMode::Supermagic: {
      if (!fv || !fe) return std::nullopt;
      std::int64_t r;
      if (__builtin_mul_overflow(*fv, *fe, &r)) return std::nullopt;
      return r;
    }
  }
  return std::nullopt;
}

SearchResult exhaustive_search(const GridSpec& spec, const SearchBudget& budget,
                               const std::optional<std::vector<std::int64_t>>& probe, std::size_t found_cap) {
  if (budget.max_assignments < 1) throw std::invalid_argument("max_assignments must be at least 1");
  const auto size = search_space_size(spec, budget.mode);
  if (!size || *size > budget.max_assignments) throw BudgetExceeded(size, budget.max_assignments);
  auto result = Search(spec, budget, probe, found_cap).run();
  for (const auto& f : result.found) recheck(spec, budget.mode, f);
  return result;
}

std::vector<std::int64_t> construction_sequence(const GridSpec& spec, SearchMode mode) {
  auto built = build_labelings(spec);
  switch (mode) {
    case SearchMode::Vertex: return built.vertex.labels;
    case SearchMode::Edge: return built.edge.labels;
    case SearchMode::Supermagic: {
      auto total = combine_supermagic(built.vertex, built.edge);
      auto seq = std::move(total.vertex_labels);
      seq.insert(seq.end(), total.edge_labels.begin(), total.edge_labels.end());
      return seq;
    }
  }
  return {};
}

bool confirm_construction(const GridSpec& spec, const SearchBudget& budget) {
  const auto size = search_space_size(spec, budget.mode);
  if (!size || *size > budget.max_assignments) throw BudgetExceeded(size, budget.max_assignments);
  auto result = exhaustive_search(spec, budget, construction_sequence(spec, budget.mode), 0);
  return result.probe_found.value_or(false);
}

}  // namespace gridmagic
