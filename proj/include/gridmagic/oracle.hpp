#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridmagic/grid.hpp"

namespace gridmagic {

// Brute-force ground truth for tiny grids. The search enumerates every
// labeling of the chosen kind, in lexicographic order of the label sequence,
// and evaluates cube sums from explicit cube membership lists built out of
// cube_vertices / cube_edges. It shares nothing with the construction code
// and does not use the verifier's scanning path.

enum class SearchMode { Vertex, Edge, Supermagic };

const char* to_string(SearchMode mode);
SearchMode search_mode_from_string(const std::string& s);

struct SearchBudget {
  std::int64_t max_assignments = 100'000'000;
  SearchMode mode = SearchMode::Vertex;
  /// When set, branches whose completed cubes miss this sum (or whose partial
  /// sums already exceed it) are cut. Unset means an unpruned full scan.
  std::optional<std::int64_t> target_sum;
};

struct FoundLabeling {
  std::uint64_t digest = 0;
  std::int64_t magic_sum = 0;
  /// Vertex labels by rank, then (supermagic mode) edge labels by edge rank.
  std::vector<std::int64_t> labels;
};

struct SearchResult {
  std::int64_t examined = 0;
  std::int64_t magic_count = 0;
  /// First magic labelings in enumeration order, capped.
  std::vector<FoundLabeling> found;
  std::map<std::int64_t, std::int64_t> sum_histogram;
  /// Set when a probe sequence was supplied: whether it was found magic.
  std::optional<bool> probe_found;
};

/// FNV-1a over the label sequence.
std::uint64_t labeling_digest(const std::vector<std::int64_t>& labels);

/// Size of the mode's search space, or nullopt if it does not fit in 64 bits.
std::optional<std::int64_t> search_space_size(const GridSpec& spec, SearchMode mode);

/// Enumerates all labelings for the mode. Supermagic mode assigns [1, |V|]
/// to vertices and [|V| + 1, |V| + |E|] to edges. Throws BudgetExceeded if
/// the space is larger than budget.max_assignments. Every stored labeling is
/// re-checked with the verifier; a disagreement throws std::logic_error.
SearchResult exhaustive_search(const GridSpec& spec, const SearchBudget& budget,
                               const std::optional<std::vector<std::int64_t>>& probe = std::nullopt,
                               std::size_t found_cap = 64);

/// The constructed labeling in the mode's sequence layout.
std::vector<std::int64_t> construction_sequence(const GridSpec& spec, SearchMode mode);

/// True iff the constructed labeling is among the magic labelings the search
/// finds. Throws BudgetExceeded.
bool confirm_construction(const GridSpec& spec, const SearchBudget& budget);

}  // namespace gridmagic
