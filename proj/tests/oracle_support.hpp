#pragma once

// Test-only brute-force helpers. Nothing here calls into the library: points
// come from plain nested enumeration, cube membership from pairwise L1
// distance, and label positions from enumeration order.

#include <cstdint>
#include <cstdlib>
#include <map>
#include <utility>
#include <vector>

namespace oracle {

using Point = std::vector<std::int64_t>;

inline void points_rec(const std::vector<std::int64_t>& hi, Point& cur, std::size_t i, std::vector<Point>& out) {
  if (i == hi.size()) {
    out.push_back(cur);
    return;
  }
  for (std::int64_t v = 1; v <= hi[i]; ++v) {
    cur[i] = v;
    points_rec(hi, cur, i + 1, out);
  }
}

// Lexicographic enumeration of [hi_1] x ... x [hi_d].
inline std::vector<Point> all_points(const std::vector<std::int64_t>& hi) {
  std::vector<Point> out;
  Point cur(hi.size());
  points_rec(hi, cur, 0, out);
  return out;
}

inline std::map<Point, std::size_t> point_index(const std::vector<std::int64_t>& dims) {
  std::map<Point, std::size_t> idx;
  for (const auto& p : all_points(dims)) idx.emplace(p, idx.size());
  return idx;
}

// (base, axis) -> position; axes ascending, bases lexicographic per axis.
inline std::map<std::pair<Point, int>, std::size_t> edge_index(const std::vector<std::int64_t>& dims) {
  std::map<std::pair<Point, int>, std::size_t> idx;
  for (std::size_t a = 0; a < dims.size(); ++a) {
    auto hi = dims;
    hi[a] -= 1;
    for (const auto& p : all_points(hi)) idx.emplace(std::pair{p, static_cast<int>(a + 1)}, idx.size());
  }
  return idx;
}

inline std::int64_t edge_count(const std::vector<std::int64_t>& dims) {
  return static_cast<std::int64_t>(edge_index(dims).size());
}

// Cube sums, corners lexicographic. Either label array may be null.
inline std::vector<std::int64_t> cube_sums(const std::vector<std::int64_t>& dims,
                                           const std::vector<std::int64_t>* vlabels,
                                           const std::vector<std::int64_t>* elabels) {
  const auto vidx = point_index(dims);
  const auto eidx = edge_index(dims);
  auto hi = dims;
  for (auto& h : hi) h -= 1;
  std::vector<std::int64_t> sums;
  for (const auto& corner : all_points(hi)) {
    std::vector<Point> members;
    for (const auto& [p, _] : vidx) {
      bool inside = true;
      for (std::size_t i = 0; i < p.size(); ++i)
        if (p[i] < corner[i] || p[i] > corner[i] + 1) inside = false;
      if (inside) members.push_back(p);
    }
    std::int64_t s = 0;
    if (vlabels)
      for (const auto& p : members) s += (*vlabels)[vidx.at(p)];
    if (elabels)
      for (const auto& p : members)
        for (const auto& q : members) {
          std::int64_t dist = 0;
          int axis = 0;
          for (std::size_t i = 0; i < p.size(); ++i) {
            dist += std::llabs(p[i] - q[i]);
            if (q[i] == p[i] + 1) axis = static_cast<int>(i + 1);
          }
          if (dist == 1 && axis != 0) s += (*elabels)[eidx.at({p, axis})];
        }
    sums.push_back(s);
  }
  return sums;
}

inline std::int64_t triangular(std::int64_t n) { return n * (n + 1) / 2; }

}  // namespace oracle
