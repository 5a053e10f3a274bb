// Sorting supersequences for unit intervals on the real line.
//
// The line is cut into unit cells [m + c, m + c + 1) anchored at the smallest
// left endpoint m. Every interval meeting cell c is listed in block S_c
// (sorted by left endpoint, ties by id) and the block is emitted |S_c| times,
// so any order of at most |S_c| points inside the cell embeds. A unit
// interval meeting a cell contains one of the cell's endpoints, hence
// |S_c| <= 2 * ply and the total length is at most 4 * ply * n.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <vector>

#include "hullseq/error.hpp"

namespace hullseq {

struct Interval {
  int id = 0;
  double lo = 0.0;
  double hi = 1.0;
};

struct IntervalSequence {
  std::vector<int> entries;
  double alpha = 3.0;
  double beta = 0.0;
};

/// Maximum number of closed intervals sharing a point.
inline int interval_ply(const std::vector<Interval>& intervals) {
  std::vector<std::pair<double, int>> events;
  events.reserve(2 * intervals.size());
  for (const auto& iv : intervals) {
    events.push_back({iv.lo, 0});  // opens sort before closes at equal coordinates
    events.push_back({iv.hi, 1});
  }
  std::sort(events.begin(), events.end());
  int cur = 0, best = 0;
  for (const auto& [x, kind] : events) {
    cur += kind == 0 ? 1 : -1;
    best = std::max(best, cur);
  }
  return best;
}

inline constexpr double kUnitTolerance = 1e-9;

namespace detail {

// Cell indices an interval may touch. Values within a hair of a cell edge
// also claim the neighbouring cell so rounded endpoints stay covered.
inline std::pair<std::int64_t, std::int64_t> cell_span(const Interval& iv, double anchor) {
  const double a = iv.lo - anchor, b = iv.hi - anchor;
  std::int64_t first = static_cast<std::int64_t>(std::floor(a));
  std::int64_t last = static_cast<std::int64_t>(std::floor(b));
  const double tol = 1e-9 * (1.0 + std::fabs(a) + std::fabs(b));
  const double fa = a - std::floor(a);
  if (fa > 0.0 && fa < tol) --first;
  const double fb = std::ceil(b) - b;
  if (fb > 0.0 && fb < tol) ++last;
  return {first, last};
}

}  // namespace detail

/// Cell a realized coordinate falls in; a point on a cell edge belongs to the
/// cell on its right.
inline std::int64_t cell_index(double x, double anchor) {
  return static_cast<std::int64_t>(std::floor(x - anchor));
}

inline IntervalSequence sorting_supersequence(const std::vector<Interval>& intervals) {
  IntervalSequence out;
  if (intervals.empty()) return out;
  for (const auto& iv : intervals) {
    const double len = iv.hi - iv.lo;
    if (!(std::fabs(len - 1.0) <= kUnitTolerance * (1.0 + std::fabs(iv.lo)))) {
      throw Error(ErrorKind::kInvalidArgument, "sorting_supersequence: interval " + std::to_string(iv.id) + " is not unit length");
    }
  }
  double anchor = intervals.front().lo;
  for (const auto& iv : intervals) anchor = std::min(anchor, iv.lo);

  std::map<std::int64_t, std::vector<const Interval*>> cells;
  for (const auto& iv : intervals) {
    const auto [first, last] = detail::cell_span(iv, anchor);
    for (std::int64_t c = first; c <= last; ++c) cells[c].push_back(&iv);
  }
  for (auto& [c, block] : cells) {
    std::sort(block.begin(), block.end(), [](const Interval* a, const Interval* b) {
      return a->lo != b->lo ? a->lo < b->lo : a->id < b->id;
    });
    for (std::size_t rep = 0; rep < block.size(); ++rep) {
      for (const Interval* iv : block) {
        // Adjacent repeats of one id never help an embedding.
        if (out.entries.empty() || out.entries.back() != iv->id) out.entries.push_back(iv->id);
      }
    }
  }
  out.alpha = 3.0;
  out.beta = 2.0 * interval_ply(intervals);
  return out;
}

/// Greedy subsequence test: does the ascending order of the given points
/// embed in seq? Equal coordinates may appear in any order, so a tie group
/// is matched as a set. `points` maps id -> coordinate.
inline bool check_sorted_subsequence(const IntervalSequence& seq, const std::map<int, double>& points) {
  std::vector<std::pair<double, int>> order;
  order.reserve(points.size());
  for (const auto& [id, x] : points) order.push_back({x, id});
  std::sort(order.begin(), order.end());
  std::size_t pos = 0;
  for (std::size_t g = 0; g < order.size();) {
    std::size_t e = g;
    while (e < order.size() && order[e].first == order[g].first) ++e;
    std::vector<int> pending;
    for (std::size_t k = g; k < e; ++k) pending.push_back(order[k].second);
    while (!pending.empty()) {
      while (pos < seq.entries.size() &&
             std::find(pending.begin(), pending.end(), seq.entries[pos]) == pending.end()) {
        ++pos;
      }
      if (pos == seq.entries.size()) return false;
      pending.erase(std::find(pending.begin(), pending.end(), seq.entries[pos]));
      ++pos;
    }
    g = e;
  }
  return true;
}

}  // namespace hullseq
