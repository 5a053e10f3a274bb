// Boundary disk sequences, strip hulls (full and quarter) and strip
// membership sets.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <unordered_map>
#include <vector>

#include "hullseq/envelope.hpp"
#include "hullseq/error.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"

namespace hullseq {

/// Counterclockwise boundary disks by id. Non-unit disks may repeat.
struct BoundarySequence {
  std::vector<int> entries;
};

enum class StripKind { kBounded, kHalfStrip };

struct Strip {
  int left = -1;   // disk id; the anchor for half-strips
  int right = -1;  // disk id; equals left for half-strips
  StripKind kind = StripKind::kBounded;
  Point spine_from;  // center of left
  Point spine_to;    // center of right (bounded); spine_from + ray (half)
  Point ray;         // half-strips: unit ray direction from the anchor center
  double left_radius = 0.0;
  double right_radius = 0.0;
  bool leading = false;  // half-strips: precedes the chain

  bool bounded() const { return kind == StripKind::kBounded; }

  /// Direction in which the hull traverses this strip.
  /// The leading half-strip is walked towards its anchor, the trailing one
  /// away from it.
  Point traversal() const {
    if (bounded()) return spine_to - spine_from;
    return leading ? Point{-ray.x, -ray.y} : ray;
  }
};

struct StripHull {
  BoundarySequence boundary;
  std::vector<Strip> strips;
  bool quarter = false;
  /// Quarter variant: boundary disks whose centers form the quarter spine hull.
  std::vector<int> chain;
  /// Quarter variant with a single chain disk (rightmost == topmost).
  bool degenerate_anchor = false;
};

struct StripMembership {
  /// Per strip, ids of other disks meeting the strip region (defining disks excluded).
  std::vector<std::vector<int>> sets;
};

class DiskIndex {
 public:
  explicit DiskIndex(const std::vector<Disk>& disks) {
    for (std::size_t i = 0; i < disks.size(); ++i) {
      if (!pos_.emplace(disks[i].id, i).second) {
        throw Error(ErrorKind::kInvariantViolation, "duplicate disk id " + std::to_string(disks[i].id));
      }
    }
  }
  std::size_t at(int id) const {
    auto it = pos_.find(id);
    if (it == pos_.end()) throw Error(ErrorKind::kIdMismatch, "unknown disk id " + std::to_string(id));
    return it->second;
  }
  bool contains(int id) const { return pos_.count(id) != 0; }

 private:
  std::unordered_map<int, std::size_t> pos_;
};

inline void validate_disks(const std::vector<Disk>& disks) {
  DiskIndex index(disks);
  for (const auto& d : disks) {
    if (!(d.radius > 0.0) || !std::isfinite(d.radius) || !std::isfinite(d.center.x) ||
        !std::isfinite(d.center.y)) {
      throw Error(ErrorKind::kInvariantViolation, "disk " + std::to_string(d.id) + " has invalid geometry");
    }
  }
}

inline bool equal_radii(const std::vector<Disk>& disks) {
  return std::all_of(disks.begin(), disks.end(), [&](const Disk& d) { return d.radius == disks.front().radius; });
}

namespace detail {

/// Hull of disk centers with ids; duplicate centers keep the smallest id.
/// Counterclockwise from the lexicographically smallest center.
inline std::vector<int> center_hull_ids(const std::vector<Disk>& disks) {
  std::vector<std::pair<Point, int>> pts;
  pts.reserve(disks.size());
  for (const auto& d : disks) pts.push_back({d.center, d.id});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a.first == b.first; }),
            pts.end());
  if (pts.size() <= 2) {
    std::vector<int> ids;
    for (auto& p : pts) ids.push_back(p.second);
    return ids;
  }
  std::vector<std::pair<Point, int>> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(h[k - 2].first, h[k - 1].first, p.first) != Orientation::kCounterClockwise) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(h[k - 2].first, h[k - 1].first, pts[i].first) != Orientation::kCounterClockwise) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  std::vector<int> ids;
  for (auto& p : h) ids.push_back(p.second);
  return ids;
}

}  // namespace detail

/// Counterclockwise sequence of disks contributing arcs to the hull of the
/// union. Equal radii reduce to the hull of centers.
inline BoundarySequence boundary_disks(const std::vector<Disk>& disks) {
  if (disks.empty()) throw Error(ErrorKind::kInvalidArgument, "boundary_disks: empty disk set");
  if (equal_radii(disks)) return {detail::center_hull_ids(disks)};
  const auto arcs = support_envelope(disks, +1.0, 0);
  std::vector<int> seq;
  for (const auto& a : arcs) {
    const int id = disks[a.disk].id;
    if (seq.empty() || seq.back() != id) seq.push_back(id);
  }
  while (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
  // Canonical start: first occurrence of the disk with the smallest center.
  DiskIndex index(disks);
  std::size_t best = 0;
  for (std::size_t i = 1; i < seq.size(); ++i) {
    const Disk& a = disks[index.at(seq[i])];
    const Disk& b = disks[index.at(seq[best])];
    if (a.center < b.center || (a.center == b.center && a.id < b.id)) best = i;
  }
  std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(best), seq.end());
  return {seq};
}

inline Strip make_bounded_strip(const Disk& l, const Disk& r) {
  Strip s;
  s.left = l.id;
  s.right = r.id;
  s.kind = StripKind::kBounded;
  s.spine_from = l.center;
  s.spine_to = r.center;
  s.left_radius = l.radius;
  s.right_radius = r.radius;
  return s;
}

inline Strip make_half_strip(const Disk& anchor, Point ray, bool leading) {
  Strip s;
  s.leading = leading;
  s.left = s.right = anchor.id;
  s.kind = StripKind::kHalfStrip;
  s.spine_from = anchor.center;
  s.spine_to = anchor.center + ray;
  s.ray = ray;
  s.left_radius = s.right_radius = anchor.radius;
  return s;
}

/// Fewer than two distinct boundary disks yields zero strips.
inline StripHull build_strip_hull(const BoundarySequence& boundary, const std::vector<Disk>& disks) {
  DiskIndex index(disks);
  StripHull sh;
  sh.boundary = boundary;
  const auto& b = boundary.entries;
  if (b.size() < 2) return sh;
  for (std::size_t i = 0; i < b.size(); ++i) {
    sh.strips.push_back(make_bounded_strip(disks[index.at(b[i])], disks[index.at(b[(i + 1) % b.size()])]));
  }
  return sh;
}

/// Quarter strip hull: the boundary chain whose centers lie on the quarter
/// hull of boundary centers, framed by a half-strip going down from the first
/// (rightmost) disk and one going left from the last (topmost) disk.
inline StripHull build_quarter_strip_hull(const std::vector<Disk>& disks) {
  if (disks.empty()) throw Error(ErrorKind::kInvalidArgument, "build_quarter_strip_hull: empty disk set");
  DiskIndex index(disks);
  StripHull sh;
  sh.quarter = true;
  sh.boundary = boundary_disks(disks);

  // Distinct boundary disks with their centers; quarter arc of those centers.
  std::vector<int> ids = sh.boundary.entries;
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  std::vector<Disk> bd;
  for (int id : ids) bd.push_back(disks[index.at(id)]);
  const std::vector<int> hull_ids = detail::center_hull_ids(bd);

  std::size_t r = 0, t = 0;
  for (std::size_t i = 1; i < hull_ids.size(); ++i) {
    const Point ci = disks[index.at(hull_ids[i])].center;
    const Point cr = disks[index.at(hull_ids[r])].center;
    const Point ct = disks[index.at(hull_ids[t])].center;
    if (more_rightmost(ci, cr)) r = i;
    if (more_topmost(ci, ct)) t = i;
  }
  for (std::size_t i = r;; i = (i + 1) % hull_ids.size()) {
    sh.chain.push_back(hull_ids[i]);
    if (i == t) break;
  }
  sh.degenerate_anchor = sh.chain.size() == 1;

  const Disk& first = disks[index.at(sh.chain.front())];
  const Disk& last = disks[index.at(sh.chain.back())];
  sh.strips.push_back(make_half_strip(first, {0.0, -1.0}, true));
  for (std::size_t i = 0; i + 1 < sh.chain.size(); ++i) {
    sh.strips.push_back(make_bounded_strip(disks[index.at(sh.chain[i])], disks[index.at(sh.chain[i + 1])]));
  }
  sh.strips.push_back(make_half_strip(last, {-1.0, 0.0}, false));
  return sh;
}

/// Maps a strip hull built in quadrant q's frame back to the original frame.
inline StripHull from_quadrant_frame(StripHull sh, int quadrant) {
  for (auto& s : sh.strips) {
    s.spine_from = from_quadrant_frame(s.spine_from, quadrant);
    s.spine_to = from_quadrant_frame(s.spine_to, quadrant);
    s.ray = from_quadrant_frame(s.ray, quadrant);
  }
  return sh;
}

namespace detail {

/// Distance test against the hull of two disks with different radii. The
/// function t -> |c - s(t)| - r(t) is convex on [0, 1].
inline bool unequal_strip_meets(const Strip& s, const Disk& d) {
  auto gap = [&](double t) {
    const Point p = s.spine_from * (1.0 - t) + s.spine_to * t;
    return norm(d.center - p) - ((1.0 - t) * s.left_radius + t * s.right_radius) - d.radius;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100; ++it) {
    const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
    if (gap(m1) <= gap(m2)) hi = m2; else lo = m1;
  }
  const double best = std::min({gap(0.0), gap(1.0), gap(0.5 * (lo + hi))});
  const double scale = 1e-12 * (1.0 + norm(d.center) + norm(s.spine_from) + s.left_radius + s.right_radius);
  return best <= scale;
}

}  // namespace detail

/// True iff disk d has a common point with the (closed) strip region.
inline bool strip_meets_disk(const Strip& s, const Disk& d) {
  if (!s.bounded()) return ray_within(s.spine_from, s.ray, d.center, s.left_radius, d.radius);
  if (s.left_radius == s.right_radius) {
    return segment_within(s.spine_from, s.spine_to, d.center, s.left_radius, d.radius);
  }
  return detail::unequal_strip_meets(s, d);
}

/// Uniform grid over disk centers with cell side 2 * max radius.
class CenterGrid {
 public:
  explicit CenterGrid(const std::vector<Disk>& disks) : disks_(disks) {
    double rmax = 0.0;
    lo_ = {INFINITY, INFINITY};
    hi_ = {-INFINITY, -INFINITY};
    for (const auto& d : disks) {
      rmax = std::max(rmax, d.radius);
      lo_.x = std::min(lo_.x, d.center.x);
      lo_.y = std::min(lo_.y, d.center.y);
      hi_.x = std::max(hi_.x, d.center.x);
      hi_.y = std::max(hi_.y, d.center.y);
    }
    rmax_ = rmax;
    cell_ = 2.0 * rmax;
    for (std::size_t i = 0; i < disks.size(); ++i) cells_[key(cell_of(disks[i].center.x), cell_of(disks[i].center.y))].push_back(i);
  }

  double max_radius() const { return rmax_; }

  /// Indices of disks whose centers fall in cells overlapping the box.
  template <class F>
  void for_each_in_box(Point lo, Point hi, F&& f) const {
    lo.x = std::max(lo.x, lo_.x);
    lo.y = std::max(lo.y, lo_.y);
    hi.x = std::min(hi.x, hi_.x);
    hi.y = std::min(hi.y, hi_.y);
    if (lo.x > hi.x || lo.y > hi.y) return;
    const std::int64_t x0 = cell_of(lo.x), x1 = cell_of(hi.x), y0 = cell_of(lo.y), y1 = cell_of(hi.y);
    const double ncells = double(x1 - x0 + 1) * double(y1 - y0 + 1);
    if (ncells > 2.0 * double(cells_.size())) {
      for (const auto& [k, v] : cells_) {
        for (std::size_t i : v) {
          const Point c = disks_[i].center;
          if (c.x >= lo.x && c.x <= hi.x && c.y >= lo.y && c.y <= hi.y) f(i);
        }
      }
      return;
    }
    for (std::int64_t gx = x0; gx <= x1; ++gx) {
      for (std::int64_t gy = y0; gy <= y1; ++gy) {
        auto it = cells_.find(key(gx, gy));
        if (it == cells_.end()) continue;
        for (std::size_t i : it->second) f(i);
      }
    }
  }

 private:
  std::int64_t cell_of(double v) const { return static_cast<std::int64_t>(std::floor(v / cell_)); }
  static std::uint64_t key(std::int64_t x, std::int64_t y) {
    return (static_cast<std::uint64_t>(x) * 0x9E3779B97F4A7C15ULL) ^ static_cast<std::uint64_t>(y);
  }

  const std::vector<Disk>& disks_;
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> cells_;
  Point lo_, hi_;
  double cell_ = 1.0;
  double rmax_ = 0.0;
};

namespace detail {

inline void strip_box(const Strip& s, double reach, Point& lo, Point& hi) {
  Point a = s.spine_from, b = s.spine_to;
  if (!s.bounded()) b = s.spine_from + s.ray * 1e300;
  lo = {std::min(a.x, b.x) - reach, std::min(a.y, b.y) - reach};
  hi = {std::max(a.x, b.x) + reach, std::max(a.y, b.y) + reach};
}

}  // namespace detail

/// Members of one strip (other than its defining disks), sorted by id.
inline std::vector<int> strip_members(const Strip& s, const std::vector<Disk>& disks, const CenterGrid& grid) {
  Point lo, hi;
  const double reach = std::max(s.left_radius, s.right_radius) + grid.max_radius();
  detail::strip_box(s, reach * (1.0 + 1e-9) + 1e-9, lo, hi);
  std::vector<int> out;
  grid.for_each_in_box(lo, hi, [&](std::size_t i) {
    const Disk& d = disks[i];
    if (d.id == s.left || d.id == s.right) return;
    if (strip_meets_disk(s, d)) out.push_back(d.id);
  });
  std::sort(out.begin(), out.end());
  return out;
}

inline StripMembership strip_membership(const StripHull& sh, const std::vector<Disk>& disks) {
  StripMembership m;
  if (disks.empty()) return m;
  CenterGrid grid(disks);
  m.sets.reserve(sh.strips.size());
  for (const auto& s : sh.strips) m.sets.push_back(strip_members(s, disks, grid));
  return m;
}

/// Per-disk count of strips whose region the disk meets (own strips included).
inline std::map<int, int> strips_per_disk(const StripHull& sh, const std::vector<Disk>& disks) {
  std::map<int, int> count;
  for (const auto& d : disks) count[d.id] = 0;
  DiskIndex index(disks);
  const auto m = strip_membership(sh, disks);
  for (std::size_t i = 0; i < sh.strips.size(); ++i) {
    for (int id : m.sets[i]) ++count[id];
    ++count[sh.strips[i].left];
    if (sh.strips[i].right != sh.strips[i].left) ++count[sh.strips[i].right];
  }
  return count;
}

}  // namespace hullseq
