// Convex hulls of point sets, quarter-hull extraction and quadrant frames.
#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hullseq/error.hpp"
#include "hullseq/geometry.hpp"

namespace hullseq {

/// Counterclockwise hull vertices starting at the lexicographically smallest
/// vertex. Collinear boundary points and duplicates are dropped.
inline std::vector<Point> convex_hull_points(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orient(h[k - 2], h[k - 1], p) != Orientation::kCounterClockwise) --k;
    h[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(h[k - 2], h[k - 1], pts[i]) != Orientation::kCounterClockwise) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

// Rightmost: max x, then max y. Topmost: max y, then max x.
inline bool more_rightmost(const Point& a, const Point& b) {
  return a.x > b.x || (a.x == b.x && a.y > b.y);
}
inline bool more_topmost(const Point& a, const Point& b) {
  return a.y > b.y || (a.y == b.y && a.x > b.x);
}

/// Arc of a CCW hull from its rightmost to its topmost vertex.
inline std::vector<Point> quarter_arc(const std::vector<Point>& hull) {
  if (hull.empty()) return {};
  std::size_t r = 0, t = 0;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    if (more_rightmost(hull[i], hull[r])) r = i;
    if (more_topmost(hull[i], hull[t])) t = i;
  }
  std::vector<Point> out;
  for (std::size_t i = r;; i = (i + 1) % hull.size()) {
    out.push_back(hull[i]);
    if (i == t) break;
  }
  return out;
}

inline std::vector<Point> quarter_hull_points(const std::vector<Point>& pts) {
  return quarter_arc(convex_hull_points(pts));
}

/// Frame in which quadrant q's hull arc becomes the rightmost-to-topmost arc.
/// Rotations are by multiples of 90 degrees, hence exact.
inline Point to_quadrant_frame(const Point& p, int quadrant) {
  switch (quadrant & 3) {
    case 0: return p;
    case 1: return {p.y, -p.x};
    case 2: return {-p.x, -p.y};
    default: return {-p.y, p.x};
  }
}

inline Point from_quadrant_frame(const Point& p, int quadrant) {
  return to_quadrant_frame(p, (4 - (quadrant & 3)) & 3);
}

inline std::vector<Disk> to_quadrant_frame(std::vector<Disk> disks, int quadrant) {
  for (auto& d : disks) d.center = to_quadrant_frame(d.center, quadrant);
  return disks;
}

/// Rotates a cyclic vertex list to start at its lexicographically smallest vertex.
inline std::vector<Point> canonical_cycle(std::vector<Point> cyc) {
  if (cyc.empty()) return cyc;
  auto it = std::min_element(cyc.begin(), cyc.end());
  std::rotate(cyc.begin(), it, cyc.end());
  return cyc;
}

}  // namespace hullseq
