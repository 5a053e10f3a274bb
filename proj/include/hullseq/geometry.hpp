// Geometric kernel: points, disks and exact predicates.
#pragma once

#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <vector>

#include "hullseq/error.hpp"
#include "hullseq/exact.hpp"

namespace hullseq {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
  friend auto operator<=>(const Point&, const Point&) = default;

  Point operator+(const Point& o) const { return {x + o.x, y + o.y}; }
  Point operator-(const Point& o) const { return {x - o.x, y - o.y}; }
  Point operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
inline double norm(const Point& a) { return std::hypot(a.x, a.y); }

struct Disk {
  int id = 0;
  Point center;
  double radius = 1.0;

  friend bool operator==(const Disk&, const Disk&) = default;
};

enum class Orientation { kClockwise = -1, kCollinear = 0, kCounterClockwise = 1 };

/// Sign of the doubled signed area of pqr, exact for all double inputs.
inline Orientation orient(const Point& p, const Point& q, const Point& r) {
  const int s = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(q.x) - T(p.x)) * (T(r.y) - T(p.y)) - (T(q.y) - T(p.y)) * (T(r.x) - T(p.x));
  });
  return static_cast<Orientation>(s);
}

/// Signed offset of p relative to q along the slope -1 direction:
/// (p.x - p.y) - (q.x - q.y).
inline double nw_dist(const Point& p, const Point& q) { return (p.x - p.y) - (q.x - q.y); }

/// Exact sign of nw_dist(p, q) - alpha.
inline int compare_nw_dist(const Point& p, const Point& q, double alpha) {
  return exact::sign_of([&](auto t) {
    using T = decltype(t);
    return T(p.x) - T(p.y) - T(q.x) + T(q.y) - T(alpha);
  });
}

/// Exact sign of |a - b|^2 - r^2.
inline int compare_distance(const Point& a, const Point& b, double r) {
  return exact::sign_of([&](auto t) {
    using T = decltype(t);
    const T dx = T(a.x) - T(b.x);
    const T dy = T(a.y) - T(b.y);
    return dx * dx + dy * dy - T(r) * T(r);
  });
}

/// Closed disk membership, exact.
inline bool disk_contains(const Disk& d, const Point& p) {
  return compare_distance(p, d.center, d.radius) <= 0;
}

/// True iff the closed disks overlap or touch.
inline bool disks_intersect(const Disk& a, const Disk& b) {
  return exact::sign_of([&](auto t) {
           using T = decltype(t);
           const T dx = T(a.center.x) - T(b.center.x);
           const T dy = T(a.center.y) - T(b.center.y);
           const T rs = T(a.radius) + T(b.radius);
           return dx * dx + dy * dy - rs * rs;
         }) <= 0;
}

inline double project_onto_direction(const Point& p, const Point& dir) {
  const double n = norm(dir);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw Error(ErrorKind::kInvalidArgument, "project_onto_direction: zero direction vector");
  }
  return (p.x * dir.x + p.y * dir.y) / n;
}

/// dist(c, segment ab) <= reach, exact. Degenerate a == b is a point test.
inline bool segment_within(const Point& a, const Point& b, const Point& c, double reach) {
  const int along = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(c.x) - T(a.x)) * (T(b.x) - T(a.x)) + (T(c.y) - T(a.y)) * (T(b.y) - T(a.y));
  });
  if (along <= 0) return compare_distance(c, a, reach) <= 0;
  const int beyond = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(c.x) - T(b.x)) * (T(a.x) - T(b.x)) + (T(c.y) - T(b.y)) * (T(a.y) - T(b.y));
  });
  if (beyond <= 0) return compare_distance(c, b, reach) <= 0;
  return exact::sign_of([&](auto t) {
           using T = decltype(t);
           const T ux = T(b.x) - T(a.x);
           const T uy = T(b.y) - T(a.y);
           const T cr = ux * (T(c.y) - T(a.y)) - uy * (T(c.x) - T(a.x));
           return cr * cr - T(reach) * T(reach) * (ux * ux + uy * uy);
         }) <= 0;
}

/// dist(c, ray {a + s*dir : s >= 0}) <= reach, exact.
inline bool ray_within(const Point& a, const Point& dir, const Point& c, double reach) {
  const int along = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(c.x) - T(a.x)) * T(dir.x) + (T(c.y) - T(a.y)) * T(dir.y);
  });
  if (along <= 0) return compare_distance(c, a, reach) <= 0;
  return exact::sign_of([&](auto t) {
           using T = decltype(t);
           const T cr = T(dir.x) * (T(c.y) - T(a.y)) - T(dir.y) * (T(c.x) - T(a.x));
           return cr * cr - T(reach) * T(reach) * (T(dir.x) * T(dir.x) + T(dir.y) * T(dir.y));
         }) <= 0;
}

// reach = r1 + r2 is rounded once; callers needing the exact sum use the
// two-radius overloads below.
inline bool segment_within(const Point& a, const Point& b, const Point& c, double r1, double r2) {
  const int along = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(c.x) - T(a.x)) * (T(b.x) - T(a.x)) + (T(c.y) - T(a.y)) * (T(b.y) - T(a.y));
  });
  auto point_test = [&](const Point& e) {
    return exact::sign_of([&](auto t) {
             using T = decltype(t);
             const T dx = T(c.x) - T(e.x);
             const T dy = T(c.y) - T(e.y);
             const T rs = T(r1) + T(r2);
             return dx * dx + dy * dy - rs * rs;
           }) <= 0;
  };
  if (along <= 0) return point_test(a);
  const int beyond = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(c.x) - T(b.x)) * (T(a.x) - T(b.x)) + (T(c.y) - T(b.y)) * (T(a.y) - T(b.y));
  });
  if (beyond <= 0) return point_test(b);
  return exact::sign_of([&](auto t) {
           using T = decltype(t);
           const T ux = T(b.x) - T(a.x);
           const T uy = T(b.y) - T(a.y);
           const T cr = ux * (T(c.y) - T(a.y)) - uy * (T(c.x) - T(a.x));
           const T rs = T(r1) + T(r2);
           return cr * cr - rs * rs * (ux * ux + uy * uy);
         }) <= 0;
}

inline bool ray_within(const Point& a, const Point& dir, const Point& c, double r1, double r2) {
  const int along = exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(c.x) - T(a.x)) * T(dir.x) + (T(c.y) - T(a.y)) * T(dir.y);
  });
  if (along <= 0) {
    return exact::sign_of([&](auto t) {
             using T = decltype(t);
             const T dx = T(c.x) - T(a.x);
             const T dy = T(c.y) - T(a.y);
             const T rs = T(r1) + T(r2);
             return dx * dx + dy * dy - rs * rs;
           }) <= 0;
  }
  return exact::sign_of([&](auto t) {
           using T = decltype(t);
           const T cr = T(dir.x) * (T(c.y) - T(a.y)) - T(dir.y) * (T(c.x) - T(a.x));
           const T rs = T(r1) + T(r2);
           return cr * cr - rs * rs * (T(dir.x) * T(dir.x) + T(dir.y) * T(dir.y));
         }) <= 0;
}

// ---------------------------------------------------------------------------
// Convex regions bounded by segments and circular arcs.

enum class Containment { kInside, kBoundary, kOutside };

struct RegionEdge {
  Point from;
  Point to;
  bool is_arc = false;
  Point center;         // arcs only
  double radius = 0.0;  // arcs only
};

/// Convex region with a counterclockwise boundary. An empty edge list is the
/// empty region. A single arc edge with from == to is a full disk.
struct ConvexRegion {
  std::vector<RegionEdge> edges;

  bool empty() const { return edges.empty(); }

  std::vector<Point> vertices() const {
    std::vector<Point> v;
    v.reserve(edges.size());
    for (const auto& e : edges) v.push_back(e.from);
    return v;
  }

  static ConvexRegion polygon(const std::vector<Point>& ccw) {
    ConvexRegion r;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
      r.edges.push_back({ccw[i], ccw[(i + 1) % ccw.size()]});
    }
    return r;
  }

  static ConvexRegion disk(const Disk& d) {
    const Point p{d.center.x + d.radius, d.center.y};
    return ConvexRegion{{RegionEdge{p, p, true, d.center, d.radius}}};
  }
};

inline Containment point_in_convex_region(const Point& p, const ConvexRegion& region) {
  if (region.empty()) throw Error(ErrorKind::kInvalidArgument, "point_in_convex_region: empty region");
  const auto& E = region.edges;
  if (E.size() == 1 && E[0].is_arc) {
    const int s = compare_distance(p, E[0].center, E[0].radius);
    return s < 0 ? Containment::kInside : (s == 0 ? Containment::kBoundary : Containment::kOutside);
  }
  for (std::size_t i = 0; i < E.size(); ++i) {
    if (E[i].to != E[(i + 1) % E.size()].from) {
      throw Error(ErrorKind::kInvalidArgument, "point_in_convex_region: boundary is not a closed chain");
    }
  }
  if (E.size() >= 3) {
    for (std::size_t i = 0; i < E.size(); ++i) {
      const auto& a = E[i];
      const auto& b = E[(i + 1) % E.size()];
      if (orient(a.from, a.to, b.to) == Orientation::kClockwise) {
        throw Error(ErrorKind::kInvalidArgument, "point_in_convex_region: region is not convex");
      }
    }
  }
  bool on_line = false;
  for (const auto& e : E) {
    if (e.from == p || e.to == p) return Containment::kBoundary;
    const Orientation o = orient(e.from, e.to, p);
    if (o == Orientation::kClockwise) {
      if (!e.is_arc) return Containment::kOutside;
      const int s = compare_distance(p, e.center, e.radius);
      return s < 0 ? Containment::kInside : (s == 0 ? Containment::kBoundary : Containment::kOutside);
    }
    if (o == Orientation::kCollinear && !e.is_arc) on_line = true;
  }
  return on_line ? Containment::kBoundary : Containment::kInside;
}

}  // namespace hullseq
