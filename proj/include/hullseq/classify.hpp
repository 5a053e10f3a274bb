// Disk classification with respect to the convex hull of realizations.
//
// Impossible disks lie inside region I, guaranteed disks are disjoint from
// the hull of all other disks (equivalently outside region E). Stable
// guaranteed disks additionally have empty adjacent strips and guaranteed
// strip-hull neighbours.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hullseq/envelope.hpp"
#include "hullseq/error.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"
#include "hullseq/strip_hull.hpp"

namespace hullseq {

enum class DiskClass {
  kStableImpossibleInterior,
  kUnstablePotentialInterior,
  kUnstablePotentialBoundary,
  kUnstableGuaranteedBoundary,
  kStableGuaranteedBoundary,
};

inline const char* to_string(DiskClass c) {
  switch (c) {
    case DiskClass::kStableImpossibleInterior: return "STABLE_IMPOSSIBLE_INTERIOR";
    case DiskClass::kUnstablePotentialInterior: return "UNSTABLE_POTENTIAL_INTERIOR";
    case DiskClass::kUnstablePotentialBoundary: return "UNSTABLE_POTENTIAL_BOUNDARY";
    case DiskClass::kUnstableGuaranteedBoundary: return "UNSTABLE_GUARANTEED_BOUNDARY";
    case DiskClass::kStableGuaranteedBoundary: return "STABLE_GUARANTEED_BOUNDARY";
  }
  return "?";
}

inline DiskClass disk_class_from_string(const std::string& s) {
  for (auto c : {DiskClass::kStableImpossibleInterior, DiskClass::kUnstablePotentialInterior,
                 DiskClass::kUnstablePotentialBoundary, DiskClass::kUnstableGuaranteedBoundary,
                 DiskClass::kStableGuaranteedBoundary}) {
    if (s == to_string(c)) return c;
  }
  throw Error(ErrorKind::kMalformedInput, "unknown disk class '" + s + "'");
}

inline bool is_stable(DiskClass c) {
  return c == DiskClass::kStableImpossibleInterior || c == DiskClass::kStableGuaranteedBoundary;
}
inline bool is_guaranteed(DiskClass c) {
  return c == DiskClass::kStableGuaranteedBoundary || c == DiskClass::kUnstableGuaranteedBoundary;
}
inline bool is_potential(DiskClass c) {
  return c == DiskClass::kUnstablePotentialBoundary || c == DiskClass::kUnstablePotentialInterior;
}
inline bool is_boundary(DiskClass c) {
  return c == DiskClass::kUnstablePotentialBoundary || is_guaranteed(c);
}

/// kFull, or the quarter hull of quadrant 0..3.
struct Scope {
  int quadrant = -1;
  bool full() const { return quadrant < 0; }
  static Scope full_hull() { return {}; }
  static Scope quarter(int q) { return {q & 3}; }
  friend bool operator==(const Scope&, const Scope&) = default;
};

struct Classification {
  std::map<int, DiskClass> classes;
  Scope scope;

  DiskClass at(int id) const {
    auto it = classes.find(id);
    if (it == classes.end()) throw Error(ErrorKind::kIdMismatch, "classification has no disk " + std::to_string(id));
    return it->second;
  }
  int unstable_count() const {
    return static_cast<int>(std::count_if(classes.begin(), classes.end(), [](const auto& kv) { return !is_stable(kv.second); }));
  }
};

/// A realization is a point per disk id.
using Realization = std::map<int, Point>;

struct PotentialWitness {
  int disk = -1;
  std::optional<Realization> as_vertex;
  std::optional<Realization> not_vertex;
};

namespace detail {

inline double arc_max_dot(const Point& w, double a, double b) {
  double best = std::max(dot(w, direction(a)), dot(w, direction(b)));
  const double n = norm(w);
  if (n > 0) {
    double t = std::atan2(w.y, w.x);
    if (t < 0) t += 2.0 * std::numbers::pi;
    if (t >= a && t <= b) best = n;
  }
  return best;
}

inline double arc_min_dot(const Point& w, double a, double b) { return -arc_max_dot(w * -1.0, a, b); }

inline double geometry_scale(const std::vector<Disk>& disks) {
  double s = 1.0;
  for (const auto& d : disks) s = std::max({s, std::fabs(d.center.x), std::fabs(d.center.y), d.radius});
  return s;
}

/// Clips a convex polygon (CCW) by {x : <x, u> <= t}.
inline std::vector<Point> clip_halfplane(const std::vector<Point>& poly, const Point& u, double t) {
  std::vector<Point> out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point a = poly[i], b = poly[(i + 1) % n];
    const double da = dot(a, u) - t, db = dot(b, u) - t;
    if (da <= 0) out.push_back(a);
    if ((da < 0 && db > 0) || (da > 0 && db < 0)) {
      const double s = da / (da - db);
      out.push_back(a + (b - a) * s);
    }
  }
  return out;
}

inline std::vector<Point> halfplane_polygon(const std::vector<std::pair<Point, double>>& hps, double scale) {
  const double big = 4.0 * scale + 10.0;
  std::vector<Point> poly{{-big, -big}, {big, -big}, {big, big}, {-big, big}};
  for (const auto& [u, t] : hps) {
    poly = clip_halfplane(poly, u, t);
    if (poly.size() < 3) return {};
  }
  return poly;
}

}  // namespace detail

/// Intersection of all halfplanes meeting every disk. Polygonal.
inline ConvexRegion region_I(const std::vector<Disk>& disks) {
  if (disks.empty()) throw Error(ErrorKind::kInvalidArgument, "region_I: empty disk set");
  const auto arcs = support_envelope(disks, -1.0, 0);
  std::vector<std::pair<Point, double>> hps;
  for (const auto& a : arcs) {
    const int pieces = 1 + static_cast<int>((a.end - a.begin) / (0.45 * std::numbers::pi));
    for (int k = 0; k <= pieces; ++k) {
      const double th = a.begin + (a.end - a.begin) * k / pieces;
      hps.push_back({direction(th), support_value(disks[a.disk], th, -1.0)});
    }
  }
  auto poly = detail::halfplane_polygon(hps, detail::geometry_scale(disks));
  if (poly.size() < 3) return {};
  return ConvexRegion::polygon(poly);
}

/// Intersection of all halfplanes fully containing at least n-1 disks,
/// approximated from outside by tangent halfplanes every half degree.
inline ConvexRegion region_E(const std::vector<Disk>& disks) {
  if (disks.size() < 2) throw Error(ErrorKind::kInvalidArgument, "region_E: needs at least two disks");
  const auto arcs = support_envelope(disks, +1.0, 1);
  std::vector<std::pair<Point, double>> hps;
  const double step = std::numbers::pi / 360.0;
  for (const auto& a : arcs) {
    const int pieces = 1 + static_cast<int>((a.end - a.begin) / step);
    for (int k = 0; k <= pieces; ++k) {
      const double th = a.begin + (a.end - a.begin) * k / pieces;
      hps.push_back({direction(th), support_value(disks[a.disk], th, +1.0)});
    }
  }
  auto poly = detail::halfplane_polygon(hps, detail::geometry_scale(disks));
  if (poly.size() < 3) return {};
  return ConvexRegion::polygon(poly);
}

/// Disk i contained in I: for every direction, <c,u> + r <= max_j(<c_j,u> - r_j).
inline bool disk_inside_I(const std::vector<Disk>& disks, std::size_t i) {
  const Disk& d = disks[i];
  if (disks.size() < 3) return false;
  if (equal_radii(disks)) {
    // I is the hull of centers shrunk by r; test B(c, 2r) inside the hull.
    std::vector<Point> centers;
    for (const auto& e : disks) centers.push_back(e.center);
    const auto hull = convex_hull_points(centers);
    if (hull.size() < 3) return false;
    for (std::size_t e = 0; e < hull.size(); ++e) {
      const Point a = hull[e], b = hull[(e + 1) % hull.size()];
      if (orient(a, b, d.center) != Orientation::kCounterClockwise) return false;
      const int s = exact::sign_of([&](auto t) {
        using T = decltype(t);
        const T ux = T(b.x) - T(a.x), uy = T(b.y) - T(a.y);
        const T cr = ux * (T(d.center.y) - T(a.y)) - uy * (T(d.center.x) - T(a.x));
        return cr * cr - T(4.0) * T(d.radius) * T(d.radius) * (ux * ux + uy * uy);
      });
      if (s < 0) return false;
    }
    return true;
  }
  const auto arcs = support_envelope(disks, -1.0, 0);
  const double tol = 1e-12 * detail::geometry_scale(disks);
  for (const auto& a : arcs) {
    if (static_cast<std::size_t>(a.disk) == i) return false;
    const Disk& j = disks[a.disk];
    const double m = detail::arc_min_dot(j.center - d.center, a.begin, a.end) - j.radius - d.radius;
    if (m < -tol) return false;
  }
  return true;
}

/// Disk i outside E: some direction has <c,u> - r > second largest <c_j,u> + r_j.
inline bool disk_outside_E(const std::vector<Disk>& disks, std::size_t i) {
  if (disks.size() < 2) return true;
  const Disk& d = disks[i];
  const auto arcs = support_envelope(disks, +1.0, 1);
  const double tol = 1e-12 * detail::geometry_scale(disks);
  for (const auto& a : arcs) {
    if (static_cast<std::size_t>(a.disk) == i) continue;
    const Disk& j = disks[a.disk];
    if (detail::arc_max_dot(d.center - j.center, a.begin, a.end) - d.radius - j.radius > tol) return true;
  }
  return false;
}

/// Disk i disjoint from the hull of the union of all other disks.
inline bool disk_guaranteed(const std::vector<Disk>& disks, std::size_t i) {
  if (disks.size() == 1) return true;
  const Disk& d = disks[i];
  std::vector<Disk> others;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    if (k != i) others.push_back(disks[k]);
  }
  if (equal_radii(disks)) {
    const auto ids = detail::center_hull_ids(others);
    DiskIndex index(others);
    std::vector<Point> poly;
    for (int id : ids) poly.push_back(others[index.at(id)].center);
    const double r = others.front().radius;
    if (poly.size() == 1) return compare_distance(d.center, poly[0], r + d.radius) > 0 &&
                                 !segment_within(poly[0], poly[0], d.center, r, d.radius);
    bool outside = poly.size() == 2;
    for (std::size_t e = 0; e < poly.size(); ++e) {
      const Point a = poly[e], b = poly[(e + 1) % poly.size()];
      if (segment_within(a, b, d.center, r, d.radius)) return false;
      if (orient(a, b, d.center) == Orientation::kClockwise) outside = true;
    }
    return outside;
  }
  const auto arcs = support_envelope(others, +1.0, 0);
  const double tol = 1e-12 * detail::geometry_scale(disks);
  for (const auto& a : arcs) {
    const Disk& j = others[a.disk];
    if (detail::arc_max_dot(d.center - j.center, a.begin, a.end) - d.radius - j.radius > tol) return true;
  }
  return false;
}

namespace detail {

inline bool strip_empty(const StripMembership& m, std::size_t s) { return m.sets[s].empty(); }

/// Guaranteed disk on the quarter chain whose realized neighbouring edges
/// always point strictly up-left: the spine vectors to both neighbours keep
/// a margin of 2r from the axes.
inline bool edges_stay_in_quadrant(const Point& from, const Point& to, double reach) {
  const Point v = to - from;
  return v.x < -reach && v.y > reach;
}

}  // namespace detail

inline std::vector<bool> strip_emptiness(const StripHull& sh, const StripMembership& m) {
  std::vector<bool> out(sh.strips.size());
  for (std::size_t i = 0; i < sh.strips.size(); ++i) out[i] = m.sets[i].empty();
  return out;
}

/// Disks on which supersequence preprocessing works for quadrant frames:
/// equal radii pass through, otherwise every disk is enlarged to the largest
/// radius about its center.
inline std::vector<Disk> working_disks(const std::vector<Disk>& disks) {
  if (equal_radii(disks)) return disks;
  double rmax = 0.0;
  for (const auto& d : disks) rmax = std::max(rmax, d.radius);
  auto out = disks;
  for (auto& d : out) d.radius = rmax;
  return out;
}

inline Classification classify_full(const std::vector<Disk>& disks) {
  validate_disks(disks);
  Classification cls;
  cls.scope = Scope::full_hull();
  if (disks.empty()) return cls;
  DiskIndex index(disks);
  const auto boundary = boundary_disks(disks);
  std::set<int> on_boundary(boundary.entries.begin(), boundary.entries.end());

  std::map<int, bool> guaranteed;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    guaranteed[disks[i].id] = on_boundary.count(disks[i].id) && disk_guaranteed(disks, i);
  }
  const auto sh = build_strip_hull(boundary, disks);
  const auto m = strip_membership(sh, disks);
  const auto& b = boundary.entries;
  const std::size_t k = b.size();

  for (std::size_t i = 0; i < disks.size(); ++i) {
    const int id = disks[i].id;
    DiskClass c;
    if (guaranteed[id]) {
      bool stable = true;
      if (k >= 2) {
        // A guaranteed disk appears once on the strip hull.
        const auto pos = static_cast<std::size_t>(std::find(b.begin(), b.end(), id) - b.begin());
        const std::size_t prev = (pos + k - 1) % k;
        stable = detail::strip_empty(m, prev) && detail::strip_empty(m, pos) && guaranteed[b[prev]] &&
                 guaranteed[b[(pos + 1) % k]];
      }
      c = stable ? DiskClass::kStableGuaranteedBoundary : DiskClass::kUnstableGuaranteedBoundary;
    } else if (!on_boundary.count(id) && disk_inside_I(disks, i)) {
      c = DiskClass::kStableImpossibleInterior;
    } else {
      c = on_boundary.count(id) ? DiskClass::kUnstablePotentialBoundary : DiskClass::kUnstablePotentialInterior;
    }
    cls.classes[id] = c;
  }
  return cls;
}

/// Classification relative to the quarter hull of one quadrant. Chain
/// endpoints (the extreme disks) are never reported stable.
inline Classification classify_quarter(const std::vector<Disk>& disks, int quadrant) {
  validate_disks(disks);
  Classification cls;
  cls.scope = Scope::quarter(quadrant);
  if (disks.empty()) return cls;
  const auto frame = to_quadrant_frame(disks, quadrant);
  const auto work = working_disks(frame);
  DiskIndex index(frame);
  const auto sh = build_quarter_strip_hull(work);
  const auto m = strip_membership(sh, work);

  std::set<int> touched;
  for (std::size_t s = 0; s < sh.strips.size(); ++s) {
    touched.insert(sh.strips[s].left);
    touched.insert(sh.strips[s].right);
    touched.insert(m.sets[s].begin(), m.sets[s].end());
  }
  std::map<int, bool> guaranteed;
  for (int id : sh.chain) guaranteed[id] = disk_guaranteed(frame, index.at(id));

  for (const auto& d : frame) cls.classes[d.id] = touched.count(d.id) ? DiskClass::kUnstablePotentialInterior
                                                                     : DiskClass::kStableImpossibleInterior;
  const double reach = 2.0 * work.front().radius;
  for (std::size_t j = 0; j < sh.chain.size(); ++j) {
    const int id = sh.chain[j];
    cls.classes[id] = DiskClass::kUnstablePotentialBoundary;
    if (j == 0 || j + 1 == sh.chain.size() || !guaranteed[id]) continue;
    const Point c = frame[index.at(id)].center;
    const Point prev = frame[index.at(sh.chain[j - 1])].center;
    const Point next = frame[index.at(sh.chain[j + 1])].center;
    if (!detail::edges_stay_in_quadrant(prev, c, reach) || !detail::edges_stay_in_quadrant(c, next, reach)) continue;
    // Strip j (1-based after the leading half-strip) joins chain[j-1] and chain[j].
    const bool stable = m.sets[j].empty() && m.sets[j + 1].empty() && guaranteed[sh.chain[j - 1]] &&
                        guaranteed[sh.chain[j + 1]];
    cls.classes[id] = stable ? DiskClass::kStableGuaranteedBoundary : DiskClass::kUnstableGuaranteedBoundary;
  }
  return cls;
}

inline Classification classify_disks(const std::vector<Disk>& disks, Scope scope) {
  return scope.full() ? classify_full(disks) : classify_quarter(disks, scope.quadrant);
}

// ---------------------------------------------------------------------------
// Witnesses for potential disks.

/// Point of d at fraction frac of the radius along unit direction u, pulled
/// inward until the exact containment test accepts it.
inline Point point_in_disk(const Disk& d, const Point& u, double frac) {
  for (int k = 0; k < 60; ++k) {
    const Point p = d.center + u * (d.radius * frac);
    if (disk_contains(d, p)) return p;
    frac *= (1.0 - 1e-12) - k * 1e-10;
  }
  return d.center;
}

inline bool realization_has_vertex(const Realization& real, int id) {
  std::vector<Point> pts;
  for (const auto& [k, p] : real) pts.push_back(p);
  const auto hull = convex_hull_points(pts);
  const Point q = real.at(id);
  if (std::find(hull.begin(), hull.end(), q) == hull.end()) return false;
  // A coincident point from another disk would make the vertex ambiguous.
  for (const auto& [k, p] : real) {
    if (k != id && p == q) return false;
  }
  return true;
}

inline std::optional<Realization> vertex_witness(const std::vector<Disk>& disks, std::size_t i) {
  const Disk& d = disks[i];
  std::vector<Disk> others;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    if (k != i) others.push_back(disks[k]);
  }
  std::vector<double> dirs;
  if (!others.empty()) {
    for (const auto& a : support_envelope(others, -1.0, 0)) {
      dirs.push_back(a.begin);
      dirs.push_back(0.5 * (a.begin + a.end));
      const Point w = d.center - others[a.disk].center;
      double t = std::atan2(w.y, w.x);
      if (t < 0) t += 2.0 * std::numbers::pi;
      if (t >= a.begin && t <= a.end) dirs.push_back(t);
    }
  }
  for (int k = 0; k < 64; ++k) dirs.push_back(2.0 * std::numbers::pi * k / 64.0);
  auto margin = [&](double th) {
    double best = -INFINITY;
    for (const auto& o : others) best = std::max(best, support_value(o, th, -1.0));
    return support_value(d, th, +1.0) - best;
  };
  std::sort(dirs.begin(), dirs.end(), [&](double a, double b) { return margin(a) > margin(b); });
  for (std::size_t k = 0; k < std::min<std::size_t>(dirs.size(), 8); ++k) {
    const Point u = direction(dirs[k]);
    Realization real;
    real[d.id] = point_in_disk(d, u, 1.0);
    for (const auto& o : others) real[o.id] = point_in_disk(o, u * -1.0, 1.0);
    if (realization_has_vertex(real, d.id)) return real;
  }
  return std::nullopt;
}

inline std::optional<Realization> non_vertex_witness(const std::vector<Disk>& disks, std::size_t i) {
  const Disk& d = disks[i];
  std::vector<Disk> others;
  for (std::size_t k = 0; k < disks.size(); ++k) {
    if (k != i) others.push_back(disks[k]);
  }
  // A point shared with another disk hides d behind a coincident point.
  for (const auto& o : others) {
    const Point w = o.center - d.center;
    const double dist = norm(w);
    if (dist >= d.radius + o.radius) continue;
    const Point u = dist > 0 ? w * (1.0 / dist) : Point{1.0, 0.0};
    const double lo = std::max(-d.radius, dist - o.radius), hi = std::min(d.radius, dist + o.radius);
    const Point x = d.center + u * (0.5 * (lo + hi));
    if (!disk_contains(d, x) || !disk_contains(o, x)) continue;
    Realization real;
    for (const auto& e : others) real[e.id] = e.center;
    real[o.id] = x;
    real[d.id] = x;
    if (!realization_has_vertex(real, d.id)) return real;
  }
  if (others.size() < 2) return std::nullopt;
  // A point strictly inside a segment between two other points. Coordinates
  // are snapped to a dyadic grid so that the interpolated point is exact and
  // the collinearity is real rather than approximate.
  const double grid = std::ldexp(1.0, std::ilogb(std::max(detail::geometry_scale(disks), 1.0)) - 24);
  auto snap = [&](const Disk& o, Point p) -> std::optional<Point> {
    p = {std::round(p.x / grid) * grid, std::round(p.y / grid) * grid};
    if (disk_contains(o, p)) return p;
    return std::nullopt;
  };
  auto ring = [&](const Disk& o, std::vector<double> radii, int dirs) {
    std::vector<Point> out;
    if (auto p = snap(o, o.center)) out.push_back(*p);
    for (double s : radii) {
      for (int k = 0; k < dirs; ++k) {
        if (auto p = snap(o, o.center + direction(2.0 * std::numbers::pi * k / dirs) * (o.radius * s))) out.push_back(*p);
      }
    }
    return out;
  };
  for (std::size_t a = 0; a < others.size(); ++a) {
    const auto sa = ring(others[a], {0.5, 0.9, 0.99}, 64);
    for (std::size_t b = 0; b < others.size(); ++b) {
      if (b == a) continue;
      const Disk& ob = others[b];
      // Candidates for x lean from d toward the segment between the centers.
      const Point ca = others[a].center, e = ob.center - ca;
      const double t = std::clamp(dot(d.center - ca, e) / std::max(dot(e, e), 1e-300), 0.0, 1.0);
      Point toward = ca + e * t - d.center;
      const double tl = norm(toward);
      toward = tl > 0 ? toward * (1.0 / tl) : Point{1.0, 0.0};
      std::vector<Point> xs;
      for (double f : {0.0, 0.5, 0.9, 0.99, 0.999}) {
        if (auto x = snap(d, d.center + toward * (d.radius * f))) xs.push_back(*x);
      }
      for (const auto& x : ring(d, {0.99}, 16)) xs.push_back(x);
      for (const auto& x : xs) {
        for (const auto& p1 : sa) {
          // p2 continues the ray from p1 through x, with a dyadic step so the
          // three points are exactly collinear.
          const Point w = x - p1;
          const double ww = dot(w, w);
          if (ww == 0) continue;
          const double lam = std::round(dot(ob.center - x, w) / ww * 64.0) / 64.0;
          if (lam <= 0) continue;
          const Point p2 = x + w * lam;
          if (!disk_contains(ob, p2)) continue;
          Realization real;
          for (const auto& o : others) real[o.id] = o.center;
          real[others[a].id] = p1;
          real[ob.id] = p2;
          real[d.id] = x;
          if (!realization_has_vertex(real, d.id)) return real;
        }
      }
    }
  }
  // A point of the union hull is a convex combination of c_j + r_j v for one
  // common offset v; search v and a point of d inside that polygon.
  std::vector<Point> offsets{{0.0, 0.0}};
  for (double s : {0.5, 0.9, 1.0}) {
    for (int k = 0; k < 48; ++k) offsets.push_back(direction(2.0 * std::numbers::pi * k / 48.0) * s);
  }
  for (const auto& v : offsets) {
    Realization real;
    std::vector<Point> pts;
    for (const auto& o : others) {
      const double len = norm(v);
      const Point p = len > 0 ? point_in_disk(o, v * (1.0 / len), len) : o.center;
      real[o.id] = p;
      pts.push_back(p);
    }
    const auto poly = convex_hull_points(pts);
    if (poly.size() < 3) continue;
    Point centroid{0, 0};
    for (const auto& p : poly) centroid = centroid + p * (1.0 / poly.size());
    Point w = centroid - d.center;
    const double wl = norm(w);
    w = wl > 0 ? w * (1.0 / wl) : Point{1.0, 0.0};
    for (double s : {0.0, 0.5, 0.9, 0.999}) {
      const Point x = point_in_disk(d, w, s);
      bool strictly_inside = true;
      for (std::size_t e = 0; e < poly.size() && strictly_inside; ++e) {
        strictly_inside = orient(poly[e], poly[(e + 1) % poly.size()], x) == Orientation::kCounterClockwise;
      }
      if (!strictly_inside) continue;
      real[d.id] = x;
      if (!realization_has_vertex(real, d.id)) return real;
    }
  }
  // Near-tangent cases: x is hidden by a triangle of three other disks when
  // each corner sits on the disk's tangent point, or center, as seen from x.
  // The corners of the union hull around x are found this way because each
  // disk reaches its widest angle from x at the tangent points.
  auto corners = [&](const Disk& o, const Point& x) {
    std::vector<Point> out{o.center};
    const Point w = o.center - x;
    const double dist = norm(w);
    if (dist <= o.radius) return out;
    const double phi = std::asin(o.radius / dist), base = std::atan2(w.y, w.x);
    for (double s : {1.0, -1.0}) {
      // The tangent point is where the radius is perpendicular to the ray.
      const Point ray = direction(base + s * phi);
      const Point tp = x + ray * std::sqrt(dist * dist - o.radius * o.radius);
      const Point r = tp - o.center;
      const double rl = norm(r);
      if (rl > 0) out.push_back(point_in_disk(o, r * (1.0 / rl), 1.0));
    }
    return out;
  };
  std::vector<Point> xs{d.center};
  for (double s : {0.5, 0.9, 0.99, 0.999, 1.0}) {
    for (int k = 0; k < 64; ++k) xs.push_back(point_in_disk(d, direction(2.0 * std::numbers::pi * k / 64.0), s));
  }
  for (const auto& x : xs) {
    std::vector<std::vector<Point>> cand;
    for (const auto& o : others) cand.push_back(corners(o, x));
    for (std::size_t a = 0; a < others.size(); ++a) {
      for (std::size_t b = a + 1; b < others.size(); ++b) {
        for (std::size_t c = b + 1; c < others.size(); ++c) {
          for (const auto& pa : cand[a]) {
            for (const auto& pb : cand[b]) {
              for (const auto& pc : cand[c]) {
                const int o1 = static_cast<int>(orient(pa, pb, x)), o2 = static_cast<int>(orient(pb, pc, x)),
                          o3 = static_cast<int>(orient(pc, pa, x));
                if (o1 == 0 || o1 != o2 || o2 != o3) continue;
                Realization real;
                for (const auto& o : others) real[o.id] = o.center;
                real[others[a].id] = pa;
                real[others[b].id] = pb;
                real[others[c].id] = pc;
                real[d.id] = x;
                if (!realization_has_vertex(real, d.id)) return real;
              }
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

inline std::vector<PotentialWitness> potential_witnesses(const std::vector<Disk>& disks, const Classification& cls) {
  std::vector<PotentialWitness> out;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    if (!is_potential(cls.at(disks[i].id))) continue;
    out.push_back({disks[i].id, vertex_witness(disks, i), non_vertex_witness(disks, i)});
  }
  return out;
}

}  // namespace hullseq
