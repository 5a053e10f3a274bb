// Upper envelopes of disk support functions over the circle of directions.
//
// For a direction u(theta) = (cos theta, sin theta) each disk contributes
// f_i(theta) = <c_i, u> + s * r_i with s = +1 (outer support) or s = -1
// (inner support). Two such functions cross at most twice, so the k-th
// largest value changes identity only at pairwise crossing angles. The
// envelope is assembled by sorting all crossing angles and evaluating the
// ranking on each elementary arc.
#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"

namespace hullseq {

struct EnvelopeArc {
  double begin = 0.0;  // radians, begin < end, within [0, 2*pi]
  double end = 0.0;
  int disk = -1;  // index into the input span
};

inline Point direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double support_value(const Disk& d, double theta, double sign) {
  const Point u = direction(theta);
  return d.center.x * u.x + d.center.y * u.y + sign * d.radius;
}

namespace detail {

inline double wrap_angle(double a) {
  constexpr double tau = 2.0 * std::numbers::pi;
  a = std::fmod(a, tau);
  if (a < 0) a += tau;
  return a;
}

/// Angles where f_i == f_j for the given support sign.
inline void crossing_angles(const Disk& a, const Disk& b, double sign, std::vector<double>& out) {
  const Point w = a.center - b.center;
  const double len = norm(w);
  const double delta = sign * (b.radius - a.radius);
  if (len == 0.0 || len < std::fabs(delta)) return;
  const double base = std::atan2(w.y, w.x);
  const double spread = std::acos(std::clamp(delta / len, -1.0, 1.0));
  out.push_back(wrap_angle(base + spread));
  out.push_back(wrap_angle(base - spread));
}

/// Index of the rank-th largest support value at theta; ties favor smaller id.
inline int ranked_at(const std::vector<Disk>& disks, double theta, double sign, int rank) {
  std::vector<int> idx(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) idx[i] = static_cast<int>(i);
  auto better = [&](int x, int y) {
    const double vx = support_value(disks[x], theta, sign);
    const double vy = support_value(disks[y], theta, sign);
    if (vx != vy) return vx > vy;
    return disks[x].id < disks[y].id;
  };
  std::nth_element(idx.begin(), idx.begin() + rank, idx.end(), better);
  return idx[rank];
}

/// Disks that can attain the maximum of the envelope. A disk whose center
/// lies deeper inside the hull of centers than its radius advantage allows
/// is never extreme.
inline std::vector<int> extreme_candidates(const std::vector<Disk>& disks, double sign) {
  std::vector<int> all(disks.size());
  for (std::size_t i = 0; i < disks.size(); ++i) all[i] = static_cast<int>(i);
  if (disks.size() <= 8) return all;
  std::vector<Point> centers;
  double rmin = disks[0].radius, rmax = disks[0].radius;
  for (const auto& d : disks) {
    centers.push_back(d.center);
    rmin = std::min(rmin, d.radius);
    rmax = std::max(rmax, d.radius);
  }
  const auto hull = convex_hull_points(centers);
  if (hull.size() < 3) return all;
  std::vector<int> keep;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Point c = disks[i].center;
    double depth = INFINITY;
    for (std::size_t e = 0; e < hull.size(); ++e) {
      const Point a = hull[e], b = hull[(e + 1) % hull.size()];
      depth = std::min(depth, cross(b - a, c - a) / norm(b - a));
    }
    const double slack = sign > 0 ? disks[i].radius - rmin : rmax - disks[i].radius;
    const double scale = 1e-9 * (1.0 + std::fabs(c.x) + std::fabs(c.y) + rmax);
    if (depth <= slack + scale) keep.push_back(static_cast<int>(i));
  }
  return keep;
}

}  // namespace detail

/// Envelope of the rank-th largest support value (rank 0 = maximum),
/// as maximal arcs covering [0, 2*pi). Returned disk indices refer to the
/// input vector.
inline std::vector<EnvelopeArc> support_envelope(const std::vector<Disk>& disks, double sign, int rank = 0) {
  std::vector<EnvelopeArc> arcs;
  if (static_cast<int>(disks.size()) <= rank) return arcs;
  std::vector<int> cand = rank == 0 ? detail::extreme_candidates(disks, sign) : std::vector<int>{};
  if (rank != 0) {
    for (std::size_t i = 0; i < disks.size(); ++i) cand.push_back(static_cast<int>(i));
  }
  std::vector<Disk> sub;
  for (int i : cand) sub.push_back(disks[i]);

  constexpr double tau = 2.0 * std::numbers::pi;
  std::vector<double> angles{0.0};
  for (std::size_t i = 0; i < sub.size(); ++i) {
    for (std::size_t j = i + 1; j < sub.size(); ++j) detail::crossing_angles(sub[i], sub[j], sign, angles);
  }
  std::sort(angles.begin(), angles.end());
  angles.erase(std::unique(angles.begin(), angles.end()), angles.end());
  angles.push_back(tau);
  for (std::size_t k = 0; k + 1 < angles.size(); ++k) {
    const double a = angles[k], b = angles[k + 1];
    if (!(b > a)) continue;
    const int who = cand[detail::ranked_at(sub, 0.5 * (a + b), sign, rank)];
    if (!arcs.empty() && arcs.back().disk == who) {
      arcs.back().end = b;
    } else {
      arcs.push_back({a, b, who});
    }
  }
  return arcs;
}

}  // namespace hullseq
