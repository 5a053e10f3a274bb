// Deterministic instance generators for tests and benchmarks.
#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "hullseq/geometry.hpp"
#include "hullseq/preprocess.hpp"
#include "hullseq/strip_hull.hpp"

namespace hullseq::gen {

/// n pairwise disjoint unit disks placed by dart throwing in a square whose
/// side keeps the covered fraction near `density`.
inline std::vector<Disk> disjoint_unit(int n, std::uint64_t seed, double density = 0.25) {
  std::mt19937_64 rng(seed);
  const double side = std::sqrt(n * std::numbers::pi / density);
  std::uniform_real_distribution<double> coord(0.0, side);
  std::vector<Disk> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < n) {
    Disk d{static_cast<int>(out.size()), {coord(rng), coord(rng)}, 1.0};
    bool clear = true;
    for (const auto& e : out) {
      if (disks_intersect(d, e)) {
        clear = false;
        break;
      }
    }
    if (clear) out.push_back(d);
    if (++attempts > 1000 * n) break;  // only reachable for absurd densities
  }
  return out;
}

/// Unit disks in clusters of up to `ply` copies jittered around shared
/// sites, so the realized ply is at most `ply` (and usually equal).
inline std::vector<Disk> ply_unit(int n, int ply, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const int sites = std::max(1, (n + ply - 1) / ply);
  const double side = std::sqrt(sites * std::numbers::pi / 0.08);
  std::uniform_real_distribution<double> coord(0.0, side);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  std::vector<Point> centers;
  while (static_cast<int>(centers.size()) < sites) {
    const Point c{coord(rng), coord(rng)};
    bool clear = true;
    for (const auto& e : centers) {
      if (norm(c - e) < 5.0) clear = false;
    }
    if (clear) centers.push_back(c);
  }
  std::vector<Disk> out;
  for (int i = 0; i < n; ++i) {
    const Point c = centers[i / ply];
    out.push_back({i, {c.x + jitter(rng), c.y + jitter(rng)}, 1.0});
  }
  return out;
}

/// Disks with radii uniform in [1, ratio], centers uniform in a square.
inline std::vector<Disk> bounded_ratio(int n, double ratio, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const double side = std::sqrt(n * std::numbers::pi * ratio * ratio / 0.3);
  std::uniform_real_distribution<double> coord(0.0, side);
  std::uniform_real_distribution<double> rad(1.0, ratio);
  std::vector<Disk> out;
  for (int i = 0; i < n; ++i) out.push_back({i, {coord(rng), coord(rng)}, rad(rng)});
  return out;
}

/// n unit disks evenly spaced on a circle of radius 50n (n divisible by 4
/// puts disks exactly on the axes) plus a small unstable cluster just inside
/// the ring near 45 degrees.
inline std::vector<Disk> stable_ring(int n, int cluster = 3) {
  std::vector<Disk> out;
  const double R = 50.0 * n;
  for (int i = 0; i < n; ++i) {
    const double t = 2.0 * std::numbers::pi * i / n;
    Point c{R * std::cos(t), R * std::sin(t)};
    // Exact axis positions keep the extreme disks unambiguous.
    if (i % (n / 4) == 0) {
      const int k = i / (n / 4);
      c = k == 0 ? Point{R, 0} : k == 1 ? Point{0, R} : k == 2 ? Point{-R, 0} : Point{0, -R};
    }
    out.push_back({i, c, 1.0});
  }
  // The strip between ring disks j and j+1 nearest to 45 degrees.
  const int j = n / 8;
  const Point a = out[j].center, b = out[j + 1].center;
  const Point mid = (a + b) * 0.5;
  const Point inward = mid * (-1.0 / norm(mid));
  const Point along = (b - a) * (1.0 / norm(b - a));
  for (int k = 0; k < cluster; ++k) {
    const Point c = mid + inward * (0.5 + 0.7 * k) + along * (2.5 * (k - 1));
    out.push_back({n + k, c, 1.0});
  }
  return out;
}

/// k unit disks on a circle far apart from each other.
inline std::vector<Disk> far_ring(int k, double radius = 100.0) {
  std::vector<Disk> out;
  for (int i = 0; i < k; ++i) {
    const double t = 2.0 * std::numbers::pi * (i + 0.5) / k;
    out.push_back({i, {radius * std::cos(t), radius * std::sin(t)}, 1.0});
  }
  return out;
}

/// Small random instance with n <= 8 for classification checks; unit radii
/// when `unit` is set, otherwise radii in [0.5, 2].
inline std::vector<Disk> small_random(int n, std::uint64_t seed, bool unit) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-6.0, 6.0);
  std::uniform_real_distribution<double> rad(0.5, 2.0);
  std::vector<Disk> out;
  for (int i = 0; i < n; ++i) out.push_back({i, {coord(rng), coord(rng)}, unit ? 1.0 : rad(rng)});
  return out;
}

}  // namespace hullseq::gen
