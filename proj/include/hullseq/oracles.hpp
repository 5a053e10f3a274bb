// Brute-force references and property checkers.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hullseq/classify.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"
#include "hullseq/parallel.hpp"
#include "hullseq/preprocess.hpp"

namespace hullseq {

/// Quarter hull through the full monotone-chain hull.
inline std::vector<Point> brute_quarter_hull(const std::vector<Point>& pts) {
  if (pts.empty()) throw Error(ErrorKind::kInvalidArgument, "brute_quarter_hull: empty input");
  return quarter_hull_points(pts);
}

/// Jarvis march with exact orientation; same output convention as
/// convex_hull_points (CCW from the lexicographically smallest vertex,
/// collinear points dropped).
inline std::vector<Point> gift_wrap_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;
  std::vector<Point> out;
  Point cur = pts.front();
  auto farther = [](const Point& o, const Point& a, const Point& b) {
    return compare_distance(o, b, 0.0) > 0 && dot(b - o, b - o) > dot(a - o, a - o);
  };
  do {
    out.push_back(cur);
    Point cand = cur;
    for (const auto& q : pts) {
      if (q == cur) continue;
      if (cand == cur) {
        cand = q;
        continue;
      }
      const auto o = orient(cur, cand, q);
      if (o == Orientation::kClockwise || (o == Orientation::kCollinear && farther(cur, cand, q))) cand = q;
    }
    cur = cand;
  } while (cur != out.front() && out.size() <= pts.size());
  return out;
}

inline Realization center_realization(const std::vector<Disk>& disks) {
  Realization r;
  for (const auto& d : disks) r[d.id] = d.center;
  return r;
}

/// Uniform point per disk by rejection sampling in its bounding square.
inline Realization random_realization(const std::vector<Disk>& disks, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  Realization r;
  for (const auto& d : disks) {
    for (;;) {
      const Point p{d.center.x + d.radius * unit(rng), d.center.y + d.radius * unit(rng)};
      if (disk_contains(d, p)) {
        r[d.id] = p;
        break;
      }
    }
  }
  return r;
}

/// Boundary-extreme realizations: all disks pushed in each of the 8 axis and
/// diagonal directions, all pushed away from and towards the centroid, then
/// one disk pushed outward with the rest pulled inward, then one disk
/// pushed diagonally against all others, up to the budget.
inline std::vector<Realization> adversarial_realizations(const std::vector<Disk>& disks, std::size_t budget = 64) {
  std::vector<Realization> out;
  if (disks.empty() || budget == 0) return out;
  // Families overlap on small inputs; keep each realization once.
  auto add = [&](Realization r) {
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  };
  // Axis and diagonal unit vectors, written out so repeats compare equal.
  const double h = std::numbers::sqrt2 / 2.0;
  const Point compass[8] = {{1, 0}, {h, h}, {0, 1}, {-h, h}, {-1, 0}, {-h, -h}, {0, -1}, {h, -h}};
  for (int k = 0; k < 8 && out.size() < budget; ++k) {
    const Point u = compass[k];
    Realization r;
    for (const auto& d : disks) r[d.id] = point_in_disk(d, u, 1.0);
    add(std::move(r));
  }
  Point centroid{0.0, 0.0};
  for (const auto& d : disks) centroid = centroid + d.center * (1.0 / disks.size());
  auto unit_from = [](const Point& from, const Point& to) {
    const Point w = to - from;
    const double n = norm(w);
    return n > 0 ? w * (1.0 / n) : Point{1.0, 0.0};
  };
  for (double sign : {1.0, -1.0}) {
    if (out.size() >= budget) break;
    Realization r;
    for (const auto& d : disks) r[d.id] = point_in_disk(d, unit_from(centroid, d.center) * sign, 1.0);
    add(std::move(r));
  }
  for (std::size_t i = 0; i < disks.size() && out.size() < budget; ++i) {
    Realization r;
    for (std::size_t j = 0; j < disks.size(); ++j) {
      const double sign = i == j ? 1.0 : -1.0;
      r[disks[j].id] = point_in_disk(disks[j], unit_from(centroid, disks[j].center) * sign, 1.0);
    }
    add(std::move(r));
  }
  // One disk pushed along a quadrant's diagonal, the rest pushed against it.
  // This lifts a disk over the chord of its neighbours on a quarter arc.
  for (std::size_t i = 0; i < disks.size() && out.size() < budget; ++i) {
    for (int k = 0; k < 4 && out.size() < budget; ++k) {
      const Point u = compass[2 * k + 1];
      Realization r;
      for (std::size_t j = 0; j < disks.size(); ++j) r[disks[j].id] = point_in_disk(disks[j], i == j ? u : u * -1.0, 1.0);
      add(std::move(r));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification reports.

struct VerifyFailure {
  int trial = 0;
  std::string kind;  // "embedding", "distance", "packing"
  std::string message;
  Realization realization;
};

struct VerifyReport {
  std::string instance;
  int trials = 0;
  std::vector<VerifyFailure> failures;
  double max_alpha_observed = 0.0;  // largest out-of-order extent seen
  double max_beta_observed = 0.0;   // largest points-per-diameter ratio seen
  double length_per_disk = 0.0;     // |seq| / n

  bool ok() const { return failures.empty(); }
  void merge(VerifyReport other) {
    trials += other.trials;
    max_alpha_observed = std::max(max_alpha_observed, other.max_alpha_observed);
    max_beta_observed = std::max(max_beta_observed, other.max_beta_observed);
    for (auto& f : other.failures) failures.push_back(std::move(f));
  }
};

/// Realized sequence of seq in its quadrant frame with per-entry marks.
inline std::vector<std::pair<Point, bool>> realized_frame_sequence(const Supersequence& seq, const Realization& real) {
  std::vector<std::pair<Point, bool>> out;
  for (std::size_t i = 0; i < seq.entries.size(); ++i) {
    auto it = real.find(seq.entries[i]);
    if (it == real.end()) throw Error(ErrorKind::kIdMismatch, "realization has no point for disk " + std::to_string(seq.entries[i]));
    out.push_back({to_quadrant_frame(it->second, seq.quadrant), seq.marked(i)});
  }
  return out;
}

/// Does hull embed in the realized sequence with every marked entry used?
inline bool embeds_with_marks(const std::vector<Point>& hull, const std::vector<std::pair<Point, bool>>& seq) {
  std::size_t k = 0;
  for (const auto& [p, marked] : seq) {
    if (k < hull.size() && p == hull[k]) {
      ++k;
    } else if (marked && !(k > 0 && p == hull[k - 1])) {
      return false;
    }
  }
  return k == hull.size();
}

namespace detail {

inline std::vector<Point> frame_points(const Realization& real, int quadrant) {
  std::vector<Point> pts;
  for (const auto& [id, p] : real) pts.push_back(to_quadrant_frame(p, quadrant));
  return pts;
}

inline std::string describe_hull(const std::vector<Point>& h) {
  std::string s;
  for (const auto& p : h) s += "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
  return s;
}

inline std::vector<Realization> trial_realizations(const std::vector<Disk>& disks, int trials, std::uint64_t seed) {
  std::vector<Realization> out;
  if (trials <= 0) return out;
  const std::size_t budget = std::min<std::size_t>(64, 10 + 5 * disks.size());
  for (auto& r : adversarial_realizations(disks, budget)) out.push_back(std::move(r));
  for (int t = 0; t < trials; ++t) out.push_back(random_realization(disks, seed * 0x9E3779B97F4A7C15ull + t));
  return out;
}

}  // namespace detail

/// Adversarial realizations followed by `trials` seeded random ones. Callers
/// checking several sequences of one disk set can build this list once.
inline std::vector<Realization> trial_realizations(const std::vector<Disk>& disks, int trials, std::uint64_t seed) {
  return detail::trial_realizations(disks, trials, seed);
}

/// Checks that the brute-force quarter hull of every given realization
/// embeds into the realized sequence.
inline VerifyReport verify_supersequence(const Supersequence& seq, const std::vector<Disk>& disks,
                                         const std::vector<Realization>& reals) {
  VerifyReport rep;
  if (disks.empty()) return rep;
  rep.length_per_disk = static_cast<double>(seq.entries.size()) / disks.size();
  std::vector<std::optional<VerifyFailure>> slots(reals.size());
  parallel_for(reals.size(), [&](std::size_t t) {
    const auto hull = brute_quarter_hull(detail::frame_points(reals[t], seq.quadrant));
    if (!embeds_with_marks(hull, realized_frame_sequence(seq, reals[t]))) {
      slots[t] = VerifyFailure{static_cast<int>(t), "embedding", "quarter hull " + detail::describe_hull(hull) + " does not embed",
                               reals[t]};
    }
  });
  rep.trials = static_cast<int>(reals.size());
  for (auto& s : slots) {
    if (s) rep.failures.push_back(std::move(*s));
  }
  return rep;
}

/// Runs adversarial plus `trials` random realizations.
inline VerifyReport verify_supersequence(const Supersequence& seq, const std::vector<Disk>& disks, int trials,
                                         std::uint64_t seed) {
  if (disks.empty()) return {};
  return verify_supersequence(seq, disks, detail::trial_realizations(disks, trials, seed));
}

struct SmoothnessMeasure {
  double alpha = 0.0;  // largest out-of-order extent along the slope -1 line
  double beta = 0.0;   // largest count / diameter over candidate disks
};

/// Measures the distance and packing properties of one realized sequence.
/// The distance property is taken over the trimmed sequence: pairs i < j
/// where either point is a quarter-hull vertex and the later point lies
/// behind the earlier one. Packing uses disks centered at realized points
/// and hull-edge midpoints with diameters 1+, 2, 4, ... up to the spread.
inline SmoothnessMeasure measure_smoothness(const std::vector<Point>& realized) {
  SmoothnessMeasure m;
  if (realized.size() <= 1) return m;
  std::vector<Point> seq;
  {
    std::size_t r = 0, t = 0;
    for (std::size_t i = 1; i < realized.size(); ++i) {
      if (more_rightmost(realized[i], realized[r])) r = i;
      if (!more_topmost(realized[t], realized[i])) t = i;
    }
    seq = t < r ? std::vector<Point>{realized[r]}
                : std::vector<Point>(realized.begin() + static_cast<std::ptrdiff_t>(r),
                                     realized.begin() + static_cast<std::ptrdiff_t>(t) + 1);
  }
  const auto hull = quarter_hull_points(seq);
  const std::set<Point> on_hull(hull.begin(), hull.end());
  auto progress = [](const Point& p) { return p.y - p.x; };
  const std::size_t L = seq.size();
  std::vector<double> suffix_min(L + 1, INFINITY);
  for (std::size_t i = L; i-- > 0;) suffix_min[i] = std::min(suffix_min[i + 1], progress(seq[i]));
  double prefix_max = -INFINITY;
  for (std::size_t i = 0; i < L; ++i) {
    const double s = progress(seq[i]);
    if (on_hull.count(seq[i])) {
      m.alpha = std::max(m.alpha, s - suffix_min[i + 1]);
      m.alpha = std::max(m.alpha, prefix_max - s);
    }
    prefix_max = std::max(prefix_max, s);
  }

  std::vector<Point> pts(realized.begin(), realized.end());
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Point lo = pts.front(), hi = pts.front();
  for (const auto& p : pts) {
    lo = {std::min(lo.x, p.x), std::min(lo.y, p.y)};
    hi = {std::max(hi.x, p.x), std::max(hi.y, p.y)};
  }
  const double spread = std::max(2.0, 2.0 * norm(hi - lo));
  std::vector<Point> centers = pts;
  const auto full = convex_hull_points(pts);
  for (std::size_t i = 0; i + 1 < full.size(); ++i) centers.push_back((full[i] + full[i + 1]) * 0.5);
  std::vector<double> diameters{1.0 + 1e-9};
  for (double d = 2.0; d < spread; d *= 2.0) diameters.push_back(d);
  for (const auto& c : centers) {
    for (double d : diameters) {
      const double r = d / 2.0;
      const auto first = std::lower_bound(pts.begin(), pts.end(), Point{c.x - r, -INFINITY});
      int count = 0;
      for (auto it = first; it != pts.end() && it->x <= c.x + r; ++it) {
        if (norm(*it - c) <= r) ++count;
      }
      m.beta = std::max(m.beta, count / d);
    }
  }
  return m;
}

/// Checks distance and packing properties against seq's alpha and beta on
/// every given realization.
inline VerifyReport verify_smoothness(const Supersequence& seq, const std::vector<Disk>& disks,
                                      const std::vector<Realization>& reals) {
  VerifyReport rep;
  if (disks.empty()) return rep;
  rep.length_per_disk = static_cast<double>(seq.entries.size()) / disks.size();
  std::vector<SmoothnessMeasure> measures(reals.size());
  parallel_for(reals.size(), [&](std::size_t t) {
    std::vector<Point> realized;
    for (const auto& [p, marked] : realized_frame_sequence(seq, reals[t])) realized.push_back(p);
    measures[t] = measure_smoothness(realized);
  });
  rep.trials = static_cast<int>(reals.size());
  for (std::size_t t = 0; t < reals.size(); ++t) {
    const auto& m = measures[t];
    rep.max_alpha_observed = std::max(rep.max_alpha_observed, m.alpha);
    rep.max_beta_observed = std::max(rep.max_beta_observed, m.beta);
    if (m.alpha > seq.alpha * (1.0 + 1e-12)) {
      rep.failures.push_back({static_cast<int>(t), "distance",
                              "out-of-order extent " + std::to_string(m.alpha) + " exceeds alpha " + std::to_string(seq.alpha),
                              reals[t]});
    }
    if (m.beta > seq.beta * (1.0 + 1e-12)) {
      rep.failures.push_back({static_cast<int>(t), "packing",
                              "points per diameter " + std::to_string(m.beta) + " exceeds beta " + std::to_string(seq.beta),
                              reals[t]});
    }
  }
  return rep;
}

/// Runs adversarial plus `trials` random realizations.
inline VerifyReport verify_smoothness(const Supersequence& seq, const std::vector<Disk>& disks, int trials,
                                      std::uint64_t seed) {
  if (disks.empty()) return {};
  return verify_smoothness(seq, disks, detail::trial_realizations(disks, trials, seed));
}

/// Largest number of strips (equal radius, spine within reach) sharing
/// one of the probe points.
inline int probe_strip_ply(const StripHull& sh, const std::vector<Point>& probes) {
  int best = 0;
  for (const auto& p : probes) {
    int count = 0;
    for (const auto& s : sh.strips) {
      const bool inside = s.bounded() ? segment_within(s.spine_from, s.spine_to, p, s.left_radius)
                                      : ray_within(s.spine_from, s.ray, p, s.left_radius);
      if (inside) ++count;
    }
    best = std::max(best, count);
  }
  return best;
}

}  // namespace hullseq
