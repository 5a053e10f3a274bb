// Quarter-hull supersequences for disks.
//
// The instance is rotated into the quadrant frame, its quarter strip hull is
// built, and every strip contributes an ordered list of the disks meeting
// it. Pairwise disjoint equal disks are ordered by the projection of their
// centers on the strip direction. Overlapping disks go through the 1D
// sorting supersequence of their projected intervals. Disks of varying radii
// are first enlarged to the largest radius about their centers.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "hullseq/classify.hpp"
#include "hullseq/error.hpp"
#include "hullseq/exact.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"
#include "hullseq/sortseq1d.hpp"
#include "hullseq/strip_hull.hpp"

namespace hullseq {

enum class Regime { kDisjointUnit, kPlyUnit, kBoundedRatio };

inline const char* to_string(Regime r) {
  switch (r) {
    case Regime::kDisjointUnit: return "DISJOINT_UNIT";
    case Regime::kPlyUnit: return "PLY_UNIT";
    case Regime::kBoundedRatio: return "BOUNDED_RATIO";
  }
  return "?";
}

inline Regime regime_from_string(const std::string& s) {
  for (auto r : {Regime::kDisjointUnit, Regime::kPlyUnit, Regime::kBoundedRatio}) {
    if (s == to_string(r)) return r;
  }
  throw Error(ErrorKind::kMalformedInput, "unknown regime '" + s + "'");
}

/// Smoothness parameters in instance units. The unit-disk constants are
/// scaled by the working radius R: alpha by R, beta by max(1, 1/R).
///
/// Distance bound, with g(p) = y - x growing along the quarter hull and the
/// spine path (leading ray, chain, trailing ray) monotone in g:
///  - every point of a disk meeting strip s is within 3R of its spine, so a
///    point listed in a later strip trails by at most 2 * 3R * sqrt(2);
///  - inside one strip of disjoint disks, centers are sorted along the
///    strip, so only normal offsets (4R) and the two radii (2 sqrt(2) R)
///    can reorder points: 4 + 2 sqrt(2) < 6 sqrt(2);
///  - the 1D sequence keeps projections out of order by at most 3 interval
///    lengths (6R), with normal spread up to 6R, giving 12R.
/// The published constants are kept for reporting.
struct SmoothnessCert {
  double alpha = 0.0;
  double beta = 0.0;
  double published_alpha = 0.0;
  double published_beta = 0.0;
  Regime regime = Regime::kDisjointUnit;
  int ply = 1;          // ply of the input disks
  int working_ply = 1;  // ply of the disks the sequence was built on
  double ratio = 1.0;   // largest over smallest radius
  double radius = 1.0;  // working radius R
};

struct Supersequence {
  std::vector<int> entries;
  double alpha = 0.0;
  double beta = 0.0;
  int quadrant = 0;
  Regime regime = Regime::kDisjointUnit;
  std::vector<bool> marks;  // empty or aligned with entries
  std::vector<int> skip;    // empty or aligned with entries; -1 = none

  bool marked(std::size_t i) const { return !marks.empty() && marks[i]; }
  std::size_t size() const { return entries.size(); }
  std::size_t unmarked_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [&, i = std::size_t{0}](int) mutable {
      return !marked(i++);
    }));
  }
  /// Edge-inspection window of the scan: ceil(alpha * beta).
  int window() const { return std::max(1, static_cast<int>(std::ceil(alpha * beta - 1e-9))); }
};

/// Fills skip[i] with the smallest j > i whose entry is unmarked, or -1.
inline void compute_skip_pointers(Supersequence& seq) {
  if (seq.marks.empty()) seq.marks.assign(seq.entries.size(), false);
  seq.skip.assign(seq.entries.size(), -1);
  int next = -1;
  for (std::size_t i = seq.entries.size(); i-- > 0;) {
    seq.skip[i] = next;
    if (!seq.marks[i]) next = static_cast<int>(i);
  }
}

inline void validate_supersequence(const Supersequence& seq) {
  if (seq.quadrant < 0 || seq.quadrant > 3) throw Error(ErrorKind::kMalformedInput, "quadrant must be in 0..3");
  if (!seq.marks.empty() && seq.marks.size() != seq.entries.size()) {
    throw Error(ErrorKind::kMalformedInput, "marks length differs from entries length");
  }
  if (!seq.skip.empty() && seq.skip.size() != seq.entries.size()) {
    throw Error(ErrorKind::kMalformedInput, "skip length differs from entries length");
  }
  for (int s : seq.skip) {
    if (s < -1 || s >= static_cast<int>(seq.entries.size())) throw Error(ErrorKind::kMalformedInput, "skip pointer out of range");
  }
  if (!(seq.alpha > 0) || !(seq.beta > 0) || !std::isfinite(seq.alpha) || !std::isfinite(seq.beta)) {
    throw Error(ErrorKind::kMalformedInput, "alpha and beta must be positive and finite");
  }
}

// ---------------------------------------------------------------------------
// Instance statistics.

inline bool disks_pairwise_disjoint(const std::vector<Disk>& disks) {
  if (disks.size() < 2) return true;
  CenterGrid grid(disks);
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Disk& d = disks[i];
    const double reach = d.radius + grid.max_radius();
    bool hit = false;
    grid.for_each_in_box({d.center.x - reach, d.center.y - reach}, {d.center.x + reach, d.center.y + reach},
                         [&](std::size_t j) {
                           if (j > i && disks_intersect(d, disks[j])) hit = true;
                         });
    if (hit) return false;
  }
  return true;
}

namespace detail {

inline void circle_intersections(const Disk& a, const Disk& b, std::vector<Point>& out) {
  const Point w = b.center - a.center;
  const double d = norm(w);
  if (d == 0.0 || d > a.radius + b.radius || d < std::fabs(a.radius - b.radius)) return;
  const double x = (d * d + a.radius * a.radius - b.radius * b.radius) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, a.radius * a.radius - x * x));
  const Point e = w * (1.0 / d), n{-e.y, e.x};
  const Point m = a.center + e * x;
  out.push_back(m + n * h);
  out.push_back(m - n * h);
}

}  // namespace detail

/// Largest number of closed disks sharing a point. Depth is evaluated at
/// centers and pairwise boundary crossings with a relative tolerance, so
/// tangent disks count as overlapping.
inline int disk_ply(const std::vector<Disk>& disks) {
  if (disks.empty()) return 0;
  CenterGrid grid(disks);
  const double rmax = grid.max_radius();
  int best = 1;
  std::vector<Point> probes;
  for (std::size_t i = 0; i < disks.size(); ++i) {
    const Disk& d = disks[i];
    probes.clear();
    probes.push_back(d.center);
    const double reach = d.radius + rmax;
    grid.for_each_in_box({d.center.x - reach, d.center.y - reach}, {d.center.x + reach, d.center.y + reach},
                         [&](std::size_t j) {
                           if (j > i) detail::circle_intersections(d, disks[j], probes);
                         });
    for (const Point& p : probes) {
      int depth = 0;
      grid.for_each_in_box({p.x - rmax, p.y - rmax}, {p.x + rmax, p.y + rmax}, [&](std::size_t j) {
        const Disk& e = disks[j];
        const double tol = 1e-9 * (e.radius + std::fabs(e.center.x) + std::fabs(e.center.y));
        if (norm(p - e.center) <= e.radius + tol) ++depth;
      });
      best = std::max(best, depth);
    }
  }
  return best;
}

inline double radius_ratio(const std::vector<Disk>& disks) {
  double lo = INFINITY, hi = 0.0;
  for (const auto& d : disks) {
    lo = std::min(lo, d.radius);
    hi = std::max(hi, d.radius);
  }
  return disks.empty() ? 1.0 : hi / lo;
}

/// Regime and certificate for an instance (frame independent).
inline SmoothnessCert select_certificate(const std::vector<Disk>& disks) {
  SmoothnessCert cert;
  const auto work = working_disks(disks);
  cert.radius = work.front().radius;
  cert.ratio = radius_ratio(disks);
  cert.ply = disk_ply(disks);
  cert.working_ply = equal_radii(disks) ? cert.ply : disk_ply(work);
  double alpha_unit, beta_unit, published_alpha_unit;
  if (equal_radii(disks) && disks_pairwise_disjoint(disks)) {
    cert.regime = Regime::kDisjointUnit;
    alpha_unit = 6.0 * std::sqrt(2.0);
    published_alpha_unit = 1.0;
    beta_unit = 3.0;
  } else {
    cert.regime = equal_radii(disks) ? Regime::kPlyUnit : Regime::kBoundedRatio;
    alpha_unit = 12.0;
    published_alpha_unit = 3.0 * std::sqrt(2.0);
    beta_unit = 12.0 * cert.working_ply;
  }
  const double beta_scale = std::max(1.0, 1.0 / cert.radius);
  cert.alpha = alpha_unit * cert.radius;
  cert.beta = beta_unit * beta_scale;
  cert.published_alpha = published_alpha_unit * cert.radius;
  cert.published_beta = beta_unit * beta_scale;
  return cert;
}

// ---------------------------------------------------------------------------
// Per-strip sequences.

namespace detail {

/// Exact sign of <a - b, dir>.
inline int compare_along(const Point& a, const Point& b, const Point& from, const Point& to) {
  return exact::sign_of([&](auto t) {
    using T = decltype(t);
    return (T(a.x) - T(b.x)) * (T(to.x) - T(from.x)) + (T(a.y) - T(b.y)) * (T(to.y) - T(from.y));
  });
}

inline std::pair<Point, Point> traversal_segment(const Strip& s) {
  if (s.bounded()) return {s.spine_from, s.spine_to};
  return {Point{0.0, 0.0}, s.traversal()};
}

}  // namespace detail

/// Members ordered by center projection on the traversal direction, ties by
/// id. Members must be pairwise disjoint disks of one radius.
inline std::vector<int> strip_sequence_disjoint(const Strip& s, const std::vector<int>& members,
                                                const std::vector<Disk>& disks) {
  if (members.empty()) return {};
  DiskIndex index(disks);
  std::vector<const Disk*> ds;
  for (int id : members) ds.push_back(&disks[index.at(id)]);
  for (std::size_t i = 0; i < ds.size(); ++i) {
    for (std::size_t j = i + 1; j < ds.size(); ++j) {
      if (disks_intersect(*ds[i], *ds[j])) {
        throw Error(ErrorKind::kInvalidArgument, "strip_sequence_disjoint: disks " + std::to_string(ds[i]->id) + " and " +
                                                     std::to_string(ds[j]->id) + " overlap");
      }
    }
  }
  const auto [from, to] = detail::traversal_segment(s);
  std::sort(ds.begin(), ds.end(), [&](const Disk* a, const Disk* b) {
    const int c = detail::compare_along(a->center, b->center, from, to);
    return c != 0 ? c < 0 : a->id < b->id;
  });
  std::vector<int> out;
  for (const Disk* d : ds) out.push_back(d->id);
  return out;
}

/// Projected unit intervals of equal-radius members on the traversal line.
inline std::vector<Interval> projected_intervals(const Strip& s, const std::vector<int>& members,
                                                 const std::vector<Disk>& disks) {
  DiskIndex index(disks);
  const Point dir = s.traversal();
  std::vector<Interval> ivs;
  for (int id : members) {
    const Disk& d = disks[index.at(id)];
    const double t = project_onto_direction(d.center, dir);
    const double lo = (t - d.radius) / (2.0 * d.radius);
    ivs.push_back({id, lo, lo + 1.0});
  }
  return ivs;
}

inline std::vector<int> strip_sequence_overlapping(const Strip& s, const std::vector<int>& members,
                                                   const std::vector<Disk>& disks) {
  if (members.empty()) return {};
  return sorting_supersequence(projected_intervals(s, members, disks)).entries;
}

// ---------------------------------------------------------------------------
// Whole-quadrant construction.

struct QuarterBuild {
  Supersequence seq;
  SmoothnessCert cert;
  StripHull strips;             // on the working disks, quadrant frame
  StripMembership membership;   // other disks per strip
  std::vector<std::vector<int>> pieces;  // per-strip sequences, own disks included
  std::vector<int> interval_ply;         // per strip; 0 on the disjoint path
  std::vector<Disk> frame;               // input disks in the quadrant frame
  std::vector<Disk> work;                // working disks in the quadrant frame
};

namespace detail {

inline std::vector<int> strip_disk_ids(const Strip& s, const std::vector<int>& members) {
  std::vector<int> ids = members;
  ids.push_back(s.left);
  if (s.right != s.left) ids.push_back(s.right);
  std::sort(ids.begin(), ids.end());
  return ids;
}

/// Joins per-strip pieces, replacing strips adjacent to marked chain disks
/// by their unmarked anchors and the marked disk itself.
inline void assemble(QuarterBuild& b, const std::set<int>& marked) {
  auto& seq = b.seq;
  seq.entries.clear();
  seq.marks.clear();
  auto emit = [&](int id, bool mark) {
    if (!seq.entries.empty() && seq.entries.back() == id && seq.marks.back() == mark) return;
    seq.entries.push_back(id);
    seq.marks.push_back(mark);
  };
  const std::size_t k = b.strips.strips.size();
  for (std::size_t s = 0; s < k; ++s) {
    const Strip& st = b.strips.strips[s];
    const bool lm = st.bounded() && marked.count(st.left), rm = st.bounded() && marked.count(st.right);
    if (!lm && !rm) {
      for (int id : b.pieces[s]) emit(id, false);
      continue;
    }
    if (rm) {
      if (!lm) emit(st.left, false);
      emit(st.right, true);
    } else {
      emit(st.right, false);
    }
  }
  compute_skip_pointers(seq);
  if (marked.empty()) {
    seq.marks.clear();
    seq.skip.clear();
  }
}

}  // namespace detail

/// Builds the per-strip pieces and the unmarked sequence for one quadrant.
inline QuarterBuild build_quarter(const std::vector<Disk>& disks, int quadrant) {
  if (disks.empty()) throw Error(ErrorKind::kInvalidArgument, "build_quarter_supersequence: empty disk set");
  if (quadrant < 0 || quadrant > 3) throw Error(ErrorKind::kInvalidArgument, "quadrant must be in 0..3");
  validate_disks(disks);
  DiskIndex check(disks);
  QuarterBuild b;
  b.cert = select_certificate(disks);
  b.frame = to_quadrant_frame(disks, quadrant);
  b.work = working_disks(b.frame);
  b.strips = build_quarter_strip_hull(b.work);
  b.membership = strip_membership(b.strips, b.work);
  const bool disjoint = b.cert.regime == Regime::kDisjointUnit;
  for (std::size_t s = 0; s < b.strips.strips.size(); ++s) {
    const Strip& st = b.strips.strips[s];
    const auto ids = detail::strip_disk_ids(st, b.membership.sets[s]);
    if (disjoint) {
      b.pieces.push_back(strip_sequence_disjoint(st, ids, b.work));
      b.interval_ply.push_back(0);
    } else {
      b.pieces.push_back(strip_sequence_overlapping(st, ids, b.work));
      b.interval_ply.push_back(interval_ply(projected_intervals(st, ids, b.work)));
    }
  }
  b.seq.quadrant = quadrant;
  b.seq.alpha = b.cert.alpha;
  b.seq.beta = b.cert.beta;
  b.seq.regime = b.cert.regime;
  detail::assemble(b, {});
  return b;
}

inline std::pair<Supersequence, SmoothnessCert> build_quarter_supersequence(const std::vector<Disk>& disks, int quadrant) {
  auto b = build_quarter(disks, quadrant);
  return {b.seq, b.cert};
}

/// Ids of the disks that may be marked in a quadrant: stable guaranteed in
/// the quarter classification.
inline std::set<int> markable_ids(const Classification& cls) {
  std::set<int> out;
  for (const auto& [id, c] : cls.classes) {
    if (c == DiskClass::kStableGuaranteedBoundary) out.insert(id);
  }
  return out;
}

/// Rebuilds seq with its stable guaranteed disks marked. The classification
/// must be the quarter classification of seq's quadrant.
inline Supersequence mark_stable(const std::vector<Disk>& disks, const Supersequence& seq, const Classification& cls) {
  if (cls.scope.full() || cls.scope.quadrant != seq.quadrant) {
    throw Error(ErrorKind::kInvalidArgument, "mark_stable: classification scope does not match the sequence quadrant");
  }
  for (int id : seq.entries) (void)cls.at(id);
  auto b = build_quarter(disks, seq.quadrant);
  std::set<int> marked = markable_ids(cls);
  // Only interior chain disks can be marked; extremes stay unmarked.
  const auto& chain = b.strips.chain;
  std::set<int> interior;
  for (std::size_t j = 1; j + 1 < chain.size(); ++j) interior.insert(chain[j]);
  for (auto it = marked.begin(); it != marked.end();) it = interior.count(*it) ? std::next(it) : marked.erase(it);
  detail::assemble(b, marked);
  if (marked.empty()) b.seq.marks.assign(b.seq.entries.size(), false), compute_skip_pointers(b.seq);
  return b.seq;
}

/// Convenience: quarter classification followed by marking.
inline Supersequence preprocess_marked(const std::vector<Disk>& disks, int quadrant) {
  const auto seq = build_quarter_supersequence(disks, quadrant).first;
  return mark_stable(disks, seq, classify_quarter(disks, quadrant));
}

}  // namespace hullseq
