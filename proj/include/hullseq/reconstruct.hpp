// Hull reconstruction from realized smooth supersequences.
//
// The scan keeps a Graham-style chain. A point below the chain tip is used
// to pop the tip when it lies more than alpha behind it in the north-west
// direction (smoothness then rules the tip out). Otherwise only the last
// ceil(alpha * beta) chain edges are inspected, so each point costs O(alpha
// beta) edge checks apart from amortised pops.
#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <variant>
#include <vector>

#include "hullseq/classify.hpp"
#include "hullseq/error.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/hull.hpp"
#include "hullseq/preprocess.hpp"
#include "hullseq/strip_hull.hpp"

namespace hullseq {

struct ScanCounters {
  long long touches = 0;      // sequence entries read
  long long inserts = 0;
  long long graham_pops = 0;
  long long nw_pops = 0;      // tips popped by the north-west distance test
  long long edge_checks = 0;
  long long discards = 0;
  long long max_edge_checks_per_point = 0;

  ScanCounters& operator+=(const ScanCounters& o) {
    touches += o.touches;
    inserts += o.inserts;
    graham_pops += o.graham_pops;
    nw_pops += o.nw_pops;
    edge_checks += o.edge_checks;
    discards += o.discards;
    max_edge_checks_per_point = std::max(max_edge_checks_per_point, o.max_edge_checks_per_point);
    return *this;
  }
};

/// Checks every realized point against its disk. Ids outside the disk set
/// are an id mismatch.
inline void validate_realization(const std::vector<Disk>& disks, const Realization& real) {
  DiskIndex index(disks);
  for (const auto& [id, p] : real) {
    const Disk& d = disks[index.at(id)];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw Error(ErrorKind::kMalformedInput, "non-finite point for disk " + std::to_string(id));
    }
    if (!disk_contains(d, p)) throw Error(ErrorKind::kPointOutsideDisk, "point of disk " + std::to_string(id) + " lies outside it");
  }
}

/// Drops everything before the first occurrence of the rightmost point and
/// after the last occurrence of the topmost point.
inline std::vector<Point> trim_sequence(const std::vector<Point>& pts) {
  if (pts.empty()) throw Error(ErrorKind::kInvalidArgument, "trim_sequence: empty input");
  std::size_t r = 0, t = 0;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (more_rightmost(pts[i], pts[r])) r = i;
    if (!more_topmost(pts[t], pts[i])) t = i;  // last occurrence of the topmost
  }
  if (t < r) return {pts[r]};
  return {pts.begin() + static_cast<std::ptrdiff_t>(r), pts.begin() + static_cast<std::ptrdiff_t>(t) + 1};
}

namespace detail {

inline void graham_insert(std::vector<Point>& chain, const Point& q, ScanCounters& c) {
  while (chain.size() >= 2 && orient(chain[chain.size() - 2], chain.back(), q) != Orientation::kCounterClockwise) {
    chain.pop_back();
    ++c.graham_pops;
  }
  chain.push_back(q);
  ++c.inserts;
}

}  // namespace detail

/// Quarter hull of a trimmed, (alpha, beta)-smooth sequence whose quarter
/// hull is a subsequence. The first point must be the rightmost and the
/// last the topmost; points outside the box they span are discarded.
inline std::vector<Point> quarter_hull_scan(const std::vector<Point>& pts, double alpha, double beta,
                                            ScanCounters* counters = nullptr) {
  ScanCounters local;
  ScanCounters& c = counters ? *counters : local;
  std::vector<Point> chain;
  if (pts.empty()) return chain;
  const int window = std::max(1, static_cast<int>(std::ceil(alpha * beta - 1e-9)));
  // The tip is popped when q lies more than alpha behind it along the slope
  // -1 line, i.e. when the raw x - y difference exceeds alpha * sqrt(2).
  const double reach = alpha * std::sqrt(2.0);
  const Point first = pts.front(), last = pts.back();
  chain.push_back(first);
  ++c.inserts;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    const Point q = pts[i];
    if (q.y < first.y || q.x > first.x || q.y > last.y || q.x < last.x) {
      ++c.discards;
      continue;
    }
    long long checks = 0;
    for (;;) {
      const Point p = chain.back();
      if (q == p) {
        ++c.discards;
        break;
      }
      if (q.y >= p.y) {
        detail::graham_insert(chain, q, c);
        break;
      }
      if (chain.size() > 1 && compare_nw_dist(q, p, reach) > 0) {
        chain.pop_back();
        ++c.nw_pops;
        continue;
      }
      // Inspect the last `window` edges from the tip backwards.
      bool hit = false;
      const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(chain.size());
      for (std::ptrdiff_t j = m - 2; j >= 0 && j >= m - 1 - window; --j) {
        ++checks;
        if (orient(chain[j], chain[j + 1], q) == Orientation::kClockwise) {
          chain.resize(static_cast<std::size_t>(j) + 1);
          detail::graham_insert(chain, q, c);
          hit = true;
          break;
        }
      }
      if (!hit) ++c.discards;
      break;
    }
    c.edge_checks += checks;
    c.max_edge_checks_per_point = std::max(c.max_edge_checks_per_point, checks);
  }
  return chain;
}

namespace detail {

inline std::vector<Point> realize_entries(const Supersequence& seq, const std::vector<Disk>& disks,
                                          const Realization& real) {
  DiskIndex index(disks);
  std::vector<Point> pts;
  pts.reserve(seq.entries.size());
  for (int id : seq.entries) {
    (void)index.at(id);
    auto it = real.find(id);
    if (it == real.end()) throw Error(ErrorKind::kIdMismatch, "realization has no point for disk " + std::to_string(id));
    pts.push_back(to_quadrant_frame(it->second, seq.quadrant));
  }
  return pts;
}

}  // namespace detail

/// Quarter hull of the realization in the original frame: the CCW arc from
/// the extreme point of the quadrant to the next one.
inline std::vector<Point> reconstruct_quarter(const Supersequence& seq, const std::vector<Disk>& disks,
                                              const Realization& real, ScanCounters* counters = nullptr) {
  validate_realization(disks, real);
  if (seq.entries.empty()) return {};
  const auto pts = detail::realize_entries(seq, disks, real);
  if (counters) counters->touches += static_cast<long long>(pts.size());
  auto hull = quarter_hull_scan(trim_sequence(pts), seq.alpha, seq.beta, counters);
  for (auto& p : hull) p = from_quadrant_frame(p, seq.quadrant);
  return hull;
}

/// Joins four quarter arcs (quadrants 0..3, original frame) into the hull.
inline std::vector<Point> stitch_quarters(const std::vector<std::vector<Point>>& arcs) {
  std::vector<Point> cyc;
  for (const auto& a : arcs) {
    for (const auto& p : a) {
      if (cyc.empty() || cyc.back() != p) cyc.push_back(p);
    }
  }
  while (cyc.size() > 1 && cyc.front() == cyc.back()) cyc.pop_back();
  return canonical_cycle(cyc);
}

inline std::vector<Point> reconstruct_full(const std::vector<Supersequence>& seqs, const std::vector<Disk>& disks,
                                           const Realization& real, ScanCounters* counters = nullptr) {
  if (seqs.size() != 4) throw Error(ErrorKind::kInvalidArgument, "reconstruct_full: expected four sequences");
  std::vector<const Supersequence*> by_q(4, nullptr);
  for (const auto& s : seqs) {
    if (s.quadrant < 0 || s.quadrant > 3 || by_q[s.quadrant]) {
      throw Error(ErrorKind::kInvalidArgument, "reconstruct_full: sequences must cover quadrants 0..3 once each");
    }
    by_q[s.quadrant] = &s;
  }
  std::vector<std::vector<Point>> arcs;
  for (int q = 0; q < 4; ++q) arcs.push_back(reconstruct_quarter(*by_q[q], disks, real, counters));
  return stitch_quarters(arcs);
}

// ---------------------------------------------------------------------------
// Sublinear reconstruction with marked sequences.

/// Linked hull chain. Each node is either a resolved point (quadrant frame
/// undone) or a run [first, last) of marked sequence positions whose disks
/// are hull vertices in that order.
struct HullChain {
  struct MarkedRun {
    std::size_t first = 0;
    std::size_t last = 0;
  };
  struct Node {
    std::variant<Point, MarkedRun> value;
    int next = -1;
  };
  std::vector<Node> nodes;
  int head = -1;

  void append(std::variant<Point, MarkedRun> v) {
    nodes.push_back({v, -1});
    const int idx = static_cast<int>(nodes.size()) - 1;
    if (head < 0) {
      head = idx;
    } else {
      nodes[tail_].next = idx;
    }
    tail_ = idx;
  }

 private:
  int tail_ = -1;
};

/// Replaces marked runs by their realized points.
inline std::vector<Point> resolve_chain(const HullChain& chain, const Supersequence& seq, const Realization& real) {
  std::vector<Point> out;
  for (int i = chain.head; i >= 0; i = chain.nodes[i].next) {
    const auto& v = chain.nodes[i].value;
    if (const Point* p = std::get_if<Point>(&v)) {
      out.push_back(*p);
      continue;
    }
    const auto run = std::get<HullChain::MarkedRun>(v);
    for (std::size_t k = run.first; k < run.last; ++k) {
      const int id = seq.entries[k];
      auto it = real.find(id);
      if (it == real.end()) throw Error(ErrorKind::kIdMismatch, "realization has no point for marked disk " + std::to_string(id));
      if (out.empty() || out.back() != it->second) out.push_back(it->second);
    }
  }
  return out;
}

/// Scans each run of unmarked entries separately; marked runs are passed
/// through via skip pointers without reading their entries. The first run
/// is trimmed to start at its rightmost point and the last to end at its
/// topmost point. Interior runs start and end at unmarked neighbours of
/// marked disks, which are hull vertices.
inline HullChain reconstruct_sublinear(const Supersequence& seq, const std::vector<Disk>& disks, const Realization& real,
                                       ScanCounters* counters = nullptr) {
  ScanCounters local;
  ScanCounters& c = counters ? *counters : local;
  HullChain chain;
  const std::size_t n = seq.entries.size();
  if (n == 0) return chain;
  if (!seq.marks.empty() && seq.skip.size() != n) {
    throw Error(ErrorKind::kMalformedInput, "marked sequence without skip pointers");
  }
  DiskIndex index(disks);
  auto realize = [&](std::size_t k) {
    const int id = seq.entries[k];
    const Disk& d = disks[index.at(id)];
    auto it = real.find(id);
    if (it == real.end()) throw Error(ErrorKind::kIdMismatch, "realization has no point for unmarked disk " + std::to_string(id));
    if (!disk_contains(d, it->second)) throw Error(ErrorKind::kPointOutsideDisk, "point of disk " + std::to_string(id) + " lies outside it");
    return to_quadrant_frame(it->second, seq.quadrant);
  };

  struct Segment {
    bool marked;
    std::size_t begin, end;
  };
  std::vector<Segment> segments;
  for (std::size_t i = 0; i < n;) {
    if (seq.marked(i)) {
      const int nxt = seq.skip[i];
      const std::size_t end = nxt < 0 ? n : static_cast<std::size_t>(nxt);
      segments.push_back({true, i, end});
      i = end;
    } else {
      std::size_t j = i;
      while (j < n && !seq.marked(j)) ++j;
      segments.push_back({false, i, j});
      i = j;
    }
  }

  for (const auto& seg : segments) {
    if (seg.marked) {
      chain.append(HullChain::MarkedRun{seg.begin, seg.end});
      continue;
    }
    std::vector<Point> pts;
    for (std::size_t k = seg.begin; k < seg.end; ++k) pts.push_back(realize(k));
    c.touches += static_cast<long long>(pts.size());
    std::size_t lo = 0, hi = pts.size() - 1;
    if (seg.begin == 0) {
      for (std::size_t k = 1; k < pts.size(); ++k) {
        if (more_rightmost(pts[k], pts[lo])) lo = k;
      }
    }
    if (seg.end == n) {
      hi = lo;
      for (std::size_t k = lo; k < pts.size(); ++k) {
        if (!more_topmost(pts[hi], pts[k])) hi = k;
      }
    }
    const std::vector<Point> sub(pts.begin() + static_cast<std::ptrdiff_t>(lo),
                                 pts.begin() + static_cast<std::ptrdiff_t>(hi) + 1);
    for (const auto& p : quarter_hull_scan(sub, seq.alpha, seq.beta, &c)) chain.append(from_quadrant_frame(p, seq.quadrant));
  }
  return chain;
}

}  // namespace hullseq
