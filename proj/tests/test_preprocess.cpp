#include <gtest/gtest.h>

#include <random>

#include "hullseq/generators.hpp"
#include "hullseq/oracles.hpp"
#include "hullseq/preprocess.hpp"
#include "oracle_support.hpp"

using namespace hullseq;

namespace {

std::vector<Disk> unit(const std::vector<Point>& centers) {
  std::vector<Disk> out;
  for (std::size_t i = 0; i < centers.size(); ++i) out.push_back({static_cast<int>(i), centers[i], 1.0});
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// Certificates and regimes.

TEST(Certificate, RegimeDetection) {
  EXPECT_EQ(select_certificate(gen::disjoint_unit(50, 1)).regime, Regime::kDisjointUnit);
  EXPECT_EQ(select_certificate(gen::ply_unit(50, 3, 1)).regime, Regime::kPlyUnit);
  EXPECT_EQ(select_certificate(gen::bounded_ratio(50, 3.0, 1)).regime, Regime::kBoundedRatio);
  EXPECT_EQ(to_string(regime_from_string("PLY_UNIT")), std::string("PLY_UNIT"));
  EXPECT_THROW(regime_from_string("WHATEVER"), Error);
}

TEST(Certificate, ScalesWithRadius) {
  auto d = gen::disjoint_unit(30, 2);
  for (auto& x : d) {
    x.center = x.center * 4.0;
    x.radius = 4.0;
  }
  const auto c1 = select_certificate(gen::disjoint_unit(30, 2));
  const auto c4 = select_certificate(d);
  EXPECT_DOUBLE_EQ(c4.alpha, 4.0 * c1.alpha);
  EXPECT_DOUBLE_EQ(c4.beta, c1.beta);
}

TEST(Certificate, PlyMeasuredAtIntersections) {
  // Three disks pairwise overlapping around a common point.
  EXPECT_EQ(disk_ply(unit({{0, 0}, {1, 0}, {0.5, 0.8}})), 3);
  EXPECT_EQ(disk_ply(unit({{0, 0}, {3, 0}})), 1);
  EXPECT_EQ(disk_ply(unit({{0, 0}, {2, 0}})), 2);  // touching closed disks
}

// ---------------------------------------------------------------------------
// Per-strip sequences.

TEST(StripSequence, EmptyMembers) {
  const Strip s = make_bounded_strip({0, {0, 0}, 1}, {1, {10, 0}, 1});
  EXPECT_TRUE(strip_sequence_disjoint(s, {}, {}).empty());
  EXPECT_TRUE(strip_sequence_overlapping(s, {}, {}).empty());
}

TEST(StripSequence, LeftDiskFirst) {
  const std::vector<Disk> d{{0, {0, 0}, 1}, {1, {10, 0}, 1}, {2, {6, 0.5}, 1}, {3, {3, -0.5}, 1}};
  const Strip s = make_bounded_strip(d[0], d[1]);
  EXPECT_EQ(strip_sequence_disjoint(s, {2, 3}, d), (std::vector<int>{3, 2}));
}

TEST(StripSequence, RejectsOverlapOnDisjointPath) {
  const std::vector<Disk> d{{0, {0, 0}, 1}, {1, {10, 0}, 1}, {2, {5, 0}, 1}, {3, {5.5, 0}, 1}};
  EXPECT_THROW(strip_sequence_disjoint(make_bounded_strip(d[0], d[1]), {2, 3}, d), Error);
}

TEST(StripSequence, LongStripOrderEmbedsHullOrder) {
  // Five disjoint disks spread through one long strip, with the two strip
  // disks as endpoints; every realization's quarter-hull order restricted
  // to these disks must embed.
  std::vector<Disk> d{{0, {20, 0}, 1}, {1, {0, 20}, 1}};
  for (int k = 0; k < 5; ++k) d.push_back({2 + k, {16.0 - 3.3 * k + 0.7 * (k % 2), 4.0 + 3.3 * k - 0.4 * (k % 3)}, 1.0});
  const Strip s = make_bounded_strip(d[0], d[1]);
  std::vector<int> ids{0, 1, 2, 3, 4, 5, 6};
  const auto seq = strip_sequence_disjoint(s, ids, d);
  DiskIndex idx(d);
  for (int t = 0; t < 5000; ++t) {
    const auto real = random_realization(d, 100 + t);
    std::vector<Point> pts;
    for (const auto& [id, p] : real) pts.push_back(p);
    std::vector<int> order;
    for (const auto& p : testsupport::quarter_of(testsupport::brute_hull(pts))) {
      for (const auto& [id, q] : real) {
        if (q == p) order.push_back(id);
      }
    }
    ASSERT_TRUE(testsupport::is_subsequence(order, seq)) << "trial " << t;
  }
}

TEST(StripSequence, OverlappingPathContainsDisjointOrder) {
  const auto d = gen::disjoint_unit(120, 4);
  const auto sh = build_quarter_strip_hull(d);
  const auto m = strip_membership(sh, d);
  for (std::size_t s = 0; s < sh.strips.size(); ++s) {
    std::vector<int> ids = m.sets[s];
    ids.push_back(sh.strips[s].left);
    if (sh.strips[s].right != sh.strips[s].left) ids.push_back(sh.strips[s].right);
    const auto a = strip_sequence_disjoint(sh.strips[s], ids, d);
    const auto b = strip_sequence_overlapping(sh.strips[s], ids, d);
    EXPECT_TRUE(testsupport::is_subsequence(a, b)) << "strip " << s;
  }
}

TEST(StripSequence, CoincidentDisksBothOrders) {
  const std::vector<Disk> d{{0, {0, 0}, 1}, {1, {10, 0}, 1}, {2, {5, 0}, 1}, {3, {5, 0}, 1}};
  const auto seq = strip_sequence_overlapping(make_bounded_strip(d[0], d[1]), {2, 3}, d);
  EXPECT_TRUE(testsupport::is_subsequence(std::vector<int>{2, 3}, seq));
  EXPECT_TRUE(testsupport::is_subsequence(std::vector<int>{3, 2}, seq));
  EXPECT_LE(seq.size(), 2u * 4u * 2u * 2u);
}

TEST(StripSequence, PlyThreeClusterIntervalPly) {
  // Nine disks in three stacks of three inside one strip.
  std::vector<Disk> d{{0, {0, 0}, 1}, {1, {20, 0}, 1}};
  int id = 2;
  for (double x : {5.0, 10.0, 15.0}) {
    for (double y : {-0.3, 0.0, 0.3}) d.push_back({id++, {x + y, y}, 1.0});
  }
  ASSERT_EQ(disk_ply(std::vector<Disk>(d.begin() + 2, d.end())), 3);
  std::vector<int> ids;
  for (int k = 2; k < id; ++k) ids.push_back(k);
  const Strip s = make_bounded_strip(d[0], d[1]);
  EXPECT_LE(interval_ply(projected_intervals(s, ids, d)), 2 * 3 * 2 + 2 * 3);
}

// ---------------------------------------------------------------------------
// Whole-quadrant sequences.

TEST(QuarterSupersequence, FarTriangle) {
  const auto d = unit({{0, 0}, {10, 0}, {5, 9}});
  std::set<int> seen;
  for (int q = 0; q < 4; ++q) {
    const auto [seq, cert] = build_quarter_supersequence(d, q);
    EXPECT_EQ(cert.regime, Regime::kDisjointUnit);
    std::set<int> once(seq.entries.begin(), seq.entries.end());
    EXPECT_EQ(once.size(), seq.entries.size()) << "quadrant " << q;
    seen.insert(once.begin(), once.end());
  }
  EXPECT_EQ(seen.size(), 3u);
}

TEST(QuarterSupersequence, DisjointCountBounds) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto d = gen::disjoint_unit(200, seed);
    const auto boundary = boundary_disks(d);
    EXPECT_LE(boundary.entries.size(), 2 * d.size() - 1);
    const auto sh = build_strip_hull(boundary, d);
    for (const auto& [id, c] : strips_per_disk(sh, d)) EXPECT_LE(c, 7) << "seed " << seed << " disk " << id;
    EXPECT_LE(probe_strip_ply(sh, testsupport::strip_probes(sh, d, 10000, seed)), 4) << "seed " << seed;
    for (int q = 0; q < 4; ++q) {
      const auto b = build_quarter(d, q);
      EXPECT_LE(b.seq.size(), 9 * d.size());
      EXPECT_LE(probe_strip_ply(b.strips, testsupport::strip_probes(b.strips, b.work, 2000, seed)), 4);
    }
  }
}

TEST(QuarterSupersequence, OverlappingIntervalPlyAndLength) {
  for (int ply : {2, 3}) {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
      const auto d = gen::ply_unit(200, ply, seed);
      for (int q = 0; q < 4; ++q) {
        const auto b = build_quarter(d, q);
        const int delta = b.cert.working_ply;
        for (std::size_t s = 0; s < b.strips.strips.size(); ++s) {
          EXPECT_LE(b.interval_ply[s], 6 * delta) << "ply " << ply << " strip " << s;
          std::size_t members = b.membership.sets[s].size() + (b.strips.strips[s].bounded() ? 2 : 1);
          EXPECT_LE(b.pieces[s].size(), 4 * static_cast<std::size_t>(b.interval_ply[s]) * members);
        }
      }
    }
  }
}

TEST(QuarterSupersequence, Deterministic) {
  const auto d = gen::ply_unit(100, 2, 9);
  for (int q = 0; q < 4; ++q) EXPECT_EQ(build_quarter_supersequence(d, q).first.entries, build_quarter_supersequence(d, q).first.entries);
}

TEST(QuarterSupersequence, RejectsBadInput) {
  EXPECT_THROW(build_quarter_supersequence({}, 0), Error);
  EXPECT_THROW(build_quarter_supersequence(unit({{0, 0}}), 4), Error);
  try {
    build_quarter_supersequence({{0, {0, 0}, 1}, {0, {5, 0}, 1}}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariantViolation);
  }
  try {
    build_quarter_supersequence({{0, {0, 0}, -1}}, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvariantViolation);
  }
}

// ---------------------------------------------------------------------------
// Marking.

TEST(Marking, FarRingMarksInteriorChainDisks) {
  const auto ring = gen::far_ring(16, 200.0);
  for (int q = 0; q < 4; ++q) {
    const auto seq = preprocess_marked(ring, q);
    ASSERT_EQ(seq.marks.size(), seq.entries.size());
    // Quadrant q's chain is disks 4q..4q+3. Its two extremes and the
    // neighbours reached through the half-strips stay unmarked.
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const int id = seq.entries[i];
      EXPECT_EQ(seq.marks[i], id == 4 * q + 1 || id == 4 * q + 2) << "quadrant " << q << " entry " << i;
    }
    EXPECT_EQ(seq.size() - seq.unmarked_count(), 2u);
  }
}

TEST(Marking, NoStableDisksLeavesMarksEmpty) {
  const auto d = gen::ply_unit(60, 3, 2);
  const auto seq = build_quarter_supersequence(d, 0).first;
  const auto marked = mark_stable(d, seq, classify_quarter(d, 0));
  if (markable_ids(classify_quarter(d, 0)).empty()) {
    EXPECT_EQ(marked.entries, seq.entries);
    EXPECT_EQ(marked.unmarked_count(), marked.size());
  }
  const auto plain = mark_stable(unit({{0, 0}, {1, 0}, {0.5, 0.5}}), build_quarter_supersequence(unit({{0, 0}, {1, 0}, {0.5, 0.5}}), 0).first,
                                 classify_quarter(unit({{0, 0}, {1, 0}, {0.5, 0.5}}), 0));
  EXPECT_EQ(plain.unmarked_count(), plain.size());
}

TEST(Marking, RingWithPotentialDiskNearStrip) {
  // Twelve far-apart ring disks and one disk just inside the chord between
  // ring disks 0 and 1, the first two of quadrant 0's chain.
  auto d = gen::far_ring(12, 40.0);
  const Point mid = (d[0].center + d[1].center) * 0.5;
  d.push_back({12, mid * (1.0 - 0.5 / norm(mid)), 1.0});
  const auto cls = classify_full(d);
  EXPECT_TRUE(is_potential(cls.at(12)));
  const auto seq = preprocess_marked(d, 0);
  std::set<int> unmarked;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (!seq.marked(i)) unmarked.insert(seq.entries[i]);
  }
  // The potential disk and the two disks of its strip stay unmarked.
  EXPECT_TRUE(unmarked.count(12));
  EXPECT_TRUE(unmarked.count(0));
  EXPECT_TRUE(unmarked.count(1));
}

TEST(Marking, SkipPointers) {
  Supersequence s;
  s.entries = {1, 2, 3, 4, 5};
  s.marks = {false, true, true, false, true};
  s.alpha = s.beta = 1;
  compute_skip_pointers(s);
  EXPECT_EQ(s.skip, (std::vector<int>{3, 3, 3, -1, -1}));
}

TEST(Marking, ScopeMismatchRejected) {
  const auto ring = gen::far_ring(8, 40.0);
  const auto seq = build_quarter_supersequence(ring, 0).first;
  EXPECT_THROW(mark_stable(ring, seq, classify_full(ring)), Error);
  EXPECT_THROW(mark_stable(ring, seq, classify_quarter(ring, 1)), Error);
}

TEST(ValidateSupersequence, Errors) {
  Supersequence s;
  s.entries = {0, 1};
  s.alpha = 1;
  s.beta = 3;
  EXPECT_NO_THROW(validate_supersequence(s));
  auto bad = s;
  bad.marks = {true};
  EXPECT_THROW(validate_supersequence(bad), Error);
  bad = s;
  bad.skip = {5, -1};
  EXPECT_THROW(validate_supersequence(bad), Error);
  bad = s;
  bad.alpha = 0;
  EXPECT_THROW(validate_supersequence(bad), Error);
  bad = s;
  bad.quadrant = 7;
  EXPECT_THROW(validate_supersequence(bad), Error);
}

// ---------------------------------------------------------------------------
// Mutation tests: a broken sequence must be caught by the verifiers.

// Disjoint instances list every disk once per quadrant, so any deletion of a
// hull disk must surface.
TEST(Mutation, SingleEntryDeletionDetected) {
  std::vector<std::vector<Disk>> instances;
  for (int k = 3; k <= 8; ++k) instances.push_back(gen::far_ring(k, 10.0 + k));
  for (std::uint64_t s = 0; s < 8; ++s) instances.push_back(gen::disjoint_unit(10 + 5 * static_cast<int>(s), s));
  for (std::uint64_t s = 0; s < 6; ++s) instances.push_back(gen::disjoint_unit(12, 100 + s, 0.1));
  ASSERT_EQ(instances.size(), 20u);
  for (std::size_t k = 0; k < instances.size(); ++k) {
    const auto& d = instances[k];
    bool caught = false;
    for (int q = 0; q < 4 && !caught; ++q) {
      const auto seq = build_quarter_supersequence(d, q).first;
      for (std::size_t i = 0; i < seq.size() && !caught; ++i) {
        auto mutated = seq;
        mutated.entries.erase(mutated.entries.begin() + static_cast<std::ptrdiff_t>(i));
        caught = !verify_supersequence(mutated, d, 50, 7).ok();
      }
    }
    EXPECT_TRUE(caught) << "instance " << k;
  }
}

TEST(Mutation, TightenedCertificateViolated) {
  const auto d = gen::disjoint_unit(80, 3);
  bool caught = false;
  for (int q = 0; q < 4; ++q) {
    auto seq = build_quarter_supersequence(d, q).first;
    EXPECT_TRUE(verify_smoothness(seq, d, 20, 1).ok());
    seq.alpha = 0.5;
    seq.beta = 3;
    caught = caught || !verify_smoothness(seq, d, 20, 1).ok();
  }
  EXPECT_TRUE(caught);
}

TEST(Mutation, SingleEntryTriviallySmooth) {
  const auto d = unit({{0, 0}});
  const auto seq = build_quarter_supersequence(d, 0).first;
  ASSERT_EQ(seq.size(), 1u);
  EXPECT_TRUE(verify_smoothness(seq, d, 50, 1).ok());
  EXPECT_TRUE(verify_supersequence(seq, d, 50, 1).ok());
}

TEST(Mutation, OverlappingDiskRemovalDetected) {
  // Overlapping sequences repeat disks, so remove every copy of one disk.
  for (std::uint64_t s = 0; s < 6; ++s) {
    const auto d = gen::ply_unit(12, 2, s);
    bool caught = false;
    for (int q = 0; q < 4 && !caught; ++q) {
      const auto seq = build_quarter_supersequence(d, q).first;
      for (const auto& disk : d) {
        auto mutated = seq;
        std::erase(mutated.entries, disk.id);
        if (mutated.size() == seq.size()) continue;
        if (!verify_supersequence(mutated, d, 50, 7).ok()) {
          caught = true;
          break;
        }
      }
    }
    EXPECT_TRUE(caught) << "seed " << s;
  }
}
