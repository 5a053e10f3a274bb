#include <gtest/gtest.h>

#include "hullseq/generators.hpp"
#include "hullseq/oracles.hpp"
#include "hullseq/preprocess.hpp"
#include "oracle_support.hpp"

using namespace hullseq;

TEST(RandomRealization, DeterministicAndInside) {
  const auto d = gen::bounded_ratio(40, 4.0, 5);
  EXPECT_EQ(random_realization(d, 3), random_realization(d, 3));
  EXPECT_NE(random_realization(d, 3), random_realization(d, 4));
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto r = random_realization(d, s);
    ASSERT_EQ(r.size(), d.size());
    for (const auto& disk : d) ASSERT_TRUE(disk_contains(disk, r.at(disk.id)));
  }
}

TEST(RandomRealization, MeanNearCenter) {
  const std::vector<Disk> d{{4, {3, -2}, 1.5}};
  Point sum{0, 0};
  const int samples = 100000;
  for (int s = 0; s < samples; ++s) sum = sum + random_realization(d, static_cast<std::uint64_t>(s)).at(4);
  EXPECT_NEAR(sum.x / samples, 3.0, 0.02);
  EXPECT_NEAR(sum.y / samples, -2.0, 0.02);
}

TEST(Adversarial, SingleDiskGivesCompassPoints) {
  const std::vector<Disk> d{{0, {1, 1}, 2}};
  const auto reals = adversarial_realizations(d);
  ASSERT_EQ(reals.size(), 8u);
  for (const auto& r : reals) EXPECT_NEAR(norm(r.at(0) - Point{1, 1}), 2.0, 1e-9);
}

TEST(Adversarial, BudgetRespectedAndDistinct) {
  const auto d = gen::disjoint_unit(100, 2);
  for (std::size_t budget : {0u, 1u, 10u, 64u}) {
    const auto reals = adversarial_realizations(d, budget);
    EXPECT_EQ(reals.size(), budget);
    for (std::size_t i = 0; i < reals.size(); ++i) {
      for (std::size_t j = i + 1; j < reals.size(); ++j) EXPECT_NE(reals[i], reals[j]);
      for (const auto& disk : d) ASSERT_TRUE(disk_contains(disk, reals[i].at(disk.id)));
    }
  }
}

TEST(Adversarial, TriangleIncludesAllOutward) {
  const std::vector<Disk> d{{0, {0, 0}, 1}, {1, {6, 0}, 1}, {2, {3, 5}, 1}};
  const Point c{3, 5.0 / 3.0};
  bool found = false;
  for (const auto& r : adversarial_realizations(d)) {
    bool all = true;
    for (const auto& disk : d) {
      const Point out = disk.center - c;
      all = all && std::fabs(norm(r.at(disk.id) - disk.center) - 1.0) < 1e-9 &&
            (r.at(disk.id) - disk.center).x * out.x + (r.at(disk.id) - disk.center).y * out.y > 0.99 * norm(out);
    }
    found = found || all;
  }
  EXPECT_TRUE(found);
}

TEST(Verify, EmptyDiskSetGivesEmptyReport) {
  Supersequence seq;
  seq.alpha = 1;
  seq.beta = 3;
  const auto rep = verify_supersequence(seq, {}, 100, 1);
  EXPECT_TRUE(rep.ok());
  EXPECT_EQ(rep.trials, 0);
  EXPECT_TRUE(verify_smoothness(seq, {}, 100, 1).ok());
}

TEST(Verify, PreprocessedSequencesPass) {
  for (std::uint64_t s = 0; s < 3; ++s) {
    for (const auto& d : {gen::disjoint_unit(60, s), gen::ply_unit(60, 3, s), gen::bounded_ratio(60, 4.0, s)}) {
      for (int q = 0; q < 4; ++q) {
        const auto seq = build_quarter_supersequence(d, q).first;
        const auto rep = verify_supersequence(seq, d, 30, s);
        EXPECT_TRUE(rep.ok()) << (rep.ok() ? "" : rep.failures.front().message);
        EXPECT_GT(rep.trials, 30);
        const auto sm = verify_smoothness(seq, d, 30, s);
        EXPECT_TRUE(sm.ok()) << (sm.ok() ? "" : sm.failures.front().message);
        EXPECT_LE(sm.max_alpha_observed, seq.alpha);
        EXPECT_LE(sm.max_beta_observed, seq.beta);
      }
    }
  }
}

TEST(Verify, BruteQuarterHullMatchesIndependentOracle) {
  for (std::uint64_t s = 0; s < 200; ++s) {
    const auto d = gen::small_random(8, s, true);
    std::vector<Point> pts;
    for (const auto& [id, p] : random_realization(d, s)) pts.push_back(p);
    EXPECT_EQ(brute_quarter_hull(pts), testsupport::quarter_of(testsupport::brute_hull(pts)));
  }
}

TEST(Verify, EmbedsWithMarks) {
  const std::vector<Point> hull{{5, 0}, {3, 3}, {0, 5}};
  EXPECT_TRUE(embeds_with_marks(hull, {{{5, 0}, false}, {{1, 1}, false}, {{3, 3}, false}, {{0, 5}, false}}));
  EXPECT_FALSE(embeds_with_marks(hull, {{{5, 0}, false}, {{0, 5}, false}, {{3, 3}, false}}));
  // A marked point must be a hull vertex in order.
  EXPECT_FALSE(embeds_with_marks(hull, {{{5, 0}, false}, {{1, 1}, true}, {{3, 3}, false}, {{0, 5}, false}}));
}

TEST(ProbeStripPly, CountsOverlaps) {
  const std::vector<Disk> d{{0, {0, 0}, 1}, {1, {10, 0}, 1}, {2, {10, 10}, 1}};
  StripHull sh;
  sh.strips = {make_bounded_strip(d[0], d[1]), make_bounded_strip(d[1], d[2])};
  EXPECT_EQ(probe_strip_ply(sh, {{5, 0}}), 1);
  EXPECT_EQ(probe_strip_ply(sh, {{10, 0}}), 2);
  EXPECT_EQ(probe_strip_ply(sh, {{5, 5}}), 0);
}
