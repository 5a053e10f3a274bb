#include <gtest/gtest.h>

#include <filesystem>
#include <regex>

#include "hullseq/generators.hpp"
#include "hullseq/io.hpp"
#include "hullseq/svg.hpp"
#include "oracle_support.hpp"

using namespace hullseq;
using nlohmann::json;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kInvalidArgument;
}

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Json, DisksRoundTrip) {
  const auto d = gen::bounded_ratio(50, 3.0, 8);
  const auto back = io::disks_from_json(io::parse(io::dump(io::to_json(d))));
  ASSERT_EQ(back.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    EXPECT_EQ(back[i].id, d[i].id);
    EXPECT_EQ(back[i].center, d[i].center);  // shortest round-trip doubles are exact
    EXPECT_EQ(back[i].radius, d[i].radius);
  }
}

TEST(Json, SequenceRoundTrip) {
  const auto d = gen::stable_ring(16);
  for (int q = 0; q < 4; ++q) {
    for (const auto& seq : {build_quarter_supersequence(d, q).first, preprocess_marked(d, q)}) {
      const auto back = io::supersequence_from_json(io::parse(io::dump(io::to_json(seq))));
      EXPECT_EQ(back.entries, seq.entries);
      EXPECT_EQ(back.quadrant, seq.quadrant);
      EXPECT_EQ(back.alpha, seq.alpha);
      EXPECT_EQ(back.beta, seq.beta);
      EXPECT_EQ(back.regime, seq.regime);
      EXPECT_EQ(back.unmarked_count(), seq.unmarked_count());
      if (!back.marks.empty()) EXPECT_EQ(back.skip, seq.skip);
    }
  }
}

TEST(Json, SequencesWrapper) {
  const auto d = gen::disjoint_unit(10, 1);
  json arr = json::array();
  for (int q = 0; q < 4; ++q) arr.push_back(io::to_json(build_quarter_supersequence(d, q).first));
  const auto seqs = io::supersequences_from_json(json{{"sequences", arr}});
  ASSERT_EQ(seqs.size(), 4u);
  for (int q = 0; q < 4; ++q) EXPECT_EQ(seqs[q].quadrant, q);
}

TEST(Json, ClassificationRoundTrip) {
  const auto d = gen::small_random(7, 22, false);
  for (const auto& c : {classify_full(d), classify_quarter(d, 2)}) {
    const auto back = io::classification_from_json(io::parse(io::dump(io::to_json(c))));
    EXPECT_EQ(back.classes, c.classes);
    EXPECT_EQ(back.scope.full(), c.scope.full());
  }
}

TEST(Json, RealizationRoundTrip) {
  const auto r = random_realization(gen::disjoint_unit(20, 3), 4);
  EXPECT_EQ(io::realization_from_json(io::parse(io::dump(io::realization_to_json(r)))), r);
}

TEST(Json, MalformedInput) {
  EXPECT_EQ(kind_of([] { io::parse("{\"disks\": ["); }), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { io::disks_from_json(json::object()); }), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { io::disks_from_json(io::parse(R"({"disks":[{"id":0,"cx":"a","cy":0,"r":1}]})")); }),
            ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { io::disks_from_json(io::parse(R"({"disks":[{"id":0,"cx":0,"cy":0,"r":0}]})")); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(kind_of([] { io::disks_from_json(io::parse(R"({"disks":[{"id":0,"cx":0,"cy":0,"r":1},{"id":0,"cx":5,"cy":0,"r":1}]})")); }),
            ErrorKind::kInvariantViolation);
  EXPECT_EQ(kind_of([] { io::supersequence_from_json(io::parse(R"({"quadrant":0,"alpha":1,"beta":3,"regime":"NOPE","entries":[]})")); }),
            ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] {
              io::supersequence_from_json(
                  io::parse(R"({"quadrant":0,"alpha":1,"beta":3,"regime":"DISJOINT_UNIT","entries":[1,2],"marks":[true,false],"skip":[-1,-1]})"));
            }),
            ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { io::classification_from_json(io::parse(R"({"scope":9,"disks":[]})")); }), ErrorKind::kMalformedInput);
  EXPECT_EQ(kind_of([] { io::read_file("/nonexistent/file.json"); }), ErrorKind::kInvalidArgument);
}

TEST(Json, FixturesLoad) {
  const auto d = io::disks_from_json(io::parse(io::read_file(testsupport::fixture("triangle.json"))));
  EXPECT_EQ(d.size(), 3u);
  EXPECT_EQ(kind_of([] { io::disks_from_json(io::parse(io::read_file(testsupport::fixture("malformed.json")))); }),
            ErrorKind::kMalformedInput);
}

TEST(Json, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "hullseq_io_test";
  std::filesystem::create_directories(dir);
  io::write_file_atomic(dir / "a.json", "{}\n");
  EXPECT_EQ(io::read_file(dir / "a.json"), "{}\n");
  std::filesystem::remove_all(dir);
}

TEST(Svg, Deterministic) {
  const auto d = gen::small_random(7, 22, false);
  svg::Figure fig;
  fig.disks = d;
  fig.classification = classify_full(d);
  fig.region_i = region_I(d);
  fig.region_e = region_E(d);
  EXPECT_EQ(svg::render(fig), svg::render(fig));
  EXPECT_EQ(svg::render(fig).rfind("<svg", 0), 0u);
}

TEST(Svg, FiveClassColors) {
  const auto d = io::disks_from_json(io::parse(io::read_file(testsupport::fixture("five_classes.json"))));
  svg::Figure fig;
  fig.disks = d;
  fig.classification = classify_full(d);
  const auto text = svg::render(fig);
  std::set<std::string> colors;
  for (auto c : {DiskClass::kStableGuaranteedBoundary, DiskClass::kUnstableGuaranteedBoundary, DiskClass::kUnstablePotentialBoundary,
                 DiskClass::kUnstablePotentialInterior, DiskClass::kStableImpossibleInterior}) {
    colors.insert(svg::class_color(c));
    // Each class appears in the legend and, for this instance, on some disk.
    EXPECT_GE(count(text, std::string("fill=\"") + svg::class_color(c) + "\" fill-opacity"), 1u) << to_string(c);
  }
  EXPECT_EQ(colors.size(), 5u);
}

TEST(Svg, TriangleQuadrantZeroStrips) {
  const auto d = io::disks_from_json(io::parse(io::read_file(testsupport::fixture("triangle.json"))));
  const auto b = build_quarter(d, 0);
  int bounded = 0;
  for (const auto& s : b.strips.strips) bounded += s.bounded();
  EXPECT_EQ(bounded, 1);
  svg::Figure fig;
  fig.disks = d;
  fig.strips = from_quadrant_frame(b.strips, 0);
  const auto text = svg::render(fig);
  EXPECT_EQ(count(text, "stroke=\"#7b1fa2\""), b.strips.strips.size());
  EXPECT_EQ(count(text, "<circle"), 3u);
}
