// hullseq command-line tool: preprocess, reconstruct, classify, verify,
// plot and bench subcommands over JSON files.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hullseq/hullseq.hpp"

namespace {

using hullseq::Error;
using hullseq::ErrorKind;
using nlohmann::json;
namespace io = hullseq::io;

constexpr int kExitVerifyFailed = 1;

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kMalformedInput: return 2;
    case ErrorKind::kInvariantViolation: return 3;
    case ErrorKind::kIdMismatch: return 4;
    case ErrorKind::kPointOutsideDisk: return 5;
  }
  return 2;
}

std::vector<hullseq::Disk> load_disks(const std::string& path) { return io::disks_from_json(io::parse(io::read_file(path))); }

std::vector<hullseq::Supersequence> load_sequences(const std::vector<std::string>& paths) {
  std::vector<hullseq::Supersequence> out;
  for (const auto& p : paths) {
    for (auto& s : io::supersequences_from_json(io::parse(io::read_file(p)))) out.push_back(std::move(s));
  }
  return out;
}

void emit(const std::string& out, const std::string& text) {
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    io::write_file_atomic(out, text);
  }
}

std::vector<int> parse_quadrants(const std::string& spec) {
  if (spec == "all") return {0, 1, 2, 3};
  if (spec.size() == 1 && spec[0] >= '0' && spec[0] <= '3') return {spec[0] - '0'};
  throw Error(ErrorKind::kInvalidArgument, "--quadrant must be 0, 1, 2, 3 or all");
}

json sequences_document(const std::vector<hullseq::Supersequence>& seqs) {
  if (seqs.size() == 1) return io::to_json(seqs.front());
  json arr = json::array();
  for (const auto& s : seqs) arr.push_back(io::to_json(s));
  return {{"sequences", arr}};
}

double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since).count();
}

// ---------------------------------------------------------------------------

struct PreprocessArgs {
  std::string input, out, classification_out, quadrant = "all";
  bool mark = false;
};

int run_preprocess(const PreprocessArgs& a) {
  const auto disks = load_disks(a.input);
  std::vector<hullseq::Supersequence> seqs;
  json report = json::array();
  for (int q : parse_quadrants(a.quadrant)) {
    auto [seq, cert] = hullseq::build_quarter_supersequence(disks, q);
    if (a.mark) {
      const auto cls = hullseq::classify_quarter(disks, q);
      seq = hullseq::mark_stable(disks, seq, cls);
      report.push_back(io::to_json(cls));
    }
    seqs.push_back(std::move(seq));
  }
  emit(a.out, io::dump(sequences_document(seqs)));
  if (!a.classification_out.empty()) {
    const json doc = a.mark ? json{{"quarters", report}} : io::to_json(hullseq::classify_full(disks));
    io::write_file_atomic(a.classification_out, io::dump(doc));
  }
  return 0;
}

struct ReconstructArgs {
  std::string disks, realization, out;
  std::vector<std::string> seqs;
  bool sublinear = false, counters = false;
};

int run_reconstruct(const ReconstructArgs& a) {
  const auto disks = load_disks(a.disks);
  const auto seqs = load_sequences(a.seqs);
  const auto real = io::realization_from_json(io::parse(io::read_file(a.realization)));
  hullseq::ScanCounters counters;
  json doc;
  if (a.sublinear) {
    json chains = json::array();
    json resolved = json::array();
    for (const auto& s : seqs) {
      const auto chain = hullseq::reconstruct_sublinear(s, disks, real, &counters);
      chains.push_back({{"quadrant", s.quadrant}, {"chain", io::to_json(chain, s)}});
      resolved.push_back({{"quadrant", s.quadrant}, {"arc", io::points_to_json(hullseq::resolve_chain(chain, s, real))}});
    }
    doc["chains"] = chains;
    doc["resolved"] = resolved;
  } else if (seqs.size() == 4) {
    doc["hull"] = io::points_to_json(hullseq::reconstruct_full(seqs, disks, real, &counters));
  } else {
    json arcs = json::array();
    for (const auto& s : seqs) {
      arcs.push_back({{"quadrant", s.quadrant}, {"arc", io::points_to_json(hullseq::reconstruct_quarter(s, disks, real, &counters))}});
    }
    doc["arcs"] = arcs;
  }
  if (a.counters) doc["counters"] = io::to_json(counters);
  emit(a.out, io::dump(doc));
  return 0;
}

struct ClassifyArgs {
  std::string input, out, quadrant;
  bool witnesses = false;
};

int run_classify(const ClassifyArgs& a) {
  const auto disks = load_disks(a.input);
  if (a.quadrant == "all") throw Error(ErrorKind::kInvalidArgument, "classify takes a single quadrant");
  const auto scope = a.quadrant.empty() ? hullseq::Scope::full_hull() : hullseq::Scope::quarter(parse_quadrants(a.quadrant).at(0));
  const auto cls = hullseq::classify_disks(disks, scope);
  json doc = io::to_json(cls);
  if (a.witnesses && scope.full()) {
    json w = json::array();
    for (const auto& pw : hullseq::potential_witnesses(disks, cls)) {
      json e{{"id", pw.disk}};
      e["vertex"] = pw.as_vertex ? io::realization_to_json(*pw.as_vertex) : json(nullptr);
      e["non_vertex"] = pw.not_vertex ? io::realization_to_json(*pw.not_vertex) : json(nullptr);
      w.push_back(e);
    }
    doc["witnesses"] = w;
  }
  emit(a.out, io::dump(doc));
  return 0;
}

struct VerifyArgs {
  std::string disks, out;
  std::vector<std::string> seqs;
  int trials = 100;
  std::uint64_t seed = 1;
};

int run_verify(const VerifyArgs& a) {
  if (a.trials < 0) throw Error(ErrorKind::kInvalidArgument, "--trials must be non-negative");
  const auto disks = load_disks(a.disks);
  std::vector<hullseq::Supersequence> seqs;
  if (a.seqs.empty()) {
    for (int q = 0; q < 4; ++q) seqs.push_back(hullseq::build_quarter_supersequence(disks, q).first);
  } else {
    seqs = load_sequences(a.seqs);
  }
  hullseq::VerifyReport total;
  total.instance = a.disks;
  json per = json::array();
  std::size_t length = 0;
  for (const auto& s : seqs) {
    length += s.entries.size();
    auto rep = hullseq::verify_supersequence(s, disks, a.trials, a.seed);
    rep.instance = a.disks;
    rep.merge(hullseq::verify_smoothness(s, disks, a.trials, a.seed));
    json e = io::to_json(rep);
    e["quadrant"] = s.quadrant;
    e["alpha"] = s.alpha;
    e["beta"] = s.beta;
    per.push_back(e);
    total.merge(rep);
  }
  if (!disks.empty()) total.length_per_disk = static_cast<double>(length) / disks.size();
  json doc = io::to_json(total);
  doc["sequences"] = per;
  emit(a.out, io::dump(doc));
  return total.ok() ? 0 : kExitVerifyFailed;
}

struct PlotArgs {
  std::string disks, seq, realization, classification, out;
  int quadrant = -1;
  bool regions = false;
};

int run_plot(const PlotArgs& a) {
  hullseq::svg::Figure fig;
  fig.disks = load_disks(a.disks);
  if (!a.classification.empty()) fig.classification = io::classification_from_json(io::parse(io::read_file(a.classification)));
  int quadrant = a.quadrant;
  if (!a.seq.empty()) {
    const auto seqs = load_sequences({a.seq});
    if (quadrant < 0) quadrant = seqs.front().quadrant;
  }
  if (quadrant > 3) throw Error(ErrorKind::kInvalidArgument, "--quadrant must be 0..3");
  if (quadrant >= 0) {
    fig.strips = hullseq::from_quadrant_frame(hullseq::build_quarter(fig.disks, quadrant).strips, quadrant);
  }
  if (a.regions && !fig.disks.empty()) {
    fig.region_i = hullseq::region_I(fig.disks);
    fig.region_e = hullseq::region_E(fig.disks);
  }
  if (!a.realization.empty()) {
    const auto real = io::realization_from_json(io::parse(io::read_file(a.realization)));
    hullseq::validate_realization(fig.disks, real);
    for (const auto& [id, p] : real) fig.points.push_back(p);
    fig.hull = hullseq::gift_wrap_hull(fig.points);
  }
  const std::string svg = hullseq::svg::render(fig);
  if (a.out.empty()) {
    std::cout << svg;
  } else {
    io::write_file_atomic(a.out, svg);
  }
  return 0;
}

struct BenchArgs {
  std::vector<int> n{100};
  int ply = 1;
  double ratio = 1.0, stable_fraction = 0.0;
  std::uint64_t seed = 1;
  std::string out;
};

std::vector<hullseq::Disk> bench_instance(const BenchArgs& a, int n) {
  if (a.stable_fraction > 0.0) {
    // Ring sizes are multiples of 8 so the generator's axis disks line up.
    const int ring = std::max(8, static_cast<int>(std::lround(a.stable_fraction * n / 8.0)) * 8);
    return hullseq::gen::stable_ring(ring, std::max(0, n - ring));
  }
  if (a.ply > 1) return hullseq::gen::ply_unit(n, a.ply, a.seed);
  if (a.ratio > 1.0) return hullseq::gen::bounded_ratio(n, a.ratio, a.seed);
  return hullseq::gen::disjoint_unit(n, a.seed);
}

int run_bench(const BenchArgs& a) {
  if (a.ply < 1 || a.ratio < 1.0 || a.stable_fraction < 0.0 || a.stable_fraction > 1.0) {
    throw Error(ErrorKind::kInvalidArgument, "bench needs --ply >= 1, --ratio >= 1 and --stable-fraction in [0, 1]");
  }
  std::ostringstream csv;
  csv << "n,ply,ratio,seq_length,unstable,preprocess_ms,touches,bruteforce_ms\n";
  for (int n : a.n) {
    if (n < 1) throw Error(ErrorKind::kInvalidArgument, "--n must be positive");
    const auto disks = bench_instance(a, n);
    const auto t0 = std::chrono::steady_clock::now();
    std::vector<hullseq::Supersequence> seqs;
    for (int q = 0; q < 4; ++q) {
      seqs.push_back(a.stable_fraction > 0.0 ? hullseq::preprocess_marked(disks, q)
                                             : hullseq::build_quarter_supersequence(disks, q).first);
    }
    const double pre_ms = elapsed_ms(t0);
    std::size_t length = 0;
    std::set<int> unstable;
    for (const auto& s : seqs) {
      length += s.entries.size();
      for (std::size_t i = 0; i < s.entries.size(); ++i) {
        if (!s.marked(i)) unstable.insert(s.entries[i]);
      }
    }
    const auto real = hullseq::random_realization(disks, a.seed);
    hullseq::ScanCounters counters;
    for (const auto& s : seqs) (void)hullseq::reconstruct_sublinear(s, disks, real, &counters);
    const auto t1 = std::chrono::steady_clock::now();
    std::vector<hullseq::Point> pts;
    for (const auto& [id, p] : real) pts.push_back(p);
    (void)hullseq::gift_wrap_hull(pts);
    const double brute_ms = elapsed_ms(t1);
    char line[256];
    std::snprintf(line, sizeof line, "%zu,%d,%.6g,%zu,%zu,%.3f,%lld,%.3f\n", disks.size(), hullseq::disk_ply(disks),
                  hullseq::radius_ratio(disks), length, unstable.size(), pre_ms, counters.touches, brute_ms);
    csv << line;
  }
  emit(a.out, csv.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Smooth convex-hull supersequences for uncertainty disks"};
  app.require_subcommand(1);

  PreprocessArgs pre;
  auto* c_pre = app.add_subcommand("preprocess", "Build quarter-hull supersequences for a disk set");
  c_pre->add_option("input", pre.input, "Disk set JSON")->required();
  c_pre->add_option("--quadrant", pre.quadrant, "0, 1, 2, 3 or all");
  c_pre->add_flag("--mark", pre.mark, "Mark stable guaranteed disks");
  c_pre->add_option("--out", pre.out, "Output sequence file (stdout if omitted)");
  c_pre->add_option("--classification", pre.classification_out, "Also write the classification report");

  ReconstructArgs rec;
  auto* c_rec = app.add_subcommand("reconstruct", "Reconstruct the hull of a realization");
  c_rec->add_option("--disks", rec.disks, "Disk set JSON")->required();
  c_rec->add_option("--seq", rec.seqs, "Sequence file (repeatable)")->required();
  c_rec->add_option("--realization", rec.realization, "Realization JSON")->required();
  c_rec->add_flag("--sublinear", rec.sublinear, "Skip marked runs and emit hull chains");
  c_rec->add_flag("--counters", rec.counters, "Include work counters");
  c_rec->add_option("--out", rec.out, "Output file (stdout if omitted)");

  ClassifyArgs cls;
  auto* c_cls = app.add_subcommand("classify", "Classify disks by their possible hull role");
  c_cls->add_option("input", cls.input, "Disk set JSON")->required();
  c_cls->add_option("--quadrant", cls.quadrant, "Quarter scope 0..3 (full hull if omitted)");
  c_cls->add_flag("--witnesses", cls.witnesses, "Attach realizations for potential disks");
  c_cls->add_option("--out", cls.out, "Output file (stdout if omitted)");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify", "Check sequences against brute force on sampled realizations");
  c_ver->add_option("--disks", ver.disks, "Disk set JSON")->required();
  c_ver->add_option("--seq", ver.seqs, "Sequence file (repeatable; preprocessed if omitted)");
  c_ver->add_option("--trials", ver.trials, "Random realizations per sequence");
  c_ver->add_option("--seed", ver.seed, "Random seed");
  c_ver->add_option("--out", ver.out, "Report file (stdout if omitted)");

  PlotArgs plot;
  auto* c_plot = app.add_subcommand("plot", "Render an SVG figure");
  c_plot->add_option("--disks", plot.disks, "Disk set JSON")->required();
  c_plot->add_option("--seq", plot.seq, "Sequence file; its quadrant selects the strip view");
  c_plot->add_option("--quadrant", plot.quadrant, "Strip view quadrant 0..3");
  c_plot->add_option("--realization", plot.realization, "Realization JSON");
  c_plot->add_option("--classification", plot.classification, "Classification JSON");
  c_plot->add_flag("--regions", plot.regions, "Draw the regions I and E");
  c_plot->add_option("--out", plot.out, "SVG file (stdout if omitted)");

  BenchArgs bench;
  auto* c_bench = app.add_subcommand("bench", "Generate instances and print a CSV of sizes, timings and counters");
  c_bench->add_option("--n", bench.n, "Instance sizes")->delimiter(',');
  c_bench->add_option("--ply", bench.ply, "Cluster size for the ply generator");
  c_bench->add_option("--ratio", bench.ratio, "Largest radius for the bounded-ratio generator");
  c_bench->add_option("--stable-fraction", bench.stable_fraction, "Fraction of disks on a stable ring");
  c_bench->add_option("--seed", bench.seed, "Random seed");
  c_bench->add_option("--out", bench.out, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "E_INVALID_ARGUMENT: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_pre) return run_preprocess(pre);
    if (*c_rec) return run_reconstruct(rec);
    if (*c_cls) return run_classify(cls);
    if (*c_ver) return run_verify(ver);
    if (*c_plot) return run_plot(plot);
    if (*c_bench) return run_bench(bench);
  } catch (const Error& e) {
    std::cerr << hullseq::error_id(e.kind()) << ": " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "E_INTERNAL: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
