// JSON persistence for disk sets, realizations, sequences, classifications
// and reports. Doubles are written in shortest round-trip form.
#pragma once

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hullseq/classify.hpp"
#include "hullseq/error.hpp"
#include "hullseq/oracles.hpp"
#include "hullseq/preprocess.hpp"
#include "hullseq/reconstruct.hpp"

namespace hullseq::io {

using nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::kMalformedInput, std::string("missing field '") + key + "'");
  return j.at(key);
}

inline double number(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number()) throw Error(ErrorKind::kMalformedInput, std::string("field '") + key + "' is not a number");
  return v.get<double>();
}

inline int integer(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer()) throw Error(ErrorKind::kMalformedInput, std::string("field '") + key + "' is not an integer");
  return v.get<int>();
}

inline const json& array(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_array()) throw Error(ErrorKind::kMalformedInput, std::string("field '") + key + "' is not an array");
  return v;
}

}  // namespace detail

inline json parse(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kMalformedInput, std::string("invalid JSON: ") + e.what());
  }
}

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kInvalidArgument, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Writes through a temporary file in the target directory, then renames.
inline void write_file_atomic(const std::filesystem::path& path, const std::string& text) {
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::kInvalidArgument, "cannot write " + tmp.string());
    out << text;
    if (!out.flush()) throw Error(ErrorKind::kInvalidArgument, "cannot write " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

inline std::string dump(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Disk sets.

inline std::vector<Disk> disks_from_json(const json& j) {
  std::vector<Disk> out;
  for (const auto& e : detail::array(j, "disks")) {
    out.push_back({detail::integer(e, "id"), {detail::number(e, "cx"), detail::number(e, "cy")}, detail::number(e, "r")});
  }
  validate_disks(out);
  DiskIndex check(out);
  return out;
}

inline json to_json(const std::vector<Disk>& disks) {
  json arr = json::array();
  for (const auto& d : disks) arr.push_back({{"id", d.id}, {"cx", d.center.x}, {"cy", d.center.y}, {"r", d.radius}});
  return {{"disks", arr}};
}

// ---------------------------------------------------------------------------
// Realizations.

inline Realization realization_from_json(const json& j) {
  Realization out;
  for (const auto& e : detail::array(j, "points")) {
    const int id = detail::integer(e, "id");
    if (out.count(id)) throw Error(ErrorKind::kInvariantViolation, "duplicate point id " + std::to_string(id));
    out[id] = {detail::number(e, "x"), detail::number(e, "y")};
  }
  return out;
}

inline json realization_to_json(const Realization& r) {
  json arr = json::array();
  for (const auto& [id, p] : r) arr.push_back({{"id", id}, {"x", p.x}, {"y", p.y}});
  return {{"points", arr}};
}

inline json points_to_json(const std::vector<Point>& pts) {
  json arr = json::array();
  for (const auto& p : pts) arr.push_back({{"x", p.x}, {"y", p.y}});
  return arr;
}

// ---------------------------------------------------------------------------
// Supersequences.

inline json to_json(const Supersequence& s) {
  json j;
  j["quadrant"] = s.quadrant;
  j["alpha"] = s.alpha;
  j["beta"] = s.beta;
  j["regime"] = to_string(s.regime);
  j["entries"] = s.entries;
  std::vector<bool> marks = s.marks;
  if (marks.empty()) marks.assign(s.entries.size(), false);
  j["marks"] = marks;
  if (s.skip.size() == s.entries.size()) {
    j["skip"] = s.skip;
  } else {
    Supersequence tmp = s;
    compute_skip_pointers(tmp);
    j["skip"] = tmp.skip;
  }
  return j;
}

inline Supersequence supersequence_from_json(const json& j) {
  Supersequence s;
  s.quadrant = detail::integer(j, "quadrant");
  s.alpha = detail::number(j, "alpha");
  s.beta = detail::number(j, "beta");
  const json& regime = detail::field(j, "regime");
  if (!regime.is_string()) throw Error(ErrorKind::kMalformedInput, "field 'regime' is not a string");
  s.regime = regime_from_string(regime.get<std::string>());
  for (const auto& e : detail::array(j, "entries")) {
    if (!e.is_number_integer()) throw Error(ErrorKind::kMalformedInput, "entries must be integers");
    s.entries.push_back(e.get<int>());
  }
  if (j.contains("marks")) {
    for (const auto& e : detail::array(j, "marks")) {
      if (!e.is_boolean()) throw Error(ErrorKind::kMalformedInput, "marks must be booleans");
      s.marks.push_back(e.get<bool>());
    }
  }
  if (j.contains("skip")) {
    for (const auto& e : detail::array(j, "skip")) {
      if (!e.is_number_integer()) throw Error(ErrorKind::kMalformedInput, "skip must be integers");
      s.skip.push_back(e.get<int>());
    }
  }
  validate_supersequence(s);
  // Drop an all-false mark vector so the plain sequence round-trips.
  if (std::none_of(s.marks.begin(), s.marks.end(), [](bool b) { return b; })) {
    s.marks.clear();
    s.skip.clear();
  } else {
    Supersequence expect = s;
    compute_skip_pointers(expect);
    if (!s.skip.empty() && s.skip != expect.skip) throw Error(ErrorKind::kMalformedInput, "skip pointers are inconsistent with marks");
    s.skip = expect.skip;
  }
  return s;
}

/// A file holds either one sequence or {"sequences": [...]}.
inline std::vector<Supersequence> supersequences_from_json(const json& j) {
  std::vector<Supersequence> out;
  if (j.is_object() && j.contains("sequences")) {
    for (const auto& e : detail::array(j, "sequences")) out.push_back(supersequence_from_json(e));
  } else {
    out.push_back(supersequence_from_json(j));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classifications.

inline json to_json(const Classification& c) {
  json arr = json::array();
  for (const auto& [id, cls] : c.classes) arr.push_back({{"id", id}, {"class", to_string(cls)}});
  json j;
  j["scope"] = c.scope.full() ? json("full") : json(c.scope.quadrant);
  j["disks"] = arr;
  return j;
}

inline Classification classification_from_json(const json& j) {
  Classification c;
  const json& scope = detail::field(j, "scope");
  if (scope.is_string() && scope.get<std::string>() == "full") {
    c.scope = Scope::full_hull();
  } else if (scope.is_number_integer() && scope.get<int>() >= 0 && scope.get<int>() <= 3) {
    c.scope = Scope::quarter(scope.get<int>());
  } else {
    throw Error(ErrorKind::kMalformedInput, "scope must be \"full\" or a quadrant 0..3");
  }
  for (const auto& e : detail::array(j, "disks")) {
    const json& name = detail::field(e, "class");
    if (!name.is_string()) throw Error(ErrorKind::kMalformedInput, "class must be a string");
    c.classes[detail::integer(e, "id")] = disk_class_from_string(name.get<std::string>());
  }
  return c;
}

// ---------------------------------------------------------------------------
// Reports.

inline json to_json(const ScanCounters& c) {
  return {{"touches", c.touches},         {"inserts", c.inserts},         {"graham_pops", c.graham_pops},
          {"nw_pops", c.nw_pops},         {"edge_checks", c.edge_checks}, {"discards", c.discards},
          {"max_edge_checks_per_point", c.max_edge_checks_per_point}};
}

inline json to_json(const VerifyReport& r) {
  json failures = json::array();
  for (const auto& f : r.failures) {
    failures.push_back({{"trial", f.trial}, {"kind", f.kind}, {"message", f.message},
                        {"realization", realization_to_json(f.realization)}});
  }
  return {{"instance", r.instance},
          {"trials", r.trials},
          {"failures", failures},
          {"max_alpha_observed", r.max_alpha_observed},
          {"max_beta_observed", r.max_beta_observed},
          {"length_per_disk", r.length_per_disk}};
}

inline json to_json(const HullChain& chain, const Supersequence& seq) {
  json nodes = json::array();
  for (int i = chain.head; i >= 0; i = chain.nodes[i].next) {
    const auto& v = chain.nodes[i].value;
    if (const Point* p = std::get_if<Point>(&v)) {
      nodes.push_back({{"x", p->x}, {"y", p->y}});
    } else {
      const auto run = std::get<HullChain::MarkedRun>(v);
      std::vector<int> ids(seq.entries.begin() + static_cast<std::ptrdiff_t>(run.first),
                           seq.entries.begin() + static_cast<std::ptrdiff_t>(run.last));
      nodes.push_back({{"marked", ids}});
    }
  }
  return nodes;
}

}  // namespace hullseq::io
