// Deterministic SVG figures of disks, strips, regions and hulls.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hullseq/classify.hpp"
#include "hullseq/geometry.hpp"
#include "hullseq/strip_hull.hpp"

namespace hullseq::svg {

/// Fill colors of the five disk classes, as used in the legend.
inline const char* class_color(DiskClass c) {
  switch (c) {
    case DiskClass::kStableImpossibleInterior: return "#9e9e9e";
    case DiskClass::kUnstablePotentialInterior: return "#f2c14e";
    case DiskClass::kUnstablePotentialBoundary: return "#f78154";
    case DiskClass::kUnstableGuaranteedBoundary: return "#5fad56";
    case DiskClass::kStableGuaranteedBoundary: return "#2e6fba";
  }
  return "#000000";
}

struct Figure {
  std::vector<Disk> disks;
  std::optional<Classification> classification;
  std::optional<StripHull> strips;
  std::optional<ConvexRegion> region_i;
  std::optional<ConvexRegion> region_e;
  std::vector<Point> hull;
  std::vector<Point> points;
};

namespace detail {

// Fixed-precision numbers keep the bytes stable across platforms.
inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v == 0.0 ? 0.0 : v);
  return buf;
}

class Canvas {
 public:
  Canvas(Point lo, Point hi, double width) : lo_(lo), hi_(hi) {
    const double span = std::max(hi.x - lo.x, hi.y - lo.y);
    scale_ = width / (span > 0 ? span : 1.0);
    w_ = (hi.x - lo.x) * scale_;
    h_ = (hi.y - lo.y) * scale_;
  }

  std::string x(double v) const { return num((v - lo_.x) * scale_); }
  std::string y(double v) const { return num((hi_.y - v) * scale_); }  // SVG y grows downward
  std::string len(double v) const { return num(v * scale_); }
  double width() const { return w_; }
  double height() const { return h_; }

 private:
  Point lo_, hi_;
  double scale_ = 1.0, w_ = 0.0, h_ = 0.0;
};

inline std::string polygon(const Canvas& cv, const std::vector<Point>& pts, const std::string& style, bool closed) {
  std::string s = closed ? "<polygon points=\"" : "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += cv.x(pts[i].x) + "," + cv.y(pts[i].y);
  }
  return s + "\" " + style + "/>\n";
}

}  // namespace detail

/// Renders the figure. Output depends only on the figure contents.
inline std::string render(const Figure& fig, double width = 800.0) {
  Point lo{0, 0}, hi{1, 1};
  if (!fig.disks.empty()) {
    lo = hi = fig.disks.front().center;
    for (const auto& d : fig.disks) {
      lo = {std::min(lo.x, d.center.x - d.radius), std::min(lo.y, d.center.y - d.radius)};
      hi = {std::max(hi.x, d.center.x + d.radius), std::max(hi.y, d.center.y + d.radius)};
    }
  }
  const double pad = 0.05 * std::max({hi.x - lo.x, hi.y - lo.y, 1.0});
  lo = lo - Point{pad, pad};
  hi = hi + Point{pad, pad};
  const detail::Canvas cv(lo, hi, width);
  const double legend_h = fig.classification ? 110.0 : 0.0;

  std::string out;
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + detail::num(cv.width()) + "\" height=\"" +
         detail::num(cv.height() + legend_h) + "\" viewBox=\"0 0 " + detail::num(cv.width()) + " " +
         detail::num(cv.height() + legend_h) + "\">\n";
  out += "<rect x=\"0\" y=\"0\" width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (fig.region_e && !fig.region_e->empty()) {
    out += detail::polygon(cv, fig.region_e->vertices(), "fill=\"#e8f1fb\" stroke=\"#2e6fba\" stroke-dasharray=\"4 3\"", true);
  }
  if (fig.region_i && !fig.region_i->empty()) {
    out += detail::polygon(cv, fig.region_i->vertices(), "fill=\"#eeeeee\" stroke=\"#616161\" stroke-dasharray=\"2 2\"", true);
  }
  if (fig.strips) {
    const double far = 2.0 * std::max(hi.x - lo.x, hi.y - lo.y);
    for (const auto& s : fig.strips->strips) {
      const Point to = s.bounded() ? s.spine_to : s.spine_from + s.ray * far;
      out += "<line x1=\"" + cv.x(s.spine_from.x) + "\" y1=\"" + cv.y(s.spine_from.y) + "\" x2=\"" + cv.x(to.x) +
             "\" y2=\"" + cv.y(to.y) + "\" stroke=\"#7b1fa2\" stroke-width=\"1\"/>\n";
      const Point dir = to - s.spine_from;
      const double n = norm(dir);
      if (n == 0) continue;
      const Point perp{-dir.y / n, dir.x / n};
      for (double side : {1.0, -1.0}) {
        const Point a = s.spine_from + perp * (side * s.left_radius);
        const Point b = to + perp * (side * s.right_radius);
        out += "<line x1=\"" + cv.x(a.x) + "\" y1=\"" + cv.y(a.y) + "\" x2=\"" + cv.x(b.x) + "\" y2=\"" + cv.y(b.y) +
               "\" stroke=\"#ce93d8\" stroke-width=\"0.8\"/>\n";
      }
    }
  }
  for (const auto& d : fig.disks) {
    std::string fill = "none";
    if (fig.classification) {
      auto it = fig.classification->classes.find(d.id);
      if (it != fig.classification->classes.end()) fill = class_color(it->second);
    }
    out += "<circle cx=\"" + cv.x(d.center.x) + "\" cy=\"" + cv.y(d.center.y) + "\" r=\"" + cv.len(d.radius) +
           "\" fill=\"" + fill + "\" fill-opacity=\"0.6\" stroke=\"#212121\" stroke-width=\"1\"/>\n";
  }
  if (!fig.hull.empty()) {
    auto pts = fig.hull;
    out += detail::polygon(cv, pts, "fill=\"none\" stroke=\"#d32f2f\" stroke-width=\"2\"", true);
  }
  for (const auto& p : fig.points) {
    out += "<circle cx=\"" + cv.x(p.x) + "\" cy=\"" + cv.y(p.y) + "\" r=\"2.5\" fill=\"#000000\"/>\n";
  }
  if (fig.classification) {
    double y = cv.height() + 18.0;
    for (auto c : {DiskClass::kStableGuaranteedBoundary, DiskClass::kUnstableGuaranteedBoundary,
                   DiskClass::kUnstablePotentialBoundary, DiskClass::kUnstablePotentialInterior,
                   DiskClass::kStableImpossibleInterior}) {
      out += "<rect x=\"10\" y=\"" + detail::num(y - 10.0) + "\" width=\"12\" height=\"12\" fill=\"" + class_color(c) + "\"/>\n";
      out += "<text x=\"28\" y=\"" + detail::num(y) + "\" font-family=\"monospace\" font-size=\"12\">" + to_string(c) + "</text>\n";
      y += 19.0;
    }
  }
  out += "</svg>\n";
  return out;
}

}  // namespace hullseq::svg
