// Exact sign evaluation of small polynomial expressions over doubles.
//
// Values are held as nonoverlapping floating-point expansions (sums of
// doubles, increasing magnitude). Sums and products of expansions are exact,
// so the sign of any polynomial in double inputs is computed without
// rounding error. A cheap magnitude-tracked double evaluation filters the
// common case before the exact path runs.
#pragma once

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace hullseq::exact {

inline std::pair<double, double> two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  const double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline std::pair<double, double> two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

class Expansion {
 public:
  Expansion() = default;
  Expansion(double v) {  // NOLINT(google-explicit-constructor)
    if (v != 0.0) parts_.push_back(v);
  }

  static Expansion product(double a, double b) {
    Expansion e;
    auto [p, err] = two_product(a, b);
    if (err != 0.0) e.parts_.push_back(err);
    if (p != 0.0) e.parts_.push_back(p);
    return e;
  }

  int sign() const {
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
      if (*it > 0) return 1;
      if (*it < 0) return -1;
    }
    return 0;
  }

  double estimate() const {
    double s = 0.0;
    for (double p : parts_) s += p;
    return s;
  }

  std::size_t size() const { return parts_.size(); }

  friend Expansion operator+(const Expansion& a, const Expansion& b) {
    // Shewchuk's expansion_sum with zero elimination.
    Expansion r = a;
    for (double q : b.parts_) r.grow(q);
    return r;
  }

  friend Expansion operator-(const Expansion& a) {
    Expansion r = a;
    for (double& p : r.parts_) p = -p;
    return r;
  }

  friend Expansion operator-(const Expansion& a, const Expansion& b) { return a + (-b); }

  friend Expansion operator*(const Expansion& a, double b) { return a.scaled(b); }
  friend Expansion operator*(double b, const Expansion& a) { return a.scaled(b); }

  friend Expansion operator*(const Expansion& a, const Expansion& b) {
    Expansion r;
    for (double q : b.parts_) r = r + a.scaled(q);
    return r;
  }

 private:
  void grow(double b) {
    std::vector<double> out;
    out.reserve(parts_.size() + 1);
    double q = b;
    for (double e : parts_) {
      auto [s, err] = two_sum(q, e);
      if (err != 0.0) out.push_back(err);
      q = s;
    }
    if (q != 0.0) out.push_back(q);
    parts_ = std::move(out);
  }

  Expansion scaled(double b) const {
    Expansion r;
    if (b == 0.0) return r;
    for (double e : parts_) {
      auto [p, err] = two_product(e, b);
      r.grow(err);
      r.grow(p);
    }
    return r;
  }

  std::vector<double> parts_;
};

/// Double value paired with a running bound on the magnitude of every term
/// that contributed to it. Rounding error of the evaluation is a small
/// multiple of eps * mag.
struct Approx {
  double val = 0.0;
  double mag = 0.0;

  Approx() = default;
  Approx(double v) : val(v), mag(std::fabs(v)) {}  // NOLINT(google-explicit-constructor)
  Approx(double v, double m) : val(v), mag(m) {}

  friend Approx operator+(Approx a, Approx b) { return {a.val + b.val, a.mag + b.mag}; }
  friend Approx operator-(Approx a, Approx b) { return {a.val - b.val, a.mag + b.mag}; }
  friend Approx operator-(Approx a) { return {-a.val, a.mag}; }
  friend Approx operator*(Approx a, Approx b) { return {a.val * b.val, a.mag * b.mag}; }
};

// Relative threshold far above the accumulated error of the short
// expressions used here (at most a few dozen roundings).
inline constexpr double kFilterRelative = 1e-12;

/// Sign of f(T...) where f is a generic lambda written once over the numeric
/// type. Runs the filtered double path and falls back to expansions.
template <class F>
int sign_of(F&& f) {
  const Approx a = f(Approx{});
  if (std::isfinite(a.val) && std::isfinite(a.mag)) {
    if (a.val > kFilterRelative * a.mag) return 1;
    if (a.val < -kFilterRelative * a.mag) return -1;
    if (a.mag == 0.0) return 0;
  }
  return f(Expansion{}).sign();
}

}  // namespace hullseq::exact
