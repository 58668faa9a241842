// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "ratcurves/error.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/rational.hpp"
#include "ratcurves/univariate.hpp"

namespace ratcurves {

/// Sparse polynomial in the local coordinates (x, y) of an affine chart.
class BivariatePoly {
 public:
  using Terms = std::map<std::pair<int, int>, Rational>;

  BivariatePoly() = default;

  static BivariatePoly constant(const Rational& a) {
    BivariatePoly p;
    p.add(0, 0, a);
    return p;
  }
  static BivariatePoly x() {
    BivariatePoly p;
    p.add(1, 0, 1);
    return p;
  }
  static BivariatePoly y() {
    BivariatePoly p;
    p.add(0, 1, 1);
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(int i, int j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(int i, int j, const Rational& a) {
    if (a == 0) return;
    auto [it, inserted] = terms_.emplace(std::pair{i, j}, a);
    if (!inserted) {
      it->second += a;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Lowest total degree of a term: the multiplicity at the origin.
  int order() const {
    int m = std::numeric_limits<int>::max();
    for (const auto& [e, a] : terms_) m = std::min(m, e.first + e.second);
    return m;
  }
  int total_degree() const {
    int d = 0;
    for (const auto& [e, a] : terms_) d = std::max(d, e.first + e.second);
    return d;
  }
  int degree_in_y() const {
    int d = -1;
    for (const auto& [e, a] : terms_) d = std::max(d, e.second);
    return d;
  }

  Rational operator()(const Rational& x0, const Rational& y0) const {
    Rational acc(0);
    for (const auto& [e, a] : terms_)
      acc += a * pow(x0, static_cast<unsigned long>(e.first)) * pow(y0, static_cast<unsigned long>(e.second));
    return acc;
  }

  BivariatePoly dx() const {
    BivariatePoly r;
    for (const auto& [e, a] : terms_)
      if (e.first > 0) r.add(e.first - 1, e.second, a * e.first);
    return r;
  }
  BivariatePoly dy() const {
    BivariatePoly r;
    for (const auto& [e, a] : terms_)
      if (e.second > 0) r.add(e.first, e.second - 1, a * e.second);
    return r;
  }

  /// Tangent cone f_m(x, y) read as the polynomial f_m(1, t); its degree is
  /// below m exactly when the vertical direction is tangent.
  UPoly tangent_cone_slopes() const {
    const int m = order();
    std::vector<Rational> c(static_cast<std::size_t>(m) + 1);
    for (const auto& [e, a] : terms_)
      if (e.first + e.second == m) c[static_cast<std::size_t>(e.second)] = a;
    return UPoly(std::move(c));
  }

  /// Specialization at x = x0 as a polynomial in y.
  UPoly at_x(const Rational& x0) const {
    std::vector<Rational> c(static_cast<std::size_t>(std::max(degree_in_y(), 0)) + 1);
    for (const auto& [e, a] : terms_) c[static_cast<std::size_t>(e.second)] += a * pow(x0, static_cast<unsigned long>(e.first));
    return UPoly(std::move(c));
  }

  /// Homogenize with the chart variable last: x -> X0, y -> X1, 1 -> X2.
  HomogeneousForm homogenize() const {
    const int d = total_degree();
    HomogeneousForm f(d);
    for (const auto& [e, a] : terms_) f.add({e.first, e.second, d - e.first - e.second}, a);
    return f;
  }

  friend BivariatePoly operator+(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly r = p;
    for (const auto& [e, a] : q.terms_) r.add(e.first, e.second, a);
    return r;
  }
  friend BivariatePoly operator-(const BivariatePoly& p) {
    BivariatePoly r = p;
    for (auto& [e, a] : r.terms_) a = -a;
    return r;
  }
  friend BivariatePoly operator-(const BivariatePoly& p, const BivariatePoly& q) { return p + (-q); }
  friend BivariatePoly operator*(const BivariatePoly& p, const BivariatePoly& q) {
    BivariatePoly r;
    for (const auto& [e, a] : p.terms_)
      for (const auto& [f, b] : q.terms_) r.add(e.first + f.first, e.second + f.second, a * b);
    return r;
  }
  friend BivariatePoly operator*(const BivariatePoly& p, const Rational& s) {
    BivariatePoly r;
    if (s == 0) return r;
    r.terms_ = p.terms_;
    for (auto& [e, a] : r.terms_) a *= s;
    return r;
  }
  friend bool operator==(const BivariatePoly& p, const BivariatePoly& q) { return p.terms_ == q.terms_; }

 private:
  Terms terms_;
};

/// One blow-up step at the origin, described by the chart that contains the
/// chosen point of the exceptional curve.
struct ChartStep {
  enum class Kind { Slope, Vertical };
  Kind kind = Kind::Slope;
  Rational slope;  // direction (1 : slope); unused for Vertical

  friend bool operator==(const ChartStep&, const ChartStep&) = default;
};

/// Pulls p back along the blow-up into the chart of the step, centres it at
/// the chosen point and divides out `exceptional_order` copies of the
/// exceptional curve. Slope: (x, y) -> (x, x (y + slope)) divided by x^k;
/// Vertical: (x, y) -> (x y, y) divided by y^k. The flag is false when the
/// division is not exact.
inline std::pair<BivariatePoly, bool> blow_up(const BivariatePoly& p, const ChartStep& step, int exceptional_order) {
  BivariatePoly out;
  if (step.kind == ChartStep::Kind::Slope) {
    // x^i (x (y + s))^j = x^(i+j) (y + s)^j
    std::vector<UPoly> shifted_powers{UPoly::constant(1)};
    for (const auto& [e, a] : p.terms()) {
      while (static_cast<int>(shifted_powers.size()) <= e.second)
        shifted_powers.push_back(shifted_powers.back() * UPoly{step.slope, 1});
      const int xpow = e.first + e.second - exceptional_order;
      const UPoly& ys = shifted_powers[static_cast<std::size_t>(e.second)];
      for (int k = 0; k <= ys.degree(); ++k) {
        if (ys.coeff(k) == 0) continue;
        if (xpow < 0) return {BivariatePoly{}, false};
        out.add(xpow, k, a * ys.coeff(k));
      }
    }
  } else {
    for (const auto& [e, a] : p.terms()) {
      const int ypow = e.first + e.second - exceptional_order;
      if (ypow < 0) return {BivariatePoly{}, false};
      out.add(e.first, ypow, a);
    }
  }
  return {out, true};
}

/// Affine chart around a rational point: X_chart = 1 and the two remaining
/// coordinates (in increasing index order) become x + P_u, y + P_v.
struct LocalChart {
  int chart = 2;
  int u = 0, v = 1;
  Vector3 base;  // point scaled so base[chart] == 1

  static LocalChart at(const ProjectivePoint& p) {
    LocalChart c;
    c.chart = p[2] != 0 ? 2 : (p[1] != 0 ? 1 : 0);
    int others[2], k = 0;
    for (int i = 0; i < 3; ++i)
      if (i != c.chart) others[k++] = i;
    c.u = others[0];
    c.v = others[1];
    const Rational s = 1 / p[c.chart];
    for (int i = 0; i < 3; ++i) c.base[static_cast<std::size_t>(i)] = p[i] * s;
    return c;
  }

  BivariatePoly localize(const HomogeneousForm& f) const {
    std::array<BivariatePoly, 3> coord;
    coord[static_cast<std::size_t>(chart)] = BivariatePoly::constant(1);
    coord[static_cast<std::size_t>(u)] = BivariatePoly::x() + BivariatePoly::constant(base[static_cast<std::size_t>(u)]);
    coord[static_cast<std::size_t>(v)] = BivariatePoly::y() + BivariatePoly::constant(base[static_cast<std::size_t>(v)]);
    std::array<std::vector<BivariatePoly>, 3> powers;
    for (int i = 0; i < 3; ++i) {
      powers[static_cast<std::size_t>(i)].push_back(BivariatePoly::constant(1));
      for (int k = 1; k <= f.degree(); ++k)
        powers[static_cast<std::size_t>(i)].push_back(powers[static_cast<std::size_t>(i)].back() *
                                                      coord[static_cast<std::size_t>(i)]);
    }
    BivariatePoly out;
    for (const auto& [e, a] : f.terms()) {
      const BivariatePoly t = powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                              powers[2][static_cast<std::size_t>(e[2])];
      out = out + t * a;
    }
    return out;
  }
};

inline BivariatePoly localize(const HomogeneousForm& f, const ProjectivePoint& p) { return LocalChart::at(p).localize(f); }

}  // namespace ratcurves
