// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "ratcurves/error.hpp"
#include "ratcurves/linalg.hpp"
#include "ratcurves/rational.hpp"
#include "ratcurves/univariate.hpp"

namespace ratcurves {

using Exponent = std::array<int, 3>;

/// Canonical monomial order: descending lexicographic on (a, b); c is implied
/// by the degree.
struct MonomialOrder {
  bool operator()(const Exponent& x, const Exponent& y) const {
    if (x[0] != y[0]) return x[0] > y[0];
    if (x[1] != y[1]) return x[1] > y[1];
    return x[2] > y[2];
  }
};

/// A point of P^2 over Q, normalized so its first nonzero coordinate is 1.
class ProjectivePoint {
 public:
  ProjectivePoint(Rational x0, Rational x1, Rational x2) : c_{std::move(x0), std::move(x1), std::move(x2)} {
    normalize();
  }
  explicit ProjectivePoint(const Vector3& v) : c_(v) { normalize(); }

  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  const Vector3& coords() const { return c_; }

  friend bool operator==(const ProjectivePoint& a, const ProjectivePoint& b) { return a.c_ == b.c_; }
  friend bool operator<(const ProjectivePoint& a, const ProjectivePoint& b) {
    for (int i = 0; i < 3; ++i)
      if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    return false;
  }

  std::string to_string() const {
    return "(" + c_[0].get_str() + ":" + c_[1].get_str() + ":" + c_[2].get_str() + ")";
  }

 private:
  void normalize() {
    for (int i = 0; i < 3; ++i) {
      if (c_[i] == 0) continue;
      const Rational inv = 1 / c_[i];
      for (auto& x : c_) x *= inv;
      return;
    }
    fail(ErrorKind::Domain, "projective point with all coordinates zero");
  }
  Vector3 c_;
};

/// Ternary form of fixed degree over Q, sparse and canonical: no stored
/// zero coefficients, every exponent triple sums to the degree.
class HomogeneousForm {
 public:
  using Terms = std::map<Exponent, Rational, MonomialOrder>;

  explicit HomogeneousForm(int degree = 0) : degree_(degree) {
    require(degree >= 0, ErrorKind::Degree, "negative form degree");
  }

  static HomogeneousForm variable(int i) {
    HomogeneousForm f(1);
    Exponent e{0, 0, 0};
    e[static_cast<std::size_t>(i)] = 1;
    f.add(e, 1);
    return f;
  }
  static HomogeneousForm constant(const Rational& a) {
    HomogeneousForm f(0);
    f.add({0, 0, 0}, a);
    return f;
  }
  static HomogeneousForm monomial(const Exponent& e, const Rational& a) {
    HomogeneousForm f(e[0] + e[1] + e[2]);
    f.add(e, a);
    return f;
  }
  /// Linear form a0*X0 + a1*X1 + a2*X2.
  static HomogeneousForm linear(const Vector3& a) {
    HomogeneousForm f(1);
    f.add({1, 0, 0}, a[0]);
    f.add({0, 1, 0}, a[1]);
    f.add({0, 0, 1}, a[2]);
    return f;
  }
  /// All exponent triples of the given degree in canonical order.
  static std::vector<Exponent> monomials(int degree) {
    std::vector<Exponent> out;
    for (int a = degree; a >= 0; --a)
      for (int b = degree - a; b >= 0; --b) out.push_back({a, b, degree - a - b});
    return out;
  }

  int degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coeff(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add(const Exponent& e, const Rational& a) {
    require(e[0] >= 0 && e[1] >= 0 && e[2] >= 0 && e[0] + e[1] + e[2] == degree_, ErrorKind::Degree,
            "exponent does not match the form degree");
    if (a == 0) return;
    auto [it, inserted] = terms_.emplace(e, a);
    if (!inserted) {
      it->second += a;
      if (it->second == 0) terms_.erase(it);
    }
  }

  Rational operator()(const Vector3& p) const {
    Rational acc(0);
    for (const auto& [e, a] : terms_) acc += a * ratcurves::pow(p[0], static_cast<unsigned long>(e[0])) * ratcurves::pow(p[1], static_cast<unsigned long>(e[1])) *
             ratcurves::pow(p[2], static_cast<unsigned long>(e[2]));
    return acc;
  }
  Rational operator()(const ProjectivePoint& p) const { return (*this)(p.coords()); }

  HomogeneousForm partial(int var) const {
    require(var >= 0 && var < 3, ErrorKind::Domain, "variable index out of range");
    HomogeneousForm d(degree_ == 0 ? 0 : degree_ - 1);
    for (const auto& [e, a] : terms_) {
      if (e[static_cast<std::size_t>(var)] == 0) continue;
      Exponent f = e;
      f[static_cast<std::size_t>(var)] -= 1;
      d.add(f, a * e[static_cast<std::size_t>(var)]);
    }
    return d;
  }

  Vector3 gradient(const Vector3& p) const { return {partial(0)(p), partial(1)(p), partial(2)(p)}; }

  /// f(M x): each X_i is replaced by row i of M applied to the variables.
  HomogeneousForm substitute(const Matrix3& m) const {
    require(m.determinant() != 0, ErrorKind::SingularMatrix, "projective substitution needs an invertible matrix");
    return substitute_linear(m);
  }

  /// Same as substitute() without the invertibility requirement.
  HomogeneousForm substitute_linear(const Matrix3& m) const {
    std::array<HomogeneousForm, 3> rows{HomogeneousForm(1), HomogeneousForm(1), HomogeneousForm(1)};
    for (int i = 0; i < 3; ++i) rows[static_cast<std::size_t>(i)] = linear(m.m[static_cast<std::size_t>(i)]);
    std::array<std::vector<HomogeneousForm>, 3> powers;
    for (int i = 0; i < 3; ++i) {
      powers[static_cast<std::size_t>(i)].push_back(constant(1));
      for (int k = 1; k <= degree_; ++k)
        powers[static_cast<std::size_t>(i)].push_back(powers[static_cast<std::size_t>(i)].back() *
                                                      rows[static_cast<std::size_t>(i)]);
    }
    HomogeneousForm out(degree_);
    for (const auto& [e, a] : terms_) {
      const HomogeneousForm t = powers[0][static_cast<std::size_t>(e[0])] * powers[1][static_cast<std::size_t>(e[1])] *
                                powers[2][static_cast<std::size_t>(e[2])];
      for (const auto& [f, b] : t.terms_) out.add(f, a * b);
    }
    return out;
  }

  friend HomogeneousForm operator+(const HomogeneousForm& x, const HomogeneousForm& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    require(x.degree_ == y.degree_, ErrorKind::Degree, "adding forms of different degrees");
    HomogeneousForm r = x;
    for (const auto& [e, a] : y.terms_) r.add(e, a);
    return r;
  }
  friend HomogeneousForm operator-(const HomogeneousForm& x) {
    HomogeneousForm r = x;
    for (auto& [e, a] : r.terms_) a = -a;
    return r;
  }
  friend HomogeneousForm operator-(const HomogeneousForm& x, const HomogeneousForm& y) { return x + (-y); }
  friend HomogeneousForm operator*(const HomogeneousForm& x, const HomogeneousForm& y) {
    HomogeneousForm r(x.degree_ + y.degree_);
    for (const auto& [e, a] : x.terms_)
      for (const auto& [f, b] : y.terms_) r.add({e[0] + f[0], e[1] + f[1], e[2] + f[2]}, a * b);
    return r;
  }
  friend HomogeneousForm operator*(const HomogeneousForm& x, const Rational& s) {
    HomogeneousForm r(x.degree_);
    if (s == 0) return r;
    r.terms_ = x.terms_;
    for (auto& [e, a] : r.terms_) a *= s;
    return r;
  }
  friend HomogeneousForm operator*(const Rational& s, const HomogeneousForm& x) { return x * s; }
  friend bool operator==(const HomogeneousForm& x, const HomogeneousForm& y) {
    if (x.is_zero() && y.is_zero()) return true;
    return x.degree_ == y.degree_ && x.terms_ == y.terms_;
  }

  HomogeneousForm pow(int n) const {
    HomogeneousForm r = constant(1);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
  }

  /// Leading coefficient scaled to 1 (first term in canonical order).
  HomogeneousForm normalized() const {
    if (is_zero()) return *this;
    return *this * (1 / terms_.begin()->second);
  }

  /// True when this is a nonzero rational multiple of other.
  bool proportional_to(const HomogeneousForm& other) const {
    if (is_zero() || other.is_zero()) return false;
    return normalized() == other.normalized();
  }

  /// Restriction to the line p + t q, as a polynomial in t of degree <= deg f.
  UPoly restrict_to_line(const Vector3& p, const Vector3& q) const {
    std::array<UPoly, 3> lin;
    for (int i = 0; i < 3; ++i) lin[static_cast<std::size_t>(i)] = UPoly{p[i], q[i]};
    UPoly out;
    for (const auto& [e, a] : terms_) {
      UPoly t = UPoly::constant(a);
      for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[static_cast<std::size_t>(i)]; ++k) t = t * lin[static_cast<std::size_t>(i)];
      out = out + t;
    }
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    static const char* names[] = {"X0", "X1", "X2"};
    for (const auto& [e, a] : terms_) {
      if (!out.empty()) out += a < 0 ? " - " : " + ";
      else if (a < 0) out += "-";
      const Rational mag = abs(a);
      const bool bare = e[0] + e[1] + e[2] == 0;
      if (mag != 1 || bare) out += mag.get_str();
      bool first = mag == 1;
      for (int i = 0; i < 3; ++i) {
        if (e[static_cast<std::size_t>(i)] == 0) continue;
        if (!first) out += "*";
        first = false;
        out += names[i];
        if (e[static_cast<std::size_t>(i)] > 1) out += "^" + std::to_string(e[static_cast<std::size_t>(i)]);
      }
    }
    return out;
  }

 private:
  int degree_;
  Terms terms_;
};

/// Convenience builder: form from {exponent, coefficient} pairs.
inline HomogeneousForm make_form(int degree, std::initializer_list<std::pair<Exponent, Rational>> terms) {
  HomogeneousForm f(degree);
  for (const auto& [e, a] : terms) f.add(e, a);
  return f;
}

inline bool on_curve(const HomogeneousForm& f, const ProjectivePoint& p) { return f(p) == 0; }

}  // namespace ratcurves
