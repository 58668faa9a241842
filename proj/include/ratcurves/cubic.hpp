// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <optional>
#include <vector>

#include "ratcurves/elimination.hpp"
#include "ratcurves/error.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/linalg.hpp"

namespace ratcurves {

inline void require_cubic(const HomogeneousForm& f) {
  require(f.degree() == 3 && !f.is_zero(), ErrorKind::Degree, "expected a nonzero cubic form");
}

inline bool is_smooth_cubic(const HomogeneousForm& f) {
  require_cubic(f);
  return cubic_discriminant(f) != 0;
}

/// Determinant of the matrix of second partials, of degree 3(d - 2).
inline HomogeneousForm hessian(const HomogeneousForm& f) {
  require(f.degree() >= 2, ErrorKind::Degree, "hessian needs degree >= 2");
  std::array<std::array<HomogeneousForm, 3>, 3> h;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) h[i][j] = f.partial(i).partial(j);
  return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
         h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

struct FlexData {
  int count_with_multiplicity = 0;
  int distinct = 0;            // distinct flexes over C, read off the eliminant
  bool eliminant_squarefree = false;
  std::vector<ProjectivePoint> rational_flexes;
};

inline FlexData flexes(const HomogeneousForm& f) {
  require_cubic(f);
  require(is_smooth_cubic(f), ErrorKind::Precondition, "flexes need a smooth cubic");
  const IntersectionSummary s = intersect(f, hessian(f));
  FlexData out;
  out.count_with_multiplicity = s.bezout;
  out.distinct = s.eliminant.distinct_root_count();
  out.eliminant_squarefree = out.distinct == s.bezout;
  for (const auto& [p, m] : s.rational_points) out.rational_flexes.push_back(p);
  return out;
}

/// y^2 = 4x^3 + alpha x + beta in the chart X0 = 1 of
/// X0 X2^2 = 4 X1^3 + alpha X0^2 X1 + beta X0^3; transform satisfies
/// f(transform * v) = scale * normal_form(v).
struct WeierstrassData {
  Rational alpha, beta;
  Matrix3 transform = Matrix3::identity();
  Rational scale = 1;

  Rational discriminant() const { return alpha * alpha * alpha + 27 * beta * beta; }
};

/// X0 X2^2 - 4 X1^3 - alpha X0^2 X1 - beta X0^3.
inline HomogeneousForm weierstrass_form(const Rational& alpha, const Rational& beta) {
  return make_form(3, {{{1, 0, 2}, 1}, {{0, 3, 0}, -4}, {{2, 1, 0}, -alpha}, {{3, 0, 0}, -beta}});
}

/// y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 with x = X0, y = X1, z = X2;
/// its flex at infinity is (0:1:0).
inline HomogeneousForm long_weierstrass_form(const Rational& a1, const Rational& a2, const Rational& a3,
                                             const Rational& a4, const Rational& a6) {
  return make_form(3, {{{0, 2, 1}, 1},
                       {{1, 1, 1}, a1},
                       {{0, 1, 2}, a3},
                       {{3, 0, 0}, -1},
                       {{2, 0, 1}, -a2},
                       {{1, 0, 2}, -a4},
                       {{0, 0, 3}, -a6}});
}

/// Tate normal form E(b, c): y^2 + (1 - c) xy - b y = x^3 - b x^2, with
/// (0, 0) a point of the group whose origin is the flex (0:1:0).
inline HomogeneousForm tate_normal_form(const Rational& b, const Rational& c) {
  return long_weierstrass_form(1 - c, -b, -b, 0, 0);
}

inline bool is_flex(const HomogeneousForm& f, const ProjectivePoint& p) {
  if (f(p) != 0) return false;
  const Vector3 g = f.gradient(p.coords());
  if (g[0] == 0 && g[1] == 0 && g[2] == 0) return false;
  return hessian(f)(p) == 0;
}

inline WeierstrassData weierstrass_at_flex(const HomogeneousForm& f, const ProjectivePoint& p) {
  require_cubic(f);
  require(is_smooth_cubic(f), ErrorKind::Precondition, "normalization needs a smooth cubic");
  require(is_flex(f, p), ErrorKind::Precondition, "point is not a flex of the cubic");
  const Vector3 grad = f.gradient(p.coords());
  // Columns: R off the tangent line, Q on it, then P.
  Vector3 r{}, q{};
  for (int i = 0; i < 3; ++i)
    if (grad[i] != 0) {
      r = {0, 0, 0};
      r[i] = 1;
      break;
    }
  for (int i = 0; i < 3; ++i) {
    Vector3 e{0, 0, 0};
    e[i] = 1;
    const Vector3 c{grad[1] * e[2] - grad[2] * e[1], grad[2] * e[0] - grad[0] * e[2], grad[0] * e[1] - grad[1] * e[0]};
    if (c[0] == 0 && c[1] == 0 && c[2] == 0) continue;
    if (Matrix3::from_columns(r, c, p.coords()).determinant() != 0) {
      q = c;
      break;
    }
  }
  Matrix3 t = Matrix3::from_columns(r, q, p.coords());
  HomogeneousForm h = f.substitute(t);
  // h = c u1^3 + u0 (a u2^2 + u2 (r1 u1 + r0 u0) + ...)
  const Rational c = h.coeff({0, 3, 0});
  const Rational a = h.coeff({1, 0, 2});
  require(c != 0 && a != 0, ErrorKind::Internal, "flex normalization lost smoothness");
  Matrix3 s1 = Matrix3::identity();
  s1.m[2][1] = -h.coeff({1, 1, 1}) / (2 * a);
  s1.m[2][0] = -h.coeff({2, 0, 1}) / (2 * a);
  t = t * s1;
  h = h.substitute(s1);
  Matrix3 s2 = Matrix3::identity();
  s2.m[1][0] = -h.coeff({1, 2, 0}) / (3 * c);
  t = t * s2;
  h = h.substitute(s2);
  const Rational lambda0 = -c / (4 * a);
  const Rational kappa = -c / 4;
  t = t * Matrix3::diagonal(lambda0, 1, 1);
  WeierstrassData w;
  w.alpha = -h.coeff({2, 1, 0}) * lambda0 * lambda0 / kappa;
  w.beta = -h.coeff({3, 0, 0}) * lambda0 * lambda0 * lambda0 / kappa;
  w.transform = t;
  w.scale = kappa;
  require(f.substitute(t) == weierstrass_form(w.alpha, w.beta) * kappa, ErrorKind::Internal,
          "flex normalization failed to reach the normal form");
  return w;
}

inline Rational j_invariant(const WeierstrassData& w) {
  const Rational disc = w.discriminant();
  require(disc != 0, ErrorKind::Precondition, "j-invariant of a singular curve");
  return 1728 * w.alpha * w.alpha * w.alpha / disc;
}

/// Point of y^2 = 4x^3 + alpha x + beta; the origin is the flex at infinity.
struct ECPoint {
  bool infinity = true;
  Rational x, y;

  static ECPoint origin() { return {}; }
  static ECPoint affine(Rational x0, Rational y0) { return {false, std::move(x0), std::move(y0)}; }
  friend bool operator==(const ECPoint& a, const ECPoint& b) {
    if (a.infinity || b.infinity) return a.infinity == b.infinity;
    return a.x == b.x && a.y == b.y;
  }
};

inline bool ec_on_curve(const WeierstrassData& w, const ECPoint& p) {
  return p.infinity || p.y * p.y == 4 * p.x * p.x * p.x + w.alpha * p.x + w.beta;
}

inline void require_on_curve(const WeierstrassData& w, const ECPoint& p) {
  require(ec_on_curve(w, p), ErrorKind::Precondition, "point is not on the curve");
}

inline ECPoint ec_neg(const WeierstrassData& w, const ECPoint& p) {
  require_on_curve(w, p);
  if (p.infinity) return p;
  return ECPoint::affine(p.x, -p.y);
}

inline ECPoint ec_add(const WeierstrassData& w, const ECPoint& p, const ECPoint& q) {
  require_on_curve(w, p);
  require_on_curve(w, q);
  if (p.infinity) return q;
  if (q.infinity) return p;
  Rational lambda;
  if (p.x == q.x) {
    if (p.y != q.y || p.y == 0) return ECPoint::origin();
    lambda = (12 * p.x * p.x + w.alpha) / (2 * p.y);
  } else {
    lambda = (q.y - p.y) / (q.x - p.x);
  }
  const Rational x3 = lambda * lambda / 4 - p.x - q.x;
  const Rational y3 = -(lambda * (x3 - p.x) + p.y);
  return ECPoint::affine(x3, y3);
}

inline ECPoint ec_scalar_mul(const WeierstrassData& w, long n, const ECPoint& p) {
  require_on_curve(w, p);
  ECPoint base = n < 0 ? ec_neg(w, p) : p;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-(n + 1)) + 1 : static_cast<unsigned long>(n);
  ECPoint acc = ECPoint::origin();
  while (k) {
    if (k & 1) acc = ec_add(w, acc, base);
    base = ec_add(w, base, base);
    k >>= 1;
  }
  return acc;
}

/// Smallest n >= 1 with [n]P = O, or nullopt when it exceeds the bound.
inline std::optional<int> point_order(const WeierstrassData& w, const ECPoint& p, int bound) {
  require_on_curve(w, p);
  require(bound >= 1, ErrorKind::Domain, "order bound must be positive");
  ECPoint acc = p;
  for (int n = 1; n <= bound; ++n) {
    if (acc.infinity) return n;
    acc = ec_add(w, acc, p);
  }
  return std::nullopt;
}

/// Image of a point of the original cubic in the normal form.
inline ECPoint to_ec_point(const WeierstrassData& w, const ProjectivePoint& p) {
  const Vector3 v = w.transform.inverse() * p.coords();
  if (v[0] == 0) return ECPoint::origin();
  return ECPoint::affine(v[1] / v[0], v[2] / v[0]);
}

inline ProjectivePoint from_ec_point(const WeierstrassData& w, const ECPoint& p) {
  const Vector3 v = p.infinity ? Vector3{0, 0, 1} : Vector3{1, p.x, p.y};
  return ProjectivePoint(w.transform * v);
}

}  // namespace ratcurves
