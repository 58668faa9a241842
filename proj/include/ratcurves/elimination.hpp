// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "ratcurves/error.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/linalg.hpp"
#include "ratcurves/univariate.hpp"

namespace ratcurves {

/// Deterministic pseudo-random invertible integer matrix used to put curves
/// in general position. Attempt 0 is a fixed well-conditioned choice; later
/// attempts draw entries from [-4, 4].
inline Matrix3 generic_frame(unsigned attempt) {
  if (attempt == 0) {
    Matrix3 m;
    const int rows[3][3] = {{1, 2, 3}, {-1, 1, 5}, {2, -3, 1}};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.m[i][j] = rows[i][j];
    return m;
  }
  std::mt19937 rng(0x5eed0000u + attempt);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (;;) {
    Matrix3 m;
    for (auto& row : m.m)
      for (auto& x : row) x = dist(rng);
    if (m.determinant() != 0) return m;
  }
}

inline int root_multiplicity(const UPoly& p, const Rational& r) {
  if (p.is_zero()) return -1;
  int mult = 0;
  UPoly q = p;
  const UPoly lin{-r, 1};
  for (;;) {
    auto [quo, rem] = divmod(q, lin);
    if (!rem.is_zero()) return mult;
    ++mult;
    q = std::move(quo);
  }
}

/// Multiplicity of the projective root (a : b) of a binary form.
inline int root_multiplicity(const BinaryForm& f, const Rational& a, const Rational& b) {
  if (b == 0) return f.multiplicity_at_infinity();
  return root_multiplicity(f.affine, a / b);
}

/// Restriction of f to the line through (a, 0, b) in direction (0, 1, 0),
/// i.e. f(a, y, b) as a polynomial in y.
inline UPoly restrict_to_projection_line(const HomogeneousForm& f, const Rational& a, const Rational& b) {
  return f.restrict_to_line({a, 0, b}, {0, 1, 0});
}

/// Res_{X1}(A, B) as a binary form in (X0, X2) of degree deg A * deg B.
/// A must not vanish at the projection centre (0:1:0), so its X1-degree is
/// its total degree with constant leading coefficient.
inline BinaryForm eliminate_middle(const HomogeneousForm& a, const HomogeneousForm& b) {
  require(a.coeff({0, a.degree(), 0}) != 0, ErrorKind::Precondition, "projection centre lies on the first curve");
  const int na = a.degree(), nb = b.degree();
  const int n = na * nb;
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= n; ++i) {
    const Rational t(i);
    const UPoly pa = restrict_to_projection_line(a, t, 1);
    const UPoly pb = restrict_to_projection_line(b, t, 1);
    xs.push_back(t);
    ys.push_back(na == 0 ? pow(pa.lc(), static_cast<unsigned long>(nb)) : resultant_formal(pa, pb, nb));
  }
  return BinaryForm{interpolate(xs, ys), n};
}

/// The rational roots (a : b) of a binary form, with multiplicities;
/// infinity is reported as (1 : 0).
inline std::vector<std::pair<std::pair<Rational, Rational>, int>> binary_rational_roots(const BinaryForm& f) {
  std::vector<std::pair<std::pair<Rational, Rational>, int>> out;
  if (!f.affine.is_zero())
    for (const auto& [r, m] : rational_roots(f.affine)) out.push_back({{r, Rational(1)}, m});
  if (f.multiplicity_at_infinity() > 0) out.push_back({{Rational(1), Rational(0)}, f.multiplicity_at_infinity()});
  return out;
}

inline BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
  const int inf = std::min(f.multiplicity_at_infinity(), g.multiplicity_at_infinity());
  UPoly h = gcd(f.affine, g.affine);
  return BinaryForm{h, h.degree() + inf};
}

/// Distinct rational roots of a nonzero polynomial.
inline std::vector<Rational> distinct_rational_roots(const UPoly& p) {
  std::vector<Rational> out;
  for (const auto& [r, m] : rational_roots(p)) out.push_back(r);
  return out;
}

/// True iff f has no repeated factor. In a generic frame the form is monic
/// in X1 up to a constant, so a repeated factor is exactly a common factor
/// with its X1-derivative.
inline bool is_squarefree_form(const HomogeneousForm& f) {
  require(!f.is_zero(), ErrorKind::Domain, "zero form");
  if (f.degree() <= 1) return true;
  for (unsigned attempt = 0;; ++attempt) {
    const Matrix3 m = generic_frame(attempt);
    const HomogeneousForm g = f.substitute(m);
    if (g.coeff({0, g.degree(), 0}) == 0) continue;
    return !eliminate_middle(g, g.partial(1)).is_zero();
  }
}

/// Rational singular points of a reduced curve. Throws UnsupportedField when
/// the curve has singular points that are not defined over Q.
inline std::vector<ProjectivePoint> singular_points(const HomogeneousForm& f) {
  require(!f.is_zero(), ErrorKind::Domain, "zero form");
  if (f.degree() <= 1) return {};
  require(is_squarefree_form(f), ErrorKind::NonReduced, "curve has a repeated component");
  constexpr unsigned kAttempts = 6;
  bool irrational_suspected = false;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    const Matrix3 m = generic_frame(attempt);
    const HomogeneousForm g = f.substitute(m);
    if (g.coeff({0, g.degree(), 0}) == 0) continue;
    const HomogeneousForm gx = g.partial(0), gy = g.partial(1), gz = g.partial(2);
    const BinaryForm r1 = eliminate_middle(gy, gx);
    const BinaryForm r2 = eliminate_middle(gy, gz);
    if (r1.is_zero() || r2.is_zero()) continue;
    const BinaryForm common = binary_gcd(r1, r2);
    const int distinct = common.distinct_root_count();
    std::vector<ProjectivePoint> found;
    bool ambiguous = false;
    for (const auto& [root, mult] : binary_rational_roots(common)) {
      const auto& [a, b] = root;
      UPoly h = gcd(gcd(restrict_to_projection_line(gx, a, b), restrict_to_projection_line(gy, a, b)),
                    restrict_to_projection_line(gz, a, b));
      if (h.is_zero()) {
        ambiguous = true;
        break;
      }
      const auto ys = distinct_rational_roots(h);
      if (ys.size() != 1 || squarefree_part(h).degree() != 1) {
        ambiguous = true;
        break;
      }
      found.emplace_back(m * Vector3{a, ys[0], b});
    }
    if (ambiguous) continue;
    if (static_cast<int>(found.size()) == distinct) {
      std::sort(found.begin(), found.end());
      return found;
    }
    irrational_suspected = true;
  }
  if (irrational_suspected) fail(ErrorKind::UnsupportedField, "curve has singular points with irrational coordinates");
  fail(ErrorKind::Internal, "could not separate singular points by projection");
}

struct IntersectionSummary {
  std::vector<std::pair<ProjectivePoint, int>> rational_points;  // with eliminant multiplicity
  int irrational_degree = 0;  // eliminant degree carried by non-rational points
  int bezout = 0;
  BinaryForm eliminant;  // in the frame that separated the rational points
};

/// Intersection of two curves without common component: rational points via
/// a generic projection, the rest accounted by eliminant degree.
inline IntersectionSummary intersect(const HomogeneousForm& f, const HomogeneousForm& g) {
  require(!f.is_zero() && !g.is_zero(), ErrorKind::Domain, "zero form");
  constexpr unsigned kAttempts = 8;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    const Matrix3 m = generic_frame(attempt);
    const HomogeneousForm fa = f.substitute(m), ga = g.substitute(m);
    if (fa.coeff({0, fa.degree(), 0}) == 0 || ga.coeff({0, ga.degree(), 0}) == 0) continue;
    const BinaryForm r = eliminate_middle(fa, ga);
    if (r.is_zero()) fail(ErrorKind::CommonComponent, "curves share a component");
    IntersectionSummary out;
    out.bezout = f.degree() * g.degree();
    int rational_mass = 0;
    bool ambiguous = false;
    for (const auto& [root, mult] : binary_rational_roots(r)) {
      const auto& [a, b] = root;
      const UPoly h = gcd(restrict_to_projection_line(fa, a, b), restrict_to_projection_line(ga, a, b));
      if (squarefree_part(h).degree() != 1) {
        ambiguous = true;
        break;
      }
      const auto ys = distinct_rational_roots(h);
      out.rational_points.emplace_back(ProjectivePoint(m * Vector3{a, ys.at(0), b}), mult);
      rational_mass += mult;
    }
    if (ambiguous) continue;
    std::sort(out.rational_points.begin(), out.rational_points.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    out.irrational_degree = out.bezout - rational_mass;
    out.eliminant = r;
    return out;
  }
  fail(ErrorKind::Internal, "could not separate intersection points by projection");
}

/// Intersection multiplicity at p by resultant elimination: in a frame where
/// the line from the projection centre through p meets f and g only at p,
/// the multiplicity is the order of the eliminant's root under p.
inline int local_intersection_by_resultant(const HomogeneousForm& f, const HomogeneousForm& g,
                                           const ProjectivePoint& p, unsigned frame_offset = 100) {
  if (f(p) != 0 || g(p) != 0) return 0;
  constexpr unsigned kAttempts = 12;
  for (unsigned attempt = 0; attempt < kAttempts; ++attempt) {
    const Matrix3 m = generic_frame(frame_offset + attempt);
    const Vector3 u = m.inverse() * p.coords();
    if (u[0] == 0 && u[2] == 0) continue;
    const HomogeneousForm fa = f.substitute(m), ga = g.substitute(m);
    if (fa.coeff({0, fa.degree(), 0}) == 0 || ga.coeff({0, ga.degree(), 0}) == 0) continue;
    const Rational a = u[2] != 0 ? u[0] / u[2] : Rational(1);
    const Rational b = u[2] != 0 ? Rational(1) : Rational(0);
    const UPoly h = gcd(restrict_to_projection_line(fa, a, b), restrict_to_projection_line(ga, a, b));
    if (squarefree_part(h).degree() != 1) continue;
    const BinaryForm r = eliminate_middle(fa, ga);
    if (r.is_zero()) fail(ErrorKind::CommonComponent, "curves share a component");
    return root_multiplicity(r, a, b);
  }
  fail(ErrorKind::Internal, "could not isolate the point by projection");
}

/// Resultant of the three partials of a ternary cubic (Sylvester's 6x6
/// formula for three quadrics). Vanishes iff the cubic is singular.
inline Rational cubic_discriminant(const HomogeneousForm& f) {
  require(f.degree() == 3, ErrorKind::Degree, "cubic discriminant needs a degree-3 form");
  const std::array<HomogeneousForm, 3> q{f.partial(0), f.partial(1), f.partial(2)};
  // Jacobian determinant of the quadrics: entries are linear forms.
  std::array<std::array<HomogeneousForm, 3>, 3> jm;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) jm[i][j] = q[static_cast<std::size_t>(i)].partial(j);
  auto entry = [&](int i, int j) -> const HomogeneousForm& { return jm[i][j]; };
  const HomogeneousForm jac = entry(0, 0) * (entry(1, 1) * entry(2, 2) - entry(1, 2) * entry(2, 1)) -
                              entry(0, 1) * (entry(1, 0) * entry(2, 2) - entry(1, 2) * entry(2, 0)) +
                              entry(0, 2) * (entry(1, 0) * entry(2, 1) - entry(1, 1) * entry(2, 0));
  const std::array<HomogeneousForm, 6> rows{q[0], q[1], q[2], jac.partial(0), jac.partial(1), jac.partial(2)};
  const auto basis = HomogeneousForm::monomials(2);
  Matrix mat(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) mat(r, c) = rows[r].coeff(basis[c]);
  return mat.determinant();
}

}  // namespace ratcurves
