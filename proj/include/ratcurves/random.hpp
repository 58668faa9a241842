// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <random>
#include <vector>

#include "ratcurves/form.hpp"
#include "ratcurves/linalg.hpp"
#include "ratcurves/univariate.hpp"

// Seeded generators for the randomized property checks.
namespace ratcurves::random {

using Rng = std::mt19937_64;

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

/// n/d with |n| <= range and 1 <= d <= max_den.
inline Rational rational(Rng& rng, long range = 9, long max_den = 3) {
  Rational r(uniform(rng, -range, range), uniform(rng, 1, max_den));
  r.canonicalize();
  return r;
}

inline UPoly poly(Rng& rng, int degree, long range = 9) {
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(rational(rng, range));
  while (c.back() == 0) c.back() = rational(rng, range);
  return UPoly(std::move(c));
}

inline HomogeneousForm form(Rng& rng, int degree, long range = 9) {
  HomogeneousForm f(degree);
  do {
    for (const auto& e : HomogeneousForm::monomials(degree)) f.add(e, Rational(uniform(rng, -range, range)));
  } while (f.is_zero());
  return f;
}

inline Matrix3 invertible_matrix(Rng& rng, long range = 5) {
  for (;;) {
    Matrix3 m;
    for (auto& row : m.m)
      for (auto& x : row) x = rational(rng, range, 2);
    if (m.determinant() != 0) return m;
  }
}

inline ProjectivePoint point(Rng& rng, long range = 4) {
  for (;;) {
    const Vector3 v{Rational(uniform(rng, -range, range)), Rational(uniform(rng, -range, range)), Rational(uniform(rng, -range, range))};
    if (v[0] != 0 || v[1] != 0 || v[2] != 0) return ProjectivePoint(v);
  }
}

/// Random form vanishing at the given points (a random combination of the
/// kernel of the evaluation conditions).
inline HomogeneousForm form_through(Rng& rng, int degree, const std::vector<ProjectivePoint>& pts, long range = 5) {
  const auto monos = HomogeneousForm::monomials(degree);
  Matrix m(pts.size(), monos.size());
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = 0; j < monos.size(); ++j) m(i, j) = HomogeneousForm::monomial(monos[j], 1)(pts[i]);
  const auto ker = m.kernel();
  for (;;) {
    HomogeneousForm f(degree);
    for (const auto& v : ker) {
      const Rational c(uniform(rng, -range, range));
      for (std::size_t j = 0; j < monos.size(); ++j) f.add(monos[j], c * v[j]);
    }
    if (!f.is_zero()) return f;
  }
}

}  // namespace ratcurves::random
