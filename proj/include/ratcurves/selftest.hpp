// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ratcurves/cubic.hpp"
#include "ratcurves/elimination.hpp"
#include "ratcurves/random.hpp"
#include "ratcurves/singular.hpp"

namespace ratcurves {

struct PropertyResult {
  std::string name;
  int cases = 0;
  bool passed = true;
};

inline PropertyResult check_resultant_symmetry(random::Rng& rng, int cases) {
  PropertyResult r{"resultant-symmetry", cases};
  for (int i = 0; i < cases && r.passed; ++i) {
    const UPoly f = random::poly(rng, static_cast<int>(random::uniform(rng, 0, 6)));
    const UPoly g = random::poly(rng, static_cast<int>(random::uniform(rng, 0, 6)));
    const int sign = (f.degree() * g.degree()) % 2 ? -1 : 1;
    r.passed = resultant(f, g) == sign * resultant(g, f);
  }
  return r;
}

inline PropertyResult check_discriminant_squarefree(random::Rng& rng, int cases) {
  PropertyResult r{"discriminant-squarefree", cases};
  for (int i = 0; i < cases && r.passed; ++i) {
    UPoly f = random::poly(rng, static_cast<int>(random::uniform(rng, 1, 4)), 4);
    if (random::uniform(rng, 0, 1)) {
      const UPoly lin{random::rational(rng, 4), 1};
      f = f * lin * lin;
    }
    r.passed = (discriminant(f) == 0) == !(squarefree_part(f) == f.monic());
  }
  return r;
}

inline PropertyResult check_substitution_action(random::Rng& rng, int cases) {
  PropertyResult r{"substitution-action", cases};
  for (int i = 0; i < cases && r.passed; ++i) {
    const HomogeneousForm f = random::form(rng, static_cast<int>(random::uniform(rng, 1, 4)));
    const Matrix3 m = random::invertible_matrix(rng), n = random::invertible_matrix(rng);
    r.passed = f.substitute(Matrix3::identity()) == f && f.substitute(m * n) == f.substitute(m).substitute(n);
  }
  return r;
}

inline PropertyResult check_euler_relation(random::Rng& rng, int cases) {
  PropertyResult r{"euler-relation", cases};
  for (int i = 0; i < cases && r.passed; ++i) {
    const HomogeneousForm f = random::form(rng, static_cast<int>(random::uniform(rng, 1, 5)));
    HomogeneousForm s(f.degree());
    for (int v = 0; v < 3; ++v) s = s + HomogeneousForm::variable(v) * f.partial(v);
    r.passed = s == f * Rational(f.degree());
  }
  return r;
}

/// Sum of local intersection numbers over rational points plus the degree
/// carried by irrational points equals d1 d2. Pairs share random rational
/// points so that the local numbers are exercised.
inline PropertyResult check_bezout(random::Rng& rng, int cases) {
  PropertyResult r{"bezout", cases};
  int done = 0;
  while (done < cases && r.passed) {
    std::vector<ProjectivePoint> pts;
    const int npts = static_cast<int>(random::uniform(rng, 1, 3));
    for (int i = 0; i < npts; ++i) pts.push_back(random::point(rng));
    const int d1 = static_cast<int>(random::uniform(rng, 1, 4)), d2 = static_cast<int>(random::uniform(rng, 1, 4));
    if (static_cast<int>(pts.size()) >= std::min((d1 + 1) * (d1 + 2) / 2, (d2 + 1) * (d2 + 2) / 2)) continue;
    const HomogeneousForm f = random::form_through(rng, d1, pts), g = random::form_through(rng, d2, pts);
    try {
      const IntersectionSummary s = intersect(f, g);
      int total = s.irrational_degree;
      for (const auto& [p, m] : s.rational_points) total += local_intersection(f, g, p);
      r.passed = total == d1 * d2;
      ++done;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::CommonComponent) throw;
    }
  }
  return r;
}

inline PropertyResult check_group_associativity(random::Rng& rng, int cases) {
  PropertyResult r{"group-associativity", cases};
  // y^2 = 4x^3 - 4x + 1 with the point (0, 1) of infinite order.
  const WeierstrassData w{-4, 1};
  const ECPoint g = ECPoint::affine(0, 1);
  for (int i = 0; i < cases && r.passed; ++i) {
    const ECPoint a = ec_scalar_mul(w, random::uniform(rng, -6, 6), g);
    const ECPoint b = ec_scalar_mul(w, random::uniform(rng, -6, 6), g);
    const ECPoint c = ec_scalar_mul(w, random::uniform(rng, -6, 6), g);
    r.passed = ec_add(w, ec_add(w, a, b), c) == ec_add(w, a, ec_add(w, b, c)) && ec_add(w, a, b) == ec_add(w, b, a);
  }
  return r;
}

inline PropertyResult check_j_invariance(random::Rng& rng, int cases) {
  PropertyResult r{"j-invariance", cases};
  const HomogeneousForm base = make_form(3, {{{1, 0, 2}, 1}, {{0, 3, 0}, -4}, {{2, 1, 0}, 4}, {{3, 0, 0}, -1}});
  const ProjectivePoint flex(0, 0, 1);
  const Rational j0 = j_invariant(weierstrass_at_flex(base, flex));
  for (int i = 0; i < cases && r.passed; ++i) {
    const Matrix3 m = random::invertible_matrix(rng);
    const HomogeneousForm moved = base.substitute(m);
    r.passed = j_invariant(weierstrass_at_flex(moved, ProjectivePoint(m.inverse() * flex.coords()))) == j0;
  }
  return r;
}

inline std::vector<PropertyResult> run_selftest(unsigned long seed) {
  random::Rng rng(seed);
  return {check_resultant_symmetry(rng, 50), check_discriminant_squarefree(rng, 50), check_substitution_action(rng, 10),
          check_euler_relation(rng, 20),     check_bezout(rng, 20),                  check_group_associativity(rng, 10),
          check_j_invariance(rng, 5)};
}

}  // namespace ratcurves
