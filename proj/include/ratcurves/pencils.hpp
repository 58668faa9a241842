// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ratcurves/bivariate.hpp"
#include "ratcurves/cubic.hpp"
#include "ratcurves/elimination.hpp"
#include "ratcurves/singular.hpp"
#include "ratcurves/torsion.hpp"

namespace ratcurves {

using Series = std::vector<Rational>;  // truncated power series, low to high

namespace detail {

inline Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

/// p(x(t), y(t)) mod t^n.
inline Series compose(const BivariatePoly& p, const Series& xs, const Series& ys, std::size_t n) {
  std::vector<Series> xp{Series{1}}, yp{Series{1}};
  Series out(n);
  for (const auto& [e, a] : p.terms()) {
    while (static_cast<int>(xp.size()) <= e.first) xp.push_back(series_mul(xp.back(), xs, n));
    while (static_cast<int>(yp.size()) <= e.second) yp.push_back(series_mul(yp.back(), ys, n));
    const Series t = series_mul(xp[static_cast<std::size_t>(e.first)], yp[static_cast<std::size_t>(e.second)], n);
    for (std::size_t i = 0; i < n; ++i) out[i] += a * t[i];
  }
  return out;
}

}  // namespace detail

/// Parametrization (x(t), y(t)) mod t^n of the smooth branch of c at the
/// origin of its local chart.
inline std::pair<Series, Series> smooth_branch(const BivariatePoly& c, std::size_t n) {
  require(c.coeff(0, 0) == 0, ErrorKind::Precondition, "point is not on the curve");
  const Rational cx = c.coeff(1, 0), cy = c.coeff(0, 1);
  require(cx != 0 || cy != 0, ErrorKind::Precondition, "point is singular on the curve");
  Series param(n), solved(n);
  if (n > 1) param[1] = 1;
  const bool solve_y = cy != 0;
  const Rational lin = solve_y ? cy : cx;
  for (std::size_t k = 1; k < n; ++k) {
    const Series v = solve_y ? detail::compose(c, param, solved, k + 1) : detail::compose(c, solved, param, k + 1);
    solved[k] = -v[k] / lin;
  }
  return solve_y ? std::pair{param, solved} : std::pair{solved, param};
}

/// Degree-k forms meeting C at P with multiplicity >= 3k.
struct ContactSystem {
  int k = 0;
  ProjectivePoint point;
  std::vector<HomogeneousForm> basis;

  int dimension() const { return static_cast<int>(basis.size()); }
  /// Dimension of the multiples of C by forms of degree k - 3.
  int cubic_multiple_dimension() const { return k >= 3 ? (k - 1) * (k - 2) / 2 : 0; }
  bool has_contact_divisor() const { return dimension() > cubic_multiple_dimension(); }
};

inline ContactSystem contact_system(const HomogeneousForm& c, const ProjectivePoint& p, int k) {
  require(k >= 1, ErrorKind::Domain, "contact degree must be positive");
  require(c(p) == 0, ErrorKind::Precondition, "point is not on the curve");
  const LocalChart chart = LocalChart::at(p);
  const std::size_t order = static_cast<std::size_t>(3 * k);
  const auto [xs, ys] = smooth_branch(chart.localize(c), order);
  const auto monos = HomogeneousForm::monomials(k);
  Matrix m(order, monos.size());
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const Series s = detail::compose(chart.localize(HomogeneousForm::monomial(monos[j], 1)), xs, ys, order);
    for (std::size_t i = 0; i < order; ++i) m(i, j) = s[i];
  }
  ContactSystem out{k, p, {}};
  for (const auto& v : m.kernel()) {
    HomogeneousForm g(k);
    for (std::size_t j = 0; j < monos.size(); ++j) g.add(monos[j], v[j]);
    out.basis.push_back(g);
  }
  return out;
}

/// Members s1 * first + s2 * second.
struct Pencil {
  HomogeneousForm first, second;

  HomogeneousForm member(const Rational& s1, const Rational& s2) const { return first * s1 + second * s2; }
};

/// Pencil spanned by C and a contact divisor of the degree-3 system at P.
inline Pencil contact_pencil(const HomogeneousForm& c, const ProjectivePoint& p) {
  require_cubic(c);
  const ContactSystem sys = contact_system(c, p, 3);
  require(sys.dimension() == 2, ErrorKind::Precondition, "point carries no contact cubic other than C");
  for (const auto& g : sys.basis)
    if (!g.proportional_to(c)) return Pencil{g, c};
  fail(ErrorKind::Internal, "contact system does not contain a second generator");
}

inline HomogeneousForm tangent_line(const HomogeneousForm& c, const ProjectivePoint& p) {
  const Vector3 g = c.gradient(p.coords());
  require(g[0] != 0 || g[1] != 0 || g[2] != 0, ErrorKind::Precondition, "point is singular on the curve");
  return HomogeneousForm::linear(g);
}

/// Pencil of the cube of the inflection line and C at a flex.
inline Pencil flex_pencil(const HomogeneousForm& c, const ProjectivePoint& p) {
  require(is_flex(c, p), ErrorKind::Precondition, "point is not a flex");
  return Pencil{tangent_line(c, p).pow(3), c};
}

/// Discriminant of the members as a binary form of degree 12 in (s1 : s2),
/// read in the affine coordinate s1 / s2 (infinity is s2 = 0).
inline BinaryForm pencil_discriminant(const Pencil& pen) {
  require(pen.first.degree() == 3 && pen.second.degree() == 3, ErrorKind::Degree, "pencil of cubics expected");
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= 12; ++i) {
    xs.emplace_back(i);
    ys.push_back(cubic_discriminant(pen.member(i, 1)));
  }
  BinaryForm d{interpolate(xs, ys), 12};
  require(!d.is_zero(), ErrorKind::DegeneratePencil, "every member of the pencil is singular");
  return d;
}

struct MemberParameter {
  Rational s1, s2;
  bool flex = false;
};

/// The member singular at P: s1 grad(first) + s2 grad(second) = 0 at P.
inline MemberParameter member_singular_at(const Pencil& pen, const ProjectivePoint& p) {
  require(pen.first(p) == 0 && pen.second(p) == 0, ErrorKind::Precondition, "point is not a base point of the pencil");
  const Vector3 ga = pen.first.gradient(p.coords()), gb = pen.second.gradient(p.coords());
  MemberParameter out;
  out.flex = is_flex(pen.second, p);
  if (ga == Vector3{0, 0, 0}) {
    out.s1 = 1;
    out.s2 = 0;
    return out;
  }
  int i = 0;
  while (gb[i] == 0) ++i;
  const Rational lambda = ga[i] / gb[i];
  for (int j = 0; j < 3; ++j)
    require(ga[j] == lambda * gb[j], ErrorKind::Precondition, "no member of the pencil is singular at the point");
  out.s1 = 1;
  out.s2 = -lambda;
  return out;
}

enum class MemberKind { Node, Cusp, NonReduced, Other, Unresolved };

inline std::string to_string(MemberKind k) {
  switch (k) {
    case MemberKind::Node: return "node";
    case MemberKind::Cusp: return "cusp";
    case MemberKind::NonReduced: return "non-reduced";
    case MemberKind::Other: return "other";
    case MemberKind::Unresolved: return "unresolved";
  }
  return "unresolved";
}

/// Kind of an isolated double point: node for two distinct tangents, cusp
/// for a square tangent cone resolved by a single blow-up.
inline MemberKind classify_point(const HomogeneousForm& f, const ProjectivePoint& p) {
  const BivariatePoly local = localize(f, p);
  if (local.coeff(0, 0) != 0 || local.order() != 2) return MemberKind::Other;
  const UPoly cone = local.tangent_cone_slopes();
  // f_2(1, t) = a + b t + c t^2; a vertical tangent lowers the degree.
  const Rational a = cone.coeff(0), b = cone.coeff(1), c = cone.coeff(2);
  if (b * b - 4 * a * c != 0) return MemberKind::Node;
  return multiplicity_sequence(f, p).multiplicities() == std::vector<int>{2} ? MemberKind::Cusp : MemberKind::Other;
}

/// Node when every singular point is a node, cusp for a single cusp.
inline MemberKind classify_singular_member(const HomogeneousForm& f) {
  require_cubic(f);
  if (!is_squarefree_form(f)) return MemberKind::NonReduced;
  std::vector<ProjectivePoint> sing;
  try {
    sing = singular_points(f);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::UnsupportedField) return MemberKind::Unresolved;
    throw;
  }
  require(!sing.empty(), ErrorKind::Precondition, "member is smooth");
  int nodes = 0, cusps = 0;
  for (const auto& p : sing) {
    const MemberKind k = classify_point(f, p);
    nodes += k == MemberKind::Node;
    cusps += k == MemberKind::Cusp;
  }
  if (nodes == static_cast<int>(sing.size())) return MemberKind::Node;
  if (cusps == 1 && sing.size() == 1) return MemberKind::Cusp;
  return MemberKind::Other;
}

/// One root of the pencil discriminant, or a class of conjugate irrational
/// roots sharing a multiplicity.
struct SingularMember {
  bool rational = true;
  Rational s1, s2;     // when rational
  UPoly conjugates;    // when not: monic squarefree polynomial in s1 / s2
  int count = 1;       // number of roots in the entry
  int multiplicity = 0;
  MemberKind kind = MemberKind::Unresolved;
};

struct SingularMemberReport {
  BinaryForm discriminant;
  std::vector<SingularMember> members;

  int total_multiplicity() const {
    int t = 0;
    for (const auto& m : members) t += m.count * m.multiplicity;
    return t;
  }
  int distinct() const {
    int t = 0;
    for (const auto& m : members) t += m.count;
    return t;
  }
  const SingularMember* find(const Rational& s1, const Rational& s2) const {
    for (const auto& m : members)
      if (m.rational && m.s1 * s2 == m.s2 * s1) return &m;
    return nullptr;
  }
};

/// Singular members of a pencil of cubics, classified where the parameter is
/// rational; irrational classes are nodal exactly when the root is simple.
inline SingularMemberReport singular_members(const Pencil& pen) {
  SingularMemberReport r;
  r.discriminant = pencil_discriminant(pen);
  for (const auto& sf : squarefree_decomposition(r.discriminant.affine)) {
    if (sf.factor.degree() < 1) continue;
    UPoly rest = sf.factor;
    for (const auto& [root, e] : rational_roots(sf.factor)) {
      SingularMember m;
      m.s1 = root;
      m.s2 = 1;
      m.multiplicity = sf.multiplicity;
      m.kind = classify_singular_member(pen.member(root, 1));
      r.members.push_back(m);
      rest = rest / UPoly{-root, 1};
    }
    if (rest.degree() >= 1) {
      SingularMember m;
      m.rational = false;
      m.conjugates = rest.monic();
      m.count = rest.degree();
      m.multiplicity = sf.multiplicity;
      m.kind = sf.multiplicity == 1 ? MemberKind::Node : MemberKind::Unresolved;
      r.members.push_back(m);
    }
  }
  if (const int inf = r.discriminant.multiplicity_at_infinity(); inf > 0) {
    SingularMember m;
    m.s1 = 1;
    m.s2 = 0;
    m.multiplicity = inf;
    m.kind = classify_singular_member(pen.first);
    r.members.push_back(m);
  }
  return r;
}

struct FlexPencilCount {
  int count = 0;
  std::vector<MemberKind> kinds;
  SingularMemberReport report;
};

/// Reduced singular members of the flex pencil at P, i.e. all singular
/// members other than the cube of the inflection line.
inline FlexPencilCount flex_pencil_count(const HomogeneousForm& c, const ProjectivePoint& p) {
  require(is_smooth_cubic(c), ErrorKind::Precondition, "flex pencil needs a smooth cubic");
  FlexPencilCount out;
  out.report = singular_members(flex_pencil(c, p));
  for (const auto& m : out.report.members) {
    if (m.kind == MemberKind::NonReduced) continue;
    out.count += m.count;
    for (int i = 0; i < m.count; ++i) out.kinds.push_back(m.kind);
  }
  return out;
}

inline FlexPencilCount flex_pencil_count(const WeierstrassData& w) {
  require(w.discriminant() != 0, ErrorKind::Precondition, "flex pencil needs a smooth cubic");
  return flex_pencil_count(weierstrass_form(w.alpha, w.beta), ProjectivePoint(0, 0, 1));
}

struct FiberAccounting {
  SingularMemberReport report;
  MemberParameter singular_at_point;
  int multiplicity_at_point = 0;
  MemberKind kind_at_point = MemberKind::Unresolved;
  int unisecant_members = 0;  // distinct singular members of the pencil
};

/// Singular members of the contact pencil at a non-flex point of level 3.
inline FiberAccounting nonflex_fiber_accounting(const HomogeneousForm& c, const ProjectivePoint& p) {
  require(is_smooth_cubic(c), ErrorKind::Precondition, "fiber accounting needs a smooth cubic");
  require(c(p) == 0, ErrorKind::Precondition, "point is not on the curve");
  require(!is_flex(c, p), ErrorKind::Precondition, "point is a flex");
  const auto fl = flexes(c);
  require(!fl.rational_flexes.empty(), ErrorKind::UnsupportedField, "curve has no rational flex");
  const WeierstrassData w = weierstrass_at_flex(c, fl.rational_flexes.front());
  const auto order = point_order(w, to_ec_point(w, p), 12);
  require(order && level_of_point_order(*order) == 3, ErrorKind::Precondition, "point is not a primitive level-3 contact point");
  const Pencil pen = contact_pencil(c, p);
  FiberAccounting out;
  out.report = singular_members(pen);
  out.singular_at_point = member_singular_at(pen, p);
  if (const auto* m = out.report.find(out.singular_at_point.s1, out.singular_at_point.s2)) out.multiplicity_at_point = m->multiplicity;
  out.kind_at_point = classify_point(pen.member(out.singular_at_point.s1, out.singular_at_point.s2), p);
  out.unisecant_members = out.report.distinct();
  return out;
}

struct UnisecantCount {
  Rational j;
  int flex_pencil = 0;
  long total = 0;
};

/// Rational unisecant cubics of a smooth cubic with a rational flex: nine
/// flex pencils plus four members for each of the 72 primitive points.
inline UnisecantCount unisecant_count_k3(const HomogeneousForm& c) {
  require(is_smooth_cubic(c), ErrorKind::Precondition, "count needs a smooth cubic");
  const auto fl = flexes(c);
  require(!fl.rational_flexes.empty(), ErrorKind::UnsupportedField, "curve has no rational flex");
  const WeierstrassData w = weierstrass_at_flex(c, fl.rational_flexes.front());
  UnisecantCount out;
  out.j = j_invariant(w);
  out.flex_pencil = flex_pencil_count(w).count;
  out.total = 9L * out.flex_pencil + 4 * primitive_contact_count(3);
  return out;
}

enum class ConicKind { Irreducible, DoubleLine, LinePair };

inline std::string to_string(ConicKind k) {
  switch (k) {
    case ConicKind::Irreducible: return "irreducible-conic";
    case ConicKind::DoubleLine: return "double-line";
    case ConicKind::LinePair: return "line-pair";
  }
  return "line-pair";
}

inline Matrix conic_matrix(const HomogeneousForm& q) {
  require(q.degree() == 2, ErrorKind::Degree, "conic expected");
  Matrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Exponent e{0, 0, 0};
      e[static_cast<std::size_t>(i)] += 1;
      e[static_cast<std::size_t>(j)] += 1;
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = i == j ? q.coeff(e) : q.coeff(e) / 2;
    }
  return m;
}

/// The unique conic with six-fold contact at P, by the rank of its matrix.
inline ConicKind contact_conic_check(const HomogeneousForm& c, const ProjectivePoint& p) {
  require_cubic(c);
  const ContactSystem sys = contact_system(c, p, 2);
  require(sys.dimension() == 1, ErrorKind::Precondition, "point has no six-fold contact conic");
  const std::size_t rank = conic_matrix(sys.basis.front()).rank();
  if (rank == 3) return ConicKind::Irreducible;
  return rank == 1 ? ConicKind::DoubleLine : ConicKind::LinePair;
}

}  // namespace ratcurves
