// SPDX-License-Identifier: Apache-2.0
// Copyright 2026 The ratcurves Authors
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ratcurves/bivariate.hpp"
#include "ratcurves/elimination.hpp"
#include "ratcurves/error.hpp"
#include "ratcurves/form.hpp"
#include "ratcurves/modular.hpp"
#include "ratcurves/univariate.hpp"

namespace ratcurves {

inline constexpr int kMaxResolutionDepth = 64;

/// Infinitely near point with multiplicity >= 2 (or the base point itself).
struct SingularityNode {
  int multiplicity = 0;
  ChartStep step;  // chart of the parent's blow-up containing this point
  std::vector<SingularityNode> children;

  /// Canonical shape string, independent of the chart slopes.
  std::string shape() const {
    std::vector<std::string> parts;
    for (const auto& c : children) parts.push_back(c.shape());
    std::sort(parts.begin(), parts.end());
    std::string s = std::to_string(multiplicity) + "(";
    for (const auto& p : parts) s += p;
    return s + ")";
  }
};

struct SingularityProfile {
  ProjectivePoint location;
  SingularityNode root;

  /// Multiplicities >= 2 in preorder.
  std::vector<int> multiplicities() const {
    std::vector<int> out;
    collect(root, out);
    return out;
  }
  long delta() const {
    long d = 0;
    for (int m : multiplicities()) d += static_cast<long>(m) * (m - 1) / 2;
    return d;
  }

 private:
  static void collect(const SingularityNode& n, std::vector<int>& out) {
    if (n.multiplicity >= 2) out.push_back(n.multiplicity);
    for (const auto& c : n.children) collect(c, out);
  }
};

inline long delta_invariant(const SingularityProfile& p) { return p.delta(); }

inline int local_multiplicity(const HomogeneousForm& f, const ProjectivePoint& p) {
  if (f(p) != 0) return 0;
  return localize(f, p).order();
}

namespace detail {

struct Direction {
  ChartStep step;
  int multiplicity = 0;
};

/// Rational tangent directions at the origin with their multiplicities.
/// `irrational` receives the degree of the part of the tangent cone without
/// rational roots.
inline std::vector<Direction> tangent_directions(const BivariatePoly& p, int& irrational) {
  const int m = p.order();
  const UPoly cone = p.tangent_cone_slopes();
  std::vector<Direction> out;
  int rational = 0;
  for (const auto& [r, e] : rational_roots(cone)) {
    out.push_back({ChartStep{ChartStep::Kind::Slope, r}, e});
    rational += e;
  }
  irrational = cone.degree() - rational;
  if (m - cone.degree() > 0) out.push_back({ChartStep{ChartStep::Kind::Vertical, 0}, m - cone.degree()});
  return out;
}

/// Common tangent directions of two germs; irrational common directions are
/// not representable and raise UnsupportedField.
inline std::vector<ChartStep> common_directions(const BivariatePoly& p, const BivariatePoly& q) {
  const int m = p.order(), n = q.order();
  const UPoly cp = p.tangent_cone_slopes(), cq = q.tangent_cone_slopes();
  const UPoly h = gcd(cp, cq);
  std::vector<ChartStep> out;
  const auto roots = rational_roots(h);
  require(static_cast<int>(roots.size()) == distinct_root_count(h), ErrorKind::UnsupportedField,
          "common tangent directions are not rational");
  for (const auto& [r, e] : roots) out.push_back(ChartStep{ChartStep::Kind::Slope, r});
  if (m - cp.degree() > 0 && n - cq.degree() > 0) out.push_back(ChartStep{ChartStep::Kind::Vertical, 0});
  return out;
}

inline BivariatePoly blow_up_exact(const BivariatePoly& p, const ChartStep& step, int order) {
  auto [q, exact] = blow_up(p, step, order);
  require(exact, ErrorKind::Internal, "blow-up division was not exact");
  return q;
}

inline SingularityNode resolve(const BivariatePoly& p, int depth) {
  SingularityNode node;
  node.multiplicity = p.coeff(0, 0) != 0 ? 0 : p.order();
  if (node.multiplicity < 2) return node;
  require(depth < kMaxResolutionDepth, ErrorKind::DepthExceeded, "resolution deeper than 64 blow-ups");
  for (const auto& sf : squarefree_decomposition(p.tangent_cone_slopes()))
    if (sf.multiplicity >= 2)
      require(static_cast<int>(rational_roots(sf.factor).size()) == sf.factor.degree(), ErrorKind::UnsupportedField,
              "repeated tangent direction is not rational");
  int irrational = 0;
  for (const auto& d : tangent_directions(p, irrational)) {
    if (d.multiplicity < 2) continue;
    SingularityNode child = resolve(blow_up_exact(p, d.step, node.multiplicity), depth + 1);
    if (child.multiplicity < 2) continue;
    child.step = d.step;
    node.children.push_back(std::move(child));
  }
  return node;
}

}  // namespace detail

/// Resolution tree of f at p by iterated blow-ups; only points of
/// multiplicity >= 2 are recorded below the root.
inline SingularityProfile multiplicity_sequence(const HomogeneousForm& f, const ProjectivePoint& p) {
  require(f(p) == 0, ErrorKind::Precondition, "point is not on the curve");
  require(is_squarefree_form(f), ErrorKind::NonReduced, "curve has a repeated component");
  return SingularityProfile{p, detail::resolve(localize(f, p), 0)};
}

struct GenusReport {
  long genus = 0;
  long virtual_genus = 0;
  long delta = 0;
  std::vector<SingularityProfile> profiles;
};

/// Geometric genus (d-1)(d-2)/2 - sum of mu(mu-1)/2 over all infinitely
/// near singular points.
inline GenusReport geometric_genus(const HomogeneousForm& f, bool assume_irreducible = false) {
  require(!f.is_zero() && f.degree() >= 1, ErrorKind::Degree, "genus needs a curve of positive degree");
  require(is_squarefree_form(f), ErrorKind::NonReduced, "curve has a repeated component");
  if (!assume_irreducible)
    require(certify_irreducible(f), ErrorKind::Reducible, "curve is reducible over Q or irreducibility was not certified");
  GenusReport r;
  const long d = f.degree();
  r.virtual_genus = (d - 1) * (d - 2) / 2;
  for (const auto& p : singular_points(f)) {
    r.profiles.push_back(multiplicity_sequence(f, p));
    r.delta += r.profiles.back().delta();
  }
  r.genus = r.virtual_genus - r.delta;
  return r;
}

/// Intersection multiplicity of two germs at the origin by the blow-up
/// recursion I = m n + sum over common tangent directions.
inline int noether_intersection(const BivariatePoly& p, const BivariatePoly& q, int depth = 0) {
  if (p.is_zero() || q.is_zero()) fail(ErrorKind::CommonComponent, "zero germ");
  if (p.coeff(0, 0) != 0 || q.coeff(0, 0) != 0) return 0;
  require(depth < kMaxResolutionDepth, ErrorKind::DepthExceeded, "intersection recursion deeper than 64 blow-ups");
  const int m = p.order(), n = q.order();
  int total = m * n;
  for (const auto& d : detail::common_directions(p, q))
    total += noether_intersection(detail::blow_up_exact(p, d, m), detail::blow_up_exact(q, d, n), depth + 1);
  return total;
}

inline int local_intersection_germs(const BivariatePoly& p, const BivariatePoly& q) {
  if (p.coeff(0, 0) != 0 || q.coeff(0, 0) != 0) return 0;
  return local_intersection_by_resultant(p.homogenize(), q.homogenize(), ProjectivePoint(0, 0, 1));
}

/// Local intersection number at p, by projective elimination and checked
/// against the blow-up recursion whenever its directions are rational.
inline int local_intersection(const HomogeneousForm& f, const HomogeneousForm& g, const ProjectivePoint& p) {
  if (f(p) != 0 || g(p) != 0) return 0;
  const int by_resultant = local_intersection_by_resultant(f, g, p);
  try {
    const int by_blowup = noether_intersection(localize(f, p), localize(g, p));
    require(by_blowup == by_resultant, ErrorKind::Internal, "intersection routes disagree");
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::UnsupportedField) throw;
  }
  return by_resultant;
}

struct BlowupIdentity {
  int lhs = 0;             // d1 d2
  int rhs = 0;             // transform_term + mu_delta
  int transform_term = 0;  // proper transform of f against the weighted transform of g
  int mu_delta = 0;        // sum over f's singular tree of mu * delta
};

namespace detail {

/// Splits the local intersection at a singular point along f's tree.
inline void split_along_tree(const BivariatePoly& pf, const BivariatePoly& pg, const SingularityNode& node,
                             BlowupIdentity& acc) {
  if (pg.coeff(0, 0) != 0) return;
  const int mu = node.multiplicity, delta = pg.order();
  acc.mu_delta += mu * delta;
  for (const auto& d : common_directions(pf, pg)) {
    const BivariatePoly f1 = blow_up_exact(pf, d, mu), g1 = blow_up_exact(pg, d, delta);
    auto child = std::find_if(node.children.begin(), node.children.end(),
                              [&](const SingularityNode& c) { return c.step == d; });
    if (child != node.children.end())
      split_along_tree(f1, g1, *child, acc);
    else
      acc.transform_term += local_intersection_germs(f1, g1);
  }
}

}  // namespace detail

/// d1 d2 against the decomposition D.F = D~.F_r + sum mu delta, where delta
/// is the multiplicity of g's transforms along f's resolution trees.
inline BlowupIdentity blowup_intersection_identity(const HomogeneousForm& f, const HomogeneousForm& g) {
  const IntersectionSummary s = intersect(f, g);
  const auto sing = singular_points(f);
  BlowupIdentity r;
  r.lhs = s.bezout;
  r.transform_term = s.irrational_degree;
  for (const auto& [p, mult] : s.rational_points) {
    if (std::find(sing.begin(), sing.end(), p) != sing.end()) {
      const SingularityProfile prof = multiplicity_sequence(f, p);
      detail::split_along_tree(localize(f, p), localize(g, p), prof.root, r);
    } else {
      r.transform_term += local_intersection(f, g, p);
    }
  }
  r.rhs = r.transform_term + r.mu_delta;
  return r;
}

/// Required multiplicities delta_j on the nodes of a resolution tree.
struct WeakTypeNode {
  int delta = 0;
  std::vector<WeakTypeNode> children;
};

struct WeakType {
  WeakTypeNode root;

  /// delta_j = max(mu_j - shift, 0) on the profile's tree.
  static WeakType from_profile(const SingularityProfile& p, int shift = 0) {
    return WeakType{convert(p.root, shift)};
  }
  static WeakType uniform(const SingularityProfile& p, int value) {
    WeakType w = from_profile(p);
    set_all(w.root, value);
    return w;
  }

 private:
  static WeakTypeNode convert(const SingularityNode& n, int shift) {
    WeakTypeNode w{std::max(n.multiplicity - shift, 0), {}};
    for (const auto& c : n.children) w.children.push_back(convert(c, shift));
    return w;
  }
  static void set_all(WeakTypeNode& n, int v) {
    n.delta = v;
    for (auto& c : n.children) set_all(c, v);
  }
};

namespace detail {

inline bool weak_type_holds(const BivariatePoly& pg, const WeakTypeNode& w, const SingularityNode& node) {
  require(w.children.size() == node.children.size(), ErrorKind::Precondition, "weak type does not match the tree");
  if (pg.is_zero()) return true;
  if (pg.order() < w.delta) return false;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    auto [g1, exact] = blow_up(pg, node.children[i].step, w.delta);
    if (!exact) return false;
    if (!weak_type_holds(g1, w.children[i], node.children[i])) return false;
  }
  return true;
}

}  // namespace detail

/// True iff each successive pullback of g minus delta_j copies of the
/// exceptional curve stays effective along the profile's tree.
inline bool weak_type_check(const HomogeneousForm& g, const WeakType& required, const SingularityProfile& along) {
  return detail::weak_type_holds(localize(g, along.location), required.root, along.root);
}

/// Ternary form whose coefficients are polynomials in a parameter t.
struct CurveFamily {
  int degree = 0;
  std::map<Exponent, UPoly, MonomialOrder> coeffs;

  HomogeneousForm at(const Rational& t) const {
    HomogeneousForm f(degree);
    for (const auto& [e, c] : coeffs) f.add(e, c(t));
    return f;
  }
  HomogeneousForm derivative_at(const Rational& t) const {
    HomogeneousForm f(degree);
    for (const auto& [e, c] : coeffs) f.add(e, c.derivative()(t));
    return f;
  }
};

/// Sorted shapes of all singular points of a curve; equal signatures at the
/// sampled parameters stand in for equisingularity.
inline std::vector<std::string> singularity_signature(const HomogeneousForm& f) {
  std::vector<std::string> out;
  for (const auto& p : singular_points(f)) out.push_back(multiplicity_sequence(f, p).root.shape());
  std::sort(out.begin(), out.end());
  return out;
}

/// Checks that df/dt at t0 has weak type mu - 1 at the singular point p of
/// f_{t0}, after confirming constant singularity shapes at nearby samples.
inline bool family_derivative_check(const CurveFamily& fam, const Rational& t0, const ProjectivePoint& p,
                                    int samples = 5) {
  const HomogeneousForm f0 = fam.at(t0);
  const HomogeneousForm df = fam.derivative_at(t0);
  require(!df.is_zero(), ErrorKind::DegenerateFamily, "family derivative vanishes identically");
  require(!df.proportional_to(f0), ErrorKind::DegenerateFamily, "family derivative is proportional to the member");
  const SingularityProfile prof = multiplicity_sequence(f0, p);
  const auto base = singularity_signature(f0);
  for (int i = 1; i <= samples; ++i) {
    const Rational t = t0 + Rational((i % 2 ? 1 : -1) * ((i + 1) / 2)) / 8;
    require(singularity_signature(fam.at(t)) == base, ErrorKind::Precondition,
            "family is not equisingular at the sampled parameters");
  }
  return weak_type_check(df, WeakType::from_profile(prof, 1), prof);
}

/// Genus bound 1/2 (K + C).A + 1 on the plane, K = -3H.
inline Rational genus_bound(long deg_c, long deg_a) {
  require(deg_c >= 1 && deg_a >= 1, ErrorKind::Domain, "degrees must be positive");
  return Rational((deg_c - 3) * deg_a) / 2 + 1;
}

/// Bound 1/2 K.A + 1 on the plane.
inline Rational canonical_genus_bound(long deg_a) {
  require(deg_a >= 1, ErrorKind::Domain, "degree must be positive");
  return Rational(-3 * deg_a) / 2 + 1;
}

/// A^2 >= sum mu(mu - 1) + A.C; false rules out a moving one-point contact.
inline bool moving_contact_certificate(long a_sq, long sum_mu, long a_dot_c) { return a_sq >= sum_mu + a_dot_c; }

}  // namespace ratcurves
