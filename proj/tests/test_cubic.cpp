#include <gtest/gtest.h>

#include "fixture_path.hpp"
#include "oracles.hpp"
#include "ratcurves/cubic.hpp"
#include "ratcurves/random.hpp"

using namespace ratcurves;

namespace {

HomogeneousForm x(int i) { return HomogeneousForm::variable(i); }

oracle::Terms as_terms(const HomogeneousForm& f) {
  oracle::Terms t;
  for (const auto& [e, a] : f.terms()) t[{e[0], e[1], e[2]}] = a;
  return t;
}

const char* const kSmoothCubics[] = {"fermat", "weierstrass_j1728", "weierstrass_alpha0", "kubert9", "kubert6"};

}  // namespace

TEST(Hessian, FermatCubic) {
  const HomogeneousForm fermat = fixture_form("fermat");
  EXPECT_EQ(hessian(fermat), x(0) * x(1) * x(2) * Rational(216));
}

TEST(Hessian, MatchesFiniteDifferenceOracle) {
  random::Rng rng(23);
  for (const char* name : kSmoothCubics) {
    const HomogeneousForm f = fixture_form(name);
    const oracle::Terms t = as_terms(f);
    for (int trial = 0; trial < 3; ++trial) {
      const std::vector<oracle::Q> p{random::rational(rng), random::rational(rng), random::rational(rng)};
      std::vector<std::vector<oracle::Q>> h(3, std::vector<oracle::Q>(3));
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) h[i][j] = oracle::second_partial(t, p, i, j);
      EXPECT_EQ(hessian(f)(Vector3{p[0], p[1], p[2]}), oracle::det(h)) << name;
    }
  }
}

TEST(Flexes, NineDistinctOnEverySmoothFixture) {
  for (const char* name : kSmoothCubics) {
    const FlexData fd = flexes(fixture_form(name));
    EXPECT_EQ(fd.count_with_multiplicity, 9) << name;
    EXPECT_EQ(fd.distinct, 9) << name;
    EXPECT_TRUE(fd.eliminant_squarefree) << name;
    for (const auto& p : fd.rational_flexes) EXPECT_TRUE(is_flex(fixture_form(name), p));
  }
}

TEST(Flexes, FermatRationalFlexes) {
  const FlexData fd = flexes(fixture_form("fermat"));
  ASSERT_EQ(fd.rational_flexes.size(), 3u);
  EXPECT_EQ(fd.rational_flexes[0], ProjectivePoint(0, 1, -1));
  EXPECT_EQ(fd.rational_flexes[1], ProjectivePoint(1, -1, 0));
  EXPECT_EQ(fd.rational_flexes[2], ProjectivePoint(1, 0, -1));
}

TEST(Flexes, RejectsSingularCubics) {
  try {
    flexes(fixture_form("nodal_cubic"));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
  EXPECT_THROW(flexes(fixture_form("tricuspidal_quartic")), Error);
}

TEST(CubicDiscriminant, SmoothnessOfFixtures) {
  for (const char* name : kSmoothCubics) EXPECT_TRUE(is_smooth_cubic(fixture_form(name))) << name;
  EXPECT_FALSE(is_smooth_cubic(fixture_form("nodal_cubic")));
  EXPECT_FALSE(is_smooth_cubic(fixture_form("cuspidal_cubic")));
  EXPECT_FALSE(is_smooth_cubic(x(0) * x(1) * x(2)));
}

TEST(CubicDiscriminant, HessePencil) {
  // X0^3 + X1^3 + X2^3 + t X0 X1 X2 is singular exactly when t^3 = -27.
  const HomogeneousForm cubes = x(0).pow(3) + x(1).pow(3) + x(2).pow(3), xyz = x(0) * x(1) * x(2);
  Rational ratio;
  for (int t = -5; t <= 5; ++t) {
    const Rational d = cubic_discriminant(cubes + xyz * Rational(t));
    const Rational base = pow(Rational(t * t * t + 27), 3);
    if (t == -3) {
      EXPECT_EQ(d, 0);
      continue;
    }
    if (t == -5) ratio = d / base;
    EXPECT_EQ(d, ratio * base) << t;
  }
  EXPECT_NE(ratio, 0);
}

TEST(CubicDiscriminant, TransformsByDeterminantPower) {
  random::Rng rng(29);
  const HomogeneousForm f = fixture_form("kubert9");
  const Rational d = cubic_discriminant(f);
  for (int i = 0; i < 4; ++i) {
    const Matrix3 m = random::invertible_matrix(rng);
    EXPECT_EQ(cubic_discriminant(f.substitute(m)), d * pow(m.determinant(), 12));
  }
}

TEST(Weierstrass, NormalizationIdentity) {
  for (const char* name : kSmoothCubics) {
    const HomogeneousForm f = fixture_form(name);
    for (const auto& p : flexes(f).rational_flexes) {
      const WeierstrassData w = weierstrass_at_flex(f, p);
      EXPECT_EQ(f.substitute(w.transform), weierstrass_form(w.alpha, w.beta) * w.scale) << name;
      EXPECT_EQ(from_ec_point(w, ECPoint::origin()), p);
      EXPECT_NE(w.discriminant(), 0);
    }
  }
}

TEST(Weierstrass, RejectsNonFlex) {
  const HomogeneousForm f = fixture_form("kubert9");
  try {
    weierstrass_at_flex(f, ProjectivePoint(0, 0, 1));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Precondition);
  }
}

TEST(JInvariant, SpecialValues) {
  EXPECT_EQ(j_invariant(WeierstrassData{0, 1}), 0);
  EXPECT_EQ(j_invariant(WeierstrassData{-4, 0}), 1728);
  EXPECT_EQ(j_invariant(weierstrass_at_flex(fixture_form("weierstrass_alpha0"), ProjectivePoint(0, 0, 1))), 0);
  EXPECT_EQ(j_invariant(weierstrass_at_flex(fixture_form("weierstrass_j1728"), ProjectivePoint(0, 0, 1))), 1728);
  const HomogeneousForm fermat = fixture_form("fermat");
  for (const auto& p : flexes(fermat).rational_flexes) EXPECT_EQ(j_invariant(weierstrass_at_flex(fermat, p)), 0);
  EXPECT_THROW(j_invariant(WeierstrassData{0, 0}), Error);
}

TEST(JInvariant, InvariantUnderCoordinateChange) {
  random::Rng rng(31);
  for (const char* name : {"kubert9", "kubert6"}) {
    const HomogeneousForm f = fixture_form(name);
    const ProjectivePoint flex(0, 1, 0);
    const Rational j0 = j_invariant(weierstrass_at_flex(f, flex));
    for (int i = 0; i < 5; ++i) {
      const Matrix3 m = random::invertible_matrix(rng);
      const ProjectivePoint moved(m.inverse() * flex.coords());
      EXPECT_EQ(j_invariant(weierstrass_at_flex(f.substitute(m), moved)), j0) << name;
    }
  }
}

TEST(GroupLaw, MatchesLongWeierstrassOracle) {
  // Tate normal forms: (b, c) = (12, 4) has (0, 0) of order 9, (2, 1) of order 6.
  struct Case {
    const char* name;
    Rational b, c;
    int order;
  };
  for (const Case& cs : {Case{"kubert9", 12, 4, 9}, Case{"kubert6", 2, 1, 6}}) {
    const HomogeneousForm f = fixture_form(cs.name);
    EXPECT_EQ(f, tate_normal_form(cs.b, cs.c));
    const oracle::LongCurve e{1 - cs.c, -cs.b, -cs.b, 0, 0};
    const oracle::LongPoint p0{false, 0, 0};
    EXPECT_EQ(oracle::long_order(e, p0, 20), cs.order);

    const WeierstrassData w = weierstrass_at_flex(f, ProjectivePoint(0, 1, 0));
    const ECPoint p = to_ec_point(w, ProjectivePoint(0, 0, 1));
    ASSERT_TRUE(ec_on_curve(w, p));
    EXPECT_EQ(point_order(w, p, 20), cs.order);
    oracle::LongPoint acc = p0;
    for (int n = 1; n < cs.order; ++n) {
      EXPECT_EQ(from_ec_point(w, ec_scalar_mul(w, n, p)), ProjectivePoint(acc.x, acc.y, 1)) << cs.name << " n = " << n;
      acc = oracle::long_add(e, acc, p0);
    }
    EXPECT_TRUE(acc.inf);
    EXPECT_TRUE(ec_scalar_mul(w, cs.order, p).infinity);
  }
}

TEST(GroupLaw, AssociativeAndCommutative) {
  const WeierstrassData w{-4, 1};
  const ECPoint g = ECPoint::affine(0, 1);
  EXPECT_EQ(point_order(w, g, 12), std::nullopt);
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      const ECPoint pa = ec_scalar_mul(w, a, g), pb = ec_scalar_mul(w, b, g), pc = ec_scalar_mul(w, 2, g);
      EXPECT_EQ(ec_add(w, pa, pb), ec_add(w, pb, pa));
      EXPECT_EQ(ec_add(w, ec_add(w, pa, pb), pc), ec_add(w, pa, ec_add(w, pb, pc)));
      EXPECT_EQ(ec_add(w, pa, pb), ec_scalar_mul(w, a + b, g));
    }
  EXPECT_TRUE(ec_add(w, g, ec_neg(w, g)).infinity);
  EXPECT_THROW(ec_add(w, g, ECPoint::affine(0, 0)), Error);
}

TEST(GroupLaw, TwoTorsionOfJ1728Fixture) {
  const CurveFile c = fixture("weierstrass_j1728");
  ASSERT_EQ(c.torsion.size(), 3u);
  const WeierstrassData w = weierstrass_at_flex(c.form, *c.origin);
  for (const auto& t : c.torsion) EXPECT_EQ(point_order(w, to_ec_point(w, t.point), 4), 2);
}
