#include <gtest/gtest.h>

#include <algorithm>

#include "fixture_path.hpp"
#include "ratcurves/pencils.hpp"
#include "ratcurves/random.hpp"

using namespace ratcurves;

namespace {

HomogeneousForm x(int i) { return HomogeneousForm::variable(i); }

std::vector<int> multiplicity_pattern(const SingularMemberReport& r) {
  std::vector<int> out;
  for (const auto& m : r.members)
    for (int i = 0; i < m.count; ++i) out.push_back(m.multiplicity);
  std::sort(out.rbegin(), out.rend());
  return out;
}

const ProjectivePoint kNine(0, 0, 1);   // order 9 on kubert9
const ProjectivePoint kInfinity(0, 1, 0);

}  // namespace

TEST(SmoothBranch, ParametrizesTheCurve) {
  const HomogeneousForm c = fixture_form("kubert9");
  const BivariatePoly local = localize(c, kNine);
  const auto [xs, ys] = smooth_branch(local, 12);
  const Series v = detail::compose(local, xs, ys, 12);
  for (const auto& a : v) EXPECT_EQ(a, 0);
  EXPECT_THROW(smooth_branch(localize(fixture_form("nodal_cubic"), kNine), 5), Error);
}

TEST(ContactSystem, DimensionsAtTorsionPoints) {
  const HomogeneousForm c9 = fixture_form("kubert9");
  EXPECT_EQ(contact_system(c9, kNine, 1).dimension(), 0);
  EXPECT_EQ(contact_system(c9, kNine, 2).dimension(), 0);
  const ContactSystem s3 = contact_system(c9, kNine, 3);
  EXPECT_EQ(s3.dimension(), 2);
  EXPECT_TRUE(s3.has_contact_divisor());

  const HomogeneousForm c6 = fixture_form("kubert6");
  EXPECT_EQ(contact_system(c6, kNine, 1).dimension(), 0);
  EXPECT_EQ(contact_system(c6, kNine, 2).dimension(), 1);
  EXPECT_EQ(contact_system(c6, kNine, 3).dimension(), 1);
  EXPECT_EQ(contact_system(c6, kNine, 4).dimension(), 3 + 1);

  // At a flex every level carries a contact divisor.
  for (int k = 1; k <= 4; ++k) {
    const ContactSystem s = contact_system(c9, kInfinity, k);
    EXPECT_TRUE(s.has_contact_divisor()) << k;
    for (const auto& g : s.basis) EXPECT_EQ(g(kInfinity), 0);
  }
}

TEST(ContactSystem, PointOfInfiniteOrderHasNoContactCubic) {
  // y^2 = 4x^3 - 4x + 1 with (0, 1), whose order exceeds 12.
  const WeierstrassData w{-4, 1};
  ASSERT_EQ(point_order(w, ECPoint::affine(0, 1), 12), std::nullopt);
  const HomogeneousForm c = weierstrass_form(-4, 1);
  const ProjectivePoint p(1, 0, 1);
  for (int k = 1; k <= 3; ++k) EXPECT_FALSE(contact_system(c, p, k).has_contact_divisor()) << k;
  EXPECT_EQ(contact_system(c, p, 3).dimension(), 1);
}

TEST(ContactSystem, BasisMeetsCubicOnlyAtPoint) {
  const HomogeneousForm c = fixture_form("kubert9");
  const Pencil pen = contact_pencil(c, kNine);
  const IntersectionSummary s = intersect(c, pen.first);
  ASSERT_EQ(s.rational_points.size(), 1u);
  EXPECT_EQ(s.rational_points[0].first, kNine);
  EXPECT_EQ(s.irrational_degree, 0);
  EXPECT_EQ(local_intersection(c, pen.first, kNine), 9);
}

TEST(PencilDiscriminant, DegreeTwelveAndTotalMultiplicity) {
  for (const char* name : {"kubert9", "kubert6", "fermat", "weierstrass_j1728", "weierstrass_alpha0"}) {
    const HomogeneousForm c = fixture_form(name);
    const ProjectivePoint flex = flexes(c).rational_flexes.front();
    const SingularMemberReport r = singular_members(flex_pencil(c, flex));
    EXPECT_EQ(r.discriminant.degree, 12) << name;
    EXPECT_EQ(r.total_multiplicity(), 12) << name;
  }
}

TEST(PencilDiscriminant, DegeneratePencil) {
  try {
    pencil_discriminant(Pencil{x(0).pow(3), x(1).pow(3)});
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DegeneratePencil);
  }
}

TEST(FlexPencil, TwoNodesUnlessAlphaVanishes) {
  const FlexPencilCount general = flex_pencil_count(fixture_form("weierstrass_j1728"), ProjectivePoint(0, 0, 1));
  EXPECT_EQ(general.count, 2);
  EXPECT_EQ(general.kinds, (std::vector<MemberKind>{MemberKind::Node, MemberKind::Node}));
  const FlexPencilCount special = flex_pencil_count(fixture_form("weierstrass_alpha0"), ProjectivePoint(0, 0, 1));
  EXPECT_EQ(special.count, 1);
  EXPECT_EQ(special.kinds, std::vector<MemberKind>{MemberKind::Cusp});
}

TEST(FlexPencil, NormalFormFamily) {
  for (const auto& [alpha, beta] : std::vector<std::pair<int, int>>{{-4, 1}, {1, 1}, {-3, 5}, {2, 0}, {7, -2}}) {
    const FlexPencilCount c = flex_pencil_count(WeierstrassData{alpha, beta});
    EXPECT_EQ(c.count, 2) << alpha << " " << beta;
    for (auto k : c.kinds) EXPECT_EQ(k, MemberKind::Node);
  }
  for (int beta : {1, -3, 8}) {
    const FlexPencilCount c = flex_pencil_count(WeierstrassData{0, beta});
    EXPECT_EQ(c.count, 1);
    EXPECT_EQ(c.kinds, std::vector<MemberKind>{MemberKind::Cusp});
  }
}

TEST(FiberAccounting, OrderNinePoint) {
  const FiberAccounting fa = nonflex_fiber_accounting(fixture_form("kubert9"), kNine);
  EXPECT_EQ(fa.report.discriminant.degree, 12);
  EXPECT_EQ(multiplicity_pattern(fa.report), (std::vector<int>{9, 1, 1, 1}));
  EXPECT_EQ(fa.multiplicity_at_point, 9);
  EXPECT_EQ(fa.kind_at_point, MemberKind::Node);
  EXPECT_EQ(fa.unisecant_members, 4);
}

TEST(FiberAccounting, InvariantUnderCoordinateChange) {
  random::Rng rng(53);
  const HomogeneousForm c = fixture_form("kubert9");
  for (int i = 0; i < 2; ++i) {
    const Matrix3 m = random::invertible_matrix(rng, 2);
    const ProjectivePoint moved(m.inverse() * kNine.coords());
    const FiberAccounting fa = nonflex_fiber_accounting(c.substitute(m), moved);
    EXPECT_EQ(multiplicity_pattern(fa.report), (std::vector<int>{9, 1, 1, 1}));
    EXPECT_EQ(fa.multiplicity_at_point, 9);
    EXPECT_EQ(fa.kind_at_point, MemberKind::Node);
  }
}

TEST(FiberAccounting, Preconditions) {
  const HomogeneousForm c = fixture_form("kubert9");
  EXPECT_THROW(nonflex_fiber_accounting(c, kInfinity), Error);
  // 2P also has order 9; 3P has order 3 and is a flex.
  const WeierstrassData w = weierstrass_at_flex(c, kInfinity);
  const ProjectivePoint p3 = from_ec_point(w, ec_scalar_mul(w, 3, to_ec_point(w, kNine)));
  EXPECT_TRUE(is_flex(c, p3));
  const ProjectivePoint p2 = from_ec_point(w, ec_scalar_mul(w, 2, to_ec_point(w, kNine)));
  EXPECT_EQ(nonflex_fiber_accounting(c, p2).multiplicity_at_point, 9);
}

TEST(MemberSingularAt, ContactPencil) {
  const HomogeneousForm c = fixture_form("kubert9");
  const Pencil pen = contact_pencil(c, kNine);
  const MemberParameter at = member_singular_at(pen, kNine);
  const HomogeneousForm member = pen.member(at.s1, at.s2);
  EXPECT_EQ(member.gradient(kNine.coords()), (Vector3{0, 0, 0}));
  EXPECT_FALSE(at.flex);
}

TEST(Classification, Points) {
  EXPECT_EQ(classify_point(fixture_form("nodal_cubic"), kNine), MemberKind::Node);
  EXPECT_EQ(classify_point(fixture_form("cuspidal_cubic"), kNine), MemberKind::Cusp);
  EXPECT_EQ(classify_singular_member(x(0) * x(1) * x(2)), MemberKind::Node);
  EXPECT_EQ(classify_singular_member(x(0).pow(2) * x(1)), MemberKind::NonReduced);
  EXPECT_EQ(classify_singular_member(x(0) * x(1) * (x(0) + x(1))), MemberKind::Other);
  EXPECT_EQ(to_string(MemberKind::Cusp), "cusp");
}

TEST(Unisecant, Totals) {
  const UnisecantCount general = unisecant_count_k3(fixture_form("weierstrass_j1728"));
  EXPECT_EQ(general.j, 1728);
  EXPECT_EQ(general.flex_pencil, 2);
  EXPECT_EQ(general.total, 306);
  const UnisecantCount fermat = unisecant_count_k3(fixture_form("fermat"));
  EXPECT_EQ(fermat.j, 0);
  EXPECT_EQ(fermat.flex_pencil, 1);
  EXPECT_EQ(fermat.total, 297);
  EXPECT_EQ(unisecant_count_k3(fixture_form("kubert9")).total, 306);
}

TEST(ContactConic, LevelTwoPoints) {
  const HomogeneousForm c6 = fixture_form("kubert6");
  EXPECT_EQ(contact_conic_check(c6, kNine), ConicKind::Irreducible);
  EXPECT_EQ(contact_conic_check(c6, kInfinity), ConicKind::DoubleLine);
  EXPECT_EQ(contact_conic_check(fixture_form("fermat"), ProjectivePoint(1, -1, 0)), ConicKind::DoubleLine);
  EXPECT_THROW(contact_conic_check(fixture_form("kubert9"), kNine), Error);
  EXPECT_EQ(to_string(ConicKind::Irreducible), "irreducible-conic");
  EXPECT_EQ(to_string(ConicKind::DoubleLine), "double-line");
}
