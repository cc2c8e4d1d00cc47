#include <gtest/gtest.h>

#include <set>

#include "gbi/exactring/errors.hpp"
#include "gbi/hyperoct/elements.hpp"
#include "helpers.hpp"

namespace gbi {
namespace {

using test::X;

SignedPerm R(int i) { return SignedPerm::reflection(3, i); }
SignedPerm Pi(int i, int j) { return SignedPerm::transposition(3, i, j); }
GroupAlgebraElement G(const SignedPerm& g) { return GroupAlgebraElement(g); }

TEST(SignedPermExamples, ReflectionParity) {
  EXPECT_EQ(R(1).act(X(1) * X(1) * X(2)), X(1) * X(1) * X(2));
  EXPECT_EQ(R(1).act(X(1) * X(2)), -(X(1) * X(2)));
}

TEST(SignedPermExamples, TranspositionRelabels) { EXPECT_EQ(Pi(1, 2).act(X(1) * X(1) * X(1)), X(2) * X(2) * X(2)); }

TEST(SignedPermExamples, RightmostFactorActsFirst) {
  // pi12: x1 -> x2, then R2: x2 -> -x2, then R1 leaves -x2 alone.
  EXPECT_EQ((R(1) * R(2) * Pi(1, 2)).act(X(1)), -X(2));
  EXPECT_EQ((Pi(1, 2) * R(1)).act(X(1)), -X(2));
  EXPECT_EQ((R(1) * Pi(1, 2)).act(X(1)), X(2));
}

TEST(SignedPermExamples, WordsPrint) {
  EXPECT_EQ(SignedPerm::identity(3).to_string(), "1");
  EXPECT_EQ(R(3).to_string(), "R3");
  EXPECT_EQ(Pi(1, 2).to_string(), "pi12");
}

TEST(SignedPerm, GroupHasFortyEightElements) {
  const auto elements = enumerate_group(3);
  EXPECT_EQ(elements.size(), 48u);
  std::set<std::uint64_t> codes;
  for (const auto& g : elements) codes.insert(g.code());
  EXPECT_EQ(codes.size(), 48u);
}

// Property: the action is a homomorphism from B_3 to ring automorphisms.
TEST(SignedPermProperty, ActionIsHomomorphism) {
  const auto group = enumerate_group(3);
  test::PolyGen gen(3);
  std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const SignedPerm& g = group[pick(gen.rng())];
    const SignedPerm& h = group[pick(gen.rng())];
    const XPoly f = gen.poly(3, 4, 4), k = gen.poly(3, 3, 3);
    EXPECT_EQ((g * h).act(f), g.act(h.act(f)));
    EXPECT_EQ(g.act(f * k), g.act(f) * g.act(k));
  }
}

TEST(SignedPermProperty, EveryElementHasAnInverse) {
  const auto group = enumerate_group(3);
  for (const auto& g : group) {
    int found = 0;
    for (const auto& h : group)
      if ((g * h).is_identity()) ++found;
    EXPECT_EQ(found, 1) << g.to_string();
  }
}

TEST(GroupAlgebraExamples, IdentityIsNeutral) {
  const GroupAlgebraElement u = q_ij(1, 3) + test::pa() * G(R(2));
  EXPECT_EQ(u * ga_one(3), u);
  EXPECT_EQ(ga_one(3) * u, u);
}

TEST(GroupAlgebraExamples, Q12ClosedForm) {
  const GroupAlgebraElement expected =
      ParamPoly(Rational(1, 2)) * ((ga_one(3) + G(R(1)) + G(R(2)) - G(R(1) * R(2))) * G(Pi(1, 2)));
  EXPECT_EQ(q_ij(1, 2), expected);
  EXPECT_EQ(q_ij(2, 1), expected);
}

TEST(GroupAlgebraExamples, QAreInvolutions) {
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) EXPECT_EQ(q_ij(i, j) * q_ij(i, j), ga_one(3));
}

TEST(GroupAlgebraExamples, QBraidRelation) {
  EXPECT_EQ(q_ij(1, 2) * q_ij(1, 3), q_ij(2, 3) * q_ij(1, 2));
  EXPECT_EQ(q_ij(2, 3) * q_ij(1, 2), q_ij(1, 3) * q_ij(2, 3));
}

TEST(GroupAlgebraExamples, QIntertwinesReflections) {
  EXPECT_EQ(q_ij(1, 2) * ga_r(3, 2), ga_r(3, 1) * q_ij(1, 2));
  EXPECT_EQ(q_ij(1, 3) * ga_r(3, 3), ga_r(3, 1) * q_ij(1, 3));
  EXPECT_EQ(q_ij(2, 3) * ga_r(3, 3), ga_r(3, 2) * q_ij(2, 3));
}

TEST(GroupAlgebraExamples, QIndexOutOfRangeThrows) { EXPECT_THROW(q_ij(1, 4), StructuralError); }

TEST(GroupAlgebraExamples, JucysMurphyElementsCommute) {
  const auto jm = jucys_murphy(3);
  ASSERT_EQ(jm.size(), 5u);
  for (std::size_t i = 0; i < jm.size(); ++i)
    for (std::size_t j = 0; j < jm.size(); ++j) EXPECT_TRUE(ga_commutator(jm[i], jm[j]).is_zero()) << i << "," << j;
}

TEST(GroupAlgebraExamples, SecondJucysMurphyOnSymmetricLinear) {
  // pi12 fixes x1 + x2 and R1 R2 negates it, so m2 annihilates it.
  const auto jm = jucys_murphy(3);
  const XPoly f = X(1) + X(2);
  const XPoly oracle = Pi(1, 2).act(f) + (R(1) * R(2) * Pi(1, 2)).act(f);
  EXPECT_EQ(jm[3].act(f), oracle);
  EXPECT_TRUE(jm[3].act(f).is_zero());
}

TEST(GroupAlgebraExamples, ReflectionsAgainstSecondJucysMurphy) {
  const auto jm = jucys_murphy(3);
  EXPECT_TRUE(ga_commutator(G(R(1) * R(2)), jm[3]).is_zero());
  // Both sides expand to R1 pi12 + R2 pi12, so this product identity holds exactly.
  EXPECT_EQ(ga_mul(G(R(1)), jm[3]), ga_mul(jm[3], G(R(2))));
  EXPECT_FALSE(ga_mul(G(R(3)), jm[3]) == ga_mul(jm[3], G(R(1))));
}

TEST(GroupAlgebraExamples, FirstDifferenceLocatesMismatch) {
  const GroupAlgebraElement u = q_ij(1, 2), v = q_ij(1, 2) + G(R(3));
  ASSERT_TRUE(first_difference(u, v));
  EXPECT_EQ(*first_difference(u, v), R(3));
  EXPECT_FALSE(first_difference(u, u));
}

// Property: the group-algebra action is an algebra homomorphism.
TEST(GroupAlgebraProperty, ActionIsHomomorphism) {
  test::PolyGen gen(29);
  const std::vector<GroupAlgebraElement> pool = {q_ij(1, 2), q_ij(1, 3), q_ij(2, 3), jucys_murphy(3)[4],
                                                 test::pa() * G(R(1)) + test::pb() * G(Pi(2, 3))};
  for (int trial = 0; trial < 30; ++trial) {
    const auto& u = pool[trial % pool.size()];
    const auto& v = pool[(trial * 7 + 3) % pool.size()];
    const XPoly f = gen.poly(3, 4, 4);
    EXPECT_EQ((u * v).act(f), u.act(v.act(f)));
    EXPECT_EQ((u + v).act(f), u.act(f) + v.act(f));
  }
}

TEST(GroupAlgebraProperty, Associativity) {
  const auto jm = jucys_murphy(3);
  const GroupAlgebraElement u = q_ij(1, 2) + test::pa() * jm[4], v = q_ij(1, 3) - ga_r(3, 2), w = jm[3];
  EXPECT_EQ((u * v) * w, u * (v * w));
}

}  // namespace
}  // namespace gbi
