#include <gtest/gtest.h>

#include "gbi/bannaiito/realization.hpp"
#include "gbi/dunkl/dunkl.hpp"
#include "gbi/opcalc/equality.hpp"
#include "helpers.hpp"

namespace gbi {
namespace {

using test::X;

DunklKind b3() { return DunklKind::b_type(3, test::pa(), test::pb()); }

TEST(OperatorExamples, SelfCommutatorVanishes) {
  const Operator d1 = dunkl(1, b3());
  test::PolyGen gen(2);
  for (int t = 0; t < 5; ++t) EXPECT_TRUE(commutator(d1, d1).apply(CliffordPoly(gen.poly(3, 4, 3))).is_zero());
}

TEST(OperatorExamples, ReflectionSquaredIsIdentity) {
  const Operator r1 = Operator::group(SignedPerm::reflection(3, 1));
  EXPECT_TRUE(operators_equal(compose({r1, r1}), Operator::identity(3), 6, {true, 1}).equal());
}

TEST(OperatorExamples, IdentityOnModuleElement) {
  const CliffordPoly f = CliffordPoly::basis(3, {Monomial::var(1), 0b010});
  EXPECT_EQ(Operator::identity(3).apply(f), f);
}

TEST(OperatorExamples, MultiplicationAfterDunklOnConstant) {
  EXPECT_TRUE((Operator::mul_x(3, 1) * dunkl(1, b3())).apply(CliffordPoly(test::C(1))).is_zero());
}

TEST(OperatorExamples, RaisingOperatorOnConstant) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  EXPECT_EQ(r.a_plus.apply(CliffordPoly(test::C(1))), CliffordPoly(X(1) + X(2) + X(3)));
}

TEST(OperatorExamples, CompositionIsRightToLeft) {
  const Operator x1 = Operator::mul_x(3, 1), d = Operator::partial(3, 1);
  // d (x1 . 1) = 1 while x1 (d 1) = 0
  EXPECT_EQ((d * x1).apply(CliffordPoly(test::C(1))), CliffordPoly(test::C(1)));
  EXPECT_TRUE((x1 * d).apply(CliffordPoly(test::C(1))).is_zero());
  EXPECT_EQ(compose({d, x1}).apply(CliffordPoly(test::C(1))), CliffordPoly(test::C(1)));
}

TEST(EqualityExamples, SameOperatorIsEqualToDegree) {
  const auto cert = operators_equal(dunkl(1, b3()), dunkl(1, b3()), 6);
  EXPECT_TRUE(cert.equal());
  EXPECT_EQ(cert.degree_bound, 6);
  EXPECT_FALSE(cert.witness);
}

TEST(EqualityExamples, DistinctOperatorsGiveWitnessX1) {
  const auto cert = operators_equal(dunkl(1, b3()), dunkl(2, b3()), 6);
  ASSERT_FALSE(cert.equal());
  ASSERT_TRUE(cert.witness);
  EXPECT_EQ(cert.witness->basis.to_string(), "x1");
  EXPECT_EQ(cert.witness->lhs, CliffordPoly(test::C(ParamPoly(1) + ParamPoly(4) * test::pa() + ParamPoly(2) * test::pb())));
  EXPECT_TRUE(cert.witness->rhs.is_zero());
}

TEST(EqualityExamples, AnticommutatorOfLaddersIsTwiceA0) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  EXPECT_TRUE(operators_equal(anticommutator(r.a_plus, r.a_minus), ParamPoly(2) * r.a_zero, 6).equal());
}

TEST(EqualityExamples, DegreeZeroCertificateIsWeak) {
  // Both Dunkl operators kill constants, so the degree-0 subspace cannot tell them apart.
  EXPECT_TRUE(operators_equal(dunkl(1, b3()), dunkl(2, b3()), 0).equal());
  EXPECT_FALSE(operators_equal(dunkl(1, b3()), dunkl(2, b3()), 1).equal());
}

TEST(EqualityExamples, ParallelAgreesWithSerial) {
  const Realization r = realize(RealizationKind::kB3Clifford);
  const Operator lhs = commutator(r.a_plus, r.a_minus), rhs = r.p;
  const auto serial = operators_equal(lhs, rhs, 3, {true, 1});
  const auto parallel = operators_equal(lhs, rhs, 3, {true, 4});
  ASSERT_FALSE(serial.equal());
  ASSERT_FALSE(parallel.equal());
  EXPECT_EQ(serial.witness->basis, parallel.witness->basis);
}

// Property: operator arithmetic matches pointwise arithmetic on random inputs.
TEST(OperatorProperty, LinearityAndComposition) {
  const Operator d1 = dunkl(1, b3()), d3 = dunkl(3, b3()), x2 = Operator::mul_x(3, 2);
  test::PolyGen gen(8);
  for (int t = 0; t < 10; ++t) {
    const CliffordPoly f = gen.module_element(3, 4, 3), g = gen.module_element(3, 4, 3);
    EXPECT_EQ(d1.apply(f + g), d1.apply(f) + d1.apply(g));
    EXPECT_EQ((d1 + d3).apply(f), d1.apply(f) + d3.apply(f));
    EXPECT_EQ((d1 * x2 * d3).apply(f), d1.apply(x2.apply(d3.apply(f))));
    EXPECT_EQ((test::pa() * d1).apply(f), test::pa() * d1.apply(f));
  }
}

}  // namespace
}  // namespace gbi
