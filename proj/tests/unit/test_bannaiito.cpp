#include <gtest/gtest.h>

#include "gbi/bannaiito/centralizer.hpp"
#include "gbi/bannaiito/closed_forms.hpp"
#include "gbi/bannaiito/suites.hpp"
#include "gbi/clifford/symmetries.hpp"
#include "gbi/dunkl/dunkl.hpp"
#include "gbi/exactring/errors.hpp"
#include "gbi/hyperoct/elements.hpp"
#include "helpers.hpp"

namespace gbi {
namespace {

constexpr int kDegree = 4;

bool eq(const Realization& r, const Operator& lhs, const Operator& rhs, int degree = kDegree) {
  return operators_equal(lhs, rhs, degree, r.equality_options()).equal();
}

class AllRealizations : public ::testing::TestWithParam<RealizationKind> {};

TEST_P(AllRealizations, ThreeConstructionsAgree) {
  const Realization r = realize(GetParam());
  for (const std::vector<int>& s : {std::vector<int>{1}, {2, 3}, {1, 2, 3}}) {
    const Operator nested = centralizer_element(s, r, Construction::kNested);
    EXPECT_TRUE(eq(r, nested, centralizer_element(s, r, Construction::kSwapped), 3));
    EXPECT_TRUE(eq(r, nested, centralizer_element(s, r, Construction::kExpanded), 3));
  }
}

TEST_P(AllRealizations, FullSetGivesGamma) {
  const Realization r = realize(GetParam());
  EXPECT_TRUE(eq(r, centralizer_element({1, 2, 3}, r), casimir_gamma(r)));
}

TEST_P(AllRealizations, CentralizerCommutesWithGenerators) {
  const Realization r = realize(GetParam());
  const CentralizerFamily f(r);
  for (const Operator& g : {r.a_plus, r.a_minus, r.a_zero, r.p}) {
    EXPECT_TRUE(eq(r, commutator(f.c(1, 3), g), Operator::zero(3), 3));
    EXPECT_TRUE(eq(r, commutator(f.c(2), g), Operator::zero(3), 3));
  }
}

TEST_P(AllRealizations, EveryApplicableSuitePassesAtLowDegree) {
  const Realization r = realize(GetParam());
  for (const auto& name : suite_names()) {
    if (!suite_supports(name, r.kind)) continue;
    const SuiteReport report = verify_suite(name, r, 2);
    EXPECT_TRUE(report.passed()) << name;
    for (const auto& res : report.results) {
      EXPECT_TRUE(res.passed()) << name << ": " << res.label;
      if (!res.expect_equal) {
        EXPECT_TRUE(res.witness) << name << ": " << res.label;
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Realizations, AllRealizations,
                         ::testing::Values(RealizationKind::kB3Scalar, RealizationKind::kZ2Scalar,
                                           RealizationKind::kB3Clifford),
                         [](const auto& info) {
                           std::string s(realization_name(info.param));
                           for (char& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Centralizer, EmptySetIsRejected) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  EXPECT_THROW(centralizer_element({}, r), StructuralError);
}

TEST(Centralizer, Z2OneIndexElementsAreConstants) {
  const Realization r = realize(RealizationKind::kZ2Scalar);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(eq(r, centralizer_element({i}, r), r.scalar(r.mu[i - 1]), 5));
}

TEST(Centralizer, B3OneIndexElementFromQ) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  const Operator rhs = r.a * (r.q_op(1, 2) + r.q_op(1, 3)) + r.scalar(r.b);
  EXPECT_TRUE(eq(r, centralizer_element({1}, r), rhs, 5));
}

TEST(ClosedForms, TwoIndexFormsMatchConstruction) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  const CentralizerFamily f(r);
  EXPECT_TRUE(eq(r, closed::c_ij_angular(r, 1, 2), f.c(1, 2)));
  EXPECT_TRUE(eq(r, closed::c_ij_compact(r, 2, 3), f.c(2, 3)));
}

TEST(ClosedForms, GammaFormsAgree) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  const Operator gamma = centralizer_element({1, 2, 3}, r);
  EXPECT_TRUE(eq(r, closed::gamma_angular(r), gamma));
  EXPECT_TRUE(eq(r, closed::gamma_jucys_murphy(r), gamma));
}

TEST(ClosedForms, CliffordOneIndexFromW) {
  const Realization r = realize(RealizationKind::kB3Clifford);
  const CentralizerFamily f(r);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(eq(r, closed::c_i_w(r, i), f.c(i), 3));
}

TEST(ClosedForms, DispatchRejectsUnsupportedPairs) {
  const Realization scalar = realize(RealizationKind::kB3Scalar);
  const Realization z2 = realize(RealizationKind::kZ2Scalar);
  EXPECT_THROW(closed_form("O_ij", scalar, {1, 2}), StructuralError);
  EXPECT_THROW(closed_form("C_ij", z2, {1, 2}), StructuralError);
  EXPECT_THROW(closed_form("no-such-form", scalar, {1}), StructuralError);
  EXPECT_NO_THROW(closed_form("Gamma/angular", scalar, {}));
}

// The correspondence between O_ij and C_ij needs the inverse (e_i e_j)^-1 = e_j e_i.
TEST(CliffordCorrespondence, TwoIndexUsesReversedUnits) {
  const Realization r = realize(RealizationKind::kB3Clifford);
  const CentralizerFamily f(r);
  for (auto [i, j] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
    const Operator rr = r.p_i(i) * r.p_i(j);
    const Operator o = closed::o_s(r, {i, j});
    EXPECT_TRUE(eq(r, o * e_product(3, {j, i}) * rr, f.c(i, j), 3));
    const auto literal = operators_equal(o * e_product(3, {i, j}) * rr, f.c(i, j), 3, r.equality_options());
    EXPECT_FALSE(literal.equal());
    EXPECT_TRUE(literal.witness);
  }
}

TEST(CliffordCorrespondence, OneIndexHoldsAsStated) {
  const Realization r = realize(RealizationKind::kB3Clifford);
  const CentralizerFamily f(r);
  for (int i = 1; i <= 3; ++i) EXPECT_TRUE(eq(r, closed::o_s(r, {i}) * e_product(3, {i}) * r.p_i(i), f.c(i), 3));
}

// The explicit O_ij formula holds with S_ij = [D_i, x_j]; reading the
// commutator the other way round flips the sign of the S terms and breaks it.
TEST(CliffordCorrespondence, ExplicitTwoIndexFormulaSign) {
  const Realization r = realize(RealizationKind::kB3Clifford);
  EXPECT_TRUE(eq(r, closed::o_ij_formula(r, 1, 2), closed::o_s(r, {1, 2}), 3));
  auto script = [&](int i, int j) { return commutator(r.x[i - 1], r.d[j - 1]); };
  const ParamPoly half(Rational(1, 2));
  const Operator swapped = m_ij(1, 2, r.d) + half * (script(1, 1) + script(2, 2)) * e_product(3, {1, 2}) -
                           half * script(1, 3) * e_product(3, {2, 3}) + half * script(2, 3) * e_product(3, {1, 3}) -
                           half * e_product(3, {1, 2});
  EXPECT_FALSE(eq(r, swapped, closed::o_s(r, {1, 2}), 3));
}

// The su(1,1) and osp(1,2) Casimirs differ by 3/4, not 3/2.
TEST(CasimirRelation, ConstantIsThreeQuarters) {
  for (auto kind : all_realizations()) {
    const Realization r = realize(kind);
    const Operator gamma = casimir_gamma(r);
    const Operator c_su = ParamPoly(Rational(1, 4)) * (r.a_zero * r.a_zero - r.b_plus * r.b_minus - ParamPoly(2) * r.a_zero);
    const Operator lhs = gamma * gamma - gamma * r.p;
    EXPECT_TRUE(eq(r, lhs, ParamPoly(4) * c_su + r.scalar(Rational(3, 4)), 4)) << realization_name(kind);
    const auto printed = operators_equal(lhs, ParamPoly(4) * c_su + r.scalar(Rational(3, 2)), 4, r.equality_options());
    ASSERT_FALSE(printed.equal());
    EXPECT_EQ(printed.witness->basis.to_string(), "1");
  }
}

TEST(NegativeControl, FlippedQ13BreaksHyperoctahedralSuite) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  const GroupAlgebraElement broken =
      ParamPoly(Rational(1, 2)) * ((ga_r(3, 1) + ga_r(3, 2) - ga_r(3, 1) * ga_r(3, 2) * ga_r(3, 3)) * ga_pi(3, 1, 3));
  const Realization bad = with_q_override(r, 1, 3, broken);
  const SuiteReport report = verify_suite("hyperoct-structure", bad, 2);
  EXPECT_FALSE(report.passed());
  bool witnessed = false;
  for (const auto& res : report.results)
    if (!res.passed() && res.witness) witnessed = true;
  EXPECT_TRUE(witnessed);
  EXPECT_TRUE(verify_suite("hyperoct-structure", r, 2).passed());
}

TEST(Suites, RegistryAndApplicability) {
  EXPECT_TRUE(suite_exists("structure-relations"));
  EXPECT_FALSE(suite_exists("no-such-suite"));
  EXPECT_TRUE(suite_supports("clifford", RealizationKind::kB3Clifford));
  EXPECT_FALSE(suite_supports("clifford", RealizationKind::kB3Scalar));
  EXPECT_FALSE(suite_supports("hyperoct-structure", RealizationKind::kZ2Scalar));
  const Realization z2 = realize(RealizationKind::kZ2Scalar);
  EXPECT_THROW(build_suite("hyperoct-structure", z2), StructuralError);
  EXPECT_THROW(build_suite("no-such-suite", z2), StructuralError);
}

TEST(Suites, StructureRelationsAtDegreeZero) {
  const SuiteReport report = verify_suite("structure-relations", realize(RealizationKind::kB3Scalar), 0);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.degree, 0);
}

TEST(Suites, ParallelVerificationIsDeterministic) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  const SuiteReport serial = verify_suite("involutions", r, 2, {1});
  const SuiteReport parallel = verify_suite("involutions", r, 2, {3});
  ASSERT_EQ(serial.results.size(), parallel.results.size());
  for (std::size_t k = 0; k < serial.results.size(); ++k) {
    EXPECT_EQ(serial.results[k].label, parallel.results[k].label);
    EXPECT_EQ(serial.results[k].sides_equal, parallel.results[k].sides_equal);
  }
}

TEST(Realize, SpecializationAtZeroA) {
  const Realization r = realize(RealizationKind::kB3Scalar, {{"a", 0}});
  EXPECT_TRUE(r.a.is_zero());
  const CentralizerFamily f(r);
  EXPECT_TRUE(eq(r, f.c(1), r.scalar(r.b), 4));
}

TEST(Realize, CheckedConstructionPasses) {
  EXPECT_NO_THROW(realize_checked(RealizationKind::kB3Clifford, 2));
}

}  // namespace
}  // namespace gbi
