#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "gbi/cli/run.hpp"
#include "gbi/cli/text.hpp"
#include "gbi/exactring/errors.hpp"
#include "helpers.hpp"

namespace gbi {
namespace {

using test::X;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "bi_verify");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

TEST(ParsePoly, MixedExpression) {
  const CliffordPoly p = parse_poly("x1^2*x2 - 3*a*x3", 3, test::ab_space());
  EXPECT_EQ(p, CliffordPoly(X(1) * X(1) * X(2) - ParamPoly(3) * test::pa() * X(3)));
}

TEST(ParsePoly, UnitsCommuteWithCoordinates) {
  EXPECT_EQ(parse_poly("e1*e2*x1", 3, test::ab_space()), parse_poly("x1*e1*e2", 3, test::ab_space()));
  EXPECT_EQ(parse_poly("e2*e1", 3, test::ab_space()), -parse_poly("e1*e2", 3, test::ab_space()));
}

TEST(ParsePoly, ZeroIndexIsRejectedWithOffset) {
  try {
    parse_poly("x0", 3, test::ab_space());
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 0u);
    EXPECT_NE(std::string(e.what()).find("index"), std::string::npos);
  }
  EXPECT_THROW(parse_poly("x1 + c", 3, test::ab_space()), ParseError);
  EXPECT_THROW(parse_poly("x1 +", 3, test::ab_space()), ParseError);
  EXPECT_THROW(parse_poly("(x1", 3, test::ab_space()), ParseError);
}

TEST(ParsePoly, RationalsAndGrouping) {
  EXPECT_EQ(parse_poly("(1 + a)*x1^2 - 1/2*b", 3, test::ab_space()),
            CliffordPoly((ParamPoly(1) + test::pa()) * (X(1) * X(1)) + test::C(ParamPoly(Rational(-1, 2)) * test::pb())));
}

// Property: the printed form of a random module element parses back to itself.
TEST(ParsePolyProperty, PrintParseRoundTrip) {
  test::PolyGen gen(101);
  for (int trial = 0; trial < 100; ++trial) {
    const CliffordPoly p = gen.module_element(3, 4, 4);
    EXPECT_EQ(parse_poly(p.to_string(), 3, test::ab_space()), p) << p.to_string();
  }
}

TEST(ParseRational, Forms) {
  EXPECT_EQ(*parse_rational("3"), Rational(3));
  EXPECT_EQ(*parse_rational("-3/4"), Rational(-3, 4));
  EXPECT_FALSE(parse_rational("1/0"));
  EXPECT_FALSE(parse_rational("x"));
  EXPECT_FALSE(parse_rational(""));
}

TEST(ParseOperator, NamedOperators) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  const CliffordPoly one = CliffordPoly(test::C(1));
  EXPECT_EQ(parse_operator("D_1", r).apply(CliffordPoly(X(1))).to_string(), "4*a + 2*b + 1");
  EXPECT_EQ(parse_operator("D1", r).apply(CliffordPoly(X(1))), parse_operator("D_{1}", r).apply(CliffordPoly(X(1))));
  EXPECT_EQ(parse_operator("Q_12 + Q_13", r).apply(one).to_string(), "2");
  EXPECT_EQ(parse_operator("[A_minus, A_plus]", r).apply(one).to_string(), "12*a + 6*b + 3");
  EXPECT_EQ(parse_operator("{A_minus, A_plus} - 2*A_0", r).apply(CliffordPoly(X(1) * X(2))).to_string(), "0");
  EXPECT_TRUE(parse_operator("R_1^2 - 1", r).apply(CliffordPoly(X(1))).is_zero());
}

TEST(ParseOperator, ErrorsCarryOffsets) {
  const Realization r = realize(RealizationKind::kB3Scalar);
  try {
    parse_operator("D_1 + Foo", r);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 6u);
  }
  EXPECT_THROW(parse_operator("D_4", r), ParseError);
  EXPECT_THROW(parse_operator("[D_1, D_2", r), ParseError);
}

TEST(CliApply, SpecExamples) {
  auto res = cli({"apply", "D_1", "x1"});
  EXPECT_EQ(res.code, 0);
  EXPECT_EQ(res.out, "4*a + 2*b + 1\n");
  EXPECT_EQ(cli({"apply", "Q_12 + Q_13", "1"}).out, "2\n");
  EXPECT_EQ(cli({"apply", "--realization", "b3-clifford", "Z_1", "x1"}).out, "-x1*e1\n");
  EXPECT_EQ(cli({"apply", "--param", "a=1/2", "--param", "b=0", "D_1", "x1"}).out, "3\n");
}

TEST(CliApply, ParseErrorExitsTwo) {
  auto res = cli({"apply", "D_1", "x0"});
  EXPECT_EQ(res.code, kExitUsage);
  EXPECT_NE(res.err.find("offset 0"), std::string::npos);
}

TEST(CliVerify, ExitCodes) {
  EXPECT_EQ(cli({"verify", "--suite", "no-such-suite"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--suite", "clifford"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--degree", "-1"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--param", "mu1=1"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--realization", "b9"}).code, kExitUsage);
  EXPECT_EQ(cli({"verify", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(cli({"--help"}).code, kExitPass);
}

TEST(CliVerify, DegreeZeroStructureRelations) {
  auto res = cli({"verify", "--realization", "b3-scalar", "--suite", "structure-relations", "--degree", "0"});
  EXPECT_EQ(res.code, kExitPass);
  const auto j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["config"]["degree"], 0);
  EXPECT_EQ(j["suites"][0]["name"], "structure-relations");
}

TEST(CliVerify, ReportFileIsWrittenAndStable) {
  const auto dir = std::filesystem::temp_directory_path() / ("bi_verify_test_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(dir);
  const auto path = (dir / "report.json").string();
  const std::vector<std::string> args = {"verify", "--realization", "z2-scalar", "--suite", "bi-reduction",
                                         "--degree", "2", "--out", path};
  ASSERT_EQ(cli(args).code, kExitPass);
  std::ifstream f1(path);
  const std::string first((std::istreambuf_iterator<char>(f1)), {});
  ASSERT_EQ(cli(args).code, kExitPass);
  std::ifstream f2(path);
  const std::string second((std::istreambuf_iterator<char>(f2)), {});
  EXPECT_EQ(first, second);
  const auto j = nlohmann::json::parse(first);
  EXPECT_EQ(j["tool"], kToolName);
  EXPECT_GT(j["summary"]["identities"].get<int>(), 0);
  EXPECT_EQ(j["summary"]["failures"], 0);
  std::filesystem::remove_all(dir);
}

TEST(CliVerify, MarkdownFormat) {
  auto res = cli({"verify", "--suite", "involutions", "--degree", "1", "--format", "markdown"});
  EXPECT_EQ(res.code, kExitPass);
  EXPECT_NE(res.out.find("## involutions: pass"), std::string::npos);
}

TEST(CliVerify, FailedIdentityMarksReportFailed) {
  RunConfig config;
  config.realization = RealizationKind::kB3Scalar;
  config.degree = 1;
  config.suites = {"hyperoct-structure"};
  VerificationReport report = run_suites(config);
  ASSERT_TRUE(report.passed());
  report.suites[0].results[0].sides_equal = !report.suites[0].results[0].sides_equal;
  EXPECT_FALSE(report.passed());
  const auto j = nlohmann::json::parse(render_json(report));
  EXPECT_EQ(j["status"], "fail");
  EXPECT_EQ(j["summary"]["failures"], 1);
}

TEST(CliSuites, ListsRegistry) {
  auto res = cli({"suites"});
  EXPECT_EQ(res.code, 0);
  EXPECT_NE(res.out.find("clifford: b3-clifford\n"), std::string::npos);
}

}  // namespace
}  // namespace gbi
