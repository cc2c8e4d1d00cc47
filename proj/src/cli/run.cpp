#include "gbi/cli/run.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "gbi/cli/text.hpp"
#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

std::vector<std::string> parameter_names(RealizationKind kind) {
  if (kind == RealizationKind::kZ2Scalar) return {"mu1", "mu2", "mu3"};
  return {"a", "b"};
}

Assignment parse_params(const std::vector<std::string>& items) {
  Assignment out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + item + "'");
    const std::string name = item.substr(0, eq);
    auto value = parse_rational(item.substr(eq + 1));
    if (!value) throw UsageError("--param value for '" + name + "' is not a rational number");
    if (out.count(name)) throw UsageError("--param '" + name + "' given twice");
    out[name] = *value;
  }
  return out;
}

RealizationKind parse_kind(const std::string& name) {
  auto k = parse_realization(name);
  if (!k) throw UsageError("unknown realization '" + name + "' (expected b3-scalar, z2-scalar or b3-clifford)");
  return *k;
}

void print_parse_error(std::ostream& err, const std::string& what, std::string_view text, const ParseError& e) {
  err << "error: cannot parse " << what << ": " << e.what() << "\n  " << text << "\n  "
      << std::string(std::min(e.offset(), text.size()), ' ') << "^\n";
}

}  // namespace

std::vector<std::string> validate(const RunConfig& config) {
  if (config.degree < 0) throw UsageError("--degree must be non-negative");
  if (config.jobs < 1) throw UsageError("--jobs must be at least 1");
  const auto names = parameter_names(config.realization);
  for (const auto& [k, v] : config.params)
    if (std::find(names.begin(), names.end(), k) == names.end())
      throw UsageError("parameter '" + k + "' does not belong to realization " +
                       std::string(realization_name(config.realization)));
  std::vector<std::string> selected;
  const bool all = config.suites.empty() ||
                   std::find(config.suites.begin(), config.suites.end(), "all") != config.suites.end();
  for (const auto& s : config.suites)
    if (s != "all" && !suite_exists(s)) throw UsageError("unknown suite '" + s + "'");
  if (all) {
    for (const auto& s : suite_names())
      if (suite_supports(s, config.realization)) selected.push_back(s);
    return selected;
  }
  for (const auto& s : suite_names()) {
    if (std::find(config.suites.begin(), config.suites.end(), s) == config.suites.end()) continue;
    if (!suite_supports(s, config.realization))
      throw UsageError("suite '" + s + "' does not apply to realization " +
                       std::string(realization_name(config.realization)));
    selected.push_back(s);
  }
  return selected;
}

VerificationReport run_suites(const RunConfig& config, std::ostream* progress) {
  VerificationReport report;
  report.config = config;
  report.selected = validate(config);
  const Realization r = realize_checked(config.realization, config.degree, config.params, config.jobs);
  for (const auto& name : report.selected) {
    SuiteReport s = verify_suite(name, r, config.degree, {config.jobs});
    if (progress)
      *progress << "[" << name << "] " << s.results.size() << " identities, " << s.failures() << " failures"
                << std::endl;
    report.suites.push_back(std::move(s));
  }
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  VerificationReport report;
  try {
    report = run_suites(config, &err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RealizationError& e) {
    err << "error: " << e.what() << "\n";
    if (const auto& w = e.certificate().witness)
      err << "  at " << w->basis.to_string() << ": " << w->lhs.to_string() << " vs " << w->rhs.to_string() << "\n";
    return kExitIdentityFailure;
  }
  const std::string text = render(report, config.format);
  if (config.out) {
    try {
      write_atomic(*config.out, text);
    } catch (const std::exception& e) {
      err << "error: " << e.what() << "\n";
      return kExitUsage;
    }
  } else {
    out << text;
  }
  err << (report.passed() ? "PASS" : "FAIL") << ": " << report.identity_count() - report.failure_count() << "/"
      << report.identity_count() << " identities at degree " << config.degree << "\n";
  return report.passed() ? kExitPass : kExitIdentityFailure;
}

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of centralizer identities for Dunkl realizations of osp(1,2)"};
  app.name(kToolName);
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);

  std::string realization = "b3-scalar";
  int degree = 6;
  std::vector<std::string> suites;
  std::vector<std::string> params;
  std::string out_path;
  std::string format = "json";
  int jobs = 1;
  bool timings = false;

  auto* verify = app.add_subcommand("verify", "Run verification suites and write a report");
  verify->add_option("--realization", realization, "b3-scalar | z2-scalar | b3-clifford")->capture_default_str();
  verify->add_option("--degree", degree, "Degree bound D of the module basis")->capture_default_str();
  verify->add_option("--suite", suites, "Suite to run (repeatable); 'all' selects every applicable suite");
  verify->add_option("--param", params, "Parameter specialization name=value (repeatable)");
  verify->add_option("--out", out_path, "Report file (default: standard output)");
  verify->add_option("--format", format, "json | markdown")
      ->check(CLI::IsMember({"json", "markdown"}))
      ->capture_default_str();
  verify->add_option("--jobs", jobs, "Worker threads")->capture_default_str();
  verify->add_flag("--timings", timings, "Include wall times in the report");

  std::string expr, poly;
  auto* apply = app.add_subcommand("apply", "Apply an operator expression to a polynomial");
  apply->add_option("--realization", realization, "b3-scalar | z2-scalar | b3-clifford")->capture_default_str();
  apply->add_option("--param", params, "Parameter specialization name=value (repeatable)");
  apply->add_option("expression", expr, "Operator expression, e.g. \"[A_minus, A_plus]\"")->required();
  apply->add_option("polynomial", poly, "Polynomial, e.g. \"x1^2*e2 - a*x3\"")->required();

  auto* list = app.add_subcommand("suites", "List suites and the realizations they apply to");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& s : suite_names()) {
        out << s << ":";
        for (auto k : all_realizations())
          if (suite_supports(s, k)) out << " " << realization_name(k);
        out << "\n";
      }
      return kExitPass;
    }
    RunConfig config;
    config.realization = parse_kind(realization);
    config.params = parse_params(params);
    if (*verify) {
      config.degree = degree;
      config.suites = suites;
      if (!out_path.empty()) config.out = out_path;
      config.format = format == "markdown" ? ReportFormat::kMarkdown : ReportFormat::kJson;
      config.jobs = jobs;
      config.timings = timings;
      return run(config, out, err);
    }
    validate(config);
    const Realization r = realize(config.realization, config.params);
    Operator op;
    try {
      op = parse_operator(expr, r);
    } catch (const ParseError& e) {
      print_parse_error(err, "expression", expr, e);
      return kExitUsage;
    }
    CliffordPoly f;
    try {
      f = parse_poly(poly, r.n, r.space).substitute_params(r.specialization);
    } catch (const ParseError& e) {
      print_parse_error(err, "polynomial", poly, e);
      return kExitUsage;
    }
    out << op.apply(f).to_string() << "\n";
    return kExitPass;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace gbi
