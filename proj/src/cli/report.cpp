#include "gbi/cli/report.hpp"

#include <unistd.h>

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>

namespace gbi {

namespace {

using Json = nlohmann::ordered_json;

const char* status_word(bool ok) { return ok ? "pass" : "fail"; }

Json params_json(const Assignment& params) {
  Json out = Json::object();
  for (const auto& [k, v] : params) out[k] = rational_string(v);
  return out;
}

std::string params_text(const Assignment& params) {
  if (params.empty()) return "symbolic";
  std::string out;
  for (const auto& [k, v] : params) {
    if (!out.empty()) out += ", ";
    out += k + "=" + rational_string(v);
  }
  return out;
}

const char* domain_word(Identity::Domain d) {
  return d == Identity::Domain::kGroupAlgebra ? "group-algebra" : "module";
}

// Markdown table cells cannot contain raw pipes.
std::string cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += "\\|";
    else out += c;
  }
  return out;
}

}  // namespace

bool VerificationReport::passed() const { return failure_count() == 0; }

std::size_t VerificationReport::identity_count() const {
  std::size_t k = 0;
  for (const auto& s : suites) k += s.results.size();
  return k;
}

std::size_t VerificationReport::failure_count() const {
  std::size_t k = 0;
  for (const auto& s : suites) k += s.failures();
  return k;
}

std::string render_json(const VerificationReport& report) {
  const RunConfig& c = report.config;
  Json root;
  root["tool"] = kToolName;
  root["version"] = kToolVersion;
  Json config;
  config["realization"] = std::string(realization_name(c.realization));
  config["degree"] = c.degree;
  config["suites"] = report.selected;
  config["params"] = params_json(c.params);
  config["jobs"] = c.jobs;
  root["config"] = config;
  root["status"] = status_word(report.passed());
  root["summary"] = {{"identities", report.identity_count()}, {"failures", report.failure_count()}};
  Json suites = Json::array();
  for (const auto& s : report.suites) {
    Json js;
    js["name"] = s.name;
    js["status"] = status_word(s.passed());
    js["degree"] = s.degree;
    Json ids = Json::array();
    for (const auto& r : s.results) {
      Json ji;
      ji["label"] = r.label;
      ji["anchor"] = r.anchor;
      ji["status"] = status_word(r.passed());
      ji["expect"] = r.expect_equal ? "equal" : "distinct";
      ji["domain"] = domain_word(r.domain);
      if (r.domain == Identity::Domain::kOperator) ji["degree"] = r.degree;
      else ji["degree"] = nullptr;
      if (r.witness) ji["witness"] = {{"at", r.witness->at}, {"lhs", r.witness->lhs}, {"rhs", r.witness->rhs}};
      else ji["witness"] = nullptr;
      if (c.timings) ji["seconds"] = r.seconds;
      ids.push_back(std::move(ji));
    }
    js["identities"] = std::move(ids);
    suites.push_back(std::move(js));
  }
  root["suites"] = std::move(suites);
  return root.dump(2) + "\n";
}

std::string render_markdown(const VerificationReport& report) {
  const RunConfig& c = report.config;
  std::ostringstream md;
  md << "# Verification report\n\n";
  md << "- tool: " << kToolName << " " << kToolVersion << "\n";
  md << "- realization: " << realization_name(c.realization) << "\n";
  md << "- degree bound: " << c.degree << "\n";
  md << "- parameters: " << params_text(c.params) << "\n";
  md << "- status: **" << status_word(report.passed()) << "** (" << report.identity_count() - report.failure_count()
     << "/" << report.identity_count() << " identities)\n";
  for (const auto& s : report.suites) {
    md << "\n## " << s.name << ": " << status_word(s.passed()) << " (" << s.results.size() - s.failures() << "/"
       << s.results.size() << ")\n\n";
    md << "| identity | group | status | certified | witness |";
    if (c.timings) md << " seconds |";
    md << "\n|---|---|---|---|---|";
    if (c.timings) md << "---|";
    md << "\n";
    for (const auto& r : s.results) {
      std::string certified =
          r.domain == Identity::Domain::kGroupAlgebra ? "group algebra" : "degree <= " + std::to_string(r.degree);
      if (!r.expect_equal) certified += ", expected distinct";
      std::string witness;
      if (r.witness) witness = "`" + r.witness->at + "`: `" + r.witness->lhs + "` vs `" + r.witness->rhs + "`";
      md << "| `" << cell(r.label) << "` | " << cell(r.anchor) << " | " << status_word(r.passed()) << " | "
         << certified << " | " << cell(witness) << " |";
      if (c.timings) md << " " << r.seconds << " |";
      md << "\n";
    }
  }
  return md.str();
}

std::string render(const VerificationReport& report, ReportFormat format) {
  return format == ReportFormat::kJson ? render_json(report) : render_markdown(report);
}

void write_atomic(const std::filesystem::path& path, const std::string& contents) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw std::runtime_error("cannot open " + tmp.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) throw std::runtime_error("failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move report into place at " + path.string() + ": " + ec.message());
  }
}

}  // namespace gbi
