#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gbi/bannaiito/realization.hpp"

namespace gbi {

// One relation to verify. Operator identities are compared on the module
// basis up to the requested degree; group-algebra identities are exact in
// the group algebra of B_3.
struct Identity {
  enum class Domain { kOperator, kGroupAlgebra };

  std::string label;
  std::string anchor;
  Domain domain = Domain::kOperator;
  Operator lhs, rhs;
  GroupAlgebraElement ga_lhs, ga_rhs;
  bool expect_equal = true;
};

// Text rendering of the first point where the two sides differ: a module
// basis element with both images, or a group element with both coefficients.
struct WitnessText {
  std::string at;
  std::string lhs;
  std::string rhs;
};

struct IdentityResult {
  std::string label;
  std::string anchor;
  Identity::Domain domain = Identity::Domain::kOperator;
  bool expect_equal = true;
  bool sides_equal = true;
  int degree = 0;  // meaningful for operator identities
  std::optional<WitnessText> witness;
  double seconds = 0;

  bool passed() const { return sides_equal == expect_equal; }
};

struct SuiteReport {
  std::string name;
  int degree = 0;
  std::vector<IdentityResult> results;

  bool passed() const;
  std::size_t failures() const;
};

struct VerifyOptions {
  int jobs = 1;
};

// Registered suite names, in report order.
std::vector<std::string> suite_names();
bool suite_exists(std::string_view name);
bool suite_supports(std::string_view name, RealizationKind kind);

// Throws StructuralError when the suite is unknown or does not apply to r.
std::vector<Identity> build_suite(std::string_view name, const Realization& r);
SuiteReport verify_identities(std::string name, const std::vector<Identity>& ids, const Realization& r, int degree,
                              const VerifyOptions& options = {});
SuiteReport verify_suite(std::string_view name, const Realization& r, int degree, const VerifyOptions& options = {});

}  // namespace gbi
