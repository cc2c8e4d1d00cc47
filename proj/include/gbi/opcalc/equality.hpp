#pragma once

#include <optional>

#include "gbi/opcalc/operator.hpp"

namespace gbi {

struct Witness {
  BasisKey basis;
  CliffordPoly lhs;
  CliffordPoly rhs;
};

// Result of comparing two operators on every module basis element of
// degree <= degree_bound. Equality on the basis is equality on the whole
// truncated module by linearity.
struct EqualityCertificate {
  enum class Status { kEqualToDegree, kCounterexample };

  int degree_bound = 0;
  Status status = Status::kEqualToDegree;
  std::optional<Witness> witness;

  bool equal() const { return status == Status::kEqualToDegree; }
};

struct EqualityOptions {
  bool clifford = false;  // include e_T components, T != {}
  int jobs = 1;
};

// Applies both sides to the module basis in canonical order and returns the
// first failing basis element. Any witness is re-evaluated before returning;
// a witness that does not reproduce is reported as std::logic_error.
EqualityCertificate operators_equal(const Operator& lhs, const Operator& rhs, int degree_bound,
                                    const EqualityOptions& options = {});

}  // namespace gbi
