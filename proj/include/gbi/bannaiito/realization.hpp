#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gbi/dunkl/dunkl.hpp"
#include "gbi/opcalc/equality.hpp"

namespace gbi {

enum class RealizationKind {
  kB3Scalar,   // A- = D1 R2 R3 + D2 R3 + D3 with B_3 Dunkl operators
  kZ2Scalar,   // same shape with Z2^3 Dunkl operators (tensor-product case)
  kB3Clifford  // A- = sum D_i e_i, A+ = sum x_i e_i
};

std::string_view realization_name(RealizationKind kind);
std::optional<RealizationKind> parse_realization(std::string_view name);
std::vector<RealizationKind> all_realizations();

// osp(1,2) realized on XPoly (x) Cl(3) with the three supplementary
// involutions P_i = R_i and grade involution P = R1 R2 R3.
struct Realization {
  RealizationKind kind = RealizationKind::kB3Scalar;
  int n = 3;
  const ParamSpace* space = nullptr;
  Assignment specialization;

  DunklKind dunkl;
  ParamPoly a, b;             // B_3 couplings (zero for Z2)
  std::vector<ParamPoly> mu;  // Z2 couplings (empty for B_3)

  std::vector<Operator> d;  // D_i
  std::vector<Operator> x;  // multiplication by x_i
  std::vector<Operator> r;  // R_i, also the involutions P_i
  Operator a_minus, a_plus, a_zero, p;
  Operator b_minus, b_plus;  // A-^2, A+^2

  // Q_ij of the B_3 group algebra keyed by (i<j); empty for Z2.
  std::map<std::pair<int, int>, GroupAlgebraElement> q;

  bool clifford() const { return kind == RealizationKind::kB3Clifford; }
  bool b_type() const { return kind != RealizationKind::kZ2Scalar; }
  EqualityOptions equality_options(int jobs = 1) const { return {clifford(), jobs}; }

  Operator p_i(int i) const { return r.at(i - 1); }
  // Ordered product P_{s_1} ... P_{s_k}.
  Operator p_s(const std::vector<int>& s) const;
  const GroupAlgebraElement& q_element(int i, int j) const;
  Operator q_op(int i, int j) const;
  Operator scalar(const ParamPoly& c) const { return Operator::scalar(n, c); }
  Operator one() const { return Operator::identity(n); }
};

// Builds every bound operator. Parameters stay symbolic unless the
// assignment fixes them (e.g. {a: 0}).
Realization realize(RealizationKind kind, const Assignment& specialization = {});

// Same realization with one Q_ij replaced; used for negative controls.
Realization with_q_override(Realization r, int i, int j, GroupAlgebraElement q);

class RealizationError : public std::runtime_error {
 public:
  RealizationError(const std::string& what, std::string relation, EqualityCertificate cert)
      : std::runtime_error(what), relation_(std::move(relation)), cert_(std::move(cert)) {}
  const std::string& relation() const { return relation_; }
  const EqualityCertificate& certificate() const { return cert_; }

 private:
  std::string relation_;
  EqualityCertificate cert_;
};

// realize() followed by the osp(1,2) and involution hypotheses at the given
// degree; throws RealizationError carrying the failing certificate.
Realization realize_checked(RealizationKind kind, int degree, const Assignment& specialization = {}, int jobs = 1);

}  // namespace gbi
