#pragma once

#include <string>
#include <vector>

#include "gbi/hyperoct/group_algebra.hpp"
#include "gbi/opcalc/operator.hpp"

namespace gbi {

// Which family of Dunkl operators to build, with its coupling values.
// B_n: parameters a (transpositions) and b (reflections).
// Z2^n: one reflection coupling mu_i per coordinate.
struct DunklKind {
  enum class Family { kB, kZ2 };

  Family family = Family::kB;
  int n = 3;
  ParamPoly a;
  ParamPoly b;
  std::vector<ParamPoly> mu;

  static DunklKind b_type(int n, ParamPoly a, ParamPoly b);
  static DunklKind z2(std::vector<ParamPoly> mu);

  DunklKind substitute(const Assignment& assignment) const;
  // Reflection coupling seen by coordinate i (b for B_n, mu_i for Z2^n).
  const ParamPoly& reflection_coupling(int i) const;
  std::string to_string() const;
};

// D_i f = d_i f + b (1 - R_i) f / x_i
//         + a sum_{j != i} [ (1 - pi_ij) f / (x_i - x_j) + (1 - R_i R_j pi_ij) f / (x_i + x_j) ]
// for B_n, and d_i f + mu_i (1 - R_i) f / x_i for Z2^n. All divisions are exact.
XPoly dunkl_action(int i, const DunklKind& kind, const XPoly& f);

Operator dunkl(int i, const DunklKind& kind);

// Closed form of S_ij = [D_i, x_j] in the group algebra:
//   B_n:  delta_ij (1 + a sum_{k != i} (1 + R_i R_k) pi_ik + 2 b R_i) - (1 - delta_ij) a (1 - R_i R_j) pi_ij
//   Z2^n: delta_ij (1 + 2 mu_i R_i)
GroupAlgebraElement s_ij_element(int i, int j, const DunklKind& kind);
Operator s_ij(int i, int j, const DunklKind& kind);

// M_ij = x_i D_j - x_j D_i built from the given Dunkl operators (1-based).
Operator m_ij(int i, int j, const std::vector<Operator>& d);

// Euler operator 1/2 sum_i {x_i, D_i}.
Operator euler(const std::vector<Operator>& d);
// sum_i x_i d_i + constant; for B_n the constant is n/2 + n b + n(n-1) a,
// for Z2^n it is n/2 + sum_i mu_i.
Operator euler_explicit(const DunklKind& kind);

}  // namespace gbi
