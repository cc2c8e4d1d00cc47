#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gbi/exactring/param_poly.hpp"
#include "gbi/exactring/xpoly.hpp"
#include "gbi/hyperoct/signed_perm.hpp"

namespace gbi {

// Formal ParamPoly-linear combination of B_n elements.
class GroupAlgebraElement {
 public:
  using Terms = std::map<SignedPerm, ParamPoly>;

  explicit GroupAlgebraElement(int n = 0) : n_(n) {}
  GroupAlgebraElement(const SignedPerm& g, const ParamPoly& c = ParamPoly(1));  // NOLINT
  static GroupAlgebraElement scalar(int n, const ParamPoly& c);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  ParamPoly coefficient(const SignedPerm& g) const;

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  friend GroupAlgebraElement operator+(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a += b; }
  friend GroupAlgebraElement operator-(GroupAlgebraElement a, const GroupAlgebraElement& b) { return a -= b; }
  friend GroupAlgebraElement operator*(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
  friend GroupAlgebraElement operator*(const ParamPoly& c, const GroupAlgebraElement& u);
  GroupAlgebraElement operator-() const;
  friend bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

  XPoly act(const XPoly& f) const;
  GroupAlgebraElement substitute(const Assignment& assignment) const;

  // e.g. `1/2*pi12 + 1/2*R1*pi12 - 1/2*R1*R2*pi12`.
  std::string to_string() const;

 private:
  void add_term(const SignedPerm& g, const ParamPoly& c);
  void check(const GroupAlgebraElement& o) const;

  int n_;
  Terms terms_;
};

GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
GroupAlgebraElement ga_commutator(const GroupAlgebraElement& u, const GroupAlgebraElement& v);
GroupAlgebraElement ga_anticommutator(const GroupAlgebraElement& u, const GroupAlgebraElement& v);

// First group element (in code order) where the two sides differ.
std::optional<SignedPerm> first_difference(const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs);

// All elements of B_n obtained by closing the generators R_i, pi_ij under products.
std::vector<SignedPerm> enumerate_group(int n);

}  // namespace gbi
