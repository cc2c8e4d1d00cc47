#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gbi/exactring/param_poly.hpp"

namespace gbi {

// Subset S of {1..n} as a bitmask; bit k stands for e_{k+1}.
using Blade = std::uint8_t;

// Sign of e_S * e_T = sign * e_{S xor T} in Cl(n) with e_i^2 = +1.
int blade_product_sign(Blade s, Blade t);
std::string blade_string(Blade b);  // `e1*e3`, "" for the unit
int blade_grade(Blade b);

// Element of the Euclidean Clifford algebra Cl(n) over ParamPoly.
class CliffordElement {
 public:
  using Terms = std::map<Blade, ParamPoly>;

  explicit CliffordElement(int n = 0) : n_(n) {}
  static CliffordElement scalar(int n, const ParamPoly& c);
  static CliffordElement generator(int n, int i);  // e_i
  // Ordered product e_{s_1} ... e_{s_k}; repeated indices are allowed.
  static CliffordElement product(int n, const std::vector<int>& indices);
  static CliffordElement blade(int n, Blade b, const ParamPoly& c = ParamPoly(1));

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  CliffordElement& operator+=(const CliffordElement& o);
  CliffordElement& operator-=(const CliffordElement& o);
  friend CliffordElement operator+(CliffordElement a, const CliffordElement& b) { return a += b; }
  friend CliffordElement operator-(CliffordElement a, const CliffordElement& b) { return a -= b; }
  friend CliffordElement operator*(const CliffordElement& u, const CliffordElement& v);
  friend CliffordElement operator*(const ParamPoly& c, const CliffordElement& u);
  CliffordElement operator-() const;
  friend bool operator==(const CliffordElement& a, const CliffordElement& b) {
    return a.n_ == b.n_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void add_term(Blade b, const ParamPoly& c);
  void check(const CliffordElement& o) const;

  int n_;
  Terms terms_;
};

CliffordElement cl_mul(const CliffordElement& u, const CliffordElement& v);

}  // namespace gbi
