#pragma once

#include <map>
#include <string>
#include <vector>

#include "gbi/clifford/clifford_element.hpp"
#include "gbi/exactring/xpoly.hpp"

namespace gbi {

// Basis element x^alpha e_T of the module XPoly (x) Cl(n).
struct BasisKey {
  Monomial mono;
  Blade blade = 0;

  friend bool operator==(const BasisKey&, const BasisKey&) = default;
  std::string to_string() const;  // `x1^2*e2`, "1" for the unit
};

// Storage/print order: monomial in MonomialOrder, then blade ascending.
struct BasisKeyOrder {
  bool operator()(const BasisKey& a, const BasisKey& b) const {
    if (!(a.mono == b.mono)) return MonomialOrder{}(a.mono, b.mono);
    return a.blade < b.blade;
  }
};

// Enumeration order for certificates: degree ascending, x1-heavy first,
// scalar component before Clifford components of the same monomial.
std::vector<BasisKey> module_basis(int n, int max_degree, bool clifford);

// Element of XPoly (x) Cl(n). Clifford units commute with the coordinates
// and with all group actions; polynomials embed as the e_{} component.
class CliffordPoly {
 public:
  using Terms = std::map<BasisKey, ParamPoly, BasisKeyOrder>;

  explicit CliffordPoly(int n = 0) : n_(n) {}
  CliffordPoly(const XPoly& p);  // NOLINT(google-explicit-constructor)
  static CliffordPoly basis(int n, const BasisKey& k, const ParamPoly& c = ParamPoly(1));
  static CliffordPoly from_components(int n, const std::map<Blade, XPoly>& components);

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  XPoly component(Blade b) const;
  std::map<Blade, XPoly> components() const;
  bool is_scalar() const;  // only the e_{} component present

  void add_term(const BasisKey& k, const ParamPoly& c);
  // this += c * other
  void add_scaled(const CliffordPoly& other, const ParamPoly& c);

  CliffordPoly& operator+=(const CliffordPoly& o);
  CliffordPoly& operator-=(const CliffordPoly& o);
  friend CliffordPoly operator+(CliffordPoly a, const CliffordPoly& b) { return a += b; }
  friend CliffordPoly operator-(CliffordPoly a, const CliffordPoly& b) { return a -= b; }
  friend CliffordPoly operator*(const ParamPoly& c, const CliffordPoly& p);
  CliffordPoly operator-() const;
  friend bool operator==(const CliffordPoly& a, const CliffordPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

  // Left multiplication by a Clifford element / by a polynomial.
  friend CliffordPoly operator*(const CliffordElement& u, const CliffordPoly& p);
  friend CliffordPoly operator*(const XPoly& f, const CliffordPoly& p);

  CliffordPoly substitute_params(const Assignment& assignment) const;

  // Expanded text form: `3/2*a^2*x1*x3^2*e1*e2 - x2`.
  std::string to_string() const;

 private:
  void check(const CliffordPoly& o) const;

  int n_;
  Terms terms_;
};

}  // namespace gbi
