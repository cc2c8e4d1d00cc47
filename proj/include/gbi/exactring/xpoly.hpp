#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "gbi/exactring/param_poly.hpp"

namespace gbi {

inline constexpr int kMaxVars = 8;

// Exponent vector of x_1..x_n (dense, unused slots are zero).
struct Monomial {
  std::array<std::uint8_t, kMaxVars> exp{};

  static Monomial one() { return {}; }
  static Monomial var(int i);  // 1-based

  int degree() const;
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial&, const Monomial&) = default;
  std::string to_string() const;  // `x1^2*x3`, "" for 1
};

// Graded lex with x1 > x2 > ... : higher degree first, then lexicographically
// larger exponent vector first. This is the order terms are printed in.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.exp > b.exp;
  }
};

// Canonical enumeration of the graded module basis: degree ascending,
// x1-heavy monomials first inside a degree (1, x1, x2, x3, x1^2, ...).
std::vector<Monomial> monomials_up_to(int n, int max_degree);
std::vector<Monomial> monomials_of_degree(int n, int degree);
bool basis_before(const Monomial& a, const Monomial& b);

// Multivariate polynomial in x_1..x_n over ParamPoly.
class XPoly {
 public:
  using Terms = std::map<Monomial, ParamPoly, MonomialOrder>;

  explicit XPoly(int n = 0);
  XPoly(int n, const ParamPoly& c);
  static XPoly var(int n, int i);
  static XPoly monomial(int n, const Monomial& m, const ParamPoly& c = ParamPoly(1));

  int n() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  ParamPoly coefficient(const Monomial& m) const;

  XPoly& operator+=(const XPoly& o);
  XPoly& operator-=(const XPoly& o);
  friend XPoly operator+(XPoly a, const XPoly& b) { return a += b; }
  friend XPoly operator-(XPoly a, const XPoly& b) { return a -= b; }
  friend XPoly operator*(const XPoly& a, const XPoly& b);
  friend XPoly operator*(const ParamPoly& c, const XPoly& p);
  XPoly operator-() const;
  friend bool operator==(const XPoly& a, const XPoly& b);

  // Adds c * m to the polynomial.
  void add_term(const Monomial& m, const ParamPoly& c);

  XPoly substitute_params(const Assignment& assignment) const;
  // Applies a ring map x_i -> sign_i * x_{target_i} (0-based targets).
  XPoly substitute_vars(const std::array<int, kMaxVars>& target, const std::array<int, kMaxVars>& sign) const;
  XPoly derivative(int i) const;  // 1-based

  std::string to_string() const;

 private:
  void check_compatible(const XPoly& o) const;

  int n_;
  Terms terms_;
};

// One of the three linear divisors the Dunkl operators divide by.
struct LinearDivisor {
  enum class Kind { kVar, kDiff, kSum };
  Kind kind;
  int i;
  int j = 0;

  static LinearDivisor var(int i) { return {Kind::kVar, i, 0}; }
  static LinearDivisor diff(int i, int j) { return {Kind::kDiff, i, j}; }  // x_i - x_j
  static LinearDivisor sum(int i, int j) { return {Kind::kSum, i, j}; }    // x_i + x_j
  XPoly as_poly(int n) const;
  std::string to_string() const;
};

// Returns q with d*q == p; throws ExactnessError on a nonzero remainder.
XPoly divide_exact(const XPoly& p, const LinearDivisor& d);

}  // namespace gbi
