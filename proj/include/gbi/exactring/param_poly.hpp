#pragma once

#include <gmpxx.h>

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gbi {

using Rational = mpq_class;

inline constexpr std::size_t kMaxParams = 4;

// Named list of symbolic parameters, e.g. {a, b} or {mu1, mu2, mu3}.
// Instances are interned; compare by pointer.
class ParamSpace {
 public:
  static const ParamSpace* intern(const std::vector<std::string>& names);

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  std::optional<std::size_t> index_of(std::string_view name) const;

  explicit ParamSpace(std::vector<std::string> names) : names_(std::move(names)) {}

 private:
  std::vector<std::string> names_;
};

using ParamExponents = std::array<std::uint8_t, kMaxParams>;

// Partial evaluation map: parameter name -> rational value.
using Assignment = std::map<std::string, Rational>;

// Polynomial in the parameters of a ParamSpace with rational coefficients.
// Terms are kept sorted (graded lex, largest first) with no zero coefficients,
// so equal polynomials have identical term lists. A polynomial without a
// space is a pure constant and combines with any space.
class ParamPoly {
 public:
  using Term = std::pair<ParamExponents, Rational>;

  ParamPoly() = default;
  ParamPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
  ParamPoly(long c);             // NOLINT(google-explicit-constructor)

  static ParamPoly variable(const ParamSpace* space, std::size_t index);
  static ParamPoly variable(const ParamSpace* space, std::string_view name);
  static ParamPoly monomial(const ParamSpace* space, const ParamExponents& exps, const Rational& c);

  const ParamSpace* space() const { return space_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::optional<Rational> constant_value() const;
  int degree() const;

  ParamPoly& operator+=(const ParamPoly& o);
  ParamPoly& operator-=(const ParamPoly& o);
  ParamPoly& operator*=(const ParamPoly& o);
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
  ParamPoly operator-() const;
  friend bool operator==(const ParamPoly& a, const ParamPoly& b);

  ParamPoly pow(unsigned k) const;
  ParamPoly substitute(const Assignment& assignment) const;

  // `3/2*a^2*b - 1`; constants print as plain rationals.
  std::string to_string() const;
  // Printed form of a single parameter monomial without coefficient, "" for 1.
  static std::string monomial_string(const ParamSpace* space, const ParamExponents& exps);

 private:
  void normalize();
  void adopt_space(const ParamSpace* other);

  const ParamSpace* space_ = nullptr;
  std::vector<Term> terms_;
};

std::string rational_string(const Rational& q);

}  // namespace gbi
