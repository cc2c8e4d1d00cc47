#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "gbi/exactring/xpoly.hpp"

namespace gbi {

// Element of the hyperoctahedral group B_n acting on polynomials by the
// ring map x_i -> sign_i * x_{perm(i)}. Products compose as operators:
// in g*h the right factor h acts first.
class SignedPerm {
 public:
  explicit SignedPerm(int n = 0);

  static SignedPerm identity(int n) { return SignedPerm(n); }
  static SignedPerm reflection(int n, int i);             // R_i
  static SignedPerm transposition(int n, int i, int j);  // pi_ij

  int n() const { return n_; }
  int image(int i) const { return perm_[i - 1] + 1; }       // 1-based
  int sign(int i) const { return (signs_ >> (i - 1)) & 1 ? -1 : 1; }
  bool is_identity() const;
  // Dense integer code, unique per (n, element); usable as a map key.
  std::uint64_t code() const;

  friend SignedPerm operator*(const SignedPerm& g, const SignedPerm& h);
  friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.code() == b.code(); }
  friend bool operator<(const SignedPerm& a, const SignedPerm& b) { return a.code() < b.code(); }

  XPoly act(const XPoly& f) const;
  // Image of a single monomial: +-1 times a permuted monomial.
  std::pair<Monomial, int> act(const Monomial& m) const;

  // Generator word such as `R1*R2*pi12`; "1" for the identity.
  std::string to_string() const;

 private:
  int n_;
  std::array<std::uint8_t, kMaxVars> perm_{};  // 0-based images
  std::uint8_t signs_ = 0;                      // bit k set: x_{k+1} picks up a minus sign
};

}  // namespace gbi
