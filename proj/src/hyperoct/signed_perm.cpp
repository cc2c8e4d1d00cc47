#include "gbi/hyperoct/signed_perm.hpp"

#include <algorithm>

#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

void check(int n, int i) {
  if (i < 1 || i > n) throw StructuralError("group index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

}  // namespace

SignedPerm::SignedPerm(int n) : n_(n) {
  if (n < 0 || n > kMaxVars) throw StructuralError("group rank out of range");
  for (int k = 0; k < kMaxVars; ++k) perm_[k] = static_cast<std::uint8_t>(k);
}

SignedPerm SignedPerm::reflection(int n, int i) {
  check(n, i);
  SignedPerm g(n);
  g.signs_ = static_cast<std::uint8_t>(1u << (i - 1));
  return g;
}

SignedPerm SignedPerm::transposition(int n, int i, int j) {
  check(n, i);
  check(n, j);
  if (i == j) throw StructuralError("transposition needs distinct indices");
  SignedPerm g(n);
  std::swap(g.perm_[i - 1], g.perm_[j - 1]);
  return g;
}

bool SignedPerm::is_identity() const {
  if (signs_ != 0) return false;
  for (int k = 0; k < n_; ++k)
    if (perm_[k] != k) return false;
  return true;
}

std::uint64_t SignedPerm::code() const {
  std::uint64_t c = static_cast<std::uint64_t>(n_);
  for (int k = 0; k < n_; ++k) c = c * 8 + perm_[k];
  return (c << 8) | signs_;
}

SignedPerm operator*(const SignedPerm& g, const SignedPerm& h) {
  if (g.n_ != h.n_) throw StructuralError("mismatched group rank");
  // h: x_i -> t_i x_{tau(i)}, then g: x_m -> s_m x_{sigma(m)}.
  SignedPerm r(g.n_);
  std::uint8_t signs = 0;
  for (int i = 0; i < g.n_; ++i) {
    int t = h.perm_[i];
    r.perm_[i] = g.perm_[t];
    bool neg = (((h.signs_ >> i) ^ (g.signs_ >> t)) & 1) != 0;
    if (neg) signs = static_cast<std::uint8_t>(signs | (1u << i));
  }
  r.signs_ = signs;
  return r;
}

std::pair<Monomial, int> SignedPerm::act(const Monomial& m) const {
  Monomial out;
  int s = 1;
  for (int k = 0; k < n_; ++k) {
    out.exp[perm_[k]] = m.exp[k];
    if (((signs_ >> k) & 1) && (m.exp[k] & 1)) s = -s;
  }
  return {out, s};
}

XPoly SignedPerm::act(const XPoly& f) const {
  if (f.n() != n_) throw StructuralError("mismatched variable count");
  XPoly r(n_);
  for (const auto& [m, c] : f.terms()) {
    auto [img, s] = act(m);
    r.add_term(img, s > 0 ? c : -c);
  }
  return r;
}

std::string SignedPerm::to_string() const {
  // g = R_K * pi_sigma with K = {sigma(i) : x_i flips sign}.
  std::vector<std::string> word;
  std::uint8_t k_mask = 0;
  for (int i = 0; i < n_; ++i)
    if ((signs_ >> i) & 1) k_mask = static_cast<std::uint8_t>(k_mask | (1u << perm_[i]));
  for (int i = 0; i < n_; ++i)
    if ((k_mask >> i) & 1) word.push_back("R" + std::to_string(i + 1));

  // Peel transpositions off the left: sigma = (i k) o sigma'.
  std::array<int, kMaxVars> cur{};
  for (int i = 0; i < n_; ++i) cur[i] = perm_[i];
  for (int i = n_ - 1; i >= 0; --i) {
    int k = cur[i];
    if (k == i) continue;
    word.push_back("pi" + std::to_string(std::min(i, k) + 1) + std::to_string(std::max(i, k) + 1));
    for (int m = 0; m < n_; ++m) {
      if (cur[m] == i) cur[m] = k;
      else if (cur[m] == k) cur[m] = i;
    }
  }
  if (word.empty()) return "1";
  std::string s = word[0];
  for (std::size_t t = 1; t < word.size(); ++t) s += "*" + word[t];
  return s;
}

}  // namespace gbi
