#include "gbi/clifford/clifford_element.hpp"

#include <bit>

#include "gbi/exactring/errors.hpp"
#include "gbi/exactring/xpoly.hpp"

namespace gbi {

int blade_product_sign(Blade s, Blade t) {
  // Moving each e_j of T left past the e_i of S with i > j costs one sign.
  int swaps = 0;
  for (int j = 0; j < 8; ++j) {
    if (!((t >> j) & 1)) continue;
    unsigned above = static_cast<unsigned>(s) >> (j + 1);
    swaps += std::popcount(above);
  }
  return (swaps & 1) ? -1 : 1;
}

int blade_grade(Blade b) { return std::popcount(static_cast<unsigned>(b)); }

std::string blade_string(Blade b) {
  std::string s;
  for (int k = 0; k < 8; ++k) {
    if (!((b >> k) & 1)) continue;
    if (!s.empty()) s += '*';
    s += "e" + std::to_string(k + 1);
  }
  return s;
}

CliffordElement CliffordElement::scalar(int n, const ParamPoly& c) { return blade(n, 0, c); }

CliffordElement CliffordElement::generator(int n, int i) {
  if (i < 1 || i > n) throw StructuralError("Clifford generator index out of range");
  return blade(n, static_cast<Blade>(1u << (i - 1)));
}

CliffordElement CliffordElement::product(int n, const std::vector<int>& indices) {
  CliffordElement r = scalar(n, 1);
  for (int i : indices) r = r * generator(n, i);
  return r;
}

CliffordElement CliffordElement::blade(int n, Blade b, const ParamPoly& c) {
  if (n < 0 || n > kMaxVars) throw StructuralError("Clifford rank out of range");
  if (n < 8 && (b >> n) != 0) throw StructuralError("blade outside Cl(n)");
  CliffordElement r(n);
  r.add_term(b, c);
  return r;
}

void CliffordElement::add_term(Blade b, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordElement::check(const CliffordElement& o) const {
  if (n_ != o.n_) throw StructuralError("mismatched Clifford rank");
}

CliffordElement& CliffordElement::operator+=(const CliffordElement& o) {
  check(o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

CliffordElement& CliffordElement::operator-=(const CliffordElement& o) {
  check(o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

CliffordElement CliffordElement::operator-() const {
  CliffordElement r = *this;
  for (auto& [b, c] : r.terms_) c = -c;
  return r;
}

CliffordElement operator*(const CliffordElement& u, const CliffordElement& v) {
  u.check(v);
  CliffordElement r(u.n_);
  for (const auto& [s, cs] : u.terms_) {
    for (const auto& [t, ct] : v.terms_) {
      ParamPoly c = cs * ct;
      r.add_term(static_cast<Blade>(s ^ t), blade_product_sign(s, t) > 0 ? c : -c);
    }
  }
  return r;
}

CliffordElement operator*(const ParamPoly& c, const CliffordElement& u) {
  CliffordElement r(u.n_);
  for (const auto& [b, cb] : u.terms_) r.add_term(b, c * cb);
  return r;
}

CliffordElement cl_mul(const CliffordElement& u, const CliffordElement& v) { return u * v; }

std::string CliffordElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [b, c] : terms_) {
    std::string blade = blade_string(b);
    for (const auto& [e, q] : c.terms()) {
      std::string sym = ParamPoly::monomial_string(c.space(), e);
      if (!blade.empty()) sym += (sym.empty() ? "" : "*") + blade;
      Rational mag = abs(q);
      std::string body = sym.empty() ? rational_string(mag) : (mag == 1 ? sym : rational_string(mag) + "*" + sym);
      out += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
      out += body;
      first = false;
    }
  }
  return out;
}

}  // namespace gbi
