#include "gbi/clifford/clifford_poly.hpp"

#include "gbi/exactring/errors.hpp"

namespace gbi {

std::string BasisKey::to_string() const {
  std::string m = mono.to_string();
  std::string b = blade_string(blade);
  if (m.empty() && b.empty()) return "1";
  if (m.empty()) return b;
  if (b.empty()) return m;
  return m + "*" + b;
}

std::vector<BasisKey> module_basis(int n, int max_degree, bool clifford) {
  std::vector<BasisKey> out;
  const int blades = clifford ? (1 << n) : 1;
  for (const auto& m : monomials_up_to(n, max_degree))
    for (int b = 0; b < blades; ++b) out.push_back({m, static_cast<Blade>(b)});
  return out;
}

CliffordPoly::CliffordPoly(const XPoly& p) : n_(p.n()) {
  for (const auto& [m, c] : p.terms()) terms_.emplace(BasisKey{m, 0}, c);
}

CliffordPoly CliffordPoly::basis(int n, const BasisKey& k, const ParamPoly& c) {
  CliffordPoly r(n);
  r.add_term(k, c);
  return r;
}

CliffordPoly CliffordPoly::from_components(int n, const std::map<Blade, XPoly>& components) {
  CliffordPoly r(n);
  for (const auto& [b, p] : components) {
    if (p.n() != n) throw StructuralError("mismatched variable count");
    for (const auto& [m, c] : p.terms()) r.add_term({m, b}, c);
  }
  return r;
}

XPoly CliffordPoly::component(Blade b) const {
  XPoly r(n_);
  for (const auto& [k, c] : terms_)
    if (k.blade == b) r.add_term(k.mono, c);
  return r;
}

std::map<Blade, XPoly> CliffordPoly::components() const {
  std::map<Blade, XPoly> out;
  for (const auto& [k, c] : terms_) out.try_emplace(k.blade, n_).first->second.add_term(k.mono, c);
  return out;
}

bool CliffordPoly::is_scalar() const {
  for (const auto& [k, c] : terms_)
    if (k.blade != 0) return false;
  return true;
}

void CliffordPoly::check(const CliffordPoly& o) const {
  if (n_ != o.n_) throw StructuralError("mismatched variable count");
}

void CliffordPoly::add_term(const BasisKey& k, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordPoly::add_scaled(const CliffordPoly& other, const ParamPoly& c) {
  check(other);
  if (c.is_zero()) return;
  auto cv = c.constant_value();
  bool unit = cv && *cv == 1;
  for (const auto& [k, v] : other.terms_) add_term(k, unit ? v : c * v);
}

CliffordPoly& CliffordPoly::operator+=(const CliffordPoly& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

CliffordPoly& CliffordPoly::operator-=(const CliffordPoly& o) {
  check(o);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

CliffordPoly operator*(const ParamPoly& c, const CliffordPoly& p) {
  CliffordPoly r(p.n_);
  r.add_scaled(p, c);
  return r;
}

CliffordPoly CliffordPoly::operator-() const {
  CliffordPoly r = *this;
  for (auto& [k, c] : r.terms_) c = -c;
  return r;
}

CliffordPoly operator*(const CliffordElement& u, const CliffordPoly& p) {
  if (u.n() != p.n_) throw StructuralError("mismatched Clifford rank");
  CliffordPoly r(p.n_);
  for (const auto& [s, cs] : u.terms()) {
    for (const auto& [k, c] : p.terms_) {
      ParamPoly v = cs * c;
      r.add_term({k.mono, static_cast<Blade>(s ^ k.blade)}, blade_product_sign(s, k.blade) > 0 ? v : -v);
    }
  }
  return r;
}

CliffordPoly operator*(const XPoly& f, const CliffordPoly& p) {
  if (f.n() != p.n_) throw StructuralError("mismatched variable count");
  CliffordPoly r(p.n_);
  for (const auto& [m, cf] : f.terms())
    for (const auto& [k, c] : p.terms_) r.add_term({m * k.mono, k.blade}, cf * c);
  return r;
}

CliffordPoly CliffordPoly::substitute_params(const Assignment& assignment) const {
  CliffordPoly r(n_);
  for (const auto& [k, c] : terms_) r.add_term(k, c.substitute(assignment));
  return r;
}

std::string CliffordPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    std::string tail = k.mono.to_string();
    std::string b = blade_string(k.blade);
    if (!b.empty()) tail += (tail.empty() ? "" : "*") + b;
    for (const auto& [e, q] : c.terms()) {
      std::string sym = ParamPoly::monomial_string(c.space(), e);
      if (!tail.empty()) sym += (sym.empty() ? "" : "*") + tail;
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
