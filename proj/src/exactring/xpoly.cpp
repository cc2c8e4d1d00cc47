#include "gbi/exactring/xpoly.hpp"

#include <algorithm>

#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

void check_index(int n, int i) {
  if (i < 1 || i > n) throw StructuralError("variable index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}

void enumerate(int n, int var, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var == n - 1) {
    cur.exp[var] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    cur.exp[var] = 0;
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur.exp[var] = static_cast<std::uint8_t>(e);
    enumerate(n, var + 1, remaining - e, cur, out);
  }
  cur.exp[var] = 0;
}

}  // namespace

Monomial Monomial::var(int i) {
  if (i < 1 || i > kMaxVars) throw StructuralError("variable index out of range");
  Monomial m;
  m.exp[i - 1] = 1;
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int k = 0; k < kMaxVars; ++k) r.exp[k] = static_cast<std::uint8_t>(a.exp[k] + b.exp[k]);
  return r;
}

std::string Monomial::to_string() const {
  std::string s;
  for (int k = 0; k < kMaxVars; ++k) {
    if (exp[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += "x" + std::to_string(k + 1);
    if (exp[k] > 1) s += "^" + std::to_string(exp[k]);
  }
  return s;
}

std::vector<Monomial> monomials_of_degree(int n, int degree) {
  std::vector<Monomial> out;
  if (n <= 0 || degree < 0) {
    if (n == 0 && degree == 0) out.push_back(Monomial::one());
    return out;
  }
  Monomial cur;
  enumerate(n, 0, degree, cur, out);
  return out;
}

std::vector<Monomial> monomials_up_to(int n, int max_degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= max_degree; ++d) {
    auto part = monomials_of_degree(n, d);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

bool basis_before(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  return a.exp > b.exp;
}

XPoly::XPoly(int n) : n_(n) {
  if (n < 0 || n > kMaxVars) throw StructuralError("variable count out of range");
}

XPoly::XPoly(int n, const ParamPoly& c) : XPoly(n) {
  if (!c.is_zero()) terms_.emplace(Monomial::one(), c);
}

XPoly XPoly::var(int n, int i) {
  check_index(n, i);
  return monomial(n, Monomial::var(i));
}

XPoly XPoly::monomial(int n, const Monomial& m, const ParamPoly& c) {
  XPoly p(n);
  for (int k = n; k < kMaxVars; ++k)
    if (m.exp[k] != 0) throw StructuralError("monomial uses a variable beyond n");
  if (!c.is_zero()) p.terms_.emplace(m, c);
  return p;
}

int XPoly::degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

ParamPoly XPoly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void XPoly::check_compatible(const XPoly& o) const {
  if (n_ != o.n_) throw StructuralError("mismatched variable count");
}

void XPoly::add_term(const Monomial& m, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

XPoly& XPoly::operator+=(const XPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

XPoly& XPoly::operator-=(const XPoly& o) {
  check_compatible(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

XPoly XPoly::operator-() const {
  XPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

XPoly operator*(const XPoly& a, const XPoly& b) {
  a.check_compatible(b);
  XPoly r(a.n_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

XPoly operator*(const ParamPoly& c, const XPoly& p) {
  XPoly r(p.n_);
  if (c.is_zero()) return r;
  for (const auto& [m, v] : p.terms_) r.add_term(m, c * v);
  return r;
}

bool operator==(const XPoly& a, const XPoly& b) { return a.n_ == b.n_ && a.terms_ == b.terms_; }

XPoly XPoly::substitute_params(const Assignment& assignment) const {
  XPoly r(n_);
  for (const auto& [m, c] : terms_) r.add_term(m, c.substitute(assignment));
  return r;
}

XPoly XPoly::substitute_vars(const std::array<int, kMaxVars>& target, const std::array<int, kMaxVars>& sign) const {
  XPoly r(n_);
  for (const auto& [m, c] : terms_) {
    Monomial out;
    int s = 1;
    for (int k = 0; k < n_; ++k) {
      out.exp[target[k]] = static_cast<std::uint8_t>(out.exp[target[k]] + m.exp[k]);
      if (sign[k] < 0 && (m.exp[k] & 1)) s = -s;
    }
    r.add_term(out, s > 0 ? c : -c);
  }
  return r;
}

XPoly XPoly::derivative(int i) const {
  check_index(n_, i);
  XPoly r(n_);
  for (const auto& [m, c] : terms_) {
    int e = m.exp[i - 1];
    if (e == 0) continue;
    Monomial out = m;
    out.exp[i - 1] = static_cast<std::uint8_t>(e - 1);
    r.add_term(out, ParamPoly(e) * c);
  }
  return r;
}

std::string XPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string mono = m.to_string();
    for (const auto& [e, q] : c.terms()) {
      Rational mag = abs(q);
      std::string pm = ParamPoly::monomial_string(c.space(), e);
      std::string body;
      std::string sym = pm;
      if (!mono.empty()) sym += (sym.empty() ? "" : "*") + mono;
      if (sym.empty()) body = rational_string(mag);
      else if (mag == 1) body = sym;
      else body = rational_string(mag) + "*" + sym;
      out += first ? (q < 0 ? "-" : "") : (q < 0 ? " - " : " + ");
      out += body;
      first = false;
    }
  }
  return out;
}

XPoly LinearDivisor::as_poly(int n) const {
  switch (kind) {
    case Kind::kVar: return XPoly::var(n, i);
    case Kind::kDiff: return XPoly::var(n, i) - XPoly::var(n, j);
    case Kind::kSum: return XPoly::var(n, i) + XPoly::var(n, j);
  }
  return XPoly(n);
}

std::string LinearDivisor::to_string() const {
  switch (kind) {
    case Kind::kVar: return "x" + std::to_string(i);
    case Kind::kDiff: return "x" + std::to_string(i) + " - x" + std::to_string(j);
    case Kind::kSum: return "x" + std::to_string(i) + " + x" + std::to_string(j);
  }
  return {};
}

XPoly divide_exact(const XPoly& p, const LinearDivisor& d) {
  const int n = p.n();
  check_index(n, d.i);
  if (d.kind != LinearDivisor::Kind::kVar) {
    check_index(n, d.j);
    if (d.i == d.j) throw StructuralError("degenerate divisor");
  }
  const int vi = d.i - 1;
  XPoly q(n);

  if (d.kind == LinearDivisor::Kind::kVar) {
    for (const auto& [m, c] : p.terms()) {
      if (m.exp[vi] == 0) throw ExactnessError("not divisible by " + d.to_string());
      Monomial out = m;
      --out.exp[vi];
      q.add_term(out, c);
    }
    return q;
  }

  // p = (x_i - s*x_j) q with s = +1 for the difference and -1 for the sum.
  // Synthetic division in x_i: q_{m-1} = p_m, q_{k-1} = p_k + s*x_j*q_k,
  // and p_0 + s*x_j*q_0 must vanish.
  const int s = d.kind == LinearDivisor::Kind::kDiff ? 1 : -1;
  std::map<int, XPoly> slices;
  int top = -1;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int e = rest.exp[vi];
    rest.exp[vi] = 0;
    slices.try_emplace(e, n).first->second.add_term(rest, c);
    top = std::max(top, e);
  }
  if (top < 0) return q;

  const XPoly shift = XPoly::monomial(n, Monomial::var(d.j), ParamPoly(s));
  XPoly carry(n);  // q_k for the current k
  for (int k = top; k >= 1; --k) {
    XPoly pk = slices.count(k) ? slices.at(k) : XPoly(n);
    XPoly qk1 = pk + shift * carry;  // q_{k-1}
    for (const auto& [m, c] : qk1.terms()) {
      Monomial out = m;
      out.exp[vi] = static_cast<std::uint8_t>(k - 1);
      q.add_term(out, c);
    }
    carry = std::move(qk1);
  }
  XPoly p0 = slices.count(0) ? slices.at(0) : XPoly(n);
  if (!(p0 + shift * carry).is_zero()) throw ExactnessError("not divisible by " + d.to_string());
  return q;
}

}  // namespace gbi
