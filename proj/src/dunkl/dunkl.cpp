#include "gbi/dunkl/dunkl.hpp"

#include "gbi/exactring/errors.hpp"
#include "gbi/hyperoct/elements.hpp"

namespace gbi {

namespace {

void check_index(const DunklKind& kind, int i) {
  if (i < 1 || i > kind.n) throw StructuralError("Dunkl index out of range");
}

class DunklPrim final : public Primitive {
 public:
  DunklPrim(int i, DunklKind kind) : i_(i), kind_(std::move(kind)) {}

  CliffordPoly image(const BasisKey& k, int n) const override {
    XPoly img = dunkl_action(i_, kind_, XPoly::monomial(n, k.mono));
    CliffordPoly out(n);
    for (const auto& [m, c] : img.terms()) out.add_term({m, k.blade}, c);
    return out;
  }
  std::string name() const override { return "D" + std::to_string(i_); }
  bool memoize() const override { return true; }

 private:
  int i_;
  DunklKind kind_;
};

}  // namespace

DunklKind DunklKind::b_type(int n, ParamPoly a, ParamPoly b) {
  if (n < 1 || n > kMaxVars) throw StructuralError("rank out of range");
  DunklKind k;
  k.family = Family::kB;
  k.n = n;
  k.a = std::move(a);
  k.b = std::move(b);
  return k;
}

DunklKind DunklKind::z2(std::vector<ParamPoly> mu) {
  if (mu.empty() || mu.size() > static_cast<std::size_t>(kMaxVars)) throw StructuralError("rank out of range");
  DunklKind k;
  k.family = Family::kZ2;
  k.n = static_cast<int>(mu.size());
  k.mu = std::move(mu);
  return k;
}

DunklKind DunklKind::substitute(const Assignment& assignment) const {
  DunklKind k = *this;
  k.a = a.substitute(assignment);
  k.b = b.substitute(assignment);
  for (auto& m : k.mu) m = m.substitute(assignment);
  return k;
}

const ParamPoly& DunklKind::reflection_coupling(int i) const {
  check_index(*this, i);
  return family == Family::kB ? b : mu[i - 1];
}

std::string DunklKind::to_string() const {
  if (family == Family::kB) return "B" + std::to_string(n) + "(a=" + a.to_string() + ", b=" + b.to_string() + ")";
  std::string s = "Z2^" + std::to_string(n) + "(";
  for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? ", " : "") + mu[i].to_string();
  return s + ")";
}

XPoly dunkl_action(int i, const DunklKind& kind, const XPoly& f) {
  check_index(kind, i);
  const int n = kind.n;
  if (f.n() != n) throw StructuralError("mismatched variable count");

  XPoly out = f.derivative(i);
  const ParamPoly& refl = kind.reflection_coupling(i);
  if (!refl.is_zero()) {
    XPoly num = f - SignedPerm::reflection(n, i).act(f);
    out += refl * divide_exact(num, LinearDivisor::var(i));
  }
  if (kind.family == DunklKind::Family::kB && !kind.a.is_zero()) {
    XPoly acc(n);
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      const SignedPerm pi = SignedPerm::transposition(n, i, j);
      const SignedPerm rrpi = SignedPerm::reflection(n, i) * SignedPerm::reflection(n, j) * pi;
      acc += divide_exact(f - pi.act(f), LinearDivisor::diff(i, j));
      acc += divide_exact(f - rrpi.act(f), LinearDivisor::sum(i, j));
    }
    out += kind.a * acc;
  }
  return out;
}

Operator dunkl(int i, const DunklKind& kind) {
  check_index(kind, i);
  return Operator::primitive(kind.n, std::make_shared<DunklPrim>(i, kind));
}

GroupAlgebraElement s_ij_element(int i, int j, const DunklKind& kind) {
  check_index(kind, i);
  check_index(kind, j);
  const int n = kind.n;
  const auto one = ga_one(n);
  if (kind.family == DunklKind::Family::kZ2) {
    if (i != j) return GroupAlgebraElement(n);
    return one + ParamPoly(2) * kind.mu[i - 1] * ga_r(n, i);
  }
  if (i != j) return -kind.a * ((one - ga_r(n, i) * ga_r(n, j)) * ga_pi(n, i, j));
  GroupAlgebraElement s = one + ParamPoly(2) * kind.b * ga_r(n, i);
  for (int k = 1; k <= n; ++k) {
    if (k == i) continue;
    s += kind.a * ((one + ga_r(n, i) * ga_r(n, k)) * ga_pi(n, i, k));
  }
  return s;
}

Operator s_ij(int i, int j, const DunklKind& kind) { return Operator::group_algebra(s_ij_element(i, j, kind)); }

Operator m_ij(int i, int j, const std::vector<Operator>& d) {
  const int n = d.at(0).n();
  return Operator::mul_x(n, i) * d.at(j - 1) - Operator::mul_x(n, j) * d.at(i - 1);
}

Operator euler(const std::vector<Operator>& d) {
  const int n = d.at(0).n();
  std::vector<Operator> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(anticommutator(Operator::mul_x(n, i), d[i - 1]));
  return ParamPoly(Rational(1, 2)) * sum(parts);
}

Operator euler_explicit(const DunklKind& kind) {
  const int n = kind.n;
  ParamPoly c(Rational(n, 2));
  if (kind.family == DunklKind::Family::kB) {
    c += ParamPoly(n) * kind.b + ParamPoly(n * (n - 1)) * kind.a;
  } else {
    for (const auto& m : kind.mu) c += m;
  }
  std::vector<Operator> parts;
  for (int i = 1; i <= n; ++i) parts.push_back(Operator::mul_x(n, i) * Operator::partial(n, i));
  parts.push_back(Operator::scalar(n, c));
  return sum(parts);
}

}  // namespace gbi
