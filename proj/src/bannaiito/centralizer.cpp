#include "gbi/bannaiito/centralizer.hpp"

#include <set>

#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

void check_subset(const std::vector<int>& s, int n) {
  if (s.empty()) throw StructuralError("C_S is undefined for the empty set");
  std::set<int> seen;
  for (int i : s) {
    if (i < 1 || i > n) throw StructuralError("index out of range in C_S");
    if (!seen.insert(i).second) throw StructuralError("repeated index in C_S");
  }
}

std::string subset_name(const std::vector<int>& s) {
  std::string out = "C";
  for (int i : s) out += std::to_string(i);
  return out;
}

}  // namespace

Operator centralizer_element(const std::vector<int>& s, const Realization& r, Construction how) {
  check_subset(s, r.n);
  const Operator& am = r.a_minus;
  const Operator& ap = r.a_plus;
  const Operator ps = r.p_s(s);
  const ParamPoly quarter(Rational(1, 4));
  const ParamPoly half(Rational(1, 2));
  Operator body;
  switch (how) {
    case Construction::kNested: body = anticommutator(am, commutator(ap, ps)); break;
    case Construction::kSwapped: body = anticommutator(commutator(ps, am), ap); break;
    case Construction::kExpanded:
      body = sum({compose({am, ap, ps}), -compose({am, ps, ap}), compose({ap, ps, am}), -compose({ps, ap, am})});
      break;
  }
  return (quarter * body - half * ps).named(subset_name(s));
}

Operator casimir_gamma(const Realization& r) {
  const ParamPoly half(Rational(1, 2));
  return (half * ((commutator(r.a_minus, r.a_plus) - r.one()) * r.p)).named("Gamma");
}

Operator hyperoctahedral_casimir(const CentralizerFamily& f) {
  const Realization& r = f.realization();
  const Operator q = r.q_op(1, 2) + r.q_op(1, 3) + r.q_op(2, 3);
  const Operator sq = f.c(1, 2) * f.c(1, 2) + f.c(1, 3) * f.c(1, 3) + f.c(2, 3) * f.c(2, 3);
  return (sq - r.a.pow(2) * (q * q) - ParamPoly(4) * r.a * r.b * q).named("Casimir");
}

Operator CentralizerFamily::c(const std::vector<int>& s) const {
  std::lock_guard lock(mu_);
  auto it = cache_.find(s);
  if (it != cache_.end()) return it->second;
  Operator op = centralizer_element(s, r_);
  cache_.emplace(s, op);
  return op;
}

Operator CentralizerFamily::gamma() const {
  std::lock_guard lock(mu_);
  if (!gamma_.valid()) gamma_ = casimir_gamma(r_);
  return gamma_;
}

}  // namespace gbi
