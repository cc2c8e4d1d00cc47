#include "gbi/bannaiito/realization.hpp"

#include "gbi/clifford/symmetries.hpp"
#include "gbi/exactring/errors.hpp"
#include "gbi/hyperoct/elements.hpp"

namespace gbi {

std::string_view realization_name(RealizationKind kind) {
  switch (kind) {
    case RealizationKind::kB3Scalar: return "b3-scalar";
    case RealizationKind::kZ2Scalar: return "z2-scalar";
    case RealizationKind::kB3Clifford: return "b3-clifford";
  }
  return "?";
}

std::optional<RealizationKind> parse_realization(std::string_view name) {
  for (auto k : all_realizations())
    if (realization_name(k) == name) return k;
  return std::nullopt;
}

std::vector<RealizationKind> all_realizations() {
  return {RealizationKind::kB3Scalar, RealizationKind::kZ2Scalar, RealizationKind::kB3Clifford};
}

Operator Realization::p_s(const std::vector<int>& s) const {
  if (s.empty()) throw StructuralError("empty index set");
  std::vector<Operator> f;
  for (int i : s) f.push_back(p_i(i));
  return compose(f);
}

const GroupAlgebraElement& Realization::q_element(int i, int j) const {
  if (i > j) std::swap(i, j);
  auto it = q.find({i, j});
  if (it == q.end()) throw StructuralError("Q_ij is only defined for the B_3 realizations");
  return it->second;
}

Operator Realization::q_op(int i, int j) const { return Operator::group_algebra(q_element(i, j)); }

Realization realize(RealizationKind kind, const Assignment& specialization) {
  constexpr int n = 3;
  Realization r;
  r.kind = kind;
  r.n = n;
  r.specialization = specialization;

  if (kind == RealizationKind::kZ2Scalar) {
    r.space = ParamSpace::intern({"mu1", "mu2", "mu3"});
    for (int i = 0; i < n; ++i) r.mu.push_back(ParamPoly::variable(r.space, i).substitute(specialization));
    r.dunkl = DunklKind::z2(r.mu);
  } else {
    r.space = ParamSpace::intern({"a", "b"});
    r.a = ParamPoly::variable(r.space, "a").substitute(specialization);
    r.b = ParamPoly::variable(r.space, "b").substitute(specialization);
    r.dunkl = DunklKind::b_type(n, r.a, r.b);
  }
  for (const auto& [name, v] : specialization)
    if (!r.space->index_of(name)) throw StructuralError("unknown parameter '" + name + "'");

  for (int i = 1; i <= n; ++i) {
    r.d.push_back(dunkl(i, r.dunkl));
    r.x.push_back(Operator::mul_x(n, i));
    r.r.push_back(Operator::group(SignedPerm::reflection(n, i)));
  }
  r.p = Operator::group(SignedPerm::reflection(n, 1) * SignedPerm::reflection(n, 2) * SignedPerm::reflection(n, 3));

  if (kind == RealizationKind::kB3Clifford) {
    std::vector<Operator> minus, plus;
    for (int i = 1; i <= n; ++i) {
      Operator e = e_product(n, {i});
      minus.push_back(r.d[i - 1] * e);
      plus.push_back(r.x[i - 1] * e);
    }
    r.a_minus = sum(minus);
    r.a_plus = sum(plus);
  } else {
    const Operator r23 = r.r[1] * r.r[2];
    r.a_minus = sum({r.d[0] * r23, r.d[1] * r.r[2], r.d[2]});
    r.a_plus = sum({r.x[0] * r23, r.x[1] * r.r[2], r.x[2]});
  }
  r.a_minus = r.a_minus.named("A-");
  r.a_plus = r.a_plus.named("A+");
  r.a_zero = euler(r.d).named("A0");
  r.b_minus = (r.a_minus * r.a_minus).named("B-");
  r.b_plus = (r.a_plus * r.a_plus).named("B+");

  if (r.b_type()) {
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) r.q.emplace(std::pair{i, j}, q_ij(i, j));
  }
  return r;
}

Realization with_q_override(Realization r, int i, int j, GroupAlgebraElement q) {
  if (i > j) std::swap(i, j);
  if (!r.q.count({i, j})) throw StructuralError("Q_ij is only defined for the B_3 realizations");
  r.q[{i, j}] = std::move(q);
  return r;
}

}  // namespace gbi
