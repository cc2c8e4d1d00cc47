#include "gbi/bannaiito/closed_forms.hpp"

#include <algorithm>
#include <set>

#include "gbi/clifford/symmetries.hpp"
#include "gbi/exactring/errors.hpp"
#include "gbi/hyperoct/elements.hpp"

namespace gbi {

namespace {

const ParamPoly kHalf(Rational(1, 2));

void require_b3_scalar(const Realization& r, const char* what) {
  if (r.kind != RealizationKind::kB3Scalar)
    throw StructuralError(std::string(what) + " is only defined for the b3-scalar realization");
}

void require_clifford(const Realization& r, const char* what) {
  if (r.kind != RealizationKind::kB3Clifford)
    throw StructuralError(std::string(what) + " is only defined for the b3-clifford realization");
}

void check_index(int i) {
  if (i < 1 || i > 3) throw StructuralError("index out of range (expected 1..3)");
}

void check_pair(int i, int j) {
  check_index(i);
  check_index(j);
  if (i == j) throw StructuralError("indices must be distinct");
}

int third(int i, int j) { return 6 - i - j; }

// The two indices other than i, ascending.
std::pair<int, int> others(int i) {
  if (i == 1) return {2, 3};
  if (i == 2) return {1, 3};
  return {1, 2};
}

Operator ga(const GroupAlgebraElement& u) { return Operator::group_algebra(u); }
Operator s(const Realization& r, int i, int j) { return ga(s_ij_element(i, j, r.dunkl)); }
Operator m(const Realization& r, int i, int j) { return m_ij(i, j, r.d); }
Operator rr(const Realization& r, int i) { return r.p_i(i); }
Operator e2(const Realization& r, int i, int j) { return e_product(r.n, {i, j}); }

}  // namespace

namespace closed {

Operator c_i_reflections(const Realization& r, int i) {
  require_b3_scalar(r, "C_i/reflections");
  check_index(i);
  const Operator r1 = rr(r, 1), r2 = rr(r, 2), r3 = rr(r, 3);
  Operator body;
  switch (i) {
    case 1: body = s(r, 1, 1) * r1 + s(r, 1, 2) * r1 * r2 + s(r, 1, 3) * r1 * r2 * r3 - r1; break;
    case 2: body = -s(r, 1, 2) + s(r, 2, 2) * r2 - s(r, 2, 3) - r2; break;
    default: body = -(s(r, 1, 3) * r2) - s(r, 2, 3) + s(r, 3, 3) * r3 - r3; break;
  }
  return kHalf * body;
}

Operator c_i_q(const Realization& r, int i) {
  require_b3_scalar(r, "C_i");
  check_index(i);
  auto [j, k] = others(i);
  return r.a * (r.q_op(i, j) + r.q_op(i, k)) + r.scalar(r.b);
}

Operator c_ij_angular(const Realization& r, int i, int j) {
  require_b3_scalar(r, "C_ij");
  check_pair(i, j);
  if (i > j) std::swap(i, j);
  const Operator r1 = rr(r, 1), r2 = rr(r, 2), r3 = rr(r, 3);
  const Operator one = r.one();
  if (i == 1 && j == 2)
    return m(r, 1, 2) * r1 + kHalf * ((s(r, 1, 1) + s(r, 2, 2) - one) * r1 * r2) -
           kHalf * (s(r, 1, 3) + s(r, 2, 3) * r1);
  if (i == 2 && j == 3)
    return m(r, 2, 3) * r2 + kHalf * ((s(r, 2, 2) + s(r, 3, 3) - one) * r2 * r3) -
           kHalf * (s(r, 1, 2) * r3 + s(r, 1, 3));
  return m(r, 1, 3) * r1 * r2 + kHalf * ((s(r, 1, 1) + s(r, 3, 3) - one) * r1 * r3) -
         kHalf * (s(r, 1, 2) * r3 + s(r, 2, 3) * r1);
}

Operator c_ij_compact(const Realization& r, int i, int j) {
  require_b3_scalar(r, "C_ij/compact");
  check_pair(i, j);
  if (i > j) std::swap(i, j);
  // Reflection factor multiplying M_ij, read per pair: R1 for (1,2), R2 for (2,3), R1 R2 for (1,3).
  const Operator f = (i == 1 && j == 3) ? rr(r, 1) * rr(r, 2) : rr(r, i);
  return m(r, i, j) * f + c_i_q(r, i) * rr(r, j) + c_i_q(r, j) * rr(r, i) + kHalf * (rr(r, i) * rr(r, j));
}

Operator gamma_angular(const Realization& r) {
  require_b3_scalar(r, "Gamma/angular");
  const Operator r1 = rr(r, 1), r2 = rr(r, 2), r3 = rr(r, 3);
  return m(r, 1, 2) * r1 * r3 + m(r, 1, 3) * r1 + m(r, 2, 3) * r1 * r2 +
         kHalf * ((s(r, 1, 1) + s(r, 2, 2) + s(r, 3, 3) - r.one()) * r.p);
}

Operator gamma_jucys_murphy(const Realization& r) {
  require_b3_scalar(r, "Gamma/jucys-murphy");
  const auto jm = jucys_murphy(3);
  const GroupAlgebraElement tail = r.a * (jm[3] + jm[4]) + r.b * (jm[0] + jm[1] + jm[2]) + kHalf * ga_one(3);
  return c_ij_angular(r, 1, 2) * rr(r, 3) + c_ij_angular(r, 1, 3) * rr(r, 2) + c_ij_angular(r, 2, 3) * rr(r, 1) -
         ga(tail) * r.p;
}

Operator c_i_clifford(const Realization& r, int i) {
  require_clifford(r, "C_i");
  check_index(i);
  auto [j, k] = others(i);
  return kHalf * ((s(r, i, i) - s(r, i, j) * e2(r, i, j) - s(r, i, k) * e2(r, i, k) - r.one()) * rr(r, i));
}

Operator c_ij_clifford(const Realization& r, int i, int j) {
  require_clifford(r, "C_ij");
  check_pair(i, j);
  if (i > j) std::swap(i, j);
  const int k = third(i, j);
  const Operator rij = rr(r, i) * rr(r, j);
  return -(m(r, i, j) * e2(r, i, j) * rij) +
         kHalf * ((s(r, i, i) + s(r, j, j) - s(r, i, k) * e2(r, i, k) - s(r, j, k) * e2(r, j, k) - r.one()) * rij);
}

Operator gamma_clifford(const Realization& r) {
  require_clifford(r, "Gamma/angular");
  return (-(m(r, 1, 2) * e2(r, 1, 2)) - m(r, 1, 3) * e2(r, 1, 3) - m(r, 2, 3) * e2(r, 2, 3) +
          kHalf * (s(r, 1, 1) + s(r, 2, 2) + s(r, 3, 3) - r.one())) *
         r.p;
}

Operator gamma_clifford_decomposed(const Realization& r) {
  require_clifford(r, "Gamma/decomposed");
  const Operator r1 = rr(r, 1), r2 = rr(r, 2), r3 = rr(r, 3);
  return c_ij_clifford(r, 1, 2) * r3 + c_ij_clifford(r, 1, 3) * r2 + c_ij_clifford(r, 2, 3) * r1 -
         c_i_clifford(r, 1) * r2 * r3 - c_i_clifford(r, 2) * r1 * r3 - c_i_clifford(r, 3) * r1 * r2 -
         kHalf * r.p;
}

Operator c_i_w(const Realization& r, int i) {
  require_clifford(r, "C_i/W");
  check_index(i);
  auto [j, k] = others(i);
  return r.a * ((w_ij(r.n, i, j) + w_ij(r.n, i, k)) * e_product(r.n, {i}) * rr(r, i)) + r.scalar(r.b);
}

Operator c_ij_clifford_a0(const Realization& r, int i, int j) {
  require_clifford(r, "C_ij/a=0");
  check_pair(i, j);
  if (i > j) std::swap(i, j);
  return (-(m(r, i, j) * e2(r, i, j)) + r.b * (rr(r, i) + rr(r, j)) + kHalf * r.one()) * rr(r, i) * rr(r, j);
}

Operator o_s(const Realization& r, const std::vector<int>& s_set) {
  require_clifford(r, "O_S");
  if (s_set.empty()) throw StructuralError("O_S is undefined for the empty set");
  std::set<int> seen;
  std::vector<Operator> xs;
  for (int i : s_set) {
    check_index(i);
    if (!seen.insert(i).second) throw StructuralError("repeated index in O_S");
    xs.push_back(r.x[i - 1] * e_product(r.n, {i}));
  }
  const Operator x_s = sum(xs);
  const Operator e_s = e_product(r.n, s_set);
  std::string name = "O";
  for (int i : s_set) name += std::to_string(i);
  return (kHalf * (r.a_minus * x_s * e_s - e_s * x_s * r.a_minus - e_s)).named(name);
}

Operator o_ij_formula(const Realization& r, int i, int j) {
  require_clifford(r, "O_ij");
  check_pair(i, j);
  const int k = third(i, j);
  return m(r, i, j) + kHalf * ((s(r, i, i) + s(r, j, j)) * e2(r, i, j)) - kHalf * (s(r, i, k) * e2(r, j, k)) +
         kHalf * (s(r, j, k) * e2(r, i, k)) - kHalf * e2(r, i, j);
}

}  // namespace closed

std::vector<std::string> closed_form_names() {
  return {"C_i", "C_i/reflections", "C_i/W", "C_ij", "C_ij/compact", "Gamma/angular", "Gamma/jucys-murphy", "O_S", "O_ij"};
}

Operator closed_form(std::string_view name, const Realization& r, const std::vector<int>& idx) {
  auto need = [&](std::size_t count) {
    if (idx.size() != count)
      throw StructuralError("closed form '" + std::string(name) + "' takes " + std::to_string(count) + " indices");
  };
  const bool cl = r.clifford();
  if (name == "C_i") {
    need(1);
    return cl ? closed::c_i_clifford(r, idx[0]) : closed::c_i_q(r, idx[0]);
  }
  if (name == "C_i/reflections") {
    need(1);
    return closed::c_i_reflections(r, idx[0]);
  }
  if (name == "C_i/W") {
    need(1);
    return closed::c_i_w(r, idx[0]);
  }
  if (name == "C_ij") {
    need(2);
    return cl ? closed::c_ij_clifford(r, idx[0], idx[1]) : closed::c_ij_angular(r, idx[0], idx[1]);
  }
  if (name == "C_ij/compact") {
    need(2);
    return closed::c_ij_compact(r, idx[0], idx[1]);
  }
  if (name == "Gamma/angular") {
    need(0);
    return cl ? closed::gamma_clifford(r) : closed::gamma_angular(r);
  }
  if (name == "Gamma/jucys-murphy") {
    need(0);
    return closed::gamma_jucys_murphy(r);
  }
  if (name == "O_S") {
    if (idx.empty()) throw StructuralError("O_S needs at least one index");
    return closed::o_s(r, idx);
  }
  if (name == "O_ij") {
    need(2);
    return closed::o_ij_formula(r, idx[0], idx[1]);
  }
  throw StructuralError("unknown closed form '" + std::string(name) + "'");
}

}  // namespace gbi
