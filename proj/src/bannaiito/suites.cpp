#include "gbi/bannaiito/suites.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <thread>

#include "gbi/bannaiito/centralizer.hpp"
#include "gbi/bannaiito/closed_forms.hpp"
#include "gbi/clifford/symmetries.hpp"
#include "gbi/exactring/errors.hpp"
#include "gbi/hyperoct/elements.hpp"

namespace gbi {

namespace {

using Triple = std::array<int, 3>;

const ParamPoly kHalf(Rational(1, 2));
const ParamPoly kQuarter(Rational(1, 4));
ParamPoly num(long v) { return ParamPoly(Rational(v)); }

const std::vector<Triple>& permutations3() {
  static const std::vector<Triple> perms = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3}, {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
  return perms;
}

const std::vector<std::pair<int, int>>& pairs3() {
  static const std::vector<std::pair<int, int>> pairs = {{1, 2}, {1, 3}, {2, 3}};
  return pairs;
}

const std::vector<std::vector<int>>& subsets3() {
  static const std::vector<std::vector<int>> subsets = {{1}, {2}, {3}, {1, 2}, {1, 3}, {2, 3}, {1, 2, 3}};
  return subsets;
}

std::string idx(int i) { return std::to_string(i); }
std::string idx(int i, int j) { return std::to_string(i) + std::to_string(j); }
std::string idx(const std::vector<int>& s) {
  std::string out;
  for (int i : s) out += std::to_string(i);
  return out;
}
std::string ijk(const Triple& t) { return "(i,j,k)=(" + idx(t[0]) + "," + idx(t[1]) + "," + idx(t[2]) + ")"; }

// Accumulates identities under the current anchor.
class Builder {
 public:
  explicit Builder(int n) : n_(n) {}

  void anchor(std::string a) { anchor_ = std::move(a); }
  void eq(std::string label, Operator lhs, Operator rhs) { push(std::move(label), std::move(lhs), std::move(rhs), true); }
  void zero(std::string label, Operator lhs) { eq(std::move(label), std::move(lhs), Operator::zero(n_)); }
  void differ(std::string label, Operator lhs, Operator rhs) {
    push(std::move(label), std::move(lhs), std::move(rhs), false);
  }
  void ga_eq(std::string label, GroupAlgebraElement lhs, GroupAlgebraElement rhs) {
    Identity id;
    id.label = std::move(label);
    id.anchor = anchor_;
    id.domain = Identity::Domain::kGroupAlgebra;
    id.ga_lhs = std::move(lhs);
    id.ga_rhs = std::move(rhs);
    out_.push_back(std::move(id));
  }
  std::vector<Identity> take() { return std::move(out_); }

 private:
  void push(std::string label, Operator lhs, Operator rhs, bool expect) {
    Identity id;
    id.label = std::move(label);
    id.anchor = anchor_;
    id.lhs = std::move(lhs);
    id.rhs = std::move(rhs);
    id.expect_equal = expect;
    out_.push_back(std::move(id));
  }

  int n_;
  std::string anchor_;
  std::vector<Identity> out_;
};

const char* pm(bool plus) { return plus ? "A+" : "A-"; }

// ---------------------------------------------------------------- dunkl-core
void dunkl_core(const Realization& r, Builder& b) {
  const auto& d = r.d;
  const auto& x = r.x;
  const auto& R = r.r;
  b.anchor("Dunkl operators commute");
  for (auto [i, j] : pairs3()) b.zero("[D" + idx(i) + ", D" + idx(j) + "] = 0", commutator(d[i - 1], d[j - 1]));

  b.anchor("commutator of Dunkl operators with coordinates");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      b.eq("[D" + idx(i) + ", x" + idx(j) + "] = S" + idx(i, j), commutator(d[i - 1], x[j - 1]), s_ij(i, j, r.dunkl));
  for (auto [i, j] : pairs3())
    b.eq("[D" + idx(i) + ", x" + idx(j) + "] = [D" + idx(j) + ", x" + idx(i) + "]", commutator(d[i - 1], x[j - 1]),
         commutator(d[j - 1], x[i - 1]));

  b.anchor("reflections and Dunkl operators");
  for (int i = 1; i <= 3; ++i) {
    b.zero("{R" + idx(i) + ", D" + idx(i) + "} = 0", anticommutator(R[i - 1], d[i - 1]));
    b.zero("{R" + idx(i) + ", x" + idx(i) + "} = 0", anticommutator(R[i - 1], x[i - 1]));
  }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      b.zero("[R" + idx(i) + ", D" + idx(j) + "] = 0", commutator(R[i - 1], d[j - 1]));
      b.zero("[R" + idx(i) + ", x" + idx(j) + "] = 0", commutator(R[i - 1], x[j - 1]));
    }

  b.anchor("Euler operator");
  b.eq("1/2 sum_i {x_i, D_i} = sum_i x_i d_i + constant", r.a_zero, euler_explicit(r.dunkl));

  b.anchor("Dunkl angular momenta");
  auto m = [&](int i, int j) { return m_ij(i, j, d); };
  auto s = [&](int i, int j) { return s_ij(i, j, r.dunkl); };
  for (auto [i, j] : pairs3()) b.eq("M" + idx(i, j) + " = -M" + idx(j, i), m(i, j), -m(j, i));
  const std::vector<std::array<int, 4>> quads = {{1, 2, 1, 3}, {1, 2, 2, 3}, {1, 3, 2, 3}, {1, 2, 3, 1}};
  for (const auto& q : quads) {
    const int i = q[0], j = q[1], k = q[2], l = q[3];
    const Operator lhs = commutator(m(i, j), m(k, l));
    const std::string name = "[M" + idx(i, j) + ", M" + idx(k, l) + "]";
    b.eq(name + " = M_il S_jk + M_jk S_il - M_ik S_lj - M_jl S_ik",
         lhs, m(i, l) * s(j, k) + m(j, k) * s(i, l) - m(i, k) * s(l, j) - m(j, l) * s(i, k));
    b.eq(name + " = S_jk M_il + S_il M_jk - S_lj M_ik - S_ik M_jl",
         lhs, s(j, k) * m(i, l) + s(i, l) * m(j, k) - s(l, j) * m(i, k) - s(i, k) * m(j, l));
  }
}

// ------------------------------------------------------------------ osp-core
void osp_core(const Realization& r, const CentralizerFamily& f, Builder& b) {
  const Operator &am = r.a_minus, &ap = r.a_plus, &a0 = r.a_zero, &p = r.p;
  const Operator one = r.one();
  b.anchor("grade involution");
  b.eq("P^2 = 1", p * p, one);
  b.zero("[P, A0] = 0", commutator(p, a0));
  b.zero("{P, A+} = 0", anticommutator(p, ap));
  b.zero("{P, A-} = 0", anticommutator(p, am));

  b.anchor("osp(1,2) relations");
  b.eq("[A0, A+] = A+", commutator(a0, ap), ap);
  b.eq("[A0, A-] = -A-", commutator(a0, am), -am);
  b.eq("{A+, A-} = 2 A0", anticommutator(ap, am), num(2) * a0);

  b.anchor("osp(1,2) Casimir");
  const Operator s = kHalf * (commutator(am, ap) - one);
  const Operator gamma = f.gamma();
  b.zero("[S, A0] = 0", commutator(s, a0));
  b.zero("{S, A+} = 0", anticommutator(s, ap));
  b.zero("{S, A-} = 0", anticommutator(s, am));
  b.zero("[Gamma, A+] = 0", commutator(gamma, ap));
  b.zero("[Gamma, A-] = 0", commutator(gamma, am));
  b.zero("[Gamma, A0] = 0", commutator(gamma, a0));
  b.zero("[Gamma, P] = 0", commutator(gamma, p));

  b.anchor("odd generators against squares");
  b.eq("[A-, A+^2] = 2 [A0, A+]", commutator(am, r.b_plus), num(2) * commutator(a0, ap));
  b.eq("[A-, A+^2] = 2 A+", commutator(am, r.b_plus), num(2) * ap);
  b.eq("[A+, A-^2] = 2 [A0, A-]", commutator(ap, r.b_minus), num(2) * commutator(a0, am));
  b.eq("[A+, A-^2] = -2 A-", commutator(ap, r.b_minus), num(-2) * am);

  b.anchor("su(1,1) relations");
  b.eq("[B+, B-] = -4 A0", commutator(r.b_plus, r.b_minus), num(-4) * a0);
  b.eq("[A0, B+] = 2 B+", commutator(a0, r.b_plus), num(2) * r.b_plus);
  b.eq("[A0, B-] = -2 B-", commutator(a0, r.b_minus), num(-2) * r.b_minus);
  b.zero("[P, B+] = 0", commutator(p, r.b_plus));
  b.zero("[P, B-] = 0", commutator(p, r.b_minus));

  b.anchor("su(1,1) Casimir");
  const Operator c_su = kQuarter * (a0 * a0 - r.b_plus * r.b_minus - num(2) * a0);
  const Operator lhs = gamma * gamma - gamma * p;
  b.eq("Gamma^2 - Gamma P = 4 C + 3/4", lhs, num(4) * c_su + r.scalar(ParamPoly(Rational(3, 4))));
  b.differ("Gamma^2 - Gamma P != 4 C + 3/2", lhs, num(4) * c_su + r.scalar(ParamPoly(Rational(3, 2))));
}

// --------------------------------------------------------------- involutions
void involutions(const Realization& r, Builder& b) {
  const Operator &am = r.a_minus, &ap = r.a_plus, &a0 = r.a_zero;
  auto P = [&](int i) { return r.p_i(i); };
  b.anchor("supplementary involutions");
  b.eq("P = P1 P2 P3", r.p, P(1) * P(2) * P(3));
  for (int i = 1; i <= 3; ++i) b.eq("P" + idx(i) + "^2 = 1", P(i) * P(i), r.one());
  for (auto [i, j] : pairs3()) b.zero("[P" + idx(i) + ", P" + idx(j) + "] = 0", commutator(P(i), P(j)));

  b.anchor("involutions commute with su(1,1)");
  for (int i = 1; i <= 3; ++i) {
    b.zero("[P" + idx(i) + ", A0] = 0", commutator(P(i), a0));
    b.zero("[P" + idx(i) + ", B+] = 0", commutator(P(i), r.b_plus));
    b.zero("[P" + idx(i) + ", B-] = 0", commutator(P(i), r.b_minus));
  }

  b.anchor("decomposition property");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      for (bool plus : {true, false}) {
        const Operator& a = plus ? ap : am;
        b.zero("[P" + idx(i) + ", [P" + idx(j) + ", " + pm(plus) + "]] = 0", commutator(P(i), commutator(P(j), a)));
      }
    }

  b.anchor("two-sided involution shift");
  for (auto [i, j] : pairs3())
    for (bool plus : {true, false}) {
      const Operator& a = plus ? ap : am;
      const std::string A = pm(plus);
      b.eq("P" + idx(i) + " " + A + " P" + idx(j) + " + P" + idx(j) + " " + A + " P" + idx(i) + " = P" + idx(i) + " P" +
               idx(j) + " " + A + " + " + A + " P" + idx(i) + " P" + idx(j),
           P(i) * a * P(j) + P(j) * a * P(i), P(i) * P(j) * a + a * P(i) * P(j));
      const Operator& c = plus ? am : ap;
      const Operator t = a * c * a;
      const std::string T = A + " " + pm(!plus) + " " + A;
      b.eq("P" + idx(i) + " " + T + " P" + idx(j) + " + (i<->j) = P" + idx(i) + " P" + idx(j) + " " + T + " + " + T +
               " P" + idx(i) + " P" + idx(j),
           P(i) * t * P(j) + P(j) * t * P(i), P(i) * P(j) * t + t * P(i) * P(j));
    }

  b.anchor("reordering of a cubic monomial");
  b.eq("A+ A- A+ = -A- A+^2 + 2 A0 A+", ap * am * ap, -(am * r.b_plus) + num(2) * (a0 * ap));
  b.eq("A- A+ A- = -A+ A-^2 + 2 A0 A-", am * ap * am, -(ap * r.b_minus) + num(2) * (a0 * am));
}

// ----------------------------------------------------------------- centralize
void centralize(const Realization& r, const CentralizerFamily& f, Builder& b) {
  b.anchor("centralizer elements commute with osp(1,2)");
  for (const auto& s : subsets3()) {
    const Operator c = f.c(s);
    const std::string C = "C" + idx(s);
    b.zero("[" + C + ", A+] = 0", commutator(c, r.a_plus));
    b.zero("[" + C + ", A-] = 0", commutator(c, r.a_minus));
    b.zero("[" + C + ", A0] = 0", commutator(c, r.a_zero));
    b.zero("[" + C + ", P] = 0", commutator(c, r.p));
  }
  b.anchor("centralizer elements commute with Gamma");
  for (const auto& s : subsets3()) b.zero("[C" + idx(s) + ", Gamma] = 0", commutator(f.c(s), f.gamma()));

  b.anchor("three constructions of C_S agree");
  for (const auto& s : subsets3()) {
    const std::string C = "C" + idx(s);
    b.eq(C + ": 1/4 {A-, [A+, P_S]} - 1/2 P_S = 1/4 {[P_S, A-], A+} - 1/2 P_S", f.c(s),
         centralizer_element(s, r, Construction::kSwapped));
    b.eq(C + ": nested form = expanded form", f.c(s), centralizer_element(s, r, Construction::kExpanded));
  }

  b.anchor("symmetry of C_S under reordering");
  for (auto [i, j] : pairs3()) b.eq("C" + idx(i, j) + " = C" + idx(j, i), f.c(i, j), f.c({j, i}));
  for (const auto& t : permutations3()) {
    const std::vector<int> s(t.begin(), t.end());
    b.eq("C" + idx(s) + " = Gamma", f.c(s), f.gamma());
  }

  b.anchor("Gamma does not commute with the involutions");
  for (int i = 1; i <= 3; ++i) b.differ("[Gamma, P" + idx(i) + "] != 0", commutator(f.gamma(), r.p_i(i)), Operator::zero(r.n));
}

// -------------------------------------------------------------- index-lemmas
void index_lemmas(const Realization& r, const CentralizerFamily& f, Builder& b) {
  auto P = [&](int i) { return r.p_i(i); };
  const Operator &am = r.a_minus, &ap = r.a_plus;
  b.anchor("one-index elements and involutions");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) {
      if (i == j) continue;
      const Operator ci = f.c(i), cj = f.c(j);
      const std::string Ci = "C" + idx(i), Cj = "C" + idx(j), Pi = "P" + idx(i), Pj = "P" + idx(j);
      if (i < j)
        b.eq(Ci + " " + Pj + " + " + Cj + " " + Pi + " = " + Pi + " " + Cj + " + " + Pj + " " + Ci,
             ci * P(j) + cj * P(i), P(i) * cj + P(j) * ci);
      b.eq("[" + Ci + ", " + Pj + "] = -[" + Cj + ", " + Pi + "]", commutator(ci, P(j)), -commutator(cj, P(i)));
      b.eq("[" + Ci + ", " + Pj + "] = 1/4 ([A-, " + Pj + "][A+, " + Pi + "] + [A+, " + Pi + "][A-, " + Pj + "])",
           commutator(ci, P(j)),
           kQuarter * (commutator(am, P(j)) * commutator(ap, P(i)) + commutator(ap, P(i)) * commutator(am, P(j))));
      b.eq("[" + Cj + ", " + Pi + "] = 1/4 ([" + Pj + ", A-][A+, " + Pi + "] + [A+, " + Pi + "][" + Pj + ", A-])",
           commutator(cj, P(i)),
           kQuarter * (commutator(P(j), am) * commutator(ap, P(i)) + commutator(ap, P(i)) * commutator(P(j), am)));
    }

  b.anchor("double commutator with involutions");
  for (const auto& t : permutations3())
    b.zero("[P" + idx(t[0]) + ", [P" + idx(t[1]) + ", C" + idx(t[2]) + "]] = 0",
           commutator(P(t[0]), commutator(P(t[1]), f.c(t[2]))));

  b.anchor("multi-index lemma");
  std::vector<std::vector<int>> ordered;
  for (auto [i, j] : pairs3()) {
    ordered.push_back({i, j});
    ordered.push_back({j, i});
  }
  for (const auto& t : permutations3()) ordered.push_back({t[0], t[1], t[2]});
  for (const auto& s : ordered) {
    std::vector<Operator> left, right, comms;
    for (std::size_t k = 0; k < s.size(); ++k) {
      left.push_back(P(s[k]) * f.c(s[k]));
      right.push_back(f.c(s[k]) * P(s[k]));
      std::vector<int> rest;
      for (std::size_t l = 0; l < s.size(); ++l)
        if (l != k) rest.push_back(s[l]);
      comms.push_back(commutator(r.p_s(rest), f.c(s[k])));
    }
    const std::string S = "S=" + idx(s);
    b.eq(S + ": P_S sum P_s C_s = (sum C_s P_s) P_S", r.p_s(s) * sum(left), sum(right) * r.p_s(s));
    b.zero(S + ": sum_s [P_{S minus s}, C_s] = 0", sum(comms));
  }
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    b.zero("[P" + idx(i) + " P" + idx(j) + ", C" + idx(k) + "] + [P" + idx(j) + " P" + idx(k) + ", C" + idx(i) + "] + [P" +
               idx(i) + " P" + idx(k) + ", C" + idx(j) + "] = 0",
           commutator(P(i) * P(j), f.c(k)) + commutator(P(j) * P(k), f.c(i)) + commutator(P(i) * P(k), f.c(j)));
  }

  b.anchor("moving an odd generator past involutions");
  for (const auto& t : permutations3())
    for (bool plus : {true, false}) {
      const Operator& a = plus ? ap : am;
      const int i = t[0], j = t[1], k = t[2];
      b.eq("P" + idx(i) + " P" + idx(j) + " " + pm(plus) + " P" + idx(k) + " = -P" + idx(k) + " " + pm(plus) + " P" +
               idx(i) + " P" + idx(j),
           P(i) * P(j) * a * P(k), -(P(k) * a * P(i) * P(j)));
    }
}

// ------------------------------------------------------------ casimir-decomp
void casimir_decomp(const Realization& r, const CentralizerFamily& f, Builder& b) {
  auto P = [&](int i) { return r.p_i(i); };
  const Operator &am = r.a_minus, &ap = r.a_plus;
  b.anchor("Gamma from one- and two-index elements");
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    const Operator rhs = f.c(i, j) * P(k) + f.c(j, k) * P(i) + f.c(i, k) * P(j) - f.c(k) * P(i) * P(j) -
                         f.c(i) * P(j) * P(k) - f.c(j) * P(i) * P(k) - kHalf * (P(i) * P(j) * P(k));
    b.eq("C" + idx(t[0]) + idx(t[1]) + idx(t[2]) + " = C_ij P_k + C_jk P_i + C_ik P_j - C_k P_i P_j - C_i P_j P_k - C_j P_i P_k - 1/2 P_i P_j P_k, " +
             ijk(t),
         f.c({i, j, k}), rhs);
  }

  b.anchor("intermediate steps for Gamma");
  for (auto [i, j] : pairs3()) {
    const int k = 6 - i - j;
    b.eq("C" + idx(i, j) + " P" + idx(k) + " - C" + idx(k) + " P" + idx(i) + " P" + idx(j) + " = 1/2 (A- P" + idx(k) +
             " A+ P" + idx(i) + " P" + idx(j) + " - A+ P" + idx(k) + " A- P" + idx(i) + " P" + idx(j) + ")",
         f.c(i, j) * P(k) - f.c(k) * P(i) * P(j),
         kHalf * (am * P(k) * ap * P(i) * P(j) - ap * P(k) * am * P(i) * P(j)));
  }
  auto cyclic = [&](const Operator& first, const Operator& second) {
    std::vector<Operator> terms;
    for (auto [i, j] : pairs3()) terms.push_back(first * P(6 - i - j) * second * P(i) * P(j));
    return sum(terms);
  };
  b.eq("A- P_k A+ P_i P_j + cyclic = A- A+ P", cyclic(am, ap), am * ap * r.p);
  b.eq("A+ P_k A- P_i P_j + cyclic = A+ A- P", cyclic(ap, am), ap * am * r.p);
}

// ------------------------------------------------------- structure-relations
void structure_relations(const Realization&, const CentralizerFamily& f, Builder& b) {
  b.anchor("anticommutator relation of the two-index elements");
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    const Operator lhs = anticommutator(f.c(i, j), f.c(j, k));
    const std::string L = "{C" + idx(i, j) + ", C" + idx(j, k) + "} = C" + idx(i, k);
    b.eq(L + " + {C" + idx(j) + ", Gamma} + {C" + idx(i) + ", C" + idx(k) + "}", lhs,
         f.c(i, k) + anticommutator(f.c(j), f.gamma()) + anticommutator(f.c(i), f.c(k)));
    b.eq(L + " + 2 C" + idx(j) + " Gamma + {C" + idx(i) + ", C" + idx(k) + "}", lhs,
         f.c(i, k) + num(2) * (f.c(j) * f.gamma()) + anticommutator(f.c(i), f.c(k)));
  }
  b.anchor("cyclic commutator relation");
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    b.zero("[C" + idx(i, j) + ", C" + idx(k) + "] + [C" + idx(j, k) + ", C" + idx(i) + "] + [C" + idx(i, k) + ", C" +
               idx(j) + "] = 0",
           commutator(f.c(i, j), f.c(k)) + commutator(f.c(j, k), f.c(i)) + commutator(f.c(i, k), f.c(j)));
  }
  b.anchor("Gamma is central among the C_S");
  for (int i = 1; i <= 3; ++i) b.zero("[C" + idx(i) + ", Gamma] = 0", commutator(f.c(i), f.gamma()));
  for (auto [i, j] : pairs3()) b.zero("[C" + idx(i, j) + ", Gamma] = 0", commutator(f.c(i, j), f.gamma()));
}

// -------------------------------------------------------------- closed-forms
void closed_forms_scalar(const Realization& r, const CentralizerFamily& f, Builder& b) {
  b.anchor("two-index elements from angular momenta");
  for (auto [i, j] : pairs3())
    b.eq("C" + idx(i, j) + " = angular-momentum closed form", f.c(i, j), closed::c_ij_angular(r, i, j));
  b.anchor("one-index elements from S_ij and reflections");
  for (int i = 1; i <= 3; ++i)
    b.eq("C" + idx(i) + " = reflection closed form", f.c(i), closed::c_i_reflections(r, i));
  b.anchor("one-index elements from Q_ij");
  for (int i = 1; i <= 3; ++i) {
    auto [j, k] = std::pair{i == 1 ? 2 : 1, i == 3 ? 2 : 3};
    b.eq("C" + idx(i) + " = a (Q" + idx(i, j) + " + Q" + idx(i, k) + ") + b", f.c(i), closed::c_i_q(r, i));
  }
  b.anchor("two-index elements from one-index elements");
  for (auto [i, j] : pairs3())
    b.eq("C" + idx(i, j) + " = M" + idx(i, j) + " F" + idx(i, j) + " + C" + idx(i) + " R" + idx(j) + " + C" + idx(j) +
             " R" + idx(i) + " + 1/2 R" + idx(i) + " R" + idx(j),
         f.c(i, j), closed::c_ij_compact(r, i, j));
  b.anchor("Gamma in closed form");
  b.eq("Gamma = M12 R1 R3 + M13 R1 + M23 R1 R2 + 1/2 (S11 + S22 + S33 - 1) R", f.gamma(), closed::gamma_angular(r));
  b.eq("Gamma = C12 R3 + C13 R2 + C23 R1 - (a (m2 + m3) + b (R1 + R2 + R3) + 1/2) R", f.gamma(),
       closed::gamma_jucys_murphy(r));
  auto s = [&](int i, int j) { return s_ij(i, j, r.dunkl); };
  auto P = [&](int i) { return r.p_i(i); };
  b.eq("C1 R2 R3 + C2 R1 R3 + C3 R1 R2 = 1/2 (S11 + S22 + S33 - 3) R",
       f.c(1) * P(2) * P(3) + f.c(2) * P(1) * P(3) + f.c(3) * P(1) * P(2),
       kHalf * ((s(1, 1) + s(2, 2) + s(3, 3) - r.scalar(num(3))) * r.p));
}

void closed_forms_clifford(const Realization& r, const CentralizerFamily& f, Builder& b) {
  b.anchor("Clifford one-index elements");
  for (int i = 1; i <= 3; ++i)
    b.eq("C" + idx(i) + " = 1/2 (S_ii - S_ij e_i e_j - S_ik e_i e_k - 1) R_i", f.c(i), closed::c_i_clifford(r, i));
  b.anchor("Clifford two-index elements");
  for (auto [i, j] : pairs3())
    b.eq("C" + idx(i, j) + " = -M_ij e_i e_j R_i R_j + 1/2 (S_ii + S_jj - S_ik e_i e_k - S_jk e_j e_k - 1) R_i R_j",
         f.c(i, j), closed::c_ij_clifford(r, i, j));
  b.anchor("Clifford Gamma");
  b.eq("Gamma = (-M12 e1 e2 - M13 e1 e3 - M23 e2 e3 + 1/2 (S11 + S22 + S33 - 1)) R", f.gamma(),
       closed::gamma_clifford(r));
  b.eq("Gamma = C12 R3 + C13 R2 + C23 R1 - C1 R2 R3 - C2 R1 R3 - C3 R1 R2 - 1/2 R (closed forms)", f.gamma(),
       closed::gamma_clifford_decomposed(r));
  b.anchor("Clifford one-index elements from W_ij");
  for (int i = 1; i <= 3; ++i)
    b.eq("C" + idx(i) + " = a (W_ij + W_ik) e_i R_i + b", f.c(i), closed::c_i_w(r, i));
}

// -------------------------------------------------------- hyperoct-structure
void hyperoct_structure(const Realization& r, const CentralizerFamily& f, Builder& b) {
  auto Sg = [&](int i, int j) { return s_ij_element(i, j, r.dunkl); };
  auto Rg = [&](int i) { return ga_r(3, i); };
  auto Q = [&](int i, int j) { return r.q_element(i, j); };
  auto Qo = [&](int i, int j) { return r.q_op(i, j); };
  const GroupAlgebraElement one = ga_one(3);

  b.anchor("S_ij with a pair of reflections");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) b.ga_eq("S" + idx(i, j) + " R" + idx(i) + " R" + idx(j) + " = -S" + idx(i, j), Sg(i, j) * Rg(i) * Rg(j), -Sg(i, j));

  b.anchor("Q_ij are involutions");
  for (auto [i, j] : pairs3()) b.ga_eq("Q" + idx(i, j) + "^2 = 1", Q(i, j) * Q(i, j), one);

  b.anchor("Q_ij product relations");
  b.ga_eq("Q12 Q13 = Q23 Q12", Q(1, 2) * Q(1, 3), Q(2, 3) * Q(1, 2));
  b.ga_eq("Q23 Q12 = Q13 Q23", Q(2, 3) * Q(1, 2), Q(1, 3) * Q(2, 3));
  b.ga_eq("Q12 Q23 = Q23 Q13", Q(1, 2) * Q(2, 3), Q(2, 3) * Q(1, 3));
  b.ga_eq("Q23 Q13 = Q13 Q12", Q(2, 3) * Q(1, 3), Q(1, 3) * Q(1, 2));
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j)
        b.ga_eq("Q" + idx(i, j) + " R" + idx(j) + " = R" + idx(i) + " Q" + idx(i, j), Q(i, j) * Rg(j), Rg(i) * Q(i, j));

  b.anchor("anticommutators of the Q_ij");
  b.ga_eq("{Q12, Q13} = {Q13, Q23}", ga_anticommutator(Q(1, 2), Q(1, 3)), ga_anticommutator(Q(1, 3), Q(2, 3)));
  b.ga_eq("{Q13, Q23} = {Q12, Q23}", ga_anticommutator(Q(1, 3), Q(2, 3)), ga_anticommutator(Q(1, 2), Q(2, 3)));
  const GroupAlgebraElement qsum = Q(1, 2) + Q(1, 3) + Q(2, 3);
  b.ga_eq("Q^2 = 3 + 3 {Q12, Q13}", qsum * qsum,
          num(3) * one + num(3) * ga_anticommutator(Q(1, 2), Q(1, 3)));
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    b.ga_eq("{Q" + idx(i, j) + " + Q" + idx(i, k) + ", Q" + idx(i, k) + " + Q" + idx(j, k) + "} = 3 {Q" + idx(i, j) +
                ", Q" + idx(j, k) + "} + 2",
            ga_anticommutator(Q(i, j) + Q(i, k), Q(i, k) + Q(j, k)),
            num(3) * ga_anticommutator(Q(i, j), Q(j, k)) + num(2) * one);
  }

  b.anchor("Jucys-Murphy elements commute");
  const auto jm = jucys_murphy(3);
  const char* jm_names[] = {"R1", "R2", "R3", "m2", "m3"};
  for (int u = 0; u < 5; ++u)
    for (int v = u + 1; v < 5; ++v)
      b.ga_eq(std::string("[") + jm_names[u] + ", " + jm_names[v] + "] = 0", ga_commutator(jm[u], jm[v]),
              GroupAlgebraElement(3));

  b.anchor("Q_ij and the centralizer");
  for (auto [i, j] : pairs3()) b.zero("[Q" + idx(i, j) + ", C" + idx(i, j) + "] = 0", commutator(Qo(i, j), f.c(i, j)));
  const std::vector<std::array<int, 4>> inter = {{1, 2, 1, 3}, {1, 2, 2, 3}, {1, 3, 1, 2},
                                                 {1, 3, 2, 3}, {2, 3, 1, 2}, {2, 3, 1, 3}};
  for (const auto& q : inter) {
    const int i = q[0], j = q[1], k = q[2], l = q[3];
    // Q_ij exchanges the two other pairs.
    std::vector<int> other{k, l};
    for (int& v : other)
      if (v == i) v = j;
      else if (v == j) v = i;
    std::sort(other.begin(), other.end());
    b.eq("Q" + idx(i, j) + " C" + idx(k, l) + " = C" + idx(other[0], other[1]) + " Q" + idx(i, j),
         Qo(i, j) * f.c(k, l), f.c(other[0], other[1]) * Qo(i, j));
  }
  for (auto [i, j] : pairs3()) {
    const int k = 6 - i - j;
    b.eq("C" + idx(i) + " + C" + idx(j) + " - C" + idx(k) + " = 2 a Q" + idx(i, j) + " + b",
         f.c(i) + f.c(j) - f.c(k), num(2) * r.a * Qo(i, j) + r.scalar(r.b));
    b.zero("[Q" + idx(i, j) + ", A+] = 0", commutator(Qo(i, j), r.a_plus));
    b.zero("[Q" + idx(i, j) + ", A-] = 0", commutator(Qo(i, j), r.a_minus));
  }

  b.anchor("hyperoctahedral Bannai-Ito relation");
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    const Operator rhs = f.c(i, k) + num(2) * (f.gamma() * (r.a * (Qo(i, j) + Qo(j, k)) + r.scalar(r.b))) +
                         r.a.pow(2) * (num(3) * anticommutator(Qo(i, j), Qo(j, k)) + r.scalar(num(2))) +
                         num(2) * r.a * r.b * (Qo(i, j) + Qo(j, k) + num(2) * Qo(i, k)) +
                         r.scalar(num(2) * r.b.pow(2));
    b.eq("{C" + idx(i, j) + ", C" + idx(j, k) + "} = C" + idx(i, k) + " + 2 Gamma (a (Q" + idx(i, j) + " + Q" +
             idx(j, k) + ") + b) + a^2 (3 {Q" + idx(i, j) + ", Q" + idx(j, k) + "} + 2) + 2ab (Q" + idx(i, j) +
             " + Q" + idx(j, k) + " + 2 Q" + idx(i, k) + ") + 2b^2",
         anticommutator(f.c(i, j), f.c(j, k)), rhs);
  }
  for (int j = 1; j <= 3; ++j)
    b.eq("{Gamma, C" + idx(j) + "} = 2 Gamma C" + idx(j), anticommutator(f.gamma(), f.c(j)),
         num(2) * (f.gamma() * f.c(j)));

  b.anchor("cyclic relation through Q_ij");
  const Operator lhs = commutator(f.c(1, 2), f.c(3)) + commutator(f.c(2, 3), f.c(1)) + commutator(f.c(1, 3), f.c(2));
  const Operator qform = commutator(f.c(1, 2), Qo(1, 3) + Qo(2, 3)) + commutator(f.c(2, 3), Qo(1, 2) + Qo(1, 3)) +
                         commutator(f.c(1, 3), Qo(1, 2) + Qo(2, 3));
  b.eq("[C12, C3] + [C23, C1] + [C13, C2] = a ([C12, Q13 + Q23] + [C23, Q12 + Q13] + [C13, Q12 + Q23])", lhs,
       r.a * qform);
  b.zero("[C12, Q13 + Q23] + [C23, Q12 + Q13] + [C13, Q12 + Q23] = 0", qform);
}

// --------------------------------------------------------- casimir-invariant
void casimir_invariant(const Realization& r, const CentralizerFamily& f, Builder& b) {
  auto Qo = [&](int i, int j) { return r.q_op(i, j); };
  const Operator q = Qo(1, 2) + Qo(1, 3) + Qo(2, 3);
  const Operator sq = f.c(1, 2) * f.c(1, 2) + f.c(1, 3) * f.c(1, 3) + f.c(2, 3) * f.c(2, 3);
  const Operator cas = hyperoctahedral_casimir(f);

  b.anchor("Casimir of the hyperoctahedral algebra");
  for (auto [i, j] : pairs3()) b.zero("[C, C" + idx(i, j) + "] = 0", commutator(cas, f.c(i, j)));
  for (int i = 1; i <= 3; ++i) b.zero("[C, C" + idx(i) + "] = 0", commutator(cas, f.c(i)));

  b.anchor("Casimir commutation steps");
  const Operator q12_23 = anticommutator(Qo(1, 2), Qo(2, 3));
  for (auto [i, j] : pairs3())
    b.eq("[C12^2 + C13^2 + C23^2, C" + idx(i, j) + "] = 3a^2 [{Q12, Q23}, C" + idx(i, j) + "] + 4ab [Q, C" + idx(i, j) +
             "]",
         commutator(sq, f.c(i, j)),
         num(3) * r.a.pow(2) * commutator(q12_23, f.c(i, j)) + num(4) * r.a * r.b * commutator(q, f.c(i, j)));
  b.eq("[C12^2 + C13^2 + C23^2, C1] = a [C12^2 + C13^2 + C23^2, Q12 + Q13]", commutator(sq, f.c(1)),
       r.a * commutator(sq, Qo(1, 2) + Qo(1, 3)));
  b.zero("[C13^2 + C23^2, Q12] = 0", commutator(f.c(1, 3) * f.c(1, 3) + f.c(2, 3) * f.c(2, 3), Qo(1, 2)));
  b.zero("[C12^2 + C23^2, Q13] = 0", commutator(f.c(1, 2) * f.c(1, 2) + f.c(2, 3) * f.c(2, 3), Qo(1, 3)));
  b.zero("[C12^2 + C13^2, Q23] = 0", commutator(f.c(1, 2) * f.c(1, 2) + f.c(1, 3) * f.c(1, 3), Qo(2, 3)));
  for (int i = 1; i <= 3; ++i) b.zero("[Q, C" + idx(i) + "] = 0", commutator(q, f.c(i)));

  b.anchor("Casimir through Gamma");
  b.eq("C = Gamma^2 + 3 (a^2 + b^2) - 1/4", cas,
       f.gamma() * f.gamma() + r.scalar(num(3) * (r.a.pow(2) + r.b.pow(2)) - kQuarter));
}

// ------------------------------------------------------------------ clifford
void clifford_suite(const Realization& r, const CentralizerFamily& f, Builder& b) {
  auto P = [&](int i) { return r.p_i(i); };
  auto e = [&](std::vector<int> s) { return e_product(r.n, s); };
  b.anchor("odd generators against reflections");
  for (int i = 1; i <= 3; ++i) {
    b.eq("[A-, R" + idx(i) + "] = 2 D" + idx(i) + " e" + idx(i) + " R" + idx(i), commutator(r.a_minus, P(i)),
         num(2) * (r.d[i - 1] * e({i}) * P(i)));
    b.eq("[A+, R" + idx(i) + "] = 2 x" + idx(i) + " e" + idx(i) + " R" + idx(i), commutator(r.a_plus, P(i)),
         num(2) * (r.x[i - 1] * e({i}) * P(i)));
  }

  b.anchor("O_S commute or anticommute with the Dirac operator");
  for (const auto& s : subsets3()) {
    const Operator o = closed::o_s(r, s);
    const long sign = (s.size() % 2 == 0) ? 1 : -1;
    const std::string sg = sign > 0 ? "" : "-";
    b.eq("A- O" + idx(s) + " = " + sg + "O" + idx(s) + " A-", r.a_minus * o, num(sign) * (o * r.a_minus));
    b.eq("A+ O" + idx(s) + " = " + sg + "O" + idx(s) + " A+", r.a_plus * o, num(sign) * (o * r.a_plus));
  }

  b.anchor("explicit two-index O_ij");
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j)
        b.eq("O" + idx(i, j) + " = M_ij + 1/2 (S_ii + S_jj) e_i e_j - 1/2 S_ik e_j e_k + 1/2 S_jk e_i e_k - 1/2 e_i e_j",
             closed::o_s(r, {i, j}), closed::o_ij_formula(r, i, j));

  auto literal_o = [&](int i, int j) {
    // Printed form with S_ij replaced by [x_i, D_j] = -S_ji.
    const int k = 6 - i - j;
    auto ss = [&](int p, int q) { return -s_ij(q, p, r.dunkl); };
    return m_ij(i, j, r.d) + kHalf * ((ss(i, i) + ss(j, j)) * e({i, j})) - kHalf * (ss(i, k) * e({j, k})) +
           kHalf * (ss(j, k) * e({i, k})) - kHalf * e({i, j});
  };
  for (auto [i, j] : pairs3())
    b.differ("O" + idx(i, j) + " != explicit form with S_ij read as [x_i, D_j]", closed::o_s(r, {i, j}), literal_o(i, j));

  b.anchor("Z_i anticommute with the odd generators");
  for (int i = 1; i <= 3; ++i) {
    b.zero("{A+, Z" + idx(i) + "} = 0", anticommutator(r.a_plus, z_i(r.n, i)));
    b.zero("{A-, Z" + idx(i) + "} = 0", anticommutator(r.a_minus, z_i(r.n, i)));
  }
  for (auto [i, j] : pairs3()) {
    const Operator zz = z_i(r.n, i) * z_i(r.n, j);
    b.zero("[Z" + idx(i) + " Z" + idx(j) + ", A+] = 0", commutator(zz, r.a_plus));
    b.zero("[Z" + idx(i) + " Z" + idx(j) + ", A-] = 0", commutator(zz, r.a_minus));
  }

  b.anchor("C_S from O_S");
  for (auto [i, j] : pairs3())
    b.eq("C" + idx(i, j) + " = O" + idx(i, j) + " e" + idx(j) + " e" + idx(i) + " R" + idx(i) + " R" + idx(j), f.c(i, j),
         closed::o_s(r, {i, j}) * e({j, i}) * P(i) * P(j));
  for (int i = 1; i <= 3; ++i)
    b.eq("C" + idx(i) + " = O" + idx(i) + " e" + idx(i) + " R" + idx(i), f.c(i), closed::o_s(r, {i}) * e({i}) * P(i));
  for (auto [i, j] : pairs3())
    b.differ("C" + idx(i, j) + " != O" + idx(i, j) + " e" + idx(i) + " e" + idx(j) + " R" + idx(i) + " R" + idx(j), f.c(i, j),
             closed::o_s(r, {i, j}) * e({i, j}) * P(i) * P(j));

  b.anchor("Clifford realization at a = 0");
  Assignment spec = r.specialization;
  spec["a"] = 0;
  const Realization r0 = realize(r.kind, spec);
  const CentralizerFamily f0(r0);
  for (auto [i, j] : pairs3())
    b.eq("a=0: C" + idx(i, j) + " = (-M_ij e_i e_j + b (R_i + R_j) + 1/2) R_i R_j", f0.c(i, j),
         closed::c_ij_clifford_a0(r0, i, j));
  for (int i = 1; i <= 3; ++i) b.eq("a=0: C" + idx(i) + " = b", f0.c(i), r0.scalar(r0.b));
  const DunklKind z2 = DunklKind::z2({r0.b, r0.b, r0.b});
  for (int i = 1; i <= 3; ++i)
    b.eq("a=0: D" + idx(i) + " = d_" + idx(i) + " + b/x" + idx(i) + " (1 - R" + idx(i) + ")", r0.d[i - 1], dunkl(i, z2));
}

// -------------------------------------------------------------- bi-reduction
void bi_reduction(const Realization& r, Builder& b) {
  if (r.kind == RealizationKind::kZ2Scalar) {
    const CentralizerFamily f(r);
    b.anchor("one-index elements are constants");
    for (int i = 1; i <= 3; ++i) b.eq("C" + idx(i) + " = mu" + idx(i), f.c(i), r.scalar(r.mu[i - 1]));
    b.anchor("cyclic relation trivializes");
    for (const auto& t : permutations3()) {
      if (t[0] > t[1]) continue;
      b.zero("[C" + idx(t[0], t[1]) + ", C" + idx(t[2]) + "] = 0", commutator(f.c(t[0], t[1]), f.c(t[2])));
    }
    b.anchor("Bannai-Ito relations with central structure constants");
    for (const auto& t : permutations3()) {
      const int i = t[0], j = t[1], k = t[2];
      b.eq("{C" + idx(i, j) + ", C" + idx(j, k) + "} = C" + idx(i, k) + " + 2 mu" + idx(j) + " Gamma + 2 mu" + idx(i) +
               " mu" + idx(k),
           anticommutator(f.c(i, j), f.c(j, k)),
           f.c(i, k) + num(2) * r.mu[j - 1] * f.gamma() + r.scalar(num(2) * r.mu[i - 1] * r.mu[k - 1]));
    }
    return;
  }
  Assignment spec = r.specialization;
  spec["a"] = 0;
  const Realization r0 = realize(r.kind, spec);
  const CentralizerFamily f(r0);
  b.anchor("one-index elements at a = 0");
  for (int i = 1; i <= 3; ++i) b.eq("a=0: C" + idx(i) + " = b", f.c(i), r0.scalar(r0.b));
  b.anchor("Bannai-Ito relations at a = 0");
  for (const auto& t : permutations3()) {
    const int i = t[0], j = t[1], k = t[2];
    b.eq("a=0: {C" + idx(i, j) + ", C" + idx(j, k) + "} = C" + idx(i, k) + " + 2 Gamma b + 2 b^2",
         anticommutator(f.c(i, j), f.c(j, k)),
         f.c(i, k) + num(2) * r0.b * f.gamma() + r0.scalar(num(2) * r0.b.pow(2)));
  }
  b.anchor("B_3 Dunkl operators at a = 0");
  const DunklKind z2 = DunklKind::z2({r0.b, r0.b, r0.b});
  for (int i = 1; i <= 3; ++i)
    b.eq("a=0: D" + idx(i) + " = Z2 Dunkl operator with mu = (b, b, b)", r0.d[i - 1], dunkl(i, z2));
}

struct SuiteSpec {
  const char* name;
  bool b3_scalar, z2_scalar, b3_clifford;
};

const std::vector<SuiteSpec>& registry() {
  static const std::vector<SuiteSpec> specs = {
      {"dunkl-core", true, true, true},          {"osp-core", true, true, true},
      {"involutions", true, true, true},         {"centralize", true, true, true},
      {"index-lemmas", true, true, true},        {"casimir-decomp", true, true, true},
      {"structure-relations", true, true, true}, {"closed-forms", true, false, true},
      {"hyperoct-structure", true, false, false}, {"casimir-invariant", true, false, false},
      {"clifford", false, false, true},          {"bi-reduction", true, true, false},
  };
  return specs;
}

const SuiteSpec* find_spec(std::string_view name) {
  for (const auto& s : registry())
    if (name == s.name) return &s;
  return nullptr;
}

std::optional<WitnessText> operator_witness(const EqualityCertificate& cert) {
  if (!cert.witness) return std::nullopt;
  return WitnessText{cert.witness->basis.to_string(), cert.witness->lhs.to_string(), cert.witness->rhs.to_string()};
}

IdentityResult run_one(const Identity& id, const Realization& r, int degree) {
  IdentityResult res;
  res.label = id.label;
  res.anchor = id.anchor;
  res.domain = id.domain;
  res.expect_equal = id.expect_equal;
  res.degree = degree;
  const auto start = std::chrono::steady_clock::now();
  if (id.domain == Identity::Domain::kGroupAlgebra) {
    if (auto g = first_difference(id.ga_lhs, id.ga_rhs)) {
      res.sides_equal = false;
      res.witness = WitnessText{g->to_string(), id.ga_lhs.coefficient(*g).to_string(), id.ga_rhs.coefficient(*g).to_string()};
    }
  } else {
    const EqualityCertificate cert = operators_equal(id.lhs, id.rhs, degree, r.equality_options(1));
    res.sides_equal = cert.equal();
    res.witness = operator_witness(cert);
  }
  res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return res;
}

}  // namespace

bool SuiteReport::passed() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(results.begin(), results.end(), [](const IdentityResult& r) { return !r.passed(); }));
}

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : registry()) out.emplace_back(s.name);
  return out;
}

bool suite_exists(std::string_view name) { return find_spec(name) != nullptr; }

bool suite_supports(std::string_view name, RealizationKind kind) {
  const SuiteSpec* s = find_spec(name);
  if (!s) return false;
  switch (kind) {
    case RealizationKind::kB3Scalar: return s->b3_scalar;
    case RealizationKind::kZ2Scalar: return s->z2_scalar;
    case RealizationKind::kB3Clifford: return s->b3_clifford;
  }
  return false;
}

std::vector<Identity> build_suite(std::string_view name, const Realization& r) {
  if (!suite_exists(name)) throw StructuralError("unknown suite '" + std::string(name) + "'");
  if (!suite_supports(name, r.kind))
    throw StructuralError("suite '" + std::string(name) + "' does not apply to realization " +
                          std::string(realization_name(r.kind)));
  Builder b(r.n);
  const CentralizerFamily f(r);
  if (name == "dunkl-core") dunkl_core(r, b);
  else if (name == "osp-core") osp_core(r, f, b);
  else if (name == "involutions") involutions(r, b);
  else if (name == "centralize") centralize(r, f, b);
  else if (name == "index-lemmas") index_lemmas(r, f, b);
  else if (name == "casimir-decomp") casimir_decomp(r, f, b);
  else if (name == "structure-relations") structure_relations(r, f, b);
  else if (name == "closed-forms") {
    if (r.clifford()) closed_forms_clifford(r, f, b);
    else closed_forms_scalar(r, f, b);
  } else if (name == "hyperoct-structure") hyperoct_structure(r, f, b);
  else if (name == "casimir-invariant") casimir_invariant(r, f, b);
  else if (name == "clifford") clifford_suite(r, f, b);
  else if (name == "bi-reduction") bi_reduction(r, b);
  return b.take();
}

SuiteReport verify_identities(std::string name, const std::vector<Identity>& ids, const Realization& r, int degree,
                              const VerifyOptions& options) {
  SuiteReport report;
  report.name = std::move(name);
  report.degree = degree;
  report.results.resize(ids.size());
  const int workers = std::max(1, std::min<int>(options.jobs, static_cast<int>(ids.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < ids.size(); k = next++) report.results[k] = run_one(ids[k], r, degree);
  };
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  return report;
}

SuiteReport verify_suite(std::string_view name, const Realization& r, int degree, const VerifyOptions& options) {
  return verify_identities(std::string(name), build_suite(name, r), r, degree, options);
}

Realization realize_checked(RealizationKind kind, int degree, const Assignment& specialization, int jobs) {
  Realization r = realize(kind, specialization);
  std::vector<std::pair<std::string, std::pair<Operator, Operator>>> checks = {
      {"{A+, A-} = 2 A0", {anticommutator(r.a_plus, r.a_minus), num(2) * r.a_zero}},
      {"[A0, A+] = A+", {commutator(r.a_zero, r.a_plus), r.a_plus}},
      {"[A0, A-] = -A-", {commutator(r.a_zero, r.a_minus), -r.a_minus}},
      {"P^2 = 1", {r.p * r.p, r.one()}},
      {"[P, A0] = 0", {commutator(r.p, r.a_zero), Operator::zero(r.n)}},
      {"{P, A+} = 0", {anticommutator(r.p, r.a_plus), Operator::zero(r.n)}},
      {"{P, A-} = 0", {anticommutator(r.p, r.a_minus), Operator::zero(r.n)}},
  };
  for (int i = 1; i <= r.n; ++i) {
    const std::string P = "P" + idx(i);
    checks.push_back({"[" + P + ", A0] = 0", {commutator(r.p_i(i), r.a_zero), Operator::zero(r.n)}});
    checks.push_back({"[" + P + ", B+] = 0", {commutator(r.p_i(i), r.b_plus), Operator::zero(r.n)}});
    checks.push_back({"[" + P + ", B-] = 0", {commutator(r.p_i(i), r.b_minus), Operator::zero(r.n)}});
    for (int j = 1; j <= r.n; ++j) {
      if (i == j) continue;
      const std::string Q = "P" + idx(j);
      checks.push_back({"[" + P + ", [" + Q + ", A+]] = 0",
                        {commutator(r.p_i(i), commutator(r.p_i(j), r.a_plus)), Operator::zero(r.n)}});
      checks.push_back({"[" + P + ", [" + Q + ", A-]] = 0",
                        {commutator(r.p_i(i), commutator(r.p_i(j), r.a_minus)), Operator::zero(r.n)}});
    }
  }
  for (const auto& [label, sides] : checks) {
    EqualityCertificate cert = operators_equal(sides.first, sides.second, degree, r.equality_options(jobs));
    if (!cert.equal())
      throw RealizationError("realization " + std::string(realization_name(kind)) + " violates " + label, label,
                             std::move(cert));
  }
  return r;
}

}  // namespace gbi
