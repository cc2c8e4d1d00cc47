#include "gbi/hyperoct/elements.hpp"

#include <algorithm>

#include "gbi/exactring/errors.hpp"

namespace gbi {

GroupAlgebraElement ga_one(int n) { return GroupAlgebraElement(SignedPerm::identity(n)); }
GroupAlgebraElement ga_r(int n, int i) { return GroupAlgebraElement(SignedPerm::reflection(n, i)); }
GroupAlgebraElement ga_pi(int n, int i, int j) { return GroupAlgebraElement(SignedPerm::transposition(n, i, j)); }

GroupAlgebraElement q_ij(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3 || i == j) throw StructuralError("Q_ij needs distinct indices in {1,2,3}");
  if (i > j) std::swap(i, j);
  constexpr int n = 3;
  const Rational half(1, 2);
  auto r = [](int k) { return ga_r(n, k); };
  GroupAlgebraElement prefix(n);
  if (i == 1 && j == 3) {
    prefix = r(1) + r(2) + r(3) - r(1) * r(2) * r(3);
  } else {
    prefix = ga_one(n) + r(i) + r(j) - r(i) * r(j);
  }
  return ParamPoly(half) * (prefix * ga_pi(n, i, j));
}

std::vector<GroupAlgebraElement> jucys_murphy(int n) {
  if (n != 3) throw StructuralError("Jucys-Murphy elements are provided for n = 3 only");
  auto r = [n](int k) { return ga_r(n, k); };
  auto one = ga_one(n);
  GroupAlgebraElement m2 = (one + r(1) * r(2)) * ga_pi(n, 1, 2);
  GroupAlgebraElement m3 = (one + r(1) * r(3)) * ga_pi(n, 1, 3) + (one + r(2) * r(3)) * ga_pi(n, 2, 3);
  return {r(1), r(2), r(3), m2, m3};
}

}  // namespace gbi
