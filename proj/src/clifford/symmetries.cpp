#include "gbi/clifford/symmetries.hpp"

#include "gbi/exactring/errors.hpp"

namespace gbi {

Operator z_i(int n, int i) {
  return Operator::left_mul(CliffordElement::generator(n, i)) * Operator::group(SignedPerm::reflection(n, i));
}

Operator w_ij(int n, int i, int j) {
  if (i == j) throw StructuralError("W_ij needs distinct indices");
  const auto ei = CliffordElement::generator(n, i);
  const auto ej = CliffordElement::generator(n, j);
  const auto pi = SignedPerm::transposition(n, i, j);
  const auto rrpi = SignedPerm::reflection(n, i) * SignedPerm::reflection(n, j) * pi;
  Operator w = Operator::left_mul(ei - ej) * Operator::group(pi) + Operator::left_mul(ei + ej) * Operator::group(rrpi);
  return ParamPoly(Rational(1, 2)) * w;
}

Operator e_product(int n, const std::vector<int>& indices) {
  return Operator::left_mul(CliffordElement::product(n, indices));
}

}  // namespace gbi
