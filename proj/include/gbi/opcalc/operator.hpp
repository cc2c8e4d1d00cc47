#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gbi/clifford/clifford_poly.hpp"
#include "gbi/hyperoct/group_algebra.hpp"

namespace gbi {

// Leaf action of an operator, defined on module basis elements x^alpha e_T.
// Implementations must be linear-ready: the image of a basis element only.
class Primitive {
 public:
  virtual ~Primitive() = default;
  virtual CliffordPoly image(const BasisKey& k, int n) const = 0;
  virtual std::string name() const = 0;
  // Costly primitives ask the operator layer to remember their images.
  virtual bool memoize() const { return false; }
};

namespace detail {
class Node;
}

// Linear operator on CliffordPoly, built lazily as a composition tree.
// Products compose right to left: (A * B)(f) = A(B(f)).
// Handles are cheap to copy; composite nodes memoize basis images, so
// sharing one handle across many expressions shares the work.
class Operator {
 public:
  Operator() = default;

  static Operator zero(int n);
  static Operator identity(int n);
  static Operator scalar(int n, const ParamPoly& c);
  static Operator mul_x(int n, int i);
  static Operator mul_poly(const XPoly& f);
  static Operator left_mul(const CliffordElement& u);
  static Operator group(const SignedPerm& g);
  static Operator group_algebra(const GroupAlgebraElement& u);
  static Operator partial(int n, int i);
  static Operator primitive(int n, std::shared_ptr<const Primitive> p);

  bool valid() const { return node_ != nullptr; }
  int n() const;
  const std::string& name() const;
  // Copy of this handle that renders as `name` in diagnostics.
  Operator named(std::string name) const;

  CliffordPoly apply(const CliffordPoly& f) const;
  CliffordPoly apply_basis(const BasisKey& k) const;
  // Image without storing it in this node's memo table.
  CliffordPoly apply_basis_transient(const BasisKey& k) const;

  friend Operator operator+(const Operator& a, const Operator& b);
  friend Operator operator-(const Operator& a, const Operator& b);
  friend Operator operator*(const Operator& a, const Operator& b);
  friend Operator operator*(const ParamPoly& c, const Operator& a);
  Operator operator-() const;

  friend Operator sum(const std::vector<Operator>& ops);
  friend Operator compose(const std::vector<Operator>& ops);

 private:
  explicit Operator(std::shared_ptr<const detail::Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const detail::Node> node_;
};

Operator sum(const std::vector<Operator>& ops);
Operator compose(const std::vector<Operator>& ops);
Operator commutator(const Operator& a, const Operator& b);      // [a, b] = ab - ba
Operator anticommutator(const Operator& a, const Operator& b);  // {a, b} = ab + ba

}  // namespace gbi
