#include "gbi/opcalc/operator.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>
#include <utility>

#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

struct BasisKeyHash {
  std::size_t operator()(const BasisKey& k) const {
    std::size_t h = k.blade;
    for (auto e : k.mono.exp) h = h * 31 + e;
    return h;
  }
};

}  // namespace

namespace detail {

class Node {
 public:
  explicit Node(int n, std::string name) : n_(n), name_(std::move(name)) {}
  virtual ~Node() = default;

  int n() const { return n_; }
  const std::string& name() const { return name_; }

  CliffordPoly image(const BasisKey& k, bool store) const {
    if (!memoized()) return compute(k);
    {
      std::shared_lock lock(mu_);
      auto it = memo_.find(k);
      if (it != memo_.end()) return it->second;
    }
    CliffordPoly r = compute(k);
    if (store) {
      std::unique_lock lock(mu_);
      memo_.emplace(k, r);
    }
    return r;
  }

  CliffordPoly apply(const CliffordPoly& f) const {
    if (f.n() != n_) throw StructuralError("operator and polynomial disagree on variable count");
    CliffordPoly out(n_);
    for (const auto& [k, c] : f.terms()) out.add_scaled(image(k, true), c);
    return out;
  }

 protected:
  virtual CliffordPoly compute(const BasisKey& k) const = 0;
  virtual bool memoized() const { return false; }

 private:
  int n_;
  std::string name_;
  mutable std::shared_mutex mu_;
  mutable std::unordered_map<BasisKey, CliffordPoly, BasisKeyHash> memo_;
};

namespace {

class Renamed final : public Node {
 public:
  Renamed(std::shared_ptr<const Node> inner, std::string name) : Node(inner->n(), std::move(name)), inner_(std::move(inner)) {}

 protected:
  CliffordPoly compute(const BasisKey& k) const override { return inner_->image(k, true); }

 private:
  std::shared_ptr<const Node> inner_;
};

class Leaf final : public Node {
 public:
  Leaf(int n, std::shared_ptr<const Primitive> p) : Node(n, p->name()), p_(std::move(p)) {}

 protected:
  CliffordPoly compute(const BasisKey& k) const override { return p_->image(k, n()); }
  bool memoized() const override { return p_->memoize(); }

 private:
  std::shared_ptr<const Primitive> p_;
};

class Linear final : public Node {
 public:
  Linear(int n, std::vector<std::pair<ParamPoly, std::shared_ptr<const Node>>> parts, std::string name)
      : Node(n, std::move(name)), parts_(std::move(parts)) {}

 protected:
  CliffordPoly compute(const BasisKey& k) const override {
    CliffordPoly out(n());
    for (const auto& [c, node] : parts_) out.add_scaled(node->image(k, true), c);
    return out;
  }
  bool memoized() const override { return true; }

 private:
  std::vector<std::pair<ParamPoly, std::shared_ptr<const Node>>> parts_;
};

class Composite final : public Node {
 public:
  // factors_[0] acts last.
  Composite(int n, std::vector<std::shared_ptr<const Node>> factors, std::string name)
      : Node(n, std::move(name)), factors_(std::move(factors)) {}

 protected:
  CliffordPoly compute(const BasisKey& k) const override {
    CliffordPoly v = factors_.back()->image(k, true);
    for (auto it = factors_.rbegin() + 1; it != factors_.rend(); ++it) {
      if (v.is_zero()) break;
      v = (*it)->apply(v);
    }
    return v;
  }
  bool memoized() const override { return true; }

 private:
  std::vector<std::shared_ptr<const Node>> factors_;
};

class ScalarPrim final : public Primitive {
 public:
  explicit ScalarPrim(ParamPoly c) : c_(std::move(c)) {}
  CliffordPoly image(const BasisKey& k, int n) const override { return CliffordPoly::basis(n, k, c_); }
  std::string name() const override { return c_.to_string(); }

 private:
  ParamPoly c_;
};

class MulPolyPrim final : public Primitive {
 public:
  explicit MulPolyPrim(XPoly f, std::string name) : f_(std::move(f)), name_(std::move(name)) {}
  CliffordPoly image(const BasisKey& k, int n) const override { return f_ * CliffordPoly::basis(n, k); }
  std::string name() const override { return name_; }

 private:
  XPoly f_;
  std::string name_;
};

class LeftMulPrim final : public Primitive {
 public:
  explicit LeftMulPrim(CliffordElement u) : u_(std::move(u)) {}
  CliffordPoly image(const BasisKey& k, int n) const override { return u_ * CliffordPoly::basis(n, k); }
  std::string name() const override { return u_.to_string(); }

 private:
  CliffordElement u_;
};

class GroupPrim final : public Primitive {
 public:
  explicit GroupPrim(GroupAlgebraElement u) : u_(std::move(u)) {}
  CliffordPoly image(const BasisKey& k, int n) const override {
    CliffordPoly out(n);
    for (const auto& [g, c] : u_.terms()) {
      auto [m, s] = g.act(k.mono);
      out.add_term({m, k.blade}, s > 0 ? c : -c);
    }
    return out;
  }
  std::string name() const override { return u_.to_string(); }

 private:
  GroupAlgebraElement u_;
};

class PartialPrim final : public Primitive {
 public:
  explicit PartialPrim(int i) : i_(i) {}
  CliffordPoly image(const BasisKey& k, int n) const override {
    CliffordPoly out(n);
    int e = k.mono.exp[i_ - 1];
    if (e == 0) return out;
    Monomial m = k.mono;
    m.exp[i_ - 1] = static_cast<std::uint8_t>(e - 1);
    out.add_term({m, k.blade}, ParamPoly(e));
    return out;
  }
  std::string name() const override { return "d" + std::to_string(i_); }

 private:
  int i_;
};

void check_same(int a, int b) {
  if (a != b) throw StructuralError("operators disagree on variable count");
}

}  // namespace
}  // namespace detail

int Operator::n() const {
  if (!node_) throw StructuralError("empty operator");
  return node_->n();
}

const std::string& Operator::name() const {
  static const std::string empty;
  return node_ ? node_->name() : empty;
}

Operator Operator::named(std::string name) const {
  return Operator(std::make_shared<detail::Renamed>(node_, std::move(name)));
}

Operator Operator::zero(int n) {
  return Operator(std::make_shared<detail::Linear>(
      n, std::vector<std::pair<ParamPoly, std::shared_ptr<const detail::Node>>>{}, "0"));
}

Operator Operator::identity(int n) { return scalar(n, ParamPoly(1)); }

Operator Operator::scalar(int n, const ParamPoly& c) {
  return primitive(n, std::make_shared<detail::ScalarPrim>(c));
}

Operator Operator::mul_x(int n, int i) {
  return primitive(n, std::make_shared<detail::MulPolyPrim>(XPoly::var(n, i), "x" + std::to_string(i)));
}

Operator Operator::mul_poly(const XPoly& f) {
  return primitive(f.n(), std::make_shared<detail::MulPolyPrim>(f, f.to_string()));
}

Operator Operator::left_mul(const CliffordElement& u) {
  return primitive(u.n(), std::make_shared<detail::LeftMulPrim>(u));
}

Operator Operator::group(const SignedPerm& g) { return group_algebra(GroupAlgebraElement(g)); }

Operator Operator::group_algebra(const GroupAlgebraElement& u) {
  return primitive(u.n(), std::make_shared<detail::GroupPrim>(u));
}

Operator Operator::partial(int n, int i) {
  if (i < 1 || i > n) throw StructuralError("derivative index out of range");
  return primitive(n, std::make_shared<detail::PartialPrim>(i));
}

Operator Operator::primitive(int n, std::shared_ptr<const Primitive> p) {
  if (n < 0 || n > kMaxVars) throw StructuralError("variable count out of range");
  return Operator(std::make_shared<detail::Leaf>(n, std::move(p)));
}

CliffordPoly Operator::apply(const CliffordPoly& f) const {
  if (!node_) throw StructuralError("empty operator");
  return node_->apply(f);
}

CliffordPoly Operator::apply_basis(const BasisKey& k) const { return node_->image(k, true); }

CliffordPoly Operator::apply_basis_transient(const BasisKey& k) const { return node_->image(k, false); }

Operator sum(const std::vector<Operator>& ops) {
  if (ops.empty()) throw StructuralError("empty sum");
  std::vector<std::pair<ParamPoly, std::shared_ptr<const detail::Node>>> parts;
  const int n = ops.front().n();
  for (const auto& op : ops) {
    detail::check_same(n, op.n());
    parts.emplace_back(ParamPoly(1), op.node_);
  }
  return Operator(std::make_shared<detail::Linear>(n, std::move(parts), "sum"));
}

Operator compose(const std::vector<Operator>& ops) {
  if (ops.empty()) throw StructuralError("empty product");
  if (ops.size() == 1) return ops.front();
  std::vector<std::shared_ptr<const detail::Node>> factors;
  const int n = ops.front().n();
  for (const auto& op : ops) {
    detail::check_same(n, op.n());
    factors.push_back(op.node_);
  }
  return Operator(std::make_shared<detail::Composite>(n, std::move(factors), "product"));
}

Operator operator+(const Operator& a, const Operator& b) { return sum({a, b}); }

Operator operator-(const Operator& a, const Operator& b) {
  detail::check_same(a.n(), b.n());
  return Operator(std::make_shared<detail::Linear>(
      a.n(),
      std::vector<std::pair<ParamPoly, std::shared_ptr<const detail::Node>>>{{ParamPoly(1), a.node_},
                                                                             {ParamPoly(-1), b.node_}},
      "difference"));
}

Operator operator*(const Operator& a, const Operator& b) { return compose({a, b}); }

Operator operator*(const ParamPoly& c, const Operator& a) {
  return Operator(std::make_shared<detail::Linear>(
      a.n(), std::vector<std::pair<ParamPoly, std::shared_ptr<const detail::Node>>>{{c, a.node_}}, "scaled"));
}

Operator Operator::operator-() const { return ParamPoly(-1) * *this; }

Operator commutator(const Operator& a, const Operator& b) { return a * b - b * a; }

Operator anticommutator(const Operator& a, const Operator& b) { return a * b + b * a; }

}  // namespace gbi
