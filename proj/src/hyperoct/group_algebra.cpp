#include "gbi/hyperoct/group_algebra.hpp"

#include <deque>
#include <set>

#include "gbi/exactring/errors.hpp"

namespace gbi {

GroupAlgebraElement::GroupAlgebraElement(const SignedPerm& g, const ParamPoly& c) : n_(g.n()) { add_term(g, c); }

GroupAlgebraElement GroupAlgebraElement::scalar(int n, const ParamPoly& c) { return {SignedPerm::identity(n), c}; }

ParamPoly GroupAlgebraElement::coefficient(const SignedPerm& g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? ParamPoly() : it->second;
}

void GroupAlgebraElement::add_term(const SignedPerm& g, const ParamPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(g, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void GroupAlgebraElement::check(const GroupAlgebraElement& o) const {
  if (n_ != o.n_) throw StructuralError("mismatched group rank");
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  check(o);
  for (const auto& [g, c] : o.terms_) add_term(g, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  check(o);
  for (const auto& [g, c] : o.terms_) add_term(g, -c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator-() const {
  GroupAlgebraElement r = *this;
  for (auto& [g, c] : r.terms_) c = -c;
  return r;
}

GroupAlgebraElement operator*(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
  u.check(v);
  GroupAlgebraElement r(u.n_);
  for (const auto& [g, cg] : u.terms_)
    for (const auto& [h, ch] : v.terms_) r.add_term(g * h, cg * ch);
  return r;
}

GroupAlgebraElement operator*(const ParamPoly& c, const GroupAlgebraElement& u) {
  GroupAlgebraElement r(u.n_);
  for (const auto& [g, cg] : u.terms_) r.add_term(g, c * cg);
  return r;
}

bool operator==(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  return a.n_ == b.n_ && a.terms_ == b.terms_;
}

XPoly GroupAlgebraElement::act(const XPoly& f) const {
  if (f.n() != n_) throw StructuralError("mismatched variable count");
  XPoly r(n_);
  for (const auto& [g, c] : terms_) r += c * g.act(f);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::substitute(const Assignment& assignment) const {
  GroupAlgebraElement r(n_);
  for (const auto& [g, c] : terms_) r.add_term(g, c.substitute(assignment));
  return r;
}

std::string GroupAlgebraElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [g, c] : terms_) {
    std::string word = g.to_string();
    auto cv = c.constant_value();
    std::string body;
    bool negative = false;
    if (cv) {
      negative = *cv < 0;
      Rational mag = abs(*cv);
      if (word == "1") body = rational_string(mag);
      else if (mag == 1) body = word;
      else body = rational_string(mag) + "*" + word;
    } else {
      body = "(" + c.to_string() + ")" + (word == "1" ? "" : "*" + word);
    }
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    out += body;
    first = false;
  }
  return out;
}

GroupAlgebraElement ga_mul(const GroupAlgebraElement& u, const GroupAlgebraElement& v) { return u * v; }

GroupAlgebraElement ga_commutator(const GroupAlgebraElement& u, const GroupAlgebraElement& v) { return u * v - v * u; }

GroupAlgebraElement ga_anticommutator(const GroupAlgebraElement& u, const GroupAlgebraElement& v) {
  return u * v + v * u;
}

std::optional<SignedPerm> first_difference(const GroupAlgebraElement& lhs, const GroupAlgebraElement& rhs) {
  GroupAlgebraElement diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  return diff.terms().begin()->first;
}

std::vector<SignedPerm> enumerate_group(int n) {
  std::vector<SignedPerm> gens;
  for (int i = 1; i <= n; ++i) gens.push_back(SignedPerm::reflection(n, i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) gens.push_back(SignedPerm::transposition(n, i, j));
  std::set<SignedPerm> seen{SignedPerm::identity(n)};
  std::deque<SignedPerm> frontier{SignedPerm::identity(n)};
  while (!frontier.empty()) {
    SignedPerm g = frontier.front();
    frontier.pop_front();
    for (const auto& s : gens) {
      SignedPerm h = s * g;
      if (seen.insert(h).second) frontier.push_back(h);
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace gbi
