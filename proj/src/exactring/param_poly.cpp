#include "gbi/exactring/param_poly.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

int total(const ParamExponents& e) {
  int s = 0;
  for (auto v : e) s += v;
  return s;
}

// Graded lex, larger first.
bool before(const ParamExponents& x, const ParamExponents& y) {
  int dx = total(x), dy = total(y);
  if (dx != dy) return dx > dy;
  return x > y;
}

}  // namespace

const ParamSpace* ParamSpace::intern(const std::vector<std::string>& names) {
  static std::mutex mu;
  static std::vector<std::unique_ptr<ParamSpace>> pool;
  if (names.size() > kMaxParams) throw StructuralError("too many parameters");
  std::lock_guard lock(mu);
  for (const auto& s : pool)
    if (s->names() == names) return s.get();
  pool.push_back(std::make_unique<ParamSpace>(names));
  return pool.back().get();
}

std::optional<std::size_t> ParamSpace::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  return std::nullopt;
}

ParamPoly::ParamPoly(const Rational& c) {
  if (c != 0) terms_.emplace_back(ParamExponents{}, c);
}

ParamPoly::ParamPoly(long c) : ParamPoly(Rational(c)) {}

ParamPoly ParamPoly::variable(const ParamSpace* space, std::size_t index) {
  if (space == nullptr || index >= space->size()) throw StructuralError("parameter index out of range");
  ParamExponents e{};
  e[index] = 1;
  return monomial(space, e, 1);
}

ParamPoly ParamPoly::variable(const ParamSpace* space, std::string_view name) {
  auto idx = space ? space->index_of(name) : std::nullopt;
  if (!idx) throw StructuralError("unknown parameter '" + std::string(name) + "'");
  return variable(space, *idx);
}

ParamPoly ParamPoly::monomial(const ParamSpace* space, const ParamExponents& exps, const Rational& c) {
  ParamPoly p;
  if (c == 0) return p;
  bool has_param = total(exps) > 0;
  if (has_param) {
    if (space == nullptr) throw StructuralError("parameter monomial without parameter space");
    for (std::size_t i = space->size(); i < kMaxParams; ++i)
      if (exps[i] != 0) throw StructuralError("parameter index out of range");
    p.space_ = space;
  }
  p.terms_.emplace_back(exps, c);
  return p;
}

std::optional<Rational> ParamPoly::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && total(terms_[0].first) == 0) return terms_[0].second;
  return std::nullopt;
}

int ParamPoly::degree() const {
  return terms_.empty() ? -1 : total(terms_.front().first);
}

void ParamPoly::adopt_space(const ParamSpace* other) {
  if (other == nullptr || other == space_) return;
  if (space_ != nullptr) throw StructuralError("mismatched parameter lists");
  space_ = other;
}

void ParamPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return before(x.first, y.first); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
    } else {
      if (!out.empty() && out.back().second == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().second == 0) out.pop_back();
  terms_ = std::move(out);
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
  adopt_space(o.space_);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && before(i->first, j->first))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || before(j->first, i->first)) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) { return *this += -o; }

ParamPoly ParamPoly::operator-() const {
  ParamPoly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
  ParamPoly r;
  r.space_ = a.space_;
  r.adopt_space(b.space_);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (b.terms_.size() == 1 && total(b.terms_[0].first) == 0) {
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.second *= b.terms_[0].second;
    return r;
  }
  if (a.terms_.size() == 1 && total(a.terms_[0].first) == 0) {
    r.terms_ = b.terms_;
    for (auto& t : r.terms_) t.second *= a.terms_[0].second;
    return r;
  }
  r.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      ParamExponents e{};
      for (std::size_t k = 0; k < kMaxParams; ++k) e[k] = static_cast<std::uint8_t>(ea[k] + eb[k]);
      r.terms_.emplace_back(e, ca * cb);
    }
  }
  r.normalize();
  return r;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) { return *this = *this * o; }

bool operator==(const ParamPoly& a, const ParamPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  if (a.terms_.empty()) return true;
  if (a.space_ != b.space_ && a.space_ != nullptr && b.space_ != nullptr) return false;
  return a.terms_ == b.terms_;
}

ParamPoly ParamPoly::pow(unsigned k) const {
  ParamPoly r(1);
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

ParamPoly ParamPoly::substitute(const Assignment& assignment) const {
  if (space_ == nullptr || assignment.empty()) return *this;
  std::array<std::optional<Rational>, kMaxParams> values;
  for (const auto& [name, v] : assignment) {
    auto idx = space_->index_of(name);
    if (!idx) throw StructuralError("unknown parameter '" + name + "'");
    values[*idx] = v;
  }
  ParamPoly r;
  r.space_ = space_;
  for (const auto& [e, c] : terms_) {
    ParamExponents rest = e;
    Rational coef = c;
    for (std::size_t k = 0; k < kMaxParams; ++k) {
      if (values[k] && e[k] > 0) {
        mpq_class p = 1;
        for (int t = 0; t < e[k]; ++t) p *= *values[k];
        coef *= p;
        rest[k] = 0;
      }
    }
    r.terms_.emplace_back(rest, coef);
  }
  r.normalize();
  return r;
}

std::string rational_string(const Rational& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_str();
}

std::string ParamPoly::monomial_string(const ParamSpace* space, const ParamExponents& exps) {
  std::string s;
  for (std::size_t k = 0; k < kMaxParams; ++k) {
    if (exps[k] == 0) continue;
    if (!s.empty()) s += '*';
    s += space ? space->names()[k] : ("p" + std::to_string(k + 1));
    if (exps[k] > 1) s += "^" + std::to_string(exps[k]);
  }
  return s;
}

std::string ParamPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational mag = abs(c);
    std::string mono = monomial_string(space_, e);
    std::string body;
    if (mono.empty()) body = rational_string(mag);
    else if (mag == 1) body = mono;
    else body = rational_string(mag) + "*" + mono;
    if (first) out += (c < 0 ? "-" : "") + body;
    else out += (c < 0 ? " - " : " + ") + body;
    first = false;
  }
  return out;
}

}  // namespace gbi
