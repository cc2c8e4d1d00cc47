#include "gbi/cli/text.hpp"

#include <cctype>
#include <functional>

#include "gbi/bannaiito/centralizer.hpp"
#include "gbi/bannaiito/closed_forms.hpp"
#include "gbi/clifford/symmetries.hpp"
#include "gbi/exactring/errors.hpp"

namespace gbi {

namespace {

struct Token {
  enum class Kind { kNumber, kIdent, kSymbol, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t offset = 0;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Kind::kNumber, std::string(s.substr(start, i - start)), start});
    } else if (std::isalpha(c)) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      // Braced subscript such as C_{12}.
      if (i < s.size() && s[i] == '{' && s[i - 1] == '_') {
        std::size_t j = i + 1;
        while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
        if (j < s.size() && s[j] == '}' && j > i + 1) i = j + 1;
      }
      out.push_back({Token::Kind::kIdent, std::string(s.substr(start, i - start)), start});
    } else if (std::string_view("+-*/^()[]{},").find(static_cast<char>(c)) != std::string_view::npos) {
      out.push_back({Token::Kind::kSymbol, std::string(1, static_cast<char>(c)), start});
      ++i;
    } else {
      throw ParseError(std::string("unexpected character '") + static_cast<char>(c) + "'", start);
    }
  }
  out.push_back({Token::Kind::kEnd, "", s.size()});
  return out;
}

// Identifier without '_', '{', '}' split into its letter prefix and the rest.
std::pair<std::string, std::string> split_name(const std::string& raw) {
  std::string norm;
  for (char c : raw)
    if (c != '_' && c != '{' && c != '}') norm += c;
  std::size_t k = 0;
  while (k < norm.size() && std::isalpha(static_cast<unsigned char>(norm[k]))) ++k;
  return {norm.substr(0, k), norm.substr(k)};
}

// Generic recursive-descent driver over a value type V.
template <typename V>
class Parser {
 public:
  struct Hooks {
    std::function<V(const Rational&, std::size_t)> scalar;
    std::function<V(const Token&)> ident;
    std::function<V(const V&, const V&)> mul;
    std::function<V(const V&, const V&)> add;
    std::function<V(const V&)> neg;
    std::function<V(const V&, const V&, std::size_t)> bracket;       // [x, y]; null if unsupported
    std::function<V(const V&, const V&, std::size_t)> anti_bracket;  // {x, y}; null if unsupported
  };

  Parser(std::string_view text, Hooks hooks) : toks_(tokenize(text)), h_(std::move(hooks)) {}

  V parse() {
    V v = sum();
    if (peek().kind != Token::Kind::kEnd) throw ParseError("unexpected '" + peek().text + "'", peek().offset);
    return v;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  bool is(const char* sym) const { return peek().kind == Token::Kind::kSymbol && peek().text == sym; }
  Token take() { return toks_[pos_++]; }
  void expect(const char* sym) {
    if (!is(sym)) {
      const Token& t = peek();
      throw ParseError(std::string("expected '") + sym + "'" + (t.kind == Token::Kind::kEnd ? " before end of input" : ""),
                       t.offset);
    }
    ++pos_;
  }

  V sum() {
    bool negate = false;
    if (is("+") || is("-")) negate = take().text == "-";
    V acc = term();
    if (negate) acc = h_.neg(acc);
    while (is("+") || is("-")) {
      const bool minus = take().text == "-";
      V t = term();
      acc = h_.add(acc, minus ? h_.neg(t) : t);
    }
    return acc;
  }

  V term() {
    V acc = power();
    while (is("*")) {
      take();
      acc = h_.mul(acc, power());
    }
    return acc;
  }

  V power() {
    V base = primary();
    if (!is("^")) return base;
    take();
    const Token t = take();
    if (t.kind != Token::Kind::kNumber) throw ParseError("expected an exponent", t.offset);
    const unsigned long k = std::stoul(t.text);
    if (k == 0) return h_.scalar(Rational(1), t.offset);
    V acc = base;
    for (unsigned long i = 1; i < k; ++i) acc = h_.mul(acc, base);
    return acc;
  }

  V primary() {
    const Token t = peek();
    switch (t.kind) {
      case Token::Kind::kNumber: {
        take();
        Rational q(t.text);
        if (is("/")) {
          take();
          const Token d = take();
          if (d.kind != Token::Kind::kNumber) throw ParseError("expected a denominator", d.offset);
          Rational den(d.text);
          if (den == 0) throw ParseError("zero denominator", d.offset);
          q /= den;
        }
        return h_.scalar(q, t.offset);
      }
      case Token::Kind::kIdent: take(); return h_.ident(t);
      case Token::Kind::kEnd: throw ParseError("unexpected end of input", t.offset);
      case Token::Kind::kSymbol: break;
    }
    if (is("(")) {
      take();
      V v = sum();
      expect(")");
      return v;
    }
    if (is("[") && h_.bracket) {
      take();
      V x = sum();
      expect(",");
      V y = sum();
      expect("]");
      return h_.bracket(x, y, t.offset);
    }
    if (is("{") && h_.anti_bracket) {
      take();
      V x = sum();
      expect(",");
      V y = sum();
      expect("}");
      return h_.anti_bracket(x, y, t.offset);
    }
    throw ParseError("unexpected '" + t.text + "'", t.offset);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Hooks h_;
};

CliffordPoly poly_mul(const CliffordPoly& u, const CliffordPoly& v) {
  CliffordPoly out(u.n());
  for (const auto& [ku, cu] : u.terms())
    for (const auto& [kv, cv] : v.terms()) {
      const int sign = blade_product_sign(ku.blade, kv.blade);
      const BasisKey k{ku.mono * kv.mono, static_cast<Blade>(ku.blade ^ kv.blade)};
      out.add_term(k, ParamPoly(sign) * cu * cv);
    }
  return out;
}

std::optional<int> index_of_digits(const std::string& digits, int n) {
  if (digits.empty()) return std::nullopt;
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  const int i = std::stoi(digits);
  if (i < 1 || i > n) return std::nullopt;
  return i;
}

// Each digit is one 1-based index, e.g. "123" -> {1, 2, 3}.
std::vector<int> digit_indices(const std::string& digits, int n, std::size_t offset) {
  std::vector<int> out;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("malformed subscript", offset);
    const int i = c - '0';
    if (i < 1 || i > n) throw ParseError("index " + std::string(1, c) + " out of range 1.." + std::to_string(n), offset);
    out.push_back(i);
  }
  return out;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  const std::size_t num_start = i;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
  if (i == num_start) return std::nullopt;
  if (i < s.size()) {
    if (s[i] != '/') return std::nullopt;
    const std::size_t den_start = ++i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == den_start || i != s.size()) return std::nullopt;
  }
  if (s[0] == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) return std::nullopt;
  q.canonicalize();
  return q;
}

CliffordPoly parse_poly(std::string_view text, int n, const ParamSpace* space) {
  using P = Parser<CliffordPoly>;
  P::Hooks h;
  h.scalar = [n](const Rational& q, std::size_t) { return CliffordPoly(XPoly(n, ParamPoly(q))); };
  h.ident = [n, space](const Token& t) -> CliffordPoly {
    if (space) {
      if (auto k = space->index_of(t.text)) return CliffordPoly(XPoly(n, ParamPoly::variable(space, *k)));
    }
    auto [base, rest] = split_name(t.text);
    if (base == "x" || base == "e") {
      auto i = index_of_digits(rest, n);
      if (!i) throw ParseError("index out of range in '" + t.text + "' (expected 1.." + std::to_string(n) + ")", t.offset);
      if (base == "x") return CliffordPoly(XPoly::var(n, *i));
      return CliffordPoly::basis(n, BasisKey{Monomial::one(), static_cast<Blade>(1u << (*i - 1))});
    }
    throw ParseError("unknown symbol '" + t.text + "'", t.offset);
  };
  h.mul = poly_mul;
  h.add = [](const CliffordPoly& a, const CliffordPoly& b) { return a + b; };
  h.neg = [](const CliffordPoly& a) { return -a; };
  return P(text, std::move(h)).parse();
}

Operator parse_operator(std::string_view text, const Realization& r) {
  auto family = std::make_shared<CentralizerFamily>(r);
  const int n = r.n;
  using P = Parser<Operator>;
  P::Hooks h;
  h.scalar = [&r](const Rational& q, std::size_t) { return r.scalar(ParamPoly(q)); };
  h.ident = [&r, family, n](const Token& t) -> Operator {
    if (auto k = r.space->index_of(t.text)) return r.scalar(ParamPoly::variable(r.space, *k).substitute(r.specialization));
    auto [base, rest] = split_name(t.text);
    auto one = [&]() {
      auto v = digit_indices(rest, n, t.offset);
      if (v.size() != 1) throw ParseError("'" + t.text + "' takes one index", t.offset);
      return v[0];
    };
    auto two = [&]() {
      auto v = digit_indices(rest, n, t.offset);
      if (v.size() != 2 || v[0] == v[1]) throw ParseError("'" + t.text + "' takes two distinct indices", t.offset);
      return std::pair{v[0], v[1]};
    };
    auto set = [&]() {
      auto v = digit_indices(rest, n, t.offset);
      if (v.empty()) throw ParseError("'" + t.text + "' needs indices", t.offset);
      return v;
    };
    auto guarded = [&](auto&& build) -> Operator {
      try {
        return build();
      } catch (const StructuralError& e) {
        throw ParseError(std::string(e.what()) + " ('" + t.text + "')", t.offset);
      }
    };
    if (rest.empty()) {
      if (base == "Gamma") return family->gamma();
      if (base == "P" || base == "R") return r.p;
      if (base == "Aplus") return r.a_plus;
      if (base == "Aminus") return r.a_minus;
      if (base == "Bplus") return r.b_plus;
      if (base == "Bminus") return r.b_minus;
      if (base == "Casimir") return guarded([&] { return hyperoctahedral_casimir(*family); });
    }
    if (base == "A" && rest == "0") return r.a_zero;
    if (base == "D") return r.d[one() - 1];
    if (base == "x") return r.x[one() - 1];
    if (base == "R" || base == "P") return r.r[one() - 1];
    if (base == "Z") return z_i(n, one());
    if (base == "e") return e_product(n, digit_indices(rest, n, t.offset));
    if (base == "pi") {
      auto [i, j] = two();
      return Operator::group(SignedPerm::transposition(n, i, j));
    }
    if (base == "W") {
      auto [i, j] = two();
      return w_ij(n, i, j);
    }
    if (base == "S") {
      auto v = digit_indices(rest, n, t.offset);
      if (v.size() != 2) throw ParseError("'" + t.text + "' takes two indices", t.offset);
      return s_ij(v[0], v[1], r.dunkl);
    }
    if (base == "M") {
      auto [i, j] = two();
      return m_ij(i, j, r.d);
    }
    if (base == "Q") {
      auto [i, j] = two();
      return guarded([&] { return r.q_op(i, j); });
    }
    if (base == "C") {
      auto v = set();
      return guarded([&] { return family->c(v); });
    }
    if (base == "O") {
      auto v = set();
      return guarded([&] { return closed::o_s(r, v); });
    }
    throw ParseError("unknown operator '" + t.text + "'", t.offset);
  };
  h.mul = [](const Operator& a, const Operator& b) { return a * b; };
  h.add = [](const Operator& a, const Operator& b) { return a + b; };
  h.neg = [](const Operator& a) { return -a; };
  h.bracket = [](const Operator& a, const Operator& b, std::size_t) { return commutator(a, b); };
  h.anti_bracket = [](const Operator& a, const Operator& b, std::size_t) { return anticommutator(a, b); };
  return P(text, std::move(h)).parse();
}

}  // namespace gbi
