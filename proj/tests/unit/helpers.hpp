#pragma once

#include <random>

#include "gbi/bannaiito/realization.hpp"
#include "gbi/clifford/clifford_poly.hpp"
#include "gbi/exactring/xpoly.hpp"

namespace gbi::test {

inline const ParamSpace* ab_space() { return ParamSpace::intern({"a", "b"}); }
inline ParamPoly pa() { return ParamPoly::variable(ab_space(), "a"); }
inline ParamPoly pb() { return ParamPoly::variable(ab_space(), "b"); }
inline XPoly X(int i, int n = 3) { return XPoly::var(n, i); }
inline XPoly C(const ParamPoly& c, int n = 3) { return XPoly(n, c); }

// Small random polynomials with coefficients in {-3..3} and optional
// parameter factors; deterministic per seed.
class PolyGen {
 public:
  explicit PolyGen(unsigned seed) : rng_(seed) {}

  ParamPoly coeff(bool with_params) {
    std::uniform_int_distribution<int> c(-3, 3), e(0, 1);
    ParamPoly out(c(rng_));
    if (with_params) {
      if (e(rng_)) out = out * pa();
      if (e(rng_)) out = out + ParamPoly(c(rng_)) * pb();
    }
    return out;
  }

  XPoly poly(int n, int max_degree, int terms, bool with_params = true) {
    std::uniform_int_distribution<int> deg(0, max_degree), var(0, n - 1);
    XPoly p(n);
    for (int t = 0; t < terms; ++t) {
      Monomial m;
      const int d = deg(rng_);
      for (int k = 0; k < d; ++k) ++m.exp[var(rng_)];
      p += XPoly::monomial(n, m, coeff(with_params));
    }
    return p;
  }

  CliffordPoly module_element(int n, int max_degree, int terms) {
    std::uniform_int_distribution<int> blade(0, (1 << n) - 1);
    std::map<Blade, XPoly> comps;
    for (int t = 0; t < terms; ++t) {
      auto b = static_cast<Blade>(blade(rng_));
      auto it = comps.try_emplace(b, XPoly(n)).first;
      it->second += poly(n, max_degree, 2);
    }
    return CliffordPoly::from_components(n, comps);
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

}  // namespace gbi::test
