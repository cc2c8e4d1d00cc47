#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "gbi/bannaiito/realization.hpp"

namespace gbi {

// Three independent constructions of the centralizing element C_S.
enum class Construction {
  kNested,      // 1/4 {A-, [A+, P_S]} - 1/2 P_S
  kSwapped,     // 1/4 {[P_S, A-], A+} - 1/2 P_S
  kExpanded     // 1/4 (A-A+P_S - A-P_S A+ + A+P_S A- - P_S A+A-) - 1/2 P_S
};

// S is an ordered, nonempty subset of {1,2,3}; the empty set is rejected.
Operator centralizer_element(const std::vector<int>& s, const Realization& r,
                             Construction how = Construction::kNested);

// Gamma = 1/2 ([A-, A+] - 1) P.
Operator casimir_gamma(const Realization& r);

class CentralizerFamily;

// C = C12^2 + C13^2 + C23^2 - a^2 Q^2 - 4ab Q with Q = Q12 + Q13 + Q23
// (B_3 realizations only).
Operator hyperoctahedral_casimir(const CentralizerFamily& f);

// Memoized C_S handles for one realization, so every identity that
// mentions C_12 shares the same operator (and its cached images).
class CentralizerFamily {
 public:
  explicit CentralizerFamily(const Realization& r) : r_(r) {}

  const Realization& realization() const { return r_; }
  Operator c(const std::vector<int>& s) const;  // nested construction, order as given
  Operator c(int i) const { return c(std::vector<int>{i}); }
  Operator c(int i, int j) const { return c(std::vector<int>{i, j}); }
  Operator gamma() const;

 private:
  const Realization& r_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<int>, Operator> cache_;
  mutable Operator gamma_;
};

}  // namespace gbi
