#pragma once

#include <vector>

#include "gbi/hyperoct/group_algebra.hpp"

namespace gbi {

// Shorthands for generators as group-algebra elements.
GroupAlgebraElement ga_one(int n);
GroupAlgebraElement ga_r(int n, int i);
GroupAlgebraElement ga_pi(int n, int i, int j);

// Involutions Q_ij of the B_3 group algebra:
//   Q12 = 1/2 (1 + R1 + R2 - R1R2) pi12
//   Q13 = 1/2 (R1 + R2 + R3 - R1R2R3) pi13
//   Q23 = 1/2 (1 + R2 + R3 - R2R3) pi23
// Symmetric in (i, j). Throws StructuralError for indices outside {1,2,3}.
GroupAlgebraElement q_ij(int i, int j);

// Jucys-Murphy elements of B_3: R1, R2, R3, m2 = (1+R1R2)pi12,
// m3 = (1+R1R3)pi13 + (1+R2R3)pi23.
std::vector<GroupAlgebraElement> jucys_murphy(int n = 3);

}  // namespace gbi
