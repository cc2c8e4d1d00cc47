#pragma once

#include "gbi/opcalc/operator.hpp"

namespace gbi {

// Z_i = e_i R_i.
Operator z_i(int n, int i);

// W_ij = 1/2 ((e_i - e_j) pi_ij + (e_i + e_j) R_i R_j pi_ij).
Operator w_ij(int n, int i, int j);

// Left multiplication by e_{s_1} ... e_{s_k}.
Operator e_product(int n, const std::vector<int>& indices);

}  // namespace gbi
