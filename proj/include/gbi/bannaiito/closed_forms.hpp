#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gbi/bannaiito/realization.hpp"

namespace gbi {

// Literal right-hand sides of the explicit formulas for the centralizer,
// written in terms of S_ij = [D_i, x_j], M_ij, reflections, Q_ij and e_i.
// Index arguments are 1-based; the third index k is the remaining one.
namespace closed {

// b3-scalar
Operator c_i_reflections(const Realization& r, int i);  // 1/2 combination of S_ij R...
Operator c_i_q(const Realization& r, int i);            // a (Q_ij + Q_ik) + b
Operator c_ij_angular(const Realization& r, int i, int j);
Operator c_ij_compact(const Realization& r, int i, int j);  // M_ij F_ij + C_i R_j + C_j R_i + 1/2 R_i R_j
Operator gamma_angular(const Realization& r);
Operator gamma_jucys_murphy(const Realization& r);

// b3-clifford
Operator c_i_clifford(const Realization& r, int i);
Operator c_ij_clifford(const Realization& r, int i, int j);
Operator gamma_clifford(const Realization& r);
Operator gamma_clifford_decomposed(const Realization& r);  // from the closed C_i, C_ij
Operator c_i_w(const Realization& r, int i);                // a (W_ij + W_ik) e_i R_i + b
Operator c_ij_clifford_a0(const Realization& r, int i, int j);  // valid when a = 0
Operator o_s(const Realization& r, const std::vector<int>& s);  // generic O_S
// M_ij + 1/2 (S_ii + S_jj) e_i e_j - 1/2 S_ik e_j e_k + 1/2 S_jk e_i e_k - 1/2 e_i e_j with
// S_ij = [D_i, x_j]; with the opposite sign on S_ij it no longer equals O_ij.
Operator o_ij_formula(const Realization& r, int i, int j);

}  // namespace closed

// Name-based access used by the CLI: "C_i", "C_i/reflections", "C_i/W",
// "C_ij", "C_ij/compact", "Gamma/angular", "Gamma/jucys-murphy", "O_S", "O_ij".
// Throws StructuralError for unsupported (name, realization) pairs.
Operator closed_form(std::string_view name, const Realization& r, const std::vector<int>& indices);
std::vector<std::string> closed_form_names();

}  // namespace gbi
