#pragma once

#include "mmf/contact_tree.hpp"
#include "mmf/psi.hpp"

namespace mmf {

// [pow_{m_p}] - sum over rupture vertices of Psi_{Q_v}(identity); atoms carry
// the exact angular constants and the folded (arc-honest) Q polynomials.
MotClass guibert_milnor(const ContactTree& t);

// Coefficient of T^n of the motivic zeta function at the tree's base point,
// assembled stratum by stratum with exact structural maps; coefficients lie in
// Z[L^{+-1}, 1/(L-1)] (the root-edge contributes a geometric tail).
// Requires t.height > n.
MotClass zeta_contact_coeff(const ContactTree& t, long n);

// compose every structural map with x -> x^m
MotClass power_twist(const MotClass& C, long m);

} // namespace mmf
