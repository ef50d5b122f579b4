#pragma once

#include "mmf/atom.hpp"
#include "mmf/contact_tree.hpp"

namespace mmf {

struct NotDiagonallyMonomial : std::runtime_error {
    NotDiagonallyMonomial() : std::runtime_error("NotDiagonallyMonomial") {}
};
struct ZeroSetNotOrbits : std::runtime_error {
    ZeroSetNotOrbits() : std::runtime_error("ZeroSetNotOrbits") {}
};

// The operational convolution: C lives over base x (A1 x Gm) with structural
// map (h1, h2); Q is attached in variables matching (h1, h2) (its u-variable
// composes with h2). Returns, over base x Gm:
//     -[C restricted to Q(h1,h2) != 0, map kappa*Q(h1,h2)]
//   + sum over zero components Z of Q:
//     +[(C restricted over Z) x Gm(w), map w^{E_Z}].
// The component sign makes Psi_{Q_v}(A_v) vanish identically on non-rupture
// vertices (checked by the acceptance suite), which fixes the convention.
MotClass psi_q_operational(const QuasiPoly& Q, const MotClass& C);

// identity class as a MotClass over A1 x Gm with the (Mr, g)-compatible
// two-axis grading
MotClass identity_motclass(const CtxPtr& ctx);

} // namespace mmf
