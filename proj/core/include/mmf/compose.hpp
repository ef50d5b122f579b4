#pragma once

#include "mmf/milnor.hpp"

namespace mmf {

struct GermSpec {
    enum class Kind { Univariate, Monomial, Smooth, Explicit };
    Kind kind = Kind::Smooth;
    long k = 1;                     // Univariate: vanishing order
    Rat c0 = Rat(1);                // lowest coefficient (angular constant)
    std::vector<long> expv;         // Monomial exponents (one or two variables)
    std::vector<Rat> polyCoeffs;    // Univariate: the full coefficient vector
    std::shared_ptr<MotClass> expl; // Explicit: user-supplied S_g

    // "smooth" | univariate polynomial in u or v | monomial in u and v
    static GermSpec parse(const std::string& s);
    std::string str() const;
    // univariate coefficient vector (for building f(g1(u), g2(v)) cross-checks)
    std::vector<Rat> poly() const;
};

// motivic Milnor fiber of the germ over the symbolic X0 base (target G_m)
MotClass s_of_germ(const GermSpec& g, const CtxPtr& ctx);

// disjoint sum: the A1-target class equal to C away from 0 plus the base over 0
MotClass s_prime(const MotClass& C);

// A-classes over X0(g) x (A1 x Gm); atoms carry a third bookkeeping map
// component: the current generator of the visible omega-lattice (an invertible
// map value of x-exponent qLat).
struct AClass {
    MotClass C;
    Rat qLat = Rat(1);
};

AClass a_initial(const GermSpec& g1, const GermSpec& g2, const CtxPtr& ctx);

// B_v = prev restricted over the successor factor's zero set; A_v = Id_{A1} x
// (pr2 o B_v). heightA = height of the ancestor vertex (enters the lattice).
AClass a_step(const AClass& prev, const QuasiPoly::Component& fac, const Rat& heightA, const CtxPtr& ctx);

// Psi_{Q_v}(A_v) with the vertex's folded Q expressed through the lattice
MotClass psi_at_vertex(const ContactTree& t, int v, const AClass& A);

// Theorem main: S_{(g2)^{m_p}} over X0 minus the augmented-set convolutions
MotClass compose_milnor(const PlanePoly& f, const GermSpec& g1, const GermSpec& g2, int extraHeight = 0);

// A_v for a given vertex (chain through the augmented set; exposed for tests)
AClass a_class_at(const ContactTree& t, int v, const GermSpec& g1, const GermSpec& g2,
                  bool throughAllVertices = false);

} // namespace mmf
