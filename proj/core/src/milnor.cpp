#include "mmf/milnor.hpp"

namespace mmf {

MotClass guibert_milnor(const ContactTree& t) {
    MotClass S;
    S.ctx = t.ctx;
    S.target = {Dom::Gm};
    S.add_term(LFrac::one(), atom_pow_map(t.ctx, t.m_p, 1));
    for (int v : t.rupture) {
        Contact c = contact_of_vertex(t, v);
        QuasiPoly Q = q_poly(t, c);
        MotClass psi = psi_q_operational(Q, identity_motclass(t.ctx));
        S = S - psi;
    }
    S.normalize();
    return S;
}

MotClass power_twist(const MotClass& C, long m) {
    if (m < 1) throw std::invalid_argument("power_twist: m must be >= 1");
    MotClass r = C;
    for (auto& [c, a] : r.terms) {
        if (a.target.size() != 1 || a.target[0] != Dom::Gm)
            throw std::invalid_argument("power_twist: G_m-target classes only");
        a.map_[0] = a.map_[0].pow(m, C.ctx);
    }
    r.normalize();
    return r;
}

namespace {

// complement-type stratum atom for a vertex contact
Atom vertex_stratum_atom(const ContactTree& t, const QuasiPoly& Q, long ell) {
    Atom a;
    a.coords = {Dom::A1, Dom::Gm};
    a.weights = {{Q.wc * ell}, {Q.wu * ell}};
    a.target = {Dom::Gm};
    MPoly Qt = MPoly::zero(2);
    for (auto& [ke, cc] : Q.Q) {
        MPoly term = MPoly::constant(2, cc);
        if (ke.first) term = term.mul(mpoly_var(t.ctx, 2, 0, (int)ke.first), t.ctx);
        if (ke.second) term = term.mul(mpoly_var(t.ctx, 2, 1, (int)ke.second), t.ctx);
        Qt = Qt.add(term, t.ctx);
    }
    a.neq.push_back(Qt);
    a.map_ = {Qt.scale(Q.kappa, t.ctx)};
    return a;
}

} // namespace

MotClass zeta_contact_coeff(const ContactTree& t, long n) {
    if (!(t.height > Rat(n))) throw PreconditionError("tree expansion height must exceed n");
    MotClass Z;
    Z.ctx = t.ctx;
    Z.target = {Dom::Gm};
    if (n < 1) return Z;
    AlgField K(t.ctx);

    // (A) vertex strata: for each vertex and each ell with nu * ell = n
    for (size_t vi = 0; vi < t.V.size(); ++vi) {
        const TreeVertex& v = t.V[vi];
        if (v.nu <= 0) throw std::logic_error("vertex with nonpositive nu");
        if (n % v.nu != 0) continue;
        long ell = n / v.nu;
        long m1 = v.Mv * ell;
        Rat rm1 = v.h * Rat(m1);
        if (!is_int(rm1)) throw std::logic_error("vertex stratum: r*m1 not integral");
        long Np = 2 * n - m1 - to_long(rm1);
        Contact c = contact_of_vertex(t, (int)vi);
        QuasiPoly Q = q_poly(t, c);
        Atom a = vertex_stratum_atom(t, Q, ell);
        Z.add_term(LFrac::mono(1, Np - 2 * n), a);
    }

    // (B) skew vertex strata: lattice M0 | m1, Mv does not divide m1; only when
    // 0 is not a root of P_v (otherwise such arcs continue down the zero branch)
    for (size_t vi = 0; vi < t.V.size(); ++vi) {
        const TreeVertex& v = t.V[vi];
        if (v.Mv == v.M0) continue;
        bool zeroRoot = false;
        for (auto& rg : v.roots)
            if (t.ctx->is_zero(rg.b)) zeroRoot = true;
        if (zeroRoot) continue;
        Rat m1r = Rat(n) / v.S;
        if (!is_int(m1r)) continue;
        long m1 = to_long(m1r);
        if (m1 % v.M0 != 0) continue;
        if (m1 % v.Mv == 0) continue; // that is the (A) stratum
        Rat rm1 = v.h * Rat(m1);
        long fl = to_long(floor_rat(rm1));
        long Np = 2 * n - m1 - fl;
        // map = kappa * P_v(0) * u^{M0 * S}
        AlgNum P0 = K.one();
        for (auto& rg : v.roots) P0 = K.mul(P0, t.ctx->pow(t.ctx->neg(rg.b), rg.mult));
        Rat expn = Rat(v.M0) * v.S;
        if (!is_int(expn)) throw NotPolynomial("skew stratum: M0*S not integral");
        Atom a;
        a.coords = {Dom::Gm};
        a.weights = {{m1 / v.M0}};
        a.target = {Dom::Gm};
        a.map_ = {mpoly_var(t.ctx, 1, 0, (int)to_long(expn)).scale(K.mul(v.kappa, P0), t.ctx)};
        Z.add_term(LFrac::mono(1, Np - 2 * n), a);
    }

    // (C) edge strata
    for (size_t ei = 0; ei < t.E.size(); ++ei) {
        const TreeEdge& e = t.E[ei];
        bool isRoot = (e.from == -1);
        // map = kappa * c^deg * u^{M0 * A}
        Rat m0a = Rat(e.M0) * e.A;
        if (!is_int(m0a)) throw NotPolynomial("edge stratum: M0*A not integral");
        long uexp = to_long(m0a);
        auto edgeAtom = [&](long wc, long wu) {
            Atom a;
            a.coords = {Dom::Gm, Dom::Gm};
            a.weights = {{wc}, {wu}};
            a.target = {Dom::Gm};
            MPoly m = mpoly_var(t.ctx, 2, 0, (int)e.degree);
            if (uexp) m = m.mul(mpoly_var(t.ctx, 2, 1, (int)uexp), t.ctx);
            a.map_ = {m.scale(e.kappa, t.ctx)};
            return a;
        };
        if (isRoot && e.A == 0) {
            // infinite geometric family: r = n/(d*m1) in (h0=0, h1), any m1 beyond
            // the window bound; N' - 2n = -m1 - n/d
            if (n % e.degree != 0) continue;
            long nd = n / e.degree;
            long B = 0; // m1 >= B+1
            if (!e.tail || !e.exactTail) {
                // bounded above by h1 (vertex) or by the knowledge bound; for
                // knowledge-bounded root tails r <= n < height always holds
            }
            if (!e.tail) {
                Rat x = Rat(n) / (Rat(e.degree) * e.h1); // m1 > x
                B = to_long(floor_rat(x));
            }
            // sum_{m1 >= B+1} L^{-m1 - nd} = L^{-nd - B} / (L - 1)
            LFrac coeff{LaurentZ::mono(1, -nd - B), 1};
            Z.add_term(coeff, edgeAtom(nd, 1));
            continue;
        }
        // finite enumeration over m1 (multiples of M0) with r in the window
        for (long m1 = e.M0;; m1 += e.M0) {
            Rat r = (Rat(n) / Rat(m1) - e.A) / Rat(e.degree);
            if (!(r > e.h0)) break; // r decreases with m1
            if (!e.tail && !(r < e.h1)) continue;
            Rat rm1 = r * Rat(m1);
            if (!is_int(rm1)) continue;
            long Np = 2 * n - m1 - to_long(rm1);
            Z.add_term(LFrac::mono(1, Np - 2 * n), edgeAtom(to_long(rm1), m1 / e.M0));
        }
    }
    Z.normalize();
    return Z;
}

} // namespace mmf
