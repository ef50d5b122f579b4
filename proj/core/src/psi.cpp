#include "mmf/psi.hpp"

#include <numeric>

namespace mmf {

namespace {

// degree of a homogeneous poly under axis ax (-1 if not homogeneous)
long axis_degree(const Atom& a, const MPoly& m, int ax, bool* homogeneous) {
    *homogeneous = true;
    bool first = true;
    long deg = 0;
    for (auto& [e, c] : m.t) {
        long d = 0;
        for (int i = 0; i < (int)e.size(); ++i) d += (long)e[i] * a.weights[i][ax];
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg) {
            *homogeneous = false;
        }
    }
    return deg;
}

Atom extend_gm(const Atom& a, const CtxPtr& ctx, int* newVar) {
    Atom r = a;
    int n = a.n();
    std::vector<MPoly> images;
    for (int i = 0; i < n; ++i) images.push_back(mpoly_var(ctx, n + 1, i));
    auto apply = [&](MPoly& p) { p = p.subst(images, n + 1, ctx); };
    for (auto& p : r.eq) apply(p);
    for (auto& p : r.neq) apply(p);
    for (auto& p : r.map_) apply(p);
    r.coords.push_back(Dom::Gm);
    int axes = r.weights.empty() ? 1 : (int)r.weights[0].size();
    r.weights.push_back(std::vector<long>(axes, 0));
    *newVar = n;
    return r;
}

} // namespace

MotClass identity_motclass(const CtxPtr& ctx) {
    MotClass C;
    C.ctx = ctx;
    C.target = {Dom::A1, Dom::Gm};
    Atom a = atom_identity_class(ctx);
    a.weights = {{1, 0}, {0, 1}}; // h1 graded by axis 0, h2 by axis 1
    C.add_term(LFrac::one(), a);
    return C;
}

MotClass psi_q_operational(const QuasiPoly& Q, const MotClass& C) {
    if (C.target.size() != 2 || C.target[0] != Dom::A1 || C.target[1] != Dom::Gm)
        throw std::invalid_argument("psi_q_operational: C must live over A1 x Gm");
    const CtxPtr& ctx = C.ctx;
    MotClass out;
    out.ctx = ctx;
    out.base = C.base;
    out.target = {Dom::Gm};

    for (auto& [coef, a] : C.terms) {
        if (a.map_.size() != 2) throw std::invalid_argument("psi: atom without 2-component map");
        const MPoly& h1 = a.map_[0];
        const MPoly& h2 = a.map_[1];

        // diagonal monomiality: h1 homogeneous in axis 0 and degree-0 in axis 1,
        // h2 the other way (zero maps are vacuously fine)
        if (!a.weights.empty() && a.weights[0].size() >= 2) {
            bool hom = true;
            long d10 = axis_degree(a, h1, 0, &hom);
            if (!hom) throw NotDiagonallyMonomial();
            long d11 = axis_degree(a, h1, 1, &hom);
            if (!hom || (!h1.is_zero() && d11 != 0)) throw NotDiagonallyMonomial();
            long d21 = axis_degree(a, h2, 1, &hom);
            if (!hom) throw NotDiagonallyMonomial();
            long d20 = axis_degree(a, h2, 0, &hom);
            if (!hom || (!h2.is_zero() && d20 != 0)) throw NotDiagonallyMonomial();
            (void)d10;
            (void)d21;
        }
        for (auto& comp : Q.comps)
            if (!comp.czero && comp.k < 1) throw ZeroSetNotOrbits();

        // single-axis weights for the output: combine (axis0, axis1) so that
        // kappa Q(h1,h2) becomes homogeneous
        std::vector<long> wsingle(a.n(), 0);
        {
            bool hom = true;
            long d1 = h1.is_zero() ? 0 : axis_degree(a, h1, 0, &hom);
            long d2 = h2.is_zero() ? 0 : axis_degree(a, h2, 1, &hom);
            long aa = 1, bb = 1;
            if (d1 > 0 && d2 > 0) {
                long G = std::gcd(d1 * Q.wu, d2 * Q.wc);
                aa = (d2 * Q.wc) / G;
                bb = (d1 * Q.wu) / G;
            }
            for (int i = 0; i < a.n(); ++i) {
                long w0 = a.weights.empty() ? 0 : a.weights[i][0];
                long w1 = (a.weights.empty() || a.weights[i].size() < 2) ? 0 : a.weights[i][1];
                wsingle[i] = aa * w0 + bb * w1;
            }
        }

        // detect the recentering pattern: a single simple orbit component with
        // k == 1, no {c=0} component, and h1 a bare A1 coordinate
        bool shiftable = false;
        int h1var = -1;
        if (Q.comps.size() == 1 && !Q.comps[0].czero && Q.comps[0].k == 1) {
            if (h1.is_monomial()) {
                auto& [e, c] = *h1.t.begin();
                int nz = -1;
                bool single = true;
                for (int i = 0; i < (int)e.size(); ++i) {
                    if (e[i] == 0) continue;
                    if (e[i] != 1 || nz >= 0) single = false;
                    nz = i;
                }
                if (single && nz >= 0 && a.coords[nz] == Dom::A1 && ctx->equal(c, ctx->from_int(1))) {
                    bool elsewhere = h2.uses(nz);
                    for (auto& p : a.eq)
                        if (p.uses(nz)) elsewhere = true;
                    for (auto& p : a.neq)
                        if (p.uses(nz)) elsewhere = true;
                    if (!elsewhere) {
                        shiftable = true;
                        h1var = nz;
                    }
                }
            }
        }

        if (shiftable) {
            // Q = (c - beta u^s)^E u^{e0}; off part in shifted coordinates:
            // c' := c - beta h2^s  in Gm, map kappa c'^E h2^{e0}
            const auto& comp = Q.comps[0];
            long E = comp.E;
            long e0 = Q.nu / Q.g - ((Q.wc / 1) * 0); // recomputed below
            // e0 from expansion: nu - Mr*E*... total c-degree = E; u-exponent of
            // the c^E term is (nu - Mr*E)/g
            {
                Rat t = Rat(Q.nu - Q.wc * E, Q.g);
                if (!is_int(t)) throw NotPolynomial("shift: u-prefactor exponent not integral");
                e0 = to_long(t);
            }
            Atom off = a;
            off.coords[h1var] = Dom::Gm;
            MPoly m = mpoly_var(ctx, a.n(), h1var, (int)E).mul(h2.pow(e0, ctx), ctx).scale(Q.kappa, ctx);
            off.map_ = {m};
            off.target = {Dom::Gm};
            off.weights.assign(a.n(), std::vector<long>(1, 0));
            for (int i = 0; i < a.n(); ++i) off.weights[i][0] = wsingle[i];
            // weight of the shifted coordinate: degree of beta h2^s
            {
                bool hom = true;
                long d2 = h2.is_zero() ? 0 : axis_degree(a, h2, 1, &hom);
                (void)d2;
            }
            out.add_term(-coef, off);
        } else {
            // generic off-part: restriction Q(h1,h2) != 0 with map kappa*Q(h1,h2)
            MPoly Qh = MPoly::zero(a.n());
            for (auto& [ke, cc] : Q.Q) {
                MPoly term = MPoly::constant(a.n(), cc);
                if (ke.first) term = term.mul(h1.pow(ke.first, ctx), ctx);
                if (ke.second) term = term.mul(h2.pow(ke.second, ctx), ctx);
                Qh = Qh.add(term, ctx);
            }
            MPoly mapQ = Qh.scale(Q.kappa, ctx);
            Atom off = a;
            off.neq.push_back(Qh);
            off.map_ = {mapQ};
            off.target = {Dom::Gm};
            off.weights.assign(a.n(), std::vector<long>(1, 0));
            for (int i = 0; i < a.n(); ++i) off.weights[i][0] = wsingle[i];
            out.add_term(-coef, off);
        }

        // zero components
        for (auto& comp : Q.comps) {
            Atom restr = a;
            if (comp.czero) {
                restr.eq.push_back(h1);
            } else {
                MPoly lhs = h1.pow(comp.k, ctx);
                MPoly rhs = h2.pow(comp.s, ctx).scale(comp.beta, ctx);
                restr.eq.push_back(lhs.sub(rhs, ctx));
            }
            restr.map_.clear();
            restr.target.clear();
            restr.weights.assign(a.n(), std::vector<long>(1, 0));
            for (int i = 0; i < a.n(); ++i) restr.weights[i][0] = wsingle[i];
            int wv = -1;
            Atom piece = extend_gm(restr, ctx, &wv);
            piece.map_ = {mpoly_var(ctx, piece.n(), wv, (int)comp.E)};
            piece.target = {Dom::Gm};
            // weight of w: nu-combined / E when integral (monodromy-inert otherwise)
            piece.weights[wv][0] = 1;
            out.add_term(coef, piece);
        }
    }
    out.normalize();
    return out;
}

} // namespace mmf
