#include "mmf/compose.hpp"

#include <numeric>
#include <sstream>

namespace mmf {

// ---------- GermSpec ----------

GermSpec GermSpec::parse(const std::string& s) {
    GermSpec g;
    // trim
    std::string t;
    for (char c : s)
        if (!isspace((unsigned char)c)) t += c;
    if (t == "smooth") {
        g.kind = Kind::Smooth;
        return g;
    }
    auto mono = parse_poly(t, {"u", "v"});
    if (mono.empty()) throw ParseError("zero germ");
    // constant term must vanish
    for (auto& [e, c] : mono)
        if (e[0] == 0 && e[1] == 0) throw ParseError("germ must vanish at the origin");
    bool usesU = false, usesV = false;
    for (auto& [e, c] : mono) {
        if (e[0]) usesU = true;
        if (e[1]) usesV = true;
    }
    if (usesU && usesV) {
        if (mono.size() != 1) throw ParseError("two-variable germs must be monomials");
        auto& [e, c] = *mono.begin();
        g.kind = Kind::Monomial;
        g.expv = {e[0], e[1]};
        g.c0 = c;
        return g;
    }
    // univariate (in u or in v)
    int var = usesV ? 1 : 0;
    long kmin = -1;
    Rat c0;
    for (auto& [e, c] : mono) {
        if (kmin < 0 || e[var] < kmin) {
            kmin = e[var];
            c0 = c;
        }
    }
    g.kind = Kind::Univariate;
    g.k = kmin;
    g.c0 = c0;
    // keep full coefficients for the substitution cross-check
    g.expv.clear();
    g.polyCoeffs.assign(1, Rat(0));
    for (auto& [e, c] : mono) {
        if ((long)g.polyCoeffs.size() <= e[var]) g.polyCoeffs.resize(e[var] + 1, Rat(0));
        g.polyCoeffs[e[var]] = c;
    }
    return g;
}

std::string GermSpec::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Smooth: return "smooth";
        case Kind::Univariate: os << "univariate order " << k; break;
        case Kind::Monomial: os << "monomial"; break;
        case Kind::Explicit: os << "explicit"; break;
    }
    return os.str();
}

std::vector<Rat> GermSpec::poly() const {
    if (kind == Kind::Smooth) return {Rat(0), Rat(1)};
    if (kind == Kind::Univariate) {
        if (!polyCoeffs.empty()) return polyCoeffs;
        std::vector<Rat> v(k + 1, Rat(0));
        v[k] = c0;
        return v;
    }
    throw std::invalid_argument("poly(): univariate germs only");
}

// ---------- germ classes ----------

MotClass s_of_germ(const GermSpec& g, const CtxPtr& ctx) {
    MotClass S;
    S.ctx = ctx;
    S.base = Atom::Base::X0;
    S.target = {Dom::Gm};
    switch (g.kind) {
        case GermSpec::Kind::Smooth: {
            S.add_term(LFrac::one(), atom_pow_map(ctx, 1, 1));
            break;
        }
        case GermSpec::Kind::Univariate: {
            AlgNum kap = ctx->from_rat(g.c0);
            S.add_term(LFrac::one(), atom_pow_map(ctx, g.k, 1, &kap));
            break;
        }
        case GermSpec::Kind::Monomial: {
            if (g.expv.size() == 1 || g.expv[1] == 0) {
                AlgNum kap = ctx->from_rat(g.c0);
                S.add_term(LFrac::one(), atom_pow_map(ctx, g.expv[0], 1, &kap));
                break;
            }
            if (g.expv.size() != 2) throw std::invalid_argument("monomial germs supported up to 2 variables");
            Atom a;
            a.coords = {Dom::Gm, Dom::Gm};
            a.weights = {{1}, {1}};
            a.target = {Dom::Gm};
            MPoly m = mpoly_var(ctx, 2, 0, (int)g.expv[0]).mul(mpoly_var(ctx, 2, 1, (int)g.expv[1]), ctx);
            m = m.scale(ctx->from_rat(g.c0), ctx);
            a.map_ = {m};
            S.add_term(-LFrac::one(), a); // S_{u^a v^b} = -[(s,t) -> c s^a t^b]
            break;
        }
        case GermSpec::Kind::Explicit: {
            if (!g.expl) throw std::invalid_argument("explicit germ without class");
            S = *g.expl;
            break;
        }
    }
    S.normalize();
    return S;
}

MotClass s_prime(const MotClass& C) {
    MotClass r;
    r.ctx = C.ctx;
    r.base = Atom::Base::X0;
    r.target = {Dom::A1};
    for (auto& [c, a] : C.terms) {
        Atom b = a;
        b.target = {Dom::A1};
        r.add_term(c, b);
    }
    // the base placed over 0
    Atom z;
    z.base = Atom::Base::X0;
    z.target = {Dom::A1};
    z.map_ = {MPoly::zero(0)};
    r.add_term(LFrac::one(), z);
    return r;
}

// ---------- A-classes ----------

namespace {

MPoly reindex_shift(const MPoly& p, int n, int offset) {
    MPoly r;
    r.nvars = n;
    for (auto& [e, c] : p.t) {
        std::vector<int> e2(n, 0);
        for (int i = 0; i < (int)e.size(); ++i) e2[i + offset] = e[i];
        r.t[std::move(e2)] = c;
    }
    return r;
}

} // namespace

AClass a_initial(const GermSpec& g1, const GermSpec& g2, const CtxPtr& ctx) {
    MotClass S2p = s_prime(s_of_germ(g2, ctx));
    MotClass S1 = s_of_germ(g1, ctx);
    AClass A;
    A.C.ctx = ctx;
    A.C.base = Atom::Base::X0;
    A.C.target = {Dom::A1, Dom::Gm};
    A.qLat = Rat(1);
    for (auto& [c2, a2] : S2p.terms)
        for (auto& [c1, a1] : S1.terms) {
            Atom b;
            b.base = Atom::Base::X0;
            int n = a2.n() + a1.n();
            b.coords = a2.coords;
            for (auto d : a1.coords) b.coords.push_back(d);
            b.weights.assign(n, std::vector<long>(2, 0));
            for (int i = 0; i < a2.n(); ++i) b.weights[i][0] = a2.weights[i].empty() ? 1 : a2.weights[i][0];
            for (int i = 0; i < a1.n(); ++i)
                b.weights[a2.n() + i][1] = a1.weights[i].empty() ? 1 : a1.weights[i][0];
            MPoly h1 = reindex_shift(a2.map_[0], n, 0);
            MPoly h2 = reindex_shift(a1.map_[0], n, a2.n());
            for (auto& p : a2.eq) b.eq.push_back(reindex_shift(p, n, 0));
            for (auto& p : a2.neq) b.neq.push_back(reindex_shift(p, n, 0));
            for (auto& p : a1.eq) b.eq.push_back(reindex_shift(p, n, a2.n()));
            for (auto& p : a1.neq) b.neq.push_back(reindex_shift(p, n, a2.n()));
            b.map_ = {h1, h2, h2}; // third component: lattice generator = x-arc value
            b.target = {Dom::A1, Dom::Gm};
            A.C.add_term(c2 * c1, b);
        }
    A.C.normalize();
    return A;
}

AClass a_step(const AClass& prev, const QuasiPoly::Component& fac, const Rat& heightA, const CtxPtr& ctx) {
    AClass out;
    out.C.ctx = ctx;
    out.C.base = prev.C.base;
    out.C.target = {Dom::A1, Dom::Gm};

    bool zeroBranch = fac.czero;
    Rat qNew = zeroBranch ? prev.qLat : rat_gcd(prev.qLat, heightA);
    out.qLat = qNew;

    for (auto& [c, a] : prev.C.terms) {
        if (a.map_.size() < 3) throw std::logic_error("A-class atom without lattice component");
        Atom b = a;
        const MPoly h1 = a.map_[0];
        const MPoly h2 = a.map_[1];
        const MPoly W = a.map_[2];
        MPoly Wnew = W;
        if (zeroBranch) {
            b.eq.push_back(h1); // selects the 0-supported part of the A1 factor
        } else {
            // factor constraint: h1^k = beta * U^s with U = W^{qa/qLat}, the
            // ancestor's folded u-variable (x-exponent qa = 1/M0(a))
            Rat qa = fac.uExponentX;
            Rat mr = qa / prev.qLat;
            if (!is_int(mr)) throw NotPolynomial("lattice too coarse for the successor factor");
            long m = to_long(mr);
            MPoly U = W.pow(m, ctx);
            MPoly lhs = h1.pow(fac.k, ctx);
            MPoly rhs = U.pow(fac.s, ctx).scale(fac.beta, ctx);
            b.eq.push_back(lhs.sub(rhs, ctx));
            // new lattice generator: W_new = h1^{x0} W^{y0} with x-exponent
            // qNew = x0*heightA + y0*qLat; nonnegative exponents reached via the
            // relation h1^k = beta W^{s m} (both sides of x-exponent k*heightA)
            Int D = int_lcm(rden(heightA), rden(prev.qLat));
            long ia = to_long(heightA * Rat(D));
            long ib = to_long(prev.qLat * Rat(D));
            long x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = ia, r1 = ib;
            while (r1 != 0) {
                long qq = r0 / r1;
                long r2 = r0 - qq * r1, x2 = x0 - qq * x1, y2 = y0 - qq * y1;
                r0 = r1;
                r1 = r2;
                x0 = x1;
                x1 = x2;
                y0 = y1;
                y1 = y2;
            }
            if (r0 < 0) {
                r0 = -r0;
                x0 = -x0;
                y0 = -y0;
            }
            if (Rat(r0, to_long(D)) != qNew) throw std::logic_error("lattice gcd mismatch");
            long sm = fac.s * m;
            // W_new = beta^{-j} h1^{x0 + j k} W^{y0 - j sm}; pick j making both
            // exponents nonnegative
            long jlo = x0 >= 0 ? 0 : (-x0 + fac.k - 1) / fac.k;
            long jhi = sm > 0 ? (y0 >= 0 ? y0 / sm : -1) : jlo;
            if (x0 >= 0 && y0 >= 0) jlo = 0, jhi = 0;
            if (jlo > jhi) throw NotPolynomial("lattice expression needs torus inversion");
            long j = jlo;
            MPoly val = h1.pow(x0 + j * fac.k, ctx).mul(W.pow(y0 - j * sm, ctx), ctx);
            if (j != 0) val = val.scale(ctx->pow(fac.beta, -j), ctx);
            Wnew = val;
        }
        // A_v = Id_{A1} x (pr2 o B_v): fresh A1 coordinate
        int n = b.n();
        std::vector<MPoly> images;
        for (int i = 0; i < n; ++i) images.push_back(mpoly_var(ctx, n + 1, i));
        auto lift = [&](const MPoly& p) { return p.subst(images, n + 1, ctx); };
        Atom nb;
        nb.base = b.base;
        nb.coords = b.coords;
        nb.coords.push_back(Dom::A1);
        // weights: axis 0 = fresh c'; axis 1 = combination keeping constraints
        // and h2 homogeneous
        nb.weights.assign(n + 1, std::vector<long>(2, 0));
        {
            long aa = 1, bb = 1;
            if (!zeroBranch) {
                // choose (aa, bb) with the new eq homogeneous under
                // lambda^{aa*w0 + bb*w1}
                long A0 = 0, B0 = 0;
                const MPoly& eqp = b.eq.back();
                if (eqp.t.size() == 2) {
                    auto it = eqp.t.begin();
                    auto e1 = it->first;
                    ++it;
                    auto e2 = it->first;
                    for (int i = 0; i < n; ++i) {
                        long d = (long)e1[i] - (long)e2[i];
                        A0 += d * (a.weights[i].size() > 0 ? a.weights[i][0] : 0);
                        B0 += d * (a.weights[i].size() > 1 ? a.weights[i][1] : 0);
                    }
                }
                if (A0 != 0 || B0 != 0) {
                    long g = std::gcd(std::abs(A0), std::abs(B0));
                    if (g == 0) g = 1;
                    aa = B0 / g;
                    bb = -A0 / g;
                    if (bb < 0 || (bb == 0 && aa < 0)) {
                        aa = -aa;
                        bb = -bb;
                    }
                    if (aa == 0 && bb == 0) aa = bb = 1;
                }
            }
            for (int i = 0; i < n; ++i) {
                long w0 = a.weights[i].size() > 0 ? a.weights[i][0] : 0;
                long w1 = a.weights[i].size() > 1 ? a.weights[i][1] : 0;
                nb.weights[i][1] = aa * w0 + bb * w1;
            }
            nb.weights[n][0] = 1;
        }
        for (auto& p : b.eq) nb.eq.push_back(lift(p));
        for (auto& p : b.neq) nb.neq.push_back(lift(p));
        MPoly cNew = mpoly_var(ctx, n + 1, n);
        nb.map_ = {cNew, lift(h2), lift(Wnew)};
        nb.target = {Dom::A1, Dom::Gm};
        out.C.add_term(c, nb);
    }
    out.C.normalize();
    return out;
}

MotClass psi_at_vertex(const ContactTree& t, int v, const AClass& A) {
    Contact c = contact_of_vertex(t, v);
    QuasiPoly Q = q_poly(t, c);
    // the folded u has x-exponent g/M = 1/M0(v): substitute the lattice power
    Rat qv = Rat(Q.g) / Rat(Q.M);
    Rat m = qv / A.qLat;
    if (!is_int(m)) throw NotPolynomial("vertex fold not reachable from the lattice");
    long mm = to_long(m);
    // rebuild the class with h2' := W^{m} in the u-slot
    MotClass C2 = A.C;
    for (auto& [coef, a] : C2.terms) {
        if (a.map_.size() < 3) throw std::logic_error("A-class atom without lattice component");
        MPoly U = a.map_[2].pow(mm, C2.ctx);
        a.map_ = {a.map_[0], U};
    }
    return psi_q_operational(Q, C2);
}

AClass a_class_at(const ContactTree& t, int v, const GermSpec& g1, const GermSpec& g2, bool throughAll) {
    // chain of ancestors within the augmented set (or through every vertex)
    std::vector<int> chain; // from the top vertex down to v
    int cur = v;
    chain.push_back(v);
    while (true) {
        int p = -1;
        if (throughAll) {
            p = t.V[cur].parent;
        } else {
            p = t.aug_pred(cur);
        }
        if (p < 0) break;
        chain.push_back(p);
        cur = p;
    }
    std::reverse(chain.begin(), chain.end());
    AClass A = a_initial(g1, g2, t.ctx);
    for (size_t i = 0; i + 1 < chain.size(); ++i) {
        QuasiPoly::Component fac = successor_factor(t, chain[i], chain[i + 1]);
        A = a_step(A, fac, t.V[chain[i]].h, t.ctx);
    }
    return A;
}

MotClass compose_milnor(const PlanePoly& f, const GermSpec& g1, const GermSpec& g2, int extraHeight) {
    f.check_invariants();
    auto trees = build_trees(f, extraHeight);
    const ContactTree* t0 = nullptr;
    for (auto& t : trees)
        if (t.ctx->is_zero(t.base)) t0 = &t;
    CtxPtr ctx = trees.empty() ? ExtCtx::make() : trees[0].ctx;
    if (!t0) {
        MotClass empty;
        empty.ctx = ctx;
        empty.base = Atom::Base::X0;
        empty.target = {Dom::Gm};
        return empty; // f(0,0) != 0: the composed germ is a unit
    }
    const ContactTree& t = *t0;
    MotClass S = power_twist(s_of_germ(g2, t.ctx), std::max(1, t.m_p));
    S.base = Atom::Base::X0;
    for (auto& [c, a] : S.terms) a.base = Atom::Base::X0;
    for (int v : t.augmented) {
        AClass A = a_class_at(t, v, g1, g2);
        MotClass psi = psi_at_vertex(t, v, A);
        S = S - psi;
    }
    S.normalize();
    return S;
}

} // namespace mmf
