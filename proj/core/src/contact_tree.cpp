#include "mmf/contact_tree.hpp"

#include <algorithm>
#include <cassert>

namespace mmf {

namespace {

// next stored exponent of s strictly above h (nullopt if none)
std::optional<Rat> next_exp(const PSeries& s, const Rat& h) {
    for (auto& t : s.terms)
        if (t.e > h) return t.e;
    return std::nullopt;
}

std::optional<AlgNum> coeff_at(const PSeries& s, const Rat& e) {
    for (auto& t : s.terms)
        if (t.e == e) return t.c;
    return std::nullopt;
}

struct Builder {
    ContactTree& T;
    AlgField K;
    explicit Builder(ContactTree& t) : T(t), K(t.ctx) {}

    // theta_i = ord(prefix-path - series_i); prefix is followed by zeroes
    Rat contact_with_path(const std::vector<PuiseuxTerm>& prefix, const PSeries& s) {
        size_t i = 0, j = 0;
        while (i < prefix.size() || j < s.terms.size()) {
            if (i < prefix.size() && j < s.terms.size()) {
                if (prefix[i].e < s.terms[j].e) return prefix[i].e;
                if (s.terms[j].e < prefix[i].e) return s.terms[j].e;
                if (!T.ctx->equal(prefix[i].c, s.terms[j].c)) return prefix[i].e;
                ++i;
                ++j;
            } else if (i < prefix.size()) {
                return prefix[i].e;
            } else {
                return s.terms[j].e;
            }
        }
        return Rat(-1); // identical on range: treat as infinite contact
    }

    void edge_data(TreeEdge& e) {
        // A and kappa from the series not through the edge
        std::vector<char> isThrough(T.series.size(), 0);
        for (int i : e.through) isThrough[i] = 1;
        Rat A(0);
        AlgNum kap = T.cstar;
        for (size_t i = 0; i < T.series.size(); ++i) {
            if (isThrough[i]) continue;
            Rat th = contact_with_path(e.prefix, T.series[i]);
            if (th < 0) throw std::logic_error("non-through series equal to path");
            A += th * T.series[i].mult;
            // delta = (path coeff at th) - (series coeff at th)
            AlgNum pc = K.zero(), sc = K.zero();
            for (auto& t : e.prefix)
                if (t.e == th) pc = t.c;
            if (auto c = coeff_at(T.series[i], th)) sc = *c;
            AlgNum d = K.sub(pc, sc);
            kap = K.mul(kap, T.ctx->pow(d, T.series[i].mult));
        }
        e.A = A;
        e.kappa = kap;
    }

    // recursive construction: all series in S share exactly the terms `prefix`
    // at exponents <= h_lo; parent data for attachment.
    void rec(const std::vector<int>& S, std::vector<PuiseuxTerm> prefix, const Rat& h_lo, int parentV,
             int branchRootIdx) {
        // next event
        std::optional<Rat> hstar;
        for (int i : S) {
            auto n = next_exp(T.series[i], h_lo);
            if (n && (!hstar || *n < *hstar)) hstar = n;
        }
        int deg = 0;
        for (int i : S) deg += T.series[i].mult;

        if (!hstar) {
            // tail: no more stored terms; separated => single series (mult counted)
            TreeEdge e;
            e.from = parentV;
            e.to = -1;
            e.tail = true;
            e.h0 = h_lo;
            e.h1 = T.height;
            bool exact = true;
            for (int i : S)
                if (!T.series[i].exact) exact = false;
            e.exactTail = exact;
            e.prefix = prefix;
            e.through = S;
            e.degree = deg;
            long M0 = 1;
            {
                Int l(1);
                for (auto& t : prefix) l = int_lcm(l, rden(t.e));
                M0 = to_long(l);
            }
            e.M0 = M0;
            edge_data(e);
            T.E.push_back(std::move(e));
            return;
        }

        Rat h = *hstar;
        // vertex at h
        TreeVertex v;
        v.h = h;
        v.parent = parentV;
        v.prefix = prefix;
        v.through = S;
        v.degree = deg;
        v.branchRootIdx = branchRootIdx;
        {
            Int l(1);
            for (auto& t : prefix) l = int_lcm(l, rden(t.e));
            v.M0 = to_long(l);
            v.Mv = to_long(int_lcm(Int(v.M0), rden(h)));
        }

        // incoming edge
        TreeEdge e;
        e.from = parentV;
        e.h0 = h_lo;
        e.h1 = h;
        e.prefix = prefix;
        e.through = S;
        e.degree = deg;
        e.M0 = v.M0;
        edge_data(e);

        v.S = e.A + Rat(deg) * h;
        {
            Rat nu = Rat(v.Mv) * v.S;
            if (!is_int(nu)) throw NotPolynomial("nu(tau) not an integer at a vertex");
            v.nu = to_long(nu);
        }
        v.kappa = e.kappa;

        // partition S by coefficient value at h
        std::vector<std::pair<AlgNum, std::vector<int>>> parts; // value -> series
        std::vector<int> zeroPart;
        for (int i : S) {
            auto c = coeff_at(T.series[i], h);
            if (!c) {
                zeroPart.push_back(i);
                continue;
            }
            bool placed = false;
            for (auto& [val, lst] : parts)
                if (T.ctx->equal(val, *c)) {
                    lst.push_back(i);
                    placed = true;
                    break;
                }
            if (!placed) parts.push_back({*c, {i}});
        }
        // deterministic order: by representative vector
        std::sort(parts.begin(), parts.end(),
                  [&](auto& a, auto& b) { return T.ctx->rep_cmp(a.first, b.first) < 0; });

        // roots of P_v (zero branch first if present)
        if (!zeroPart.empty()) {
            int m = 0;
            for (int i : zeroPart) m += T.series[i].mult;
            v.roots.push_back({K.zero(), m});
        }
        for (auto& [val, lst] : parts) {
            int m = 0;
            for (int i : lst) m += T.series[i].mult;
            v.roots.push_back({val, m});
        }
        v.rupture = v.roots.size() >= 2;

        int vi = (int)T.V.size();
        T.V.push_back(v);
        e.to = vi;
        int ei = (int)T.E.size();
        T.E.push_back(std::move(e));
        T.V[vi].parentEdge = ei;
        if (parentV >= 0) T.V[parentV].children.push_back(vi);

        // recurse into children, merging mu_N-conjugate siblings
        // zero branch (never conjugate to a nonzero one)
        if (!zeroPart.empty()) rec(zeroPart, prefix, h, vi, 0);
        int rootBase = zeroPart.empty() ? 0 : 1;
        std::vector<char> merged(parts.size(), 0);
        for (size_t a = 0; a < parts.size(); ++a) {
            if (merged[a]) continue;
            auto prefA = prefix;
            prefA.push_back({h, parts[a].first});
            int orbit = 1;
            for (size_t b = a + 1; b < parts.size(); ++b) {
                if (merged[b]) continue;
                auto prefB = prefix;
                prefB.push_back({h, parts[b].first});
                if (prefixes_conjugate(prefA, prefB, T.ctx)) {
                    merged[b] = 1;
                    ++orbit;
                }
            }
            size_t before = T.V.size();
            rec(parts[a].second, prefA, h, vi, (int)(rootBase + a));
            for (size_t w = before; w < T.V.size(); ++w) T.V[w].orbitSize *= orbit;
            (void)orbit;
        }
    }
};

} // namespace

int ContactTree::aug_pred(int v) const {
    int p = V[v].parent;
    while (p >= 0) {
        if (std::find(augmented.begin(), augmented.end(), p) != augmented.end()) return p;
        p = V[p].parent;
    }
    return -1;
}

bool ContactTree::is_ancestor(int anc, int v) const {
    int p = V[v].parent;
    while (p >= 0) {
        if (p == anc) return true;
        p = V[p].parent;
    }
    return false;
}

std::vector<ContactTree> build_trees(const Expansion& ex, const PlanePoly& f) {
    std::vector<ContactTree> out;
    for (auto& pt : ex.points) {
        ContactTree T;
        T.ctx = ex.ctx;
        T.base = pt.base;
        T.m_p = pt.m_p;
        T.series = pt.series;
        T.height = ex.height;
        // cstar = coeff of y^{m_p} in f(0, y + p)
        {
            AlgField K(T.ctx);
            AlgNum cs = K.zero();
            for (auto& [e, vq] : f.c) {
                if (e.first != 0) continue;
                long j = e.second;
                if (j < T.m_p) continue;
                // binom(j, m_p) p^{j-m_p} * coeff
                Int binom = 1;
                for (long t = 0; t < T.m_p; ++t) binom = binom * (j - t) / (t + 1);
                AlgNum term = K.mul(T.ctx->from_rat(vq * Rat(binom)), T.ctx->pow(T.base, j - T.m_p));
                cs = K.add(cs, term);
            }
            T.cstar = cs;
            if (T.ctx->is_zero(cs)) throw std::logic_error("cstar = 0");
        }
        std::vector<int> all(T.series.size());
        for (size_t i = 0; i < all.size(); ++i) all[i] = (int)i;
        Builder B(T);
        if (!all.empty()) B.rec(all, {}, Rat(0), -1, -1);
        // rupture / augmented
        // minimal vertex: the one with parent == -1 (unique)
        for (size_t i = 0; i < T.V.size(); ++i) {
            if (T.V[i].parent == -1) T.minVertex = (int)i;
            if (T.V[i].rupture) T.rupture.push_back((int)i);
        }
        T.augmented = T.rupture;
        if (T.minVertex >= 0 &&
            std::find(T.augmented.begin(), T.augmented.end(), T.minVertex) == T.augmented.end())
            T.augmented.push_back(T.minVertex);
        auto byHeight = [&](int a, int b) {
            if (T.V[a].h != T.V[b].h) return T.V[a].h < T.V[b].h;
            return a < b;
        };
        std::sort(T.rupture.begin(), T.rupture.end(), byHeight);
        std::sort(T.augmented.begin(), T.augmented.end(), byHeight);
        out.push_back(std::move(T));
    }
    return out;
}

std::vector<ContactTree> build_trees(const PlanePoly& f, int extraHeight, const Rat& atLeast) {
    Expansion ex = expand_separated(f, extraHeight, atLeast);
    return build_trees(ex, f);
}

const ContactTree& tree_at_origin(const std::vector<ContactTree>& ts) {
    for (auto& t : ts)
        if (t.ctx->is_zero(t.base)) return t;
    throw PreconditionError("no branches of f through the origin (f(0,0) != 0)");
}

Contact contact_of_vertex(const ContactTree& t, int vi) {
    const TreeVertex& v = t.V[vi];
    Contact c;
    c.atVertex = true;
    c.idx = vi;
    c.r = v.h;
    c.M = v.Mv;
    c.S = v.S;
    c.nu = v.nu;
    c.g = v.Mv / v.M0;
    c.prefix = v.prefix;
    c.kappa = v.kappa;
    c.P = v.roots;
    c.degree = v.degree;
    return c;
}

Contact contact_at(const ContactTree& t, int ei, const Rat& r) {
    const TreeEdge& e = t.E[ei];
    if (!(r > e.h0)) throw PreconditionError("contact height not inside edge");
    if (!e.tail && !(r < e.h1)) throw PreconditionError("contact height not inside edge");
    if (e.tail && !e.exactTail && !(r < e.h1))
        throw PreconditionError("contact height beyond the expansion knowledge bound");
    Contact c;
    c.atVertex = false;
    c.idx = ei;
    c.r = r;
    {
        Int m = int_lcm(Int(e.M0), rden(r));
        c.M = to_long(m);
    }
    c.S = e.A + Rat(e.degree) * r;
    Rat nu = Rat(c.M) * c.S;
    if (!is_int(nu)) throw NotPolynomial("nu not integral on edge contact");
    c.nu = to_long(nu);
    c.g = c.M / e.M0;
    c.prefix = e.prefix;
    c.kappa = e.kappa;
    AlgField K(t.ctx);
    c.P = {RootGroup{K.zero(), e.degree}};
    c.degree = e.degree;
    return c;
}

long n_dim(const Contact& c, long ell) {
    long nubar = std::max(c.nu, c.M);
    Rat mrl = Rat(c.M) * c.r * Rat(ell);
    return 2 * nubar * ell - c.M * ell - to_long(floor_rat(mrl));
}

APoly label_poly(const ContactTree& t, const std::vector<RootGroup>& roots) {
    AlgField K(t.ctx);
    PolyOps<AlgField> PA(K);
    APoly p{K.one()};
    for (auto& rg : roots)
        for (int i = 0; i < rg.mult; ++i) p = PA.mul(p, APoly{K.neg(rg.b), K.one()});
    return p;
}

QuasiPoly q_poly(const ContactTree& t, const Contact& c) {
    AlgField K(t.ctx);
    QuasiPoly Q;
    Q.M = c.M;
    Q.g = c.g;
    Q.r = c.r;
    Q.nu = c.nu;
    Q.kappa = c.kappa;
    Rat mr = Rat(c.M) * c.r;
    if (!is_int(mr)) throw NotPolynomial("M*r not integral");
    long Mr = to_long(mr);
    Q.wc = Mr;
    Q.wu = Q.g;

    // expand prod over roots (c - b w^{Mr})^mult * w^{nu - Mr*deg}, then fold u = w^g
    // c-coefficients of the product:
    APoly prod{K.one()};
    PolyOps<AlgField> PA(K);
    for (auto& rg : c.P)
        for (int i = 0; i < rg.mult; ++i) prod = PA.mul(prod, APoly{K.neg(rg.b), K.one()});
    // term c^k: coeff prod[k] * w^{Mr*(deg-k)} * w^{nu - Mr*deg} = prod[k] w^{nu - Mr*k}
    for (long k = 0; k < (long)prod.size(); ++k) {
        if (K.is_zero(prod[k])) continue;
        long wexp = Q.nu - Mr * k;
        if (wexp < 0) throw NotPolynomial("negative omega exponent in Q");
        if (wexp % Q.g != 0) throw NotPolynomial("omega exponent not divisible by the fold");
        Q.Q[{k, wexp / Q.g}] = prod[k];
    }

    // zero components: group roots into deck orbits
    Rat uExpX = Rat(Q.g) / Rat(Q.M);
    long gp = Q.g / to_long(int_gcd(Int(Q.g), Int(Mr))); // orbit size for nonzero roots
    std::vector<char> used(c.P.size(), 0);
    for (size_t i = 0; i < c.P.size(); ++i) {
        if (used[i]) continue;
        if (t.ctx->is_zero(c.P[i].b)) {
            QuasiPoly::Component comp;
            comp.czero = true;
            comp.E = c.P[i].mult;
            comp.uExponentX = uExpX;
            used[i] = 1;
            Q.comps.push_back(std::move(comp));
            continue;
        }
        QuasiPoly::Component comp;
        comp.roots.push_back(c.P[i].b);
        comp.E = c.P[i].mult;
        used[i] = 1;
        for (size_t j = i + 1; j < c.P.size(); ++j) {
            if (used[j] || t.ctx->is_zero(c.P[j].b)) continue;
            AlgNum ratio = t.ctx->div(c.P[j].b, c.P[i].b);
            if (t.ctx->is_zero(t.ctx->sub(t.ctx->pow(ratio, gp), t.ctx->from_int(1)))) {
                if (c.P[j].mult != comp.E) throw std::logic_error("deck orbit with unequal multiplicities");
                comp.roots.push_back(c.P[j].b);
                used[j] = 1;
            }
        }
        comp.k = (long)comp.roots.size();
        if (comp.k != gp && gp != 1)
            throw std::logic_error("deck orbit size mismatch (expected " + std::to_string(gp) + ")");
        comp.beta = t.ctx->pow(comp.roots[0], comp.k);
        Rat s = Rat(Mr * comp.k) / Rat(Q.g);
        if (!is_int(s)) throw NotPolynomial("component binomial exponent not integral");
        comp.s = to_long(s);
        comp.uExponentX = uExpX;
        Q.comps.push_back(std::move(comp));
    }
    return Q;
}

QuasiPoly::Component successor_factor(const ContactTree& t, int a, int v) {
    if (!t.is_ancestor(a, v)) throw NotSuccessor();
    // child of a on the path to v
    int c1 = v;
    while (t.V[c1].parent != a) c1 = t.V[c1].parent;
    int ri = t.V[c1].branchRootIdx;
    if (ri < 0) throw NotSuccessor();
    const AlgNum& b = t.V[a].roots[ri].b;
    Contact ca = contact_of_vertex(t, a);
    QuasiPoly qa = q_poly(t, ca);
    for (auto& comp : qa.comps) {
        if (comp.czero) {
            if (t.ctx->is_zero(b)) return comp;
            continue;
        }
        for (auto& rt : comp.roots)
            if (t.ctx->equal(rt, b)) return comp;
    }
    throw NotSuccessor();
}

} // namespace mmf
