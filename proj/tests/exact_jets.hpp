#pragma once

// Test-only helpers: exact truncated t-series arithmetic over the dynamic
// extension, used as the independent oracle for substitution identities
// (root property and the angular-coefficient law). Kept out of the library on
// purpose: the engine itself never evaluates series numerically.

#include "mmf/contact_tree.hpp"

#include <vector>

namespace mmftest {

using namespace mmf;

struct TSeries {
    long trunc; // coefficients stored for t^0 .. t^{trunc-1}
    std::vector<AlgNum> c;

    static TSeries zero(long trunc, AlgField& K) { return {trunc, std::vector<AlgNum>(trunc, K.zero())}; }
    static TSeries mono(long trunc, long e, const AlgNum& a, AlgField& K) {
        TSeries r = zero(trunc, K);
        if (e < trunc) r.c[e] = a;
        return r;
    }
    TSeries add(const TSeries& o, AlgField& K) const {
        TSeries r = *this;
        for (long i = 0; i < trunc; ++i) r.c[i] = K.add(r.c[i], o.c[i]);
        return r;
    }
    TSeries mul(const TSeries& o, AlgField& K) const {
        TSeries r = zero(trunc, K);
        for (long i = 0; i < trunc; ++i) {
            if (K.is_zero(c[i])) continue;
            for (long j = 0; i + j < trunc; ++j) {
                if (K.is_zero(o.c[j])) continue;
                r.c[i + j] = K.add(r.c[i + j], K.mul(c[i], o.c[j]));
            }
        }
        return r;
    }
    TSeries pow(long e, AlgField& K) const {
        TSeries r = mono(trunc, 0, K.one(), K);
        TSeries b = *this;
        while (e > 0) {
            if (e & 1) r = r.mul(b, K);
            b = b.mul(b, K);
            e >>= 1;
        }
        return r;
    }
    long ord(AlgField& K) const {
        for (long i = 0; i < trunc; ++i)
            if (!K.is_zero(c[i])) return i;
        return trunc; // >= trunc ("infinite" within knowledge)
    }
};

// f(X(t), Y(t)) truncated
inline TSeries eval_plane(const PlanePoly& f, const TSeries& X, const TSeries& Y, AlgField& K) {
    TSeries r = TSeries::zero(X.trunc, K);
    for (auto& [e, v] : f.c) {
        TSeries term = TSeries::mono(X.trunc, 0, K.ctx->from_rat(v), K);
        if (e.first) term = term.mul(X.pow(e.first, K), K);
        if (e.second) term = term.mul(Y.pow(e.second, K), K);
        r = r.add(term, K);
    }
    return r;
}

// the truncated series of a stored Puiseux root at base point p, in t = x^{1/M}
inline TSeries series_jet(const ContactTree& t, const PSeries& s, long M, long trunc, AlgField& K) {
    TSeries Y = TSeries::mono(trunc, 0, t.base, K);
    for (auto& tm : s.terms) {
        Rat et = tm.e * Rat(M);
        if (!is_int(et)) throw std::logic_error("series exponent not on the chosen lattice");
        long e = to_long(et);
        Y = Y.add(TSeries::mono(trunc, e, tm.c, K), K);
    }
    return Y;
}

// angular-coefficient law at a contact: substitute x = (w0 t)^M,
// y = y_tau(w0 t) + c0 (w0 t)^{M r} and return (ord_t f, ac)
inline std::pair<long, AlgNum> law_substitution(const PlanePoly& f, const ContactTree& t, const Contact& c,
                                                const AlgNum& c0, const AlgNum& w0, AlgField& K) {
    Rat mr = Rat(c.M) * c.r;
    long Mr = to_long(mr);
    long trunc = c.nu + 2;
    TSeries X = TSeries::mono(trunc, c.M, K.ctx->pow(w0, c.M), K);
    TSeries Y = TSeries::mono(trunc, 0, t.base, K);
    for (auto& tm : c.prefix) {
        Rat et = tm.e * Rat(c.M);
        long e = to_long(et);
        Y = Y.add(TSeries::mono(trunc, e, K.mul(tm.c, K.ctx->pow(w0, e)), K), K);
    }
    Y = Y.add(TSeries::mono(trunc, Mr, K.mul(c0, K.ctx->pow(w0, Mr)), K), K);
    TSeries F = eval_plane(f, X, Y, K);
    long o = F.ord(K);
    AlgNum ac = o < trunc ? F.c[o] : K.zero();
    return {o, ac};
}

// kappa * Qtilde evaluated at the law's chart point (c-slot = c0 w0^{Mr},
// u-slot = w0^{g})
inline AlgNum q_value(const ContactTree& t, const QuasiPoly& Q, const AlgNum& c0, const AlgNum& w0,
                      AlgField& K) {
    AlgNum cslot = K.mul(c0, K.ctx->pow(w0, Q.wc));
    AlgNum uslot = K.ctx->pow(w0, Q.g);
    AlgNum acc = K.zero();
    for (auto& [ke, cc] : Q.Q) {
        AlgNum term = K.mul(cc, K.mul(K.ctx->pow(cslot, ke.first), K.ctx->pow(uslot, ke.second)));
        acc = K.add(acc, term);
    }
    return K.mul(acc, Q.kappa);
}

} // namespace mmftest
