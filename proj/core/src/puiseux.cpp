#include "mmf/puiseux.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <climits>
#include <functional>
#include <map>

namespace mmf {

namespace {

// ---------- squarefree decomposition of f over Q(x)[y] ----------

struct Frac { // rational function over Q
    QPoly num, den; // den monic nonzero
};

struct FracField {
    using Elem = Frac;
    RatField qf;
    PolyOps<RatField> P{qf};

    Frac normalize(QPoly n, QPoly d) {
        if (n.empty()) return {QPoly{}, QPoly{Rat(1)}};
        QPoly g = P.gcd(n, d);
        if (P.deg(g) > 0) {
            n = P.divexact(n, g);
            d = P.divexact(d, g);
        }
        Rat lc = d.back();
        for (auto& c : n) c /= lc;
        for (auto& c : d) c /= lc;
        return {n, d};
    }
    Frac zero() { return {QPoly{}, QPoly{Rat(1)}}; }
    Frac one() { return {QPoly{Rat(1)}, QPoly{Rat(1)}}; }
    Frac from_int(long n) { return {n ? QPoly{Rat(n)} : QPoly{}, QPoly{Rat(1)}}; }
    Frac from_poly(QPoly p) { return {std::move(p), QPoly{Rat(1)}}; }
    Frac add(const Frac& a, const Frac& b) {
        return normalize(P.add(P.mul(a.num, b.den), P.mul(b.num, a.den)), P.mul(a.den, b.den));
    }
    Frac sub(const Frac& a, const Frac& b) {
        return normalize(P.sub(P.mul(a.num, b.den), P.mul(b.num, a.den)), P.mul(a.den, b.den));
    }
    Frac mul(const Frac& a, const Frac& b) { return normalize(P.mul(a.num, b.num), P.mul(a.den, b.den)); }
    Frac div(const Frac& a, const Frac& b) {
        if (b.num.empty()) throw std::domain_error("division by zero rational function");
        return normalize(P.mul(a.num, b.den), P.mul(a.den, b.num));
    }
    Frac neg(const Frac& a) { return {P.neg(a.num), a.den}; }
    bool is_zero(const Frac& a) { return a.num.empty(); }
};

// f as y-polynomial with Q[x] coefficients
std::vector<QPoly> to_ypoly(const PlanePoly& f) {
    std::vector<QPoly> r(f.deg_y() + 1);
    for (auto& [e, v] : f.c) {
        auto& col = r[e.second];
        if ((long)col.size() <= e.first) col.resize(e.first + 1, Rat(0));
        col[e.first] = v;
    }
    return r;
}

PlanePoly from_ypoly_frac(const std::vector<Frac>& g, FracField& F) {
    // clear denominators and Q[x]-content, producing a primitive rational factor
    QPoly lcmDen{Rat(1)};
    for (auto& c : g)
        if (!c.num.empty()) {
            QPoly gg = F.P.gcd(lcmDen, c.den);
            lcmDen = F.P.divexact(F.P.mul(lcmDen, c.den), gg);
        }
    std::vector<QPoly> cols(g.size());
    for (size_t j = 0; j < g.size(); ++j) {
        if (g[j].num.empty()) continue;
        cols[j] = F.P.mul(g[j].num, F.P.divexact(lcmDen, g[j].den));
    }
    // content
    QPoly cont{};
    for (auto& c : cols)
        if (!c.empty()) cont = cont.empty() ? c : F.P.gcd(cont, c);
    PlanePoly out;
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].empty()) continue;
        QPoly q = F.P.divexact(cols[j], cont);
        for (size_t i = 0; i < q.size(); ++i)
            if (q[i] != 0) out.c[{(long)i, (long)j}] = q[i];
    }
    return out;
}

// squarefree factors of f with respect to y (content in Q[x] dropped; it carries
// no branches since f(0,y) != 0)
std::vector<std::pair<PlanePoly, int>> squarefree_y(const PlanePoly& f) {
    FracField F;
    PolyOps<FracField> P(F);
    auto ycols = to_ypoly(f);
    std::vector<Frac> g(ycols.size());
    for (size_t j = 0; j < ycols.size(); ++j) g[j] = F.from_poly(ycols[j]);
    P.trim(g);
    auto dec = P.squarefree(g);
    std::vector<std::pair<PlanePoly, int>> out;
    for (auto& [fac, mult] : dec) {
        if (P.deg(fac) < 1) continue;
        out.push_back({from_ypoly_frac(fac, F), mult});
    }
    return out;
}

// ---------- expansion over the dynamic extension ----------

using ABi = std::map<std::pair<long, long>, AlgNum>; // (i, j) -> coeff of x^i y^j

void abi_add(ABi& g, long i, long j, const AlgNum& c, AlgField& K) {
    auto key = std::make_pair(i, j);
    auto it = g.find(key);
    if (it == g.end())
        g[key] = c;
    else
        it->second = K.add(it->second, c);
}

void abi_trim(ABi& g, AlgField& K) {
    for (auto it = g.begin(); it != g.end();) {
        if (K.is_zero(it->second))
            it = g.erase(it);
        else
            ++it;
    }
}

ABi plane_to_abi(const PlanePoly& f, AlgField& K) {
    ABi g;
    for (auto& [e, v] : f.c) g[{e.first, e.second}] = K.ctx->from_rat(v);
    return g;
}

// y -> y + p
ABi shift_y(const ABi& g, const AlgNum& p, AlgField& K) {
    ABi out;
    for (auto& [e, c] : g) {
        long j = e.second;
        AlgNum binc = c; // c * C(j,k) * p^{j-k}
        // iterate k = j down to 0 with running binomial
        std::vector<AlgNum> pow(j + 1);
        pow[0] = K.one();
        for (long t = 1; t <= j; ++t) pow[t] = K.mul(pow[t - 1], p);
        Int binom = 1;
        for (long k = j; k >= 0; --k) {
            AlgNum term = K.mul(c, K.mul(K.ctx->from_rat(Rat(binom)), pow[j - k]));
            abi_add(out, e.first, k, term, K);
            if (k > 0) binom = binom * k / (j - k + 1);
        }
    }
    abi_trim(out, K);
    return out;
}

std::vector<std::array<long, 4>> hull_segments(const ABi& g) {
    // returns (j1, v1, j2, v2) per negative-slope lower-hull edge
    std::map<long, long> val;
    for (auto& [e, c] : g) {
        auto it = val.find(e.second);
        if (it == val.end() || e.first < it->second) val[e.second] = e.first;
    }
    std::vector<std::pair<long, long>> pts(val.begin(), val.end());
    std::vector<std::pair<long, long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            long cross = (b.first - a.first) * (p.second - b.second) - (b.second - a.second) * (p.first - b.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<std::array<long, 4>> segs;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        if (hull[k + 1].second < hull[k].second)
            segs.push_back({hull[k].first, hull[k].second, hull[k + 1].first, hull[k + 1].second});
    }
    return segs;
}

// Kronecker factorization of a primitive squarefree integer polynomial into
// irreducible integer factors (exponential search; degrees <= 8 and small
// values only, else returns the input unfactored).
std::vector<std::vector<Int>> kronecker_factor(std::vector<Int> g) {
    std::vector<std::vector<Int>> out;
    auto deg = [](const std::vector<Int>& p) { return (long)p.size() - 1; };
    auto evalAt = [](const std::vector<Int>& p, long x) {
        Int v(0);
        for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
        return v;
    };
    auto divisors = [](Int n) {
        std::vector<Int> d;
        if (n < 0) n = -n;
        if (n == 0 || n > 200000) return d;
        for (Int k(1); k * k <= n; ++k)
            if (n % k == 0) {
                d.push_back(k);
                d.push_back(-k);
                if (k * k != n) {
                    d.push_back(n / k);
                    d.push_back(-n / k);
                }
            }
        return d;
    };
    std::function<void(std::vector<Int>)> rec = [&](std::vector<Int> f) {
        long df = deg(f);
        if (df <= 1) {
            if (df >= 1) out.push_back(f);
            return;
        }
        if (df > 8) {
            out.push_back(f);
            return;
        }
        for (long d = 1; d <= df / 2; ++d) {
            // interpolate candidate degree-d factors through divisor tuples
            std::vector<long> xs;
            for (long x = 0; (long)xs.size() < d + 1; ++x) {
                xs.push_back(x == 0 ? 0 : (x % 2 ? (x + 1) / 2 : -(x / 2)));
            }
            std::vector<std::vector<Int>> divs;
            bool feasible = true;
            for (long x : xs) {
                auto dv = divisors(evalAt(f, x));
                if (dv.empty()) {
                    feasible = false;
                    break;
                }
                divs.push_back(dv);
            }
            if (!feasible) continue;
            unsigned long long combos = 1;
            for (auto& dv : divs) {
                combos *= dv.size();
                if (combos > 300000ULL) break;
            }
            if (combos > 300000ULL) continue;
            std::vector<size_t> idx(divs.size(), 0);
            while (true) {
                // Lagrange interpolation over Q; accept integer polynomials
                std::vector<Rat> cand(d + 1, Rat(0));
                for (size_t i = 0; i < divs.size(); ++i) {
                    Rat li(1);
                    std::vector<Rat> numer{Rat(1)};
                    for (size_t j = 0; j < divs.size(); ++j) {
                        if (j == i) continue;
                        li *= Rat(xs[i] - xs[j]);
                        std::vector<Rat> t(numer.size() + 1, Rat(0));
                        for (size_t k = 0; k < numer.size(); ++k) {
                            t[k] += numer[k] * Rat(-xs[j]);
                            t[k + 1] += numer[k];
                        }
                        numer = std::move(t);
                    }
                    Rat scale = Rat(divs[i][idx[i]]) / li;
                    for (size_t k = 0; k < numer.size(); ++k) cand[k] += numer[k] * scale;
                }
                bool integral = true;
                for (auto& c : cand)
                    if (!is_int(c)) integral = false;
                if (integral && cand.back() != 0) {
                    std::vector<Int> q(d + 1);
                    for (long k = 0; k <= d; ++k) q[k] = rnum(cand[k]);
                    // exact division test over Q
                    std::vector<Rat> rem(f.size());
                    for (size_t k = 0; k < f.size(); ++k) rem[k] = Rat(f[k]);
                    std::vector<Rat> quot(f.size() - d, Rat(0));
                    bool exact = true;
                    for (long k = (long)f.size() - 1; k >= d; --k) {
                        Rat c = rem[k] / Rat(q[d]);
                        quot[k - d] = c;
                        for (long j = 0; j <= d; ++j) rem[k - d + j] -= c * Rat(q[j]);
                    }
                    for (long k = 0; k < d; ++k)
                        if (rem[k] != 0) exact = false;
                    if (exact) {
                        bool quotIntegral = true;
                        for (auto& c : quot)
                            if (!is_int(c)) quotIntegral = false;
                        if (quotIntegral) {
                            std::vector<Int> qq(quot.size());
                            for (size_t k = 0; k < quot.size(); ++k) qq[k] = rnum(quot[k]);
                            rec(q);
                            rec(qq);
                            return;
                        }
                    }
                }
                // next tuple
                size_t i = 0;
                while (i < idx.size()) {
                    if (++idx[i] < divs[i].size()) break;
                    idx[i] = 0;
                    ++i;
                }
                if (i == idx.size()) break;
            }
        }
        out.push_back(f);
    };
    rec(std::move(g));
    return out;
}

// all roots (value, multiplicity) of a monic-izable polynomial over the context
std::vector<std::pair<AlgNum, int>> all_roots(APoly p, AlgField& K) {
    PolyOps<AlgField> PA(K);
    PA.trim(p);
    std::vector<std::pair<AlgNum, int>> out;
    auto sqf = PA.squarefree(p);
    for (auto& [s0, mult] : sqf) {
        APoly s = s0;
        // rational linear factors first (deterministic, keeps contexts small)
        bool allRat = true;
        for (auto& c : s)
            if (!c.is_rational()) {
                allRat = false;
                break;
            }
        if (allRat && PA.deg(s) >= 1) {
            // rational roots of a squarefree rational polynomial via the rational
            // root theorem (after clearing denominators); keeps contexts small
            QPoly q(s.size());
            for (size_t i = 0; i < s.size(); ++i) q[i] = s[i].rational_value();
            std::vector<Rat> found;
            if (q[0] == 0) { // squarefree: at most a simple zero root
                found.push_back(Rat(0));
                q.erase(q.begin());
            }
            Int den(1);
            for (auto& c : q) den = int_lcm(den, rden(c));
            std::vector<Int> zi(q.size());
            for (size_t i = 0; i < q.size(); ++i) zi[i] = rnum(q[i]) * (den / rden(q[i]));
            auto divisors = [](Int n) {
                std::vector<Int> d;
                if (n < 0) n = -n;
                if (n > 1000000) return d; // cap: fall back to adjoin
                for (Int k = 1; k * k <= n; ++k)
                    if (n % k == 0) {
                        d.push_back(k);
                        if (k * k != n) d.push_back(n / k);
                    }
                return d;
            };
            if (!zi.empty() && zi[0] != 0 && zi.size() > 1) {
                auto dn = divisors(zi[0]), dd = divisors(zi.back());
                for (auto& pn : dn)
                    for (auto& pd : dd)
                        for (int sg = 0; sg < 2; ++sg) {
                            Rat cand(sg ? -pn : pn, pd);
                            cand.canonicalize();
                            Rat v(0);
                            for (size_t i = zi.size(); i-- > 0;) v = v * cand + Rat(zi[i]);
                            if (v == 0) found.push_back(cand);
                        }
            }
            std::sort(found.begin(), found.end());
            found.erase(std::unique(found.begin(), found.end()), found.end());
            for (auto& r : found) {
                AlgNum rr = K.ctx->from_rat(r);
                out.push_back({rr, mult});
                s = PA.divexact(s, APoly{K.neg(rr), K.one()});
            }
        }
        // factor the remaining rational part over Q: keeps adjoined contexts
        // small (cyclotomic labels in particular)
        std::vector<APoly> pieces;
        if (allRat && PA.deg(s) >= 2) {
            QPoly q(s.size());
            for (size_t i = 0; i < s.size(); ++i) q[i] = s[i].rational_value();
            Int den(1);
            for (auto& c : q) den = int_lcm(den, rden(c));
            std::vector<Int> zi(q.size());
            for (size_t i = 0; i < q.size(); ++i) zi[i] = rnum(q[i]) * (den / rden(q[i]));
            auto facs = kronecker_factor(zi);
            std::sort(facs.begin(), facs.end(), [](auto& a, auto& b) {
                if (a.size() != b.size()) return a.size() < b.size();
                for (size_t i = a.size(); i-- > 0;)
                    if (a[i] != b[i]) return a[i] < b[i];
                return false;
            });
            for (auto& fac : facs) {
                APoly piece(fac.size());
                Rat lc(fac.back());
                for (size_t i = 0; i < fac.size(); ++i) piece[i] = K.ctx->from_rat(Rat(fac[i]) / lc);
                pieces.push_back(std::move(piece));
            }
        } else if (PA.deg(s) >= 1) {
            pieces.push_back(s);
        }
        for (auto& piece : pieces) {
            APoly w = piece;
            while (PA.deg(w) >= 1) {
                if (PA.deg(w) == 1) {
                    out.push_back({K.neg(PA.make_monic(w)[0]), mult});
                    break;
                }
                AlgNum r = K.ctx->adjoin_root(PA.make_monic(w));
                out.push_back({r, mult});
                w = PA.divexact(w, APoly{K.neg(r), K.one()});
            }
        }
    }
    return out;
}

struct RecCtx {
    AlgField* K;
    Rat H;
    int yunMult;
    std::vector<PSeries>* out;
};

void expand_rec(RecCtx& rc, ABi g, long W, const Rat& E, std::vector<PuiseuxTerm> pref) {
    AlgField& K = *rc.K;
    PolyOps<AlgField> PA(K);
    abi_trim(g, K);
    if (g.empty()) throw std::logic_error("expand_rec: zero polynomial");

    // exact-root continuation: y^val | g
    long val = LONG_MAX;
    for (auto& [e, c] : g) val = std::min(val, e.second);
    if (val > 0) {
        PSeries s;
        s.terms = pref;
        s.exact = true;
        s.mult = rc.yunMult;
        s.count = (int)val;
        rc.out->push_back(std::move(s));
        ABi g2;
        for (auto& [e, c] : g) g2[{e.first, e.second - val}] = c;
        g = std::move(g2);
    }

    for (auto seg : hull_segments(g)) {
        long j1 = seg[0], v1 = seg[1], j2 = seg[2], v2 = seg[3];
        long du = v1 - v2, dw = j2 - j1; // slope mu = du/dw in current frame
        long gg = to_long(int_gcd(Int(du), Int(dw)));
        long u = du / gg, w = dw / gg;
        Rat mu(du, dw);
        mu.canonicalize();
        Rat Eterm = E + mu / Rat(W);
        long L = j2 - j1;
        if (Eterm >= rc.H) {
            PSeries s;
            s.terms = pref;
            s.exact = false;
            s.mult = rc.yunMult;
            s.count = (int)L;
            rc.out->push_back(std::move(s));
            continue;
        }
        // characteristic polynomial: coefficients at points on the segment line
        APoly phi(L + 1, K.zero());
        for (auto& [e, c] : g) {
            long i = e.first, j = e.second;
            if (j < j1 || j > j2) continue;
            if (w * i + u * j == w * v1 + u * j1) phi[j - j1] = c;
        }
        for (auto& [c0, e0] : all_roots(phi, K)) {
            // transform: x -> x^w, y -> x^u (c0 + y), divide by x^Kmin
            long Kmin = LONG_MAX;
            for (auto& [e, c] : g) Kmin = std::min(Kmin, w * e.first + u * e.second);
            ABi g2;
            for (auto& [e, c] : g) {
                long i = e.first, j = e.second;
                std::vector<AlgNum> pow(j + 1);
                pow[0] = K.one();
                for (long t = 1; t <= j; ++t) pow[t] = K.mul(pow[t - 1], c0);
                Int binom = 1;
                for (long k = j; k >= 0; --k) {
                    AlgNum term = K.mul(c, K.mul(K.ctx->from_rat(Rat(binom)), pow[j - k]));
                    abi_add(g2, w * i + u * j - Kmin, k, term, K);
                    if (k > 0) binom = binom * k / (j - k + 1);
                }
            }
            abi_trim(g2, K);
            auto pref2 = pref;
            pref2.push_back({Eterm, c0});
            expand_rec(rc, std::move(g2), W * w, Eterm, std::move(pref2));
        }
    }
}

} // namespace

long PSeries::ram() const {
    Int l(1);
    for (auto& t : terms) l = int_lcm(l, rden(t.e));
    return to_long(l);
}

Expansion expand(const PlanePoly& f, const Rat& height) {
    f.check_invariants();
    Expansion ex;
    ex.ctx = ExtCtx::make();
    ex.height = height;
    AlgField K(ex.ctx);
    PolyOps<AlgField> PA(K);

    auto factors = squarefree_y(f);
    // stable order: by multiplicity, then by string form (deterministic)
    std::sort(factors.begin(), factors.end(), [](auto& a, auto& b) {
        if (a.second != b.second) return a.second < b.second;
        return a.first.str() < b.first.str();
    });

    for (auto& [fj, mult] : factors) {
        // base points: roots of fj(0, y)
        long dy = fj.deg_y();
        APoly u0(dy + 1, K.zero());
        for (auto& [e, v] : fj.c)
            if (e.first == 0) u0[e.second] = K.ctx->from_rat(v);
        PA.trim(u0);
        auto bases = all_roots(u0, K);
        for (auto& [p, baseMult] : bases) {
            ABi g = shift_y(plane_to_abi(fj, K), p, K);
            std::vector<PSeries> series;
            RecCtx rc{&K, height, mult, &series};
            expand_rec(rc, std::move(g), 1, Rat(0), {});
            // merge into expansion points (identify equal base points across factors)
            ExpansionPoint* pt = nullptr;
            for (auto& q : ex.points)
                if (ex.ctx->equal(q.base, p)) {
                    pt = &q;
                    break;
                }
            if (!pt) {
                ex.points.push_back({});
                pt = &ex.points.back();
                pt->base = p;
            }
            for (auto& s : series) {
                pt->m_p += s.mult * s.count;
                pt->series.push_back(std::move(s));
            }
        }
    }
    return ex;
}

Rat series_contact(const PSeries& a, const PSeries& b, const CtxPtr& ctx, bool* equalOnRange) {
    if (equalOnRange) *equalOnRange = false;
    size_t i = 0, j = 0;
    CtxPtr c = ctx;
    while (i < a.terms.size() || j < b.terms.size()) {
        if (i < a.terms.size() && j < b.terms.size()) {
            if (a.terms[i].e < b.terms[j].e) {
                return a.terms[i].e;
            } else if (b.terms[j].e < a.terms[i].e) {
                return b.terms[j].e;
            } else {
                if (!c->equal(a.terms[i].c, b.terms[j].c)) return a.terms[i].e;
                ++i;
                ++j;
            }
        } else if (i < a.terms.size()) {
            return a.terms[i].e;
        } else {
            return b.terms[j].e;
        }
    }
    if (equalOnRange) *equalOnRange = true;
    return Rat(-1);
}

Rat separation_height(const Expansion& ex) {
    // pairwise contact orders, full support of terminating series, and every
    // leading exponent (so the minimal vertex of each branch is always seen)
    Rat sep(1);
    for (auto& pt : ex.points) {
        for (size_t i = 0; i < pt.series.size(); ++i) {
            if (pt.series[i].count > 1 && !pt.series[i].exact)
                throw std::logic_error("separation_height on unseparated expansion");
            if (pt.series[i].exact && !pt.series[i].terms.empty())
                sep = std::max(sep, pt.series[i].terms.back().e);
            if (!pt.series[i].terms.empty()) sep = std::max(sep, pt.series[i].terms.front().e);
            for (size_t j = i + 1; j < pt.series.size(); ++j) {
                bool eq = false;
                Rat c = series_contact(pt.series[i], pt.series[j], ex.ctx, &eq);
                if (eq) throw std::logic_error("distinct series equal on the stored range");
                sep = std::max(sep, c);
            }
        }
    }
    return sep;
}

Expansion expand_separated(const PlanePoly& f, int extra, const Rat& atLeast) {
    Rat H = std::max(Rat(2), atLeast);
    for (int iter = 0; iter < 64; ++iter) {
        Expansion ex = expand(f, H);
        bool ok = true;
        for (auto& pt : ex.points)
            for (auto& s : pt.series) {
                if (s.count > 1 && !s.exact) ok = false;        // unseparated prefix record
                if (!s.exact && s.terms.empty()) ok = false;    // leading term not reached yet
            }
        if (!ok) {
            H *= 2;
            continue;
        }
        Rat sep = separation_height(ex);
        Rat want = sep + 1 + extra;
        if (want < atLeast) want = atLeast;
        if (H == want) return ex;
        // stable: at heights > sep all pairs separate, terminating series stay
        // terminated, and every leading term is below sep + 1
        return expand(f, want);
    }
    throw std::logic_error("expand_separated failed to converge");
}

bool prefixes_conjugate(const std::vector<PuiseuxTerm>& A, const std::vector<PuiseuxTerm>& B, const CtxPtr& ctx) {
    if (A.size() != B.size()) return false;
    for (size_t i = 0; i < A.size(); ++i)
        if (A[i].e != B[i].e) return false;
    if (A.empty()) return true;
    Int M(1);
    for (auto& t : A) M = int_lcm(M, rden(t.e));
    long Ml = to_long(M);
    std::vector<long> a(A.size());
    for (size_t i = 0; i < A.size(); ++i) a[i] = to_long(A[i].e * Rat(Ml));
    // Bezout: find u_i with sum u_i a_i = 1 (mod M); gcd(M, a_i) = 1 always holds
    // for lcm-denominator lattices
    long g = Ml;
    std::vector<long> u(A.size(), 0);
    // iterative: maintain g = gcd(M, a_0..a_i) and u with g = sum u_k a_k (mod M)
    for (size_t i = 0; i < A.size(); ++i) {
        // egcd(g, a_i): r0 = x0*g + y0*a_i throughout
        long x0 = 1, y0 = 0, x1 = 0, y1 = 1, r0 = g, r1 = a[i];
        while (r1 != 0) {
            long q = r0 / r1;
            long r2 = r0 - q * r1, x2 = x0 - q * x1, y2 = y0 - q * y1;
            r0 = r1;
            r1 = r2;
            x0 = x1;
            x1 = x2;
            y0 = y1;
            y1 = y2;
        }
        // r0 = x0*g + y0*a_i
        for (auto& uu : u) uu *= x0;
        u[i] = y0;
        g = r0;
        if (g == 1) break;
    }
    if (g != 1) return false; // should not happen
    AlgNum zeta = ctx->from_int(1);
    for (size_t i = 0; i < A.size(); ++i) {
        if (u[i] == 0) continue;
        AlgNum ratio = ctx->div(B[i].c, A[i].c);
        zeta = ctx->mul(zeta, ctx->pow(ratio, u[i]));
    }
    if (!ctx->is_zero(ctx->sub(ctx->pow(zeta, Ml), ctx->from_int(1)))) return false;
    for (size_t i = 0; i < A.size(); ++i) {
        AlgNum lhs = ctx->mul(ctx->pow(zeta, a[i]), A[i].c);
        if (!ctx->equal(lhs, B[i].c)) return false;
    }
    return true;
}

std::vector<std::vector<int>> group_cycles(const ExpansionPoint& pt, const CtxPtr& ctx) {
    std::vector<std::vector<int>> groups;
    std::vector<int> assigned(pt.series.size(), 0);
    for (size_t i = 0; i < pt.series.size(); ++i) {
        if (assigned[i]) continue;
        std::vector<int> grp{(int)i};
        assigned[i] = 1;
        for (size_t j = i + 1; j < pt.series.size(); ++j) {
            if (assigned[j]) continue;
            if (pt.series[i].exact != pt.series[j].exact || pt.series[i].mult != pt.series[j].mult) continue;
            if (prefixes_conjugate(pt.series[i].terms, pt.series[j].terms, ctx)) {
                grp.push_back((int)j);
                assigned[j] = 1;
            }
        }
        groups.push_back(std::move(grp));
    }
    return groups;
}

} // namespace mmf
