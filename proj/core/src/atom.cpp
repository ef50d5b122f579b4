#include "mmf/atom.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mmf {

// ---------- MPoly ----------

MPoly MPoly::constant(int n, const AlgNum& c) {
    MPoly r;
    r.nvars = n;
    if (c.has_ctx() && !c.rep().empty()) r.t[std::vector<int>(n, 0)] = c;
    return r;
}
bool MPoly::is_constant() const {
    if (t.empty()) return true;
    if (t.size() != 1) return false;
    for (int e : t.begin()->first)
        if (e != 0) return false;
    return true;
}
bool MPoly::uses(int i) const {
    for (auto& [e, c] : t)
        if (e[i] != 0) return true;
    return false;
}
MPoly MPoly::add(const MPoly& o, const CtxPtr& ctx) const {
    MPoly r = *this;
    for (auto& [e, c] : o.t) {
        auto it = r.t.find(e);
        if (it == r.t.end())
            r.t[e] = c;
        else {
            it->second = ctx->add(it->second, c);
            if (ctx->is_zero(it->second)) r.t.erase(it);
        }
    }
    return r;
}
MPoly MPoly::sub(const MPoly& o, const CtxPtr& ctx) const { return add(o.scale(ctx->from_int(-1), ctx), ctx); }
MPoly MPoly::mul(const MPoly& o, const CtxPtr& ctx) const {
    MPoly r;
    r.nvars = nvars;
    for (auto& [e1, c1] : t)
        for (auto& [e2, c2] : o.t) {
            std::vector<int> e(nvars);
            for (int i = 0; i < nvars; ++i) e[i] = e1[i] + e2[i];
            AlgNum prod = ctx->mul(c1, c2);
            auto it = r.t.find(e);
            if (it == r.t.end())
                r.t[e] = prod;
            else
                it->second = ctx->add(it->second, prod);
        }
    r.trim(ctx);
    return r;
}
MPoly MPoly::scale(const AlgNum& c, const CtxPtr& ctx) const {
    MPoly r;
    r.nvars = nvars;
    if (ctx->is_zero(c)) return r;
    for (auto& [e, cc] : t) r.t[e] = ctx->mul(cc, c);
    return r;
}
MPoly MPoly::pow(long e, const CtxPtr& ctx) const {
    MPoly r = MPoly::constant(nvars, ctx->from_int(1));
    MPoly b = *this;
    while (e > 0) {
        if (e & 1) r = r.mul(b, ctx);
        b = b.mul(b, ctx);
        e >>= 1;
    }
    return r;
}
MPoly MPoly::subst(const std::vector<MPoly>& images, int m, const CtxPtr& ctx) const {
    MPoly r = MPoly::zero(m);
    for (auto& [e, c] : t) {
        MPoly term = MPoly::constant(m, c);
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0) term = term.mul(images[i].pow(e[i], ctx), ctx);
        r = r.add(term, ctx);
    }
    return r;
}
void MPoly::trim(const CtxPtr& ctx) {
    for (auto it = t.begin(); it != t.end();) {
        if (ctx->is_zero(it->second))
            it = t.erase(it);
        else
            ++it;
    }
}
long MPoly::eval_fq(const FqCtx& fq, int emb, const std::vector<long>& pt, const CtxPtr& ctx) const {
    long acc = 0;
    for (auto& [e, c] : t) {
        long v = ctx->reduce(c, fq, emb);
        for (int i = 0; i < nvars; ++i)
            for (int k = 0; k < e[i]; ++k) v = fq.mul(v, pt[i]);
        acc = fq.add(acc, v);
    }
    return acc;
}
std::string MPoly::str(const std::vector<std::string>& names) const {
    if (t.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, c] : t) {
        if (!first) os << " + ";
        first = false;
        os << "(" << algnum_str(c) << ")";
        for (int i = 0; i < nvars; ++i)
            if (e[i] != 0) {
                os << "*" << (i < (int)names.size() ? names[i] : ("z" + std::to_string(i)));
                if (e[i] != 1) os << "^" << e[i];
            }
    }
    return os.str();
}

MPoly mpoly_var(const CtxPtr& ctx, int n, int i, int pow) {
    MPoly r;
    r.nvars = n;
    std::vector<int> e(n, 0);
    e[i] = (int)pow;
    r.t[e] = ctx->from_int(1);
    return r;
}

// ---------- Atom normalization ----------

namespace {

MPoly reindex_drop(const MPoly& p, int i) {
    MPoly r;
    r.nvars = p.nvars - 1;
    for (auto& [e, c] : p.t) {
        std::vector<int> e2;
        e2.reserve(e.size() - 1);
        for (int j = 0; j < (int)e.size(); ++j)
            if (j != i) e2.push_back(e[j]);
        r.t[std::move(e2)] = c;
    }
    return r;
}

// substitute coords[i] := image (image does not use var i), drop the coordinate
void eliminate_coord(Atom& a, int i, const MPoly& image, const CtxPtr& ctx) {
    int n = a.n();
    MPoly img = reindex_drop(image, i);
    std::vector<MPoly> images;
    for (int j = 0; j < n; ++j) {
        if (j == i)
            images.push_back(img);
        else
            images.push_back(mpoly_var(ctx, n - 1, j < i ? j : j - 1));
    }
    auto apply = [&](MPoly& p) { p = p.subst(images, n - 1, ctx); };
    for (auto& p : a.eq) apply(p);
    for (auto& p : a.neq) apply(p);
    for (auto& p : a.map_) apply(p);
    a.coords.erase(a.coords.begin() + i);
    if (!a.weights.empty()) a.weights.erase(a.weights.begin() + i);
}

bool monomial_nonvanishing(const Atom& a, const MPoly& p, const CtxPtr& ctx) {
    if (!p.is_monomial()) return false;
    auto& [e, c] = *p.t.begin();
    if (ctx->is_zero(c)) return false;
    for (int i = 0; i < (int)e.size(); ++i)
        if (e[i] != 0 && a.coords[i] != Dom::Gm) return false;
    return true;
}

std::string poly_key(const MPoly& p) {
    std::ostringstream os;
    for (auto& [e, c] : p.t) {
        for (int x : e) os << x << ",";
        os << "#" << algnum_str(c) << ";";
    }
    return os.str();
}

std::string atom_key_raw(const Atom& a) {
    std::ostringstream os;
    os << (a.base == Atom::Base::X0 ? "X0" : "pt") << "|";
    for (auto d : a.coords) os << (d == Dom::A1 ? "A" : "G");
    os << "|eq:";
    std::vector<std::string> eqs, neqs;
    for (auto& p : a.eq) eqs.push_back(poly_key(p));
    for (auto& p : a.neq) neqs.push_back(poly_key(p));
    std::sort(eqs.begin(), eqs.end());
    std::sort(neqs.begin(), neqs.end());
    for (auto& s : eqs) os << s << "$";
    os << "|neq:";
    for (auto& s : neqs) os << s << "$";
    os << "|map:";
    for (auto& p : a.map_) os << poly_key(p) << "$";
    os << "|tgt:";
    for (auto d : a.target) os << (d == Dom::A1 ? "A" : "G");
    return os.str();
}

Atom permute_atom(const Atom& a, const std::vector<int>& perm, const CtxPtr& ctx) {
    // new coordinate k = old coordinate perm[k]
    Atom r = a;
    int n = a.n();
    for (int k = 0; k < n; ++k) {
        r.coords[k] = a.coords[perm[k]];
        if (!a.weights.empty()) r.weights[k] = a.weights[perm[k]];
    }
    auto remap = [&](const MPoly& p) {
        MPoly q;
        q.nvars = n;
        for (auto& [e, c] : p.t) {
            std::vector<int> e2(n);
            for (int k = 0; k < n; ++k) e2[k] = e[perm[k]];
            q.t[std::move(e2)] = c;
        }
        return q;
    };
    for (auto& p : r.eq) p = remap(p);
    for (auto& p : r.neq) p = remap(p);
    for (auto& p : r.map_) p = remap(p);
    return r;
}

} // namespace

bool atom_normalize(Atom& a, const CtxPtr& ctx) {
    // fixpoint simplification
    bool changed = true;
    int guard = 0;
    while (changed && ++guard < 64) {
        changed = false;
        for (auto& p : a.eq) p.trim(ctx);
        for (auto& p : a.neq) p.trim(ctx);
        for (auto& p : a.map_) p.trim(ctx);

        // neq screening
        for (size_t i = 0; i < a.neq.size(); ++i) {
            if (a.neq[i].is_zero()) return false;
            if ((a.neq[i].is_constant()) || monomial_nonvanishing(a, a.neq[i], ctx)) {
                a.neq.erase(a.neq.begin() + i);
                changed = true;
                break;
            }
        }
        if (changed) continue;

        // eq screening
        for (size_t i = 0; i < a.eq.size(); ++i) {
            MPoly& P = a.eq[i];
            if (P.is_zero()) {
                a.eq.erase(a.eq.begin() + i);
                changed = true;
                break;
            }
            if (P.is_constant()) return false;
            if (P.is_monomial()) {
                auto& [e, c] = *P.t.begin();
                // which variables occur
                std::vector<int> vars;
                for (int j = 0; j < (int)e.size(); ++j)
                    if (e[j] != 0) vars.push_back(j);
                bool allGm = true;
                for (int j : vars)
                    if (a.coords[j] != Dom::Gm) allGm = false;
                if (allGm) return false; // monomial in units cannot vanish
                if (vars.size() == 1 && a.coords[vars[0]] == Dom::A1) {
                    // forces the coordinate to 0
                    int j = vars[0];
                    a.eq.erase(a.eq.begin() + i);
                    eliminate_coord(a, j, MPoly::zero(a.n()), ctx);
                    changed = true;
                    break;
                }
                continue;
            }
            // linear elimination: P = c*X_j + R, X_j not elsewhere in P
            bool done = false;
            for (int j = 0; j < a.n() && !done; ++j) {
                std::vector<int> ej(a.n(), 0);
                ej[j] = 1;
                auto it = P.t.find(ej);
                if (it == P.t.end()) continue;
                // ensure no other term uses X_j
                bool clean = true;
                for (auto& [e, c] : P.t)
                    if (e != ej && e[j] != 0) clean = false;
                if (!clean) continue;
                AlgNum cj = it->second;
                MPoly R = P;
                R.t.erase(ej);
                MPoly image = R.scale(ctx->neg(ctx->inv(cj)), ctx);
                if (a.coords[j] == Dom::Gm) {
                    // image must be visibly nonvanishing on the torus
                    if (!monomial_nonvanishing(a, image, ctx)) continue;
                }
                a.eq.erase(a.eq.begin() + i);
                eliminate_coord(a, j, image, ctx);
                done = true;
            }
            if (done) {
                changed = true;
                break;
            }
        }
    }

    // free-torus reduction of a single monomial G_m-valued map
    if (a.eq.empty() && a.neq.empty() && a.map_.size() == 1 && a.map_[0].is_monomial()) {
        auto& [e, c] = *a.map_[0].t.begin();
        bool allGm = true;
        std::vector<int> used;
        for (int j = 0; j < (int)e.size(); ++j)
            if (e[j] != 0) {
                used.push_back(j);
                if (a.coords[j] != Dom::Gm) allGm = false;
            }
        if (allGm && !used.empty()) {
            int g = 0;
            for (int j : used) g = (int)std::gcd((long)g, (long)std::abs(e[j]));
            int i0 = used[0];
            std::vector<int> e2(a.n(), 0);
            e2[i0] = g;
            MPoly m2;
            m2.nvars = a.n();
            // a unit monomial of exponent 1 is a coordinate: its constant is
            // absorbed by the coordinate change (fiber count 1 either way)
            m2.t[e2] = (g == 1) ? ctx->from_int(1) : c;
            if (!(e2 == e) || (g == 1 && !ctx->equal(c, ctx->from_int(1)))) {
                a.map_[0] = m2;
                // reassign a consistent single-axis weight vector
                for (auto& w : a.weights) w.assign(1, 0);
                if (!a.weights.empty()) a.weights[i0] = {1};
            }
        }
    }

    // canonical coordinate order
    int n = a.n();
    if (n >= 2 && n <= 6) {
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::string bestKey = atom_key_raw(a);
        Atom best = a;
        std::vector<int> p = perm;
        std::sort(p.begin(), p.end());
        do {
            Atom cand = permute_atom(a, p, ctx);
            std::string k = atom_key_raw(cand);
            if (k < bestKey) {
                bestKey = k;
                best = cand;
            }
        } while (std::next_permutation(p.begin(), p.end()));
        a = best;
    }
    return true;
}

std::string Atom::key(const CtxPtr& ctx) const {
    (void)ctx;
    return atom_key_raw(*this);
}

// ---------- MotClass ----------

void MotClass::add_term(const LFrac& c, Atom a) {
    if (c.is_zero()) return;
    terms.push_back({c, std::move(a)});
}

void MotClass::normalize() {
    std::map<std::string, std::pair<LFrac, Atom>> acc;
    for (auto& [c, a] : terms) {
        Atom b = a;
        if (!atom_normalize(b, ctx)) continue; // empty atom
        std::string k = b.key(ctx);
        auto it = acc.find(k);
        if (it == acc.end())
            acc[k] = {c, std::move(b)};
        else
            it->second.first = it->second.first + c;
    }
    terms.clear();
    for (auto& [k, pr] : acc) {
        if (pr.first.is_zero()) continue;
        terms.push_back(std::move(pr));
    }
}

MotClass MotClass::operator+(const MotClass& o) const {
    MotClass r = *this;
    for (auto& t : o.terms) r.terms.push_back(t);
    r.normalize();
    return r;
}
MotClass MotClass::operator-() const {
    MotClass r = *this;
    for (auto& t : r.terms) t.first = -t.first;
    return r;
}
MotClass MotClass::operator-(const MotClass& o) const { return *this + (-o); }

bool MotClass::equal_normal_form(const MotClass& o) const {
    MotClass a = *this, b = o;
    a.normalize();
    b.normalize();
    if (a.terms.size() != b.terms.size()) return false;
    for (size_t i = 0; i < a.terms.size(); ++i) {
        if (a.terms[i].second.key(ctx) != b.terms[i].second.key(ctx)) return false;
        LFrac d = a.terms[i].first - b.terms[i].first;
        if (!d.is_zero()) return false;
    }
    return true;
}

// ---------- mu_q ----------

Rat mu_q(const MotClass& C, long q, const std::vector<long>& alpha, int emb) {
    auto fq = fq_context(q);
    Rat total(0);
    for (auto& [coef, a] : C.terms) {
        int n = a.n();
        // enumerate
        std::vector<long> pt(n);
        long count = 0;
        std::vector<long> idx(n, 0);
        // domains: A1 -> 0..q-1 ; Gm -> 1..q-1
        auto domSize = [&](int i) { return a.coords[i] == Dom::A1 ? q : q - 1; };
        auto value = [&](int i) { return a.coords[i] == Dom::A1 ? idx[i] : idx[i] + 1; };
        bool doneAll = false;
        if (n == 0) {
            bool ok = true;
            std::vector<long> none;
            for (auto& p : a.eq)
                if (p.eval_fq(*fq, emb, none, C.ctx) != 0) ok = false;
            for (auto& p : a.neq)
                if (p.eval_fq(*fq, emb, none, C.ctx) == 0) ok = false;
            for (size_t m = 0; m < a.target.size() && ok; ++m)
                if (a.map_[m].eval_fq(*fq, emb, none, C.ctx) != alpha[m]) ok = false;
            if (ok) count = 1;
            doneAll = true;
        }
        while (!doneAll) {
            for (int i = 0; i < n; ++i) pt[i] = value(i);
            bool ok = true;
            for (auto& p : a.eq)
                if (p.eval_fq(*fq, emb, pt, C.ctx) != 0) {
                    ok = false;
                    break;
                }
            if (ok)
                for (auto& p : a.neq)
                    if (p.eval_fq(*fq, emb, pt, C.ctx) == 0) {
                        ok = false;
                        break;
                    }
            if (ok)
                for (size_t m = 0; m < a.target.size(); ++m)
                    if (a.map_[m].eval_fq(*fq, emb, pt, C.ctx) != alpha[m]) {
                        ok = false;
                        break;
                    }
            if (ok) ++count;
            int i = 0;
            while (i < n) {
                if (++idx[i] < domSize(i)) break;
                idx[i] = 0;
                ++i;
            }
            if (i == n) doneAll = true;
        }
        total += coef.eval(Rat(q)) * Rat(count);
    }
    return total;
}

Rat mu_q(const MotClass& C, long q, long alpha, int emb) { return mu_q(C, q, std::vector<long>{alpha}, emb); }

bool equivariance_check(const Atom& a, const CtxPtr& ctx) {
    (void)ctx;
    if (a.weights.empty()) return true;
    int axes = (int)a.weights[0].size();
    for (int ax = 0; ax < axes; ++ax) {
        for (auto& m : a.map_) {
            bool first = true;
            long deg = 0;
            for (auto& [e, c] : m.t) {
                long d = 0;
                for (int i = 0; i < (int)e.size(); ++i) d += (long)e[i] * a.weights[i][ax];
                if (first) {
                    deg = d;
                    first = false;
                } else if (d != deg)
                    return false;
            }
        }
        // constraints must be action-stable: homogeneous as well
        for (auto& m : a.eq) {
            bool first = true;
            long deg = 0;
            for (auto& [e, c] : m.t) {
                long d = 0;
                for (int i = 0; i < (int)e.size(); ++i) d += (long)e[i] * a.weights[i][ax];
                if (first) {
                    deg = d;
                    first = false;
                } else if (d != deg)
                    return false;
            }
        }
    }
    return true;
}

Atom atom_pow_map(const CtxPtr& ctx, long N, long w, const AlgNum* kappa) {
    Atom a;
    a.coords = {Dom::Gm};
    a.weights = {{w}};
    a.target = {Dom::Gm};
    MPoly m = mpoly_var(ctx, 1, 0, (int)N);
    if (kappa) m = m.scale(*kappa, ctx);
    a.map_ = {m};
    return a;
}

Atom atom_identity_class(const CtxPtr& ctx) {
    Atom a;
    a.coords = {Dom::A1, Dom::Gm};
    a.weights = {{1}, {1}}; // placeholder weights; rescaled by callers
    a.target = {Dom::A1, Dom::Gm};
    a.map_ = {mpoly_var(ctx, 2, 0), mpoly_var(ctx, 2, 1)};
    return a;
}

std::vector<long> good_alpha_range(long q) {
    std::vector<long> r;
    for (long a = 1; a < q; ++a) r.push_back(a);
    return r;
}

} // namespace mmf
