#include "mmf/algnum.hpp"

#include <cassert>
#include <sstream>

namespace mmf {

namespace {
RatField QF;

QPoly q_trim(QPoly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// extended gcd over Q[X]: g = u*a + v*b, g monic (or zero)
void q_egcd(const QPoly& a, const QPoly& b, QPoly& g, QPoly& u, QPoly& v) {
    PolyOps<RatField> P(QF);
    QPoly r0 = q_trim(a), r1 = q_trim(b);
    QPoly u0 = P.one(), v0 = P.zero(), u1 = P.zero(), v1 = P.one();
    while (!r1.empty()) {
        QPoly q, r;
        P.divrem(r0, r1, q, r);
        QPoly u2 = P.sub(u0, P.mul(q, u1));
        QPoly v2 = P.sub(v0, P.mul(q, v1));
        r0 = std::move(r1);
        r1 = std::move(r);
        u0 = std::move(u1);
        u1 = std::move(u2);
        v0 = std::move(v1);
        v1 = std::move(v2);
    }
    if (!r0.empty()) {
        Rat lc = r0.back();
        for (auto& c : r0) c /= lc;
        for (auto& c : u0) c /= lc;
        for (auto& c : v0) c /= lc;
    }
    g = r0;
    u = u0;
    v = v0;
}
} // namespace

// ---------- AlgNum ----------

void AlgNum::sync() const {
    if (!ctx_) return;
    while (ver_ < ctx_->version()) {
        const auto& st = ctx_->steps_[ver_];
        PolyOps<RatField> P(QF);
        QPoly img = P.compose(rep_, st.image);
        // reduce mod new modulus
        QPoly q, r;
        P.divrem(img, st.modulus, q, r);
        rep_ = std::move(r);
        ++ver_;
    }
}

const QPoly& AlgNum::rep() const {
    sync();
    return rep_;
}

bool AlgNum::is_rational() const {
    sync();
    return rep_.size() <= 1;
}

Rat AlgNum::rational_value() const {
    sync();
    if (rep_.empty()) return Rat(0);
    if (rep_.size() == 1) return rep_[0];
    throw std::logic_error("AlgNum is not rational");
}

// ---------- ExtCtx ----------

CtxPtr ExtCtx::make() { return CtxPtr(new ExtCtx()); }

QPoly ExtCtx::reduceQ(QPoly r) const {
    PolyOps<RatField> P(QF);
    QPoly q, rem;
    P.divrem(r, modulus_, q, rem);
    return rem;
}

AlgNum ExtCtx::from_rat(const Rat& r) {
    QPoly rep;
    if (r != 0) rep.push_back(r);
    if (degree() == 1 && !rep.empty()) {
        // fine: constants are valid reps for any modulus of degree >= 1
    }
    return AlgNum(shared_from_this(), version(), std::move(rep));
}

AlgNum ExtCtx::generator() {
    if (degree() == 1) {
        // modulus = X + c: generator is the rational -c
        return from_rat(-modulus_[0]);
    }
    return AlgNum(shared_from_this(), version(), QPoly{Rat(0), Rat(1)});
}

AlgNum ExtCtx::add(const AlgNum& a, const AlgNum& b) {
    PolyOps<RatField> P(QF);
    return AlgNum(shared_from_this(), version(), P.add(a.rep(), b.rep()));
}
AlgNum ExtCtx::sub(const AlgNum& a, const AlgNum& b) {
    PolyOps<RatField> P(QF);
    return AlgNum(shared_from_this(), version(), P.sub(a.rep(), b.rep()));
}
AlgNum ExtCtx::mul(const AlgNum& a, const AlgNum& b) {
    PolyOps<RatField> P(QF);
    return AlgNum(shared_from_this(), version(), reduceQ(P.mul(a.rep(), b.rep())));
}
AlgNum ExtCtx::neg(const AlgNum& a) {
    PolyOps<RatField> P(QF);
    return AlgNum(shared_from_this(), version(), P.neg(a.rep()));
}
AlgNum ExtCtx::pow(const AlgNum& a, long e) {
    if (e < 0) return inv(pow(a, -e));
    AlgNum r = from_rat(Rat(1));
    AlgNum base = a;
    while (e > 0) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

void ExtCtx::split_keep_coprime(const QPoly& g, const char* why) {
    PolyOps<RatField> P(QF);
    QPoly keep = P.divexact(modulus_, g);
    std::ostringstream os;
    os << why << ": modulus degree " << degree() << " -> " << ((int)keep.size() - 1);
    split_log_.push_back(os.str());
    Step st;
    st.image = QPoly{Rat(0), Rat(1)}; // identity
    st.modulus = keep;
    steps_.push_back(std::move(st));
    modulus_ = keep;
}

bool ExtCtx::is_zero(const AlgNum& a) {
    PolyOps<RatField> P(QF);
    QPoly r = a.rep(); // synced
    r = reduceQ(std::move(r));
    if (r.empty()) return true;
    QPoly g = P.gcd(r, modulus_);
    if (P.deg(g) == 0) return false;
    if (P.deg(g) == P.deg(modulus_)) return true;
    // ambiguous: keep the branch where the element is nonzero
    split_keep_coprime(g, "is_zero split");
    return false;
}

AlgNum ExtCtx::inv(const AlgNum& a) {
    if (is_zero(a)) throw std::domain_error("inverse of zero AlgNum");
    // after is_zero, gcd(rep, modulus) = 1 on this branch
    QPoly g, u, v;
    q_egcd(a.rep(), modulus_, g, u, v);
    if (g.size() != 1) throw std::logic_error("inv: gcd not 1 after split");
    return AlgNum(shared_from_this(), version(), reduceQ(u));
}

int ExtCtx::rep_cmp(const AlgNum& a, const AlgNum& b) {
    const QPoly& ra = a.rep();
    const QPoly& rb = b.rep();
    if (ra.size() != rb.size()) return ra.size() < rb.size() ? -1 : 1;
    for (size_t i = ra.size(); i-- > 0;) {
        int c = cmp(ra[i], rb[i]);
        if (c != 0) return c;
    }
    return 0;
}

namespace {
// determinant of a matrix over Q[Z] via evaluation / interpolation
QPoly polymat_det(std::vector<std::vector<QPoly>> M, int degBound) {
    static RatField qf;
    PolyOps<RatField> PP(qf);
    int n = (int)M.size();
    int npts = degBound + 1;
    std::vector<Rat> xs, ys;
    for (int t = 0; t < npts; ++t) {
        Rat z(t);
        // evaluate matrix
        std::vector<std::vector<Rat>> A(n, std::vector<Rat>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) A[i][j] = PP.eval(M[i][j], z);
        // Gaussian elimination over Q
        Rat det(1);
        bool zero = false;
        for (int c = 0; c < n && !zero; ++c) {
            int piv = -1;
            for (int r = c; r < n; ++r)
                if (A[r][c] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                zero = true;
                break;
            }
            if (piv != c) {
                std::swap(A[piv], A[c]);
                det = -det;
            }
            det *= A[c][c];
            Rat ic = Rat(1) / A[c][c];
            for (int r = c + 1; r < n; ++r) {
                if (A[r][c] == 0) continue;
                Rat f = A[r][c] * ic;
                for (int cc = c; cc < n; ++cc) A[r][cc] -= f * A[c][cc];
            }
        }
        xs.push_back(z);
        ys.push_back(zero ? Rat(0) : det);
    }
    // Lagrange interpolation (Newton form)
    std::vector<Rat> coef(ys); // divided differences
    for (int j = 1; j < npts; ++j)
        for (int i = npts - 1; i >= j; --i) coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j]);
    QPoly res; // build sum coef[i] * prod_{k<i} (Z - x_k)
    QPoly prod{Rat(1)};
    for (int i = 0; i < npts; ++i) {
        res = PP.add(res, PP.scale(prod, coef[i]));
        prod = PP.mul(prod, QPoly{-xs[i], Rat(1)});
    }
    return q_trim(res);
}
} // namespace

AlgNum ExtCtx::adjoin_root(const std::vector<AlgNum>& p_monic) {
    PolyOps<RatField> P(QF);
    AlgField AF(shared_from_this());
    PolyOps<AlgField> PA(AF);

    APoly p = p_monic;
    PA.trim(p);
    if (PA.deg(p) < 1) throw std::invalid_argument("adjoin_root: constant polynomial");
    // monicize defensively
    p = PA.make_monic(p);

    if (PA.deg(p) == 1) return neg(p[0]);

    // squarefree requirement
    {
        APoly d = PA.derivative(p);
        APoly g = PA.gcd(p, d);
        if (PA.deg(g) != 0) throw NonSquarefreeAdjoin();
    }

    const int m = degree();
    const int dp = PA.deg(p);

    // lift p to P(Y, X): coefficient of Y^i is the rep of p[i], a poly in X
    std::vector<QPoly> Plift(dp + 1);
    for (int i = 0; i <= dp; ++i) Plift[i] = p[i].rep();

    for (long lam_i = 0;; ++lam_i) {
        // lambda sequence 0, 1, -1, 2, -2, ...
        long lam = (lam_i + 1) / 2;
        if (lam_i % 2 == 0) lam = -lam;
        if (lam_i > 200) throw std::logic_error("adjoin_root: no good lambda found");

        // C(X) with coefficients in Q[Z]:  C = P(Z - lam*X, X)  reduced mod modulus in X.
        // Represent as vector over X-degree of Q[Z]-polys.
        // (Z - lam X)^i expanded: sum_k binom(i,k) Z^{i-k} (-lam)^k X^k.
        std::vector<QPoly> C(std::max(m, 1), QPoly{}); // X-degree < m after reduction
        {
            // first build unreduced in X: degree up to dp + m - 1
            std::vector<QPoly> U(dp + m, QPoly{});
            std::vector<std::vector<Int>> binom(dp + 1, std::vector<Int>(dp + 1, 0));
            for (int i = 0; i <= dp; ++i) {
                binom[i][0] = 1;
                for (int k = 1; k <= i; ++k)
                    binom[i][k] = binom[i - 1][k - 1] + (k <= i - 1 ? binom[i - 1][k] : Int(0));
            }
            for (int i = 0; i <= dp; ++i) {
                const QPoly& ci = Plift[i]; // poly in X
                // term ci(X) * (Z - lam X)^i
                for (int k = 0; k <= i; ++k) {
                    Rat c = Rat(binom[i][k]);
                    Rat ml(1);
                    for (int t = 0; t < k; ++t) ml *= Rat(-lam);
                    c *= ml;
                    // contributes Z^{i-k} X^{k} * ci(X)
                    for (size_t xj = 0; xj < ci.size(); ++xj) {
                        if (ci[xj] == 0) continue;
                        size_t xd = xj + (size_t)k;
                        if (U[xd].size() < (size_t)(i - k + 1)) U[xd].resize(i - k + 1, Rat(0));
                        U[xd][i - k] += c * ci[xj];
                    }
                }
            }
            // reduce in X modulo modulus_ (monic over Q, coefficients rational so
            // reduction commutes with the Z-grading)
            for (int xd = dp + m - 1; xd >= m; --xd) {
                QPoly lead = U[xd];
                if (q_trim(lead).empty()) continue;
                U[xd] = QPoly{};
                for (int j = 0; j < m; ++j) {
                    // U[xd - m + j] -= lead * modulus_[j]
                    if (modulus_[j] == 0) continue;
                    QPoly t = lead;
                    for (auto& cc : t) cc *= modulus_[j];
                    size_t idx = xd - m + j;
                    if (U[idx].size() < t.size()) U[idx].resize(t.size(), Rat(0));
                    for (size_t zz = 0; zz < t.size(); ++zz) U[idx][zz] -= t[zz];
                }
            }
            for (int j = 0; j < m; ++j) C[j] = q_trim(U[j]);
        }

        // multiplication-by-C matrix on Q[Z][X]/modulus: columns are C*X^j mod modulus
        std::vector<std::vector<QPoly>> Mt(m, std::vector<QPoly>(m));
        std::vector<QPoly> cur = C;
        int zdegBound = 0;
        for (int j = 0; j < m; ++j) {
            for (int i = 0; i < m; ++i) {
                Mt[i][j] = cur[i];
                zdegBound = std::max(zdegBound, (int)cur[i].size() - 1);
            }
            if (j + 1 < m) {
                // cur := cur * X mod modulus
                std::vector<QPoly> nxt(m);
                QPoly lead = cur[m - 1];
                for (int i = m - 1; i >= 1; --i) nxt[i] = cur[i - 1];
                nxt[0] = QPoly{};
                if (!q_trim(lead).empty()) {
                    for (int i = 0; i < m; ++i) {
                        if (modulus_[i] == 0) continue;
                        QPoly t = lead;
                        for (auto& cc : t) cc *= modulus_[i];
                        if (nxt[i].size() < t.size()) nxt[i].resize(t.size(), Rat(0));
                        for (size_t zz = 0; zz < t.size(); ++zz) nxt[i][zz] -= t[zz];
                        nxt[i] = q_trim(nxt[i]);
                    }
                }
                cur = std::move(nxt);
            }
        }

        QPoly R = polymat_det(Mt, m * dp);
        R = q_trim(R);
        if ((int)R.size() - 1 != m * dp) {
            // degree drop should not happen (leading coeff of det is +-lam powers...);
            // treat as bad lambda
            continue;
        }
        // make monic
        {
            Rat lc = R.back();
            for (auto& c : R) c /= lc;
        }
        // squarefree over Q?
        {
            QPoly dR = P.derivative(R);
            QPoly g = P.gcd(R, dR);
            if (P.deg(g) != 0) continue; // bad lambda
        }

        // Work in W = Q[zeta]/R to find theta = gcd-root of (modulus_(X), P(zeta - lam X, X)).
        QPoly Rwork = R;
        std::vector<std::string> localSplits;
        auto w_reduce = [&](QPoly a) {
            PolyOps<RatField> PP(QF);
            QPoly q, r;
            PP.divrem(a, Rwork, q, r);
            return r;
        };
        // W arithmetic with D5 splits on Rwork
        struct WField {
            QPoly* mod;
            std::vector<std::string>* log;
            using Elem = QPoly;
            RatField qf;
            QPoly reduce(QPoly a) const {
                PolyOps<RatField> PP(const_cast<RatField&>(qf));
                QPoly q, r;
                PP.divrem(a, *mod, q, r);
                return r;
            }
            QPoly zero() const { return {}; }
            QPoly one() const { return {Rat(1)}; }
            QPoly from_int(long n) const { return n == 0 ? QPoly{} : QPoly{Rat(n)}; }
            QPoly add(const QPoly& a, const QPoly& b) const {
                PolyOps<RatField> PP(const_cast<RatField&>(qf));
                return PP.add(a, b);
            }
            QPoly sub(const QPoly& a, const QPoly& b) const {
                PolyOps<RatField> PP(const_cast<RatField&>(qf));
                return PP.sub(a, b);
            }
            QPoly neg(const QPoly& a) const {
                PolyOps<RatField> PP(const_cast<RatField&>(qf));
                return PP.neg(a);
            }
            QPoly mul(const QPoly& a, const QPoly& b) const {
                PolyOps<RatField> PP(const_cast<RatField&>(qf));
                return reduce(PP.mul(a, b));
            }
            bool is_zero(const QPoly& a) const {
                PolyOps<RatField> PP(const_cast<RatField&>(qf));
                QPoly r = reduce(a);
                if (r.empty()) return true;
                QPoly g = PP.gcd(r, *mod);
                if (PP.deg(g) == 0) return false;
                if (PP.deg(g) == PP.deg(*mod)) return true;
                *mod = PP.divexact(*mod, g);
                log->push_back("adjoin working split");
                throw int(0); // restart marker
            }
            QPoly div(const QPoly& a, const QPoly& b) const {
                if (is_zero(b)) throw std::domain_error("division by zero in working ctx");
                QPoly g, u, v;
                q_egcd(reduce(b), *mod, g, u, v);
                if (g.size() != 1) {
                    // split so that b becomes invertible
                    PolyOps<RatField> PP(const_cast<RatField&>(qf));
                    *mod = PP.divexact(*mod, g);
                    log->push_back("adjoin working split (inv)");
                    throw int(0);
                }
                return mul(a, u);
            }
        };

        QPoly thetaImg;
        bool ok = false;
        for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
            try {
                WField W{&Rwork, &localSplits};
                PolyOps<WField> PW(W);
                // A(X) = modulus_ lifted (rational coefficients)
                std::vector<QPoly> A(modulus_.size());
                for (size_t i = 0; i < modulus_.size(); ++i)
                    A[i] = (modulus_[i] == 0) ? QPoly{} : QPoly{modulus_[i]};
                // B(X) = P(zeta - lam X, X): coefficients in W
                std::vector<QPoly> B;
                {
                    // expand sum_i Plift_i(X) * (zeta - lam X)^i
                    std::vector<std::vector<QPoly>> pows; // (zeta - lam X)^i as X-poly over W
                    pows.push_back({QPoly{Rat(0), Rat(1)}}); // hmm replaced below
                    // (zeta)^0 = 1
                    pows[0] = {W.one()};
                    std::vector<QPoly> base = {QPoly{Rat(0), Rat(1)}, QPoly{Rat(-lam)}}; // zeta + (-lam) X
                    for (int i = 1; i <= dp; ++i) {
                        const auto& prev = pows.back();
                        std::vector<QPoly> nx(prev.size() + 1, QPoly{});
                        for (size_t a2 = 0; a2 < prev.size(); ++a2) {
                            for (size_t b2 = 0; b2 < base.size(); ++b2) {
                                QPoly t = W.mul(prev[a2], base[b2]);
                                size_t idx = a2 + b2;
                                if (nx[idx].empty())
                                    nx[idx] = t;
                                else
                                    nx[idx] = W.add(nx[idx], t);
                            }
                        }
                        pows.push_back(std::move(nx));
                    }
                    for (int i = 0; i <= dp; ++i) {
                        const QPoly& ci = Plift[i]; // poly in X with Q coefficients
                        for (size_t xj = 0; xj < ci.size(); ++xj) {
                            if (ci[xj] == 0) continue;
                            for (size_t k = 0; k < pows[i].size(); ++k) {
                                size_t idx = xj + k;
                                if (B.size() <= idx) B.resize(idx + 1, QPoly{});
                                QPoly t = pows[i][k];
                                for (auto& cc : t) cc *= ci[xj];
                                B[idx] = W.add(B[idx], t);
                            }
                        }
                    }
                }
                // monic gcd of A and B over W
                auto wtrim = [&](std::vector<QPoly>& f) {
                    WField W2{&Rwork, &localSplits};
                    while (!f.empty() && W2.is_zero(f.back())) f.pop_back();
                };
                std::vector<QPoly> r0 = A, r1 = B;
                wtrim(r0);
                wtrim(r1);
                WField W3{&Rwork, &localSplits};
                PolyOps<WField> PW3(W3);
                while (!r1.empty()) {
                    std::vector<QPoly> q, r;
                    PW3.divrem(r0, r1, q, r);
                    PW3.trim(r);
                    r0 = std::move(r1);
                    r1 = std::move(r);
                }
                if (r0.size() != 2) throw std::logic_error("adjoin_root: gcd not linear");
                // r0 = c1 X + c0 -> theta = -c0/c1
                QPoly theta = W3.neg(W3.div(r0[0], r0[1]));
                thetaImg = theta;
                ok = true;
            } catch (int) {
                continue; // restart with refined Rwork
            }
        }
        if (!ok) throw std::logic_error("adjoin_root: failed to stabilize working context");

        // commit the step
        Step st;
        st.image = thetaImg;
        st.modulus = Rwork;
        steps_.push_back(st);
        modulus_ = Rwork;
        for (auto& s : localSplits) split_log_.push_back(s);

        // eta = zeta - lam * theta(zeta)
        PolyOps<RatField> PP(QF);
        QPoly eta = QPoly{Rat(0), Rat(1)};
        QPoly lt = thetaImg;
        for (auto& c : lt) c *= Rat(lam);
        eta = PP.sub(eta, lt);
        eta = reduceQ(eta);
        return AlgNum(shared_from_this(), version(), eta);
    }
}

long ExtCtx::reduce(const AlgNum& a, const FqCtx& fq, int emb) {
    const QPoly& rep = a.rep(); // sync first (may not split; rep is reduced)
    // reduce modulus mod q and check squarefree
    std::vector<long> mq(modulus_.size());
    for (size_t i = 0; i < modulus_.size(); ++i) mq[i] = fq.from_rat(modulus_[i]);
    // squarefree over F_q: gcd(mq, mq') = const
    {
        auto fqtrim = [&](std::vector<long>& v) {
            while (!v.empty() && v.back() == 0) v.pop_back();
        };
        std::vector<long> A = mq, B(mq.size() > 1 ? mq.size() - 1 : 0);
        for (size_t i = 1; i < mq.size(); ++i) B[i - 1] = fq.mul(mq[i], fq.from_int(Int((long)i)));
        fqtrim(A);
        fqtrim(B);
        while (!B.empty()) {
            // A mod B
            long ilb = fq.inv(B.back());
            while (A.size() >= B.size() && !A.empty()) {
                long c = fq.mul(A.back(), ilb);
                size_t k = A.size() - B.size();
                for (size_t i = 0; i < B.size(); ++i) A[i + k] = fq.sub(A[i + k], fq.mul(c, B[i]));
                fqtrim(A);
                if (A.size() < B.size()) break;
            }
            std::swap(A, B);
            fqtrim(B);
        }
        if (A.size() > 1) throw BadPrime("modulus not squarefree mod p");
    }
    // roots of mq in F_q, ascending
    std::vector<long> roots;
    for (long x = 0; x < fq.q(); ++x) {
        long v = 0;
        for (size_t i = mq.size(); i-- > 0;) v = fq.add(fq.mul(v, x), mq[i]);
        if (v == 0) roots.push_back(x);
    }
    if (roots.empty()) throw NoEmbedding("modulus has no root in F_q");
    long th = roots[((emb % (int)roots.size()) + (int)roots.size()) % (int)roots.size()];
    long v = 0;
    for (size_t i = rep.size(); i-- > 0;) v = fq.add(fq.mul(v, th), fq.from_rat(rep[i]));
    return v;
}

int ExtCtx::embedding_count(const FqCtx& fq) {
    try {
        std::vector<long> mq(modulus_.size());
        for (size_t i = 0; i < modulus_.size(); ++i) mq[i] = fq.from_rat(modulus_[i]);
        int n = 0;
        for (long x = 0; x < fq.q(); ++x) {
            long v = 0;
            for (size_t i = mq.size(); i-- > 0;) v = fq.add(fq.mul(v, x), mq[i]);
            if (v == 0) ++n;
        }
        return n;
    } catch (const BadPrime&) {
        return 0;
    }
}

std::string algnum_str(const AlgNum& a) {
    if (!a.has_ctx()) return "0";
    const QPoly& r = a.rep();
    if (r.empty()) return "0";
    if (r.size() == 1) return rat_str(r[0]);
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < r.size(); ++i) {
        if (r[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << rat_str(r[i]);
        if (i >= 1) os << "*t^" << i;
    }
    return os.str();
}

} // namespace mmf
