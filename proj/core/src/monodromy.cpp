#include "mmf/monodromy.hpp"

#include "mmf/upoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace mmf {

namespace {

// #distinct-root defect of F: deg gcd(F, F')
int gcd_degree(const APoly& F, AlgField& K) {
    PolyOps<AlgField> P(K);
    APoly d = P.derivative(F);
    APoly g = P.gcd(F, d);
    return std::max(0, P.deg(g));
}

// torsion order of Z^n / rowspan; 0 if rank < n (positive-dimensional fiber)
long lattice_index(std::vector<std::vector<long>> M, int n) {
    int rows = (int)M.size();
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = rank; r < rows; ++r)
            if (M[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(M[rank], M[piv]);
        for (int r = rank + 1; r < rows; ++r) {
            while (M[r][col] != 0) {
                long q = M[rank][col] / M[r][col];
                for (int c = 0; c < n; ++c) M[rank][c] -= q * M[r][c];
                std::swap(M[rank], M[r]);
            }
        }
        ++rank;
    }
    if (rank < n) return 0;
    long det = 1;
    for (int i = 0; i < n; ++i) det *= M[i][i];
    return det < 0 ? -det : det;
}

// j-th principal subresultant coefficient of (F, dF/dc) in u, where
// F = sum_k f[k](u) c^k has c-degree D; computed by interpolating the
// subresultant determinant over rational u-points (no field extensions).
APoly subresultant_coeff_u(const std::vector<APoly>& f, long D, long j, AlgField& K) {
    PolyOps<AlgField> P(K);
    long maxu = 0;
    for (auto& v : f) maxu = std::max<long>(maxu, (long)v.size());
    long m = D, n = D - 1; // deg F, deg F'
    int N = (int)(m + n - 2 * j);
    if (N <= 0) return {K.one()};
    int npts = (int)(N * maxu + 1);
    std::vector<AlgNum> xs, ys;
    for (int tpt = 0; tpt < npts; ++tpt) {
        AlgNum u0 = K.from_int(tpt);
        std::vector<AlgNum> fc(m + 1, K.zero());
        for (long k = 0; k <= m; ++k) {
            AlgNum v = K.zero();
            for (size_t jj = f[k].size(); jj-- > 0;) v = K.add(K.mul(v, u0), f[k][jj]);
            fc[k] = v;
        }
        std::vector<AlgNum> fpc(m, K.zero());
        for (long k = 1; k <= m; ++k) fpc[k - 1] = K.mul(fc[k], K.from_int(k));
        // rows: c^{n-j-1-i} F (i = 0..n-j-1) then c^{m-j-1-i} F' (i = 0..m-j-1);
        // columns: degrees m+n-j-1 down to j
        long topdeg = m + n - j - 1;
        std::vector<std::vector<AlgNum>> S(N, std::vector<AlgNum>(N, K.zero()));
        int row = 0;
        for (long i = 0; i < n - j; ++i, ++row) {
            long shift = n - j - 1 - i;
            for (long k = 0; k <= m; ++k) {
                long degterm = k + shift;
                long col = topdeg - degterm;
                if (col >= 0 && col < N) S[row][col] = fc[k];
            }
        }
        for (long i = 0; i < m - j; ++i, ++row) {
            long shift = m - j - 1 - i;
            for (long k = 0; k <= m - 1; ++k) {
                long degterm = k + shift;
                long col = topdeg - degterm;
                if (col >= 0 && col < N) S[row][col] = fpc[k];
            }
        }
        AlgNum det = K.one();
        bool zero = false;
        for (int col = 0; col < N && !zero; ++col) {
            int piv = -1;
            for (int r = col; r < N; ++r)
                if (!K.is_zero(S[r][col])) {
                    piv = r;
                    break;
                }
            if (piv < 0) {
                zero = true;
                break;
            }
            if (piv != col) {
                std::swap(S[piv], S[col]);
                det = K.neg(det);
            }
            det = K.mul(det, S[col][col]);
            AlgNum inv = K.ctx->inv(S[col][col]);
            for (int r = col + 1; r < N; ++r) {
                if (K.is_zero(S[r][col])) continue;
                AlgNum fmul = K.mul(S[r][col], inv);
                for (int c2 = col; c2 < N; ++c2) S[r][c2] = K.sub(S[r][c2], K.mul(fmul, S[col][c2]));
            }
        }
        xs.push_back(u0);
        ys.push_back(zero ? K.zero() : det);
    }
    std::vector<AlgNum> coef = ys;
    for (int jj = 1; jj < npts; ++jj)
        for (int i = npts - 1; i >= jj; --i)
            coef[i] = K.div(K.sub(coef[i], coef[i - 1]), K.sub(xs[i], xs[i - jj]));
    APoly R{};
    APoly prod{K.one()};
    for (int i = 0; i < npts; ++i) {
        R = P.add(R, P.scale(prod, coef[i]));
        prod = P.mul(prod, APoly{K.neg(xs[i]), K.one()});
    }
    P.trim(R);
    return R;
}

struct AtomLambda {
    std::vector<std::pair<long, long>> terms; // (modulus, count): contributes count when modulus | k
    long at(long k) const {
        long s = 0;
        for (auto& [m, c] : terms)
            if (k % m == 0) s += c;
        return s;
    }
};

long map_degree(const Atom& a, const MPoly& m) {
    long deg = 0;
    bool first = true;
    for (auto& [e, c] : m.t) {
        long d = 0;
        for (int i = 0; i < (int)e.size(); ++i) d += (long)e[i] * a.weights[i][0];
        if (first) {
            deg = d;
            first = false;
        } else if (d != deg)
            throw UnsupportedAtomShape("structural map not homogeneous");
    }
    return deg;
}

AtomLambda atom_lambda(const Atom& a, const CtxPtr& ctx) {
    AlgField K(ctx);
    if (a.map_.size() != 1 || a.target.size() != 1 || a.target[0] != Dom::Gm)
        throw UnsupportedAtomShape("monodromy needs G_m-target atoms");
    if (a.weights.empty() || a.weights[0].empty()) throw UnsupportedAtomShape("missing weights");
    long d = map_degree(a, a.map_[0]);
    if (d <= 0) throw UnsupportedAtomShape("nonpositive map degree");

    AtomLambda L;

    if (!a.neq.empty()) {
        // complement shape: (c in A1, u in Gm), fiber {map = 1} is a curve
        if (a.n() != 2 || a.coords[0] != Dom::A1 || a.coords[1] != Dom::Gm || !a.eq.empty() ||
            a.neq.size() != 1)
            throw UnsupportedAtomShape("unrecognized constrained shape");
        long wc = a.weights[0][0], wu = a.weights[1][0];
        long mc = (wc == 0) ? 1 : d / std::gcd(d, wc);
        long mu_ = (wu == 0) ? 1 : d / std::gcd(d, wu);
        long both = std::lcm(mc, mu_);
        long D = 0;
        for (auto& [e, cc] : a.map_[0].t) D = std::max<long>(D, e[0]);
        if (D <= 0) throw UnsupportedAtomShape("complement atom without c-degree");
        // F = map - 1 as c-polynomial with u-polynomial coefficients
        std::vector<APoly> f(D + 1);
        for (auto& [e, cc] : a.map_[0].t) {
            auto& v = f[e[0]];
            if ((long)v.size() <= e[1]) v.resize(e[1] + 1, K.zero());
            v[e[1]] = cc;
        }
        if (f[0].empty()) f[0].resize(1, K.zero());
        f[0][0] = K.sub(f[0][0], K.one());

        long chiFull = 0;
        {
            // chi_c of the degree-D cover of G_m(u) equals minus the total
            // ramification: sum over u0 != 0 and j >= 1 of
            // [gcd-degree of (F, F') at u0 >= j], counted through the common
            // zero loci of the principal subresultant coefficients.
            PolyOps<AlgField> P(K);
            long drops = 0;
            APoly G = subresultant_coeff_u(f, D, 0, K);
            {
                bool iszero = true;
                for (auto& c : G)
                    if (!K.is_zero(c)) iszero = false;
                if (iszero) throw UnsupportedAtomShape("degenerate fiber discriminant");
            }
            for (long j = 1; j <= D; ++j) {
                // strip u-powers (u = 0 is outside G_m)
                size_t z = 0;
                while (z < G.size() && K.is_zero(G[z])) ++z;
                APoly Gs(G.begin() + z, G.end());
                P.trim(Gs);
                if (P.deg(Gs) <= 0) break;
                // number of distinct roots = deg of the squarefree part
                APoly g = P.gcd(Gs, P.derivative(Gs));
                drops += P.deg(Gs) - P.deg(g);
                if (j < D) {
                    APoly sj = subresultant_coeff_u(f, D, j, K);
                    G = P.gcd(G, sj);
                }
            }
            chiFull = -drops;
        }
        long slice = 0; // #points of {c = 0, map = 1}: u-exponent of the c^0 term
        for (auto& [e, cc] : a.map_[0].t)
            if (e[0] == 0) slice = e[1];
        // Lambda_k = [both|k] chiFull + ([mu|k] - [both|k]) slice
        L.terms.push_back({mu_, slice});
        L.terms.push_back({both, chiFull - slice});
        return L;
    }

    // torus shape: fiber inside a torus (free A1 coordinates contribute
    // chi-multiplier 1 and no condition)
    {
        std::vector<int> keep;
        for (int i = 0; i < a.n(); ++i) {
            bool used = a.map_[0].uses(i);
            for (auto& p : a.eq) used = used || p.uses(i);
            if (!used && a.coords[i] == Dom::A1) continue;
            if (!used && a.coords[i] == Dom::Gm) {
                // free G_m factor: chi_c = 0 identically
                return L;
            }
            keep.push_back(i);
        }
        if (!a.map_[0].is_monomial()) throw UnsupportedAtomShape("torus atom with non-monomial map");
        int n = (int)keep.size();
        auto reindex = [&](const std::vector<int>& e) {
            std::vector<long> v(n, 0);
            for (int j = 0; j < n; ++j) v[j] = e[keep[j]];
            return v;
        };
        std::vector<std::vector<long>> rows;
        for (auto& p : a.eq) {
            if (p.t.size() != 2) throw UnsupportedAtomShape("non-binomial equation in torus atom");
            auto it = p.t.begin();
            auto e1 = reindex(it->first);
            ++it;
            auto e2 = reindex(it->first);
            std::vector<long> rr(n);
            for (int j = 0; j < n; ++j) rr[j] = e1[j] - e2[j];
            rows.push_back(rr);
        }
        rows.push_back(reindex(a.map_[0].t.begin()->first));
        long pts = lattice_index(rows, n);
        if (pts == 0) return L; // positive-dimensional: chi_c = 0
        long mod = 1;
        for (int j = 0; j < n; ++j) {
            long w = a.weights[keep[j]][0];
            long m = (w == 0) ? 1 : d / std::gcd(d, w);
            mod = std::lcm(mod, m);
        }
        L.terms.push_back({mod, pts});
        return L;
    }
}

} // namespace

std::string ZetaFactors::str() const {
    if (e.empty()) return "1";
    std::ostringstream os;
    bool first = true;
    for (auto& [j, s] : e) {
        if (!first) os << " * ";
        first = false;
        os << "(1-t^" << j << ")^" << s;
    }
    return os.str();
}

long lefschetz_number(const MotClass& C, long k) {
    long total = 0;
    for (auto& [coef, a] : C.terms) {
        Rat c1 = coef.eval(Rat(1));
        AtomLambda L = atom_lambda(a, C.ctx);
        total += to_long(c1 * Rat(L.at(k)));
    }
    return total;
}

ZetaFactors monodromy_zeta(const MotClass& C) {
    long K = 1;
    std::vector<std::pair<Rat, AtomLambda>> parts;
    for (auto& [coef, a] : C.terms) {
        AtomLambda L = atom_lambda(a, C.ctx);
        for (auto& [m, c] : L.terms) K = std::lcm(K, m);
        parts.push_back({coef.eval(Rat(1)), L});
    }
    auto lam = [&](long k) {
        Rat s(0);
        for (auto& [c, L] : parts) s += c * Rat(L.at(k));
        return to_long(s);
    };
    std::vector<long> divs;
    for (long j = 1; j <= K; ++j)
        if (K % j == 0) divs.push_back(j);
    auto mob = [](long n) {
        long r = 1;
        for (long p = 2; p * p <= n; ++p) {
            if (n % p == 0) {
                n /= p;
                if (n % p == 0) return 0L;
                r = -r;
            }
        }
        if (n > 1) r = -r;
        return r;
    };
    ZetaFactors Z;
    for (long j : divs) {
        long acc = 0;
        for (long i : divs)
            if (j % i == 0) acc += mob(j / i) * lam(i);
        if (acc % j != 0) throw std::logic_error("non-integral zeta exponent");
        long sj = acc / j;
        if (sj != 0) Z.e[j] = -sj;
    }
    return Z;
}

long euler_char_fiber1(const MotClass& C) {
    long K = 1;
    for (auto& [coef, a] : C.terms) {
        AtomLambda L = atom_lambda(a, C.ctx);
        for (auto& [m, c] : L.terms) K = std::lcm(K, m);
    }
    return lefschetz_number(C, K);
}

ZetaFactors acampo_zeta(const std::vector<std::pair<long, long>>& divisors) {
    ZetaFactors Z;
    for (auto& [m, chi] : divisors) {
        if (chi == 0) continue;
        Z.e[m] += -chi;
        if (Z.e[m] == 0) Z.e.erase(m);
    }
    return Z;
}

} // namespace mmf
