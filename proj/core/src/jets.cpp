#include "mmf/jets.hpp"

#include "mmf/fq.hpp"

#include <cmath>
#include <future>
#include <thread>

namespace mmf {

namespace {

// dense jet arrays: index 0..n holds t^0..t^n coefficients
using Jet = std::vector<long>;

struct Evaluator {
    const FqCtx& fq;
    long n;
    // polynomial organized by y-degree: rows[j] = list of (i, coeff)
    std::vector<std::vector<std::pair<long, long>>> rows;
    long maxI = 0;

    Evaluator(const FqCtx& f, const std::map<std::pair<long, long>, Rat>& F, long n_) : fq(f), n(n_) {
        long maxJ = 0;
        for (auto& [e, c] : F) maxJ = std::max(maxJ, e.second);
        rows.resize(maxJ + 1);
        for (auto& [e, c] : F) {
            long cc = fq.from_rat(c);
            if (cc == 0) continue;
            rows[e.second].push_back({e.first, cc});
            maxI = std::max(maxI, e.first);
        }
    }

    // A_j(x-jet) truncated at n; then F = sum_j A_j * y^j
    void xRows(const std::vector<Jet>& xpow, std::vector<Jet>& A) const {
        A.assign(rows.size(), Jet(n + 1, 0));
        for (size_t j = 0; j < rows.size(); ++j)
            for (auto& [i, c] : rows[j]) {
                const Jet& xp = xpow[i];
                for (long k = 0; k <= n; ++k)
                    if (xp[k]) A[j][k] = fq.add(A[j][k], fq.mul(c, xp[k]));
            }
    }

    // ord/ac of sum_j A_j * ypow[j]; returns alpha>0 if ord == n, else 0
    long ordAc(const std::vector<Jet>& A, const std::vector<Jet>& ypow) const {
        for (long k = 0; k <= n; ++k) {
            long ck = 0;
            for (size_t j = 0; j < A.size(); ++j) {
                const Jet& yj = ypow[j];
                long acc = 0;
                for (long a = 0; a <= k; ++a)
                    if (A[j][a] && yj[k - a]) acc = fq.add(acc, fq.mul(A[j][a], yj[k - a]));
                ck = fq.add(ck, acc);
            }
            if (k < n) {
                if (ck != 0) return 0;
            } else {
                return ck;
            }
        }
        return 0;
    }
};

void jet_powers(const FqCtx& fq, const Jet& base, long maxPow, long n, std::vector<Jet>& out) {
    out.assign(maxPow + 1, Jet(n + 1, 0));
    out[0][0] = 1;
    for (long p = 1; p <= maxPow; ++p) {
        const Jet& prev = out[p - 1];
        Jet& cur = out[p];
        std::fill(cur.begin(), cur.end(), 0);
        for (long a = 0; a <= n; ++a) {
            if (!prev[a]) continue;
            for (long b = 1; a + b <= n; ++b) {
                if (!base[b]) continue;
                cur[a + b] = fq.add(cur[a + b], fq.mul(prev[a], base[b]));
            }
        }
    }
}

} // namespace

std::vector<long> count_jets(const JetQuery& query) {
    auto fqp = fq_context(query.q);
    const FqCtx& fq = *fqp;
    long n = query.n, q = query.q;
    if (n < 1) throw std::invalid_argument("count_jets: n >= 1 required");
    {
        long double work = powl((long double)q, (long double)(query.dim * n));
        if (work > (long double)query.budget) throw BudgetExceeded();
    }
    Evaluator ev(fq, query.F, n);
    std::optional<Evaluator> evG;
    if (query.G) evG.emplace(fq, *query.G, n);

    // constant term must vanish for any jet through the origin to score
    {
        long c00 = 0;
        auto it = query.F.find({0, 0});
        if (it != query.F.end()) c00 = fq.from_rat(it->second);
        if (c00 != 0) return std::vector<long>(q, 0);
    }

    long maxJ = (long)ev.rows.size() - 1;
    long total1 = 1;
    for (long i = 0; i < n; ++i) total1 *= q; // q^n outer jets

    auto worker = [&](long lo, long hi) {
        std::vector<long> counts(q, 0);
        std::vector<Jet> xpow, ypow, A, AG;
        Jet xj(n + 1, 0), yj(n + 1, 0);
        for (long code = lo; code < hi; ++code) {
            long c = code;
            for (long i = 1; i <= n; ++i) {
                xj[i] = c % q;
                c /= q;
            }
            jet_powers(fq, xj, std::max<long>(ev.maxI, evG ? evG->maxI : 0), n, xpow);
            ev.xRows(xpow, A);
            if (evG) evG->xRows(xpow, AG);
            if (query.dim == 1) {
                std::vector<Jet> onepow(1, Jet(n + 1, 0));
                onepow[0][0] = 1;
                // univariate: rows must have maxJ == 0
                long alpha = ev.ordAc(A, onepow);
                if (alpha) {
                    bool ok = true;
                    if (evG) {
                        // not meaningful in dim 1 with same variable; skip
                    }
                    if (ok) counts[alpha]++;
                }
                continue;
            }
            long total2 = total1;
            for (long code2 = 0; code2 < total2; ++code2) {
                long c2 = code2;
                for (long i = 1; i <= n; ++i) {
                    yj[i] = c2 % q;
                    c2 /= q;
                }
                jet_powers(fq, yj, maxJ, n, ypow);
                long alpha = ev.ordAc(A, ypow);
                if (!alpha) continue;
                if (evG) {
                    // secondary condition: ord_t G = n1 (ac value unconstrained)
                    bool ok = false;
                    std::vector<Jet> ypow2;
                    jet_powers(fq, yj, (long)evG->rows.size() - 1, n, ypow2);
                    for (long k = 0; k <= n; ++k) {
                        long ck = 0;
                        for (size_t j = 0; j < AG.size(); ++j) {
                            const Jet& yjj = ypow2[j];
                            long acc = 0;
                            for (long a = 0; a <= k; ++a)
                                if (AG[j][a] && yjj[k - a]) acc = fq.add(acc, fq.mul(AG[j][a], yjj[k - a]));
                            ck = fq.add(ck, acc);
                        }
                        if (ck != 0) {
                            ok = (k == query.n1);
                            break;
                        }
                        if (k == n) ok = false;
                    }
                    if (!ok) continue;
                }
                counts[alpha]++;
            }
        }
        return counts;
    };

    int nthreads = query.threads > 0 ? query.threads : (int)std::thread::hardware_concurrency();
    if (nthreads < 1) nthreads = 1;
    if (query.dim == 1) nthreads = 1;
    nthreads = (int)std::min<long>(nthreads, total1);
    std::vector<std::future<std::vector<long>>> futs;
    long chunk = (total1 + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
        long lo = t * chunk, hi = std::min(total1, (t + 1) * chunk);
        if (lo >= hi) break;
        futs.push_back(std::async(std::launch::async, worker, lo, hi));
    }
    std::vector<long> counts(q, 0);
    for (auto& f : futs) {
        auto c = f.get();
        for (long a = 0; a < q; ++a) counts[a] += c[a];
    }
    return counts;
}

} // namespace mmf
