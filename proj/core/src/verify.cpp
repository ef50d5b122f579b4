#include "mmf/verify.hpp"

#include <sstream>

namespace mmf {

bool good_prime(const ContactTree& t, long q, int emb) {
    try {
        auto fq = fq_context(q);
        if (t.ctx->embedding_count(*fq) < 1) return false;
        // labels, their pairwise differences, and kappas reduce and stay honest
        auto red = [&](const AlgNum& a) { return t.ctx->reduce(a, *fq, emb); };
        if (red(t.cstar) == 0) return false;
        for (auto& v : t.V) {
            if (red(v.kappa) == 0) return false;
            for (size_t i = 0; i < v.roots.size(); ++i)
                for (size_t j = i + 1; j < v.roots.size(); ++j) {
                    AlgNum d = t.ctx->sub(v.roots[i].b, v.roots[j].b);
                    if (red(d) == 0) return false;
                }
            for (auto& rg : v.roots) {
                if (!t.ctx->is_zero(rg.b) && red(rg.b) == 0) return false;
            }
        }
        for (auto& e : t.E)
            if (red(e.kappa) == 0) return false;
        return true;
    } catch (const BadPrime&) {
        return false;
    } catch (const NoEmbedding&) {
        return false;
    }
}

ZetaCompareReport compare_zeta_coeff(const PlanePoly& f, const ContactTree& t, long n, long q,
                                     unsigned long long budget, int emb) {
    ZetaCompareReport rep;
    {
        std::ostringstream os;
        os << "zeta coefficient: f = " << f.str() << ", n = " << n << ", q = " << q;
        rep.what = os.str();
    }
    MotClass Z = zeta_contact_coeff(t, n);
    JetQuery jq;
    jq.dim = 2;
    jq.F = f.c;
    jq.n = n;
    jq.q = q;
    jq.budget = budget;
    auto counts = count_jets(jq);
    Rat q2n(1);
    for (long i = 0; i < 2 * n; ++i) q2n *= q;
    for (long a = 1; a < q; ++a) {
        Rat rhs = mu_q(Z, q, a, emb) * q2n;
        if (!is_int(rhs)) {
            rep.rows.push_back({n, q, a, Int(counts[a]), Int(0), false});
            rep.all_ok = false;
            continue;
        }
        ZetaCompareRow row{n, q, a, Int(counts[a]), rnum(rhs), rnum(rhs) == counts[a]};
        rep.all_ok = rep.all_ok && row.ok;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

FiberCompareReport compare_classes(const std::string& what, const MotClass& A, const MotClass& B,
                                   const std::vector<long>& qs, int emb) {
    FiberCompareReport rep;
    rep.what = what;
    for (long q : qs) {
        std::vector<FiberCompareReport::Row> rows;
        bool usable = true;
        try {
            for (long a = 1; a < q; ++a) {
                Rat lhs = mu_q(A, q, a, emb);
                Rat rhs = mu_q(B, q, a, emb);
                rows.push_back({q, {a}, lhs, rhs, lhs == rhs});
            }
        } catch (const BadPrime&) {
            usable = false;
        } catch (const NoEmbedding&) {
            usable = false;
        }
        if (!usable) {
            rep.skipped.push_back(q);
            continue;
        }
        for (auto& r : rows) {
            rep.all_ok = rep.all_ok && r.ok;
            rep.rows.push_back(std::move(r));
        }
    }
    return rep;
}

FiberCompareReport check_substitution(const PlanePoly& f, const GermSpec& g1, const GermSpec& g2,
                                      const std::vector<long>& qs, int emb) {
    MotClass L = compose_milnor(f, g1, g2);
    PlanePoly F = PlanePoly::compose_univariate(f, g1.poly(), g2.poly());
    auto treesL = build_trees(f);
    auto treesR = build_trees(F);
    const ContactTree& tR = tree_at_origin(treesR);
    MotClass R = guibert_milnor(tR);
    std::ostringstream os;
    os << "substitution consistency: f = " << f.str() << ", F = " << F.str();
    std::vector<long> usable;
    for (long q : qs) {
        bool ok = good_prime(tR, q, emb);
        for (auto& t : treesL)
            if (t.ctx->is_zero(t.base) && !good_prime(t, q, emb)) ok = false;
        try {
            auto fq = fq_context(q);
            if (L.ctx->embedding_count(*fq) < 1) ok = false;
        } catch (...) {
            ok = false;
        }
        if (ok) usable.push_back(q);
    }
    auto rep = compare_classes(os.str(), L, R, usable, emb);
    for (long q : qs)
        if (std::find(usable.begin(), usable.end(), q) == usable.end()) rep.skipped.push_back(q);
    return rep;
}

} // namespace mmf
