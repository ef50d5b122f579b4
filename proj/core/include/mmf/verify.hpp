#pragma once

#include "mmf/compose.hpp"
#include "mmf/jets.hpp"

namespace mmf {

// all exact data of the tree reduces faithfully mod q: context embeds, the
// modulus stays squarefree, label/kappa data reduce, and distinct labels stay
// distinct
bool good_prime(const ContactTree& t, long q, int emb = 0);

struct ZetaCompareRow {
    long n, q, alpha;
    Int lhs, rhs; // jet count vs q^{2n} * mu_q(zeta coefficient)
    bool ok;
};
struct ZetaCompareReport {
    std::string what;
    std::vector<ZetaCompareRow> rows;
    bool all_ok = true;
};

// Lemma-level check: brute-force jet counts against the contact-stratum
// coefficient, fiberwise (skips q when not a good prime; notes it)
ZetaCompareReport compare_zeta_coeff(const PlanePoly& f, const ContactTree& t, long n, long q,
                                     unsigned long long budget = 1000000000ULL, int emb = 0);

struct FiberCompareReport {
    std::string what;
    struct Row {
        long q;
        std::vector<long> alpha;
        Rat lhs, rhs;
        bool ok;
    };
    std::vector<Row> rows;
    bool all_ok = true;
    std::vector<long> skipped; // primes skipped (not good for one of the sides)
};

// mu_q(A) == mu_q(B) over all fibers alpha in F_q^* for each given q
FiberCompareReport compare_classes(const std::string& what, const MotClass& A, const MotClass& B,
                                   const std::vector<long>& qs, int emb = 0);

// compose_milnor(f, g1, g2) vs guibert_milnor(tree of f(g1(u), g2(v)))
FiberCompareReport check_substitution(const PlanePoly& f, const GermSpec& g1, const GermSpec& g2,
                                      const std::vector<long>& qs, int emb = 0);

} // namespace mmf
