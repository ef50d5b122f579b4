#pragma once

#include "mmf/algnum.hpp"
#include "mmf/plane.hpp"

#include <vector>

namespace mmf {

struct PuiseuxTerm {
    Rat e;    // exponent > 0, denominators divide the cycle ramification
    AlgNum c; // nonzero coefficient
};

// One fractional power series root of f at a base point p: y(x) = sum c_k x^{e_k}
// (relative to p, i.e. the actual root is p + y(x)).
struct PSeries {
    std::vector<PuiseuxTerm> terms; // increasing exponents
    bool exact = false;             // true: the series terminates (no terms beyond the last)
    int mult = 1;                   // multiplicity as a root of f
    int count = 1;                  // >1 only for truncated records still sharing a prefix at the cutoff

    long ram() const; // lcm of exponent denominators
};

struct ExpansionPoint {
    AlgNum base; // root p of f(0, y)
    int m_p = 0; // multiplicity of p in f(0,y) = sum of series mult*count
    std::vector<PSeries> series;
};

struct Expansion {
    CtxPtr ctx;
    Rat height; // truncation height used
    std::vector<ExpansionPoint> points;
};

// Newton-Puiseux expansion of all roots y(x) -> p of f at every base point
// (roots of f(0,y)), truncated at the given height. Coefficients live in one
// shared dynamic extension.
Expansion expand(const PlanePoly& f, const Rat& height);

// Smallest h such that all pairs of distinct series at each base point differ
// at some exponent < h; single series: largest support exponent (>= 1 floor).
Rat separation_height(const Expansion& ex);

// Expand to separation height + 1 + extra (iterative deepening); guarantees
// every record has count = 1 (fully separated).
Expansion expand_separated(const PlanePoly& f, int extra = 0, const Rat& atLeast = Rat(0));

// ord_x( s1(x) - s2(x) ) of the associated truncated series; huge() if equal
// on the stored range. Both series must share a context.
Rat series_contact(const PSeries& a, const PSeries& b, const CtxPtr& ctx, bool* equalOnRange = nullptr);

// mu_M-conjugacy of term lists (used for cycles and for quotient-tree merging).
bool prefixes_conjugate(const std::vector<PuiseuxTerm>& A, const std::vector<PuiseuxTerm>& B, const CtxPtr& ctx);

// Group a point's series into mu_M-orbits (cycles). Returns indices grouped.
std::vector<std::vector<int>> group_cycles(const ExpansionPoint& pt, const CtxPtr& ctx);

} // namespace mmf
