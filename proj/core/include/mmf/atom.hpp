#pragma once

#include "mmf/algnum.hpp"
#include "mmf/laurent.hpp"

#include <map>
#include <string>
#include <vector>

namespace mmf {

enum class Dom { A1, Gm };

// sparse multivariate polynomial over the context
struct MPoly {
    int nvars = 0;
    std::map<std::vector<int>, AlgNum> t;

    static MPoly zero(int n) { return {n, {}}; }
    static MPoly constant(int n, const AlgNum& c);

    bool is_zero() const { return t.empty(); }
    bool is_constant() const;
    bool is_monomial() const { return t.size() == 1; }
    bool uses(int i) const;
    MPoly add(const MPoly& o, const CtxPtr& ctx) const;
    MPoly sub(const MPoly& o, const CtxPtr& ctx) const;
    MPoly mul(const MPoly& o, const CtxPtr& ctx) const;
    MPoly scale(const AlgNum& c, const CtxPtr& ctx) const;
    MPoly pow(long e, const CtxPtr& ctx) const;
    // substitute variable images (each an MPoly in m variables)
    MPoly subst(const std::vector<MPoly>& images, int m, const CtxPtr& ctx) const;
    void trim(const CtxPtr& ctx); // drop zero coefficients

    long eval_fq(const FqCtx& fq, int emb, const std::vector<long>& pt, const CtxPtr& ctx) const;
    std::string str(const std::vector<std::string>& names) const;
};

MPoly mpoly_var(const CtxPtr& ctx, int n, int i, int pow = 1);

struct Atom {
    enum class Base { Pt, X0 };
    Base base = Base::Pt;
    std::vector<Dom> coords;
    // weights[coord][axis] under the grading torus (axes >= 1); excluded from
    // the normal-form key, used by equivariance checks and the monodromy zeta
    std::vector<std::vector<long>> weights;
    std::vector<MPoly> eq;   // = 0
    std::vector<MPoly> neq;  // != 0
    std::vector<MPoly> map_; // structural map components
    std::vector<Dom> target;

    int n() const { return (int)coords.size(); }
    int axes() const { return coords.empty() ? 1 : (weights.empty() ? 1 : (int)weights[0].size()); }
    std::string key(const CtxPtr& ctx) const; // canonical serialization (after normalization)
};

// formal Z[L^{+-1}]-combination (with (L-1)-denominators for zeta tails)
struct MotClass {
    CtxPtr ctx;
    Atom::Base base = Atom::Base::Pt;
    std::vector<Dom> target;
    std::vector<std::pair<LFrac, Atom>> terms;

    void add_term(const LFrac& c, Atom a);
    void normalize(); // per-atom canonical form + dedup + drop empties/zeros
    MotClass operator+(const MotClass& o) const;
    MotClass operator-() const;
    MotClass operator-(const MotClass& o) const;
    bool equal_normal_form(const MotClass& o) const;
};

// canonical simplification of a single atom; returns false if provably empty
bool atom_normalize(Atom& a, const CtxPtr& ctx);

// exact point count over F_q: sum over atoms of coeff(q) * #points with
// structural map = alpha (alpha: one value per target component; Gm components
// must be nonzero). Symbolic bases count 1.
Rat mu_q(const MotClass& C, long q, const std::vector<long>& alpha, int emb = 0);
// convenience for G_m targets
Rat mu_q(const MotClass& C, long q, long alpha, int emb = 0);

// homogeneity of all structural map components w.r.t. the per-axis weights
bool equivariance_check(const Atom& a, const CtxPtr& ctx);

// named constructors (G_m target unless stated)
Atom atom_pow_map(const CtxPtr& ctx, long N, long w = 1, const AlgNum* kappa = nullptr);
Atom atom_identity_class(const CtxPtr& ctx); // A1 x Gm -> A1 x Gm

std::vector<long> good_alpha_range(long q); // 1..q-1

} // namespace mmf
