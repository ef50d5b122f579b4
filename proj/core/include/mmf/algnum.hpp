#pragma once

#include "mmf/fq.hpp"
#include "mmf/rational.hpp"
#include "mmf/upoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace mmf {

struct NonSquarefreeAdjoin : std::runtime_error {
    NonSquarefreeAdjoin() : std::runtime_error("NonSquarefreeAdjoin") {}
};

class ExtCtx;
using CtxPtr = std::shared_ptr<ExtCtx>;

struct RatField {
    using Elem = Rat;
    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long n) const { return Rat(n); }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat div(const Rat& a, const Rat& b) const { return a / b; }
    Rat neg(const Rat& a) const { return -a; }
    bool is_zero(const Rat& a) const { return a == 0; }
};

using QPoly = std::vector<Rat>; // dense over Q, lowest degree first

// One element of the current dynamic extension Q(theta): a residue polynomial
// in theta, tied to a context version. Reps upgrade lazily across context
// rewrites (primitive-element flattening and D5 splits).
class AlgNum {
  public:
    AlgNum() = default;
    AlgNum(CtxPtr c, int version, QPoly rep) : ctx_(std::move(c)), ver_(version), rep_(std::move(rep)) {}

    const CtxPtr& ctx() const { return ctx_; }
    bool has_ctx() const { return (bool)ctx_; }
    // Residue polynomial at the current context version.
    const QPoly& rep() const;
    bool is_rational() const;
    Rat rational_value() const; // requires degree-0 rep

    friend class ExtCtx;

  private:
    CtxPtr ctx_;
    mutable int ver_ = 0;
    mutable QPoly rep_;
    void sync() const;
};

// Dynamic extension of Q with a monic squarefree (not necessarily irreducible)
// modulus; zero-tests split the modulus D5-style, always keeping the branch on
// which the tested element is invertible.
class ExtCtx : public std::enable_shared_from_this<ExtCtx> {
  public:
    static CtxPtr make(); // trivial context (modulus X, generator = 0)

    int version() const { return (int)steps_.size(); }
    const QPoly& modulus() const { return modulus_; }
    int degree() const { return (int)modulus_.size() - 1; }
    const std::vector<std::string>& split_log() const { return split_log_; }

    AlgNum from_rat(const Rat& r);
    AlgNum from_int(long n) { return from_rat(Rat(n)); }
    AlgNum generator(); // theta of the current version

    AlgNum add(const AlgNum& a, const AlgNum& b);
    AlgNum sub(const AlgNum& a, const AlgNum& b);
    AlgNum mul(const AlgNum& a, const AlgNum& b);
    AlgNum neg(const AlgNum& a);
    AlgNum inv(const AlgNum& a);
    AlgNum div(const AlgNum& a, const AlgNum& b) { return mul(a, inv(b)); }
    AlgNum pow(const AlgNum& a, long e);

    bool is_zero(const AlgNum& a); // may split the modulus
    bool equal(AlgNum a, AlgNum b) { return is_zero(sub(a, b)); }

    // Deterministic total order on synced representative vectors (used for
    // canonical orderings in output; not a field order).
    int rep_cmp(const AlgNum& a, const AlgNum& b);

    // Adjoin a root of the monic polynomial p over this context. p must be
    // squarefree (checked; throws NonSquarefreeAdjoin). Existing AlgNums stay
    // valid via lazy upgrades. Linear p returns its root without extending.
    AlgNum adjoin_root(const std::vector<AlgNum>& p_monic);

    // Reduce to F_q: maps theta to the emb-th root (sorted) of the modulus in
    // F_q. Throws BadPrime / NoEmbedding.
    long reduce(const AlgNum& a, const FqCtx& fq, int emb);
    // Number of roots of the modulus in F_q (0 => no embedding).
    int embedding_count(const FqCtx& fq);

  private:
    ExtCtx() : modulus_{Rat(0), Rat(1)} {} // X
    struct Step {
        QPoly image;   // image of previous generator in the new generator
        QPoly modulus; // modulus after this step
    };
    QPoly modulus_;
    std::vector<Step> steps_;
    std::vector<std::string> split_log_;

    friend class AlgNum;
    void split_keep_coprime(const QPoly& g, const char* why); // modulus := modulus / g
    QPoly reduceQ(QPoly r) const;
};

// Field object over a shared context, for PolyOps.
struct AlgField {
    using Elem = AlgNum;
    CtxPtr ctx;
    explicit AlgField(CtxPtr c) : ctx(std::move(c)) {}
    AlgNum zero() const { return ctx->from_rat(Rat(0)); }
    AlgNum one() const { return ctx->from_rat(Rat(1)); }
    AlgNum from_int(long n) const { return ctx->from_int(n); }
    AlgNum add(const AlgNum& a, const AlgNum& b) const { return ctx->add(a, b); }
    AlgNum sub(const AlgNum& a, const AlgNum& b) const { return ctx->sub(a, b); }
    AlgNum mul(const AlgNum& a, const AlgNum& b) const { return ctx->mul(a, b); }
    AlgNum div(const AlgNum& a, const AlgNum& b) const { return ctx->div(a, b); }
    AlgNum neg(const AlgNum& a) const { return ctx->neg(a); }
    bool is_zero(const AlgNum& a) const { return ctx->is_zero(a); }
};

using APoly = std::vector<AlgNum>;

std::string algnum_str(const AlgNum& a); // deterministic display form

} // namespace mmf
