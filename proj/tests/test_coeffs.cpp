#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mmf/algnum.hpp"

#include <random>

using namespace mmf;

TEST_CASE("adjoin_root defining relations") {
    auto ctx = ExtCtx::make();
    AlgNum th = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)}); // X^2 - 2
    CHECK(ctx->equal(ctx->mul(th, th), ctx->from_int(2)));

    // linear case: no extension created
    int ver = ctx->version();
    AlgNum five = ctx->adjoin_root({ctx->from_int(-5), ctx->from_int(1)}); // X - 5
    CHECK(five.is_rational());
    CHECK(five.rational_value() == 5);
    CHECK(ctx->version() == ver);

    AlgNum i = ctx->adjoin_root({ctx->from_int(1), ctx->from_int(0), ctx->from_int(1)}); // X^2 + 1
    AlgNum prod = ctx->mul(ctx->add(ctx->from_int(1), i), ctx->sub(ctx->from_int(1), i));
    CHECK(ctx->equal(prod, ctx->from_int(2)));
    // earlier values stay valid across the flattening
    CHECK(ctx->equal(ctx->mul(th, th), ctx->from_int(2)));
}

TEST_CASE("non-squarefree adjoin rejected") {
    auto ctx = ExtCtx::make();
    // (X-1)^2 = X^2 - 2X + 1
    CHECK_THROWS_AS(ctx->adjoin_root({ctx->from_int(1), ctx->from_int(-2), ctx->from_int(1)}),
                    NonSquarefreeAdjoin);
}

TEST_CASE("is_zero decisions") {
    auto ctx = ExtCtx::make();
    AlgNum th = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)});
    CHECK(ctx->is_zero(ctx->sub(ctx->mul(th, th), ctx->from_int(2))));
    // theta = +-sqrt(2) on both branches; neither equals -1
    CHECK(!ctx->is_zero(ctx->add(th, ctx->from_int(1))));
    CHECK(ctx->is_zero(ctx->from_rat(Rat(0))));
}

TEST_CASE("is_zero splits keep certified equalities") {
    auto ctx = ExtCtx::make();
    // two independent adjunctions of sqrt(2): the product context splits on the
    // first comparison, and prior relations survive
    AlgNum a = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)});
    AlgNum b = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)});
    bool eq = ctx->is_zero(ctx->sub(a, b)); // forces a branch choice
    (void)eq;
    CHECK(ctx->equal(ctx->mul(a, a), ctx->from_int(2)));
    CHECK(ctx->equal(ctx->mul(b, b), ctx->from_int(2)));
    // on any surviving branch b = +-a
    bool same = ctx->is_zero(ctx->sub(a, b));
    bool opp = ctx->is_zero(ctx->add(a, b));
    CHECK(same != opp);
}

TEST_CASE("reduce_mod_p examples") {
    auto ctx = ExtCtx::make();
    auto fq7 = fq_context(7);
    // 3/2 mod 7 = 5
    CHECK(ctx->reduce(ctx->from_rat(Rat(3, 2)), *fq7, 0) == 5);
    // sqrt(2) mod 7: the roots of X^2 - 2 are 3 and 4, fixed by the embedding index
    AlgNum th = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)});
    long r0 = ctx->reduce(th, *fq7, 0);
    long r1 = ctx->reduce(th, *fq7, 1);
    CHECK(((r0 == 3 && r1 == 4) || (r0 == 4 && r1 == 3)));
    CHECK(ctx->reduce(th, *fq7, 0) == r0); // deterministic
    // 1/7 mod 7: BadPrime
    CHECK_THROWS_AS(ctx->reduce(ctx->from_rat(Rat(1, 7)), *fq7, 0), BadPrime);
    // no embedding: sqrt(2) in F_5 (2 is a non-residue)
    auto fq5 = fq_context(5);
    CHECK_THROWS_AS(ctx->reduce(th, *fq5, 0), NoEmbedding);
}

TEST_CASE("field axioms on random elements") {
    auto ctx = ExtCtx::make();
    AlgNum th = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)});
    AlgNum i = ctx->adjoin_root({ctx->from_int(1), ctx->from_int(0), ctx->from_int(1)});
    std::mt19937 rng(20240811);
    std::uniform_int_distribution<int> d(-4, 4);
    auto rnd = [&]() {
        AlgNum r = ctx->from_int(d(rng));
        r = ctx->add(r, ctx->mul(ctx->from_int(d(rng)), th));
        r = ctx->add(r, ctx->mul(ctx->from_int(d(rng)), i));
        return r;
    };
    for (int it = 0; it < 40; ++it) {
        AlgNum a = rnd(), b = rnd(), c = rnd();
        CHECK(ctx->equal(ctx->add(a, b), ctx->add(b, a)));
        CHECK(ctx->equal(ctx->mul(ctx->mul(a, b), c), ctx->mul(a, ctx->mul(b, c))));
        CHECK(ctx->equal(ctx->mul(a, ctx->add(b, c)), ctx->add(ctx->mul(a, b), ctx->mul(a, c))));
        if (!ctx->is_zero(a)) {
            CHECK(ctx->equal(ctx->mul(a, ctx->inv(a)), ctx->from_int(1)));
        }
    }
}

TEST_CASE("reduce_mod_p is a ring homomorphism") {
    auto ctx = ExtCtx::make();
    AlgNum th = ctx->adjoin_root({ctx->from_int(-2), ctx->from_int(0), ctx->from_int(1)});
    auto fq = fq_context(7);
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> d(-5, 5);
    for (int it = 0; it < 50; ++it) {
        AlgNum a = ctx->add(ctx->from_int(d(rng)), ctx->mul(ctx->from_int(d(rng)), th));
        AlgNum b = ctx->add(ctx->from_int(d(rng)), ctx->mul(ctx->from_int(d(rng)), th));
        long ra = ctx->reduce(a, *fq, 0), rb = ctx->reduce(b, *fq, 0);
        CHECK(ctx->reduce(ctx->add(a, b), *fq, 0) == fq->add(ra, rb));
        CHECK(ctx->reduce(ctx->mul(a, b), *fq, 0) == fq->mul(ra, rb));
    }
}

TEST_CASE("prime power fields") {
    auto fq9 = fq_context(9);
    CHECK(fq9->p() == 3);
    CHECK(fq9->k() == 2);
    // multiplicative order of the group is 8: x^8 = 1 for all x != 0
    for (long x = 1; x < 9; ++x) CHECK(fq9->pow(x, 8) == 1);
    // additive characteristic 3
    for (long x = 0; x < 9; ++x) CHECK(fq9->add(fq9->add(x, x), x) == 0);
}
