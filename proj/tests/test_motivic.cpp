#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exact_jets.hpp"
#include "mmf/json_io.hpp"

using namespace mmf;
using namespace mmftest;

namespace {
MotClass single(const CtxPtr& ctx, Atom a) {
    MotClass C;
    C.ctx = ctx;
    C.target = a.target;
    C.add_term(LFrac::one(), std::move(a));
    return C;
}
} // namespace

TEST_CASE("mu_q basics") {
    auto ctx = ExtCtx::make();
    MotClass pw2 = single(ctx, atom_pow_map(ctx, 2, 1));
    CHECK(mu_q(pw2, 7, 2) == Rat(2)); // 3^2 = 4^2 = 2 in F_7
    CHECK(mu_q(pw2, 7, 3) == Rat(0)); // 3 is a non-residue mod 7
    MotClass id;
    id.ctx = ctx;
    id.target = {Dom::A1, Dom::Gm};
    id.add_term(LFrac::one(), atom_identity_class(ctx));
    for (long a0 = 0; a0 < 5; ++a0)
        for (long b0 = 1; b0 < 5; ++b0) CHECK(mu_q(id, 5, {a0, b0}) == Rat(1));
}

TEST_CASE("psi on the cusp Q") {
    auto ts = build_trees(PlanePoly::parse("y^2-x^3"));
    auto& t = tree_at_origin(ts);
    auto Q = q_poly(t, contact_of_vertex(t, 0));
    MotClass psi = psi_q_operational(Q, identity_motclass(t.ctx));
    // off part: -(complement of c^2 - u^3); component part: +(orbit x G_m)
    REQUIRE(psi.terms.size() == 2);
    Rat c1(0);
    for (auto& [c, a] : psi.terms) c1 += c.eval(Rat(1));
    CHECK(c1 == Rat(0)); // -1 + 1
    // counts: -( #{(c,u): c^2 - u^3 = alpha} ) + (q-1)
    for (long q : {5L, 7L}) {
        for (long a = 1; a < q; ++a) {
            long direct = 0;
            for (long c = 0; c < q; ++c)
                for (long u = 1; u < q; ++u)
                    if (((c * c - u * u * u) % q + q) % q == (a % q)) ++direct;
            CHECK(mu_q(psi, q, a) == Rat(q - 1 - direct));
        }
    }
}

TEST_CASE("psi with empty zero restriction") {
    // a class supported over G_m x G_m (away from {c = 0}): the zero-component
    // term restricts to the empty set and only the off part survives
    auto ctx = ExtCtx::make();
    Atom a;
    a.coords = {Dom::Gm, Dom::Gm};
    a.weights = {{1, 0}, {0, 1}};
    a.target = {Dom::A1, Dom::Gm};
    a.map_ = {mpoly_var(ctx, 2, 0, 3), mpoly_var(ctx, 2, 1)}; // (t^3, s)
    MotClass C;
    C.ctx = ctx;
    C.target = {Dom::A1, Dom::Gm};
    C.add_term(LFrac::one(), a);
    // Q = c^2 with the single component {c = 0}, E = 2 (edge-type)
    QuasiPoly Q;
    Q.M = 1;
    Q.g = 1;
    Q.r = Rat(1);
    Q.nu = 2;
    Q.wc = 1;
    Q.wu = 1;
    Q.kappa = ctx->from_int(1);
    Q.Q[{2, 0}] = ctx->from_int(1);
    QuasiPoly::Component comp;
    comp.czero = true;
    comp.E = 2;
    comp.uExponentX = Rat(1);
    Q.comps.push_back(comp);
    MotClass psi = psi_q_operational(Q, C);
    // restriction {t^3 = 0} over G_m is empty: psi = -[C, map t^6]
    REQUIRE(psi.terms.size() == 1);
    for (long q : {5L, 7L}) {
        for (long alpha = 1; alpha < q; ++alpha) {
            long off = 0;
            for (long tv = 1; tv < q; ++tv) {
                long h = 1;
                for (int i = 0; i < 6; ++i) h = (h * tv) % q;
                if (h == alpha) ++off;
            }
            CHECK(mu_q(psi, q, alpha) == Rat(-(q - 1) * off));
        }
    }
}

TEST_CASE("guibert examples") {
    // y - x: no rupture vertices -> [pow_1]
    auto ts = build_trees(PlanePoly::parse("y - x"));
    MotClass S = guibert_milnor(tree_at_origin(ts));
    REQUIRE(S.terms.size() == 1);
    CHECK(S.terms[0].first.eval(Rat(1)) == Rat(1));
    for (long a = 1; a < 7; ++a) CHECK(mu_q(S, 7, a) == Rat(1));

    // y^2 - x^2: [pow_2] - Psi_{(c-u)(c+u)}(Id)
    auto ts2 = build_trees(PlanePoly::parse("y^2-x^2"));
    MotClass S2 = guibert_milnor(tree_at_origin(ts2));
    for (long q : {5L, 7L})
        for (long a = 1; a < q; ++a) {
            long n2 = 0;
            for (long x = 1; x < q; ++x)
                if ((x * x) % q == a) ++n2;
            long compl_ = 0;
            for (long c = 0; c < q; ++c)
                for (long u = 1; u < q; ++u)
                    if (((c * c - u * u) % q + q) % q == a) ++compl_;
            // [pow_2] + [complement] - 2 [orbit]
            CHECK(mu_q(S2, q, a) == Rat(n2 + compl_ - 2 * (q - 1)));
        }

    // cusp: 3 atoms after folding
    auto ts3 = build_trees(PlanePoly::parse("y^2-x^3"));
    MotClass S3 = guibert_milnor(tree_at_origin(ts3));
    CHECK(S3.terms.size() == 3);
}

TEST_CASE("zeta coefficient examples") {
    auto ts = build_trees(PlanePoly::parse("y^2-x^3"), 0, Rat(8));
    auto& t = tree_at_origin(ts);
    // n = 0: empty; n = 1: no contact with nu*l = 1
    CHECK(zeta_contact_coeff(t, 0).terms.empty());
    MotClass z1 = zeta_contact_coeff(t, 1);
    for (long a = 1; a < 5; ++a) CHECK(mu_q(z1, 5, a) == Rat(0));
    // n = 2: fiber count q^{2n} mu = N_2(alpha) q^3 (jet-verified)
    MotClass z2 = zeta_contact_coeff(t, 2);
    Rat q4 = Rat(81); // 3^4
    CHECK(mu_q(z2, 3, 1) * q4 == Rat(2 * 27));
    CHECK(mu_q(z2, 3, 2) * q4 == Rat(0));
}

TEST_CASE("power_twist") {
    auto ctx = ExtCtx::make();
    MotClass pw = single(ctx, atom_pow_map(ctx, 3, 1));
    MotClass tw = power_twist(pw, 2);
    // [pow_3]^(2) = [pow_6]
    MotClass pw6 = single(ctx, atom_pow_map(ctx, 6, 1));
    CHECK(tw.equal_normal_form(pw6));
    CHECK(power_twist(pw, 1).equal_normal_form(pw));
    // fiber composition: mu(power_twist(C,2), alpha) = sum over beta^2 = alpha of mu(C, beta)
    for (long q : {5L, 7L})
        for (long a = 1; a < q; ++a) {
            Rat lhs = mu_q(tw, q, a);
            Rat rhs(0);
            for (long b = 1; b < q; ++b)
                if ((b * b) % q == a) rhs += mu_q(pw, q, b);
            CHECK(lhs == rhs);
        }
}

TEST_CASE("equivariance of produced atoms") {
    for (const char* s : {"y^2-x^3", "(y-x)(y+x)(y-x^2)", "(y^2-x^3)(y^2-x^5)"}) {
        auto ts = build_trees(PlanePoly::parse(s));
        auto& t = tree_at_origin(ts);
        MotClass S = guibert_milnor(t);
        for (auto& [c, a] : S.terms) CHECK(equivariance_check(a, t.ctx));
    }
}

TEST_CASE("monodromy zeta of pow maps") {
    auto ctx = ExtCtx::make();
    for (long N : {1L, 2L, 5L}) {
        MotClass pw = single(ctx, atom_pow_map(ctx, N, 1));
        auto z = monodromy_zeta(pw);
        ZetaFactors expect;
        expect.e[N] = -1; // Lambda_k = N [N|k]  =>  (1 - t^N)^{-1}
        CHECK(z == expect);
    }
}

TEST_CASE("measure compatibility of normal-form equality") {
    // whenever the engine asserts equality of normal forms, mu_q agrees;
    // sample it on power_twist identities over the battery
    auto ctx = ExtCtx::make();
    MotClass a = power_twist(single(ctx, atom_pow_map(ctx, 2, 1)), 3);
    MotClass b = power_twist(single(ctx, atom_pow_map(ctx, 3, 1)), 2);
    REQUIRE(a.equal_normal_form(b));
    for (long q : {3L, 5L, 7L, 11L, 13L})
        for (long al = 1; al < q; ++al) CHECK(mu_q(a, q, al) == mu_q(b, q, al));
}
