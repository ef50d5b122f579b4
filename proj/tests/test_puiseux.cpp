#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "exact_jets.hpp"
#include "mmf/json_io.hpp"

using namespace mmf;
using namespace mmftest;

TEST_CASE("newton polygon") {
    auto segs = newton_polygon(PlanePoly::parse("y^2 - x^3"));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].first == Rat(3, 2));
    CHECK(segs[0].second == 2);

    segs = newton_polygon(PlanePoly::parse("(y-x)(y+x)(y-x^2)"));
    REQUIRE(segs.size() == 2);
    CHECK(segs[0].first == Rat(2));
    CHECK(segs[0].second == 1);
    CHECK(segs[1].first == Rat(1));
    CHECK(segs[1].second == 2);

    segs = newton_polygon(PlanePoly::parse("y - x"));
    REQUIRE(segs.size() == 1);
    CHECK(segs[0].first == Rat(1));
    CHECK(segs[0].second == 1);
}

TEST_CASE("expand: cusp") {
    PlanePoly f = PlanePoly::parse("y^2 - x^3");
    auto ex = expand_separated(f);
    REQUIRE(ex.points.size() == 1);
    auto& pt = ex.points[0];
    CHECK(pt.m_p == 2);
    REQUIRE(pt.series.size() == 2);
    auto cycles = group_cycles(pt, ex.ctx);
    REQUIRE(cycles.size() == 1); // one cycle, M = 2, y = w^3
    CHECK(pt.series[cycles[0][0]].ram() == 2);
    CHECK(pt.series[cycles[0][0]].terms.size() == 1);
    CHECK(pt.series[cycles[0][0]].terms[0].e == Rat(3, 2));
}

TEST_CASE("expand: (y^2-x^3)(y^2-x^5)") {
    PlanePoly f = PlanePoly::parse("(y^2-x^3)(y^2-x^5)");
    auto ex = expand_separated(f);
    auto& pt = ex.points[0];
    CHECK(pt.m_p == 4);
    auto cycles = group_cycles(pt, ex.ctx);
    REQUIRE(cycles.size() == 2);
    std::vector<Rat> exps;
    for (auto& cyc : cycles) exps.push_back(pt.series[cyc[0]].terms[0].e);
    std::sort(exps.begin(), exps.end());
    CHECK(exps[0] == Rat(3, 2));
    CHECK(exps[1] == Rat(5, 2));
    CHECK(separation_height(ex) == Rat(5, 2));
}

TEST_CASE("expand: y^2 - 2x^2 adjoins sqrt(2)") {
    PlanePoly f = PlanePoly::parse("y^2 - 2x^2");
    auto ex = expand_separated(f);
    auto& pt = ex.points[0];
    REQUIRE(pt.series.size() == 2);
    AlgField K(ex.ctx);
    for (auto& s : pt.series) {
        REQUIRE(s.terms.size() == 1);
        CHECK(ex.ctx->equal(ex.ctx->mul(s.terms[0].c, s.terms[0].c), ex.ctx->from_int(2)));
        // substitution check: f(x, c x) vanishes identically since c^2 = 2
        long trunc = 8;
        TSeries X = TSeries::mono(trunc, 1, K.one(), K);
        TSeries Y = TSeries::mono(trunc, 1, s.terms[0].c, K);
        TSeries F = eval_plane(f, X, Y, K);
        CHECK(F.ord(K) == trunc);
    }
}

TEST_CASE("root property across the corpus") {
    for (const char* s : {"y^2-x^3", "(y^2-x^3)(y^2-x^5)", "(y-x)(y+x)(y-x^2)", "y^2-2x^2",
                          "y^4 - 2xy^2 - 4x^2y + x^2 - x^3"}) {
        PlanePoly f = PlanePoly::parse(s);
        auto ex = expand_separated(f);
        AlgField K(ex.ctx);
        for (auto& pt : ex.points) {
            for (auto& sr : pt.series) {
                long M = sr.ram();
                long trunc = to_long(ceil_rat(ex.height * Rat(M))) + 1;
                TSeries X = TSeries::mono(trunc, M, K.one(), K);
                TSeries Y = TSeries::mono(trunc, 0, pt.base, K);
                for (auto& tm : sr.terms)
                    Y = Y.add(TSeries::mono(trunc, to_long(tm.e * Rat(M)), tm.c, K), K);
                TSeries F = eval_plane(f, X, Y, K);
                // ord_x f(x, truncated root) >= truncation height
                Rat ordx = Rat(F.ord(K)) / Rat(M);
                CHECK(ordx >= ex.height);
            }
        }
    }
}

TEST_CASE("separation heights") {
    CHECK(separation_height(expand_separated(PlanePoly::parse("y^2-x^3"))) == Rat(3, 2));
    CHECK(separation_height(expand_separated(PlanePoly::parse("(y^2-x^3)(y^2-x^5)"))) == Rat(5, 2));
    CHECK(separation_height(expand_separated(PlanePoly::parse("y-x"))) == Rat(1));
}

TEST_CASE("count and gcd invariants") {
    for (const char* s :
         {"y^2-x^3", "(y^2-x^3)(y^2-x^5)", "(y-x)(y+x)(y-x^2)", "y^6-x^6", "(y^2-x^3)(y^2-x^3)(y-x)",
          "y^4-2xy^2-4x^2y+x^2-x^3", "(y^2-x)(y^3-x^4)"}) {
        PlanePoly f = PlanePoly::parse(s);
        auto ex = expand_separated(f);
        long m = f.m();
        long total = 0;
        for (auto& pt : ex.points)
            for (auto& sr : pt.series) {
                total += sr.mult * sr.count;
                // gcd condition
                if (!sr.terms.empty()) {
                    long M = sr.ram();
                    Int g(M);
                    for (auto& tm : sr.terms) g = int_gcd(g, rnum(tm.e * Rat(M)));
                    CHECK(g == 1);
                }
            }
        CHECK(total == m);
    }
}

TEST_CASE("determinism: identical trees on repeated runs") {
    PlanePoly f = PlanePoly::parse("(y^2-x^3)(y^2-x^5)");
    auto d1 = trees_json(build_trees(f)).dump();
    auto d2 = trees_json(build_trees(f)).dump();
    CHECK(d1 == d2);
}

TEST_CASE("multiple base points") {
    // f = y(y-1)(y-x-1): roots of f(0,y) are 0, 1 (double)
    PlanePoly f = PlanePoly::parse("y(y-1)(y-x-1)");
    auto ex = expand_separated(f);
    CHECK(ex.points.size() == 2);
    long mtot = 0;
    for (auto& pt : ex.points) mtot += pt.m_p;
    CHECK(mtot == 3);
}
