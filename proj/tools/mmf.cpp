#include <CLI11.hpp>

#include "mmf/json_io.hpp"

#include <fstream>
#include <iostream>

using namespace mmf;

namespace {

int run_tree(const std::string& fstr, const std::string& jsonPath, const std::string& dotPath, int extra) {
    PlanePoly f = PlanePoly::parse(fstr);
    f.check_invariants();
    auto ts = build_trees(f, extra);
    OJson out = trees_json(ts);
    if (!jsonPath.empty()) {
        std::ofstream os(jsonPath);
        os << out.dump(2) << "\n";
    } else {
        std::cout << out.dump(2) << "\n";
    }
    if (!dotPath.empty()) {
        std::ofstream os(dotPath);
        for (auto& t : ts) os << tree_dot(t);
    }
    return 0;
}

int run_milnor(const std::string& fstr, const std::string& jsonPath, bool zeta, int extra) {
    PlanePoly f = PlanePoly::parse(fstr);
    f.check_invariants();
    auto ts = build_trees(f, extra);
    OJson all = OJson::array();
    for (auto& t : ts) {
        MotClass S = guibert_milnor(t);
        OJson j;
        j["base-point"] = algnum_json(t.base);
        j["class"] = motclass_json(S);
        if (zeta) {
            auto z = monodromy_zeta(S);
            j["monodromy-zeta"] = zeta_factors_json(z);
            j["monodromy-zeta-str"] = z.str();
            j["euler-characteristic-fiber"] = euler_char_fiber1(S);
        }
        all.push_back(j);
    }
    if (!jsonPath.empty()) {
        std::ofstream os(jsonPath);
        os << all.dump(2) << "\n";
    } else {
        std::cout << all.dump(2) << "\n";
    }
    return 0;
}

int run_compose(const std::string& fstr, const std::string& g1s, const std::string& g2s,
                const std::string& jsonPath, bool checkSub, const std::vector<long>& qs, int emb, int extra) {
    PlanePoly f = PlanePoly::parse(fstr);
    f.check_invariants();
    GermSpec g1 = GermSpec::parse(g1s), g2 = GermSpec::parse(g2s);
    MotClass S = compose_milnor(f, g1, g2, extra);
    OJson j;
    j["class"] = motclass_json(S);
    int rc = 0;
    if (checkSub) {
        auto rep = check_substitution(f, g1, g2, qs, emb);
        j["substitution-check"] = fiber_report_json(rep);
        if (!rep.all_ok) rc = 1;
        std::cerr << "substitution check: " << (rep.all_ok ? "pass" : "FAIL") << " ("
                  << rep.rows.size() << " fibers";
        if (!rep.skipped.empty()) {
            std::cerr << "; skipped primes:";
            for (long q : rep.skipped) std::cerr << " " << q;
        }
        std::cerr << ")\n";
    }
    if (!jsonPath.empty()) {
        std::ofstream os(jsonPath);
        os << j.dump(2) << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return rc;
}

int run_verify(const std::string& fstr, long nlo, long nhi, const std::vector<long>& qs,
               unsigned long long budget, int emb, const std::string& jsonPath, const std::string& csvPath,
               int extra) {
    PlanePoly f = PlanePoly::parse(fstr);
    f.check_invariants();
    auto ts = build_trees(f, extra, Rat(nhi + 1));
    const ContactTree& t = tree_at_origin(ts);
    bool allOk = true;
    OJson reports = OJson::array();
    std::string csv;
    for (long q : qs) {
        if (!good_prime(t, q, emb)) {
            std::cerr << "q=" << q << ": not a good prime, skipped\n";
            continue;
        }
        for (long n = nlo; n <= nhi; ++n) {
            auto rep = compare_zeta_coeff(f, t, n, q, budget, emb);
            allOk = allOk && rep.all_ok;
            reports.push_back(zeta_report_json(rep));
            if (!csvPath.empty()) csv += zeta_report_csv(rep);
            std::cerr << "n=" << n << " q=" << q << ": " << (rep.all_ok ? "pass" : "FAIL") << "\n";
        }
    }
    if (!jsonPath.empty()) {
        std::ofstream os(jsonPath);
        os << reports.dump(2) << "\n";
    }
    if (!csvPath.empty()) {
        std::ofstream os(csvPath);
        os << csv;
    }
    std::cout << (allOk ? "verify: all fibers match" : "verify: MISMATCH") << "\n";
    return allOk ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact contact-tree engine for motivic Milnor fibers of plane curves"};
    app.require_subcommand(1);

    std::string fstr, g1s, g2s, jsonPath, dotPath, csvPath;
    std::vector<long> qs{3, 5, 7};
    long nlo = 1, nhi = 4;
    unsigned long long budget = 1000000000ULL;
    int emb = 0;
    int extra = 0;
    bool checkSub = false, withZeta = false;

    auto addCommon = [&](CLI::App* c) {
        c->add_option("--json", jsonPath, "write JSON output to a file");
        c->add_option("--seed-embedding", emb, "embedding choice for algebraic numbers mod p");
        c->add_option("--height-extra", extra, "expand this much beyond the separation height");
    };

    auto* ctree = app.add_subcommand("tree", "contact tree per base point (JSON, optional DOT)");
    ctree->add_option("f", fstr, "plane curve f(x,y)")->required();
    ctree->add_option("--dot", dotPath, "write DOT output to a file");
    addCommon(ctree);

    auto* cmil = app.add_subcommand("milnor", "motivic Milnor fiber classes per base point");
    cmil->add_option("f", fstr, "plane curve f(x,y)")->required();
    cmil->add_flag("--zeta", withZeta, "also compute the monodromy zeta function");
    addCommon(cmil);

    auto* ccomp = app.add_subcommand("compose", "motivic Milnor fiber of f(g1(u), g2(v))");
    ccomp->add_option("f", fstr, "plane curve f(x,y)")->required();
    ccomp->add_option("--g1", g1s, "first germ (in u)")->required();
    ccomp->add_option("--g2", g2s, "second germ (in v)")->required();
    ccomp->add_flag("--check-substitution", checkSub, "verify against the direct computation");
    ccomp->add_option("--q", qs, "prime battery for the check");
    addCommon(ccomp);

    auto* cver = app.add_subcommand("verify", "jet-count verification of zeta coefficients");
    cver->add_option("f", fstr, "plane curve f(x,y)")->required();
    cver->add_option("--n", nhi, "verify coefficients up to this order")->required();
    cver->add_option("--n-lo", nlo, "start order (default 1)");
    cver->add_option("--q", qs, "prime battery");
    cver->add_option("--budget", budget, "enumeration budget (elementary evaluations)");
    cver->add_option("--csv", csvPath, "write the CSV report to a file");
    addCommon(cver);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*ctree) return run_tree(fstr, jsonPath, dotPath, extra);
        if (*cmil) return run_milnor(fstr, jsonPath, withZeta, extra);
        if (*ccomp) return run_compose(fstr, g1s, g2s, jsonPath, checkSub, qs, emb, extra);
        if (*cver) return run_verify(fstr, nlo, nhi, qs, budget, emb, jsonPath, csvPath, extra);
    } catch (const ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const PreconditionError& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
