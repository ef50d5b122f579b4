#include "mmf/json_io.hpp"

#include <sstream>

namespace mmf {

OJson rat_json(const Rat& r) {
    OJson j;
    j["num"] = rnum(r).get_str();
    j["den"] = rden(r).get_str();
    return j;
}

OJson algnum_json(const AlgNum& a) {
    OJson coeffs = OJson::array();
    if (a.has_ctx())
        for (auto& c : a.rep()) coeffs.push_back(rat_str(c));
    return coeffs;
}

OJson label_json(const ContactTree& t, const std::vector<RootGroup>& roots) {
    OJson j;
    OJson mod = OJson::array();
    for (auto& c : t.ctx->modulus()) mod.push_back(rat_str(c));
    j["modulus-coeffs"] = mod;
    OJson pc = OJson::array();
    APoly P = label_poly(t, roots);
    for (auto& c : P) pc.push_back(algnum_json(c));
    j["poly-coeffs"] = pc;
    return j;
}

OJson tree_json(const ContactTree& t) {
    OJson j;
    j["base-point"] = algnum_json(t.base);
    j["m_p"] = t.m_p;
    OJson vs = OJson::array();
    for (size_t i = 0; i < t.V.size(); ++i) {
        const TreeVertex& v = t.V[i];
        OJson jv;
        jv["height"] = rat_json(v.h);
        jv["label"] = label_json(t, v.roots);
        jv["degree"] = v.degree;
        jv["parent"] = v.parent;
        jv["rupture"] = v.rupture;
        jv["augmented"] =
            std::find(t.augmented.begin(), t.augmented.end(), (int)i) != t.augmented.end();
        jv["nu"] = v.nu;
        jv["M"] = v.Mv;
        jv["orbit-size"] = v.orbitSize;
        vs.push_back(jv);
    }
    j["vertices"] = vs;
    OJson es = OJson::array();
    for (auto& e : t.E) {
        OJson je;
        OJson iv = OJson::array();
        iv.push_back(rat_json(e.h0));
        if (e.tail)
            iv.push_back(nullptr);
        else
            iv.push_back(rat_json(e.h1));
        je["interval"] = iv;
        je["degree"] = e.degree;
        je["from"] = e.from;
        je["to"] = e.tail ? OJson(nullptr) : OJson(e.to);
        es.push_back(je);
    }
    j["edges"] = es;
    OJson rup = OJson::array();
    for (int v : t.rupture) rup.push_back(v);
    j["rupture"] = rup;
    OJson aug = OJson::array();
    for (int v : t.augmented) aug.push_back(v);
    j["augmented"] = aug;
    return j;
}

OJson trees_json(const std::vector<ContactTree>& ts) {
    OJson j = OJson::array();
    for (auto& t : ts) j.push_back(tree_json(t));
    return j;
}

std::string tree_dot(const ContactTree& t) {
    std::ostringstream os;
    os << "digraph contacttree {\n  rankdir=BT;\n  root [shape=point];\n";
    for (size_t i = 0; i < t.V.size(); ++i) {
        const TreeVertex& v = t.V[i];
        bool aug = std::find(t.augmented.begin(), t.augmented.end(), (int)i) != t.augmented.end();
        os << "  v" << i << " [label=\"h=" << rat_str(v.h) << "\\ndeg=" << v.degree << "\\nnu=" << v.nu
           << "\"";
        if (v.rupture)
            os << ", shape=doublecircle";
        else if (aug)
            os << ", shape=circle, style=bold";
        else
            os << ", shape=circle";
        os << "];\n";
    }
    int tails = 0;
    for (auto& e : t.E) {
        std::string from = e.from < 0 ? "root" : ("v" + std::to_string(e.from));
        std::string to;
        if (e.to >= 0)
            to = "v" + std::to_string(e.to);
        else {
            to = "t" + std::to_string(tails++);
            os << "  " << to << " [shape=none, label=\"...\"];\n";
        }
        os << "  " << from << " -> " << to << " [label=\"deg " << e.degree << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

static OJson mpoly_json(const MPoly& p) {
    OJson terms = OJson::array();
    for (auto& [e, c] : p.t) {
        OJson t;
        OJson ev = OJson::array();
        for (int x : e) ev.push_back(x);
        t["exps"] = ev;
        t["coeff"] = algnum_json(c);
        terms.push_back(t);
    }
    return terms;
}

OJson motclass_json(const MotClass& C) {
    OJson j;
    j["base"] = C.base == Atom::Base::X0 ? "X0" : "pt";
    OJson tg = OJson::array();
    for (auto d : C.target) tg.push_back(d == Dom::A1 ? "A1" : "Gm");
    j["target"] = tg;
    OJson terms = OJson::array();
    for (auto& [c, a] : C.terms) {
        OJson t;
        t["coeff"] = c.str();
        OJson coords = OJson::array();
        for (auto d : a.coords) coords.push_back(d == Dom::A1 ? "A1" : "Gm");
        t["coords"] = coords;
        OJson ws = OJson::array();
        for (auto& w : a.weights) {
            OJson wv = OJson::array();
            for (long x : w) wv.push_back(x);
            ws.push_back(wv);
        }
        t["weights"] = ws;
        OJson eqs = OJson::array();
        for (auto& p : a.eq) eqs.push_back(mpoly_json(p));
        t["eq"] = eqs;
        OJson neqs = OJson::array();
        for (auto& p : a.neq) neqs.push_back(mpoly_json(p));
        t["neq"] = neqs;
        OJson maps = OJson::array();
        for (auto& p : a.map_) maps.push_back(mpoly_json(p));
        t["map"] = maps;
        terms.push_back(t);
    }
    j["atoms"] = terms;
    return j;
}

OJson zeta_report_json(const ZetaCompareReport& r) {
    OJson j;
    j["what"] = r.what;
    j["pass"] = r.all_ok;
    OJson rows = OJson::array();
    for (auto& row : r.rows) {
        OJson jr;
        jr["n"] = row.n;
        jr["q"] = row.q;
        jr["alpha"] = row.alpha;
        jr["lhs"] = row.lhs.get_str();
        jr["rhs"] = row.rhs.get_str();
        jr["status"] = row.ok ? "ok" : "MISMATCH";
        rows.push_back(jr);
    }
    j["rows"] = rows;
    return j;
}

std::string zeta_report_csv(const ZetaCompareReport& r) {
    std::ostringstream os;
    os << "n,q,alpha,lhs,rhs,status\n";
    for (auto& row : r.rows)
        os << row.n << "," << row.q << "," << row.alpha << "," << row.lhs.get_str() << ","
           << row.rhs.get_str() << "," << (row.ok ? "ok" : "MISMATCH") << "\n";
    return os.str();
}

OJson fiber_report_json(const FiberCompareReport& r) {
    OJson j;
    j["what"] = r.what;
    j["pass"] = r.all_ok;
    OJson sk = OJson::array();
    for (long q : r.skipped) sk.push_back(q);
    j["skipped-primes"] = sk;
    OJson rows = OJson::array();
    for (auto& row : r.rows) {
        OJson jr;
        jr["q"] = row.q;
        OJson av = OJson::array();
        for (long a : row.alpha) av.push_back(a);
        jr["alpha"] = av;
        jr["lhs"] = rat_str(row.lhs);
        jr["rhs"] = rat_str(row.rhs);
        jr["status"] = row.ok ? "ok" : "MISMATCH";
        rows.push_back(jr);
    }
    j["rows"] = rows;
    return j;
}

OJson zeta_factors_json(const ZetaFactors& z) {
    OJson j = OJson::array();
    for (auto& [m, e] : z.e) {
        OJson f;
        f["order"] = m;
        f["exponent"] = e;
        j.push_back(f);
    }
    return j;
}

} // namespace mmf
