#include "mmf/plane.hpp"

#include <cctype>
#include <sstream>

namespace mmf {

namespace {

struct Lexer {
    std::string s;
    size_t i = 0;
    void skip() {
        while (i < s.size() && std::isspace((unsigned char)s[i])) ++i;
    }
    bool eof() {
        skip();
        return i >= s.size();
    }
    char peek() {
        skip();
        return i < s.size() ? s[i] : '\0';
    }
    char get() {
        skip();
        return s[i++];
    }
};

using Mono = std::map<std::vector<long>, Rat>;

Mono mono_const(size_t n, const Rat& r) {
    Mono m;
    if (r != 0) m[std::vector<long>(n, 0)] = r;
    return m;
}

Mono mono_add(const Mono& a, const Mono& b) {
    Mono r = a;
    for (auto& [e, c] : b) {
        auto it = r.find(e);
        if (it == r.end())
            r[e] = c;
        else {
            it->second += c;
            if (it->second == 0) r.erase(it);
        }
    }
    return r;
}

Mono mono_mul(const Mono& a, const Mono& b) {
    Mono r;
    for (auto& [ea, ca] : a)
        for (auto& [eb, cb] : b) {
            std::vector<long> e(ea.size());
            for (size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
            auto it = r.find(e);
            if (it == r.end())
                r[e] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) r.erase(it);
            }
        }
    return r;
}

struct Parser {
    Lexer lx;
    const std::vector<std::string>& vars;

    Parser(std::string s, const std::vector<std::string>& v) : vars(v) { lx.s = std::move(s); }

    [[noreturn]] void fail(const std::string& m) {
        throw ParseError(m + " at position " + std::to_string(lx.i) + " in \"" + lx.s + "\"");
    }

    Mono parseExpr() {
        Mono r = parseTerm(true);
        while (!lx.eof()) {
            char c = lx.peek();
            if (c == '+') {
                lx.get();
                r = mono_add(r, parseTerm(true));
            } else if (c == '-') {
                lx.get();
                Mono t = parseTerm(true);
                r = mono_add(r, mono_mul(t, mono_const(vars.size(), Rat(-1))));
            } else {
                break;
            }
        }
        return r;
    }

    // term: sequence of factors, juxtaposition or '*' means multiplication
    Mono parseTerm(bool allowLeadingSign) {
        Mono r = mono_const(vars.size(), Rat(1));
        if (allowLeadingSign) {
            while (lx.peek() == '-' || lx.peek() == '+') {
                if (lx.get() == '-') r = mono_mul(r, mono_const(vars.size(), Rat(-1)));
            }
        }
        bool any = false;
        while (!lx.eof()) {
            char c = lx.peek();
            if (c == '+' || c == '-' || c == ')') break;
            if (c == '*') {
                lx.get();
                continue;
            }
            r = mono_mul(r, parseFactor());
            any = true;
        }
        if (!any) fail("empty term");
        return r;
    }

    Mono parseFactor() {
        Mono base = parseBase();
        while (lx.peek() == '^') {
            lx.get();
            long e = parseNat();
            Mono p = mono_const(vars.size(), Rat(1));
            for (long k = 0; k < e; ++k) p = mono_mul(p, base);
            base = p;
        }
        return base;
    }

    long parseNat() {
        lx.skip();
        if (lx.eof() || !std::isdigit((unsigned char)lx.peek())) fail("expected exponent");
        long v = 0;
        while (!lx.eof() && std::isdigit((unsigned char)lx.s[lx.i])) {
            v = v * 10 + (lx.s[lx.i] - '0');
            ++lx.i;
            if (v > 100000) fail("exponent too large");
        }
        return v;
    }

    Mono parseBase() {
        char c = lx.peek();
        if (c == '(') {
            lx.get();
            Mono r = parseExpr();
            if (lx.peek() != ')') fail("expected ')'");
            lx.get();
            return r;
        }
        if (std::isdigit((unsigned char)c)) {
            Int num = parseInt();
            if (lx.peek() == '/') {
                lx.get();
                Int den = parseInt();
                if (den == 0) fail("zero denominator");
                Rat r(num, den);
                r.canonicalize();
                return mono_const(vars.size(), r);
            }
            return mono_const(vars.size(), Rat(num));
        }
        // variable name: longest match against vars
        for (size_t v = 0; v < vars.size(); ++v) {
            const std::string& name = vars[v];
            if (lx.s.compare(lx.i, name.size(), name) == 0) {
                // avoid matching "u" inside "u1" when both exist: prefer longer names
                bool longerMatch = false;
                for (size_t w = 0; w < vars.size(); ++w) {
                    if (vars[w].size() > name.size() && lx.s.compare(lx.i, vars[w].size(), vars[w]) == 0)
                        longerMatch = true;
                }
                if (longerMatch) continue;
                lx.i += name.size();
                Mono m;
                std::vector<long> e(vars.size(), 0);
                e[v] = 1;
                m[e] = Rat(1);
                return m;
            }
        }
        fail("unexpected character '" + std::string(1, c) + "'");
    }

    Int parseInt() {
        lx.skip();
        std::string d;
        while (lx.i < lx.s.size() && std::isdigit((unsigned char)lx.s[lx.i])) d += lx.s[lx.i++];
        if (d.empty()) fail("expected integer");
        return Int(d);
    }
};

} // namespace

std::map<std::vector<long>, Rat> parse_poly(const std::string& s, const std::vector<std::string>& vars) {
    Parser p(s, vars);
    Mono r = p.parseExpr();
    if (!p.lx.eof()) p.fail("trailing input");
    return r;
}

// ---------- PlanePoly ----------

long PlanePoly::deg_y() const {
    long d = -1;
    for (auto& [e, v] : c) d = std::max(d, e.second);
    return d;
}
long PlanePoly::deg_x() const {
    long d = -1;
    for (auto& [e, v] : c) d = std::max(d, e.first);
    return d;
}
long PlanePoly::m() const {
    long d = -1;
    for (auto& [e, v] : c)
        if (e.first == 0) d = std::max(d, e.second);
    return d;
}
Rat PlanePoly::coeff(long i, long j) const {
    auto it = c.find({i, j});
    return it == c.end() ? Rat(0) : it->second;
}
void PlanePoly::set(long i, long j, const Rat& v) {
    if (v == 0)
        c.erase({i, j});
    else
        c[{i, j}] = v;
}

void PlanePoly::check_invariants() const {
    if (zero()) throw PreconditionError("f = 0");
    long m0 = m();
    if (m0 < 0) throw PreconditionError("f(0,y) = 0 (x divides f)");
    if (m0 != deg_y()) throw PreconditionError("deg_y f != deg f(0,y) (branches escaping to infinity)");
}

PlanePoly PlanePoly::parse(const std::string& s) {
    auto mono = parse_poly(s, {"x", "y"});
    PlanePoly f;
    for (auto& [e, v] : mono) f.c[{e[0], e[1]}] = v;
    return f;
}

std::string PlanePoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [e, v] : c) {
        Rat av = v < 0 ? Rat(-v) : v;
        if (first) {
            if (v < 0) os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        bool needCoeff = (av != 1) || (e.first == 0 && e.second == 0);
        if (needCoeff) os << rat_str(av);
        if (e.first > 0) {
            if (needCoeff) os << "*";
            os << "x";
            if (e.first > 1) os << "^" << e.first;
        }
        if (e.second > 0) {
            if (needCoeff || e.first > 0) os << "*";
            os << "y";
            if (e.second > 1) os << "^" << e.second;
        }
    }
    return os.str();
}

PlanePoly PlanePoly::operator*(const PlanePoly& o) const {
    PlanePoly r;
    for (auto& [ea, ca] : c)
        for (auto& [eb, cb] : o.c) {
            auto key = std::make_pair(ea.first + eb.first, ea.second + eb.second);
            auto it = r.c.find(key);
            if (it == r.c.end())
                r.c[key] = ca * cb;
            else {
                it->second += ca * cb;
                if (it->second == 0) r.c.erase(it);
            }
        }
    return r;
}

PlanePoly PlanePoly::operator+(const PlanePoly& o) const {
    PlanePoly r = *this;
    for (auto& [e, v] : o.c) {
        auto it = r.c.find(e);
        if (it == r.c.end())
            r.c[e] = v;
        else {
            it->second += v;
            if (it->second == 0) r.c.erase(it);
        }
    }
    return r;
}

PlanePoly PlanePoly::compose_univariate(const PlanePoly& f, const std::vector<Rat>& a, const std::vector<Rat>& b) {
    // x -> a(x), y -> b(y)
    auto upow = [](const std::vector<Rat>& u, long e) {
        std::vector<Rat> r{Rat(1)};
        for (long k = 0; k < e; ++k) {
            std::vector<Rat> t(r.size() + u.size() - 1, Rat(0));
            for (size_t i = 0; i < r.size(); ++i)
                for (size_t j = 0; j < u.size(); ++j) t[i + j] += r[i] * u[j];
            r = std::move(t);
        }
        return r;
    };
    PlanePoly out;
    for (auto& [e, v] : f.c) {
        auto xa = upow(a, e.first);
        auto yb = upow(b, e.second);
        for (size_t i = 0; i < xa.size(); ++i) {
            if (xa[i] == 0) continue;
            for (size_t j = 0; j < yb.size(); ++j) {
                if (yb[j] == 0) continue;
                auto key = std::make_pair((long)i, (long)j);
                auto it = out.c.find(key);
                Rat add = v * xa[i] * yb[j];
                if (it == out.c.end())
                    out.c[key] = add;
                else {
                    it->second += add;
                    if (it->second == 0) out.c.erase(it);
                }
            }
        }
    }
    return out;
}

std::vector<std::pair<Rat, long>> newton_polygon(const PlanePoly& f) {
    f.check_invariants();
    // v[j] = x-adic valuation of the coefficient of y^j (or -1 if absent)
    long dy = f.deg_y();
    std::vector<long> val(dy + 1, -1);
    for (auto& [e, v] : f.c) {
        long j = e.second, i = e.first;
        if (val[j] < 0 || i < val[j]) val[j] = i;
    }
    // lower convex hull of {(j, val[j])}, j ascending; keep edges with negative slope
    std::vector<std::pair<long, long>> pts;
    for (long j = 0; j <= dy; ++j)
        if (val[j] >= 0) pts.push_back({j, val[j]});
    std::vector<std::pair<long, long>> hull;
    for (auto& p : pts) {
        while (hull.size() >= 2) {
            auto& a = hull[hull.size() - 2];
            auto& b = hull[hull.size() - 1];
            // keep turn right: (b - a) x (p - b) <= 0 for lower hull
            long cross = (b.first - a.first) * (p.second - b.second) - (b.second - a.second) * (p.first - b.first);
            if (cross <= 0)
                hull.pop_back();
            else
                break;
        }
        hull.push_back(p);
    }
    std::vector<std::pair<Rat, long>> segs;
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        auto& a = hull[k];
        auto& b = hull[k + 1];
        if (b.second < a.second) {
            Rat slope(a.second - b.second, b.first - a.first);
            slope.canonicalize();
            segs.push_back({slope, b.first - a.first});
        }
    }
    // steepest first (largest slope = lowest order roots last); sort by slope descending
    std::sort(segs.begin(), segs.end(), [](auto& A, auto& B) { return A.first > B.first; });
    return segs;
}

} // namespace mmf
