#pragma once

#include "mmf/rational.hpp"

#include <map>
#include <sstream>

namespace mmf {

// Z[L, L^{-1}]
struct LaurentZ {
    std::map<long, Int> c;

    static LaurentZ zero() { return {}; }
    static LaurentZ one() { return mono(1, 0); }
    static LaurentZ mono(Int a, long k) {
        LaurentZ r;
        if (a != 0) r.c[k] = a;
        return r;
    }
    bool is_zero() const { return c.empty(); }
    LaurentZ operator+(const LaurentZ& o) const {
        LaurentZ r = *this;
        for (auto& [k, a] : o.c) {
            r.c[k] += a;
            if (r.c[k] == 0) r.c.erase(k);
        }
        return r;
    }
    LaurentZ operator-() const {
        LaurentZ r = *this;
        for (auto& [k, a] : r.c) a = -a;
        return r;
    }
    LaurentZ operator-(const LaurentZ& o) const { return *this + (-o); }
    LaurentZ operator*(const LaurentZ& o) const {
        LaurentZ r;
        for (auto& [k1, a1] : c)
            for (auto& [k2, a2] : o.c) {
                r.c[k1 + k2] += a1 * a2;
                if (r.c[k1 + k2] == 0) r.c.erase(k1 + k2);
            }
        return r;
    }
    Rat eval(const Rat& q) const {
        Rat r(0);
        for (auto& [k, a] : c) {
            Rat p(1);
            for (long i = 0; i < (k < 0 ? -k : k); ++i) p *= q;
            if (k < 0) p = 1 / p;
            r += Rat(a) * p;
        }
        return r;
    }
    // divide by (L - 1); returns false if not exact
    bool divexact_Lm1(LaurentZ& out) const {
        if (c.empty()) {
            out = {};
            return true;
        }
        // synthetic: treat as polynomial after shifting by L^{-min}
        long lo = c.begin()->first, hi = c.rbegin()->first;
        std::vector<Int> v(hi - lo + 1, 0);
        for (auto& [k, a] : c) v[k - lo] = a;
        // divide v (coeffs low..high) by (L - 1): quotient degree one less
        std::vector<Int> qv(v.size() - 1, 0);
        Int carry = 0;
        for (size_t i = v.size(); i-- > 1;) {
            Int cur = v[i] + carry;
            qv[i - 1] = cur;
            carry = cur;
        }
        if (v[0] + carry != 0) return false;
        out = {};
        for (size_t i = 0; i < qv.size(); ++i)
            if (qv[i] != 0) out.c[(long)i + lo] = qv[i];
        return true;
    }
    std::string str() const {
        if (c.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = c.rbegin(); it != c.rend(); ++it) {
            Int a = it->second;
            if (!first) os << (a < 0 ? " - " : " + ");
            else if (a < 0)
                os << "-";
            first = false;
            Int aa = a < 0 ? Int(-a) : a;
            if (aa != 1 || it->first == 0) os << aa.get_str();
            if (it->first != 0) {
                if (aa != 1) os << "*";
                os << "L";
                if (it->first != 1) os << "^" << it->first;
            }
        }
        return os.str();
    }
};

// LaurentZ / (L-1)^k, normalized (k minimal)
struct LFrac {
    LaurentZ num;
    int den = 0; // power of (L-1)

    static LFrac zero() { return {}; }
    static LFrac one() { return {LaurentZ::one(), 0}; }
    static LFrac of(LaurentZ l) { return LFrac{std::move(l), 0}.normalized(); }
    static LFrac mono(Int a, long k) { return {LaurentZ::mono(std::move(a), k), 0}; }
    bool is_zero() const { return num.is_zero(); }
    LFrac normalized() const {
        LFrac r = *this;
        while (r.den > 0) {
            LaurentZ q;
            if (!r.num.divexact_Lm1(q)) break;
            r.num = q;
            --r.den;
        }
        if (r.num.is_zero()) r.den = 0;
        return r;
    }
    LFrac operator+(const LFrac& o) const {
        int d = std::max(den, o.den);
        LaurentZ Lm1 = LaurentZ::mono(1, 1) - LaurentZ::one();
        LaurentZ a = num, b = o.num;
        for (int i = den; i < d; ++i) a = a * Lm1;
        for (int i = o.den; i < d; ++i) b = b * Lm1;
        return LFrac{a + b, d}.normalized();
    }
    LFrac operator-() const { return {-num, den}; }
    LFrac operator-(const LFrac& o) const { return *this + (-o); }
    LFrac operator*(const LFrac& o) const { return LFrac{num * o.num, den + o.den}.normalized(); }
    Rat eval(const Rat& q) const {
        Rat d(1);
        for (int i = 0; i < den; ++i) d *= (q - 1);
        return num.eval(q) / d;
    }
    std::string str() const {
        if (den == 0) return num.str();
        std::ostringstream os;
        os << "(" << num.str() << ")/(L-1)";
        if (den > 1) os << "^" << den;
        return os.str();
    }
};

} // namespace mmf
