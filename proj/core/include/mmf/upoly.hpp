#pragma once

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace mmf {

// Generic dense univariate polynomial algorithms over a field object F with:
//   typename F::Elem; F.zero(); F.one(); F.add(a,b); F.sub(a,b); F.mul(a,b);
//   F.div(a,b); F.neg(a); F.is_zero(a)  [may refine state, e.g. D5 splits]
// Polynomials are coefficient vectors, lowest degree first, no trailing zeros.
template <class F>
struct PolyOps {
    using E = typename F::Elem;
    using P = std::vector<E>;

    F& K;
    explicit PolyOps(F& field) : K(field) {}

    void trim(P& a) {
        while (!a.empty() && K.is_zero(a.back())) a.pop_back();
    }
    bool is_zero(const P& a) {
        for (auto& c : a)
            if (!K.is_zero(c)) return false;
        return true;
    }
    int deg(const P& a) const { return (int)a.size() - 1; } // -1 for zero
    P zero() const { return {}; }
    P one() { return {K.one()}; }
    P constant(const E& c) {
        P r{c};
        trim(r);
        return r;
    }
    P monomial(const E& c, int d) {
        P r(d + 1, K.zero());
        r[d] = c;
        trim(r);
        return r;
    }

    P add(const P& a, const P& b) {
        P r(std::max(a.size(), b.size()), K.zero());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = K.add(r[i], b[i]);
        trim(r);
        return r;
    }
    P sub(const P& a, const P& b) {
        P r(std::max(a.size(), b.size()), K.zero());
        for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
        for (size_t i = 0; i < b.size(); ++i) r[i] = K.sub(r[i], b[i]);
        trim(r);
        return r;
    }
    P neg(const P& a) {
        P r = a;
        for (auto& c : r) c = K.neg(c);
        return r;
    }
    P mul(const P& a, const P& b) {
        if (a.empty() || b.empty()) return {};
        P r(a.size() + b.size() - 1, K.zero());
        for (size_t i = 0; i < a.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) r[i + j] = K.add(r[i + j], K.mul(a[i], b[j]));
        trim(r);
        return r;
    }
    P scale(const P& a, const E& c) {
        P r = a;
        for (auto& x : r) x = K.mul(x, c);
        trim(r);
        return r;
    }
    P shift_up(const P& a, int k) { // multiply by X^k
        if (a.empty()) return {};
        P r(a.size() + k, K.zero());
        for (size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
        return r;
    }

    // divrem with invertible leading coefficient of b
    void divrem(const P& a, const P& b, P& q, P& r) {
        if (b.empty()) throw std::domain_error("polynomial division by zero");
        r = a;
        trim(r);
        q.clear();
        E lb = b.back();
        E ilb = K.div(K.one(), lb);
        int db = deg(b);
        if (deg(r) >= db) q.assign(deg(r) - db + 1, K.zero());
        while (!r.empty() && deg(r) >= db) {
            E c = K.mul(r.back(), ilb);
            int k = deg(r) - db;
            q[k] = c;
            for (int i = 0; i <= db; ++i) r[i + k] = K.sub(r[i + k], K.mul(c, b[i]));
            trim(r);
        }
    }
    P mod(const P& a, const P& b) {
        P q, r;
        divrem(a, b, q, r);
        return r;
    }
    P divexact(const P& a, const P& b) {
        P q, r;
        divrem(a, b, q, r);
        if (!is_zero(r)) throw std::logic_error("division not exact");
        return q;
    }

    P make_monic(const P& a) {
        if (a.empty()) return a;
        return scale(a, K.div(K.one(), a.back()));
    }

    // monic gcd via the Euclidean algorithm (field coefficients)
    P gcd(P a, P b) {
        trim(a);
        trim(b);
        while (!b.empty()) {
            P q, r;
            divrem(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a.empty() ? a : make_monic(a);
    }

    P derivative(const P& a) {
        if (a.size() <= 1) return {};
        P r(a.size() - 1, K.zero());
        for (size_t i = 1; i < a.size(); ++i) r[i - 1] = K.mul(a[i], K.from_int((long)i));
        trim(r);
        return r;
    }

    E eval(const P& a, const E& x) {
        E r = K.zero();
        for (size_t i = a.size(); i-- > 0;) r = K.add(K.mul(r, x), a[i]);
        return r;
    }

    P compose(const P& a, const P& b) { // a(b(X))
        P r;
        for (size_t i = a.size(); i-- > 0;) {
            r = mul(r, b);
            r = add(r, constant(a[i]));
        }
        return r;
    }

    // Yun squarefree decomposition: returns list of (factor, multiplicity),
    // factors monic, pairwise coprime, product^mult = a / lc.
    std::vector<std::pair<P, int>> squarefree(P a) {
        std::vector<std::pair<P, int>> out;
        trim(a);
        if (deg(a) <= 0) return out;
        a = make_monic(a);
        P da = derivative(a);
        P g = gcd(a, da);
        if (deg(g) == 0) {
            out.push_back({a, 1});
            return out;
        }
        P w = divexact(a, g);
        P y = divexact(da, g);
        P z = sub(y, derivative(w));
        int i = 1;
        while (!is_zero(z)) {
            P f = gcd(w, z);
            if (deg(f) > 0) out.push_back({f, i});
            w = divexact(w, f);
            y = divexact(z, f);
            z = sub(y, derivative(w));
            ++i;
        }
        if (deg(w) > 0) out.push_back({w, i});
        return out;
    }
};

} // namespace mmf
