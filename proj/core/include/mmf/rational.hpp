#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace mmf {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat rat(long n, long d = 1) {
    if (d == 0) throw std::invalid_argument("rational with zero denominator");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

inline Int rnum(const Rat& r) { return r.get_num(); }
inline Int rden(const Rat& r) { return r.get_den(); }

inline bool is_int(const Rat& r) { return rden(r) == 1; }

inline Int floor_rat(const Rat& r) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), rnum(r).get_mpz_t(), rden(r).get_mpz_t());
    return q;
}

inline Int ceil_rat(const Rat& r) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), rnum(r).get_mpz_t(), rden(r).get_mpz_t());
    return q;
}

inline long to_long(const Int& z) {
    if (!z.fits_slong_p()) throw std::overflow_error("integer too large for long");
    return z.get_si();
}

inline long to_long(const Rat& r) {
    if (!is_int(r)) throw std::invalid_argument("rational is not an integer");
    return to_long(rnum(r));
}

inline Int int_gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// gcd on positive rationals: the generator of the lattice aZ + bZ inside Q.
inline Rat rat_gcd(const Rat& a, const Rat& b) {
    if (a == 0) return b;
    if (b == 0) return a;
    Int d = rden(a) * rden(b);
    Int n = int_gcd(rnum(a) * rden(b), rnum(b) * rden(a));
    Rat g(n, d);
    g.canonicalize();
    if (g < 0) g = -g;
    return g;
}

inline std::string rat_str(const Rat& r) { return r.get_str(); }

} // namespace mmf
