#include "mmf/fq.hpp"

#include <map>
#include <mutex>

namespace mmf {

bool FqCtx::is_prime_power(long q, long* p_out, long* k_out) {
    if (q < 2) return false;
    long p = 0;
    long n = q;
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0) p = n;
    long k = 0;
    while (n > 1) {
        if (n % p != 0) return false;
        n /= p;
        ++k;
    }
    if (p_out) *p_out = p;
    if (k_out) *k_out = k;
    return true;
}

long FqCtx::addRaw(long a, long b) const {
    if (k_ == 1) {
        long s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    long r = 0, mul = 1;
    while (a || b) {
        long da = a % p_, db = b % p_;
        long ds = da + db;
        if (ds >= p_) ds -= p_;
        r += ds * mul;
        mul *= p_;
        a /= p_;
        b /= p_;
    }
    return r;
}

FqCtx::FqCtx(long q) : q_(q) {
    if (!is_prime_power(q, &p_, &k_)) throw BadPrime("q = " + std::to_string(q) + " is not a prime power");
    if (q_ > (1L << 20)) throw BadPrime("field too large for table arithmetic");

    // Monic irreducible modulus over F_p for k > 1, found by exhaustive search:
    // digits[0..k-1] are low coefficients, x^k has coefficient 1.
    std::vector<long> mod(k_, 0);
    if (k_ > 1) {
        auto reducible = [&](const std::vector<long>& m) {
            // test for roots and small-degree factors by trial division over F_p
            // (k is tiny here, brute force over monic divisors of degree <= k/2)
            std::vector<long> full(m);
            full.push_back(1);
            for (long deg = 1; deg <= k_ / 2; ++deg) {
                long count = 1;
                for (long i = 0; i < deg; ++i) count *= p_;
                for (long code = 0; code < count; ++code) {
                    std::vector<long> d(deg + 1, 0);
                    long c = code;
                    for (long i = 0; i < deg; ++i) {
                        d[i] = c % p_;
                        c /= p_;
                    }
                    d[deg] = 1;
                    // full mod d over F_p
                    std::vector<long> r(full);
                    for (long i = (long)r.size() - 1; i >= deg; --i) {
                        long lead = r[i] % p_;
                        if (lead == 0) continue;
                        for (long j = 0; j <= deg; ++j) {
                            long idx = i - deg + j;
                            r[idx] = ((r[idx] - lead * d[j]) % p_ + p_) % p_;
                        }
                    }
                    bool zero = true;
                    for (long i = 0; i < deg; ++i)
                        if (r[i] % p_ != 0) { zero = false; break; }
                    if (zero) return true;
                }
            }
            return false;
        };
        long count = 1;
        for (long i = 0; i < k_; ++i) count *= p_;
        bool found = false;
        for (long code = 0; code < count && !found; ++code) {
            long c = code;
            for (long i = 0; i < k_; ++i) {
                mod[i] = c % p_;
                c /= p_;
            }
            if (mod[0] == 0) continue; // x | modulus
            if (!reducible(mod)) found = true;
        }
        if (!found) throw BadPrime("no irreducible modulus found");
    }

    // encode/decode helpers over the modulus
    auto mulPoly = [&](long a, long b) -> long {
        if (k_ == 1) return (a * b) % p_;
        std::vector<long> da(k_), db(k_);
        for (long i = 0; i < k_; ++i) {
            da[i] = a % p_;
            a /= p_;
        }
        for (long i = 0; i < k_; ++i) {
            db[i] = b % p_;
            b /= p_;
        }
        std::vector<long> prod(2 * k_ - 1, 0);
        for (long i = 0; i < k_; ++i)
            for (long j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        for (long i = 2 * k_ - 2; i >= k_; --i) {
            long lead = prod[i];
            if (!lead) continue;
            prod[i] = 0;
            for (long j = 0; j < k_; ++j) prod[i - k_ + j] = ((prod[i - k_ + j] - lead * mod[j]) % p_ + p_) % p_;
        }
        long r = 0, m = 1;
        for (long i = 0; i < k_; ++i) {
            r += prod[i] * m;
            m *= p_;
        }
        return r;
    };

    // exp/log tables from a generator of F_q^*
    expTable_.assign(q_ - 1, 0);
    logTable_.assign(q_, -1);
    for (long g = 1; g < q_; ++g) {
        long x = 1;
        long n = 0;
        bool ok = true;
        std::vector<int> seen(q_, 0);
        while (n < q_ - 1) {
            if (seen[x]) { ok = false; break; }
            seen[x] = 1;
            expTable_[n] = (int)x;
            x = mulPoly(x, g);
            ++n;
        }
        if (ok && x == 1) {
            for (long i = 0; i < q_ - 1; ++i) logTable_[expTable_[i]] = (int)i;
            return;
        }
    }
    throw BadPrime("no generator found");
}

long FqCtx::add(long a, long b) const { return addRaw(a, b); }
long FqCtx::neg(long a) const {
    if (a == 0) return 0;
    if (k_ == 1) return p_ - a;
    long r = 0, m = 1;
    while (a) {
        long d = a % p_;
        r += (d ? p_ - d : 0) * m;
        m *= p_;
        a /= p_;
    }
    return r;
}
long FqCtx::sub(long a, long b) const { return addRaw(a, neg(b)); }
long FqCtx::mul(long a, long b) const {
    if (a == 0 || b == 0) return 0;
    long e = logTable_[a] + logTable_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return expTable_[e];
}
long FqCtx::inv(long a) const {
    if (a == 0) throw std::domain_error("inverse of zero in F_q");
    long e = (q_ - 1 - logTable_[a]) % (q_ - 1);
    return expTable_[e];
}
long FqCtx::pow(long a, long e) const {
    if (a == 0) {
        if (e == 0) return 1;
        if (e < 0) throw std::domain_error("0^negative");
        return 0;
    }
    long le = logTable_[a];
    long m = q_ - 1;
    long ee = ((e % m) * (le % m)) % m;
    if (ee < 0) ee += m;
    return expTable_[ee];
}
long FqCtx::from_int(const Int& z) const {
    Int r = z % p_;
    if (r < 0) r += p_;
    return r.get_si();
}
long FqCtx::from_rat(const Rat& r) const {
    Int d = rden(r);
    if (d % p_ == 0) throw BadPrime("denominator divisible by p");
    long n = from_int(rnum(r));
    long dd = from_int(d);
    return mul(n, inv(dd));
}

FqPtr fq_context(long q) {
    static std::map<long, FqPtr> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(q);
    if (it != cache.end()) return it->second;
    auto ctx = std::make_shared<const FqCtx>(q);
    cache[q] = ctx;
    return ctx;
}

} // namespace mmf
