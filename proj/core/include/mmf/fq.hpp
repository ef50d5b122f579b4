#pragma once

#include "mmf/rational.hpp"

#include <memory>
#include <stdexcept>
#include <vector>

namespace mmf {

struct BadPrime : std::runtime_error {
    explicit BadPrime(const std::string& m) : std::runtime_error("BadPrime: " + m) {}
};
struct NoEmbedding : std::runtime_error {
    explicit NoEmbedding(const std::string& m) : std::runtime_error("NoEmbedding: " + m) {}
};

// Arithmetic in F_q, q = p^k with q small (tables). Elements are integers in
// [0, q) encoding polynomials over F_p in base p; 0 is the zero element.
class FqCtx {
  public:
    explicit FqCtx(long q);

    long q() const { return q_; }
    long p() const { return p_; }
    long k() const { return k_; }

    long add(long a, long b) const;
    long sub(long a, long b) const;
    long neg(long a) const;
    long mul(long a, long b) const;
    long inv(long a) const;
    long pow(long a, long e) const;
    long from_int(const Int& z) const;    // reduce an integer mod p (into the prime field)
    long from_rat(const Rat& r) const;    // throws BadPrime if p | denominator

    static bool is_prime_power(long q, long* p_out = nullptr, long* k_out = nullptr);

  private:
    long q_, p_, k_;
    std::vector<int> expTable_, logTable_; // discrete logs w.r.t. a generator (k >= 1)
    long addRaw(long a, long b) const;     // digitwise base-p addition
};

using FqPtr = std::shared_ptr<const FqCtx>;
FqPtr fq_context(long q); // cached

} // namespace mmf
