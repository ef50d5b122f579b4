#pragma once

#include "mmf/atom.hpp"

#include <map>

namespace mmf {

struct UnsupportedAtomShape : std::runtime_error {
    explicit UnsupportedAtomShape(const std::string& m) : std::runtime_error("UnsupportedAtomShape: " + m) {}
};

// zeta(t) = prod_j (1 - t^j)^{e_j}, as the exponent map j -> e_j (e_j != 0).
// Convention: zeta(t) = prod_j det(1 - t Monodromy | H^j_c)^{(-1)^{j+1}},
// assembled from Lefschetz numbers Lambda_k = sum_{j | k} j * s_j with
// zeta = prod (1 - t^j)^{-s_j}.
struct ZetaFactors {
    std::map<long, long> e;
    bool operator==(const ZetaFactors& o) const { return e == o.e; }
    std::string str() const;
};

// Lefschetz number of the k-th monodromy power on the fiber over 1 (exact,
// geometric: compact-support Euler characteristics over the algebraic closure).
long lefschetz_number(const MotClass& C, long k);

ZetaFactors monodromy_zeta(const MotClass& C);

// chi_c of the fiber over 1 (= Lambda_k for k divisible by all weights-degrees;
// equals the Euler characteristic of the classical Milnor fiber for classes
// produced by guibert_milnor)
long euler_char_fiber1(const MotClass& C);

// A'Campo-style zeta from resolution data {(multiplicity, chi(E_i^o))}
ZetaFactors acampo_zeta(const std::vector<std::pair<long, long>>& divisors);

} // namespace mmf
