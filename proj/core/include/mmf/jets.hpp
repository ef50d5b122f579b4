#pragma once

#include "mmf/plane.hpp"

#include <optional>

namespace mmf {

struct BudgetExceeded : std::runtime_error {
    BudgetExceeded() : std::runtime_error("BudgetExceeded") {}
};

struct JetQuery {
    int dim = 2;                          // 1 or 2 coordinates
    std::map<std::pair<long, long>, Rat> F; // exponents (i, j); dim 1 ignores j
    long n = 1;
    long q = 3;
    // optional secondary order condition: ord_t G(phi) = n1 (bi-order spaces)
    std::optional<std::map<std::pair<long, long>, Rat>> G;
    long n1 = 0;
    unsigned long long budget = 1000000000ULL;
    int threads = 0; // 0: hardware default
};

// exact counts of jets phi mod t^{n+1} with phi(0)=0, ord F(phi) = n and
// ac F(phi) = alpha, for every alpha in F_q^*; result[alpha] (index 0 unused)
std::vector<long> count_jets(const JetQuery& query);

} // namespace mmf
