#pragma once

#include "mmf/rational.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace mmf {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& m) : std::runtime_error("ParseError: " + m) {}
};
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& m) : std::runtime_error("PreconditionError: " + m) {}
};

// f(x, y) with rational coefficients, sparse.
struct PlanePoly {
    std::map<std::pair<long, long>, Rat> c; // (i, j) -> coeff of x^i y^j

    bool zero() const { return c.empty(); }
    long deg_y() const;
    long deg_x() const;
    long m() const; // degree of f(0, y)
    Rat coeff(long i, long j) const;
    void set(long i, long j, const Rat& v);

    // f(0,y) nonzero of degree m = deg_y f (and hence x does not divide f)
    void check_invariants() const;

    static PlanePoly parse(const std::string& s);
    std::string str() const;

    PlanePoly operator*(const PlanePoly& o) const;
    PlanePoly operator+(const PlanePoly& o) const;
    // substitute x -> a(u), y -> b(v): used to build f(g1(u), g2(v)) for the
    // composition cross-checks; a, b univariate with rational coefficients
    static PlanePoly compose_univariate(const PlanePoly& f, const std::vector<Rat>& a, const std::vector<Rat>& b);
};

// Segments of the lower Newton polygon governing roots y(x) -> 0 as x -> 0:
// (slope mu > 0, horizontal length), steepest first.
std::vector<std::pair<Rat, long>> newton_polygon(const PlanePoly& f);

// Generic sparse multivariate parser over named variables.
std::map<std::vector<long>, Rat> parse_poly(const std::string& s, const std::vector<std::string>& vars);

} // namespace mmf
