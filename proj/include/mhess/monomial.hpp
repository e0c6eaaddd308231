// Exponent vectors with the graded reverse lexicographic order. One flat
// vector covers both layouts: x-only (length nx) and bigraded x+y (length
// nx+ny with the y block trailing).
#pragma once

#include <cstdint>
#include <vector>

namespace mhess {

struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(int nvars) : e(nvars, 0) {}
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    int nvars() const { return static_cast<int>(e.size()); }
    int degree() const;
    int degree_range(int lo, int hi) const;  // sum of exponents in [lo, hi)
    bool is_constant() const { return degree() == 0; }

    Monomial times(const Monomial& o) const;
    bool divides(const Monomial& o) const;   // this | o
    Monomial quotient_into(const Monomial& o) const;  // o / this
    Monomial lcm(const Monomial& o) const;
    bool coprime(const Monomial& o) const;

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e != b.e; }
};

// Total order: higher total degree first; ties broken so that among equal
// degrees the monomial whose rightmost differing exponent is smaller wins.
// For x0,x1,x2 degree 2 this sorts x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        return grevlex_greater(a, b);
    }
};

// All monomials in nvars variables of total degree exactly d, listed in
// grevlex order (descending). Used for module generator enumeration.
std::vector<Monomial> monomials_of_degree(int nvars, int d);

}  // namespace mhess
