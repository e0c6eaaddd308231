// Sparse multivariate polynomials over the exact rationals, bigraded when jet
// variables are present. Canonical form: grevlex-sorted term map, no zero
// coefficients, so equality is structural.
//
// Layout: nx base variables x0..x{nx-1}; ny jet variables y0..y{ny-1} stored
// after them (ny is 0 or nx). Operations on mismatched layouts throw.
#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "mhess/monomial.hpp"
#include "mhess/rational.hpp"

namespace mhess {

class Poly {
  public:
    using TermMap = std::map<Monomial, Rational, GrevlexGreater>;

    Poly() : nx_(0), ny_(0) {}
    Poly(int nx, int ny);

    static Poly constant(int nx, int ny, const Rational& c);
    static Poly variable(int nx, int ny, int index);  // index into all nx+ny vars
    static Poly term(int nx, int ny, const Rational& c, const Monomial& m);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    int nvars() const { return nx_ + ny_; }
    bool same_layout(const Poly& o) const { return nx_ == o.nx_ && ny_ == o.ny_; }
    void require_layout(const Poly& o) const;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    Rational coefficient(const Monomial& m) const;
    void add_term(const Monomial& m, const Rational& c);  // accumulate, drop zeros

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly scaled(const Rational& c) const;
    Poly pow(int e) const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nx_ == b.nx_ && a.ny_ == b.ny_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Degrees. degree() is the maximum total degree (-1 for the zero poly).
    int degree() const;
    bool is_homogeneous() const;  // zero counts as homogeneous
    int x_degree(const Monomial& m) const { return m.degree_range(0, nx_); }
    int y_degree(const Monomial& m) const { return m.degree_range(nx_, nx_ + ny_); }
    int max_y_degree() const;
    Poly y_component(int j) const;       // terms with y-degree exactly j
    Poly truncate_y(int bound) const;    // drop terms with y-degree > bound
    bool has_y_terms() const;

    // True partial derivative with respect to variable `index`.
    Poly derivative(int index) const;

    // Divided-power Taylor coefficient: the coefficient of y^alpha in p(x+y),
    // i.e. (1/alpha!)·(prod d_i^{alpha_i}) p. Requires an x-only polynomial
    // and alpha of length nx.
    Poly taylor_coefficient(const Monomial& alpha) const;

    // Exact evaluation; point must list all nx+ny variables.
    Rational evaluate(const std::vector<Rational>& point) const;
    // Evaluation in F_p. Throws ModularError if a denominator hits p.
    std::uint64_t evaluate_mod_p(const std::vector<std::uint64_t>& point,
                                 std::uint64_t p) const;

    // Ring morphism: variable i goes to images[i] (all images in one common
    // layout). Used for coordinate changes and the x -> x+y test oracle.
    Poly substitute(const std::vector<Poly>& images) const;

    // Layout conversions.
    Poly with_jet_vars() const;  // (nx,0) -> (nx,nx), exponents zero-padded
    Poly drop_jet_vars() const;  // requires no y exponents present

    // Grevlex-leading data; polynomial must be nonzero.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    // Positive rational c with p/c integer and coefficient gcd 1 (p nonzero).
    Rational content() const;
    Poly primitive_part() const;  // p / content, sign of leading coeff kept

  private:
    int nx_, ny_;
    TermMap terms_;
};

}  // namespace mhess
