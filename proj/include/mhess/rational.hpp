// Exact rational scalar on top of GMP. Always lowest terms, denominator > 0;
// construction canonicalizes, arithmetic preserves the form.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "mhess/errors.hpp"

namespace mhess {

using Int = mpz_class;

class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Int& n) : v_(n) {}                      // NOLINT(google-explicit-constructor)
    Rational(const Int& num, const Int& den) : v_(num, den) {
        if (den == 0) throw DomainError("rational with zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Int(num), Int(den)) {}

    static Rational from_string(const std::string& s);

    const mpq_class& raw() const { return v_; }
    Int num() const { return v_.get_num(); }
    Int den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DomainError("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inv() const {
        if (is_zero()) throw DomainError("inverse of zero");
        return Rational(mpq_class(1 / v_));
    }
    Rational abs() const { return Rational(mpq_class(::abs(v_))); }
    // Integer exponent; negative exponents require a nonzero base.
    Rational pow(long e) const;

    // "n" when integral, otherwise "n/d".
    std::string str() const;

    // Residue num * den^{-1} mod p. Throws ModularError when p divides den.
    std::uint64_t mod_p(std::uint64_t p) const;

  private:
    explicit Rational(const mpq_class& q) : v_(q) {}
    mpq_class v_;
};

Int factorial(int n);
Int binomial(long a, long b);  // zero when b < 0 or a < b (a may be < 0)

}  // namespace mhess
