// Truncated power series over an exact coefficient field, plus the quadratic
// extension Q(omega) with omega^2 = -1 - omega (a primitive cube root of
// unity), which hosts the non-rational flexes of the Fermat cubic.
#pragma once

#include <string>
#include <vector>

#include "mhess/errors.hpp"
#include "mhess/poly.hpp"
#include "mhess/rational.hpp"

namespace mhess {

// a + b*omega with omega^2 = -1 - omega; conjugate a + b*omega^2 = (a-b) - b*omega.
struct Eisenstein {
    Rational a, b;

    Eisenstein() : a(0), b(0) {}
    Eisenstein(long v) : a(v), b(0) {}                       // NOLINT: implicit by design
    Eisenstein(const Rational& v) : a(v), b(0) {}            // NOLINT: implicit by design
    Eisenstein(Rational a_, Rational b_) : a(std::move(a_)), b(std::move(b_)) {}

    static Eisenstein omega() { return Eisenstein(Rational(0), Rational(1)); }

    bool is_zero() const { return a.is_zero() && b.is_zero(); }
    Rational norm() const { return a * a - a * b + b * b; }

    Eisenstein operator-() const { return Eisenstein(-a, -b); }
    Eisenstein operator+(const Eisenstein& o) const { return Eisenstein(a + o.a, b + o.b); }
    Eisenstein operator-(const Eisenstein& o) const { return Eisenstein(a - o.a, b - o.b); }
    Eisenstein operator*(const Eisenstein& o) const {
        // (a + b w)(c + d w) = ac - bd + (ad + bc - bd) w
        const Rational bd = b * o.b;
        return Eisenstein(a * o.a - bd, a * o.b + b * o.a - bd);
    }
    Eisenstein inv() const {
        const Rational n = norm();
        if (n.is_zero()) throw DomainError("division by zero in Q(omega)");
        return Eisenstein((a - b) / n, -b / n);
    }
    Eisenstein operator/(const Eisenstein& o) const { return *this * o.inv(); }
    Eisenstein& operator+=(const Eisenstein& o) { return *this = *this + o; }
    Eisenstein& operator-=(const Eisenstein& o) { return *this = *this - o; }
    Eisenstein& operator*=(const Eisenstein& o) { return *this = *this * o; }
    bool operator==(const Eisenstein& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }

    std::string str() const { return "(" + a.str() + ")+(" + b.str() + ")w"; }
};

// Series mod t^precision: exactly `precision` stored coefficients. Binary
// operations truncate to the smaller precision, so lost accuracy is tracked
// by the value itself.
template <typename K>
class TruncatedSeries {
  public:
    TruncatedSeries() = default;
    explicit TruncatedSeries(int precision) : c_(check_prec(precision), K(0)) {}

    static TruncatedSeries constant(const K& v, int precision) {
        TruncatedSeries s(precision);
        s.c_[0] = v;
        return s;
    }

    int precision() const { return static_cast<int>(c_.size()); }
    const K& operator[](int i) const { return c_.at(i); }
    void set(int i, K v) { c_.at(i) = std::move(v); }

    bool is_zero() const {
        for (const auto& v : c_) {
            if (!(v == K(0))) return false;
        }
        return true;
    }

    // Index of the first nonzero coefficient; equals precision() when the
    // series is zero at this precision (no finite valuation is certified).
    int valuation() const {
        for (int i = 0; i < precision(); ++i) {
            if (!(c_[i] == K(0))) return i;
        }
        return precision();
    }

    TruncatedSeries truncated(int precision) const {
        if (precision > this->precision()) {
            throw ContractError("cannot truncate a series to higher precision");
        }
        TruncatedSeries s(precision);
        for (int i = 0; i < precision; ++i) s.c_[i] = c_[i];
        return s;
    }

    // Extension pads with zeros: a *choice* of lift, only meaningful when the
    // caller (e.g. a Newton step) corrects the padded range afterwards.
    TruncatedSeries extended(int precision) const {
        if (precision < this->precision()) return truncated(precision);
        TruncatedSeries s(precision);
        for (int i = 0; i < this->precision(); ++i) s.c_[i] = c_[i];
        return s;
    }

    TruncatedSeries operator-() const {
        TruncatedSeries s = *this;
        for (auto& v : s.c_) v = -v;
        return s;
    }
    TruncatedSeries operator+(const TruncatedSeries& o) const {
        const int p = std::min(precision(), o.precision());
        TruncatedSeries s(p);
        for (int i = 0; i < p; ++i) s.c_[i] = c_[i] + o.c_[i];
        return s;
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const {
        const int p = std::min(precision(), o.precision());
        TruncatedSeries s(p);
        for (int i = 0; i < p; ++i) s.c_[i] = c_[i] - o.c_[i];
        return s;
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        const int p = std::min(precision(), o.precision());
        TruncatedSeries s(p);
        for (int i = 0; i < p; ++i) {
            if (c_[i] == K(0)) continue;
            for (int j = 0; i + j < p; ++j) {
                if (o.c_[j] == K(0)) continue;
                s.c_[i + j] += c_[i] * o.c_[j];
            }
        }
        return s;
    }
    TruncatedSeries scaled(const K& f) const {
        TruncatedSeries s = *this;
        for (auto& v : s.c_) v = v * f;
        return s;
    }

    // d/dt; one coefficient of precision is genuinely lost.
    TruncatedSeries derivative() const {
        if (precision() <= 1) {
            throw PrecisionError("series too short to differentiate");
        }
        TruncatedSeries s(precision() - 1);
        for (int i = 1; i < precision(); ++i) s.c_[i - 1] = c_[i] * K(i);
        return s;
    }

    // Multiplicative inverse; needs a unit constant term.
    TruncatedSeries inverse() const {
        if (c_[0] == K(0)) {
            throw ContractError("series with zero constant term has no inverse");
        }
        TruncatedSeries s(precision());
        const K b0 = K(1) / c_[0];
        s.c_[0] = b0;
        for (int k = 1; k < precision(); ++k) {
            K acc(0);
            for (int i = 1; i <= k; ++i) acc += c_[i] * s.c_[k - i];
            s.c_[k] = -(b0 * acc);
        }
        return s;
    }

    bool operator==(const TruncatedSeries& o) const { return c_ == o.c_; }

  private:
    static int check_prec(int p) {
        if (p <= 0) throw ContractError("series precision must be positive");
        return p;
    }
    std::vector<K> c_;
};

// Evaluation of an x-only polynomial at field points and at series points;
// coefficients are mapped through K's converting constructor from Rational.
template <typename K>
K evaluate_poly(const Poly& p, const std::vector<K>& xs) {
    if (p.ny() != 0) throw LayoutError("field evaluation expects an x-only polynomial");
    if (static_cast<int>(xs.size()) != p.nx()) {
        throw LayoutError("evaluation point has the wrong number of coordinates");
    }
    K acc(0);
    for (const auto& [mono, coeff] : p.terms()) {
        K term{K(coeff)};
        for (int i = 0; i < p.nx(); ++i) {
            for (int e = 0; e < mono.e[i]; ++e) term *= xs[i];
        }
        acc += term;
    }
    return acc;
}

template <typename K>
TruncatedSeries<K> evaluate_at_series(const Poly& p, const std::vector<TruncatedSeries<K>>& xs) {
    if (p.ny() != 0) throw LayoutError("series evaluation expects an x-only polynomial");
    if (static_cast<int>(xs.size()) != p.nx()) {
        throw LayoutError("evaluation point has the wrong number of coordinates");
    }
    int prec = xs.empty() ? 1 : xs[0].precision();
    for (const auto& s : xs) prec = std::min(prec, s.precision());
    TruncatedSeries<K> acc(prec);
    for (const auto& [mono, coeff] : p.terms()) {
        TruncatedSeries<K> term = TruncatedSeries<K>::constant(K(coeff), prec);
        for (int i = 0; i < p.nx(); ++i) {
            for (int e = 0; e < mono.e[i]; ++e) term = term * xs[i];
        }
        acc = acc + term;
    }
    return acc;
}

}  // namespace mhess
