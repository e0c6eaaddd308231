#include "mhess/rational.hpp"

namespace mhess {

Rational Rational::from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw DomainError("bad rational literal '" + s + "'");
    }
}

Rational Rational::pow(long e) const {
    if (e < 0) return inv().pow(-e);
    Rational base = *this, acc = Rational(1);
    unsigned long k = static_cast<unsigned long>(e);
    while (k) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::uint64_t Rational::mod_p(std::uint64_t p) const {
    mpz_class pz(static_cast<unsigned long>(p));
    mpz_class d = v_.get_den() % pz;
    if (d == 0) throw ModularError("denominator divisible by prime " + std::to_string(p));
    mpz_class dinv;
    if (!mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pz.get_mpz_t()))
        throw ModularError("denominator not invertible mod " + std::to_string(p));
    mpz_class n = v_.get_num() % pz;
    if (n < 0) n += pz;
    mpz_class r = (n * dinv) % pz;
    return r.get_ui();
}

Int factorial(int n) {
    Int f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

Int binomial(long a, long b) {
    if (b < 0 || a < b) return Int(0);
    Int num = 1, den = 1;
    for (long i = 0; i < b; ++i) {
        num *= (a - i);
        den *= (i + 1);
    }
    return num / den;
}

}  // namespace mhess
