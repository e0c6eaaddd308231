#include "mhess/poly.hpp"

#include <cassert>

namespace mhess {

Poly::Poly(int nx, int ny) : nx_(nx), ny_(ny) {
    if (nx < 0 || (ny != 0 && ny != nx))
        throw LayoutError("bad variable layout (" + std::to_string(nx) + "," +
                          std::to_string(ny) + ")");
}

Poly Poly::constant(int nx, int ny, const Rational& c) {
    Poly p(nx, ny);
    if (!c.is_zero()) p.terms_.emplace(Monomial(nx + ny), c);
    return p;
}

Poly Poly::variable(int nx, int ny, int index) {
    Poly p(nx, ny);
    if (index < 0 || index >= nx + ny) throw LayoutError("variable index out of range");
    Monomial m(nx + ny);
    m.e[index] = 1;
    p.terms_.emplace(m, Rational(1));
    return p;
}

Poly Poly::term(int nx, int ny, const Rational& c, const Monomial& m) {
    Poly p(nx, ny);
    if (m.nvars() != nx + ny) throw LayoutError("monomial length does not match layout");
    if (!c.is_zero()) p.terms_.emplace(m, c);
    return p;
}

void Poly::require_layout(const Poly& o) const {
    if (!same_layout(o))
        throw LayoutError("variable layouts differ: (" + std::to_string(nx_) + "," +
                          std::to_string(ny_) + ") vs (" + std::to_string(o.nx_) + "," +
                          std::to_string(o.ny_) + ")");
}

bool Poly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_constant());
}

Rational Poly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
    assert(m.nvars() == nvars());
    if (c.is_zero()) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(nx_, ny_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    require_layout(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    require_layout(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    a.require_layout(b);
    Poly r(a.nx_, a.ny_);
    // Keep the smaller operand outermost: fewer map rebalances.
    const Poly& s = a.term_count() <= b.term_count() ? a : b;
    const Poly& t = a.term_count() <= b.term_count() ? b : a;
    for (const auto& [ms, cs] : s.terms_)
        for (const auto& [mt, ct] : t.terms_) r.add_term(ms.times(mt), cs * ct);
    return r;
}

Poly Poly::scaled(const Rational& c) const {
    Poly r(nx_, ny_);
    if (c.is_zero()) return r;
    for (const auto& [m, k] : terms_) r.terms_.emplace(m, k * c);
    return r;
}

Poly Poly::pow(int e) const {
    if (e < 0) throw DomainError("negative polynomial power");
    Poly acc = Poly::constant(nx_, ny_, Rational(1));
    for (int i = 0; i < e; ++i) acc *= *this;
    return acc;
}

int Poly::degree() const {
    if (terms_.empty()) return -1;
    return terms_.begin()->first.degree();  // grevlex leader has max degree
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.begin()->first.degree();
    for (const auto& [m, c] : terms_)
        if (m.degree() != d) return false;
    return true;
}

int Poly::max_y_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, y_degree(m));
    return d;
}

Poly Poly::y_component(int j) const {
    Poly r(nx_, ny_);
    for (const auto& [m, c] : terms_)
        if (y_degree(m) == j) r.terms_.emplace(m, c);
    return r;
}

Poly Poly::truncate_y(int bound) const {
    Poly r(nx_, ny_);
    for (const auto& [m, c] : terms_)
        if (y_degree(m) <= bound) r.terms_.emplace(m, c);
    return r;
}

bool Poly::has_y_terms() const {
    for (const auto& [m, c] : terms_)
        if (y_degree(m) > 0) return true;
    return false;
}

Poly Poly::derivative(int index) const {
    if (index < 0 || index >= nvars()) throw LayoutError("derivative index out of range");
    Poly r(nx_, ny_);
    for (const auto& [m, c] : terms_) {
        if (m.e[index] == 0) continue;
        Monomial d(m);
        d.e[index] -= 1;
        r.add_term(d, c * Rational(m.e[index]));
    }
    return r;
}

Poly Poly::taylor_coefficient(const Monomial& alpha) const {
    if (ny_ != 0) throw LayoutError("taylor_coefficient expects an x-only polynomial");
    if (alpha.nvars() != nx_) throw LayoutError("alpha length does not match layout");
    Poly r(nx_, 0);
    for (const auto& [m, c] : terms_) {
        if (!alpha.divides(m)) continue;
        Int mult = 1;
        for (int i = 0; i < nx_; ++i) mult *= binomial(m.e[i], alpha.e[i]);
        r.add_term(alpha.quotient_into(m), c * Rational(mult));
    }
    return r;
}

Rational Poly::evaluate(const std::vector<Rational>& point) const {
    if (static_cast<int>(point.size()) != nvars())
        throw LayoutError("evaluation point has wrong length");
    Rational acc(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int i = 0; i < nvars(); ++i)
            if (m.e[i]) t *= point[i].pow(m.e[i]);
        acc += t;
    }
    return acc;
}

std::uint64_t Poly::evaluate_mod_p(const std::vector<std::uint64_t>& point,
                                   std::uint64_t p) const {
    if (static_cast<int>(point.size()) != nvars())
        throw LayoutError("evaluation point has wrong length");
    auto mulmod = [p](std::uint64_t a, std::uint64_t b) {
        return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
    };
    std::uint64_t acc = 0;
    for (const auto& [m, c] : terms_) {
        std::uint64_t t = c.mod_p(p);
        for (int i = 0; i < nvars(); ++i) {
            std::uint64_t base = point[i] % p, e = static_cast<std::uint64_t>(m.e[i]);
            while (e) {
                if (e & 1) t = mulmod(t, base);
                base = mulmod(base, base);
                e >>= 1;
            }
        }
        acc = (acc + t) % p;
    }
    return acc;
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    if (static_cast<int>(images.size()) != nvars())
        throw LayoutError("substitute needs one image per variable");
    for (const auto& im : images) images.front().require_layout(im);
    const Poly& proto = images.front();
    // Cache powers of each image.
    std::vector<std::vector<Poly>> pw(images.size());
    auto power = [&](int i, int e) -> const Poly& {
        auto& v = pw[i];
        if (v.empty()) v.push_back(Poly::constant(proto.nx(), proto.ny(), Rational(1)));
        while (static_cast<int>(v.size()) <= e) v.push_back(v.back() * images[i]);
        return v[e];
    };
    Poly r(proto.nx(), proto.ny());
    for (const auto& [m, c] : terms_) {
        Poly t = Poly::constant(proto.nx(), proto.ny(), c);
        for (int i = 0; i < nvars(); ++i)
            if (m.e[i]) t *= power(i, m.e[i]);
        r += t;
    }
    return r;
}

Poly Poly::with_jet_vars() const {
    if (ny_ != 0) throw LayoutError("already carries jet variables");
    Poly r(nx_, nx_);
    for (const auto& [m, c] : terms_) {
        Monomial w(2 * nx_);
        for (int i = 0; i < nx_; ++i) w.e[i] = m.e[i];
        r.terms_.emplace(w, c);
    }
    return r;
}

Poly Poly::drop_jet_vars() const {
    if (ny_ == 0) return *this;
    Poly r(nx_, 0);
    for (const auto& [m, c] : terms_) {
        if (y_degree(m) != 0)
            throw LayoutError("cannot drop jet variables: y terms present");
        Monomial w(nx_);
        for (int i = 0; i < nx_; ++i) w.e[i] = m.e[i];
        r.terms_.emplace(w, c);
    }
    return r;
}

const Monomial& Poly::leading_monomial() const {
    if (terms_.empty()) throw DomainError("leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& Poly::leading_coefficient() const {
    if (terms_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

Rational Poly::content() const {
    if (terms_.empty()) throw DomainError("content of zero polynomial");
    Int g = 0, l = 1;
    for (const auto& [m, c] : terms_) {
        Int num = c.num(), den = c.den();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), num.get_mpz_t());
        Int t;
        mpz_lcm(t.get_mpz_t(), l.get_mpz_t(), den.get_mpz_t());
        l = t;
    }
    return Rational(g, l);
}

Poly Poly::primitive_part() const {
    if (terms_.empty()) return *this;
    return scaled(content().inv());
}

}  // namespace mhess
