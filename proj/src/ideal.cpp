#include "mhess/ideal.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "mhess/errors.hpp"

namespace mhess {
namespace {

// Pure power x_k^d as a monomial in nx variables.
Monomial pure_power(int nx, int k, int d) {
    Monomial m(nx);
    m.e[k] = d;
    return m;
}

// True when x_k^deg(g) appears with a scalar coefficient and no other term of
// g has x_k-exponent equal to deg(g).
bool scalar_pivot(const Poly& g, int k) {
    const int d = g.degree();
    bool pure_seen = false;
    for (const auto& [mono, coeff] : g.terms()) {
        (void)coeff;
        if (mono.e[k] != d) continue;
        if (mono.degree() == d && mono.e[k] == d) {
            pure_seen = true;
        } else {
            return false;
        }
    }
    return pure_seen;
}

}  // namespace

IdealSpec::IdealSpec(std::vector<Poly> generators, ReductionStrategy strategy, long budget)
    : strategy_(strategy) {
    for (auto& g : generators) {
        if (g.is_zero()) continue;
        if (g.ny() != 0) throw LayoutError("ideal generators must not involve jet variables");
        if (!g.is_homogeneous()) throw ContractError("ideal generators must be homogeneous");
        gens_.push_back(std::move(g));
    }
    if (gens_.empty()) throw DomainError("ideal needs at least one nonzero generator");
    nx_ = gens_[0].nx();
    for (const auto& g : gens_) {
        if (g.nx() != nx_) throw LayoutError("ideal generators disagree on variable count");
    }
    if (strategy_ == ReductionStrategy::Auto) {
        strategy_ = gens_.size() == 1 ? ReductionStrategy::PrincipalDivision
                                      : ReductionStrategy::Buchberger;
    }
    if (strategy_ == ReductionStrategy::PrincipalDivision) {
        if (gens_.size() != 1)
            throw DomainError("principal division requires exactly one generator");
        setup_principal();
    } else {
        setup_buchberger(budget);
    }
}

void IdealSpec::setup_principal() {
    const Poly& g = gens_[0];
    const int d = g.degree();
    if (d == 0) throw DomainError("unit ideal: generator is a nonzero constant");

    // Prefer the largest-index variable so that, e.g., reduction modulo
    // x0^3 + x1^3 + x2^3 rewrites x2^3 as -(x0^3 + x1^3).
    for (int k = nx_ - 1; k >= 0; --k) {
        if (scalar_pivot(g, k)) {
            pivot_var_ = k;
            basis_ = {g};
            return;
        }
    }

    // No variable qualifies (e.g. x0*x1*x2): substitute x_i <- x_i + l_i*x_k
    // for the last variable k. The new x_k^d coefficient is g(l, 1), nonzero
    // for some small integer tuple l because dehomogenization is faithful.
    const int k = nx_ - 1;
    std::vector<int> lam(nx_ - 1, 0);
    for (int radius = 0; radius <= 6; ++radius) {
        // Enumerate tuples with max-norm exactly `radius`, lexicographically.
        std::vector<int> t(nx_ - 1, -radius);
        while (true) {
            bool on_shell = radius == 0;
            for (int v : t) on_shell = on_shell || v == radius || v == -radius;
            if (on_shell) {
                std::vector<Rational> point;
                point.reserve(nx_);
                for (int v : t) point.emplace_back(v);
                point.emplace_back(1);
                if (!g.evaluate(point).is_zero()) {
                    lam.assign(t.begin(), t.end());
                    goto found;
                }
            }
            int i = nx_ - 2;
            while (i >= 0 && t[i] == radius) t[i--] = -radius;
            if (i < 0) break;
            ++t[i];
        }
    }
    throw ReductionError("no usable pivot found for principal division");

found:
    CoordChange cc;
    cc.fwd.reserve(nx_);
    cc.inv.reserve(nx_);
    for (int i = 0; i < nx_; ++i) {
        Poly xi = Poly::variable(nx_, 0, i);
        if (i != k && lam[i] != 0) {
            Poly xk = Poly::variable(nx_, 0, k);
            cc.fwd.push_back(xi + xk.scaled(Rational(lam[i])));
            cc.inv.push_back(xi - xk.scaled(Rational(lam[i])));
        } else {
            cc.fwd.push_back(xi);
            cc.inv.push_back(xi);
        }
    }
    coord_change_ = std::move(cc);
    pivot_var_ = k;
    Poly gt = g.substitute(coord_change_->fwd);
    if (!scalar_pivot(gt, k)) throw ContractError("coordinate change failed to expose a pivot");
    basis_ = {std::move(gt)};
}

Poly IdealSpec::divide_principal(const Poly& p, const Poly& g, int pivot, Poly* quotient) {
    const int d = g.degree();
    const Rational lead = g.coefficient(pure_power(g.nx(), pivot, d));
    Poly rem = p;
    Poly quo(p.nx(), p.ny());
    while (true) {
        const Monomial* hit = nullptr;
        for (const auto& [mono, coeff] : rem.terms()) {
            (void)coeff;
            if (mono.e[pivot] >= d) {
                hit = &mono;
                break;  // grevlex-largest reducible term (map is sorted)
            }
        }
        if (hit == nullptr) break;
        Monomial q = *hit;
        q.e[pivot] -= d;
        Poly qt = Poly::term(p.nx(), p.ny(), rem.coefficient(*hit) / lead, q);
        quo += qt;
        rem -= qt * g;
    }
    if (quotient != nullptr) *quotient = quo;
    return rem;
}

Poly IdealSpec::normal_form(const Poly& p, const std::vector<Poly>& basis,
                            std::vector<Poly>* quotients, long* budget) const {
    Poly rem(p.nx(), p.ny());
    Poly work = p;
    while (!work.is_zero()) {
        const Monomial& lm = work.leading_monomial();
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!basis[i].leading_monomial().divides(lm)) continue;
            if (budget != nullptr && --*budget < 0)
                throw BudgetError("ideal reduction work budget exhausted");
            Monomial q = basis[i].leading_monomial().quotient_into(lm);
            Poly qt = Poly::term(p.nx(), p.ny(),
                                 work.leading_coefficient() / basis[i].leading_coefficient(), q);
            work -= qt * basis[i];
            if (quotients != nullptr) (*quotients)[i] += qt;
            reduced = true;
            break;
        }
        if (!reduced) {
            Poly lt = Poly::term(p.nx(), p.ny(), work.leading_coefficient(), lm);
            rem += lt;
            work -= lt;
        }
    }
    return rem;
}

void IdealSpec::setup_buchberger(long budget) {
    long fuel = budget < 0 ? (1L << 62) : budget;
    std::vector<Poly> basis;
    for (const auto& g : gens_) basis.push_back(g.scaled(g.leading_coefficient().inv()));

    // Pending S-pairs, processed by (lcm degree, i, j) for determinism.
    using Pair = std::tuple<int, std::size_t, std::size_t>;
    std::set<Pair> pending;
    auto push_pairs_with = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i) {
            Monomial l = basis[i].leading_monomial().lcm(basis[j].leading_monomial());
            pending.emplace(l.degree(), i, j);
        }
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_with(j);

    while (!pending.empty()) {
        auto [ldeg, i, j] = *pending.begin();
        (void)ldeg;
        pending.erase(pending.begin());
        const Monomial li = basis[i].leading_monomial();
        const Monomial lj = basis[j].leading_monomial();
        if (li.coprime(lj)) continue;  // S-poly reduces to zero automatically
        const Monomial l = li.lcm(lj);
        // Chain criterion: a third leading monomial divides the lcm and both
        // of its pairs with i, j are already resolved.
        bool chained = false;
        for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
            if (k == i || k == j) continue;
            if (!basis[k].leading_monomial().divides(l)) continue;
            auto key = [&](std::size_t a, std::size_t b) {
                Monomial m = basis[a].leading_monomial().lcm(basis[b].leading_monomial());
                return Pair(m.degree(), std::min(a, b), std::max(a, b));
            };
            chained = pending.count(key(i, k)) == 0 && pending.count(key(j, k)) == 0;
        }
        if (chained) continue;
        if (--fuel < 0) throw BudgetError("Groebner basis work budget exhausted");

        Monomial qi = li.quotient_into(l);
        Monomial qj = lj.quotient_into(l);
        Poly s = Poly::term(nx_, 0, Rational(1), qi) * basis[i] -
                 Poly::term(nx_, 0, Rational(1), qj) * basis[j];
        Poly r = normal_form(s, basis, nullptr, &fuel);
        if (r.is_zero()) continue;
        basis.push_back(r.scaled(r.leading_coefficient().inv()));
        push_pairs_with(basis.size() - 1);
    }

    // Minimalize: drop elements whose leading monomial another one divides.
    std::vector<Poly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& lj = basis[j].leading_monomial();
            const Monomial& li = basis[i].leading_monomial();
            if (lj.divides(li) && !(li.divides(lj) && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    // Inter-reduce tails; leading terms are untouched by construction.
    std::sort(minimal.begin(), minimal.end(), [](const Poly& a, const Poly& b) {
        return grevlex_greater(b.leading_monomial(), a.leading_monomial());
    });
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<Poly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        minimal[i] = normal_form(minimal[i], others, nullptr, &fuel);
        minimal[i] = minimal[i].scaled(minimal[i].leading_coefficient().inv());
    }
    basis_ = std::move(minimal);
}

Poly IdealSpec::reduce(const Poly& p) const {
    return reduce_with_cofactors(p).remainder;
}

Cofactors IdealSpec::reduce_with_cofactors(const Poly& p) const {
    if (p.nx() != nx_ || p.ny() != 0)
        throw LayoutError("polynomial layout does not match the ideal's");
    if (!p.is_homogeneous()) throw ContractError("reduction expects homogeneous input");
    Cofactors out;
    if (strategy_ == ReductionStrategy::PrincipalDivision) {
        Poly quo;
        if (coord_change_) {
            Poly rem = divide_principal(p.substitute(coord_change_->fwd), basis_[0], pivot_var_,
                                        &quo);
            // p = inv(quo) * g + inv(rem) because substitution is a ring map.
            out.quotients = {quo.substitute(coord_change_->inv)};
            out.remainder = rem.substitute(coord_change_->inv);
        } else {
            out.remainder = divide_principal(p, basis_[0], pivot_var_, &quo);
            out.quotients = {quo};
        }
    } else {
        out.quotients.assign(basis_.size(), Poly(nx_, 0));
        out.remainder = normal_form(p, basis_, &out.quotients, nullptr);
    }
    return out;
}

}  // namespace mhess
