#include "mhess/jet.hpp"

#include "mhess/errors.hpp"

namespace mhess {
namespace {

void require_x_only_homogeneous(const Poly& F, const char* who) {
    if (F.ny() != 0 && F.has_y_terms())
        throw LayoutError(std::string(who) + ": input must be free of jet variables");
    if (!F.is_homogeneous())
        throw DomainError(std::string(who) + ": input must be homogeneous");
}

Poly promote(const Poly& F) { return F.ny() == 0 ? F.with_jet_vars() : F; }

}  // namespace

JetElement::JetElement(Poly p, int order_bound, int twist)
    : poly_(std::move(p)), order_bound_(order_bound), twist_(twist) {
    if (order_bound_ < 0) throw DomainError("jet order bound must be nonnegative");
    if (poly_.ny() != poly_.nx()) throw LayoutError("jet polynomial needs x and y variables");
    if (poly_.max_y_degree() > order_bound_)
        throw ContractError("jet term exceeds the order bound");
}

void JetElement::check_bidegree() const {
    for (const auto& [mono, coeff] : poly_.terms()) {
        (void)coeff;
        if (mono.degree() != twist_)
            throw ContractError("jet term violates the bidegree law");
    }
}

JetElement JetElement::operator+(const JetElement& o) const {
    if (order_bound_ != o.order_bound_ || twist_ != o.twist_)
        throw ContractError("jet addition needs matching order bound and twist");
    return JetElement(poly_ + o.poly_, order_bound_, twist_);
}

JetElement JetElement::operator-(const JetElement& o) const {
    return *this + o.scaled(Rational(-1));
}

JetElement JetElement::scaled(const Rational& c) const {
    return JetElement(poly_.scaled(c), order_bound_, twist_);
}

JetElement polar(const Poly& F, int j) {
    require_x_only_homogeneous(F, "polar");
    if (j < 0) throw DomainError("polar order must be nonnegative");
    const int nx = F.nx();
    const int d = F.is_zero() ? 0 : F.degree();
    Poly out(nx, nx);
    if (!F.is_zero() && j <= d) {
        for (const Monomial& alpha : monomials_of_degree(nx, j)) {
            Poly t = F.taylor_coefficient(alpha);
            if (t.is_zero()) continue;
            Monomial ya(2 * nx);
            for (int i = 0; i < nx; ++i) ya.e[nx + i] = alpha.e[i];
            out += t.with_jet_vars() * Poly::term(nx, nx, Rational(1), ya);
        }
    }
    return JetElement(std::move(out), j, d);
}

JetElement universal_jet(const Poly& F, int n) {
    require_x_only_homogeneous(F, "universal_jet");
    if (n < 0) throw DomainError("jet order must be nonnegative");
    const int nx = F.nx();
    const int d = F.is_zero() ? 0 : F.degree();
    Poly out(nx, nx);
    for (int j = 0; j <= n && j <= d; ++j) out += polar(F, j).poly();
    return JetElement(std::move(out), n, d);
}

JetElement delta(const Poly& F, int n) {
    JetElement jet = universal_jet(F, n);
    return JetElement(jet.poly() - promote(F), n, jet.twist());
}

JetElement truncated_mul(const JetElement& a, const JetElement& b) {
    const int bound = std::min(a.order_bound(), b.order_bound());
    Poly prod = a.poly() * b.poly();
    return JetElement(prod.truncate_y(bound), bound, a.twist() + b.twist());
}

JetElement truncated_mul(const JetElement& a, const Poly& q) {
    if (q.ny() != 0 ? q.has_y_terms() : false)
        throw LayoutError("truncated_mul: polynomial factor must be x-only");
    Poly prod = a.poly() * promote(q);
    const int dq = q.is_zero() ? 0 : (q.is_homogeneous() ? q.degree() : 0);
    return JetElement(prod.truncate_y(a.order_bound()), a.order_bound(), a.twist() + dq);
}

JetElement euler_contract(const JetElement& w) {
    const int nx = w.poly().nx();
    Poly out(nx, nx);
    for (const auto& [mono, coeff] : w.poly().terms()) {
        for (int i = 0; i < nx; ++i) {
            const int bi = mono.e[nx + i];
            if (bi == 0) continue;
            Monomial shifted = mono;
            shifted.e[nx + i] -= 1;
            shifted.e[i] += 1;
            out.add_term(shifted, coeff * Rational(bi));
        }
    }
    return JetElement(std::move(out), std::max(w.order_bound() - 1, 0), w.twist());
}

JetElement euler_dual_map(const JetElement& w, const EulerParams& params) {
    if (params.n < 0) throw DomainError("jet order must be nonnegative");
    if (w.order_bound() != params.n)
        throw ContractError("euler_dual_map: order bound must equal params.n");
    const int nx = w.poly().nx();
    const int n = params.n;
    Poly out(nx, nx);
    for (int j = 0; j + 1 <= n; ++j) {
        JetElement up(w.y_component(j + 1), n, w.twist());
        out += euler_contract(up).poly().y_component(j);
        out += w.y_component(j).scaled(Rational(j - params.m));
    }
    return JetElement(std::move(out), std::max(n - 1, 0), w.twist());
}

Rational lambda_coeff(int m, int n, int j) {
    if (j < 0 || j > n) throw DomainError("lambda index out of range");
    if (!(m < n - j || m >= n))
        throw DomainError("lambda coefficient undefined for these parameters");
    Rational out(1);
    for (int i = n - j; i <= n - 1; ++i) out = out / Rational(m - i);
    return out;
}

JetElement phi_inverse(const JetElement& w_top, const EulerParams& params) {
    if (!(params.m < 0 || params.m >= params.n))
        throw DomainError("top-projection splitting needs m < 0 or m >= n");
    const int n = params.n;
    if (w_top.order_bound() != n)
        throw ContractError("phi_inverse: order bound must equal params.n");
    for (int j = 0; j < n; ++j)
        if (!w_top.y_component(j).is_zero())
            throw ContractError("phi_inverse: input must be purely of top y-degree");
    Poly out(w_top.poly().nx(), w_top.poly().nx());
    JetElement power = w_top;  // epsilon^j(w_top)
    for (int j = 0; j <= n; ++j) {
        out += power.poly().scaled(lambda_coeff(params.m, n, j));
        if (j < n) power = euler_contract(power);
    }
    return JetElement(std::move(out), n, w_top.twist());
}

JetElement t_map(const JetElement& w_bottom, const EulerParams& params) {
    const int m = params.m, n = params.n;
    if (!(0 <= m && m < n)) throw DomainError("t-splitting needs 0 <= m < n");
    for (int j = 0; j <= w_bottom.order_bound(); ++j)
        if (j != m && !w_bottom.y_component(j).is_zero())
            throw ContractError("t_map: input must be purely of y-degree m");
    const int nx = w_bottom.poly().nx();
    Poly out(nx, nx);
    JetElement power(w_bottom.poly(), n, w_bottom.twist());
    for (int i = 0; i <= m; ++i) {
        out += power.poly().scaled(Rational(1) / Rational(factorial(i)));
        if (i < m) power = euler_contract(power);
    }
    return JetElement(std::move(out), n, w_bottom.twist());
}

}  // namespace mhess
