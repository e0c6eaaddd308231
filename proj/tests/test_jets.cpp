#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>
#include <vector>

#include "mhess/jet.hpp"
#include "mhess/modular.hpp"
#include "mhess/poly.hpp"
#include "mhess/textio.hpp"

using namespace mhess;

namespace {

Poly P(const std::string& text, int nx, int ny = 0) { return parse_poly(text, nx, ny); }

Poly fermat_cubic() { return P("x0^3 + x1^3 + x2^3", 3); }

Poly random_form(int nx, int d, Rng& rng) {
    auto monos = monomials_of_degree(nx, d);
    Poly p(nx, 0);
    for (const auto& mo : monos) {
        long c = static_cast<long>(rng.below(11)) - 5;
        if (c != 0) p.add_term(mo, Rational(c));
    }
    if (p.is_zero()) p.add_term(monos.front(), Rational(1));
    return p;
}

// A jet element purely of y-degree yd whose coefficients are random x-forms
// of degree xd, so the whole element is homogeneous of twist xd + yd.
JetElement random_pure_element(int nx, int xd, int yd, int bound, Rng& rng) {
    Poly p(nx, nx);
    for (const auto& alpha : monomials_of_degree(nx, yd)) {
        Poly coeff = random_form(nx, xd, rng).with_jet_vars();
        Monomial ya(2 * nx);
        for (int i = 0; i < nx; ++i) ya.e[nx + i] = alpha.e[i];
        p += coeff * Poly::term(nx, nx, Rational(1), ya);
    }
    return JetElement(p, bound, xd + yd);
}

JetElement apply_contract(JetElement w, int times) {
    for (int i = 0; i < times; ++i) w = euler_contract(w);
    return w;
}

}  // namespace

TEST_CASE("polar forms of the Fermat cubic") {
    Poly f = fermat_cubic();
    JetElement p0 = polar(f, 0);
    CHECK(p0.poly() == f.with_jet_vars());
    CHECK(p0.order_bound() == 0);
    CHECK(p0.twist() == 3);
    CHECK(polar(f, 1).poly() == P("3*x0^2*y0 + 3*x1^2*y1 + 3*x2^2*y2", 3, 3));
    CHECK(polar(f, 2).poly() == P("3*x0*y0^2 + 3*x1*y1^2 + 3*x2*y2^2", 3, 3));
    CHECK(polar(f, 3).poly() == P("y0^3 + y1^3 + y2^3", 3, 3));
    CHECK(polar(f, 4).is_zero());
    for (int j = 0; j <= 3; ++j) polar(f, j).check_bidegree();
}

TEST_CASE("polar rejects inhomogeneous input") {
    CHECK_THROWS_AS(polar(P("x0^2 + x1", 2), 1), DomainError);
}

TEST_CASE("universal jet collects all polars and delta drops the constant one") {
    Poly f = fermat_cubic();
    JetElement uj = universal_jet(f, 2);
    Poly expect(3, 3);
    for (int j = 0; j <= 2; ++j) expect += polar(f, j).poly();
    CHECK(uj.poly() == expect);
    CHECK(uj.order_bound() == 2);
    CHECK(uj.twist() == 3);
    uj.check_bidegree();
    JetElement d = delta(f, 2);
    CHECK(d.poly() == expect - f.with_jet_vars());
    CHECK(d.poly().y_component(0).is_zero());
    // Truncation: order 5 keeps everything for a cubic; order 0 is F itself.
    CHECK(universal_jet(f, 5).poly() == universal_jet(f, 3).poly());
    CHECK(universal_jet(f, 0).poly() == f.with_jet_vars());
}

TEST_CASE("euler contraction carries the multiplicity of the lowered exponent") {
    // eps(y0^2 y1) = 2 x0 y0 y1 + x1 y0^2.
    JetElement w(P("y0^2*y1", 3, 3), 3, 3);
    CHECK(euler_contract(w).poly() == P("2*x0*y0*y1 + x1*y0^2", 3, 3));
    // eps is A-linear and kills y-degree zero.
    JetElement c(P("x0*x1", 3, 3), 2, 2);
    CHECK(euler_contract(c).is_zero());
    JetElement sum(P("y0^2*y1 + x2*y0^2", 3, 3), 3, 3);
    CHECK(euler_contract(sum).poly() ==
          P("2*x0*y0*y1 + x1*y0^2 + 2*x0*x2*y0", 3, 3));
}

TEST_CASE("polar-Euler identity: contracting the (j+1)-polar gives (d-j) times the j-polar") {
    Rng rng(101);
    for (int trial = 0; trial < 40; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(3));
        int d = 1 + static_cast<int>(rng.below(4));
        Poly f = random_form(nx, d, rng);
        for (int j = 0; j <= d; ++j) {
            JetElement lhs = euler_contract(polar(f, j + 1));
            JetElement rhs = polar(f, j).scaled(Rational(d - j));
            CHECK(lhs.poly() == rhs.poly());
        }
        // j = 0 specializes to the classical Euler identity.
        CHECK(euler_contract(polar(f, 1)).poly() == f.with_jet_vars().scaled(Rational(d)));
    }
}

TEST_CASE("jet annihilation: the universal jet lies in ker (E - deg F)*") {
    Rng rng(103);
    for (int trial = 0; trial < 40; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(3));
        int d = 1 + static_cast<int>(rng.below(4));
        int n = 1 + static_cast<int>(rng.below(5));
        Poly f = random_form(nx, d, rng);
        JetElement uj = universal_jet(f, n);
        CHECK(euler_dual_map(uj, {d, n}).is_zero());
        // A-linearity: multiplying by a form keeps the kernel membership.
        Poly q = random_form(nx, 1 + static_cast<int>(rng.below(2)), rng);
        CHECK(euler_dual_map(truncated_mul(uj, q), {d, n}).is_zero());
    }
}

TEST_CASE("euler dual map acts as plain contraction on pure top elements") {
    Rng rng(107);
    for (int trial = 0; trial < 10; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(2));
        int n = 1 + static_cast<int>(rng.below(4));
        JetElement w = random_pure_element(nx, 1, n, n, rng);
        for (int m : {-2, -1, 0, n, n + 3}) {
            JetElement out = euler_dual_map(w, {m, n});
            CHECK(out.order_bound() == n - 1);
            CHECK(out.poly() == euler_contract(w).poly());
        }
    }
}

TEST_CASE("euler dual map components follow the defining formula") {
    Rng rng(109);
    int nx = 3, n = 3, m = 1;
    // Mixed element: sum of pure pieces of several y-degrees.
    Poly mixed(nx, nx);
    for (int yd = 0; yd <= n; ++yd)
        mixed += random_pure_element(nx, n - yd + 1, yd, n, rng).poly();
    JetElement w(mixed, n, n + 1);
    JetElement out = euler_dual_map(w, {m, n});
    for (int j = 0; j < n; ++j) {
        Poly wj = w.poly().y_component(j);
        Poly wj1 = w.poly().y_component(j + 1);
        JetElement lifted(wj1, n, n + 1);
        Poly expect = euler_contract(lifted).poly() + wj.scaled(Rational(j - m));
        CHECK(out.poly().y_component(j) == expect);
    }
    CHECK(out.poly().y_component(n).is_zero());
}

TEST_CASE("lambda coefficients: frozen values and the excluded band") {
    CHECK(lambda_coeff(5, 3, 0) == Rational(1));
    CHECK(lambda_coeff(-7, 4, 0) == Rational(1));
    CHECK(lambda_coeff(3, 2, 1) == Rational(1, 2));
    for (int n = 1; n <= 5; ++n)
        for (int j = 0; j <= n; ++j)
            CHECK(lambda_coeff(n, n, j) == Rational(Int(1), factorial(j)));
    // m in [n-j, n-1] hits a zero factor and must be rejected.
    CHECK_THROWS_AS(lambda_coeff(2, 3, 2), DomainError);
    CHECK_THROWS_AS(lambda_coeff(1, 3, 3), DomainError);
    CHECK_THROWS_AS(lambda_coeff(2, 3, 1), DomainError);
    // Just outside the band is fine.
    CHECK(lambda_coeff(0, 3, 2) == Rational(1, 2));
    CHECK(lambda_coeff(-1, 3, 3) == Rational(-1, 6));
    CHECK(lambda_coeff(-1, 2, 2) == Rational(1, 2));
}

TEST_CASE("phi splits the top projection for m outside [0, n)") {
    Rng rng(113);
    for (int trial = 0; trial < 20; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(2));
        int n = 1 + static_cast<int>(rng.below(4));
        int xd = static_cast<int>(rng.below(3));
        JetElement w = random_pure_element(nx, xd, n, n, rng);
        for (int m : {n, n + 1, n + 2, -1, -2}) {
            JetElement lift = phi_inverse(w, {m, n});
            // Section of the top projection...
            CHECK(lift.top_component() == w.top_component());
            // ... landing in the kernel of the Euler dual map.
            CHECK(euler_dual_map(lift, {m, n}).is_zero());
        }
    }
}

TEST_CASE("phi_inverse reproduces the universal jet of a form of matching degree") {
    Rng rng(127);
    for (int trial = 0; trial < 8; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(2));
        int n = 1 + static_cast<int>(rng.below(3));
        int m = n + static_cast<int>(rng.below(2));  // deg F = m >= n
        Poly f = random_form(nx, m, rng);
        JetElement top = polar(f, n);
        JetElement lift = phi_inverse(JetElement(top.poly(), n, m), {m, n});
        CHECK(lift.poly() == universal_jet(f, n).poly());
    }
}

TEST_CASE("t map splits the bottom inclusion for 0 <= m < n") {
    Rng rng(131);
    for (int trial = 0; trial < 20; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(2));
        int n = 1 + static_cast<int>(rng.below(4));
        int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        JetElement w = random_pure_element(nx, 1 + static_cast<int>(rng.below(2)), m, n, rng);
        JetElement img = t_map(w, {m, n});
        CHECK(euler_dual_map(img, {m, n}).is_zero());
        CHECK(img.top_component().is_zero());
        // The y-degree-m component is w itself (the i = 0 summand).
        CHECK(img.poly().y_component(m) == w.poly().y_component(m));
    }
    // Tiny hand instance: m = 1, n = 2, w = c y0 gives w + x0 c.
    JetElement w(P("y0", 2, 2), 2, 1);
    CHECK(t_map(w, {1, 2}).poly() == P("y0 + x0", 2, 2));
}

TEST_CASE("iterated contraction kills the top of jet-generated kernel elements") {
    Rng rng(137);
    for (int trial = 0; trial < 20; ++trial) {
        int nx = 2 + static_cast<int>(rng.below(2));
        int n = 2 + static_cast<int>(rng.below(3));
        int m = static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        // Kernel elements of (E - m)* built from jets: multiples of the
        // universal jet of a degree-m form plus t-map images.
        Poly sigma = random_form(nx, m, rng);
        JetElement ker1 = truncated_mul(universal_jet(sigma, n),
                                        random_form(nx, 1, rng));
        JetElement ker2 =
            t_map(random_pure_element(nx, 1, m, n, rng), {m, n});
        for (const JetElement& ker : {ker1, ker2}) {
            CHECK(euler_dual_map(ker, {m, n}).is_zero());
            JetElement top(ker.poly().y_component(n), n, ker.twist());
            CHECK(apply_contract(top, n - m).is_zero());
        }
    }
}

TEST_CASE("truncated products track bounds and twists") {
    Poly f = fermat_cubic();
    JetElement a = universal_jet(f, 3);
    JetElement b = universal_jet(P("x0*x1 + x2^2", 3), 2);
    JetElement ab = truncated_mul(a, b);
    CHECK(ab.order_bound() == 2);
    CHECK(ab.twist() == 5);
    ab.check_bidegree();
    CHECK(ab.poly().max_y_degree() <= 2);
    // Against the full product truncated by hand.
    Poly full = a.poly() * b.poly();
    CHECK(ab.poly() == full.truncate_y(2));
    // x-only factor keeps the bound.
    JetElement ax = truncated_mul(a, P("x1", 3));
    CHECK(ax.order_bound() == 3);
    CHECK(ax.twist() == 4);
}

TEST_CASE("bidegree violations are caught") {
    JetElement bad(P("x0 + y0^2", 3, 3), 2, 1);
    CHECK_THROWS_AS(bad.check_bidegree(), ContractError);
    JetElement good(P("x0*y1 + x2*y0", 3, 3), 1, 2);
    CHECK_NOTHROW(good.check_bidegree());
}
