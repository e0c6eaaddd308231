// Independent ground truth: degree/rank formulas, the classical Hessian
// determinant, Sylvester resultants, branch parameterization by Newton
// iteration, flex weights via a power-series Wronskian, and a best-effort
// smoothness check. Everything here deliberately avoids the minor-chain
// pipeline so the two routes stay independent.
#pragma once

#include <utility>
#include <vector>

#include "mhess/curve.hpp"
#include "mhess/series.hpp"

namespace mhess {

struct DegreeReport {
    int rank_n_plus_1 = 0;
    int ambient_degree_a = 0;
    std::vector<int> moduli_degrees_b;  // one per defining form, 1-based origin
    long total_flex_weight = 0;         // ambient_degree_a * deg X
};

DegreeReport degree_report(const CurveSpec& curve);

// det of the 3x3 matrix of second partials; homogeneous of degree 3(d-2).
Poly classical_hessian(const Poly& f);

// Determinant of the (d0+d1) x (d0+d1) Sylvester matrix of the
// dehomogenizations at x1 = 1, rows listing coefficients by ascending
// x0-power. Fixed sign convention: (x0 - x1, x0 + x1) -> -2.
Rational sylvester_resultant(const Poly& f0, const Poly& f1);

enum class TriState { True, False, Unknown };

// Empty-singular-locus test: Groebner basis of (forms, maximal minors of the
// Jacobian) must show a pure power of every variable among its leading terms.
// Budget caps Buchberger work; exceeding it yields Unknown.
TriState smoothness_check(const CurveSpec& curve, long budget = 400000);

// A branch of a plane curve through a smooth point, in the affine chart of
// the first nonzero coordinate: x_chart = 1, x_{u_index} = u(t),
// x_{v_index} = v(t), with u_index < v_index and t a valuation-1 local
// parameter (the free coordinate is base + t). Newton iteration doubles the
// solved coordinate's precision each round; the residual is asserted to
// vanish mod t^(order+1).
template <typename K>
struct BranchChart {
    int chart = 0;
    int u_index = 1;
    int v_index = 2;
    TruncatedSeries<K> u, v;
};

template <typename K>
BranchChart<K> branch_chart(const Poly& f, const std::vector<K>& point, int order);

// Spec-facing wrapper: the two affine coordinate series (u(t), v(t)).
std::pair<TruncatedSeries<Rational>, TruncatedSeries<Rational>> branch_parameterize(
    const Poly& f, const std::vector<Rational>& point, int order);

// Flex weight of the degree-m monomial sections at a smooth point of a plane
// curve: the t-valuation of the (n+1) x (n+1) Wronskian along the branch,
// rows d^k/dt^k for k = 0..n. Certified only when at least three coefficient
// slots beyond the valuation sit below the truncation bound; otherwise
// PrecisionError (retry with a larger order).
template <typename K>
int wronskian_weight_t(const Poly& f, int m, const std::vector<K>& point, int order);

int wronskian_weight(const Poly& f, int m, const std::vector<Rational>& point, int order);

extern template BranchChart<Rational> branch_chart<Rational>(const Poly&,
                                                             const std::vector<Rational>&, int);
extern template BranchChart<Eisenstein> branch_chart<Eisenstein>(const Poly&,
                                                                 const std::vector<Eisenstein>&,
                                                                 int);
extern template int wronskian_weight_t<Rational>(const Poly&, int, const std::vector<Rational>&,
                                                 int);
extern template int wronskian_weight_t<Eisenstein>(const Poly&, int,
                                                   const std::vector<Eisenstein>&, int);

}  // namespace mhess
