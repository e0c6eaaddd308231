// Truncated jet calculus in A[y]/(y)^{n+1}: polars with divided-power
// normalization, the universal jet F(x+y), Delta-operators, the Euler
// contraction and its dual maps, and the two splitting formulas (the
// lambda-series inverse of the top projection and the t-series section).
#pragma once

#include "mhess/poly.hpp"

namespace mhess {

struct EulerParams {
    int m = 0;  // bundle twist: the constant in (E - m)*
    int n = 0;  // jet order, n >= 0
};

// An element of the order-bound jet module. poly has layout (nx, nx); every
// term has y-degree <= order_bound. twist records the bidegree bookkeeping:
// for a homogeneous jet every term satisfies x-degree + y-degree = twist.
class JetElement {
  public:
    JetElement() = default;
    JetElement(Poly p, int order_bound, int twist);

    const Poly& poly() const { return poly_; }
    int order_bound() const { return order_bound_; }
    int twist() const { return twist_; }

    bool is_zero() const { return poly_.is_zero(); }
    Poly y_component(int j) const { return poly_.y_component(j); }
    Poly top_component() const { return poly_.y_component(order_bound_); }

    // Throws ContractError when some term violates x-deg + y-deg == twist.
    void check_bidegree() const;

    JetElement operator+(const JetElement& o) const;
    JetElement operator-(const JetElement& o) const;
    JetElement scaled(const Rational& c) const;

  private:
    Poly poly_;
    int order_bound_ = 0;
    int twist_ = 0;
};

// p^j(F) = sum over |alpha| = j of taylor_coefficient(F, alpha) * y^alpha;
// zero when j > deg F. F must be homogeneous and x-only.
JetElement polar(const Poly& F, int j);

// F(x+y) truncated at y-degree n = sum of polar(F, j) for j = 0..n.
JetElement universal_jet(const Poly& F, int n);

// delta(F, n) = universal_jet(F, n) - F; every term has y-degree >= 1.
JetElement delta(const Poly& F, int n);

// Product truncated at the min of the operand bounds; the Poly overload
// (x-only factor) preserves the bound.
JetElement truncated_mul(const JetElement& a, const JetElement& b);
JetElement truncated_mul(const JetElement& a, const Poly& q);

// epsilon(y^beta) = sum over beta_i >= 1 of beta_i * x_i * y^(beta - e_i),
// extended A-linearly; lowers y-degree by one, raises x-degree by one.
JetElement euler_contract(const JetElement& w);

// (E - m)*: order-bound-n input to order-bound-(n-1) output whose y-degree-j
// component is epsilon(w_{j+1}) + (j - m) * w_j, for 0 <= j <= n-1.
JetElement euler_dual_map(const JetElement& w, const EulerParams& params);

// lambda_j(m, n) = prod over i = n-j..n-1 of (m - i)^{-1}; defined when
// m < n-j or m >= n, otherwise DomainError. lambda_0 = 1.
Rational lambda_coeff(int m, int n, int j);

// Splitting of the top projection: w_top purely of y-degree n maps to
// sum of lambda_j(m,n) * epsilon^j(w_top); requires m < 0 or m >= n.
JetElement phi_inverse(const JetElement& w_top, const EulerParams& params);

// t(w_m) = sum over i = 0..m of epsilon^i(w_m) / i!, for w_m purely of
// y-degree m with 0 <= m < n; lands in ker(E - m)* with zero top component.
JetElement t_map(const JetElement& w_bottom, const EulerParams& params);

}  // namespace mhess
