// A complete-intersection curve in P^r: r-1 homogeneous forms F_1..F_{r-1}
// of degrees d_1..d_{r-1} in the r+1 variables x_0..x_r, plus the line-bundle
// twist m the pipeline studies. Also the exact combinatorial formulas tied
// to it: section rank n+1, Hessian degree a, moduli degrees b_j, flex weight.
#pragma once

#include <vector>

#include "mhess/ideal.hpp"
#include "mhess/poly.hpp"

namespace mhess {

struct CurveSpec {
    int r = 0;                 // ambient projective dimension
    std::vector<Poly> forms;   // r-1 forms, x-only, nx = r+1
    std::vector<int> degrees;  // degrees of the forms, all >= 1
    int m = 1;

    int nx() const { return r + 1; }
    int s() const { return r - 1; }  // number of defining forms
    IdealSpec ideal() const { return IdealSpec(forms); }
};

// Validates and derives r and the degrees. Throws on inhomogeneous forms,
// mismatched variable counts, or a form count that does not cut out a curve.
CurveSpec make_curve(std::vector<Poly> forms, int m);

// Subsets of {1, .., s} of the given size, each sorted, in lexicographic
// order; subset_degree is d_J = sum of d_i over i in J.
std::vector<std::vector<int>> subsets_of_size(int s, int j);
int subset_degree(const CurveSpec& curve, const std::vector<int>& J);

// n+1 = sum over all subsets J of (-1)^(|J|) * C(m - d_J + r, r): the rank
// of the pushed-forward sections bundle.
int section_rank(const CurveSpec& curve, int m);

// a = (n+1) m + C(n+1, 2) (sum d_i - r - 1): the ambient degree of the
// rational m-Hessian.
int hessian_degree_a(const CurveSpec& curve, int m);

// b_j = C(n+1, 2) + sum over subsets J containing j of
// (-1)^(|J|) * C(m - d_J + r, r); j is 1-based.
int moduli_degree_b(const CurveSpec& curve, int m, int j);

// deg X = prod d_i; adjunction genus via 2g - 2 = deg X * (sum d_i - r - 1).
long curve_degree(const CurveSpec& curve);
long genus_doubled_minus_2(const CurveSpec& curve);

}  // namespace mhess
