// Determinant of a based complex of graded free modules, computed as an
// alternating product of interlocking minors, plus the two consumers:
// the m-Hessian divisor section and the resultant of two binary forms.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mhess/builders.hpp"
#include "mhess/curve.hpp"
#include "mhess/freemodule.hpp"

namespace mhess {

// How a candidate minor is certified nonzero where it matters.
//  - ExactReduction:      nonzero after reduction mod the curve ideal (authoritative).
//  - ModularPointOnCurve: nonzero when evaluated at a sampled F_p-point of the
//                         curve (fast filter; degenerate draws are retried and
//                         the exact test is the fallback).
//  - ExactGeneric:        plain nonzero test, for constant-entry complexes.
enum class OracleMode { ExactReduction, ModularPointOnCurve, ExactGeneric };

struct NonvanishingOracle {
    OracleMode mode = OracleMode::ModularPointOnCurve;
    std::uint64_t prime = 2147483647ull;  // must exceed 2^30 in modular mode
    std::uint64_t seed = 0;
    int max_retries = 8;  // fresh point draws before falling back to exact
};

// Column subsets S_1..S_L, one per differential, each sorted ascending.
// Level i uses rows complement(S_{i-1}) of term_{i-1} (S_0 = empty).
struct MinorChain {
    std::vector<std::vector<int>> cols;
};

// Homogeneous numerator/denominator pair representing a rational section of a
// twist of the structure sheaf; ambient_degree = deg A - deg B.
struct RationalSection {
    Poly a;  // numerator
    Poly b;  // denominator
    int ambient_degree = 0;
};

struct CompareResult {
    bool match = false;
    Rational scale;  // A1*B2 = scale * A2*B1 on the curve when match
};

// Sizes r_i of the interlocking minors, index i-1 for differential d_i:
// r_i = sum_{j >= i} (-1)^{j-i} rank(term_j). Throws DegenerateComplexError
// when the Euler characteristic is nonzero or some r_i is negative.
std::vector<int> expected_ranks(const Complex& cx);

// Picks column subsets level by level so that every square minor is nonzero
// under the oracle. `curve` supplies the ideal / the equations for point
// sampling; it may be null only in ExactGeneric mode. Deterministic per seed.
// Throws DegenerateComplexError when no chain is found within the budget.
MinorChain select_minor_chain(const Complex& cx, const NonvanishingOracle& oracle,
                              const CurveSpec* curve = nullptr);

// Fraction-free determinant of a square polynomial matrix (Bareiss).
Poly bareiss_determinant(std::vector<std::vector<Poly>> mat, int nx);

// Determinant of a square graded minor through evaluation at an integer grid
// and Newton interpolation; requires nx == 3 and the homogeneity law
// deg entry(i,j) = twist(row_i) - twist(col_j), which forces det homogeneous
// of degree sum(row twists) - sum(col twists).
Poly interpolation_determinant(const PolyMatrix& minor);

// Alternating product prod_i det(d_i[comp S_{i-1}, S_i])^{(-1)^(i+1)},
// returned as numerator (odd i) over denominator (even i). A selected minor
// that evaluates to exactly zero raises StaleChainError.
RationalSection determinant_of_complex(const Complex& cx, const MinorChain& chain);

// Brute-force determinant of an exact constant complex via adapted bases
// (torsion): independent cross-check for the minor-chain engine, small ranks.
Rational determinant_functor_bruteforce(const Complex& cx);

// The m-Hessian divisor section of a smooth complete-intersection curve:
// Div of the Hessian total complex, inverted so ambient_degree equals the
// predicted divisor degree 'a'. Retries stale chains a bounded number of times.
RationalSection hessian_div(const CurveSpec& curve, int m, const NonvanishingOracle& oracle);

// Decides A1/B1 = c * A2/B2 on the curve: reduces A1*B2 and A2*B1 mod the
// ideal and compares up to the scalar c recovered from leading coefficients.
// Both products reducing to zero raises IndeterminateError.
CompareResult compare_on_curve(const RationalSection& s1, const RationalSection& s2,
                               const IdealSpec& ideal);

// Resultant of two binary forms via the Div of the three-term section complex
// 0 -> H0(m-d0-d1) -> H0(m-d0) + H0(m-d1) -> H0(m) on the projective line.
// Needs m >= d0 + d1 - 1; the boundary case is the square Sylvester-size one.
// A common root makes the complex inexact and the resultant zero.
Rational resultant_via_div(const Poly& f0, const Poly& f1, int m, std::uint64_t seed = 0);

}  // namespace mhess
