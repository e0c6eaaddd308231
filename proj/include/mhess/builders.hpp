// Builders for every complex in the pipeline: the truncated Koszul jet
// complex, the global-sections Koszul row, the jet-evaluation chain map
// tau_bar, the Euler dual map of complexes epsilon, the shifted-cone map
// tau_tilde, and the total complexes whose determinant is the rational
// m-Hessian (a general cone route and the explicit plane-curve route).
#pragma once

#include "mhess/curve.hpp"
#include "mhess/freemodule.hpp"

namespace mhess {

// Degree-j term has basis (J, y^alpha) over subsets J of {1..s} with
// |J| = j and |alpha| <= n - j; generator twist (m - d_J) - |alpha|.
// Differential: Koszul contraction signs times multiplication by
// Delta(F_i) into the one-higher truncation. d*d = 0 exactly.
Complex koszul_jet_complex(const CurveSpec& curve, int m, int n);

// Degree-j term: x-monomial bases of H0(O(m - d_J)) over |J| = j, all
// twists 0; differential = Koszul signs times multiplication by F_i
// (scalar entries). d*d = 0 exactly.
Complex global_sections_row(const CurveSpec& curve, int m);

// Degree-0-shift map from the sections row to the jet complex: x^beta in
// the J-summand goes to its universal jet of order n - j. Commutes with
// the differentials modulo the curve ideal.
ComplexMap tau_bar(const CurveSpec& curve, int m, int n);

// Blockwise Euler dual maps (E - (m - d_J))* from the order-n jet complex
// to the order-(n-1) one; commutes modulo the curve ideal only.
ComplexMap euler_epsilon_complex_map(const CurveSpec& curve, int m, int n);

// tau_bar followed by the inclusion into cone(epsilon) as a degree-1 map
// (blocks land in the order-n summand, padded by zero rows); satisfies the
// graded anticommutation d * block = -block * d modulo the curve ideal.
ComplexMap tau_tilde(const CurveSpec& curve, int m, int n);

// The jet order the pipeline uses: section_rank(curve, m) - 1.
int hessian_jet_order(const CurveSpec& curve, int m);

// Total complex for any r: term k = sections_{k-2} (+) cone(epsilon)_k with
// differential (g, c) -> (-d g, -d c + tau_tilde(g)); d*d = 0 mod the ideal.
Complex hessian_total_complex(const CurveSpec& curve, int m);

// The explicit 4-term plane-curve complex
//   H0(m-d) -> H0(m) (+) P^{n-1}(m-d) -> P^n(m) (+) P^{n-2}(m-d) -> P^{n-1}(m)
// with blocks (F. , -tau), (.DF + tau, -eps), (.DF + eps) as written; equals
// hessian_total_complex up to negating the first and third differentials.
Complex total_complex_plane_curve(const Poly& F, int m);

}  // namespace mhess
