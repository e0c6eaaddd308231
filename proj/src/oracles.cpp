#include "mhess/oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <utility>

#include "mhess/detdiv.hpp"
#include "mhess/errors.hpp"

namespace mhess {

// ---------------------------------------------------------------------------
// curve bookkeeping and the printed degree formulas

CurveSpec make_curve(std::vector<Poly> forms, int m) {
    if (forms.empty()) throw DomainError("a curve needs at least one defining form");
    const int nx = forms[0].nx();
    CurveSpec c;
    c.r = nx - 1;
    c.m = m;
    if (c.r < 2 || static_cast<int>(forms.size()) != c.r - 1) {
        throw DomainError("form count does not cut out a curve in this ambient space");
    }
    for (const Poly& f : forms) {
        if (f.ny() != 0) throw LayoutError("defining forms must be x-only");
        if (f.nx() != nx) throw LayoutError("defining forms live in different ambient spaces");
        if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) {
            throw DomainError("defining forms must be nonzero homogeneous of positive degree");
        }
        c.degrees.push_back(f.degree());
    }
    c.forms = std::move(forms);
    return c;
}

std::vector<std::vector<int>> subsets_of_size(int s, int j) {
    std::vector<std::vector<int>> out;
    if (j < 0 || j > s) return out;
    std::vector<int> cur(j);
    for (int i = 0; i < j; ++i) cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        if (j == 0) break;
        int pos = j - 1;
        while (pos >= 0 && cur[pos] == s - (j - 1 - pos)) --pos;
        if (pos < 0) break;
        ++cur[pos];
        for (int i = pos + 1; i < j; ++i) cur[i] = cur[i - 1] + 1;
    }
    return out;
}

int subset_degree(const CurveSpec& curve, const std::vector<int>& J) {
    int d = 0;
    for (int idx : J) d += curve.degrees.at(idx - 1);
    return d;
}

int section_rank(const CurveSpec& curve, int m) {
    const int s = curve.s(), r = curve.r;
    long acc = 0;
    for (int j = 0; j <= s; ++j) {
        const long sign = (j % 2 == 0) ? 1 : -1;
        for (const auto& J : subsets_of_size(s, j)) {
            acc += sign * binomial(m - subset_degree(curve, J) + r, r).get_si();
        }
    }
    return static_cast<int>(acc);
}

int hessian_degree_a(const CurveSpec& curve, int m) {
    const long n1 = section_rank(curve, m);
    long dsum = 0;
    for (int d : curve.degrees) dsum += d;
    return static_cast<int>(n1 * m + binomial(n1, 2).get_si() * (dsum - curve.r - 1));
}

int moduli_degree_b(const CurveSpec& curve, int m, int j) {
    const int s = curve.s(), r = curve.r;
    if (j < 1 || j > s) throw DomainError("moduli degree index out of range");
    const long n1 = section_rank(curve, m);
    long acc = binomial(n1, 2).get_si();
    for (int size = 1; size <= s; ++size) {
        const long sign = (size % 2 == 0) ? 1 : -1;
        for (const auto& J : subsets_of_size(s, size)) {
            if (std::find(J.begin(), J.end(), j) == J.end()) continue;
            acc += sign * binomial(m - subset_degree(curve, J) + r, r).get_si();
        }
    }
    return static_cast<int>(acc);
}

long curve_degree(const CurveSpec& curve) {
    long deg = 1;
    for (int d : curve.degrees) deg *= d;
    return deg;
}

long genus_doubled_minus_2(const CurveSpec& curve) {
    long dsum = 0;
    for (int d : curve.degrees) dsum += d;
    return curve_degree(curve) * (dsum - curve.r - 1);
}

DegreeReport degree_report(const CurveSpec& curve) {
    DegreeReport rep;
    rep.rank_n_plus_1 = section_rank(curve, curve.m);
    rep.ambient_degree_a = hessian_degree_a(curve, curve.m);
    for (int j = 1; j <= curve.s(); ++j) {
        rep.moduli_degrees_b.push_back(moduli_degree_b(curve, curve.m, j));
    }
    rep.total_flex_weight = static_cast<long>(rep.ambient_degree_a) * curve_degree(curve);
    return rep;
}

// ---------------------------------------------------------------------------
// classical oracles

Poly classical_hessian(const Poly& f) {
    if (f.nx() != 3 || f.ny() != 0) throw LayoutError("classical Hessian expects a plane form");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 2) {
        throw DomainError("classical Hessian expects a homogeneous form of degree at least 2");
    }
    Poly h[3][3];
    for (int i = 0; i < 3; ++i) {
        const Poly di = f.derivative(i);
        for (int j = 0; j < 3; ++j) h[i][j] = di.derivative(j);
    }
    return h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1]) -
           h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0]) +
           h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0]);
}

namespace {

Rational rational_det(std::vector<std::vector<Rational>> m) {
    const int n = static_cast<int>(m.size());
    Rational det(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(m[pivot], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rational f = m[r][col] / m[col][col];
            for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    return det;
}

// Ascending coefficients of the dehomogenization F(x0 = t, x1 = 1).
std::vector<Rational> ascending_coeffs(const Poly& f) {
    std::vector<Rational> a(f.degree() + 1, Rational(0));
    for (const auto& [mono, c] : f.terms()) a.at(mono.e[0]) = c;
    return a;
}

}  // namespace

Rational sylvester_resultant(const Poly& f0, const Poly& f1) {
    for (const Poly* f : {&f0, &f1}) {
        if (f->nx() != 2 || f->ny() != 0) {
            throw LayoutError("Sylvester resultant expects binary forms");
        }
        if (f->is_zero() || !f->is_homogeneous() || f->degree() < 1) {
            throw DomainError("Sylvester resultant expects nonzero forms of positive degree");
        }
    }
    const int d0 = f0.degree(), d1 = f1.degree();
    const std::vector<Rational> a = ascending_coeffs(f0), b = ascending_coeffs(f1);
    const int n = d0 + d1;
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < d1; ++i) {
        for (int k = 0; k <= d0; ++k) m[i][i + k] = a[k];
    }
    for (int i = 0; i < d0; ++i) {
        for (int k = 0; k <= d1; ++k) m[d1 + i][i + k] = b[k];
    }
    return rational_det(std::move(m));
}

TriState smoothness_check(const CurveSpec& curve, long budget) {
    const int nx = curve.nx(), s = curve.s();
    std::vector<Poly> gens = curve.forms;
    // Maximal minors of the Jacobian: one per size-s column subset.
    for (const auto& colset : subsets_of_size(nx, s)) {
        std::vector<std::vector<Poly>> jac(s, std::vector<Poly>(s, Poly(nx, 0)));
        for (int a = 0; a < s; ++a) {
            for (int b = 0; b < s; ++b) {
                jac[a][b] = curve.forms[a].derivative(colset[b] - 1);
            }
        }
        Poly minor = bareiss_determinant(std::move(jac), nx);
        if (!minor.is_zero()) gens.push_back(std::move(minor));
    }
    try {
        IdealSpec ideal(std::move(gens), ReductionStrategy::Buchberger, budget);
        for (int var = 0; var < nx; ++var) {
            bool pure = false;
            for (const Poly& g : ideal.basis_used()) {
                const Monomial lm = g.leading_monomial();
                if (lm.e[var] == 0) continue;
                bool others = false;
                for (int i = 0; i < nx; ++i) {
                    if (i != var && lm.e[i] != 0) {
                        others = true;
                        break;
                    }
                }
                if (!others) {
                    pure = true;
                    break;
                }
            }
            if (!pure) return TriState::False;
        }
        return TriState::True;
    } catch (const BudgetError&) {
        return TriState::Unknown;
    }
}

// ---------------------------------------------------------------------------
// branches and the series Wronskian

template <typename K>
BranchChart<K> branch_chart(const Poly& f, const std::vector<K>& point, int order) {
    if (f.nx() != 3 || f.ny() != 0) throw LayoutError("branch parameterization expects a plane form");
    if (f.is_zero() || !f.is_homogeneous() || f.degree() < 1) {
        throw DomainError("branch parameterization expects a nonzero form of positive degree");
    }
    if (static_cast<int>(point.size()) != 3) throw LayoutError("a projective point needs 3 coordinates");
    if (order < 1) throw DomainError("truncation order must be at least 1");
    if (!(evaluate_poly(f, point) == K(0))) throw ContractError("point is not on the curve");

    int chart = -1;
    for (int i = 0; i < 3 && chart < 0; ++i) {
        if (!(point[i] == K(0))) chart = i;
    }
    if (chart < 0) throw ContractError("the zero vector is not a projective point");
    const int u_index = (chart == 0) ? 1 : 0;
    const int v_index = (chart == 2) ? 1 : 2;

    const K scale = K(1) / point[chart];
    const K u0 = point[u_index] * scale;
    const K v0 = point[v_index] * scale;

    // Affine chart polynomial g(u, v) = f with x_chart = 1.
    Poly g(2, 0);
    for (const auto& [mono, c] : f.terms()) {
        Monomial e(2);
        e.e[0] = mono.e[u_index];
        e.e[1] = mono.e[v_index];
        g.add_term(e, c);
    }
    const Poly gu = g.derivative(0), gv = g.derivative(1);
    const K gu0 = evaluate_poly(gu, std::vector<K>{u0, v0});
    const K gv0 = evaluate_poly(gv, std::vector<K>{u0, v0});
    if (gu0 == K(0) && gv0 == K(0)) {
        throw SingularPointError("both partials vanish: singular point of the curve");
    }
    // Solve for the coordinate with nonzero partial; the other is base + t.
    const bool solve_v = !(gv0 == K(0));
    const K solved0 = solve_v ? v0 : u0;
    const K free0 = solve_v ? u0 : v0;
    const Poly& gprime = solve_v ? gv : gu;

    const int target = order + 1;
    const auto free_series = [&free0](int prec) {
        TruncatedSeries<K> s = TruncatedSeries<K>::constant(free0, prec);
        if (prec >= 2) s.set(1, K(1));
        return s;
    };
    TruncatedSeries<K> solved = TruncatedSeries<K>::constant(solved0, 1);
    int prec = 1;
    while (prec < target) {
        prec = std::min(2 * prec, target);
        solved = solved.extended(prec);
        const TruncatedSeries<K> freev = free_series(prec);
        const std::vector<TruncatedSeries<K>> xs =
            solve_v ? std::vector<TruncatedSeries<K>>{freev, solved}
                    : std::vector<TruncatedSeries<K>>{solved, freev};
        const TruncatedSeries<K> num = evaluate_at_series(g, xs);
        const TruncatedSeries<K> den = evaluate_at_series(gprime, xs);
        solved = solved - num * den.inverse();
    }
    BranchChart<K> out;
    out.chart = chart;
    out.u_index = u_index;
    out.v_index = v_index;
    out.u = solve_v ? free_series(target) : solved;
    out.v = solve_v ? solved : free_series(target);
    if (!evaluate_at_series(g, std::vector<TruncatedSeries<K>>{out.u, out.v}).is_zero()) {
        throw ContractError("branch residual did not vanish to the requested order");
    }
    return out;
}

std::pair<TruncatedSeries<Rational>, TruncatedSeries<Rational>> branch_parameterize(
    const Poly& f, const std::vector<Rational>& point, int order) {
    BranchChart<Rational> b = branch_chart<Rational>(f, point, order);
    return {std::move(b.u), std::move(b.v)};
}

template <typename K>
int wronskian_weight_t(const Poly& f, int m, const std::vector<K>& point, int order) {
    const CurveSpec curve = make_curve({f}, m);
    const int n1 = section_rank(curve, m);
    const int n = n1 - 1;
    if (n < 0) throw DomainError("no sections at this twist");
    const std::vector<Monomial> monos = monomials_of_degree(3, m);
    if (static_cast<int>(monos.size()) != n1) {
        throw DomainError("monomial sections are not a basis at this twist");
    }
    if (order < n + 1) throw PrecisionError("truncation order is below the Wronskian size");

    const BranchChart<K> branch = branch_chart<K>(f, point, order);
    const int target = order + 1;
    std::vector<TruncatedSeries<K>> xs(3, TruncatedSeries<K>::constant(K(1), target));
    xs[branch.u_index] = branch.u;
    xs[branch.v_index] = branch.v;

    std::vector<std::vector<TruncatedSeries<K>>> w(n1);
    for (int j = 0; j < n1; ++j) {
        w[0].push_back(evaluate_at_series(Poly::term(3, 0, Rational(1), monos[j]), xs));
    }
    for (int k = 1; k < n1; ++k) {
        for (int j = 0; j < n1; ++j) w[k].push_back(w[k - 1][j].derivative());
    }
    // Laplace expansion over column subsets, memoized by the used-column mask;
    // row index = popcount(mask).
    std::map<unsigned, TruncatedSeries<K>> memo;
    const std::function<TruncatedSeries<K>(unsigned)> expand =
        [&](unsigned used) -> TruncatedSeries<K> {
        const int row = __builtin_popcount(used);
        if (row == n1) return TruncatedSeries<K>::constant(K(1), target);
        const auto it = memo.find(used);
        if (it != memo.end()) return it->second;
        TruncatedSeries<K> acc(target);
        int parity = 0;
        for (int c = 0; c < n1; ++c) {
            if (used & (1u << c)) continue;
            const TruncatedSeries<K> sub = expand(used | (1u << c));
            const TruncatedSeries<K> term = w[row][c] * sub;
            acc = (parity % 2 == 0) ? acc + term : acc - term;
            ++parity;
        }
        memo.emplace(used, acc);
        return acc;
    };
    const TruncatedSeries<K> det = expand(0u);
    const int det_prec = det.precision();
    const int val = det.valuation();
    if (val >= det_prec || val + 3 >= det_prec) {
        throw PrecisionError("truncation order too small to certify the flex weight");
    }
    return val;
}

int wronskian_weight(const Poly& f, int m, const std::vector<Rational>& point, int order) {
    return wronskian_weight_t<Rational>(f, m, point, order);
}

template BranchChart<Rational> branch_chart<Rational>(const Poly&, const std::vector<Rational>&,
                                                      int);
template BranchChart<Eisenstein> branch_chart<Eisenstein>(const Poly&,
                                                          const std::vector<Eisenstein>&, int);
template int wronskian_weight_t<Rational>(const Poly&, int, const std::vector<Rational>&, int);
template int wronskian_weight_t<Eisenstein>(const Poly&, int, const std::vector<Eisenstein>&, int);

}  // namespace mhess
