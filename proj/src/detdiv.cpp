#include "mhess/detdiv.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "mhess/errors.hpp"
#include "mhess/modular.hpp"
#include "mhess/oracles.hpp"

namespace mhess {

namespace {

// ---------------------------------------------------------------------------
// numeric determinants over the rationals

// Fraction-free Bareiss after clearing denominators row by row; intermediate
// entries are integer minors, so sizes stay polynomial in the matrix size.
Rational numeric_determinant(const std::vector<std::vector<Rational>>& mat) {
    const int k = static_cast<int>(mat.size());
    if (k == 0) return Rational(1);
    std::vector<std::vector<Int>> a(k, std::vector<Int>(k));
    Int denom(1);
    for (int i = 0; i < k; ++i) {
        if (static_cast<int>(mat[i].size()) != k) throw ContractError("determinant of a non-square matrix");
        Int lcm(1);
        for (int j = 0; j < k; ++j) {
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), mat[i][j].den().get_mpz_t());
        }
        for (int j = 0; j < k; ++j) {
            a[i][j] = mat[i][j].num() * (lcm / mat[i][j].den());
        }
        denom *= lcm;
    }
    int sign = 1;
    Int prev(1);
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        for (int r = col; r < k; ++r) {
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c < k; ++c) {
                Int t = a[col][col] * a[r][c] - a[r][col] * a[col][c];
                if (prev != 1) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[r][c] = std::move(t);
            }
            a[r][col] = 0;
        }
        prev = a[col][col];
    }
    Int det = a[k - 1][k - 1];
    if (sign < 0) det = -det;
    return Rational(det, denom);
}

// ---------------------------------------------------------------------------
// symbolic determinant engines

// Exact quotient num / den in Q[x]; leading-term elimination in grevlex.
// Bareiss guarantees exactness, the throw is a defensive check.
Poly exact_divide(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw ContractError("exact division by zero polynomial");
    if (den.is_constant()) return num.scaled(den.leading_coefficient().inv());
    Poly rem = num;
    Poly quot(num.nx(), num.ny());
    const Monomial dlm = den.leading_monomial();
    const Rational dlc = den.leading_coefficient();
    while (!rem.is_zero()) {
        const Monomial rlm = rem.leading_monomial();
        if (!dlm.divides(rlm)) throw ContractError("inexact polynomial division in Bareiss step");
        const Monomial q = dlm.quotient_into(rlm);
        const Rational c = rem.leading_coefficient() / dlc;
        const Poly qt = Poly::term(num.nx(), num.ny(), c, q);
        quot += qt;
        rem -= qt * den;
    }
    return quot;
}

bool all_entries_constant(const PolyMatrix& m) {
    for (const auto& [pos, p] : m.entries()) {
        if (!p.is_constant()) return false;
    }
    return true;
}

std::vector<std::vector<Rational>> constant_matrix(const PolyMatrix& m) {
    const int rows = m.rows().rank(), cols = m.cols().rank();
    const Monomial one(m.nx());
    std::vector<std::vector<Rational>> out(rows, std::vector<Rational>(cols, Rational(0)));
    for (const auto& [pos, p] : m.entries()) out[pos.first][pos.second] = p.coefficient(one);
    return out;
}

// Coefficients (index = power) of the degree < n polynomial through the
// values at nodes 0, 1, ..., n-1: divided differences, then Newton expansion.
std::vector<Rational> newton_coeffs(std::vector<Rational> dd) {
    const int n = static_cast<int>(dd.size());
    for (int level = 1; level < n; ++level) {
        for (int i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / Rational(level);
        }
    }
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis{Rational(1)};  // prod_{t<j} (x - t)
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i <= j; ++i) coeffs[i] += dd[j] * basis[i];
        if (j + 1 < n) {
            basis.push_back(Rational(0));
            for (int i = j + 1; i >= 1; --i) {
                basis[i] = basis[i - 1] - Rational(j) * basis[i];
            }
            basis[0] = basis[0] * Rational(-j);
        }
    }
    return coeffs;
}

std::vector<int> complement_of(int n, const std::vector<int>& s) {
    std::vector<bool> in(n, false);
    for (int i : s) in.at(i) = true;
    std::vector<int> out;
    for (int i = 0; i < n; ++i) {
        if (!in[i]) out.push_back(i);
    }
    return out;
}

std::vector<int> seeded_permutation(int n, Rng& rng) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        std::swap(perm[i], perm[static_cast<int>(rng.below(i + 1))]);
    }
    return perm;
}

Poly minor_determinant(const PolyMatrix& minor) {
    const int k = minor.rows().rank();
    if (k != minor.cols().rank()) throw ContractError("minor is not square");
    const int nx = minor.nx();
    if (k == 0) return Poly::constant(nx, 0, Rational(1));
    if (all_entries_constant(minor)) {
        const Rational v = numeric_determinant(constant_matrix(minor));
        return Poly::constant(nx, 0, v);
    }
    // Small minors go through fraction-free symbolic elimination; large plane
    // minors through grid evaluation + interpolation, where the homogeneity
    // law pins the determinant's degree.
    if (k <= 12 || nx != 3) {
        std::vector<std::vector<Poly>> mat(k, std::vector<Poly>(k, Poly(nx, 0)));
        for (const auto& [pos, p] : minor.entries()) mat[pos.first][pos.second] = p;
        return bareiss_determinant(std::move(mat), nx);
    }
    return interpolation_determinant(minor);
}

// ---------------------------------------------------------------------------
// chain selection

// Column-greedy Gaussian elimination mod p on the given rows: returns the
// pivot columns (a nonsingular square column subset) or nothing when the rows
// are rank-deficient at this point.
std::optional<std::vector<int>> greedy_pivot_cols(const std::vector<std::vector<std::uint64_t>>& dense,
                                                  const std::vector<int>& row_idx,
                                                  const std::vector<int>& perm, std::uint64_t p) {
    const int r = static_cast<int>(row_idx.size());
    const int n = static_cast<int>(perm.size());
    if (r == 0) return std::vector<int>{};
    std::vector<std::vector<std::uint64_t>> t(r, std::vector<std::uint64_t>(n));
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < n; ++j) t[i][j] = dense[row_idx[i]][j];
    }
    std::vector<int> pivots;
    int done = 0;
    for (int pc : perm) {
        if (done == r) break;
        int pr = -1;
        for (int i = done; i < r; ++i) {
            if (t[i][pc] != 0) {
                pr = i;
                break;
            }
        }
        if (pr < 0) continue;
        std::swap(t[done], t[pr]);
        const std::uint64_t inv = invmod(t[done][pc], p);
        for (int i = done + 1; i < r; ++i) {
            if (t[i][pc] == 0) continue;
            const std::uint64_t f = mulmod(t[i][pc], inv, p);
            for (int j = 0; j < n; ++j) {
                t[i][j] = (t[i][j] + p - mulmod(f, t[done][j], p)) % p;
            }
        }
        pivots.push_back(pc);
        ++done;
    }
    if (done != r) return std::nullopt;
    std::sort(pivots.begin(), pivots.end());
    return pivots;
}

// Depth-first subset search with an exact nonzero certificate and a global
// budget of determinant evaluations; used directly by the exact oracle modes
// and as the authoritative fallback of the modular filter.
struct ExactSearch {
    const Complex& cx;
    const std::vector<int>& ranks;
    std::function<bool(const Poly&)> certify;
    long budget;
    Rng rng;
    std::vector<std::vector<int>> chosen;

    bool descend(int level, const std::vector<int>& rows_avail) {
        if (level > cx.top_degree()) return true;
        const int r = ranks[level - 1];
        const int n = cx.term(level).rank();
        if (static_cast<int>(rows_avail.size()) != r) {
            throw ContractError("row bookkeeping out of step with expected ranks");
        }
        const std::vector<int> perm = seeded_permutation(n, rng);
        std::vector<int> idx(r);
        std::iota(idx.begin(), idx.end(), 0);
        if (r > n) return false;
        while (true) {
            std::vector<int> subset(r);
            for (int i = 0; i < r; ++i) subset[i] = perm[idx[i]];
            std::sort(subset.begin(), subset.end());
            if (--budget < 0) {
                throw DegenerateComplexError("minor selection budget exhausted");
            }
            const PolyMatrix minor = cx.diff(level).submatrix(rows_avail, subset);
            const Poly det = minor_determinant(minor);
            if (!det.is_zero() && certify(det)) {
                chosen[level - 1] = subset;
                if (descend(level + 1, complement_of(n, subset))) return true;
            }
            // next r-combination of {0..n-1} in lexicographic order
            int pos = r - 1;
            while (pos >= 0 && idx[pos] == n - r + pos) --pos;
            if (pos < 0) return false;
            ++idx[pos];
            for (int i = pos + 1; i < r; ++i) idx[i] = idx[i - 1] + 1;
        }
    }
};

std::vector<int> all_indices(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return v;
}

}  // namespace

std::vector<int> expected_ranks(const Complex& cx) {
    const std::vector<int> n = cx.ranks();
    const int top = cx.top_degree();
    long chi = 0;
    for (int k = 0; k <= top; ++k) chi += (k % 2 == 0 ? n[k] : -n[k]);
    if (chi != 0) {
        throw DegenerateComplexError("Euler characteristic is nonzero; no determinant is defined");
    }
    std::vector<int> r(top);
    for (int i = 1; i <= top; ++i) {
        long acc = 0;
        for (int j = top; j >= i; --j) acc = n[j] - acc;
        if (acc < 0) {
            throw DegenerateComplexError("negative expected minor rank; complex cannot be generically exact");
        }
        r[i - 1] = static_cast<int>(acc);
    }
    return r;
}

MinorChain select_minor_chain(const Complex& cx, const NonvanishingOracle& oracle,
                              const CurveSpec* curve) {
    const std::vector<int> ranks = expected_ranks(cx);
    const int top = cx.top_degree();
    MinorChain chain;
    if (top == 0) return chain;

    OracleMode mode = oracle.mode;
    if (mode == OracleMode::ModularPointOnCurve) {
        if (curve == nullptr) {
            throw DomainError("modular nonvanishing oracle needs the curve equations");
        }
        if (oracle.prime <= (1ull << 30)) {
            throw DomainError("modular filter prime must exceed 2^30");
        }
        // The point sampler covers plane curves; other profiles go straight
        // to the exact certificate.
        if (curve->r == 2) {
            Rng rng(oracle.seed);
            for (int attempt = 0; attempt < oracle.max_retries; ++attempt) {
                std::vector<std::uint64_t> point;
                try {
                    point = sample_plane_point_on_curve(*curve, oracle.prime, rng);
                } catch (const ModularError&) {
                    break;  // sampling itself is stuck: exact fallback
                }
                try {
                    std::vector<std::vector<std::vector<std::uint64_t>>> dense;
                    for (int i = 1; i <= top; ++i) {
                        dense.push_back(cx.diff(i).evaluate_mod_p(point, oracle.prime));
                    }
                    std::vector<int> rows = all_indices(cx.term(0).rank());
                    std::vector<std::vector<int>> cols;
                    bool ok = true;
                    for (int i = 1; i <= top; ++i) {
                        const int n_i = cx.term(i).rank();
                        const std::vector<int> perm = seeded_permutation(n_i, rng);
                        auto picked = greedy_pivot_cols(dense[i - 1], rows, perm, oracle.prime);
                        if (!picked) {
                            ok = false;  // rank fell at this point: redraw
                            break;
                        }
                        cols.push_back(*picked);
                        rows = complement_of(n_i, *picked);
                    }
                    if (ok) {
                        chain.cols = std::move(cols);
                        return chain;
                    }
                } catch (const ModularError&) {
                    // a denominator met the prime at this point: redraw
                }
            }
        }
        mode = OracleMode::ExactReduction;
    }

    std::function<bool(const Poly&)> certify;
    std::optional<IdealSpec> ideal;
    if (mode == OracleMode::ExactReduction) {
        if (curve == nullptr) {
            throw DomainError("exact-reduction nonvanishing oracle needs the curve ideal");
        }
        ideal.emplace(curve->forms);
        certify = [&ideal](const Poly& det) { return !ideal->reduce(det).is_zero(); };
    } else {
        certify = [](const Poly&) { return true; };  // nonzero already checked
    }

    ExactSearch search{cx, ranks, certify, 20000, Rng(oracle.seed ^ 0x51ab5ull), {}};
    search.chosen.resize(top);
    if (!search.descend(1, all_indices(cx.term(0).rank()))) {
        throw DegenerateComplexError("no nonvanishing minor chain exists under this oracle");
    }
    chain.cols = std::move(search.chosen);
    return chain;
}

Poly bareiss_determinant(std::vector<std::vector<Poly>> mat, int nx) {
    const int k = static_cast<int>(mat.size());
    if (k == 0) return Poly::constant(nx, 0, Rational(1));
    for (const auto& row : mat) {
        if (static_cast<int>(row.size()) != k) throw ContractError("determinant of a non-square matrix");
    }
    int sign = 1;
    Poly prev = Poly::constant(nx, 0, Rational(1));
    for (int col = 0; col < k; ++col) {
        int pivot = -1;
        std::size_t best_terms = 0;
        for (int r = col; r < k; ++r) {
            if (mat[r][col].is_zero()) continue;
            const std::size_t t = mat[r][col].term_count();
            if (pivot < 0 || t < best_terms) {
                pivot = r;
                best_terms = t;
            }
        }
        if (pivot < 0) return Poly(nx, 0);
        if (pivot != col) {
            std::swap(mat[pivot], mat[col]);
            sign = -sign;
        }
        for (int r = col + 1; r < k; ++r) {
            for (int c = col + 1; c < k; ++c) {
                Poly t = mat[col][col] * mat[r][c] - mat[r][col] * mat[col][c];
                mat[r][c] = exact_divide(t, prev);
            }
            mat[r][col] = Poly(nx, 0);
        }
        prev = mat[col][col];
    }
    Poly det = mat[k - 1][k - 1];
    if (sign < 0) det = -det;
    return det;
}

Poly interpolation_determinant(const PolyMatrix& minor) {
    const int nx = minor.nx();
    if (nx != 3) throw DomainError("interpolation determinant is implemented for three variables");
    const int k = minor.rows().rank();
    if (k != minor.cols().rank()) throw ContractError("minor is not square");
    if (const auto bad = minor.homogeneity_violation()) {
        throw ContractError("interpolation needs the homogeneity law: " + *bad);
    }
    const long n_deg = minor.rows().twist_sum() - minor.cols().twist_sum();
    if (n_deg < 0) return Poly(nx, 0);
    const int N = static_cast<int>(n_deg);

    // Dehomogenize at x0 = 1 and evaluate on the (N+1) x (N+1) integer grid.
    std::vector<std::vector<Rational>> values(N + 1, std::vector<Rational>(N + 1));
    std::vector<std::vector<Rational>> mat(k, std::vector<Rational>(k));
    for (int a = 0; a <= N; ++a) {
        for (int b = 0; b <= N; ++b) {
            const std::vector<Rational> point{Rational(1), Rational(a), Rational(b)};
            for (auto& row : mat) std::fill(row.begin(), row.end(), Rational(0));
            for (const auto& [pos, p] : minor.entries()) {
                mat[pos.first][pos.second] = p.evaluate(point);
            }
            values[a][b] = numeric_determinant(mat);
        }
    }
    // Two-pass Newton interpolation: along x2 for each a, then along x1.
    std::vector<std::vector<Rational>> c_aj(N + 1);
    for (int a = 0; a <= N; ++a) c_aj[a] = newton_coeffs(values[a]);
    Poly det(nx, 0);
    for (int j = 0; j <= N; ++j) {
        std::vector<Rational> column(N + 1);
        for (int a = 0; a <= N; ++a) column[a] = c_aj[a][j];
        const std::vector<Rational> e_i = newton_coeffs(column);
        for (int i = 0; i <= N; ++i) {
            if (e_i[i].is_zero()) continue;
            if (i + j > N) {
                throw ContractError("interpolated determinant exceeds its predicted degree");
            }
            Monomial mono(nx);
            mono.e[0] = N - i - j;
            mono.e[1] = i;
            mono.e[2] = j;
            det.add_term(mono, e_i[i]);
        }
    }
    return det;
}

RationalSection determinant_of_complex(const Complex& cx, const MinorChain& chain) {
    const std::vector<int> ranks = expected_ranks(cx);
    const int top = cx.top_degree();
    if (static_cast<int>(chain.cols.size()) != top) {
        throw ContractError("minor chain length does not match the number of differentials");
    }
    const int nx = cx.nx();
    Poly a = Poly::constant(nx, 0, Rational(1));
    Poly b = Poly::constant(nx, 0, Rational(1));
    std::vector<int> rows = all_indices(cx.term(0).rank());
    for (int i = 1; i <= top; ++i) {
        const std::vector<int>& s = chain.cols[i - 1];
        if (static_cast<int>(s.size()) != ranks[i - 1]) {
            throw ContractError("minor chain level has the wrong size");
        }
        const PolyMatrix minor = cx.diff(i).submatrix(rows, s);
        const Poly det = minor_determinant(minor);
        if (det.is_zero()) throw StaleChainError("a selected minor vanished identically");
        if (i % 2 == 1) {
            a = a * det;
        } else {
            b = b * det;
        }
        rows = complement_of(cx.term(i).rank(), s);
    }
    if (!rows.empty()) {
        throw ContractError("minor chain does not exhaust the top term");
    }
    RationalSection out;
    out.ambient_degree = a.degree() - b.degree();
    out.a = std::move(a);
    out.b = std::move(b);
    return out;
}

Rational determinant_functor_bruteforce(const Complex& cx) {
    const int top = cx.top_degree();
    const std::vector<int> n = cx.ranks();
    const std::vector<int> ranks = expected_ranks(cx);
    std::vector<std::vector<std::vector<Rational>>> d(top + 1);
    for (int i = 1; i <= top; ++i) {
        if (!all_entries_constant(cx.diff(i))) {
            throw ContractError("brute-force determinant functor needs constant entries");
        }
        d[i] = constant_matrix(cx.diff(i));
    }
    // Greedily pick, for each differential, a column subset mapping to a basis
    // of the image (Gauss over Q), then form the change-of-basis matrices.
    std::vector<std::vector<int>> img_cols(top + 1);
    for (int i = 1; i <= top; ++i) {
        const int rows = n[i - 1], cols = n[i];
        std::vector<std::pair<int, std::vector<Rational>>> echelon;
        for (int c = 0; c < cols && static_cast<int>(img_cols[i].size()) < ranks[i - 1]; ++c) {
            std::vector<Rational> v(rows, Rational(0));
            for (int r = 0; r < rows; ++r) v[r] = d[i][r][c];
            for (const auto& [pr, vec] : echelon) {
                if (!v[pr].is_zero()) {
                    const Rational f = v[pr] / vec[pr];
                    for (int r = 0; r < rows; ++r) v[r] -= f * vec[r];
                }
            }
            int pr = -1;
            for (int r = 0; r < rows; ++r) {
                if (!v[r].is_zero()) {
                    pr = r;
                    break;
                }
            }
            if (pr < 0) continue;
            echelon.emplace_back(pr, std::move(v));
            img_cols[i].push_back(c);
        }
        if (static_cast<int>(img_cols[i].size()) != ranks[i - 1]) {
            throw DegenerateComplexError("complex is not exact: image rank fell short");
        }
    }
    Rational tau(1);
    for (int k = 0; k <= top; ++k) {
        const int dim = n[k];
        const int rho_up = (k < top) ? ranks[k] : 0;   // rank of d_{k+1}
        const int rho_dn = (k >= 1) ? ranks[k - 1] : 0;  // rank of d_k
        if (rho_up + rho_dn != dim) {
            throw DegenerateComplexError("complex is not exact: dimensions do not split");
        }
        std::vector<std::vector<Rational>> m(dim, std::vector<Rational>(dim, Rational(0)));
        for (int c = 0; c < rho_up; ++c) {
            const int src_col = img_cols[k + 1][c];
            for (int r = 0; r < dim; ++r) m[r][c] = d[k + 1][r][src_col];
        }
        for (int c = 0; c < rho_dn; ++c) {
            m[img_cols[k][c]][rho_up + c] = Rational(1);
        }
        const Rational det = numeric_determinant(m);
        if (det.is_zero()) throw DegenerateComplexError("complex is not exact: adapted basis is singular");
        if (k % 2 == 0) {
            tau = tau * det;
        } else {
            tau = tau / det;
        }
    }
    return tau;
}

RationalSection hessian_div(const CurveSpec& curve, int m, const NonvanishingOracle& oracle) {
    const Complex cx = (curve.r == 2) ? total_complex_plane_curve(curve.forms[0], m)
                                      : hessian_total_complex(curve, m);
    RationalSection engine;
    bool got = false;
    const int tries = std::max(1, oracle.max_retries);
    for (int t = 0; t < tries && !got; ++t) {
        NonvanishingOracle o = oracle;
        o.seed = oracle.seed + 1000003ull * static_cast<std::uint64_t>(t);
        const MinorChain chain = select_minor_chain(cx, o, &curve);
        try {
            engine = determinant_of_complex(cx, chain);
            got = true;
        } catch (const StaleChainError&) {
            continue;  // reselect with a shifted seed
        }
    }
    if (!got) throw DegenerateComplexError("every selected minor chain went stale");
    // The alternating product lands in degree minus the divisor degree; the
    // divisor section is its reciprocal.
    RationalSection out;
    out.a = std::move(engine.b);
    out.b = std::move(engine.a);
    out.ambient_degree = -engine.ambient_degree;
    if (out.ambient_degree != hessian_degree_a(curve, m)) {
        throw ContractError("divisor section degree disagrees with the degree formula");
    }
    return out;
}

CompareResult compare_on_curve(const RationalSection& s1, const RationalSection& s2,
                               const IdealSpec& ideal) {
    if (s1.ambient_degree != s2.ambient_degree) {
        throw ContractError("sections of different ambient degree are never proportional");
    }
    const Poly r1 = ideal.reduce(s1.a * s2.b);
    const Poly r2 = ideal.reduce(s2.a * s1.b);
    if (r1.is_zero() && r2.is_zero()) {
        throw IndeterminateError("both cross products vanish on the curve");
    }
    if (r1.is_zero() || r2.is_zero()) return {false, Rational(0)};
    if (r1.leading_monomial() != r2.leading_monomial()) return {false, Rational(0)};
    const Rational c = r1.leading_coefficient() / r2.leading_coefficient();
    const Poly diff = r1 - r2.scaled(c);
    if (!diff.is_zero()) return {false, Rational(0)};
    return {true, c};
}

Rational resultant_via_div(const Poly& f0, const Poly& f1, int m, std::uint64_t seed) {
    for (const Poly* f : {&f0, &f1}) {
        if (f->nx() != 2 || f->ny() != 0) {
            throw LayoutError("resultant expects binary forms in two variables");
        }
        if (f->is_zero() || !f->is_homogeneous()) {
            throw ContractError("resultant expects nonzero homogeneous forms");
        }
        if (f->degree() < 1) throw DomainError("resultant expects forms of positive degree");
    }
    const int d0 = f0.degree(), d1 = f1.degree();
    if (m < d0 + d1 - 1) {
        throw DomainError("section degree is too small for an exact section complex");
    }
    const auto tag = [](const std::string& prefix, const Monomial& mono) {
        return prefix + ":x(" + std::to_string(mono.e[0]) + "," + std::to_string(mono.e[1]) + ")";
    };
    const std::vector<Monomial> deg_m = monomials_of_degree(2, m);
    const std::vector<Monomial> deg_a = monomials_of_degree(2, m - d0);
    const std::vector<Monomial> deg_b = monomials_of_degree(2, m - d1);
    const std::vector<Monomial> deg_ab = monomials_of_degree(2, m - d0 - d1);

    FreeModule t0, t1, t2;
    std::map<Monomial, int, GrevlexGreater> row0, row_a, row_b;
    for (const auto& mono : deg_m) {
        row0[mono] = t0.rank();
        t0.add(tag("{}", mono), 0);
    }
    for (const auto& mono : deg_a) {
        row_a[mono] = t1.rank();
        t1.add(tag("{1}", mono), 0);
    }
    for (const auto& mono : deg_b) {
        row_b[mono] = t1.rank();
        t1.add(tag("{2}", mono), 0);
    }
    for (const auto& mono : deg_ab) t2.add(tag("{1,2}", mono), 0);

    PolyMatrix d1m(t0, t1, 2), d2m(t1, t2, 2);
    for (const auto& [mono, col] : row_a) {
        const Poly prod = f0 * Poly::term(2, 0, Rational(1), mono);
        for (const auto& [pm, c] : prod.terms()) d1m.add(row0.at(pm), col, Poly::constant(2, 0, c));
    }
    for (const auto& [mono, col] : row_b) {
        const Poly prod = f1 * Poly::term(2, 0, Rational(1), mono);
        for (const auto& [pm, c] : prod.terms()) d1m.add(row0.at(pm), col, Poly::constant(2, 0, c));
    }
    for (int col = 0; col < static_cast<int>(deg_ab.size()); ++col) {
        const Poly base = Poly::term(2, 0, Rational(1), deg_ab[col]);
        const Poly p0 = f0 * base, p1 = f1 * base;
        // Koszul square: +f0 into the {2} block, -f1 into the {1} block.
        for (const auto& [pm, c] : p0.terms()) d2m.add(row_b.at(pm), col, Poly::constant(2, 0, c));
        for (const auto& [pm, c] : p1.terms()) d2m.add(row_a.at(pm), col, Poly::constant(2, 0, -c));
    }
    const Complex cx({t0, t1, t2}, {std::move(d1m), std::move(d2m)}, 2);

    NonvanishingOracle oracle;
    oracle.mode = OracleMode::ExactGeneric;
    oracle.seed = seed;
    MinorChain chain;
    try {
        chain = select_minor_chain(cx, oracle, nullptr);
    } catch (const DegenerateComplexError&) {
        return Rational(0);  // shared root: the section complex is inexact
    }
    const RationalSection sec = determinant_of_complex(cx, chain);
    if (!sec.a.is_constant() || !sec.b.is_constant()) {
        throw ContractError("resultant complex produced a non-constant determinant");
    }
    const Monomial one(2);
    return sec.a.coefficient(one) / sec.b.coefficient(one);
}

}  // namespace mhess
