#include "mhess/builders.hpp"

#include <algorithm>
#include <map>

#include "mhess/errors.hpp"
#include "mhess/jet.hpp"

namespace mhess {
namespace {

std::string subset_tag(const std::vector<int>& J) {
    std::string out = "{";
    for (std::size_t t = 0; t < J.size(); ++t) {
        if (t) out += ",";
        out += std::to_string(J[t]);
    }
    return out + "}";
}

std::string exps_tag(const Monomial& mono, char var) {
    std::string out;
    out += var;
    out += "(";
    for (int i = 0; i < mono.nvars(); ++i) {
        if (i) out += ",";
        out += std::to_string(mono.e[i]);
    }
    return out + ")";
}

std::string jet_label(const std::vector<int>& J, const Monomial& alpha) {
    return subset_tag(J) + ":" + exps_tag(alpha, 'y');
}

std::string sec_label(const std::vector<int>& J, const Monomial& beta) {
    return subset_tag(J) + ":" + exps_tag(beta, 'x');
}

std::vector<Monomial> monomials_up_to(int nx, int bound) {
    std::vector<Monomial> out;
    for (int d = 0; d <= bound; ++d)
        for (auto& m : monomials_of_degree(nx, d)) out.push_back(m);
    return out;
}

std::map<std::string, int> label_index(const FreeModule& mod) {
    std::map<std::string, int> out;
    for (int i = 0; i < mod.rank(); ++i) out[mod.gen(i).label] = i;
    return out;
}

// Split a bigraded polynomial into x-only coefficient polynomials keyed by
// the y-part of each monomial (key is an nx-length exponent vector).
std::map<Monomial, Poly, GrevlexGreater> split_by_y(const Poly& p) {
    const int nx = p.nx();
    std::map<Monomial, Poly, GrevlexGreater> out;
    for (const auto& [mono, c] : p.terms()) {
        Monomial xpart(nx), ypart(nx);
        for (int i = 0; i < nx; ++i) {
            xpart.e[i] = mono.e[i];
            ypart.e[i] = mono.e[nx + i];
        }
        auto [it, fresh] = out.try_emplace(ypart, Poly(nx, 0));
        (void)fresh;
        it->second.add_term(xpart, c);
    }
    return out;
}

Monomial to_y_monomial(const Monomial& alpha, int nx) {
    Monomial out(2 * nx);
    for (int i = 0; i < nx; ++i) out.e[nx + i] = alpha.e[i];
    return out;
}

struct JetGen {
    std::vector<int> J;
    Monomial alpha;
};

// Basis of the degree-j term of the order-n jet complex.
std::vector<JetGen> jet_gens(const CurveSpec& curve, int n, int j) {
    std::vector<JetGen> out;
    if (n - j < 0) return out;
    for (const auto& J : subsets_of_size(curve.s(), j))
        for (const auto& alpha : monomials_up_to(curve.nx(), n - j)) out.push_back({J, alpha});
    return out;
}

FreeModule jet_module(const CurveSpec& curve, int m, const std::vector<JetGen>& gens) {
    FreeModule out;
    for (const auto& g : gens)
        out.add(jet_label(g.J, g.alpha), (m - subset_degree(curve, g.J)) - g.alpha.degree());
    return out;
}

struct SecGen {
    std::vector<int> J;
    Monomial beta;
};

std::vector<SecGen> sec_gens(const CurveSpec& curve, int m, int j) {
    std::vector<SecGen> out;
    for (const auto& J : subsets_of_size(curve.s(), j)) {
        const int deg = m - subset_degree(curve, J);
        if (deg < 0) continue;
        for (const auto& beta : monomials_of_degree(curve.nx(), deg)) out.push_back({J, beta});
    }
    return out;
}

// J with position t removed.
std::vector<int> drop_at(const std::vector<int>& J, int t) {
    std::vector<int> out;
    for (int u = 0; u < static_cast<int>(J.size()); ++u)
        if (u != t) out.push_back(J[u]);
    return out;
}

}  // namespace

Complex koszul_jet_complex(const CurveSpec& curve, int m, int n) {
    if (n < 0) throw DomainError("jet complex needs order n >= 0");
    const int nx = curve.nx(), s = curve.s();
    std::vector<std::vector<JetGen>> gens;
    std::vector<FreeModule> terms;
    for (int j = 0; j <= s; ++j) {
        gens.push_back(jet_gens(curve, n, j));
        terms.push_back(jet_module(curve, m, gens[j]));
    }
    std::vector<PolyMatrix> diffs;
    for (int j = 1; j <= s; ++j) {
        PolyMatrix d(terms[j - 1], terms[j], nx);
        auto rows = label_index(terms[j - 1]);
        std::map<std::pair<int, int>, JetElement> delta_cache;  // (form, bound)
        for (int col = 0; col < static_cast<int>(gens[j].size()); ++col) {
            const auto& [J, alpha] = gens[j][col];
            const int bound = n - (j - 1);  // truncation of the target summand
            for (int t = 0; t < j; ++t) {
                const int i = J[t];
                const Rational sign(t % 2 == 0 ? 1 : -1);
                auto [it, fresh] = delta_cache.try_emplace(std::make_pair(i, bound));
                if (fresh) it->second = delta(curve.forms[i - 1], bound);
                JetElement ya(Poly::term(nx, nx, Rational(1), to_y_monomial(alpha, nx)), bound,
                              alpha.degree());
                JetElement prod = truncated_mul(it->second, ya);
                const auto J2 = drop_at(J, t);
                for (const auto& [ypart, xpoly] : split_by_y(prod.poly()))
                    d.add(rows.at(jet_label(J2, ypart)), col, xpoly.scaled(sign));
            }
        }
        diffs.push_back(std::move(d));
    }
    return Complex(std::move(terms), std::move(diffs), nx);
}

Complex global_sections_row(const CurveSpec& curve, int m) {
    const int nx = curve.nx(), s = curve.s();
    std::vector<std::vector<SecGen>> gens;
    std::vector<FreeModule> terms;
    for (int j = 0; j <= s; ++j) {
        gens.push_back(sec_gens(curve, m, j));
        FreeModule mod;
        for (const auto& g : gens[j]) mod.add(sec_label(g.J, g.beta), 0);
        terms.push_back(std::move(mod));
    }
    std::vector<PolyMatrix> diffs;
    for (int j = 1; j <= s; ++j) {
        PolyMatrix d(terms[j - 1], terms[j], nx);
        auto rows = label_index(terms[j - 1]);
        for (int col = 0; col < static_cast<int>(gens[j].size()); ++col) {
            const auto& [J, beta] = gens[j][col];
            for (int t = 0; t < j; ++t) {
                const Rational sign(t % 2 == 0 ? 1 : -1);
                Poly prod = curve.forms[J[t] - 1] * Poly::term(nx, 0, Rational(1), beta);
                const auto J2 = drop_at(J, t);
                for (const auto& [mono, c] : prod.terms())
                    d.add(rows.at(sec_label(J2, mono)), col, Poly::constant(nx, 0, c * sign));
            }
        }
        diffs.push_back(std::move(d));
    }
    return Complex(std::move(terms), std::move(diffs), nx);
}

ComplexMap tau_bar(const CurveSpec& curve, int m, int n) {
    ComplexMap f;
    f.source = global_sections_row(curve, m);
    f.target = koszul_jet_complex(curve, m, n);
    f.shift = 0;
    const int nx = curve.nx(), s = curve.s();
    for (int j = 0; j <= s; ++j) {
        PolyMatrix block(f.target.term(j), f.source.term(j), nx);
        auto rows = label_index(f.target.term(j));
        const auto gens = sec_gens(curve, m, j);
        if (n - j >= 0) {
            for (int col = 0; col < static_cast<int>(gens.size()); ++col) {
                const auto& [J, beta] = gens[col];
                JetElement univ =
                    universal_jet(Poly::term(nx, 0, Rational(1), beta), n - j);
                for (const auto& [ypart, xpoly] : split_by_y(univ.poly()))
                    block.add(rows.at(jet_label(J, ypart)), col, xpoly);
            }
        }
        f.blocks.push_back(std::move(block));
    }
    return f;
}

ComplexMap euler_epsilon_complex_map(const CurveSpec& curve, int m, int n) {
    if (n < 1) throw DomainError("epsilon map needs jet order n >= 1");
    ComplexMap f;
    f.source = koszul_jet_complex(curve, m, n);
    f.target = koszul_jet_complex(curve, m, n - 1);
    f.shift = 0;
    const int nx = curve.nx(), s = curve.s();
    for (int j = 0; j <= s; ++j) {
        PolyMatrix block(f.target.term(j), f.source.term(j), nx);
        auto rows = label_index(f.target.term(j));
        const auto gens = jet_gens(curve, n, j);
        for (int col = 0; col < static_cast<int>(gens.size()); ++col) {
            const auto& [J, alpha] = gens[col];
            const EulerParams params{m - subset_degree(curve, J), n - j};
            JetElement w(Poly::term(nx, nx, Rational(1), to_y_monomial(alpha, nx)), n - j,
                         alpha.degree());
            JetElement out = euler_dual_map(w, params);
            for (const auto& [ypart, xpoly] : split_by_y(out.poly()))
                block.add(rows.at(jet_label(J, ypart)), col, xpoly);
        }
        f.blocks.push_back(std::move(block));
    }
    return f;
}

ComplexMap tau_tilde(const CurveSpec& curve, int m, int n) {
    ComplexMap tb = tau_bar(curve, m, n);
    ComplexMap f;
    f.source = tb.source;
    f.target = cone(euler_epsilon_complex_map(curve, m, n));
    f.shift = 1;
    const int s = curve.s();
    for (int j = 0; j <= s; ++j) {
        PolyMatrix block(f.target.term(j + 1), f.source.term(j), curve.nx());
        auto rows = label_index(f.target.term(j + 1));
        for (const auto& [ij, p] : tb.blocks[j].entries()) {
            const std::string& lab = tb.blocks[j].rows().gen(ij.first).label;
            block.set(rows.at("s:" + lab), ij.second, p);
        }
        f.blocks.push_back(std::move(block));
    }
    return f;
}

int hessian_jet_order(const CurveSpec& curve, int m) {
    return section_rank(curve, m) - 1;
}

Complex hessian_total_complex(const CurveSpec& curve, int m) {
    const int n = hessian_jet_order(curve, m);
    if (n < 1) throw DomainError("pipeline needs section rank at least 2");
    ComplexMap tt = tau_tilde(curve, m, n);
    const Complex& G = tt.source;
    const Complex& C = tt.target;
    const int nx = curve.nx();
    const int top = std::max(G.top_degree() + 2, C.top_degree());
    auto g_term = [&](int k) {
        return k >= 0 && k <= G.top_degree() ? G.term(k).relabeled("g:") : FreeModule();
    };
    auto c_term = [&](int k) {
        return k >= 0 && k <= C.top_degree() ? C.term(k) : FreeModule();
    };
    std::vector<FreeModule> terms;
    for (int k = 0; k <= top; ++k)
        terms.push_back(FreeModule::concat(g_term(k - 2), c_term(k)));
    std::vector<PolyMatrix> diffs;
    for (int k = 1; k <= top; ++k) {
        PolyMatrix d(terms[k - 1], terms[k], nx);
        const int row_off = g_term(k - 3).rank();
        const int col_off = g_term(k - 2).rank();
        if (k - 2 >= 1 && k - 2 <= G.top_degree())  // -d_G into the g rows
            for (const auto& [ij, p] : G.diff(k - 2).entries())
                d.set(ij.first, ij.second, -p);
        if (k - 2 >= 0 && k - 2 <= G.top_degree())  // tau_tilde into the cone rows
            for (const auto& [ij, p] : tt.blocks[k - 2].entries())
                d.set(row_off + ij.first, ij.second, p);
        if (k >= 1 && k <= C.top_degree())  // -d_C into the cone rows
            for (const auto& [ij, p] : C.diff(k).entries())
                d.set(row_off + ij.first, col_off + ij.second, -p);
        diffs.push_back(std::move(d));
    }
    return Complex(std::move(terms), std::move(diffs), nx);
}

Complex total_complex_plane_curve(const Poly& F, int m) {
    CurveSpec curve = make_curve({F}, m);
    if (curve.r != 2) throw DomainError("plane total complex needs a single ternary form");
    if (curve.degrees[0] < 3) throw DomainError("plane curve must have degree at least 3");
    const int n = hessian_jet_order(curve, m);
    if (n < 1) throw DomainError("pipeline needs section rank at least 2");
    const int nx = curve.nx();

    Complex G = global_sections_row(curve, m);
    Complex KN = koszul_jet_complex(curve, m, n);
    Complex KN1 = koszul_jet_complex(curve, m, n - 1);
    ComplexMap tb = tau_bar(curve, m, n);
    ComplexMap eps = euler_epsilon_complex_map(curve, m, n);

    std::vector<FreeModule> terms = {
        KN1.term(0).relabeled("t:"),
        FreeModule::concat(KN.term(0).relabeled("s:"), KN1.term(1).relabeled("t:")),
        FreeModule::concat(G.term(0).relabeled("g:"), KN.term(1).relabeled("s:")),
        G.term(1).relabeled("g:"),
    };

    // d_1 = (.DF + eps): columns P^n(m) then P^{n-2}(m-d).
    PolyMatrix d1(terms[0], terms[1], nx);
    for (const auto& [ij, p] : eps.blocks[0].entries()) d1.set(ij.first, ij.second, p);
    for (const auto& [ij, p] : KN1.diff(1).entries())
        d1.set(ij.first, KN.term(0).rank() + ij.second, p);

    // d_2 = (.DF + tau, -eps): columns H0(m) then P^{n-1}(m-d).
    PolyMatrix d2(terms[1], terms[2], nx);
    for (const auto& [ij, p] : tb.blocks[0].entries()) d2.set(ij.first, ij.second, p);
    for (const auto& [ij, p] : KN.diff(1).entries())
        d2.set(ij.first, G.term(0).rank() + ij.second, p);
    for (const auto& [ij, p] : eps.blocks[1].entries())
        d2.set(KN.term(0).rank() + ij.first, G.term(0).rank() + ij.second, -p);

    // d_3 = (F., -tau): columns H0(m-d).
    PolyMatrix d3(terms[2], terms[3], nx);
    for (const auto& [ij, p] : G.diff(1).entries()) d3.set(ij.first, ij.second, p);
    for (const auto& [ij, p] : tb.blocks[1].entries())
        d3.set(G.term(0).rank() + ij.first, ij.second, -p);

    return Complex(std::move(terms), {std::move(d1), std::move(d2), std::move(d3)}, nx);
}

}  // namespace mhess
