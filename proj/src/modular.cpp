#include "mhess/modular.hpp"

#include <algorithm>

#include "mhess/errors.hpp"

namespace mhess {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    a %= p;
    if (a == 0) throw ModularError("inverse of zero mod p");
    // p is prime, so Fermat suffices and avoids signed gymnastics.
    return powmod(a, p - 2, p);
}

std::uint64_t Rng::next() {
    // splitmix64
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

std::uint64_t Rng::below(std::uint64_t n) {
    if (n == 0) throw ModularError("Rng::below(0)");
    // Rejection sampling keeps the draw unbiased and deterministic per seed.
    std::uint64_t limit = ~0ull - (~0ull % n);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % n;
}

namespace {

void trim(UniPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree_of(const UniPoly& f) { return static_cast<int>(f.size()) - 1; }

UniPoly mul(const UniPoly& a, const UniPoly& b, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    UniPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            c[i + j] = (c[i + j] + mulmod(a[i], b[j], p)) % p;
        }
    }
    trim(c);
    return c;
}

UniPoly rem(UniPoly a, const UniPoly& b, std::uint64_t p) {
    trim(a);
    if (b.empty()) throw ModularError("univariate remainder by zero");
    std::uint64_t lead_inv = invmod(b.back(), p);
    while (a.size() >= b.size()) {
        std::uint64_t q = mulmod(a.back(), lead_inv, p);
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            std::uint64_t sub = mulmod(q, b[i], p);
            a[off + i] = (a[off + i] + p - sub) % p;
        }
        trim(a);
        if (a.empty()) break;
    }
    return a;
}

UniPoly gcd(UniPoly a, UniPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UniPoly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        std::uint64_t inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

// t^e mod f by square-and-multiply on residues.
UniPoly power_of_t_mod(std::uint64_t e, const UniPoly& f, std::uint64_t p) {
    UniPoly result{1};
    UniPoly base{0, 1};
    base = rem(base, f, p);
    while (e) {
        if (e & 1) result = rem(mul(result, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

UniPoly poly_pow_mod(UniPoly base, std::uint64_t e, const UniPoly& f, std::uint64_t p) {
    UniPoly result{1};
    base = rem(std::move(base), f, p);
    while (e) {
        if (e & 1) result = rem(mul(result, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

// g is monic, squarefree, and splits into distinct linear factors.
void split_linear(const UniPoly& g, std::uint64_t p, Rng& rng, std::vector<std::uint64_t>& out) {
    int d = degree_of(g);
    if (d <= 0) return;
    if (d == 1) {
        // monic t + c: root is -c
        out.push_back((p - g[0]) % p);
        return;
    }
    // Equal-degree splitting for degree-one factors: gcd((t+a)^((p-1)/2) - 1, g)
    // splits off the roots x with chi(x + a) = 1; a random shift separates
    // some pair of roots with probability about 1/2.
    for (int attempt = 0; attempt < 128; ++attempt) {
        std::uint64_t a = rng.below(p);
        UniPoly shifted{a, 1};
        UniPoly h = poly_pow_mod(shifted, (p - 1) / 2, g, p);
        if (h.empty()) continue;
        h[0] = (h[0] + p - 1) % p;
        trim(h);
        UniPoly factor = gcd(h, g, p);
        int fd = degree_of(factor);
        if (fd <= 0 || fd >= d) continue;
        // Exact quotient g / factor; the remainder is zero by construction.
        UniPoly q;
        {
            UniPoly num = g;
            std::uint64_t lead_inv = invmod(factor.back(), p);
            q.assign(num.size() - factor.size() + 1, 0);
            while (num.size() >= factor.size() && !num.empty()) {
                std::uint64_t c = mulmod(num.back(), lead_inv, p);
                std::size_t off = num.size() - factor.size();
                q[off] = c;
                for (std::size_t i = 0; i < factor.size(); ++i) {
                    std::uint64_t sub = mulmod(c, factor[i], p);
                    num[off + i] = (num[off + i] + p - sub) % p;
                }
                trim(num);
            }
        }
        trim(q);
        split_linear(factor, p, rng, out);
        split_linear(q, p, rng, out);
        return;
    }
    throw ModularError("equal-degree splitting did not converge");
}

}  // namespace

std::vector<std::uint64_t> unipoly_roots(const UniPoly& f_in, std::uint64_t p, Rng& rng) {
    UniPoly f = f_in;
    trim(f);
    if (f.empty()) throw ModularError("root finding on the zero polynomial");
    if (degree_of(f) == 0) return {};
    // Product of (t - x) over roots x: gcd(t^p - t, f).
    UniPoly tp = power_of_t_mod(p, f, p);
    // subtract t
    if (tp.size() < 2) tp.resize(2, 0);
    tp[1] = (tp[1] + p - 1) % p;
    trim(tp);
    UniPoly g = gcd(tp, f, p);
    std::vector<std::uint64_t> roots;
    split_linear(g, p, rng, roots);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

UniPoly restrict_to_line_mod_p(const Poly& F, const std::vector<std::uint64_t>& base, int var,
                               std::uint64_t p) {
    if (F.ny() != 0) throw LayoutError("restrict_to_line_mod_p expects an x-only polynomial");
    if (static_cast<int>(base.size()) != F.nx()) {
        throw LayoutError("restrict_to_line_mod_p: base point has wrong length");
    }
    UniPoly out;
    for (const auto& [mono, coeff] : F.terms()) {
        std::uint64_t v = coeff.mod_p(p);
        int e_var = 0;
        for (int i = 0; i < F.nx(); ++i) {
            if (i == var) {
                e_var = mono.e[i];
                continue;
            }
            v = mulmod(v, powmod(base[i] % p, mono.e[i], p), p);
        }
        if (static_cast<int>(out.size()) <= e_var) out.resize(e_var + 1, 0);
        out[e_var] = (out[e_var] + v) % p;
    }
    trim(out);
    return out;
}

std::vector<std::uint64_t> sample_plane_point_on_curve(const CurveSpec& curve, std::uint64_t p,
                                                       Rng& rng, int max_tries) {
    if (curve.r != 2) throw DomainError("modular point sampling is implemented for plane curves");
    if (p <= (1ull << 30)) throw DomainError("modular filter prime must exceed 2^30");
    const Poly& F = curve.forms[0];
    for (int attempt = 0; attempt < max_tries; ++attempt) {
        // Charts x2 = 1, x1 = 1, x0 = 1 in rotation; one free coordinate is
        // drawn at random, the last one is solved for.
        int chart = 2 - (attempt % 3);
        int free_var = (chart + 1) % 3;
        int solve_var = (chart + 2) % 3;
        std::vector<std::uint64_t> base(3, 0);
        base[chart] = 1;
        base[free_var] = rng.below(p);
        UniPoly f = restrict_to_line_mod_p(F, base, solve_var, p);
        if (f.empty()) continue;  // line inside the curve: mod-p degeneracy, redraw
        std::vector<std::uint64_t> roots = unipoly_roots(f, p, rng);
        if (roots.empty()) continue;
        base[solve_var] = roots[rng.below(roots.size())];
        return base;
    }
    throw ModularError("no curve point found mod p within the retry budget");
}

}  // namespace mhess
