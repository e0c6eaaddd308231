#include "mhess/monomial.hpp"

#include <algorithm>
#include <cassert>

namespace mhess {

int Monomial::degree() const {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

int Monomial::degree_range(int lo, int hi) const {
    int d = 0;
    for (int i = lo; i < hi && i < nvars(); ++i) d += e[i];
    return d;
}

Monomial Monomial::times(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e[i] += o.e[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    assert(nvars() == o.nvars());
    for (int i = 0; i < nvars(); ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial Monomial::quotient_into(const Monomial& o) const {
    assert(divides(o));
    Monomial r(o);
    for (int i = 0; i < nvars(); ++i) r.e[i] -= e[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& o) const {
    assert(nvars() == o.nvars());
    Monomial r(*this);
    for (int i = 0; i < nvars(); ++i) r.e[i] = std::max(r.e[i], o.e[i]);
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    assert(nvars() == o.nvars());
    for (int i = 0; i < nvars(); ++i)
        if (e[i] > 0 && o.e[i] > 0) return false;
    return true;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
    assert(a.nvars() == b.nvars());
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
    return false;
}

static void enumerate(int nvars, int pos, int left, Monomial& cur,
                      std::vector<Monomial>& out) {
    if (pos == nvars - 1) {
        cur.e[pos] = left;
        out.push_back(cur);
        return;
    }
    for (int k = left; k >= 0; --k) {
        cur.e[pos] = k;
        enumerate(nvars, pos + 1, left - k, cur, out);
    }
    cur.e[pos] = 0;
}

std::vector<Monomial> monomials_of_degree(int nvars, int d) {
    std::vector<Monomial> out;
    if (d < 0 || nvars <= 0) return out;
    Monomial cur(nvars);
    enumerate(nvars, 0, d, cur, out);
    std::sort(out.begin(), out.end(), GrevlexGreater{});
    return out;
}

}  // namespace mhess
