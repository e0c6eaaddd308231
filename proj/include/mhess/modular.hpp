// Prime-field helpers for the modular nonvanishing filter: deterministic
// seeded randomness, univariate root finding over F_p, and sampling of
// F_p-points on plane curves.
#pragma once

#include <cstdint>
#include <vector>

#include "mhess/curve.hpp"

namespace mhess {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t invmod(std::uint64_t a, std::uint64_t p);  // ModularError when p | a

// splitmix64: tiny, deterministic, good enough for pivot shuffling and
// point sampling; all pipeline randomness flows through one seed.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    std::uint64_t below(std::uint64_t n);  // uniform in [0, n)

  private:
    std::uint64_t state_;
};

// Dense univariate polynomial over F_p, coefficient of t^i at index i.
using UniPoly = std::vector<std::uint64_t>;

// All distinct roots in F_p, ascending. gcd with t^p - t, then equal-degree
// splitting; p must be an odd prime.
std::vector<std::uint64_t> unipoly_roots(const UniPoly& f, std::uint64_t p, Rng& rng);

// Restrict an x-only polynomial to one variable: every other coordinate is
// fixed to the given residues and `var` runs free.
UniPoly restrict_to_line_mod_p(const Poly& F, const std::vector<std::uint64_t>& base, int var,
                               std::uint64_t p);

// A projective F_p-point on a plane curve (r = 2), found by fixing a chart
// coordinate to 1, drawing the second coordinate at random and solving for
// the third. Throws ModularError after max_tries failed draws.
std::vector<std::uint64_t> sample_plane_point_on_curve(const CurveSpec& curve, std::uint64_t p,
                                                       Rng& rng, int max_tries = 64);

}  // namespace mhess
