// Reduction to a canonical normal form modulo a homogeneous ideal.
//
// Single generator: division in a pivot variable whose pure power carries a
// scalar coefficient (a recorded linear coordinate change manufactures such a
// pivot when no variable qualifies). Several generators: reduced Groebner
// basis (grevlex, naive Buchberger with the coprime and chain criteria) and
// full multivariate division. Either way reduce() is linear, idempotent, and
// reduce(p) == reduce(q) iff p - q lies in the ideal.
#pragma once

#include <optional>
#include <vector>

#include "mhess/poly.hpp"

namespace mhess {

enum class ReductionStrategy { Auto, PrincipalDivision, Buchberger };

struct Cofactors {
    std::vector<Poly> quotients;  // one per element of basis_used()
    Poly remainder;
};

class IdealSpec {
  public:
    // budget < 0 means unlimited; it caps Buchberger reduction steps and
    // S-polynomial count, throwing BudgetError when exhausted.
    explicit IdealSpec(std::vector<Poly> generators,
                       ReductionStrategy strategy = ReductionStrategy::Auto,
                       long budget = -1);

    int nx() const { return nx_; }
    const std::vector<Poly>& generators() const { return gens_; }
    ReductionStrategy strategy() const { return strategy_; }

    Poly reduce(const Poly& p) const;
    Cofactors reduce_with_cofactors(const Poly& p) const;
    bool contains(const Poly& p) const { return reduce(p).is_zero(); }

    // The basis the division routine actually divides by: the (transformed)
    // generator for principal division, the reduced Groebner basis otherwise.
    const std::vector<Poly>& basis_used() const { return basis_; }

    // Principal-division introspection.
    int pivot_variable() const { return pivot_var_; }
    bool used_coordinate_change() const { return coord_change_.has_value(); }

  private:
    struct CoordChange {
        std::vector<Poly> fwd, inv;  // variable images, x-only layout
    };

    void setup_principal();
    void setup_buchberger(long budget);
    static Poly divide_principal(const Poly& p, const Poly& g, int pivot, Poly* quotient);
    Poly normal_form(const Poly& p, const std::vector<Poly>& basis,
                     std::vector<Poly>* quotients, long* budget) const;

    int nx_ = 0;
    std::vector<Poly> gens_;
    ReductionStrategy strategy_;
    std::vector<Poly> basis_;
    int pivot_var_ = -1;
    std::optional<CoordChange> coord_change_;
};

}  // namespace mhess
