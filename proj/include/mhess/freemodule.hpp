// Graded free modules, polynomial matrices between them, chain complexes,
// and maps of complexes. Twist bookkeeping is load-bearing: every matrix
// entry must be homogeneous of degree twist(row) - twist(col), and the
// alternating twist sums drive the degree accounting of determinants.
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhess/ideal.hpp"
#include "mhess/poly.hpp"

namespace mhess {

struct Generator {
    std::string label;  // unique within a module
    int twist = 0;
};

class FreeModule {
  public:
    FreeModule() = default;

    void add(std::string label, int twist);
    int rank() const { return static_cast<int>(gens_.size()); }
    const Generator& gen(int i) const { return gens_.at(i); }
    const std::vector<Generator>& generators() const { return gens_; }
    long twist_sum() const;
    FreeModule relabeled(const std::string& prefix) const;
    static FreeModule concat(const FreeModule& a, const FreeModule& b);

    bool operator==(const FreeModule& o) const;

  private:
    std::vector<Generator> gens_;
};

// Sparse matrix of x-only polynomials, rows = target module, cols = source.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(FreeModule rows, FreeModule cols, int nx);

    const FreeModule& rows() const { return rows_; }
    const FreeModule& cols() const { return cols_; }
    int nx() const { return nx_; }
    int n_rows() const { return rows_.rank(); }
    int n_cols() const { return cols_.rank(); }

    void set(int i, int j, Poly p);         // overwrite; zero erases
    void add(int i, int j, const Poly& p);  // accumulate
    Poly entry(int i, int j) const;         // zero Poly when absent
    const std::map<std::pair<int, int>, Poly>& entries() const { return entries_; }
    bool is_zero() const { return entries_.empty(); }

    PolyMatrix negated() const;
    PolyMatrix compose(const PolyMatrix& inner) const;  // this * inner
    PolyMatrix submatrix(const std::vector<int>& row_idx,
                         const std::vector<int>& col_idx) const;

    // First violation of the homogeneity law, or nullopt when clean.
    std::optional<std::string> homogeneity_violation() const;

    // Dense evaluation of every entry at a point of F_p (row-major).
    std::vector<std::vector<std::uint64_t>> evaluate_mod_p(
        const std::vector<std::uint64_t>& point, std::uint64_t p) const;

    bool operator==(const PolyMatrix& o) const;

  private:
    FreeModule rows_, cols_;
    int nx_ = 0;
    std::map<std::pair<int, int>, Poly> entries_;
};

// terms_[k] for homological degree k = 0..top; diff(i) = d_i: term i -> i-1.
class Complex {
  public:
    Complex() = default;
    Complex(std::vector<FreeModule> terms, std::vector<PolyMatrix> diffs, int nx);

    int nx() const { return nx_; }
    int top_degree() const { return static_cast<int>(terms_.size()) - 1; }
    const FreeModule& term(int k) const { return terms_.at(k); }
    const PolyMatrix& diff(int i) const { return diffs_.at(i - 1); }
    std::vector<int> ranks() const;  // ranks()[k] = rank of term k
    long chi() const;                // alternating sum of ranks
    long twist_degree() const;       // alternating sum of twist sums

  private:
    std::vector<FreeModule> terms_;
    std::vector<PolyMatrix> diffs_;
    int nx_ = 0;
};

// blocks[k]: source term k -> target term k + shift. A degree-`shift` map
// satisfies d_tgt * block = (-1)^shift * block * d_src (graded sign rule);
// check_map verifies exactly that, mod the ideal when one is supplied.
struct ComplexMap {
    Complex source, target;
    int shift = 0;
    std::vector<PolyMatrix> blocks;
};

struct CheckReport {
    bool ok = true;
    std::string detail;  // first violating entry when !ok
};

// Homogeneity of every differential, then d*d = 0 (exactly when ideal is
// null, otherwise entrywise reduce to zero).
CheckReport check_complex(const Complex& cx, const IdealSpec* ideal);

// Block homogeneity plus graded square-commutation as defined above.
CheckReport check_map(const ComplexMap& f, const IdealSpec* ideal);

// Mapping cone of a degree-0 commuting map: cone_k = src_{k-1} (+) tgt_k,
// d(a, b) = (-d_src a, d_tgt b + f a); labels get "s:" / "t:" prefixes.
Complex cone(const ComplexMap& f);

// JSON round-trip (labels, twists, entries in the polynomial text grammar).
std::string complex_to_json(const Complex& cx);
Complex complex_from_json(const std::string& text);

}  // namespace mhess
