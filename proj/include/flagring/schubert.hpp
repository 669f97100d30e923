/**
 * @file schubert.hpp
 * @brief Expansion of polynomials in the Schubert basis, Chevalley products,
 *        rational lifts, products of Schubert classes, Giambelli solving.
 *
 * Coefficient functional.  For an element w of a coset table with
 * lexicographically smallest word [i_1,...,i_r], the coefficient of the
 * Schubert class s_w in a homogeneous degree-r polynomial f is the constant
 * term of A_{i_1}(A_{i_2}(...A_{i_r}(f))) — the composite divided-difference
 * operator applied along the word from its last letter to its first.  The
 * direction conventions (w versus its inverse, word order) are pinned by a
 * lazy startup self-check against two frozen reference expansions on the
 * rank-1 quotient of F4; see ensure_expansion_calibrated().
 *
 * Expansion runs down the table's breadth-first parent tree: an element's
 * operator composite extends its parent's by one outer letter, so expanding
 * one polynomial over a whole table costs a single divided difference per
 * table element, with zero subtrees pruned.
 */
#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "flagring/divided_difference.hpp"
#include "flagring/linalg.hpp"
#include "flagring/polynomial.hpp"
#include "flagring/weyl.hpp"

namespace flagring {

/// An integral combination of Schubert classes of one degree.  Class indices
/// are 0-based positions inside the degree slice of the governing table;
/// all rendering and serialization is 1-based.
class SchubertCombination {
 public:
  SchubertCombination() = default;
  explicit SchubertCombination(int degree) : degree_(degree) {}

  static SchubertCombination single(int degree, std::uint32_t index,
                                    Int coeff = Int(1)) {
    SchubertCombination x(degree);
    if (coeff != 0) x.coeffs_.emplace_back(index, std::move(coeff));
    return x;
  }
  /// The unit of the ring: coefficient 1 on the unique degree-0 class.
  static SchubertCombination unit() { return single(0, 0); }

  /// Builds from an arbitrary (index, coefficient) accumulation.
  static SchubertCombination from_map(int degree,
                                      const std::map<std::uint32_t, Int>& m);
  /// Builds from a dense coefficient vector indexed by class position.
  static SchubertCombination from_dense(int degree, std::span<const Int> values);

  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Sorted by index, free of zero coefficients.
  const std::vector<std::pair<std::uint32_t, Int>>& coeffs() const {
    return coeffs_;
  }
  Int coefficient(std::uint32_t index) const;

  SchubertCombination& operator+=(const SchubertCombination& o);
  SchubertCombination& operator-=(const SchubertCombination& o);
  SchubertCombination& operator*=(const Int& c);
  friend SchubertCombination operator+(SchubertCombination a,
                                       const SchubertCombination& b) {
    return a += b;
  }
  friend SchubertCombination operator-(SchubertCombination a,
                                       const SchubertCombination& b) {
    return a -= b;
  }
  friend bool operator==(const SchubertCombination&,
                         const SchubertCombination&) = default;

  /// e.g. "6*s[3,1] - s[3,2]"; "0" when empty.  Class numbers are 1-based.
  std::string to_string() const;

 private:
  int degree_ = 0;
  std::vector<std::pair<std::uint32_t, Int>> coeffs_;
};

/// Runs the one-time direction self-check described in the file header.
/// Called lazily by lr_expand; throws std::logic_error if the compiled-in
/// convention fails to reproduce the reference expansions.
void ensure_expansion_calibrated();

/// Expands a homogeneous polynomial in the weight variables into Schubert
/// classes on the table.  All coefficients must come out integral (asserted).
/// Returns the zero combination when the degree exceeds a complete table's
/// dimension; throws ResourceCapExceeded when a truncated table is too short.
SchubertCombination lr_expand(const CosetTable& table, const PolyQ& f);

/// Single coefficient of s_{(r, i)} in f (0-based i), degree checks as above.
Int lr_coefficient(const CosetTable& table, int r, int i, const PolyQ& f);

/// One Chevalley step: multiplies x by the degree-2 class of marked node i,
/// summing pairing-weighted transitions into the next slice.  Throws
/// std::invalid_argument when node i is not marked in the table (the weight
/// is not a class on the quotient) and ResourceCapExceeded when the table
/// is truncated below degree(x) + 1.
SchubertCombination chevalley_multiply(const CosetTable& table, int i,
                                       const SchubertCombination& x);

/// True iff sigma_j(f) = f for every node j outside `marked` — equivalently,
/// f is a class on the quotient determined by the marked nodes.
bool verify_invariance(const RootSystem& rs, const PolyQ& f,
                       std::span<const int> marked);

/// Memoized expansion of weight monomials by iterated Chevalley steps,
/// applying the largest variable outermost (the order that matches the
/// divided-difference functional on quotient tables).  Each variable of a
/// monomial must be a marked node of the table.
class ChevalleyExpander {
 public:
  explicit ChevalleyExpander(const CosetTable& table) : table_(&table) {}

  const CosetTable& table() const { return *table_; }

  /// Expansion of the single monomial m (memoized across calls).
  const SchubertCombination& expand(const Monomial& m);
  /// Expansion of a polynomial; the result must be integral (asserted).
  SchubertCombination expand(const PolyQ& f);
  /// The product f * seed, walking Chevalley steps up from the seed and
  /// sharing common prefixes between the monomials of f.  Integrality of
  /// the final result is asserted; intermediate values may be rational.
  SchubertCombination apply(const PolyQ& f, const SchubertCombination& seed);

  /// Rational-valued walk used by generator evaluation: returns the
  /// accumulated coefficients of f * seed without the integrality gate.
  std::map<std::uint32_t, Rat> apply_rational(const PolyQ& f,
                                              const SchubertCombination& seed);

 private:
  const CosetTable* table_;
  std::unordered_map<Monomial, SchubertCombination, MonomialHash> memo_;
};

/// A basis of isotropy-invariant polynomials of one degree together with the
/// integer matrix of their Schubert expansions (one column per basis entry).
struct LiftSpace {
  int degree = 0;
  std::vector<PolyQ> basis;
  MatZ expansion;  // slice_size x basis.size()
};

/// Lift-and-multiply engine bound to one coset table.  Chooses the invariant
/// basis automatically: plain weight monomials on full-flag tables; on
/// quotient tables, monomials in the marked weights (each fixed by every
/// isotropy reflection) together with the Chern classes c_1..c_m of chern.hpp
/// on the F- and E-type quotients that carry them.
class SchubertCalculus {
 public:
  explicit SchubertCalculus(std::shared_ptr<const CosetTable> table);

  const CosetTable& table() const { return *table_; }
  const std::shared_ptr<const CosetTable>& table_ptr() const { return table_; }
  ChevalleyExpander& expander() { return expander_; }
  bool full_flag() const { return full_flag_; }

  /// lr_expand on the bound table.
  SchubertCombination expand(const PolyQ& f) { return lr_expand(*table_, f); }

  /// Basis and expansion matrix for one degree (built once, then cached).
  const LiftSpace& lift_space(int degree);

  /// A rational polynomial in the weights whose expansion is exactly x.
  /// Any valid preimage is acceptable; throws std::domain_error when x is
  /// outside the span of the configured invariant basis.  Per-class lifts
  /// are cached and combined linearly.
  PolyQ lift(const SchubertCombination& x);
  PolyQ lift(int degree, std::uint32_t index) {
    return lift(SchubertCombination::single(degree, index));
  }

  /// Product of two Schubert-class combinations.  On a full-flag table this
  /// lifts the smaller factor and walks Chevalley steps from the other; on
  /// quotient tables it multiplies two invariant lifts and re-expands.
  SchubertCombination product(const SchubertCombination& x,
                              const SchubertCombination& y);

 private:
  const PolyQ& class_lift(int degree, std::uint32_t index);

  std::shared_ptr<const CosetTable> table_;
  bool full_flag_ = false;
  ChevalleyExpander expander_;
  std::map<int, LiftSpace> spaces_;
  std::map<std::pair<int, std::uint32_t>, PolyQ> class_lifts_;
  // Invariant basis variables on quotient tables: (polynomial, degree).
  std::vector<std::pair<PolyQ, int>> basis_vars_;
};

/// A named multiplicative generator of the cohomology ring of one table.
struct Generator {
  std::string name;
  int degree = 1;
  /// 1-based node index when the generator is the degree-2 class of a
  /// marked node (its lift is that weight variable); 0 for special classes.
  int node = 0;
  SchubertCombination value;
  PolyQ lift;
};

/// Degree-2 generator for a marked node (value s_{1,index} supplied by caller
/// ordering; see make_weight_generators for the standard construction).
std::vector<Generator> make_weight_generators(const CosetTable& table);

/// Variable table over the generator names (parse_poly/to_string companion).
VarTable generator_vars(std::span<const Generator> gens);

/// Evaluates a homogeneous polynomial in the named generators to a Schubert
/// combination.  On full-flag tables each term is seeded with one copy of
/// its highest-degree special factor and the rest is applied as a polynomial
/// Chevalley walk; on quotient tables the whole expression is assembled from
/// invariant lifts and expanded once.  The result must be integral
/// (asserted).  Throws std::invalid_argument on inhomogeneous input.
SchubertCombination evaluate_generator_polynomial(SchubertCalculus& calc,
                                                  std::span<const Generator> gens,
                                                  const PolyQ& expr);

/// For every class of degree r, an integer polynomial in the generator names
/// whose evaluation is exactly that class.  Solved degree-by-degree over the
/// integers (Hermite reduction); throws std::runtime_error with the message
/// "generators do not generate in degree r" when no integer solution exists.
std::vector<PolyQ> giambelli_polynomials(SchubertCalculus& calc,
                                         std::span<const Generator> gens,
                                         int r);

}  // namespace flagring
