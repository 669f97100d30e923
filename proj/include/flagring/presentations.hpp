/**
 * @file presentations.hpp
 * @brief Presentations of the cohomology rings of exceptional flag manifolds
 *        and of their canonical rank-one quotients, with verification ops.
 *
 * The coset tables are the ground truth.  Every statement recorded in the
 * catalogs below — relation identities, Schubert-polynomial indicators,
 * Chern-class expansion rows, torsion data, reductions at a prime — is
 * re-derived from divided differences and Chevalley products when its
 * verification op runs, and the op reports pass/fail per entry instead of
 * asserting.  Catalog entries with a nonzero expectation are documented
 * near-relations: forms that resemble ring relations but are not, kept
 * together with their exact residues as regression witnesses.
 *
 * Degrees are weighted polynomial degrees throughout (the cohomological
 * degree is twice the number shown), matching the coset-table grading.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagring/chern.hpp"
#include "flagring/lie_type.hpp"
#include "flagring/polynomial.hpp"
#include "flagring/schubert.hpp"
#include "flagring/weyl.hpp"

namespace flagring {

// ---------------------------------------------------------------------------
// Special Schubert classes

/// One distinguished Schubert class, located by an explicit coset word
/// (letters are 1-based node numbers, leftmost letter outermost).
struct SpecialClass {
  std::string name;      ///< ring-generator name, e.g. "y3"
  int degree = 0;        ///< word length
  bool principal = true; ///< false for classes expressible through Chern classes
  Word word;
};

/// The catalog of special classes of one group on its canonical base space:
/// the complete flag manifold for G2, the rank-one quotient by the marked
/// node for F4 and E6..E8.
class SpecialClassTable {
 public:
  SpecialClassTable(LieType type, std::vector<int> marked,
                    std::vector<SpecialClass> classes);

  const LieType& type() const { return type_; }
  const std::vector<int>& marked() const { return marked_; }
  const std::vector<SpecialClass>& classes() const { return classes_; }

  bool has(std::string_view name) const;
  const SpecialClass& at(std::string_view name) const;  // throws out_of_range
  /// Names of the principal classes, in increasing degree.
  std::vector<std::string> principal_names() const;

 private:
  LieType type_;
  std::vector<int> marked_;
  std::vector<SpecialClass> classes_;
};

/// Builds the catalog for G2, F4, E6, E7 or E8 and validates every word
/// against the root system: the length must equal the degree, the word must
/// be reduced, and the element must be the minimal representative of its
/// coset.  Throws std::logic_error when a word fails validation.
SpecialClassTable special_classes(LieType type);

/// All nodes marked: the complete flag manifold of the group.
std::vector<int> all_nodes(int rank);

// ---------------------------------------------------------------------------
// Generator contexts

/// A polynomial ring with named generators bound to Schubert classes of one
/// coset table: weight classes of the marked nodes, special classes located
/// by words, and Chern classes of the reduced bundle.  Lifts of special
/// classes are solved lazily, on first use in an evaluation.
class GeneratorContext {
 public:
  explicit GeneratorContext(std::shared_ptr<const CosetTable> table);

  /// One generator per marked node, named "w<node>".
  void add_weights();
  /// Adjoins a special class; locates its table position by the word.
  void add_special(const SpecialClass& cls);
  /// Adjoins Chern class "c<k>" of the reduced bundle of the table's type.
  void add_chern(int k);

  SchubertCalculus& calc() { return *calc_; }
  const CosetTable& table() const { return calc_->table(); }
  std::span<const Generator> generators() const { return gens_; }
  const VarTable& vars() const { return vars_; }
  int find(std::string_view name) const;  ///< generator index or -1

  PolyQ parse(const std::string& expr) const;
  SchubertCombination evaluate(const PolyQ& f);
  SchubertCombination evaluate(const std::string& expr);

 private:
  void ensure_lifts(const PolyQ& f);

  std::shared_ptr<SchubertCalculus> calc_;
  std::vector<Generator> gens_;
  std::vector<bool> lift_ready_;
  VarTable vars_;
};

// ---------------------------------------------------------------------------
// Relation catalogs

enum class RelationExpectation {
  kZero,           ///< evaluates to the zero class (coefficients mod p when modulus is set)
  kZeroModWeight,  ///< lies in the ideal generated by the marked weight class
  kNonzero,        ///< documented near-relation; must reproduce the recorded residue
};

struct RelationFixture {
  std::string name;
  int degree = 0;
  int tier = 1;  ///< 1 = always, 2 = default, 3 = long-run only
  std::string expr;
  RelationExpectation expect = RelationExpectation::kZero;
  int modulus = 0;        ///< 0 = integral; else coefficients are read mod this prime
  std::string residue;    ///< expected rendering of the residue for kNonzero
  std::string note;       ///< carried into the report verbatim
};

enum class FixtureRole {
  kFlagRing,       ///< relations of the complete-flag ring, in quotient classes
  kFlagCrossCheck, ///< the same relations re-evaluated on a complete-flag table
  kQuotientRing,   ///< relations of the quotient's own ring
  kChernIdentity,  ///< Chern classes expressed through weight and special classes
  kPrimeResidues,  ///< relations that hold with coefficients mod a prime
};

struct PresentationFixture {
  std::string name;
  FixtureRole role = FixtureRole::kQuotientRing;
  LieType type;
  std::vector<int> marked;            ///< empty = all nodes (complete flag)
  std::vector<std::string> specials;  ///< special-class names to adjoin
  std::vector<int> chern;             ///< Chern-class subscripts to adjoin
  /// Named shorthand polynomials, substituted into the relations after
  /// parsing; each expression may use the generators and earlier shorthands.
  std::vector<std::pair<std::string, std::string>> defs;
  std::vector<RelationFixture> relations;
};

const std::vector<PresentationFixture>& presentation_fixtures();

// ---------------------------------------------------------------------------
// Reports

enum class CheckStatus { kPass, kPassWithNote, kFail, kSkipped };

struct CheckResult {
  std::string name;
  int degree = 0;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct Report {
  std::string subject;
  std::vector<CheckResult> checks;

  bool ok() const;        ///< no kFail entries
  int failures() const;
  std::string to_string() const;  ///< one line per check
};

struct RunConfig {
  int tier = 2;
  /// Ceiling on the dense size of a single assembled evaluation; degree-r
  /// tier-3 entries whose dense bound exceeds it are skipped as over budget.
  std::int64_t term_budget = 2'000'000;
  int degree_cap = -1;  ///< when >= 0, skip relations above this degree
};

/// Evaluates every relation of the fixture on its table and scores it
/// against the recorded expectation.
Report verify_relations(const PresentationFixture& fixture,
                        const RunConfig& config = {});

// ---------------------------------------------------------------------------
// Ring-structure checks

/// The generators span every degree slice over the integers.
Report verify_generation(LieType type, std::vector<int> marked,
                         std::span<const std::string> specials, int max_degree,
                         const RunConfig& config = {});

/// Kernel fixtures: in each listed degree, the kernel of the evaluation map
/// from the free polynomial ring on the listed generators must equal the
/// degree slice of the ideal spanned by the listed relations.
struct KernelFixture {
  std::string name;
  LieType type;
  std::vector<int> marked;             ///< empty = complete flag
  std::vector<std::string> specials;
  std::vector<int> chern;              ///< subscripts substituted as weight polynomials
  std::vector<std::string> relations;
  int max_degree = 0;
};

const std::vector<KernelFixture>& kernel_fixtures();
Report verify_kernel(const KernelFixture& fixture, const RunConfig& config = {});

// ---------------------------------------------------------------------------
// Restriction to the fiber of the isotropy fibration

/// One expression in the group's classes together with its image under the
/// fiber inclusion: sign * (fiber invariant of the given degree), or zero.
struct RestrictionCheck {
  std::string name;
  std::string expr;
  int degree = 0;
  int sign = 0;  ///< 0 = restricts to zero
};

struct RestrictionFixture {
  std::string name;
  LieType group;
  LieType fiber;
  /// fiber_node[i-1] is the fiber node the group node i maps to; 0 = the
  /// node collapsed by the fibration (its weight restricts to zero).
  std::vector<int> fiber_node;
  std::vector<std::string> specials;
  std::vector<int> chern;
  std::vector<RestrictionCheck> checks;
};

const std::vector<RestrictionFixture>& restriction_fixtures();

/// Substitutes the fiber inclusion (special classes to zero, weights along
/// fiber_node) into each check and into every Chern class, and compares with
/// the fiber's invariant polynomials.
Report verify_restriction(const RestrictionFixture& fixture);

/// The fiber's invariant polynomials expand to zero on its own flag table.
Report verify_fiber_vanishing(LieType fiber);

/// The Chern-root list of the type equals, as a set, the Weyl orbit of its
/// seed weight under the reflections that fix the marked node's quotient.
Report verify_chern_roots(LieType type);

// ---------------------------------------------------------------------------
// Chern-class expansion rows

struct ChernRow {
  int k = 0;
  std::vector<long> coefficients;  ///< dense over the degree-k slice
};

struct ChernRowFixture {
  LieType type;
  std::vector<int> marked;
  std::vector<ChernRow> rows;
};

const std::vector<ChernRowFixture>& chern_row_fixtures();
Report verify_chern_rows(const ChernRowFixture& fixture,
                         const RunConfig& config = {});

// ---------------------------------------------------------------------------
// Schubert polynomials (Giambelli forms)

struct SchubertPolynomialEntry {
  std::string name;
  int degree = 0;
  int index = 0;        ///< 0-based class position inside the slice
  long coefficient = 1; ///< expected multiple of the indicator class
  std::string expr;
  std::string note;
};

struct SchubertPolynomialFixture {
  std::string name;
  LieType type;
  std::vector<int> marked;
  std::vector<std::string> specials;
  std::vector<SchubertPolynomialEntry> entries;
  int round_trip_degree_tier1 = 0;  ///< solver re-expansion cap at tier 1
  int round_trip_degree_tier2 = 0;  ///< cap at tier 2 and above
};

const std::vector<SchubertPolynomialFixture>& schubert_polynomial_fixtures();

/// Checks each catalog entry evaluates to its indicator class, then runs the
/// Giambelli solver degree by degree and re-expands every output polynomial.
Report verify_schubert_polynomials(const SchubertPolynomialFixture& fixture,
                                   const RunConfig& config = {});

// ---------------------------------------------------------------------------
// Torsion data and the shape of the complete-flag presentation

/// Static invariants of one group's complete-flag cohomology: the degrees of
/// the relations lying in the weight ideal, and for each principal special
/// class its degree, its torsion prime p (the class times p lies in the
/// weight ideal) and its nilpotency exponent k (the k-th power lies there).
struct BasicData {
  LieType type;
  std::vector<int> weight_relation_degrees;
  std::vector<int> generator_degrees;
  std::vector<int> torsion_primes;
  std::vector<int> nilpotency;
};

/// Rows for G2, F4, E6..E8 and the classical families A_n, C_n.
BasicData basic_data(LieType type);

enum class RelationKind {
  kWeightIdeal,  ///< every term is divisible by a weight variable
  kLinear,       ///< p * y + terms in the weight ideal
  kPower,        ///< y^k + terms in the weight ideal
  kOther,        ///< none of the above shapes
};

struct ClassifiedRelation {
  std::string name;
  int degree = 0;
  RelationKind kind = RelationKind::kOther;
  int generator = -1;   ///< index into the principal-generator list
  int coefficient = 0;  ///< p for kLinear, the exponent for kPower
};

/// Classification of the complete-flag relations by shape, computed from the
/// relation catalog with Chern classes substituted as weight polynomials.
/// For E8 the shapes are read after reduction by the linear relations
/// (cross terms of principal classes are absorbed into them); the power
/// shapes that the recorded relations do not determine are left kOther.
struct FlagClassification {
  LieType type;
  std::vector<std::string> generators;
  std::vector<int> generator_degrees;
  std::vector<ClassifiedRelation> relations;
  bool power_shapes_decided = true;  ///< false for E8
};

FlagClassification classify_flag_presentation(LieType type);

/// Relations of the complete-flag ring as integer polynomials in the weight
/// variables and the principal special classes (Chern classes substituted).
/// Supported for G2, F4, E6, E7; throws for E8, whose recorded relation set
/// determines the ring only up to adding multiples of lower relations.
struct IntegralFlagRelations {
  VarTable vars;  ///< w1..wn, then the principal classes in degree order
  std::vector<std::pair<std::string, PolyQ>> relations;
};

IntegralFlagRelations integral_flag_relations(LieType type);

/// Compares the classification against the static basic_data row.
Report verify_basic_data(LieType type);

// ---------------------------------------------------------------------------
// Reduction at a prime

/// The complete-flag presentation with coefficients mod p: principal classes
/// whose torsion prime differs from p are eliminated through their linear
/// relations, and the surviving relations are reduced into [0, p).
struct PrimeRelation {
  std::string name;
  int degree = 0;
  PolyZ value;  ///< in the variables of IntegralFlagRelations::vars
};

struct PrimePresentation {
  LieType type;
  int p = 0;
  VarTable vars;                         ///< full variable table of the ring
  std::vector<std::string> generators;   ///< surviving generator names
  std::vector<PrimeRelation> relations;  ///< ascending degree
  std::vector<int> degree_multiset() const;
};

PrimePresentation mod_p_presentation(LieType type, int p);  // throws for E8

/// Expected reduction data plus residue checks evaluated on the quotient.
struct PrimePresentationFixture {
  std::string name;
  LieType type;
  int p = 0;
  std::vector<std::string> generators;
  std::vector<int> degree_multiset;
  PresentationFixture residues;
};

const std::vector<PrimePresentationFixture>& prime_presentation_fixtures();

/// Compares the derived reduction against the fixture (generator set and
/// degree multiset), verifies the recorded residue relations on the quotient
/// table, and checks graded dimensions of the derived ring against the
/// complete-flag slice sizes through max_dimension_degree.
Report verify_prime_presentation(const PrimePresentationFixture& fixture,
                                 int max_dimension_degree = 6,
                                 const RunConfig& config = {});

/// Graded dimension check alone: the quotient of the polynomial ring on the
/// surviving generators by the derived relations must have the same
/// dimensions over F_p as the complete flag manifold's slices.
Report verify_mod_p_dimensions(LieType type, int p, int max_degree);

// ---------------------------------------------------------------------------
// Monotonous monomials

/// The monomials in the principal classes of torsion prime p with exponents
/// below the nilpotency bound, excluding 1.
std::vector<Monomial> monotonous_monomials(LieType type, int p);

/// Every slice of the complete-flag table through max_degree is spanned over
/// the integers by weight monomials together with the monotonous monomials
/// (union over the torsion primes) times weight monomials.
Report verify_monotonous_spanning(LieType type, int max_degree,
                                  const RunConfig& config = {});

}  // namespace flagring
