/**
 * @file linalg.hpp
 * @brief Exact integer and rational linear algebra.
 *
 * Row-style Hermite normal form over arbitrary-precision integers with the
 * unimodular transform, and the lattice utilities built on it: canonical row
 * bases, lattice equality, saturated kernels, integer linear solves, and
 * surjectivity over the integers.  The rational solver supports a pivot
 * priority so solutions can be confined to a preferred set of coordinates.
 */
#pragma once

#include "flagring/numeric.hpp"

#include <optional>
#include <span>
#include <vector>

namespace flagring {

struct HermiteForm {
  MatZ H;    ///< U * A, rows in echelon form with positive reduced pivots
  MatZ U;    ///< unimodular row transform
  int rank;  ///< number of nonzero rows of H
};

/// Row Hermite normal form: pivots positive, entries above a pivot reduced
/// into [0, pivot), zero rows last.
HermiteForm hermite_normal_form(const MatZ& A);

/// Canonical basis of the row lattice (the nonzero HNF rows).
MatZ lattice_row_basis(const MatZ& A);

/// True when the rows of A and B generate the same lattice.
bool lattice_equal(const MatZ& A, const MatZ& B);

/// True when the rows of A generate all of Z^{cols}.
bool spans_unit_lattice(const MatZ& A);

/// Basis (as rows) of the saturated lattice {x : A x = 0}.
MatZ integer_kernel(const MatZ& A);

/// Factored integer solver for A x = b with many right-hand sides.
class IntegerSolver {
 public:
  explicit IntegerSolver(const MatZ& A);
  /// A solution over the integers, or nullopt when none exists.
  std::optional<VecZ> solve(const VecZ& b) const;

 private:
  Eigen::Index rows_, cols_;
  HermiteForm ht_;  // Hermite form of A^T: H = U * A^T, so A * U^T = H^T
};

std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b);

/// One rational solution of A x = b with free coordinates set to zero, or
/// nullopt when inconsistent.  Pivot columns are chosen following
/// column_priority first (then the remaining columns in index order), so the
/// support of the solution is confined to the earliest possible entries of
/// that list.
std::optional<VecQ> solve_rational(MatQ A, VecQ b,
                                   std::span<const int> column_priority = {});

}  // namespace flagring
