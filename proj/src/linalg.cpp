/**
 * @file linalg.cpp
 */
#include "flagring/linalg.hpp"

#include <stdexcept>

namespace flagring {

namespace {

/// Floor division (quotient rounded toward minus infinity).
Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

HermiteForm hermite_normal_form(const MatZ& A) {
  const Eigen::Index m = A.rows(), n = A.cols();
  HermiteForm out{A, MatZ::Identity(m, m), 0};
  MatZ& H = out.H;
  MatZ& U = out.U;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < n && r < m; ++col) {
    // Clear rows below r in this column with gcd-style row operations,
    // keeping the smallest nonzero entry at row r.
    while (true) {
      Eigen::Index best = -1;
      for (Eigen::Index i = r; i < m; ++i) {
        if (H(i, col) == 0) continue;
        if (best < 0 || abs(H(i, col)) < abs(H(best, col))) best = i;
      }
      if (best < 0) break;  // column is zero from r down
      if (best != r) {
        H.row(r).swap(H.row(best));
        U.row(r).swap(U.row(best));
      }
      bool cleared = true;
      for (Eigen::Index i = r + 1; i < m; ++i) {
        if (H(i, col) == 0) continue;
        const Int q = floor_div(H(i, col), H(r, col));
        if (q != 0) {
          H.row(i) -= q * H.row(r);
          U.row(i) -= q * U.row(r);
        }
        if (H(i, col) != 0) cleared = false;
      }
      if (cleared) break;
    }
    if (H(r, col) == 0) continue;
    if (H(r, col) < 0) {
      H.row(r) = -H.row(r);
      U.row(r) = -U.row(r);
    }
    // Reduce the entries above the pivot into [0, pivot).
    for (Eigen::Index i = 0; i < r; ++i) {
      const Int q = floor_div(H(i, col), H(r, col));
      if (q != 0) {
        H.row(i) -= q * H.row(r);
        U.row(i) -= q * U.row(r);
      }
    }
    ++r;
  }
  out.rank = static_cast<int>(r);
  return out;
}

MatZ lattice_row_basis(const MatZ& A) {
  HermiteForm hf = hermite_normal_form(A);
  return hf.H.topRows(hf.rank);
}

bool lattice_equal(const MatZ& A, const MatZ& B) {
  if (A.cols() != B.cols()) return false;
  MatZ ba = lattice_row_basis(A), bb = lattice_row_basis(B);
  return ba.rows() == bb.rows() && ba == bb;
}

bool spans_unit_lattice(const MatZ& A) {
  MatZ basis = lattice_row_basis(A);
  if (basis.rows() != A.cols()) return false;
  return basis == MatZ(MatZ::Identity(A.cols(), A.cols()));
}

MatZ integer_kernel(const MatZ& A) {
  // H = U * A^T; zero rows of H correspond to rows of U with A * u^T = 0,
  // and those rows form a basis of the saturated kernel lattice.
  HermiteForm hf = hermite_normal_form(A.transpose());
  const Eigen::Index total = hf.H.rows();
  return hf.U.bottomRows(total - hf.rank);
}

IntegerSolver::IntegerSolver(const MatZ& A)
    : rows_(A.rows()), cols_(A.cols()), ht_(hermite_normal_form(A.transpose())) {}

std::optional<VecZ> IntegerSolver::solve(const VecZ& b) const {
  if (b.size() != rows_) throw std::invalid_argument("rhs size mismatch");
  // A * U^T = H^T with H^T lower column-echelon: solve H^T y = b by forward
  // substitution over the pivot rows, then x = U^T y.
  const MatZ& H = ht_.H;
  VecZ y = VecZ::Zero(H.rows());
  VecZ residual = b;
  for (int k = 0; k < ht_.rank; ++k) {
    // pivot of row k of H sits at its first nonzero column
    Eigen::Index p = 0;
    while (p < H.cols() && H(k, p) == 0) ++p;
    if (p == H.cols()) break;
    const Int& pivot = H(k, p);
    if (residual(p) % pivot != 0) return std::nullopt;
    const Int coef = residual(p) / pivot;
    if (coef != 0) residual -= coef * VecZ(H.row(k).transpose());
    y(k) = coef;
  }
  for (Eigen::Index i = 0; i < residual.size(); ++i)
    if (residual(i) != 0) return std::nullopt;
  return VecZ(ht_.U.transpose() * y);
}

std::optional<VecZ> solve_integer(const MatZ& A, const VecZ& b) {
  return IntegerSolver(A).solve(b);
}

std::optional<VecQ> solve_rational(MatQ A, VecQ b,
                                   std::span<const int> column_priority) {
  const Eigen::Index m = A.rows(), n = A.cols();
  if (b.size() != m) throw std::invalid_argument("rhs size mismatch");
  std::vector<int> order;
  order.reserve(static_cast<std::size_t>(n));
  std::vector<bool> listed(static_cast<std::size_t>(n), false);
  for (int c : column_priority) {
    if (c < 0 || c >= n) throw std::out_of_range("pivot priority column");
    if (!listed[static_cast<std::size_t>(c)]) {
      order.push_back(c);
      listed[static_cast<std::size_t>(c)] = true;
    }
  }
  for (int c = 0; c < n; ++c)
    if (!listed[static_cast<std::size_t>(c)]) order.push_back(c);

  std::vector<std::pair<int, Eigen::Index>> pivots;  // (column, row)
  std::vector<bool> row_used(static_cast<std::size_t>(m), false);
  for (int col : order) {
    Eigen::Index pivot_row = -1;
    for (Eigen::Index i = 0; i < m; ++i)
      if (!row_used[static_cast<std::size_t>(i)] && A(i, col) != 0) {
        pivot_row = i;
        break;
      }
    if (pivot_row < 0) continue;
    row_used[static_cast<std::size_t>(pivot_row)] = true;
    pivots.emplace_back(col, pivot_row);
    const Rat inv = Rat(1) / A(pivot_row, col);
    A.row(pivot_row) *= inv;
    b(pivot_row) *= inv;
    for (Eigen::Index i = 0; i < m; ++i) {
      if (i == pivot_row || A(i, col) == 0) continue;
      const Rat f = A(i, col);
      A.row(i) -= f * A.row(pivot_row);
      b(i) -= f * b(pivot_row);
    }
    if (pivots.size() == static_cast<std::size_t>(m)) break;
  }
  for (Eigen::Index i = 0; i < m; ++i)
    if (!row_used[static_cast<std::size_t>(i)] && b(i) != 0) return std::nullopt;
  VecQ x = VecQ::Zero(n);
  for (const auto& [col, row] : pivots) x(col) = b(row);
  return x;
}

}  // namespace flagring
