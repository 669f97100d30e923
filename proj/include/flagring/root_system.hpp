/**
 * @file root_system.hpp
 * @brief Positive roots, coroot pairings, and reflection matrices.
 *
 * Roots are kept in two coordinate systems: simple-root coordinates (the
 * vector m with beta = sum m_j alpha_j) and weight coordinates (the vector of
 * <beta, alpha_k^vee>; equals C^T m).  Positive roots are sorted by height
 * then decreasing lex on m, so the simple roots come first in node order.
 */
#pragma once

#include "flagring/cartan.hpp"
#include "flagring/lie_type.hpp"
#include "flagring/numeric.hpp"

#include <optional>
#include <unordered_map>
#include <vector>

namespace flagring {

struct Root {
  VecI simple;               ///< coordinates in the simple-root basis
  VecI omega;                ///< weight coordinates C^T * simple
  std::int64_t length_sq;    ///< (beta,beta), short roots normalized to 2
  int height;                ///< sum of simple coordinates
};

class RootSystem {
 public:
  explicit RootSystem(const LieType& t);

  const LieType& type() const { return type_; }
  int rank() const { return static_cast<int>(cartan_.rows()); }
  const MatI& cartan() const { return cartan_; }
  const std::vector<std::int64_t>& d() const { return d_; }

  int count() const { return static_cast<int>(positive_.size()); }
  const Root& positive(int idx) const { return positive_[idx]; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  /// sigma_i on weight-coordinate columns (1-based i).
  const MatI& simple_reflection(int i) const { return simple_refl_[i - 1]; }

  /// Reflection in the positive root with the given index.
  const MatI& reflection(int root_idx) const { return root_refl_[root_idx]; }

  /// <omega_i, beta^vee> for 1-based node i; always an integer.
  std::int64_t coroot_pairing(int i, int root_idx) const {
    return pairing_(i - 1, root_idx);
  }

  /// Index of the positive root with these weight coordinates, if any.
  std::optional<int> find_positive(const VecI& omega) const;

  /// True when the weight-coordinate vector is a positive root (vs. the
  /// negative of one); v must be a root.
  bool is_positive_root(const VecI& omega) const;

 private:
  LieType type_;
  MatI cartan_;
  std::vector<std::int64_t> d_;
  std::vector<Root> positive_;
  std::vector<MatI> simple_refl_;
  std::vector<MatI> root_refl_;
  MatI pairing_;  // rank x count, pairing_(i, b) = <omega_{i+1}, beta_b^vee>
  std::unordered_map<std::uint64_t, int> index_;  // hash(omega coords) -> idx

  static std::uint64_t key(const VecI& v);
};

}  // namespace flagring
