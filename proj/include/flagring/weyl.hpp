/**
 * @file weyl.hpp
 * @brief Weyl-group elements, minimal coset representatives, coset tables.
 *
 * A Weyl-group element is its integer matrix acting on weight coordinates
 * (columns).  A word [i_1,...,i_r] denotes the composite
 * sigma_{i_1} o ... o sigma_{i_r}, i.e. the matrix product
 * S_{i_1} * S_{i_2} * ... * S_{i_r}.
 *
 * For a marked node set K, the parabolic subgroup W_K is generated by the
 * reflections *not* in K, and the table enumerates the minimal-length
 * representatives w of the cosets w*W_K, graded by length.  Minimal
 * representatives are exactly the w with w(alpha_j) > 0 for every j not in K,
 * and they are closed under left quotients by descents, which is what makes
 * the breadth-first construction below complete (every representative of
 * length r+1 is sigma_i * (representative of length r) for each of its left
 * descents i).
 *
 * Each element stores the smallest such letter i and its parent; walking the
 * parent chain yields the lexicographically smallest reduced word, and slices
 * are sorted by that word.
 */
#pragma once

#include "flagring/root_system.hpp"

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace flagring {

using Word = std::vector<std::uint8_t>;  ///< letters are 1-based node indices

/// Thrown when an enumeration or expansion would exceed a configured cap.
struct ResourceCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Matrix of the composite sigma_{i_1} o ... o sigma_{i_r}.
MatI word_matrix(const RootSystem& rs, const Word& w);

/// Coxeter length = number of positive roots sent to negative ones.
int weyl_length(const RootSystem& rs, const MatI& w);

/// Exact inverse of a unimodular integer matrix.
MatI inverse_unimodular(const MatI& w);

/// True when w is the minimal-length element of w*W_K; K holds marked nodes
/// (1-based), and W_K is generated by the sigma_j with j not in K.
bool is_minimal_representative(const RootSystem& rs, const MatI& w,
                               const std::vector<int>& K);

/// Lexicographically smallest reduced word (greedy smallest left descent).
Word min_word_of_matrix(const RootSystem& rs, MatI w);

/// One Chevalley transition: right multiplication by the reflection in
/// `root` lands on the slice-(r+1) element `target`.
struct Transition {
  std::uint16_t root;
  std::uint32_t target;
};

class CosetTable {
 public:
  struct BuildOptions {
    int max_degree = -1;                   ///< -1: build until exhausted
    std::size_t element_cap = 1'000'000;   ///< abort beyond this many elements
  };

  static CosetTable build(std::shared_ptr<const RootSystem> rs,
                          std::vector<int> marked, const BuildOptions& opts);
  static CosetTable build(std::shared_ptr<const RootSystem> rs,
                          std::vector<int> marked) {
    return build(std::move(rs), std::move(marked), BuildOptions());
  }

  const RootSystem& roots() const { return *rs_; }
  const std::shared_ptr<const RootSystem>& roots_ptr() const { return rs_; }
  const std::vector<int>& marked() const { return marked_; }
  int rank() const { return rs_->rank(); }

  /// True when every coset representative is present (table not truncated).
  bool complete() const { return complete_; }
  /// Largest degree r for which slice r is fully enumerated.
  int max_degree() const { return static_cast<int>(slices_.size()) - 1; }
  /// Complex dimension of G/P_K = top nonzero degree of a complete table.
  int dimension() const { return dimension_; }

  int slice_size(int r) const {
    return r >= 0 && r <= max_degree() ? static_cast<int>(slices_[r].parent.size()) : 0;
  }
  std::size_t total_size() const;
  std::vector<std::int64_t> slice_sizes() const;

  Eigen::Map<const MatI> element(int r, int i) const;
  Word min_word(int r, int i) const;

  /// First letter of min_word(r, i) (requires r >= 1).
  int letter_of(int r, int i) const {
    return slices_[static_cast<std::size_t>(r)].letter[static_cast<std::size_t>(i)];
  }
  /// Index in slice r-1 of the element reached by dropping that letter.
  std::uint32_t parent_of(int r, int i) const {
    return slices_[static_cast<std::size_t>(r)].parent[static_cast<std::size_t>(i)];
  }

  /// Locates a matrix in the table; nullopt when absent (e.g. truncated away).
  std::optional<std::pair<int, int>> index_of(const MatI& w) const;

  /// Chevalley transitions out of slice r (requires slice r+1 built; throws
  /// on truncated tables).  Indexed per element via transition_span.
  /// Lazily fills a cache; the enumerated table itself never changes.
  void ensure_transitions(int r) const;
  std::span<const Transition> transition_span(int r, int i) const;

  /// Stable content hash of the enumerated data (cache validation).
  std::uint64_t checksum() const;

 private:
  struct Slice {
    std::vector<std::int64_t> arena;      // column-major n*n blocks
    std::vector<std::uint32_t> parent;    // index into slice r-1
    std::vector<std::uint8_t> letter;     // smallest left descent
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> index;
    mutable std::vector<std::size_t> trans_offset;  // size+1 when built
    mutable std::vector<Transition> trans;
    mutable bool trans_built = false;
  };

  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> marked_;
  std::vector<bool> marked_mask_;
  std::vector<Slice> slices_;
  bool complete_ = false;
  int dimension_ = 0;

  friend struct CosetTableIO;

  const std::int64_t* raw(int r, int i) const {
    return slices_[r].arena.data() + static_cast<std::size_t>(i) * rank() * rank();
  }
  std::optional<std::uint32_t> find_in_slice(int r, const MatI& w) const;
  void index_slice(int r);
};

/// Coefficients of the length generating function sum q^{l(w)}.
std::vector<std::int64_t> poincare_polynomial(const CosetTable& table);

/// True when the sequence reads the same reversed (Poincare duality check).
bool is_palindromic(const std::vector<std::int64_t>& coeffs);

}  // namespace flagring
