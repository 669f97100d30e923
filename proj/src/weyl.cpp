/**
 * @file weyl.cpp
 * @brief Coset-table construction and Weyl-element utilities.
 */
#include "flagring/weyl.hpp"

#include <algorithm>
#include <cstring>

namespace flagring {

namespace {

std::uint64_t matrix_hash(const std::int64_t* data, int n) {
  return fnv1a64(data, sizeof(std::int64_t) * static_cast<std::size_t>(n) * n);
}

std::vector<bool> make_mask(const std::vector<int>& nodes, int rank) {
  std::vector<bool> mask(static_cast<std::size_t>(rank) + 1, false);
  for (int j : nodes) {
    if (j < 1 || j > rank) throw std::invalid_argument("node index out of range");
    mask[static_cast<std::size_t>(j)] = true;
  }
  return mask;
}

}  // namespace

MatI word_matrix(const RootSystem& rs, const Word& w) {
  const int n = rs.rank();
  MatI m = MatI::Identity(n, n);
  for (std::uint8_t letter : w) m = m * rs.simple_reflection(letter);
  return m;
}

int weyl_length(const RootSystem& rs, const MatI& w) {
  int inversions = 0;
  for (int b = 0; b < rs.count(); ++b) {
    VecI image = w * rs.positive(b).omega;
    if (!rs.is_positive_root(image)) ++inversions;
  }
  return inversions;
}

MatI inverse_unimodular(const MatI& w) {
  const int n = static_cast<int>(w.rows());
  MatQ a = w.cast<Rat>();
  MatQ inv = MatQ::Identity(n, n);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (a(row, col) != 0) { pivot = row; break; }
    if (pivot < 0) throw std::invalid_argument("matrix is singular");
    a.row(col).swap(a.row(pivot));
    inv.row(col).swap(inv.row(pivot));
    const Rat scale = Rat(1) / a(col, col);
    a.row(col) *= scale;
    inv.row(col) *= scale;
    for (int row = 0; row < n; ++row) {
      if (row == col || a(row, col) == 0) continue;
      const Rat factor = a(row, col);
      a.row(row) -= factor * a.row(col);
      inv.row(row) -= factor * inv.row(col);
    }
  }
  MatI result(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) result(r, c) = static_cast<std::int64_t>(to_integer(inv(r, c)));
  return result;
}

bool is_minimal_representative(const RootSystem& rs, const MatI& w,
                               const std::vector<int>& K) {
  const std::vector<bool> mask = make_mask(K, rs.rank());
  for (int j = 1; j <= rs.rank(); ++j) {
    if (mask[static_cast<std::size_t>(j)]) continue;
    VecI image = w * rs.positive(j - 1).omega;  // simple roots lead the list
    if (!rs.is_positive_root(image)) return false;
  }
  return true;
}

Word min_word_of_matrix(const RootSystem& rs, MatI w) {
  const int n = rs.rank();
  MatI winv = inverse_unimodular(w);
  const MatI identity = MatI::Identity(n, n);
  Word word;
  while (w != identity) {
    int descent = 0;
    for (int i = 1; i <= n; ++i) {
      VecI image = winv * rs.positive(i - 1).omega;
      if (!rs.is_positive_root(image)) { descent = i; break; }
    }
    if (descent == 0) throw std::logic_error("non-identity element without left descent");
    word.push_back(static_cast<std::uint8_t>(descent));
    const MatI& s = rs.simple_reflection(descent);
    w = s * w;
    winv = winv * s;
  }
  return word;
}

CosetTable CosetTable::build(std::shared_ptr<const RootSystem> rs,
                             std::vector<int> marked, const BuildOptions& opts) {
  CosetTable table;
  table.rs_ = std::move(rs);
  std::sort(marked.begin(), marked.end());
  marked.erase(std::unique(marked.begin(), marked.end()), marked.end());
  table.marked_ = std::move(marked);
  const int n = table.rank();
  table.marked_mask_ = make_mask(table.marked_, n);

  // Complex dimension of the quotient: positive roots of G minus those of the
  // Levi factor (the roots supported away from the marked nodes).
  {
    const RootSystem& roots = *table.rs_;
    int levi = 0;
    for (int b = 0; b < roots.count(); ++b) {
      bool avoids_marked = true;
      for (int j : table.marked_)
        if (roots.positive(b).simple[j - 1] != 0) { avoids_marked = false; break; }
      if (avoids_marked) ++levi;
    }
    table.dimension_ = roots.count() - levi;
  }

  const std::size_t block = static_cast<std::size_t>(n) * n;
  const RootSystem& roots = *table.rs_;

  // Slice 0: the identity coset.
  {
    Slice s0;
    s0.arena.resize(block);
    Eigen::Map<MatI>(s0.arena.data(), n, n) = MatI::Identity(n, n);
    s0.parent.push_back(0);
    s0.letter.push_back(0);
    table.slices_.push_back(std::move(s0));
    table.index_slice(0);
  }

  std::size_t total = 1;
  for (int r = 0; opts.max_degree < 0 || r < opts.max_degree; ++r) {
    const int cur_size = table.slice_size(r);
    Slice next;
    // first arrival per candidate: (hash -> candidate ranks), plus rejects
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
    std::unordered_map<std::uint64_t, std::vector<MatI>> rejected;
    MatI cand(n, n);

    auto find_candidate = [&](const MatI& m) -> std::optional<std::uint32_t> {
      const std::uint64_t h = matrix_hash(m.data(), n);
      auto it = seen.find(h);
      if (it == seen.end()) return std::nullopt;
      for (std::uint32_t rank_idx : it->second) {
        const std::int64_t* p = next.arena.data() + rank_idx * block;
        if (std::memcmp(p, m.data(), block * sizeof(std::int64_t)) == 0) return rank_idx;
      }
      return std::nullopt;
    };
    auto is_rejected = [&](const MatI& m) {
      auto it = rejected.find(matrix_hash(m.data(), n));
      if (it == rejected.end()) return false;
      for (const MatI& other : it->second)
        if (other == m) return true;
      return false;
    };

    for (int idx = 0; idx < cur_size; ++idx) {
      const Eigen::Map<const MatI> w = table.element(r, idx);
      for (int i = 1; i <= n; ++i) {
        cand.noalias() = roots.simple_reflection(i) * w;
        if (table.find_in_slice(r - 1, cand)) continue;  // length drops
        if (auto existing = find_candidate(cand)) {
          // keep the smallest letter; for a fixed letter the parent is unique
          if (i < next.letter[*existing]) {
            next.letter[*existing] = static_cast<std::uint8_t>(i);
            next.parent[*existing] = static_cast<std::uint32_t>(idx);
          }
          continue;
        }
        if (is_rejected(cand)) continue;
        bool minimal = true;
        for (int j = 1; j <= n && minimal; ++j) {
          if (table.marked_mask_[static_cast<std::size_t>(j)]) continue;
          VecI image = cand * roots.positive(j - 1).omega;
          if (!roots.is_positive_root(image)) minimal = false;
        }
        if (!minimal) {
          rejected[matrix_hash(cand.data(), n)].push_back(cand);
          continue;
        }
        const auto rank_idx = static_cast<std::uint32_t>(next.parent.size());
        next.arena.resize(next.arena.size() + block);
        Eigen::Map<MatI>(next.arena.data() + rank_idx * block, n, n) = cand;
        next.parent.push_back(static_cast<std::uint32_t>(idx));
        next.letter.push_back(static_cast<std::uint8_t>(i));
        seen[matrix_hash(cand.data(), n)].push_back(rank_idx);
      }
    }

    if (next.parent.empty()) {
      table.complete_ = true;
      break;
    }
    total += next.parent.size();
    if (total > opts.element_cap)
      throw ResourceCapExceeded("coset table exceeds element cap of " +
                                std::to_string(opts.element_cap));

    // Sort by (letter, parent rank): parents are already in min-word lex
    // order, so this keeps every slice in min-word lex order as well.
    const auto count = static_cast<std::uint32_t>(next.parent.size());
    std::vector<std::uint32_t> order(count);
    for (std::uint32_t k = 0; k < count; ++k) order[k] = k;
    std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
      if (next.letter[a] != next.letter[b]) return next.letter[a] < next.letter[b];
      return next.parent[a] < next.parent[b];
    });
    Slice sorted;
    sorted.arena.resize(next.arena.size());
    sorted.parent.resize(count);
    sorted.letter.resize(count);
    for (std::uint32_t pos = 0; pos < count; ++pos) {
      const std::uint32_t src = order[pos];
      std::memcpy(sorted.arena.data() + pos * block, next.arena.data() + src * block,
                  block * sizeof(std::int64_t));
      sorted.parent[pos] = next.parent[src];
      sorted.letter[pos] = next.letter[src];
    }
    table.slices_.push_back(std::move(sorted));
    table.index_slice(r + 1);
  }
  return table;
}

void CosetTable::index_slice(int r) {
  Slice& s = slices_[static_cast<std::size_t>(r)];
  const int n = rank();
  const std::size_t block = static_cast<std::size_t>(n) * n;
  s.index.clear();
  for (std::uint32_t i = 0; i < s.parent.size(); ++i)
    s.index[matrix_hash(s.arena.data() + i * block, n)].push_back(i);
}

std::optional<std::uint32_t> CosetTable::find_in_slice(int r, const MatI& w) const {
  if (r < 0 || r > max_degree()) return std::nullopt;
  const Slice& s = slices_[static_cast<std::size_t>(r)];
  const int n = rank();
  const std::size_t block = static_cast<std::size_t>(n) * n;
  auto it = s.index.find(matrix_hash(w.data(), n));
  if (it == s.index.end()) return std::nullopt;
  for (std::uint32_t i : it->second) {
    if (std::memcmp(s.arena.data() + i * block, w.data(),
                    block * sizeof(std::int64_t)) == 0)
      return i;
  }
  return std::nullopt;
}

std::size_t CosetTable::total_size() const {
  std::size_t total = 0;
  for (const Slice& s : slices_) total += s.parent.size();
  return total;
}

std::vector<std::int64_t> CosetTable::slice_sizes() const {
  std::vector<std::int64_t> sizes;
  sizes.reserve(slices_.size());
  for (const Slice& s : slices_) sizes.push_back(static_cast<std::int64_t>(s.parent.size()));
  return sizes;
}

Eigen::Map<const MatI> CosetTable::element(int r, int i) const {
  return {raw(r, i), rank(), rank()};
}

Word CosetTable::min_word(int r, int i) const {
  Word word(static_cast<std::size_t>(r));
  auto idx = static_cast<std::uint32_t>(i);
  for (int level = r; level > 0; --level) {
    const Slice& s = slices_[static_cast<std::size_t>(level)];
    word[static_cast<std::size_t>(r - level)] = s.letter[idx];
    idx = s.parent[idx];
  }
  return word;
}

std::optional<std::pair<int, int>> CosetTable::index_of(const MatI& w) const {
  const int len = weyl_length(*rs_, w);
  if (auto i = find_in_slice(len, w)) return std::make_pair(len, static_cast<int>(*i));
  return std::nullopt;
}

void CosetTable::ensure_transitions(int r) const {
  if (r < 0 || r > max_degree()) throw std::out_of_range("slice not built");
  const Slice& s = slices_[static_cast<std::size_t>(r)];
  if (s.trans_built) return;
  if (r + 1 > max_degree() && !complete_)
    throw std::logic_error("transitions out of the top built slice of a truncated table");
  const RootSystem& roots = *rs_;
  const int n = rank();
  MatI v(n, n);
  s.trans_offset.assign(s.parent.size() + 1, 0);
  for (std::uint32_t i = 0; i < s.parent.size(); ++i) {
    const Eigen::Map<const MatI> w = element(r, static_cast<int>(i));
    for (int b = 0; b < roots.count(); ++b) {
      VecI image = w * roots.positive(b).omega;
      if (!roots.is_positive_root(image)) continue;  // length would drop
      v.noalias() = w * roots.reflection(b);
      if (auto target = find_in_slice(r + 1, v))
        s.trans.push_back({static_cast<std::uint16_t>(b), *target});
    }
    s.trans_offset[i + 1] = s.trans.size();
  }
  s.trans_built = true;
}

std::span<const Transition> CosetTable::transition_span(int r, int i) const {
  const Slice& s = slices_[static_cast<std::size_t>(r)];
  if (!s.trans_built) throw std::logic_error("transitions not built for this slice");
  const auto a = s.trans_offset[static_cast<std::size_t>(i)];
  const auto b = s.trans_offset[static_cast<std::size_t>(i) + 1];
  return {s.trans.data() + a, b - a};
}

std::uint64_t CosetTable::checksum() const {
  std::uint64_t h = fnv1a64("coset-table");
  h = fnv1a64(to_string(rs_->type()), h);
  for (int j : marked_) h = fnv1a64(&j, sizeof(j), h);
  for (const Slice& s : slices_) {
    const std::size_t sz = s.parent.size();
    h = fnv1a64(&sz, sizeof(sz), h);
    h = fnv1a64(s.arena.data(), s.arena.size() * sizeof(std::int64_t), h);
    h = fnv1a64(s.letter.data(), s.letter.size(), h);
  }
  return h;
}

std::vector<std::int64_t> poincare_polynomial(const CosetTable& table) {
  return table.slice_sizes();
}

bool is_palindromic(const std::vector<std::int64_t>& coeffs) {
  auto rev = coeffs;
  std::reverse(rev.begin(), rev.end());
  return rev == coeffs;
}

}  // namespace flagring
