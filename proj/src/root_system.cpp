#include "flagring/root_system.hpp"

#include <algorithm>
#include <stdexcept>

namespace flagring {

std::uint64_t RootSystem::key(const VecI& v) {
  return fnv1a64(v.data(), sizeof(std::int64_t) * static_cast<std::size_t>(v.size()));
}

RootSystem::RootSystem(const LieType& t)
    : type_(t), cartan_(cartan_matrix(t)), d_(symmetrizers(cartan_)) {
  const int n = rank();
  simple_refl_.reserve(n);
  for (int i = 1; i <= n; ++i) simple_refl_.push_back(simple_reflection_matrix(cartan_, i));

  // Close the simple roots under simple reflections, in simple-root
  // coordinates: sigma_i(m) = m - (sum_j m_j C(j,i)) e_i.
  std::vector<VecI> all;
  std::unordered_map<std::uint64_t, int> seen;
  auto push = [&](const VecI& m) {
    auto k = key(m);
    if (seen.emplace(k, static_cast<int>(all.size())).second) all.push_back(m);
  };
  for (int i = 0; i < n; ++i) {
    VecI e = VecI::Zero(n);
    e(i) = 1;
    push(e);
  }
  for (std::size_t head = 0; head < all.size(); ++head) {
    VecI m = all[head];
    for (int i = 0; i < n; ++i) {
      std::int64_t pair = 0;
      for (int j = 0; j < n; ++j) pair += m(j) * cartan_(j, i);
      VecI m2 = m;
      m2(i) -= pair;
      push(m2);
    }
  }

  // Symmetrized form B = C * diag(d): (beta,gamma) = m_beta^T B m_gamma.
  MatI b = cartan_;
  for (int j = 0; j < n; ++j) b.col(j) *= d_[j];

  for (const VecI& m : all) {
    bool pos = true, neg = true;
    for (int j = 0; j < n; ++j) {
      if (m(j) > 0) neg = false;
      if (m(j) < 0) pos = false;
    }
    if (!pos && !neg) throw std::logic_error("root with mixed signs");
    if (!pos) continue;
    Root r;
    r.simple = m;
    r.omega = cartan_.transpose() * m;
    r.length_sq = (m.transpose() * b * m)(0, 0);
    r.height = static_cast<int>(m.sum());
    positive_.push_back(std::move(r));
  }
  if (count() != positive_root_count(t)) {
    throw std::logic_error("positive root count mismatch for " + to_string(t));
  }

  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& c) {
    if (a.height != c.height) return a.height < c.height;
    for (int j = 0; j < a.simple.size(); ++j) {
      if (a.simple(j) != c.simple(j)) return a.simple(j) > c.simple(j);
    }
    return false;
  });

  pairing_ = MatI(n, count());
  root_refl_.reserve(positive_.size());
  for (int idx = 0; idx < count(); ++idx) {
    const Root& r = positive_[idx];
    index_.emplace(key(r.omega), idx);
    for (int i = 0; i < n; ++i) {
      // <omega_i, beta^vee> = 2 (omega_i, beta) / (beta,beta) = 2 d_i m_i / (beta,beta)
      const std::int64_t num = 2 * d_[i] * r.simple(i);
      if (num % r.length_sq != 0) throw std::logic_error("non-integral coroot pairing");
      pairing_(i, idx) = num / r.length_sq;
    }
    // sigma_beta(omega_k) = omega_k - <omega_k, beta^vee> beta
    MatI refl = MatI::Identity(n, n);
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) refl(j, k) -= pairing_(k, idx) * r.omega(j);
    }
    root_refl_.push_back(std::move(refl));
  }
}

std::optional<int> RootSystem::find_positive(const VecI& omega) const {
  auto it = index_.find(key(omega));
  if (it == index_.end()) return std::nullopt;
  // FNV collisions are not expected at these sizes, but verify exactly.
  if (positive_[it->second].omega != omega) return std::nullopt;
  return it->second;
}

bool RootSystem::is_positive_root(const VecI& omega) const {
  if (find_positive(omega)) return true;
  VecI neg = -omega;
  if (find_positive(neg)) return false;
  throw std::invalid_argument("vector is not a root");
}

}  // namespace flagring
