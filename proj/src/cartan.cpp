#include "flagring/cartan.hpp"

#include <numeric>
#include <stdexcept>

namespace flagring {

namespace {

/// Adjacency pairs (1-based) with the off-diagonal entries (c_ij, c_ji).
struct Bond {
  int i, j;
  std::int64_t cij, cji;
};

std::vector<Bond> bonds(const LieType& t) {
  std::vector<Bond> b;
  const int n = t.rank;
  auto chain = [&](int upto) {
    for (int k = 1; k < upto; ++k) b.push_back({k, k + 1, -1, -1});
  };
  switch (t.family) {
    case Family::A:
      chain(n);
      break;
    case Family::C:
      chain(n - 1);
      // Double bond with the long root at node n: <a_{n-1},a_n^vee> = -1,
      // <a_n,a_{n-1}^vee> = -2.
      if (n >= 2) b.push_back({n - 1, n, -1, -2});
      break;
    case Family::G:
      // Short alpha_1, long alpha_2.
      b.push_back({1, 2, -1, -3});
      break;
    case Family::F:
      // Long 1,2; short 3,4; double bond 2=>3.
      b.push_back({1, 2, -1, -1});
      b.push_back({2, 3, -2, -1});
      b.push_back({3, 4, -1, -1});
      break;
    case Family::E:
      // Chain 1-3-4-5-...-n, plus node 2 attached to node 4.
      b.push_back({1, 3, -1, -1});
      for (int k = 3; k < n; ++k) b.push_back({k, k + 1, -1, -1});
      b.push_back({2, 4, -1, -1});
      break;
  }
  return b;
}

}  // namespace

MatI cartan_matrix(const LieType& t) {
  if (!is_supported(t)) {
    throw std::invalid_argument("unsupported Lie type " + to_string(t));
  }
  const int n = t.rank;
  MatI c = MatI::Zero(n, n);
  for (int i = 0; i < n; ++i) c(i, i) = 2;
  for (const Bond& b : bonds(t)) {
    c(b.i - 1, b.j - 1) = b.cij;
    c(b.j - 1, b.i - 1) = b.cji;
  }
  return c;
}

std::vector<std::int64_t> symmetrizers(const MatI& cartan) {
  const int n = static_cast<int>(cartan.rows());
  // Propagate d_j = d_i * c_ji / c_ij over the (connected) Dynkin graph, in
  // rationals represented as num/den pairs, then clear denominators.
  std::vector<std::int64_t> num(n, 0), den(n, 1);
  num[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (j == i || cartan(i, j) == 0 || num[j] != 0) continue;
      // both off-diagonal entries are negative, so the ratio is positive
      num[j] = -num[i] * cartan(j, i);
      den[j] = -den[i] * cartan(i, j);
      stack.push_back(j);
    }
  }
  std::int64_t l = 1;
  for (int i = 0; i < n; ++i) {
    if (num[i] == 0) throw std::invalid_argument("Dynkin diagram not connected");
    l = std::lcm(l, den[i]);
  }
  std::vector<std::int64_t> d(n);
  std::int64_t g = 0;
  for (int i = 0; i < n; ++i) {
    d[i] = num[i] * (l / den[i]);
    g = std::gcd(g, d[i]);
  }
  for (auto& x : d) x /= g;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (cartan(i, j) * d[j] != cartan(j, i) * d[i]) {
        throw std::logic_error("Cartan matrix is not symmetrizable");
      }
    }
  }
  return d;
}

MatI simple_reflection_matrix(const MatI& cartan, int i) {
  const int n = static_cast<int>(cartan.rows());
  if (i < 1 || i > n) throw std::out_of_range("simple reflection index");
  MatI m = MatI::Identity(n, n);
  // Column i-1 becomes e_i - alpha_i, with alpha_i = row i-1 of the Cartan
  // matrix read as weight coordinates.
  for (int j = 0; j < n; ++j) m(j, i - 1) -= cartan(i - 1, j);
  return m;
}

}  // namespace flagring
