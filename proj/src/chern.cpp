#include "flagring/chern.hpp"

#include <stdexcept>
#include <string>

namespace flagring {

namespace {

PolyQ w(int i) { return PolyQ::variable(i - 1); }  // 1-based weight variable

}  // namespace

std::vector<PolyQ> chern_roots(const LieType& type) {
  if (type.family == Family::F) {
    return {
        w(4),
        w(3) - w(4),
        w(2) - w(3),
        w(1) - w(2) + w(3),
        w(1) - w(3) + w(4),
        w(1) - w(4),
    };
  }
  if (type.family == Family::E) {
    const int n = type.rank;
    std::vector<PolyQ> t;
    t.reserve(static_cast<std::size_t>(n));
    t.push_back(w(n));
    for (int k = 2; k <= n - 3; ++k) t.push_back(w(n + 1 - k) - w(n + 2 - k));
    t.push_back(w(3) - w(4) + w(2));
    t.push_back(w(1) - w(3) + w(2));
    t.push_back(-w(1) + w(2));
    return t;
  }
  if (type.family == Family::A) {
    const int n = type.rank;
    std::vector<PolyQ> t;
    t.reserve(static_cast<std::size_t>(n) + 1);
    t.push_back(w(1));
    for (int k = 2; k <= n; ++k) t.push_back(w(k) - w(k - 1));
    t.push_back(-w(n));
    return t;
  }
  if (type.family == Family::C) {
    const int n = type.rank;
    std::vector<PolyQ> t;
    t.reserve(static_cast<std::size_t>(n));
    t.push_back(w(1));
    for (int k = 2; k <= n; ++k) t.push_back(w(k) - w(k - 1));
    return t;
  }
  throw std::invalid_argument("chern_roots: no reduced bundle data for " +
                              to_string(type));
}

PolyQ c_polynomial(const LieType& type, int r) {
  const std::vector<PolyQ> roots = chern_roots(type);
  if (r < 1 || r > static_cast<int>(roots.size()))
    throw std::invalid_argument("c_polynomial: degree " + std::to_string(r) +
                                " out of range for " + to_string(type));
  return elementary_symmetric<Rat>(roots, r);
}

}  // namespace flagring
