/**
 * @file divided_difference.cpp
 */
#include "flagring/divided_difference.hpp"

namespace flagring {

PolyQ simple_root_poly(const RootSystem& rs, int i) {
  PolyQ alpha;
  for (int k = 0; k < rs.rank(); ++k) {
    const std::int64_t c = rs.cartan()(i - 1, k);
    if (c != 0) alpha += PolyQ::from_monomial(Monomial::unit(k), Rat(c));
  }
  return alpha;
}

PolyQ reflect(const RootSystem& rs, const PolyQ& f, int i) {
  return f.substitute(i - 1, PolyQ::variable(i - 1) - simple_root_poly(rs, i));
}

PolyQ weyl_action(const RootSystem& rs, const MatI& w, const PolyQ& f) {
  std::vector<PolyQ> images(static_cast<std::size_t>(rs.rank()));
  for (int k = 0; k < rs.rank(); ++k) {
    PolyQ image;
    for (int j = 0; j < rs.rank(); ++j) {
      const std::int64_t c = w(j, k);
      if (c != 0) image += PolyQ::from_monomial(Monomial::unit(j), Rat(c));
    }
    images[static_cast<std::size_t>(k)] = std::move(image);
  }
  return f.substitute_all(images);
}

PolyQ divided_difference(const RootSystem& rs, const PolyQ& f, int i) {
  PolyQ difference = f - reflect(rs, f, i);
  if (difference.is_zero()) return {};
  return divide_by_linear(difference, simple_root_poly(rs, i));
}

PolyQ apply_divided_differences(const RootSystem& rs, PolyQ f, const Word& word) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (f.is_zero()) return {};
    f = divided_difference(rs, f, *it);
  }
  return f;
}

}  // namespace flagring
