/**
 * @file test_lie_data.cpp
 * @brief Cartan matrices, symmetrizers, and root systems against known data.
 */
#include <doctest.h>

#include "flagring/root_system.hpp"

#include <map>

using namespace flagring;

namespace {

MatI mat(const std::vector<std::vector<std::int64_t>>& rows) {
  const int n = static_cast<int>(rows.size());
  MatI m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return m;
}

}  // namespace

TEST_CASE("lie type parsing") {
  CHECK(parse_lie_type("E7") == LieType{Family::E, 7});
  CHECK(parse_lie_type("G2") == LieType{Family::G, 2});
  CHECK(to_string(LieType{Family::F, 4}) == "F4");
  CHECK_THROWS(parse_lie_type("B3"));
  CHECK_THROWS(parse_lie_type("E9"));
}

TEST_CASE("cartan matrices match the standard tables") {
  CHECK(cartan_matrix({Family::G, 2}) == mat({{2, -1}, {-3, 2}}));
  CHECK(cartan_matrix({Family::A, 3}) ==
        mat({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}));
  CHECK(cartan_matrix({Family::C, 3}) ==
        mat({{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}}));
  CHECK(cartan_matrix({Family::F, 4}) ==
        mat({{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}));
  CHECK(cartan_matrix({Family::E, 6}) == mat({{2, 0, -1, 0, 0, 0},
                                              {0, 2, 0, -1, 0, 0},
                                              {-1, 0, 2, -1, 0, 0},
                                              {0, -1, -1, 2, -1, 0},
                                              {0, 0, 0, -1, 2, -1},
                                              {0, 0, 0, 0, -1, 2}}));
}

TEST_CASE("symmetrizers give minimal root lengths") {
  using V = std::vector<std::int64_t>;
  CHECK(symmetrizers(cartan_matrix({Family::G, 2})) == V{1, 3});
  CHECK(symmetrizers(cartan_matrix({Family::F, 4})) == V{2, 2, 1, 1});
  CHECK(symmetrizers(cartan_matrix({Family::C, 4})) == V{1, 1, 1, 2});
  CHECK(symmetrizers(cartan_matrix({Family::E, 8})) == V(8, 1));
  // defining identity C(i,j) d_j = C(j,i) d_i
  for (const char* name : {"A4", "C3", "G2", "F4", "E6", "E7", "E8"}) {
    MatI c = cartan_matrix(parse_lie_type(name));
    auto d = symmetrizers(c);
    for (int i = 0; i < c.rows(); ++i)
      for (int j = 0; j < c.cols(); ++j)
        CHECK(c(i, j) * d[static_cast<std::size_t>(j)] ==
              c(j, i) * d[static_cast<std::size_t>(i)]);
  }
}

TEST_CASE("simple reflections are involutions fixing the wall") {
  for (const char* name : {"A2", "C3", "G2", "F4", "E6"}) {
    const LieType t = parse_lie_type(name);
    const MatI c = cartan_matrix(t);
    const int n = static_cast<int>(c.rows());
    for (int i = 1; i <= n; ++i) {
      const MatI s = simple_reflection_matrix(c, i);
      CHECK(s * s == MatI::Identity(n, n));
      // sigma_i(alpha_i) = -alpha_i where row i-1 of C is alpha_i
      VecI alpha = c.row(i - 1).transpose();
      CHECK(s * alpha == -alpha);
      // sigma_i(omega_j) = omega_j for j != i
      for (int j = 0; j < n; ++j)
        if (j != i - 1) CHECK(s.col(j) == VecI(VecI::Unit(n, j)));
    }
  }
}

TEST_CASE("positive root enumeration") {
  struct Probe {
    const char* name;
    int count;
    std::map<std::int64_t, int> by_length;  // (beta,beta) -> multiplicity
  };
  // Short roots are normalized to (beta,beta) = 2.
  const Probe probes[] = {
      {"A3", 6, {{2, 6}}},
      {"C3", 9, {{2, 6}, {4, 3}}},
      {"G2", 6, {{2, 3}, {6, 3}}},
      {"F4", 24, {{2, 12}, {4, 12}}},
      {"E6", 36, {{2, 36}}},
      {"E7", 63, {{2, 63}}},
      {"E8", 120, {{2, 120}}},
  };
  for (const Probe& p : probes) {
    CAPTURE(p.name);
    RootSystem rs(parse_lie_type(p.name));
    REQUIRE(rs.count() == p.count);
    std::map<std::int64_t, int> seen;
    for (const Root& r : rs.positive_roots()) ++seen[r.length_sq];
    CHECK(seen == p.by_length);
    // simple roots come first, in node order
    for (int i = 0; i < rs.rank(); ++i) {
      CHECK(rs.positive(i).height == 1);
      CHECK(rs.positive(i).simple == VecI(VecI::Unit(rs.rank(), i)));
      CHECK(rs.positive(i).omega ==
            VecI(rs.cartan().row(i).transpose()));
    }
  }
}

TEST_CASE("root reflections and coroot pairings") {
  for (const char* name : {"C3", "G2", "F4", "E6"}) {
    RootSystem rs(parse_lie_type(name));
    const int n = rs.rank();
    for (int b = 0; b < rs.count(); ++b) {
      const MatI& refl = rs.reflection(b);
      CHECK(refl * refl == MatI::Identity(n, n));
      CHECK(refl * rs.positive(b).omega == -rs.positive(b).omega);
      // reflection of a fundamental weight: omega_k - <omega_k,beta^vee> beta
      for (int k = 1; k <= n; ++k) {
        VecI expected = VecI::Unit(n, k - 1) -
                        rs.coroot_pairing(k, b) * rs.positive(b).omega;
        CHECK(refl.col(k - 1) == expected);
      }
    }
    // <omega_i, alpha_j^vee> = delta_ij on the leading simple-root block
    for (int i = 1; i <= n; ++i)
      for (int j = 0; j < n; ++j)
        CHECK(rs.coroot_pairing(i, j) == (i - 1 == j ? 1 : 0));
    // image of a root under a simple reflection is found by lookup
    for (int b = 0; b < rs.count(); ++b)
      for (int i = 1; i <= n; ++i) {
        VecI image = rs.simple_reflection(i) * rs.positive(b).omega;
        bool is_alpha_i = b == i - 1;
        if (is_alpha_i)
          CHECK(!rs.is_positive_root(image));
        else
          CHECK(rs.is_positive_root(image));  // permutes the other positives
      }
  }
}
