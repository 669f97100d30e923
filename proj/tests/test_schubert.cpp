/**
 * @file test_schubert.cpp
 * @brief Schubert-basis expansion, Chevalley products, lifts, and Giambelli
 *        solving, cross-checked between the two independent expansion routes
 *        (divided differences versus iterated Chevalley steps).
 */
#include <algorithm>
#include <memory>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "flagring/chern.hpp"
#include "flagring/divided_difference.hpp"
#include "flagring/schubert.hpp"
#include "flagring/weyl.hpp"

using namespace flagring;

namespace {

PolyQ w(int i) { return PolyQ::variable(i - 1); }

std::shared_ptr<const CosetTable> build_table(const std::string& type,
                                              std::vector<int> marked,
                                              int max_degree = -1) {
  auto rs = std::make_shared<const RootSystem>(parse_lie_type(type));
  CosetTable::BuildOptions opts;
  opts.max_degree = max_degree;
  return std::make_shared<const CosetTable>(
      CosetTable::build(std::move(rs), std::move(marked), opts));
}

std::vector<int> all_nodes(int rank) {
  std::vector<int> nodes(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) nodes[static_cast<std::size_t>(i)] = i + 1;
  return nodes;
}

/// All monomials in the given 1-based variables with total degree in [1, cap].
std::vector<Monomial> monomials_up_to(const std::vector<int>& nodes, int cap) {
  std::vector<Monomial> out;
  std::vector<Monomial> level{Monomial()};
  for (int d = 1; d <= cap; ++d) {
    std::vector<Monomial> next;
    for (const Monomial& m : level)
      for (int node : nodes) {
        Monomial grown = m * Monomial::unit(node - 1);
        if (std::find(next.begin(), next.end(), grown) == next.end())
          next.push_back(grown);
      }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

PolyQ random_poly(std::mt19937& rng, int vars, int degree_cap) {
  std::uniform_int_distribution<int> coeff(-3, 3);
  std::uniform_int_distribution<int> exp(0, degree_cap);
  std::vector<Term<Rat>> terms;
  for (int t = 0; t < 8; ++t) {
    Monomial m;
    int budget = degree_cap;
    for (int v = 0; v < vars; ++v) {
      const int e = std::min(exp(rng), budget);
      m.set(v, e);
      budget -= e;
    }
    terms.push_back({m, Rat(coeff(rng))});
  }
  return PolyQ::from_terms(std::move(terms));
}

}  // namespace

TEST_CASE("combination arithmetic, rendering, and accessors") {
  const SchubertCombination a =
      SchubertCombination::single(3, 0, 6) - SchubertCombination::single(3, 1);
  CHECK(a.to_string() == "6*s[3,1] - s[3,2]");
  CHECK(SchubertCombination::unit().to_string() == "s[0,1]");
  CHECK(SchubertCombination().to_string() == "0");
  CHECK(a.coefficient(0) == 6);
  CHECK(a.coefficient(1) == -1);
  CHECK(a.coefficient(7) == 0);
  CHECK(a.degree() == 3);

  SchubertCombination b = a;
  b -= a;
  CHECK(b.is_zero());
  b += SchubertCombination::single(3, 2, 4);
  CHECK(b.degree() == 3);
  b *= Int(0);
  CHECK(b.is_zero());

  const std::vector<Int> dense{Int(0), Int(2), Int(-1)};
  const SchubertCombination c = SchubertCombination::from_dense(5, dense);
  CHECK(c.coeffs().size() == 2);
  CHECK(c.coefficient(1) == 2);
  CHECK(c.coefficient(2) == -1);

  const SchubertCombination wrong_degree = SchubertCombination::single(2, 0);
  SchubertCombination sum = SchubertCombination::single(3, 0);
  CHECK_THROWS_AS(sum += wrong_degree, std::invalid_argument);
}

TEST_CASE("reference expansions on the rank-1 F4 quotient") {
  const auto table = build_table("F4", {1});
  CHECK(table->complete());
  CHECK(table->dimension() == 15);
  CHECK(table->total_size() == 24);

  const LieType f4 = table->roots().type();
  CHECK(lr_expand(*table, c_polynomial(f4, 3)) ==
        SchubertCombination::single(3, 0, 6));
  CHECK(lr_expand(*table, c_polynomial(f4, 4)) ==
        SchubertCombination::single(4, 0, 2) + SchubertCombination::single(4, 1, 7));

  CHECK(lr_expand(*table, w(1) * w(1)) == SchubertCombination::single(2, 0));
  CHECK(lr_expand(*table, w(1) * w(1) * w(1)) ==
        SchubertCombination::single(3, 0, 2));
  CHECK(lr_expand(*table, w(1).pow(4)) ==
        SchubertCombination::single(4, 0, 2) + SchubertCombination::single(4, 1, 4));

  SUBCASE("single-coefficient evaluation agrees") {
    CHECK(lr_coefficient(*table, 3, 0, c_polynomial(f4, 3)) == 6);
    CHECK(lr_coefficient(*table, 4, 0, c_polynomial(f4, 4)) == 2);
    CHECK(lr_coefficient(*table, 4, 1, c_polynomial(f4, 4)) == 7);
    CHECK(lr_coefficient(*table, 5, 0, c_polynomial(f4, 4)) == 0);
    CHECK_THROWS_AS(lr_coefficient(*table, 16, 0, w(1)), std::out_of_range);
    CHECK_THROWS_AS(lr_coefficient(*table, 4, 2, w(1)), std::out_of_range);
  }
}

TEST_CASE("expansion direction is pinned: the three alternatives all fail") {
  // Candidates: compose the difference operators along the minimal word or
  // its reversal, with either sign of the single-letter operator.  Only the
  // forward word with the positive sign reproduces both reference vectors.
  const auto table = build_table("F4", {1}, 4);
  const RootSystem& rs = table->roots();
  const PolyQ c3 = c_polynomial(rs.type(), 3);
  const PolyQ c4 = c_polynomial(rs.type(), 4);

  int passing = 0;
  for (const bool reversed : {false, true})
    for (const int letter_sign : {1, -1}) {
      auto coefficient = [&](const PolyQ& f, int r, int i) {
        Word word = table->min_word(r, i);
        if (reversed) std::reverse(word.begin(), word.end());
        const int sign = (r % 2 == 1 && letter_sign < 0) ? -1 : 1;
        return apply_divided_differences(rs, f, word).constant_term() * sign;
      };
      const bool ok = coefficient(c3, 3, 0) == 6 && coefficient(c4, 4, 0) == 2 &&
                      coefficient(c4, 4, 1) == 7;
      if (ok) {
        ++passing;
        CHECK_FALSE(reversed);
        CHECK(letter_sign == 1);
      }
    }
  CHECK(passing == 1);
}

TEST_CASE("unit and degree-one expansions") {
  const auto g2 = build_table("G2", {1, 2});
  CHECK(lr_expand(*g2, PolyQ{Rat(1)}) == SchubertCombination::unit());
  CHECK(lr_expand(*g2, PolyQ()) == SchubertCombination());

  const auto f4 = build_table("F4", all_nodes(4));
  for (int i = 1; i <= 4; ++i)
    CHECK(lr_expand(*f4, w(i)) ==
          SchubertCombination::single(1, static_cast<std::uint32_t>(i - 1)));

  const auto e6 = build_table("E6", {2});
  CHECK(e6->total_size() == 72);
  CHECK(lr_expand(*e6, w(2)) == SchubertCombination::single(1, 0));
}

TEST_CASE("divided-difference and Chevalley expansions agree on monomials") {
  struct Case {
    const char* type;
    std::vector<int> marked;
    int cap;
  };
  const std::vector<Case> cases = {
      {"G2", {1, 2}, 5}, {"G2", {1}, 5},  {"G2", {2}, 5},
      {"F4", {1}, 5},    {"F4", {1, 2, 3, 4}, 5}, {"E6", {2}, 5},
  };
  for (const Case& c : cases) {
    CAPTURE(c.type);
    const auto table = build_table(c.type, c.marked);
    ChevalleyExpander expander(*table);
    for (const Monomial& m : monomials_up_to(c.marked, c.cap)) {
      const SchubertCombination via_chevalley = expander.expand(m);
      const SchubertCombination via_differences =
          lr_expand(*table, PolyQ::from_monomial(m));
      CHECK(via_chevalley == via_differences);
    }
  }
}

TEST_CASE("expansion input validation") {
  const auto g2 = build_table("G2", {1, 2});
  CHECK_THROWS_AS(lr_expand(*g2, PolyQ::variable(2)), std::invalid_argument);
  CHECK_THROWS_AS(lr_expand(*g2, w(1) + w(1) * w(2)), std::invalid_argument);

  // Beyond the dimension of a complete table the expansion is zero.
  const SchubertCombination top = lr_expand(*g2, w(1).pow(7));
  CHECK(top.is_zero());
  CHECK(top.degree() == 7);

  // A truncated table refuses degrees it cannot see.
  const auto shallow = build_table("F4", {1}, 3);
  CHECK_FALSE(shallow->complete());
  CHECK_THROWS_AS(lr_expand(*shallow, w(1).pow(4)), ResourceCapExceeded);
  CHECK_THROWS_AS(
      chevalley_multiply(*shallow, 1, SchubertCombination::single(3, 0)),
      ResourceCapExceeded);
}

TEST_CASE("Chevalley steps require a marked node") {
  const auto q = build_table("G2", {1});
  CHECK_THROWS_AS(chevalley_multiply(*q, 2, SchubertCombination::unit()),
                  std::invalid_argument);
  const SchubertCombination step = chevalley_multiply(*q, 1, SchubertCombination::unit());
  CHECK(step == SchubertCombination::single(1, 0));
}

TEST_CASE("degree-six classes divisible by two: cube fixtures") {
  // On both full flags the half-cube of the first weight is a single class,
  // the one whose minimal word ends the identification below.
  const auto g2 = build_table("G2", {1, 2});
  const MatI g2_word = word_matrix(g2->roots(), Word{1, 2, 1});
  const auto g2_pos = g2->index_of(g2_word);
  REQUIRE(g2_pos.has_value());
  CHECK(lr_expand(*g2, w(1).pow(3) * Rat(1, 2)) ==
        SchubertCombination::single(g2_pos->first,
                                    static_cast<std::uint32_t>(g2_pos->second)));

  const auto f4 = build_table("F4", all_nodes(4));
  const MatI f4_word = word_matrix(f4->roots(), Word{3, 2, 1});
  const auto f4_pos = f4->index_of(f4_word);
  REQUIRE(f4_pos.has_value());
  CHECK(f4_pos->first == 3);
  CHECK(lr_expand(*f4, w(1).pow(3) * Rat(1, 2)) ==
        SchubertCombination::single(3, static_cast<std::uint32_t>(f4_pos->second)));

  // The same elements are minimal representatives on the rank-1 quotients,
  // so the identification descends.
  const auto g2q = build_table("G2", {1});
  CHECK(g2q->index_of(g2_word).has_value());
  const auto f4q = build_table("F4", {1});
  CHECK(f4q->index_of(f4_word) == std::make_pair(3, 0));
}

TEST_CASE("lifts re-expand to the class they lift") {
  SUBCASE("rank-1 F4 quotient, all classes of degree at most nine") {
    SchubertCalculus calc(build_table("F4", {1}));
    for (int r = 0; r <= 9; ++r)
      for (int i = 0; i < calc.table().slice_size(r); ++i) {
        const PolyQ lifted = calc.lift(r, static_cast<std::uint32_t>(i));
        CHECK(calc.expand(lifted) ==
              SchubertCombination::single(r, static_cast<std::uint32_t>(i)));
      }
  }
  SUBCASE("G2 full flag, every class") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    for (int r = 0; r <= calc.table().dimension(); ++r)
      for (int i = 0; i < calc.table().slice_size(r); ++i) {
        const PolyQ lifted = calc.lift(r, static_cast<std::uint32_t>(i));
        CHECK(calc.expand(lifted) ==
              SchubertCombination::single(r, static_cast<std::uint32_t>(i)));
      }
  }
  SUBCASE("rank-1 G2 quotients, every class") {
    for (int node : {1, 2}) {
      SchubertCalculus calc(build_table("G2", {node}));
      for (int r = 0; r <= calc.table().dimension(); ++r) {
        const PolyQ lifted = calc.lift(r, 0);
        CHECK(calc.expand(lifted) == SchubertCombination::single(r, 0));
      }
    }
  }
  SUBCASE("E6 quotient at node 2, low degrees") {
    SchubertCalculus calc(build_table("E6", {2}));
    for (int r = 0; r <= 4; ++r)
      for (int i = 0; i < calc.table().slice_size(r); ++i) {
        const PolyQ lifted = calc.lift(r, static_cast<std::uint32_t>(i));
        CHECK(calc.expand(lifted) ==
              SchubertCombination::single(r, static_cast<std::uint32_t>(i)));
      }
  }
  SUBCASE("zero lifts to zero") {
    SchubertCalculus calc(build_table("G2", {1}));
    CHECK(calc.lift(SchubertCombination()).is_zero());
  }
}

TEST_CASE("products commute, associate, and respect the unit") {
  SUBCASE("G2 full flag: all pairs") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    const CosetTable& t = calc.table();
    std::vector<SchubertCombination> classes;
    for (int r = 0; r <= t.dimension(); ++r)
      for (int i = 0; i < t.slice_size(r); ++i)
        classes.push_back(SchubertCombination::single(r, static_cast<std::uint32_t>(i)));
    for (std::size_t a = 0; a < classes.size(); ++a)
      for (std::size_t b = a; b < classes.size(); ++b)
        CHECK(calc.product(classes[a], classes[b]) ==
              calc.product(classes[b], classes[a]));

    // unit and scalar behaviour
    const SchubertCombination x = SchubertCombination::single(2, 1);
    CHECK(calc.product(SchubertCombination::unit(), x) == x);
    SchubertCombination three = SchubertCombination::single(0, 0, 3);
    SchubertCombination tripled = x;
    tripled *= Int(3);
    CHECK(calc.product(three, x) == tripled);
    CHECK(calc.product(SchubertCombination(), x).is_zero());
  }
  SUBCASE("G2 full flag: associativity on low-degree triples") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    std::vector<SchubertCombination> small;
    for (int r = 1; r <= 2; ++r)
      for (int i = 0; i < calc.table().slice_size(r); ++i)
        small.push_back(SchubertCombination::single(r, static_cast<std::uint32_t>(i)));
    for (const auto& a : small)
      for (const auto& b : small)
        for (const auto& c : small)
          CHECK(calc.product(calc.product(a, b), c) ==
                calc.product(a, calc.product(b, c)));
  }
  SUBCASE("rank-1 F4 quotient: commutativity across degrees") {
    SchubertCalculus calc(build_table("F4", {1}));
    const CosetTable& t = calc.table();
    for (int ra = 1; ra <= 4; ++ra)
      for (int ia = 0; ia < t.slice_size(ra); ++ia)
        for (int rb = ra; ra + rb <= 9; ++rb)
          for (int ib = 0; ib < t.slice_size(rb); ++ib) {
            const auto a = SchubertCombination::single(ra, static_cast<std::uint32_t>(ia));
            const auto b = SchubertCombination::single(rb, static_cast<std::uint32_t>(ib));
            CHECK(calc.product(a, b) == calc.product(b, a));
          }
  }
  SUBCASE("products beyond the dimension vanish") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    const auto top = SchubertCombination::single(6, 0);
    CHECK(calc.product(top, SchubertCombination::single(1, 0)).is_zero());
  }
}

TEST_CASE("quotient products agree with full-flag products") {
  const auto full = build_table("G2", {1, 2});
  for (int node : {1, 2}) {
    SchubertCalculus qcalc(build_table("G2", {node}));
    SchubertCalculus fcalc(full);
    const CosetTable& q = qcalc.table();
    // Map each quotient class to its full-flag position via its matrix.
    auto lift_index = [&](int r, int i) {
      const auto pos = full->index_of(word_matrix(q.roots(), q.min_word(r, i)));
      REQUIRE(pos.has_value());
      return SchubertCombination::single(pos->first,
                                         static_cast<std::uint32_t>(pos->second));
    };
    for (int ra = 1; ra <= q.dimension(); ++ra)
      for (int rb = ra; ra + rb <= q.dimension(); ++rb) {
        const auto qprod = qcalc.product(SchubertCombination::single(ra, 0),
                                         SchubertCombination::single(rb, 0));
        const auto fprod = fcalc.product(lift_index(ra, 0), lift_index(rb, 0));
        // Compare coefficient-by-coefficient through the index map.
        for (int i = 0; i < q.slice_size(ra + rb); ++i) {
          const auto target = lift_index(ra + rb, i);
          CHECK(qprod.coefficient(static_cast<std::uint32_t>(i)) ==
                fprod.coefficient(target.coeffs().front().first));
        }
      }
  }
}

TEST_CASE("top-degree pairings of complementary classes are permutations") {
  SUBCASE("G2 full flag at middle degree") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    // dimension 6; pair degree 3 against itself.
    MatZ pairing(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        pairing(i, j) = calc.product(SchubertCombination::single(3, static_cast<std::uint32_t>(i)),
                                     SchubertCombination::single(3, static_cast<std::uint32_t>(j)))
                            .coefficient(0);
    int ones = 0;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        CHECK((pairing(i, j) == 0 || pairing(i, j) == 1));
        if (pairing(i, j) == 1) ++ones;
      }
    CHECK(ones == 2);
    CHECK(pairing.row(0).sum() == 1);
    CHECK(pairing.row(1).sum() == 1);
  }
  SUBCASE("rank-1 F4 quotient at degrees 7 and 8") {
    SchubertCalculus calc(build_table("F4", {1}));
    MatZ pairing(2, 2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        pairing(i, j) = calc.product(SchubertCombination::single(7, static_cast<std::uint32_t>(i)),
                                     SchubertCombination::single(8, static_cast<std::uint32_t>(j)))
                            .coefficient(0);
    CHECK(pairing(0, 0) == 0);
    CHECK(pairing(0, 1) == 1);
    CHECK(pairing(1, 0) == 1);
    CHECK(pairing(1, 1) == 0);
  }
}

TEST_CASE("polynomial Chevalley walks match lift-and-expand") {
  SUBCASE("G2 full flag") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    ChevalleyExpander& ex = calc.expander();
    const std::vector<std::pair<PolyQ, SchubertCombination>> cases = {
        {w(2) * w(2), SchubertCombination::single(1, 0)},
        {w(1) * w(2), SchubertCombination::single(2, 1)},
        {w(1) + w(2), SchubertCombination::single(3, 0)},
    };
    for (const auto& [f, seed] : cases) {
      const SchubertCombination walked = ex.apply(f, seed);
      const SchubertCombination expanded = calc.expand(f * calc.lift(seed));
      CHECK(walked == expanded);
    }
  }
  SUBCASE("rank-1 F4 quotient") {
    SchubertCalculus calc(build_table("F4", {1}));
    const PolyQ f = w(1) * w(1);
    const auto seed = SchubertCombination::single(4, 1);
    CHECK(calc.expander().apply(f, seed) == calc.expand(f * calc.lift(seed)));
  }
}

TEST_CASE("generator polynomials evaluate through seeded walks") {
  const auto table = build_table("G2", {1, 2});
  SchubertCalculus calc(table);
  std::vector<Generator> gens = make_weight_generators(*table);
  CHECK(gens.size() == 2);
  CHECK(gens[0].name == "w1");
  CHECK(gens[1].node == 2);

  // Adjoin a special degree-2 generator with a known lift.
  Generator special;
  special.name = "a";
  special.degree = 2;
  special.node = 0;
  special.lift = w(1) * w(2);
  special.value = lr_expand(*table, special.lift);
  gens.push_back(special);

  const VarTable vars = generator_vars(gens);
  CHECK(vars.count() == 3);
  CHECK(vars.find("a") == 2);

  auto eval = [&](const std::string& text) {
    return evaluate_generator_polynomial(calc, gens, parse_poly(text, vars));
  };
  CHECK(eval("w1^3") == lr_expand(*table, w(1).pow(3)));
  CHECK(eval("a*w1") == lr_expand(*table, w(1) * w(1) * w(2)));
  CHECK(eval("a^2") == lr_expand(*table, (w(1) * w(2)).pow(2)));
  CHECK(eval("a^2 - 2*a*w1^2 + w2^4") ==
        lr_expand(*table, (w(1) * w(2)).pow(2) - w(1).pow(2) * (w(1) * w(2)) * 2 +
                              w(2).pow(4)));

  CHECK_THROWS_AS(eval("w1 + w1^2"), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_generator_polynomial(calc, gens, PolyQ::variable(3)),
                  std::invalid_argument);

  SUBCASE("quotient path assembles invariant lifts") {
    SchubertCalculus qcalc(build_table("F4", {1}));
    const std::vector<Generator> qgens = make_weight_generators(qcalc.table());
    CHECK(qgens.size() == 1);
    const SchubertCombination got = evaluate_generator_polynomial(
        qcalc, qgens, PolyQ::from_monomial(Monomial::unit(0, 4)));
    CHECK(got == lr_expand(qcalc.table(), w(1).pow(4)));
  }
}

TEST_CASE("Giambelli solving over the weight generators") {
  SUBCASE("G2 full flag generates in degrees one and two but not three") {
    SchubertCalculus calc(build_table("G2", {1, 2}));
    const std::vector<Generator> gens = make_weight_generators(calc.table());
    const VarTable vars = generator_vars(gens);

    const auto deg1 = giambelli_polynomials(calc, gens, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(to_string(deg1[0], vars) == "w1");
    CHECK(to_string(deg1[1], vars) == "w2");

    const auto deg2 = giambelli_polynomials(calc, gens, 2);
    REQUIRE(deg2.size() == 2);
    for (int i = 0; i < 2; ++i)
      CHECK(evaluate_generator_polynomial(calc, gens, deg2[static_cast<std::size_t>(i)]) ==
            SchubertCombination::single(2, static_cast<std::uint32_t>(i)));
    CHECK(to_string(deg2[1], vars) == "w1^2");

    CHECK_THROWS_WITH_AS(giambelli_polynomials(calc, gens, 3),
                         "generators do not generate in degree 3",
                         std::runtime_error);
  }
  SUBCASE("rank-1 F4 quotient needs more than its weight class") {
    SchubertCalculus calc(build_table("F4", {1}));
    const std::vector<Generator> gens = make_weight_generators(calc.table());
    const auto deg1 = giambelli_polynomials(calc, gens, 1);
    REQUIRE(deg1.size() == 1);
    CHECK(to_string(deg1[0], generator_vars(gens)) == "w1");
    CHECK_THROWS_AS(giambelli_polynomials(calc, gens, 3), std::runtime_error);
  }
}

TEST_CASE("isotropy invariance predicate") {
  const RootSystem f4(parse_lie_type("F4"));
  const std::vector<int> node1{1};
  CHECK(verify_invariance(f4, c_polynomial(f4.type(), 4), node1));
  CHECK(verify_invariance(f4, w(1), node1));
  CHECK_FALSE(verify_invariance(f4, w(2), node1));

  const RootSystem e6(parse_lie_type("E6"));
  const std::vector<int> node2{2};
  CHECK_FALSE(verify_invariance(e6, w(1), node2));
  CHECK(verify_invariance(e6, c_polynomial(e6.type(), 2), node2));

  const RootSystem g2(parse_lie_type("G2"));
  const PolyQ killing = w(1) * w(1) * 3 - w(1) * w(2) * 3 + w(2) * w(2);
  CHECK(verify_invariance(g2, killing, std::vector<int>{}));
  CHECK(verify_invariance(g2, w(1), std::vector<int>{1}));
  CHECK_FALSE(verify_invariance(g2, w(1), std::vector<int>{2}));
}

TEST_CASE("difference operators square to zero and are word-independent") {
  std::mt19937 rng(314159);
  for (const char* type : {"G2", "F4"}) {
    CAPTURE(type);
    const RootSystem rs(parse_lie_type(type));
    for (int trial = 0; trial < 10; ++trial) {
      const PolyQ f = random_poly(rng, rs.rank(), 3);
      for (int i = 1; i <= rs.rank(); ++i)
        CHECK(divided_difference(rs, divided_difference(rs, f, i), i).is_zero());
    }
  }

  // Equal Weyl elements give equal composite operators.
  const RootSystem f4(parse_lie_type("F4"));
  const RootSystem g2(parse_lie_type("G2"));
  struct Pair {
    const RootSystem* rs;
    Word a, b;
  };
  const std::vector<Pair> pairs = {
      {&f4, {1, 2, 1}, {2, 1, 2}},
      {&f4, {2, 3, 2, 3}, {3, 2, 3, 2}},
      {&f4, {1, 3}, {3, 1}},
      {&g2, {1, 2, 1, 2, 1, 2}, {2, 1, 2, 1, 2, 1}},
  };
  for (const Pair& p : pairs) {
    REQUIRE(word_matrix(*p.rs, p.a) == word_matrix(*p.rs, p.b));
    for (int trial = 0; trial < 5; ++trial) {
      const PolyQ f = random_poly(rng, p.rs->rank(), 4);
      CHECK((apply_divided_differences(*p.rs, f, p.a) -
             apply_divided_differences(*p.rs, f, p.b))
                .is_zero());
    }
  }
}
