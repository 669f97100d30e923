#include "flagring/schubert.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "flagring/chern.hpp"

namespace flagring {

namespace {

// Total degree = weighted degree with unit weights on every slot.
const std::vector<int> kUnitWeights(kMaxVars, 1);

void require_vars_below(const PolyQ& f, int n, const char* what) {
  for (const auto& t : f.terms())
    if (t.mono.max_var() >= n)
      throw std::invalid_argument(std::string(what) +
                                  ": variable index exceeds the ring rank");
}

void require_homogeneous(const PolyQ& f, const char* what) {
  if (!f.is_homogeneous(kUnitWeights))
    throw std::invalid_argument(std::string(what) +
                                ": polynomial is not homogeneous");
}

/// All monomials in variables 0..weights.size()-1 of the given weighted
/// degree, in descending lex order (variable 0 strongest).
std::vector<Monomial> monomials_of_weighted_degree(std::span<const int> weights,
                                                   int degree) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, int)> rec = [&](std::size_t v, int remaining) {
    if (v == weights.size()) {
      if (remaining == 0) out.push_back(cur);
      return;
    }
    const int top = std::min(remaining / weights[v], 255);
    for (int e = top; e >= 0; --e) {
      cur.set(static_cast<int>(v), e);
      rec(v + 1, remaining - e * weights[v]);
    }
    cur.set(static_cast<int>(v), 0);
  };
  if (degree >= 0) rec(0, degree);
  return out;
}

/// Core expansion: one divided difference per reachable table element, run
/// depth-first down the parent tree with zero subtrees pruned.
SchubertCombination lr_expand_impl(const CosetTable& table, const PolyQ& f) {
  if (f.is_zero()) return SchubertCombination();
  require_vars_below(f, table.rank(), "expand");
  require_homogeneous(f, "expand");
  const int r = f.total_degree();
  if (r > table.max_degree()) {
    if (table.complete()) return SchubertCombination(r);
    throw ResourceCapExceeded("expansion degree exceeds the built table");
  }

  // kids[k][i]: indices in slice k+1 whose parent is element i of slice k.
  std::vector<std::vector<std::vector<std::uint32_t>>> kids(
      static_cast<std::size_t>(r));
  for (int k = 1; k <= r; ++k) {
    auto& level = kids[static_cast<std::size_t>(k - 1)];
    level.assign(static_cast<std::size_t>(table.slice_size(k - 1)), {});
    const int sz = table.slice_size(k);
    for (int i = 0; i < sz; ++i)
      level[table.parent_of(k, i)].push_back(static_cast<std::uint32_t>(i));
  }

  const RootSystem& rs = table.roots();
  std::map<std::uint32_t, Int> acc;
  std::function<void(int, std::uint32_t, const PolyQ&)> walk =
      [&](int level, std::uint32_t index, const PolyQ& g) {
        if (level == r) {
          const Rat c = g.constant_term();
          if (c == 0) return;
          if (!is_integer(c))
            throw std::logic_error("expansion produced a non-integral coefficient");
          acc[index] = to_integer(c);
          return;
        }
        for (std::uint32_t child : kids[static_cast<std::size_t>(level)][index]) {
          PolyQ next = divided_difference(
              rs, g, table.letter_of(level + 1, static_cast<int>(child)));
          if (!next.is_zero()) walk(level + 1, child, next);
        }
      };
  walk(0, 0, f);
  return SchubertCombination::from_map(r, acc);
}

std::once_flag calibration_flag;

/// Direction self-check: the compiled-in convention (operators composed along
/// the lexicographically smallest word, last letter applied first) must send
/// the degree-3 and degree-4 Chern classes of the rank-1 F4 quotient to
/// 6*s[3,1] and 2*s[4,1] + 7*s[4,2].  Any word-order or sign slip breaks at
/// least one of the two.
void run_calibration() {
  auto rs = std::make_shared<const RootSystem>(parse_lie_type("F4"));
  CosetTable::BuildOptions opts;
  opts.max_degree = 4;
  const CosetTable table = CosetTable::build(rs, {1}, opts);
  const SchubertCombination got3 = lr_expand_impl(table, c_polynomial(rs->type(), 3));
  const SchubertCombination got4 = lr_expand_impl(table, c_polynomial(rs->type(), 4));
  const SchubertCombination want3 = SchubertCombination::single(3, 0, 6);
  const SchubertCombination want4 = SchubertCombination::single(4, 0, 2) +
                                    SchubertCombination::single(4, 1, 7);
  if (!(got3 == want3 && got4 == want4))
    throw std::logic_error(
        "divided-difference direction self-check failed: expected "
        "6*s[3,1] and 2*s[4,1] + 7*s[4,2] on the rank-1 F4 quotient, got " +
        got3.to_string() + " and " + got4.to_string());
}

}  // namespace

// ---------------------------------------------------------------------------
// SchubertCombination

SchubertCombination SchubertCombination::from_map(
    int degree, const std::map<std::uint32_t, Int>& m) {
  SchubertCombination x(degree);
  for (const auto& [index, c] : m)
    if (c != 0) x.coeffs_.emplace_back(index, c);
  return x;
}

SchubertCombination SchubertCombination::from_dense(int degree,
                                                    std::span<const Int> values) {
  SchubertCombination x(degree);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0)
      x.coeffs_.emplace_back(static_cast<std::uint32_t>(i), values[i]);
  return x;
}

Int SchubertCombination::coefficient(std::uint32_t index) const {
  const auto it = std::lower_bound(
      coeffs_.begin(), coeffs_.end(), index,
      [](const auto& entry, std::uint32_t v) { return entry.first < v; });
  if (it != coeffs_.end() && it->first == index) return it->second;
  return Int(0);
}

SchubertCombination& SchubertCombination::operator+=(const SchubertCombination& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (degree_ != o.degree_)
    throw std::invalid_argument("adding Schubert combinations of different degrees");
  std::vector<std::pair<std::uint32_t, Int>> merged;
  merged.reserve(coeffs_.size() + o.coeffs_.size());
  std::size_t a = 0, b = 0;
  while (a < coeffs_.size() || b < o.coeffs_.size()) {
    if (b == o.coeffs_.size() ||
        (a < coeffs_.size() && coeffs_[a].first < o.coeffs_[b].first)) {
      merged.push_back(coeffs_[a++]);
    } else if (a == coeffs_.size() || o.coeffs_[b].first < coeffs_[a].first) {
      merged.push_back(o.coeffs_[b++]);
    } else {
      Int sum = coeffs_[a].second + o.coeffs_[b].second;
      if (sum != 0) merged.emplace_back(coeffs_[a].first, std::move(sum));
      ++a, ++b;
    }
  }
  coeffs_ = std::move(merged);
  return *this;
}

SchubertCombination& SchubertCombination::operator-=(const SchubertCombination& o) {
  SchubertCombination neg = o;
  neg *= Int(-1);
  return *this += neg;
}

SchubertCombination& SchubertCombination::operator*=(const Int& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [index, value] : coeffs_) value *= c;
  return *this;
}

std::string SchubertCombination::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [index, c] : coeffs_) {
    const bool negative = c < 0;
    const Int magnitude = negative ? Int(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (magnitude != 1) out += magnitude.str() + "*";
    out += "s[" + std::to_string(degree_) + "," + std::to_string(index + 1) + "]";
    first = false;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Expansion

void ensure_expansion_calibrated() {
  std::call_once(calibration_flag, run_calibration);
}

SchubertCombination lr_expand(const CosetTable& table, const PolyQ& f) {
  ensure_expansion_calibrated();
  return lr_expand_impl(table, f);
}

Int lr_coefficient(const CosetTable& table, int r, int i, const PolyQ& f) {
  ensure_expansion_calibrated();
  require_vars_below(f, table.rank(), "expand");
  require_homogeneous(f, "expand");
  if (r < 0 || r > table.max_degree() || i < 0 || i >= table.slice_size(r))
    throw std::out_of_range("class index outside the built table");
  if (f.is_zero() || f.total_degree() != r) return Int(0);
  const PolyQ g = apply_divided_differences(table.roots(), f, table.min_word(r, i));
  const Rat c = g.constant_term();
  if (!is_integer(c))
    throw std::logic_error("expansion produced a non-integral coefficient");
  return to_integer(c);
}

SchubertCombination chevalley_multiply(const CosetTable& table, int i,
                                       const SchubertCombination& x) {
  const auto& marked = table.marked();
  if (std::find(marked.begin(), marked.end(), i) == marked.end())
    throw std::invalid_argument("node " + std::to_string(i) +
                                " is not marked in the table");
  const int r = x.degree();
  if (r + 1 > table.max_degree()) {
    if (table.complete()) return SchubertCombination(r + 1);
    throw ResourceCapExceeded("Chevalley step exceeds the built table");
  }
  if (x.is_zero()) return SchubertCombination(r + 1);
  const RootSystem& rs = table.roots();
  table.ensure_transitions(r);
  std::vector<Int> acc(static_cast<std::size_t>(table.slice_size(r + 1)), Int(0));
  for (const auto& [index, c] : x.coeffs()) {
    if (static_cast<int>(index) >= table.slice_size(r))
      throw std::out_of_range("class index outside the degree slice");
    for (const Transition& t : table.transition_span(r, static_cast<int>(index))) {
      const std::int64_t pairing = rs.coroot_pairing(i, t.root);
      if (pairing != 0) acc[t.target] += c * pairing;
    }
  }
  return SchubertCombination::from_dense(r + 1, acc);
}

bool verify_invariance(const RootSystem& rs, const PolyQ& f,
                       std::span<const int> marked) {
  std::vector<bool> is_marked(static_cast<std::size_t>(rs.rank()) + 1, false);
  for (int j : marked) {
    if (j < 1 || j > rs.rank()) throw std::out_of_range("marked node out of range");
    is_marked[static_cast<std::size_t>(j)] = true;
  }
  for (int j = 1; j <= rs.rank(); ++j) {
    if (is_marked[static_cast<std::size_t>(j)]) continue;
    if (!(reflect(rs, f, j) - f).is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// ChevalleyExpander

const SchubertCombination& ChevalleyExpander::expand(const Monomial& m) {
  if (const auto it = memo_.find(m); it != memo_.end()) return it->second;
  SchubertCombination value;
  if (m.is_one()) {
    value = SchubertCombination::unit();
  } else {
    const int v = m.max_var();
    Monomial rest = m;
    rest.set(v, m[v] - 1);
    const SchubertCombination& inner = expand(rest);
    value = chevalley_multiply(*table_, v + 1, inner);
  }
  return memo_.emplace(m, std::move(value)).first->second;
}

SchubertCombination ChevalleyExpander::expand(const PolyQ& f) {
  if (f.is_zero()) return SchubertCombination();
  require_homogeneous(f, "expand");
  const int r = f.total_degree();
  std::map<std::uint32_t, Rat> acc;
  for (const auto& t : f.terms()) {
    const SchubertCombination& part = expand(t.mono);
    for (const auto& [index, c] : part.coeffs()) acc[index] += t.coeff * Rat(c);
  }
  std::map<std::uint32_t, Int> integral;
  for (const auto& [index, c] : acc) {
    if (c == 0) continue;
    if (!is_integer(c))
      throw std::logic_error("expansion produced a non-integral coefficient");
    integral[index] = to_integer(c);
  }
  return SchubertCombination::from_map(r, integral);
}

SchubertCombination ChevalleyExpander::apply(const PolyQ& f,
                                             const SchubertCombination& seed) {
  if (f.is_zero() || seed.is_zero())
    return SchubertCombination(seed.degree() + std::max(f.total_degree(), 0));
  require_homogeneous(f, "apply");
  const int r = seed.degree() + f.total_degree();
  std::map<std::uint32_t, Int> integral;
  for (const auto& [index, c] : apply_rational(f, seed)) {
    if (c == 0) continue;
    if (!is_integer(c))
      throw std::logic_error("Chevalley walk produced a non-integral coefficient");
    integral[index] = to_integer(c);
  }
  return SchubertCombination::from_map(r, integral);
}

std::map<std::uint32_t, Rat> ChevalleyExpander::apply_rational(
    const PolyQ& f, const SchubertCombination& seed) {
  std::map<std::uint32_t, Rat> out;
  if (f.is_zero() || seed.is_zero()) return out;

  // Each monomial becomes its multiset of 1-based letters in ascending order;
  // walking the sorted list groups shared prefixes so a common partial
  // product is computed once.  Ascending order applies the largest variable
  // outermost, matching ChevalleyExpander::expand.
  struct Item {
    std::vector<int> letters;
    Rat coeff;
  };
  std::vector<Item> items;
  items.reserve(f.terms().size());
  for (const auto& t : f.terms()) {
    Item item;
    item.coeff = t.coeff;
    for (int v = 0; v < kMaxVars; ++v)
      for (int e = 0; e < t.mono[v]; ++e) item.letters.push_back(v + 1);
    items.push_back(std::move(item));
  }
  std::sort(items.begin(), items.end(),
            [](const Item& a, const Item& b) { return a.letters < b.letters; });

  std::function<void(std::size_t, std::size_t, std::size_t,
                     const SchubertCombination&)>
      walk = [&](std::size_t lo, std::size_t hi, std::size_t depth,
                 const SchubertCombination& cur) {
        std::size_t i = lo;
        while (i < hi && items[i].letters.size() == depth) {
          for (const auto& [index, c] : cur.coeffs())
            out[index] += items[i].coeff * Rat(c);
          ++i;
        }
        while (i < hi) {
          const int letter = items[i].letters[depth];
          std::size_t j = i;
          while (j < hi && items[j].letters[depth] == letter) ++j;
          const SchubertCombination next = chevalley_multiply(*table_, letter, cur);
          if (!next.is_zero()) walk(i, j, depth + 1, next);
          i = j;
        }
      };
  walk(0, items.size(), 0, seed);
  return out;
}

// ---------------------------------------------------------------------------
// SchubertCalculus

SchubertCalculus::SchubertCalculus(std::shared_ptr<const CosetTable> table)
    : table_(std::move(table)), expander_(*table_) {
  full_flag_ = static_cast<int>(table_->marked().size()) == table_->rank();
  if (full_flag_) return;
  std::vector<int> nodes = table_->marked();
  std::sort(nodes.begin(), nodes.end());
  for (int node : nodes) basis_vars_.emplace_back(PolyQ::variable(node - 1), 1);
  const LieType type = table_->roots().type();
  const bool has_chern_basis = (type.family == Family::F && nodes == std::vector<int>{1}) ||
                               (type.family == Family::E && nodes == std::vector<int>{2});
  if (!has_chern_basis) return;
  const int m = static_cast<int>(chern_roots(type).size());
  for (int k = 1; k <= m; ++k) basis_vars_.emplace_back(c_polynomial(type, k), k);
}

const LiftSpace& SchubertCalculus::lift_space(int degree) {
  if (const auto it = spaces_.find(degree); it != spaces_.end()) return it->second;
  if (degree < 0) throw std::invalid_argument("negative degree");
  if (degree > table_->max_degree() && !table_->complete())
    throw ResourceCapExceeded("lift degree exceeds the built table");

  LiftSpace space;
  space.degree = degree;
  const int rows = table_->slice_size(degree);
  if (full_flag_) {
    const std::vector<int> weights(static_cast<std::size_t>(table_->rank()), 1);
    const auto monos = monomials_of_weighted_degree(weights, degree);
    space.expansion = MatZ::Zero(rows, static_cast<Eigen::Index>(monos.size()));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      space.basis.push_back(PolyQ::from_monomial(monos[j]));
      const SchubertCombination& col = expander_.expand(monos[j]);
      for (const auto& [index, c] : col.coeffs())
        space.expansion(static_cast<Eigen::Index>(index),
                        static_cast<Eigen::Index>(j)) = c;
    }
  } else {
    std::vector<int> weights(basis_vars_.size());
    for (std::size_t k = 0; k < weights.size(); ++k) weights[k] = basis_vars_[k].second;
    const auto monos = monomials_of_weighted_degree(weights, degree);
    space.expansion = MatZ::Zero(rows, static_cast<Eigen::Index>(monos.size()));
    for (std::size_t j = 0; j < monos.size(); ++j) {
      PolyQ poly{Rat(1)};
      for (std::size_t k = 0; k < weights.size(); ++k)
        if (const int e = monos[j][static_cast<int>(k)]; e > 0)
          poly = poly * basis_vars_[k].first.pow(e);
      space.basis.push_back(poly);
      const SchubertCombination col = lr_expand(*table_, poly);
      for (const auto& [index, c] : col.coeffs())
        space.expansion(static_cast<Eigen::Index>(index),
                        static_cast<Eigen::Index>(j)) = c;
    }
  }
  return spaces_.emplace(degree, std::move(space)).first->second;
}

const PolyQ& SchubertCalculus::class_lift(int degree, std::uint32_t index) {
  const auto key = std::make_pair(degree, index);
  if (const auto it = class_lifts_.find(key); it != class_lifts_.end())
    return it->second;
  const LiftSpace& space = lift_space(degree);
  const Eigen::Index rows = space.expansion.rows();
  const Eigen::Index cols = space.expansion.cols();
  if (static_cast<Eigen::Index>(index) >= rows)
    throw std::out_of_range("class index outside the degree slice");
  MatQ a(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) a(i, j) = Rat(space.expansion(i, j));
  VecQ b = VecQ::Zero(rows);
  b(static_cast<Eigen::Index>(index)) = 1;
  const auto solution = solve_rational(std::move(a), std::move(b));
  if (!solution)
    throw std::domain_error("class is outside the span of the invariant basis");
  PolyQ out;
  for (Eigen::Index j = 0; j < cols; ++j)
    if ((*solution)(j) != 0) out += space.basis[static_cast<std::size_t>(j)] * (*solution)(j);
  return class_lifts_.emplace(key, std::move(out)).first->second;
}

PolyQ SchubertCalculus::lift(const SchubertCombination& x) {
  if (x.is_zero()) return {};
  PolyQ out;
  for (const auto& [index, c] : x.coeffs())
    out += class_lift(x.degree(), index) * Rat(c);
  return out;
}

SchubertCombination SchubertCalculus::product(const SchubertCombination& x,
                                              const SchubertCombination& y) {
  const int r = x.degree() + y.degree();
  if (x.is_zero() || y.is_zero()) return SchubertCombination(r);
  if (x.degree() == 0) {
    SchubertCombination out = y;
    out *= x.coefficient(0);
    return out;
  }
  if (y.degree() == 0) {
    SchubertCombination out = x;
    out *= y.coefficient(0);
    return out;
  }
  if (r > table_->max_degree()) {
    if (table_->complete()) return SchubertCombination(r);
    throw ResourceCapExceeded("product degree exceeds the built table");
  }
  if (full_flag_) {
    const SchubertCombination& small = x.degree() <= y.degree() ? x : y;
    const SchubertCombination& large = x.degree() <= y.degree() ? y : x;
    return expander_.apply(lift(small), large);
  }
  return expand(lift(x) * lift(y));
}

// ---------------------------------------------------------------------------
// Generators

std::vector<Generator> make_weight_generators(const CosetTable& table) {
  std::vector<int> nodes = table.marked();
  std::sort(nodes.begin(), nodes.end());
  std::vector<Generator> out;
  out.reserve(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    Generator g;
    g.name = "w" + std::to_string(nodes[k]);
    g.degree = 1;
    g.node = nodes[k];
    g.value = SchubertCombination::single(1, static_cast<std::uint32_t>(k));
    g.lift = PolyQ::variable(nodes[k] - 1);
    out.push_back(std::move(g));
  }
  return out;
}

VarTable generator_vars(std::span<const Generator> gens) {
  VarTable vars;
  for (const Generator& g : gens) vars.push(g.name, g.degree);
  return vars;
}

SchubertCombination evaluate_generator_polynomial(SchubertCalculus& calc,
                                                  std::span<const Generator> gens,
                                                  const PolyQ& expr) {
  const int count = static_cast<int>(gens.size());
  if (count > kMaxVars)
    throw std::invalid_argument(
        "evaluate: generator list exceeds the monomial variable capacity");
  require_vars_below(expr, count, "evaluate");
  if (expr.is_zero()) return SchubertCombination();
  std::vector<int> weights(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) weights[k] = gens[k].degree;
  if (!expr.is_homogeneous(weights))
    throw std::invalid_argument("evaluate: polynomial is not homogeneous");
  const int r = static_cast<int>(expr.weighted_degree(weights));
  const CosetTable& table = calc.table();
  if (r > table.max_degree()) {
    if (table.complete()) return SchubertCombination(r);
    throw ResourceCapExceeded("evaluation degree exceeds the built table");
  }

  if (calc.full_flag()) {
    // Seed each term with one copy of its highest-degree special factor and
    // walk the remaining factors as a polynomial Chevalley ascent.
    std::map<std::uint32_t, Rat> acc;
    for (const auto& t : expr.terms()) {
      int seed_var = -1;
      for (int v = 0; v < count; ++v)
        if (t.mono[v] > 0 && gens[static_cast<std::size_t>(v)].node == 0 &&
            (seed_var < 0 || gens[static_cast<std::size_t>(v)].degree >
                                 gens[static_cast<std::size_t>(seed_var)].degree))
          seed_var = v;
      const SchubertCombination seed =
          seed_var >= 0 ? gens[static_cast<std::size_t>(seed_var)].value
                        : SchubertCombination::unit();
      PolyQ f{Rat(1)};
      for (int v = 0; v < count; ++v) {
        int e = t.mono[v];
        if (v == seed_var) --e;
        if (e > 0) f = f * gens[static_cast<std::size_t>(v)].lift.pow(e);
      }
      for (const auto& [index, c] : calc.expander().apply_rational(f, seed))
        acc[index] += t.coeff * c;
    }
    std::map<std::uint32_t, Int> integral;
    for (const auto& [index, c] : acc) {
      if (c == 0) continue;
      if (!is_integer(c))
        throw std::logic_error("evaluation produced a non-integral coefficient");
      integral[index] = to_integer(c);
    }
    return SchubertCombination::from_map(r, integral);
  }

  // Quotient table: assemble the whole expression from invariant lifts and
  // expand once.
  PolyQ assembled;
  for (const auto& t : expr.terms()) {
    PolyQ term{t.coeff};
    for (int v = 0; v < count; ++v)
      if (const int e = t.mono[v]; e > 0)
        term = term * gens[static_cast<std::size_t>(v)].lift.pow(e);
    assembled += term;
  }
  return calc.expand(assembled);
}

std::vector<PolyQ> giambelli_polynomials(SchubertCalculus& calc,
                                         std::span<const Generator> gens, int r) {
  const CosetTable& table = calc.table();
  if (r < 0) throw std::invalid_argument("negative degree");
  if (gens.size() > static_cast<std::size_t>(kMaxVars))
    throw std::invalid_argument(
        "giambelli: generator list exceeds the monomial variable capacity");
  if (r > table.max_degree() && !table.complete())
    throw ResourceCapExceeded("Giambelli degree exceeds the built table");
  std::vector<int> weights(gens.size());
  for (std::size_t k = 0; k < gens.size(); ++k) weights[k] = gens[k].degree;
  const auto monos = monomials_of_weighted_degree(weights, r);

  const int rows = table.slice_size(r);
  MatZ m = MatZ::Zero(rows, static_cast<Eigen::Index>(monos.size()));
  for (std::size_t j = 0; j < monos.size(); ++j) {
    const SchubertCombination col =
        evaluate_generator_polynomial(calc, gens, PolyQ::from_monomial(monos[j]));
    for (const auto& [index, c] : col.coeffs())
      m(static_cast<Eigen::Index>(index), static_cast<Eigen::Index>(j)) = c;
  }

  const IntegerSolver solver(m);
  std::vector<PolyQ> out;
  out.reserve(static_cast<std::size_t>(rows));
  for (int i = 0; i < rows; ++i) {
    VecZ target = VecZ::Zero(rows);
    target(i) = 1;
    const auto solution = solver.solve(target);
    if (!solution)
      throw std::runtime_error("generators do not generate in degree " +
                               std::to_string(r));
    PolyQ p;
    for (Eigen::Index j = 0; j < solution->size(); ++j)
      if ((*solution)(j) != 0)
        p += PolyQ::from_monomial(monos[static_cast<std::size_t>(j)], Rat((*solution)(j)));
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace flagring
