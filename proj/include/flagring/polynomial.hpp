/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with exact coefficients.
 *
 * Terms are kept sorted in descending lexicographic order on the exponent
 * vectors (variable 0 strongest), with zero coefficients dropped, so equal
 * polynomials compare equal term-by-term.  Coefficients are any exact ring
 * type with arithmetic, construction from long, and equality (Rat, Int, or a
 * prime field); exact division additionally needs coefficient division.
 *
 * Grading is external: variables carry degrees only through a VarTable (or a
 * plain weight span), since the same exponent vector is used for rings where
 * generators sit in different degrees.
 */
#pragma once

#include "flagring/numeric.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace flagring {

/// Upper bound on ring variables (largest ring used: 8 Weyl-invariant
/// generators on top of 8 degree-one classes).
inline constexpr int kMaxVars = 16;

class Monomial {
 public:
  Monomial() : e_{} {}

  static Monomial unit(int var, int power = 1) {
    Monomial m;
    m.set(var, power);
    return m;
  }

  int operator[](int var) const { return e_[static_cast<std::size_t>(var)]; }
  void set(int var, int power) {
    if (var < 0 || var >= kMaxVars) throw std::out_of_range("variable index");
    if (power < 0 || power > 255) throw std::out_of_range("exponent out of range");
    e_[static_cast<std::size_t>(var)] = static_cast<std::uint8_t>(power);
  }

  bool is_one() const {
    for (auto v : e_)
      if (v) return false;
    return true;
  }

  int total_degree() const {
    int d = 0;
    for (auto v : e_) d += v;
    return d;
  }

  std::int64_t weighted_degree(std::span<const int> weights) const {
    // Indices past kMaxVars cannot carry a nonzero exponent, so a longer
    // weight vector contributes nothing; clamp instead of reading past e_.
    const std::size_t n =
        std::min(weights.size(), static_cast<std::size_t>(kMaxVars));
    std::int64_t d = 0;
    for (std::size_t i = 0; i < n; ++i)
      d += static_cast<std::int64_t>(weights[i]) * e_[i];
    return d;
  }

  /// Largest variable index with a nonzero exponent, or -1 for the unit.
  int max_var() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e_[static_cast<std::size_t>(i)]) return i;
    return -1;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const int sum = int(e_[i]) + int(o.e_[i]);
      if (sum > 255) throw std::overflow_error("monomial exponent overflow");
      m.e_[i] = static_cast<std::uint8_t>(sum);
    }
    return m;
  }

  bool divides(const Monomial& o) const {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > o.e_[i]) return false;
    return true;
  }

  /// Quotient of exponent vectors; requires divides(o) on the caller.
  Monomial divide_into(const Monomial& o) const {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      m.e_[i] = static_cast<std::uint8_t>(o.e_[i] - e_[i]);
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return a.e_ != b.e_; }
  /// Canonical term order: graded lex, descending (higher total degree first;
  /// ties broken lexicographically with variable 0 strongest).
  friend bool lex_greater(const Monomial& a, const Monomial& b) {
    const int da = a.total_degree();
    const int db = b.total_degree();
    if (da != db) return da > db;
    return a.e_ > b.e_;
  }

  std::uint64_t hash() const { return fnv1a64(e_.data(), e_.size()); }

 private:
  std::array<std::uint8_t, kMaxVars> e_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

template <class C>
struct Term {
  Monomial mono;
  C coeff;
};

template <class C>
class Poly {
 public:
  Poly() = default;
  explicit Poly(C constant) {
    if (!(constant == C(0))) terms_.push_back({Monomial(), std::move(constant)});
  }
  explicit Poly(long constant) : Poly(C(constant)) {}

  static Poly variable(int var) { return from_monomial(Monomial::unit(var)); }
  static Poly from_monomial(Monomial m, C coeff = C(1)) {
    Poly p;
    if (!(coeff == C(0))) p.terms_.push_back({m, std::move(coeff)});
    return p;
  }
  /// Sorts, merges duplicates, and drops zeros.
  static Poly from_terms(std::vector<Term<C>> terms) {
    Poly p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const std::vector<Term<C>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  C coefficient(const Monomial& m) const {
    for (const auto& t : terms_)
      if (t.mono == m) return t.coeff;
    return C(0);
  }
  C constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return C(0);
  }
  const Term<C>& leading_term() const {
    if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
    return terms_.front();
  }

  int total_degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.total_degree());
    return d;
  }
  std::int64_t weighted_degree(std::span<const int> w) const {
    std::int64_t d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.weighted_degree(w));
    return d;
  }
  bool is_homogeneous(std::span<const int> w) const {
    for (const auto& t : terms_)
      if (t.mono.weighted_degree(w) != terms_.front().mono.weighted_degree(w)) return false;
    return true;
  }
  /// Sum of the terms of the given weighted degree.
  Poly graded_component(std::span<const int> w, std::int64_t degree) const {
    Poly out;
    for (const auto& t : terms_)
      if (t.mono.weighted_degree(w) == degree) out.terms_.push_back(t);
    return out;
  }

  Poly& operator+=(const Poly& o) { return merge(o, false); }
  Poly& operator-=(const Poly& o) { return merge(o, true); }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  Poly operator-() const {
    Poly p(*this);
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
  }

  Poly& operator*=(const C& s) {
    if (s == C(0)) {
      terms_.clear();
      return *this;
    }
    for (auto& t : terms_) t.coeff = t.coeff * s;
    return *this;
  }
  friend Poly operator*(Poly a, const C& s) { return a *= s; }
  friend Poly operator*(const C& s, Poly a) { return a *= s; }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_) {
        auto [it, fresh] = acc.try_emplace(ta.mono * tb.mono, C(0));
        it->second = it->second + ta.coeff * tb.coeff;
      }
    std::vector<Term<C>> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) terms.push_back({m, std::move(c)});
    return from_terms(std::move(terms));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (a.terms_[i].mono != b.terms_[i].mono ||
          !(a.terms_[i].coeff == b.terms_[i].coeff))
        return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  Poly pow(int e) const {
    if (e < 0) throw std::invalid_argument("negative power");
    Poly r{C(1)};
    Poly base(*this);
    for (; e; e >>= 1) {
      if (e & 1) r *= base;
      if (e > 1) base *= base;
    }
    return r;
  }

  /// Replaces one variable by a polynomial.
  Poly substitute(int var, const Poly& g) const {
    std::vector<Poly> powers{Poly{C(1)}};  // cached g^k
    Poly out;
    for (const auto& t : terms_) {
      const int e = t.mono[var];
      while (static_cast<int>(powers.size()) <= e)
        powers.push_back(powers.back() * g);
      Monomial rest = t.mono;
      rest.set(var, 0);
      out += Poly::from_monomial(rest, t.coeff) * powers[static_cast<std::size_t>(e)];
    }
    return out;
  }

  /// Substitutes every variable at once (values indexed by variable).
  Poly substitute_all(std::span<const Poly> values) const {
    Poly out;
    for (const auto& t : terms_) {
      Poly prod{t.coeff};
      for (int v = 0; v < kMaxVars; ++v) {
        const int e = t.mono[v];
        if (e == 0) continue;
        if (v >= static_cast<int>(values.size()))
          throw std::out_of_range("no substitution value for variable");
        prod *= values[static_cast<std::size_t>(v)].pow(e);
      }
      out += prod;
    }
    return out;
  }

  C evaluate(std::span<const C> values) const {
    C out(0);
    for (const auto& t : terms_) {
      C prod = t.coeff;
      for (int v = 0; v < kMaxVars; ++v)
        for (int k = 0; k < t.mono[v]; ++k) {
          if (v >= static_cast<int>(values.size()))
            throw std::out_of_range("no value for variable");
          prod = prod * values[static_cast<std::size_t>(v)];
        }
      out = out + prod;
    }
    return out;
  }

 private:
  std::vector<Term<C>> terms_;

  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term<C>& a, const Term<C>& b) {
      return lex_greater(a.mono, b.mono);
    });
    std::vector<Term<C>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = out.back().coeff + t.coeff;
      else
        out.push_back(std::move(t));
      if (!out.empty() && out.back().coeff == C(0)) out.pop_back();
    }
    terms_ = std::move(out);
  }

  /// Merge-add of sorted term lists.
  Poly& merge(const Poly& o, bool subtract) {
    std::vector<Term<C>> out;
    out.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      bool take_left;
      if (i == terms_.size())
        take_left = false;
      else if (j == o.terms_.size())
        take_left = true;
      else if (terms_[i].mono == o.terms_[j].mono) {
        C c = subtract ? C(terms_[i].coeff - o.terms_[j].coeff)
                       : C(terms_[i].coeff + o.terms_[j].coeff);
        if (!(c == C(0))) out.push_back({terms_[i].mono, std::move(c)});
        ++i, ++j;
        continue;
      } else
        take_left = lex_greater(terms_[i].mono, o.terms_[j].mono);
      if (take_left)
        out.push_back(std::move(terms_[i++]));
      else
        out.push_back({o.terms_[j].mono, subtract ? C(-o.terms_[j].coeff) : o.terms_[j].coeff}), ++j;
    }
    terms_ = std::move(out);
    return *this;
  }
};

using PolyQ = Poly<Rat>;
using PolyZ = Poly<Int>;

/// Exact division; throws std::domain_error when the division leaves a
/// remainder.  Requires an invertible (field) coefficient type.
template <class C>
Poly<C> divide_exact(Poly<C> numerator, const Poly<C>& divisor) {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Term<C>> quotient;
  const auto& lead = divisor.leading_term();
  while (!numerator.is_zero()) {
    const auto& top = numerator.leading_term();
    if (!lead.mono.divides(top.mono))
      throw std::domain_error("polynomial division leaves a remainder");
    Term<C> q{lead.mono.divide_into(top.mono), top.coeff / lead.coeff};
    numerator -= Poly<C>::from_monomial(q.mono, q.coeff) * divisor;
    quotient.push_back(std::move(q));
  }
  return Poly<C>::from_terms(std::move(quotient));
}

/// Exact division by a nonzero linear form, organized as synthetic division
/// along the form's leading variable: writing L = c_p*x_p + L' and the
/// numerator as sum_k F_k*x_p^k, the quotient coefficients fall out of
/// q_{k-1} = (F_k - q_k*L')/c_p from the top power down, and the k = 0 layer
/// must match exactly.  Linear in the number of terms, unlike generic long
/// division.  Throws std::domain_error when the division leaves a remainder.
template <class C>
Poly<C> divide_by_linear(const Poly<C>& numerator, const Poly<C>& linear) {
  if (linear.is_zero() || linear.total_degree() != 1)
    throw std::domain_error("divisor is not a linear form");
  const Term<C>& lt = linear.leading_term();
  const int p = lt.mono.max_var();
  Poly<C> rest = linear;
  rest -= Poly<C>::from_monomial(lt.mono, lt.coeff);

  int dmax = 0;
  for (const auto& t : numerator.terms()) dmax = std::max(dmax, int(t.mono[p]));
  std::vector<std::vector<Term<C>>> buckets(static_cast<std::size_t>(dmax) + 1);
  for (const auto& t : numerator.terms()) {
    Monomial m = t.mono;
    const int e = m[p];
    m.set(p, 0);
    buckets[static_cast<std::size_t>(e)].push_back({m, t.coeff});
  }

  Poly<C> qk;  // q_k while descending; starts as q_dmax = 0
  std::vector<Term<C>> out;
  for (int k = dmax; k >= 0; --k) {
    Poly<C> layer = Poly<C>::from_terms(std::move(buckets[static_cast<std::size_t>(k)]));
    if (!qk.is_zero()) layer -= qk * rest;
    if (k == 0) {
      if (!layer.is_zero())
        throw std::domain_error("polynomial division leaves a remainder");
      break;
    }
    layer *= C(1) / lt.coeff;  // = q_{k-1}, free of x_p
    for (const auto& t : layer.terms()) {
      Monomial m = t.mono;
      m.set(p, k - 1);
      out.push_back({m, t.coeff});
    }
    qk = std::move(layer);
  }
  return Poly<C>::from_terms(std::move(out));
}

/// Elementary symmetric polynomial e_r of the given inputs.
template <class C>
Poly<C> elementary_symmetric(std::span<const Poly<C>> inputs, int r) {
  if (r < 0 || r > static_cast<int>(inputs.size())) return {};
  // dp[k] = e_k of the prefix processed so far
  std::vector<Poly<C>> dp(static_cast<std::size_t>(r) + 1);
  dp[0] = Poly<C>{C(1)};
  for (const auto& x : inputs) {
    for (int k = r; k >= 1; --k) {
      if (!dp[static_cast<std::size_t>(k - 1)].is_zero())
        dp[static_cast<std::size_t>(k)] += dp[static_cast<std::size_t>(k - 1)] * x;
    }
  }
  return dp[static_cast<std::size_t>(r)];
}

/// Variable naming and grading for one polynomial ring.
struct VarTable {
  std::vector<std::string> names;
  std::vector<int> degrees;

  int count() const { return static_cast<int>(names.size()); }
  std::span<const int> weights() const { return degrees; }
  int find(const std::string& name) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == name) return static_cast<int>(i);
    return -1;
  }
  void push(std::string name, int degree) {
    names.push_back(std::move(name));
    degrees.push_back(degree);
  }
};

/// Parses "3*w1^2 - 3*w1*w2 + w2^2" (integer or p/q coefficients, '*' for
/// products, '^' for powers) against the table's variable names.
PolyQ parse_poly(const std::string& text, const VarTable& vars);

/// Canonical rendering, terms in descending lex order; inverse of parse_poly.
std::string to_string(const Poly<Rat>& p, const VarTable& vars);
std::string to_string(const Poly<Int>& p, const VarTable& vars);

}  // namespace flagring
