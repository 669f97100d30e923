/**
 * @file poly_io.cpp
 * @brief Text round-trip for polynomials: "3*w1^2 - 3*w1*w2 + w2^2".
 */
#include "flagring/polynomial.hpp"

#include <sstream>

namespace flagring {

namespace {

struct Parser {
  const std::string& text;
  const VarTable& vars;
  std::size_t pos = 0;

  void skip() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  Int integer() {
    skip();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) fail("expected a number");
    return Int(text.substr(start, pos - start));
  }

  int small_int() {
    Int v = integer();
    if (v > 255) fail("exponent too large");
    return static_cast<int>(v);
  }

  /// number | name[^k] | ( expr )
  PolyQ factor() {
    skip();
    if (pos >= text.size()) fail("unexpected end of input");
    if (eat('(')) {
      PolyQ inner = expression();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) return inner.pow(small_int());
      return inner;
    }
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      if (eat('/')) {
        Int den = integer();
        if (den == 0) fail("zero denominator");
        return PolyQ(Rat(num, den));
      }
      return PolyQ(Rat(num));
    }
    // longest variable-name match
    int best = -1;
    std::size_t best_len = 0;
    for (int v = 0; v < vars.count(); ++v) {
      const std::string& name = vars.names[static_cast<std::size_t>(v)];
      if (name.size() > best_len && text.compare(pos, name.size(), name) == 0) {
        best = v;
        best_len = name.size();
      }
    }
    if (best < 0) fail("unknown variable");
    pos += best_len;
    int e = 1;
    if (eat('^')) e = small_int();
    return PolyQ::from_monomial(Monomial::unit(best, e));
  }

  PolyQ term() {
    PolyQ p = factor();
    while (eat('*')) p *= factor();
    return p;
  }

  PolyQ expression() {
    PolyQ total;
    bool negative = false;
    skip();
    if (eat('-'))
      negative = true;
    else
      eat('+');
    while (true) {
      PolyQ t = term();
      total += negative ? -t : t;
      skip();
      if (eat('-'))
        negative = true;
      else if (eat('+'))
        negative = false;
      else
        break;
    }
    return total;
  }
};

template <class C>
std::string render(const Poly<C>& p, const VarTable& vars) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    const bool negative = t.coeff < C(0);
    C magnitude = negative ? C(-t.coeff) : t.coeff;
    out << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    std::string var_part;
    for (int v = 0; v < kMaxVars; ++v) {
      const int e = t.mono[v];
      if (e == 0) continue;
      if (v >= vars.count())
        throw std::out_of_range("polynomial uses a variable missing from the table");
      if (!var_part.empty()) var_part += '*';
      var_part += vars.names[static_cast<std::size_t>(v)];
      if (e > 1) var_part += '^' + std::to_string(e);
    }
    if (var_part.empty()) {
      out << magnitude;
    } else {
      if (!(magnitude == C(1))) out << magnitude << '*';
      out << var_part;
    }
  }
  return out.str();
}

}  // namespace

PolyQ parse_poly(const std::string& text, const VarTable& vars) {
  Parser parser{text, vars};
  PolyQ p = parser.expression();
  parser.skip();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return p;
}

std::string to_string(const Poly<Rat>& p, const VarTable& vars) { return render(p, vars); }
std::string to_string(const Poly<Int>& p, const VarTable& vars) { return render(p, vars); }

}  // namespace flagring
