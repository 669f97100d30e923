#include "flagring/lie_type.hpp"

#include <cctype>
#include <stdexcept>

namespace flagring {

bool is_supported(const LieType& t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1 && t.rank <= 8;
    case Family::C: return t.rank >= 2 && t.rank <= 8;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

LieType parse_lie_type(const std::string& s) {
  const auto fail = [&s]() -> LieType {
    throw std::invalid_argument("unsupported Lie type '" + s + "'");
  };
  if (s.size() < 2) return fail();
  Family fam;
  switch (std::toupper(static_cast<unsigned char>(s[0]))) {
    case 'A': fam = Family::A; break;
    case 'C': fam = Family::C; break;
    case 'E': fam = Family::E; break;
    case 'F': fam = Family::F; break;
    case 'G': fam = Family::G; break;
    default: return fail();
  }
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return fail();
    rank = rank * 10 + (s[i] - '0');
  }
  LieType t{fam, rank};
  if (!is_supported(t)) return fail();
  return t;
}

std::string to_string(const LieType& t) {
  static constexpr char names[] = {'A', 'C', 'E', 'F', 'G'};
  return std::string(1, names[static_cast<int>(t.family)]) + std::to_string(t.rank);
}

int positive_root_count(const LieType& t) {
  const int n = t.rank;
  switch (t.family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::C: return n * n;
    case Family::G: return 6;
    case Family::F: return 24;
    case Family::E:
      if (n == 6) return 36;
      if (n == 7) return 63;
      return 120;
  }
  return 0;
}

std::int64_t weyl_order(const LieType& t) {
  const int n = t.rank;
  std::int64_t w = 1;
  switch (t.family) {
    case Family::A:
      for (int i = 2; i <= n + 1; ++i) w *= i;
      return w;
    case Family::C:
      for (int i = 1; i <= n; ++i) w *= 2 * i;
      return w;
    case Family::G: return 12;
    case Family::F: return 1152;
    case Family::E:
      if (n == 6) return 51840;
      if (n == 7) return 2903040;
      return 696729600;
  }
  return 0;
}

}  // namespace flagring
