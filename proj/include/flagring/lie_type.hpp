/**
 * @file lie_type.hpp
 * @brief Simple Lie types supported by the engine.
 *
 * The engine covers the compact simply-connected groups whose flag manifolds
 * it verifies: the exceptional families G2, F4, E6, E7, E8, plus the classical
 * families A_n (SU(n+1)) and C_n (Sp(n)) that appear as fibre types in the
 * restriction checks.
 */
#pragma once

#include <cstdint>

#include <string>

namespace flagring {

enum class Family : std::uint8_t { A, C, E, F, G };

struct LieType {
  Family family = Family::A;
  int rank = 1;

  friend bool operator==(const LieType&, const LieType&) = default;
};

/// Rank bounds per family as supported here (A/C ranks are what the
/// restriction checks need; larger classical ranks would work but are untested).
bool is_supported(const LieType& t);

/// Parses "G2", "F4", "E6".."E8", "A1".."A8", "C2".."C8".
LieType parse_lie_type(const std::string& s);  // throws std::invalid_argument

std::string to_string(const LieType& t);

/// Number of positive roots.
int positive_root_count(const LieType& t);

/// Order of the Weyl group.
std::int64_t weyl_order(const LieType& t);

}  // namespace flagring
