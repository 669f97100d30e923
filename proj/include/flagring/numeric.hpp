/**
 * @file numeric.hpp
 * @brief Scalar types and dense matrix aliases used throughout flagring.
 *
 * All ring arithmetic is exact: arbitrary-precision integers (`Int`) and
 * rationals (`Rat`) backed by GMP.  Weyl-group elements and root data live in
 * small dense integer matrices (`MatI`); exact linear algebra (Hermite forms,
 * lift solves) runs on `MatZ`/`MatQ`.  Eigen supplies the matrix types; the
 * multiprecision scalars plug in through boost's NumTraits adapter.
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace flagring {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

/// Dense machine-integer matrix/vector (Weyl matrices, Cartan data, roots).
using MatI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using VecI = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

/// Dense arbitrary-precision matrices for exact linear algebra.
using MatZ = Eigen::Matrix<Int, Eigen::Dynamic, Eigen::Dynamic>;
using VecZ = Eigen::Matrix<Int, Eigen::Dynamic, 1>;
using MatQ = Eigen::Matrix<Rat, Eigen::Dynamic, Eigen::Dynamic>;
using VecQ = Eigen::Matrix<Rat, Eigen::Dynamic, 1>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }

/// True when the rational is an integer.
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

/// Converts an integral rational to Int, throwing on a genuine fraction.
inline Int to_integer(const Rat& q) {
  if (!is_integer(q)) {
    throw std::domain_error("expected an integer, got " + q.str());
  }
  return numerator(q);
}

/// FNV-1a 64-bit; used for stable content checksums and hash keys.
inline std::uint64_t fnv1a64(const void* data, std::size_t len,
                             std::uint64_t seed = 1469598103934665603ull) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ull;
  }
  return h;
}

inline std::uint64_t fnv1a64(const std::string& s,
                             std::uint64_t seed = 1469598103934665603ull) {
  return fnv1a64(s.data(), s.size(), seed);
}

}  // namespace flagring
