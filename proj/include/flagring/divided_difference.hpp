/**
 * @file divided_difference.hpp
 * @brief Weyl action and divided-difference operators on weight polynomials.
 *
 * Polynomials here live in the degree-one classes of the full flag variety:
 * variable v represents omega_{v+1}, so sigma_i substitutes
 * omega_i -> omega_i - alpha_i with alpha_i read off row i of the Cartan
 * matrix.  The operator A_i(f) = (f - sigma_i f) / alpha_i lowers degree by
 * one; the division is exact for every polynomial and is checked.
 */
#pragma once

#include "flagring/polynomial.hpp"
#include "flagring/root_system.hpp"
#include "flagring/weyl.hpp"

namespace flagring {

/// alpha_i as a degree-one polynomial in the omega variables (1-based i).
PolyQ simple_root_poly(const RootSystem& rs, int i);

/// sigma_i f (1-based i).
PolyQ reflect(const RootSystem& rs, const PolyQ& f, int i);

/// Action of an arbitrary Weyl matrix: every omega_k is mapped to the linear
/// form given by column k of w.
PolyQ weyl_action(const RootSystem& rs, const MatI& w, const PolyQ& f);

/// A_i f = (f - sigma_i f) / alpha_i (1-based i).
PolyQ divided_difference(const RootSystem& rs, const PolyQ& f, int i);

/// A_{i_1}(A_{i_2}(...(A_{i_r} f)...)) for word = [i_1,...,i_r]: the last
/// letter acts first.  With word the lex-minimal word of w, the constant term
/// of the result is the coefficient of the Schubert class of w in f.
PolyQ apply_divided_differences(const RootSystem& rs, PolyQ f, const Word& word);

}  // namespace flagring
