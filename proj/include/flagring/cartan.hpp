/**
 * @file cartan.hpp
 * @brief Cartan matrices and simple-reflection matrices in weight coordinates.
 *
 * Conventions (fixed project-wide):
 *  - Node numbering follows Humphreys, "Introduction to Lie Algebras and
 *    Representation Theory", p.58: A_n/C_n are chains 1..n (C_n has the long
 *    root at node n); E_n is the chain 1-3-4-...-n with node 2 attached to
 *    node 4; F4 has long roots at nodes 1,2; G2 has the short root at node 1.
 *  - The Cartan matrix entry is C(i,j) = <alpha_i, alpha_j^vee>
 *    = 2(alpha_i,alpha_j)/(alpha_j,alpha_j), so the i-th *row* of C gives the
 *    weight coordinates of the simple root alpha_i.
 *  - Everything acts on weight coordinates: a weight x = sum x_k omega_k is
 *    the column vector (x_k), and sigma_i(x) = x - x_i * alpha_i.
 */
#pragma once

#include "flagring/lie_type.hpp"
#include "flagring/numeric.hpp"

#include <vector>

namespace flagring {

/// Cartan matrix with C(i,j) = <alpha_i, alpha_j^vee>; 0-based indices
/// internally, nodes are 1-based in the public word/letter APIs.
MatI cartan_matrix(const LieType& t);

/// Minimal positive integers d with (alpha_i, alpha_i) = 2*d_i (short roots
/// get d=1); satisfies C(i,j)*d_j = C(j,i)*d_i.
std::vector<std::int64_t> symmetrizers(const MatI& cartan);

/// Matrix of sigma_i acting on weight-coordinate columns (1-based node i).
MatI simple_reflection_matrix(const MatI& cartan, int i);

}  // namespace flagring
