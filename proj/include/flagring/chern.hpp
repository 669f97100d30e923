#pragma once

#include <vector>

#include "flagring/lie_type.hpp"
#include "flagring/polynomial.hpp"

namespace flagring {

/// Chern roots of the canonical complex reduced bundle on the flag variety:
/// linear forms in the fundamental weights w1..wn whose elementary symmetric
/// functions lie in the image of integral cohomology. Defined for F4 (six
/// roots), E6/E7/E8 (n roots), and the classical fibers A_n (n+1 roots,
/// the weights of the defining SU(n+1) representation) and C_n (n roots,
/// the Sp(n) analogue; here the integral invariants are the elementary
/// symmetric functions of the squared roots).
///
/// For F4 and E_n the forms constitute a single Weyl orbit: for F4 the orbit
/// of w4 under the reflections {2,3,4}, and for E_n the orbit of wn under
/// the reflections {1,3,4,...,n} (tested in test_chern.cpp).
std::vector<PolyQ> chern_roots(const LieType& type);

/// The degree-r Chern class c_r = e_r(chern_roots(type)) as a polynomial in
/// the fundamental weights. Requires 1 <= r <= chern_roots(type).size().
PolyQ c_polynomial(const LieType& type, int r);

}  // namespace flagring
