#pragma once

#include <vector>

#include "cgs/integer.hpp"

namespace cgs {

/// Dense integer polynomial, little-endian coefficients. The zero polynomial
/// is the empty vector; otherwise the last coefficient is nonzero.
using ZPoly = std::vector<Integer>;

void normalize(ZPoly& p);
int degree(const ZPoly& p);  // -1 for zero
const Integer& leading(const ZPoly& p);
Integer content(const ZPoly& p);
Integer height(const ZPoly& p);

ZPoly add(const ZPoly& a, const ZPoly& b);
ZPoly sub(const ZPoly& a, const ZPoly& b);
ZPoly mul(const ZPoly& a, const ZPoly& b);
ZPoly scale(const ZPoly& a, const Integer& c);
ZPoly derivative(const ZPoly& p);
Integer evaluate(const ZPoly& p, const Integer& x);

/// Remainder of a modulo a monic polynomial m.
ZPoly rem_monic(const ZPoly& a, const ZPoly& m);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b);

/// Res(A, B) = lc(B)^deg(A) * prod_{B(beta)=0} A(beta).
/// Computed by the subresultant PRS; equals (-1)^(deg A deg B) times the
/// Sylvester determinant.
Integer resultant(const ZPoly& a, const ZPoly& b);

/// Same convention, computed as a fraction-free (Bareiss) determinant of the
/// Sylvester matrix. Used as the small-degree fallback.
Integer resultant_sylvester(const ZPoly& a, const ZPoly& b);

/// Bareiss fraction-free determinant of a square matrix.
Integer determinant(std::vector<std::vector<Integer>> m);

}  // namespace cgs
