#pragma once
#include <cstdint>
#include <tuple>
#include <vector>

namespace cgs {

/// Reduced positive definite forms (a, b, c) of discriminant D < 0:
/// b^2 - 4ac = D, |b| <= a <= c, and b >= 0 when a = c or a = |b|.
/// With primitive_only, forms with gcd(a, b, c) > 1 are dropped.
std::vector<std::tuple<long, long, long>> reduced_forms(long D, bool primitive_only = true);

/// Class number of the order of discriminant D by counting reduced forms.
/// Throws OracleDomain unless D < 0 and D = 0, 1 mod 4.
long class_number_forms(long D);

/// D < 0 fundamental: D = 1 mod 4 squarefree, or D = 4m with m = 2, 3 mod 4
/// squarefree.
bool is_fundamental_discriminant(long D);

}  // namespace cgs
