#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cgs/poly.hpp"

namespace cgs {

/// Polynomials over F_p for word-size p. Little-endian, normalized (zero is
/// empty). All operations take the modulus explicitly.
using FpPoly = std::vector<std::uint64_t>;

namespace fp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

void normalize(FpPoly& f);
int degree(const FpPoly& f);
FpPoly reduce(const ZPoly& f, std::uint64_t p);
ZPoly lift(const FpPoly& f);  // coefficients in [0, p)

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p);
void divmod(const FpPoly& a, const FpPoly& b, std::uint64_t p, FpPoly& q, FpPoly& r);
FpPoly rem(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly quo(const FpPoly& a, const FpPoly& b, std::uint64_t p);
FpPoly monic(const FpPoly& a, std::uint64_t p);
FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p);  // monic
FpPoly derivative(const FpPoly& a, std::uint64_t p);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m, std::uint64_t p);
bool is_one(const FpPoly& a);

/// Factorization of a nonzero polynomial into monic irreducibles with
/// multiplicities, sorted by (degree, coefficients little-endian). The
/// leading coefficient is dropped. Deterministic.
std::vector<std::pair<FpPoly, unsigned>> factor(const FpPoly& f, std::uint64_t p);

}  // namespace fp
}  // namespace cgs
