#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cgs {

using Integer = mpz_class;

/// Primes up to and including `limit`, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

bool is_probable_prime(const Integer& n);

/// Exponent of the prime `p` in `n` (n != 0); `n` is divided in place.
unsigned strip_factor(Integer& n, const Integer& p);
unsigned valuation(Integer n, const Integer& p);

/// One nontrivial factor of a composite `n` by Brent's variant of Pollard rho,
/// or nullopt when `iterations` runs out.
std::optional<Integer> pollard_rho(const Integer& n, std::uint64_t iterations = 1u << 20);

/// Full factorization of |n| into primes. Trial division up to `trial_limit`,
/// then Pollard rho. Returns nullopt when rho fails within its budget on some
/// cofactor.
std::optional<std::map<Integer, unsigned>> factor_integer(Integer n,
                                                          std::uint64_t trial_limit = 1u << 14,
                                                          std::uint64_t rho_iterations = 1u << 20);

Integer ipow(const Integer& base, unsigned long exp);

/// log(|n|) for n != 0 without overflowing double.
double log_abs(const Integer& n);

std::string to_decimal(const Integer& n);
Integer from_decimal(const std::string& s);

/// Reduce into [0, m).
inline Integer mod_floor(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// g = gcd(a, b) = s*a + t*b.
void xgcd(Integer& g, Integer& s, Integer& t, const Integer& a, const Integer& b);

/// 64-bit FNV-1a, used to bind files to the factor base that produced them.
std::uint64_t fnv1a64(const std::string& bytes);
std::string hex64(std::uint64_t v);

}  // namespace cgs
