#pragma once

#include <string>
#include <vector>

#include "cgs/integer.hpp"
#include "cgs/poly.hpp"

namespace cgs {

/// x = sum coeffs[i] * theta^i with exactly n coefficients.
struct AlgebraicInteger {
  std::vector<Integer> coeffs;

  bool is_zero() const;
  ZPoly as_poly() const;
  bool operator==(const AlgebraicInteger&) const = default;
};

struct FieldOptions {
  std::uint64_t factoring_trial_limit = 1u << 16;
  std::uint64_t factoring_rho_iterations = 1u << 20;
  unsigned irreducibility_primes = 80;
};

/// Z[theta] for a monic irreducible T. Immutable after construction.
class NumberField {
 public:
  /// Validates T and computes the invariants. Throws NotMonic,
  /// DegreeTooSmall or Reducible.
  static NumberField make(ZPoly T, std::string label = {}, const FieldOptions& opts = {});

  const ZPoly& T() const { return T_; }
  int degree() const { return n_; }
  const Integer& height() const { return height_; }
  const Integer& disc_T() const { return disc_T_; }
  /// |disc_T|; equal to |Delta_K| unless disc_is_upper_bound().
  const Integer& abs_disc() const { return abs_disc_; }
  bool disc_is_upper_bound() const { return disc_is_upper_bound_; }
  const std::string& label() const { return label_; }

  AlgebraicInteger zero() const;
  AlgebraicInteger one() const;
  AlgebraicInteger theta() const;
  AlgebraicInteger from_poly(const ZPoly& a) const;  // reduces mod T

  AlgebraicInteger mul(const AlgebraicInteger& x, const AlgebraicInteger& y) const;
  AlgebraicInteger pow(const AlgebraicInteger& x, unsigned long e) const;

  /// Rows j = 0..n-1 hold the coefficients of theta^j * x.
  std::vector<std::vector<Integer>> multiplication_matrix(const AlgebraicInteger& x) const;

 private:
  ZPoly T_;
  int n_ = 0;
  Integer height_, disc_T_, abs_disc_;
  bool disc_is_upper_bound_ = false;
  std::string label_;
};

/// disc(T) = (-1)^(n(n-1)/2) Res(T, T').
Integer polynomial_discriminant(const ZPoly& T);

/// True when a factorization of T over Z into lower-degree factors is ruled
/// out by degree patterns mod small primes plus a rational-root check.
/// Returns false when reducible or when certification fails.
bool certify_irreducible(const ZPoly& T, unsigned primes_to_try, bool* found_factor = nullptr);

/// Dedekind criterion: Z[theta] is p-maximal.
bool dedekind_p_maximal(const ZPoly& T, std::uint64_t p);

/// |Res(A, T)| for x = A(theta) != 0. Throws ZeroElement.
Integer element_norm(const NumberField& field, const AlgebraicInteger& x);

/// ceil( sqrt(t+1)^n * sqrt(n+1)^t * H(T)^t * S^n ), computed exactly.
Integer norm_bound(const NumberField& field, unsigned t, const Integer& S);

AlgebraicInteger mul_mod(const NumberField& field, const AlgebraicInteger& x,
                         const AlgebraicInteger& y);

}  // namespace cgs
