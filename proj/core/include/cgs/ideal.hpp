#pragma once

#include <vector>

#include "cgs/linalg.hpp"
#include "cgs/numfield.hpp"

namespace cgs {

/// An integral ideal of Z[theta] given by the row HNF of its coefficient
/// embedding: an n x n upper-triangular basis whose determinant is the norm.
class IdealHNF {
 public:
  IdealHNF() = default;

  /// Z-span of theta^j * g for all generators g. Throws ZeroIdeal.
  static IdealHNF from_generators(const NumberField& field, const std::vector<AlgebraicInteger>& gens);
  /// From any full-rank spanning set of the lattice; checks closure under
  /// multiplication by theta.
  static IdealHNF from_rows(const NumberField& field, const Matrix& rows);
  static IdealHNF unit(const NumberField& field);

  const Matrix& basis() const { return basis_; }
  const Integer& norm() const { return norm_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  bool is_unit() const { return norm_ == 1; }

  std::vector<AlgebraicInteger> basis_elements() const;
  bool contains(const AlgebraicInteger& x) const;
  bool contains(const IdealHNF& other) const;
  bool closed_under_theta(const NumberField& field) const;

  bool operator==(const IdealHNF& o) const { return basis_ == o.basis_; }

 private:
  explicit IdealHNF(Matrix hnf_basis);
  static IdealHNF build(const NumberField& field, const Matrix& rows, bool check_theta);

  Matrix basis_;
  Integer norm_ = 0;
};

IdealHNF ideal_mul(const NumberField& field, const IdealHNF& a, const IdealHNF& b);
IdealHNF ideal_pow(const NumberField& field, const IdealHNF& a, unsigned long e);
IdealHNF principal_ideal(const NumberField& field, const AlgebraicInteger& x);

/// (num : den) = { z in Z[theta] : z * den is contained in num }. When den
/// divides num this is the integral ideal num / den.
IdealHNF ideal_colon(const NumberField& field, const IdealHNF& num, const IdealHNF& den);

/// Largest k with I contained in q^k (I nonzero, q prime).
unsigned ideal_valuation(const NumberField& field, const IdealHNF& I, const IdealHNF& q,
                         unsigned upper_bound);

}  // namespace cgs
