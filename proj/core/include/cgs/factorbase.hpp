#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "cgs/ideal.hpp"
#include "cgs/numfield.hpp"
#include "cgs/polymodp.hpp"

namespace cgs {

/// The prime ideal (p, g(theta)) of Z[theta] with residue degree f = deg g
/// and ramification index e.
struct PrimeIdeal {
  std::uint64_t p = 0;
  FpPoly g;
  unsigned f = 0;
  unsigned e = 0;
  Integer norm;
  /// T mod p is a power of g: the only prime above p.
  bool sole_prime_above = false;

  IdealHNF hnf(const NumberField& field) const;
  bool operator==(const PrimeIdeal& o) const {
    return p == o.p && g == o.g && f == o.f && e == o.e;
  }
};

struct FactorBase {
  std::uint64_t bound = 0;
  std::vector<PrimeIdeal> ideals;  // sorted by (norm, p, g)
  std::vector<std::uint64_t> excluded_primes;
  std::vector<std::uint64_t> primes;  // every rational prime <= bound
  std::map<std::uint64_t, std::vector<std::size_t>> above;  // p -> ideal indices

  std::size_t size() const { return ideals.size(); }
  bool is_excluded(std::uint64_t p) const;
  /// Canonical JSON dump; also the input of hash().
  std::string dump() const;
  std::string hash() const;
};

/// All prime ideals of norm <= bound, skipping primes where Z[theta] is not
/// certified p-maximal. Throws BoundTooSmall when bound < 2.
FactorBase build_factor_base(const NumberField& field, std::uint64_t bound);

/// |FB| / (B / log B).
double ideal_count_check(const FactorBase& fb);

/// v_q(<x>) for q = fb.ideals[index]. Throws UnsupportedPrime for excluded
/// primes and ZeroElement for x = 0.
unsigned valuation(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x,
                   std::size_t index);

/// Same, through exact ideal arithmetic only (the slow path); used to
/// cross-check the Hensel-lifting fast path.
unsigned valuation_by_ideals(const NumberField& field, const PrimeIdeal& q, const AlgebraicInteger& x,
                             unsigned upper_bound);

struct Decomposition {
  enum class Status { Smooth, NotSmooth, ExcludedPrimeHit };
  Status status = Status::NotSmooth;
  std::vector<int> exponents;  // length |FB| when Smooth
  bool smooth() const { return status == Status::Smooth; }
};

/// Factor <x> over the factor base. `norm` may be passed when already known.
Decomposition decompose(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x);
Decomposition decompose(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x,
                        const Integer& norm);

/// Valuations of an arbitrary integral ideal at every factor-base prime, or
/// NotSmooth when its norm has support outside the base.
Decomposition decompose_ideal(const NumberField& field, const FactorBase& fb, const IdealHNF& I);

}  // namespace cgs
