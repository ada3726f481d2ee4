#pragma once
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cgs/factorbase.hpp"
#include "cgs/ideal.hpp"
#include "cgs/params.hpp"
#include "cgs/sieve.hpp"

namespace cgs {

struct ReducedIdeal {
  AlgebraicInteger x0;
  IdealHNF id0;  // <x0> = a * id0
  Integer x0_norm;
};

/// True when |v|^(2d) <= 2^(d(d-1)/2) * det(Gram) for a vector v of the
/// lattice spanned by the d rows of `basis` (the LLL first-vector bound).
bool lll_bound_holds(const Vector& v, const Matrix& basis);

/// LLL-reduces the coefficient embedding of `a` (or of a `sublattice_dim`
/// dimensional sublattice obtained from a seeded unimodular shuffle) and
/// returns its shortest reduced vector x0 together with the cofactor ideal.
/// Throws ReductionFailed when the bound or the ideal identity fails.
ReducedIdeal reduce_ideal(const NumberField& field, const IdealHNF& a, unsigned sublattice_dim = 0,
                          std::uint64_t shuffle_seed = 0);

struct Randomized {
  IdealHNF ideal;
  std::vector<int> exponents;  // over the factor base
};

/// a * prod p_j^{e_j} over a few of the smallest factor-base ideals with
/// e_j drawn uniformly from [0, max_exp]; deterministic per seed.
Randomized randomize(const NumberField& field, const FactorBase& fb, const IdealHNF& a, std::uint64_t seed,
                     unsigned max_exp, unsigned ideals = 3);
Randomized randomize_with(const NumberField& field, const FactorBase& fb, const IdealHNF& a,
                          const std::vector<int>& exponents);

struct DescentConfig {
  Regime regime = Regime::Medium;
  double k = 0;
  double beta = 0;    // block size placeholder; desk scale uses LLL
  int l = 0;
  std::vector<double> schedule;  // s_0 .. s_l
  double y = 0;
  double c_b = 0;
  double s_limit = 0;   // asymptotic value of s_l
  double e_s_l = 0;     // e * s_l at the finite step count l
  bool feasible = false;
  double c_d = 0;
  std::vector<double> deltas;          // sublattice exponent per step
  std::vector<double> sublattice_dims; // c_d X^delta per step
};

/// Smoothness schedule of the descent for the given regime. Throws
/// WrongRegime or ScheduleInfeasible (message carries e * s_l).
DescentConfig make_schedule(const ClassDescriptor& d, const Integer& abs_disc, Regime regime, double c_beta = 1.0,
                            LinearAlgebraModel model = LinearAlgebraModel::Classical);

struct DescentOptions {
  std::uint64_t seed = 1;
  unsigned max_attempts = 400;
  unsigned max_exp = 2;
  unsigned random_ideals = 3;
  unsigned max_depth = 1;        // 1 = single randomize-reduce-test loop
  unsigned sublattice_dim = 0;   // 0 = full lattice
  std::size_t fanout_limit = 64; // distinct primes allowed in a smooth ideal
  unsigned threads = 1;
};

/// a = <prod x_j^{sign_j}> * prod p_i^{E_i}.
struct DescentResult {
  std::vector<int> exponents;
  std::vector<std::pair<AlgebraicInteger, int>> multipliers;
  std::uint64_t attempts = 0;
};

DescentResult descend(const NumberField& field, const FactorBase& fb, const IdealHNF& a,
                      const DescentOptions& opts = {});

struct GeneratorWitness {
  std::vector<std::pair<AlgebraicInteger, unsigned>> numerator;
  std::vector<std::pair<AlgebraicInteger, unsigned>> denominator;
  std::optional<AlgebraicInteger> value;
  bool verified = false;
};

/// Checks <prod numerator> == a * <prod denominator>.
bool verify_witness(const NumberField& field, const IdealHNF& a, const GeneratorWitness& w);

struct PipOutcome {
  bool principal = false;
  GeneratorWitness witness;
  DescentResult descent;
};

/// Generator of `a` from the relations, up to units. principal = false
/// means the descent exponent vector is outside the relation lattice.
/// Throws DescentBudgetExhausted.
PipOutcome solve_pip(const NumberField& field, const FactorBase& fb, const std::vector<Relation>& relations,
                     const IdealHNF& a, const DescentOptions& opts = {});

}  // namespace cgs
