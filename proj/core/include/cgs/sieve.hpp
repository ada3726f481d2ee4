#pragma once
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cgs/factorbase.hpp"
#include "cgs/numfield.hpp"

namespace cgs {

struct SmoothResult {
  bool smooth = false;
  std::vector<std::pair<std::uint64_t, unsigned>> factors;  // ascending primes
  Integer cofactor = 1;  // the part left after removing primes <= B
};

/// B-smoothness of |N| (N != 0): trial division by `primes` (all primes
/// <= B, ascending) followed by Pollard rho on cofactors below B^3.
SmoothResult smooth_part(const Integer& N, std::uint64_t B, const std::vector<std::uint64_t>& primes);
SmoothResult smooth_part(const Integer& N, std::uint64_t B);

/// Box of polynomials A with deg A <= t and |coefficients| <= S. Candidates
/// whose height is <= inner are skipped, so a region with S doubled and
/// inner = old S enumerates exactly the new part of the box.
struct SieveRegion {
  unsigned t = 1;
  long S = 1;
  long inner = 0;
  bool skip_reducible = false;
  bool skip_imprimitive = true;
};

/// Deterministic candidate stream: degree-major, then lexicographic on
/// (a_d, a_{d-1}, ..., a_0) with 1 <= a_d <= S and the rest in [-S, S].
class CandidateEnumerator {
 public:
  CandidateEnumerator(const SieveRegion& region, int field_degree);
  /// Next candidate; false when exhausted.
  bool next(AlgebraicInteger& out);
  /// Candidates yielded so far.
  std::uint64_t index() const { return index_; }
  /// Advances past `count` candidates.
  void skip(std::uint64_t count);

 private:
  bool advance_raw();
  bool accept() const;

  SieveRegion region_;
  int n_;
  unsigned d_ = 1;
  std::vector<long> a_;  // a_[i] is the coefficient of theta^i, size d_ + 1
  bool started_ = false;
  bool done_ = false;
  std::uint64_t index_ = 0;
};

std::vector<AlgebraicInteger> enumerate_candidates(const SieveRegion& region, const NumberField& field);

struct Relation {
  AlgebraicInteger x;
  std::vector<int> e;
  Integer norm;
};

struct SieveCounters {
  std::uint64_t tested = 0;
  std::uint64_t smooth = 0;
  std::uint64_t excluded_hits = 0;
  std::uint64_t units = 0;
};

struct RelationSet {
  std::vector<Relation> relations;
  SieveRegion region;
  std::string fb_hash;
  SieveCounters counters;
  std::uint64_t next_index = 0;  // candidate index to resume from in `region`
  bool budget_exhausted = false;
  bool region_exhausted = false;
  // Class group driver state, persisted so a resumed run continues exactly.
  std::size_t target = 0;    // current batch target, 0 before the first batch
  std::size_t absorbed = 0;  // relations already folded into the determinant
  std::vector<Integer> det_history;
};

/// N + max(20, ceil(4 sqrt N)).
std::size_t target_relation_count(std::size_t N);

/// Runs the sieve over `region` from candidate rels.next_index until the set
/// holds `target` relations, `budget` candidates have been tested in total
/// (0 = unlimited) or the region is exhausted. Results do not depend on the
/// thread count.
void extend_relations(const NumberField& field, const FactorBase& fb, RelationSet& rels,
                      std::size_t target, std::uint64_t budget = 0, unsigned threads = 1);

/// Fresh run of the sieve. Sets budget_exhausted instead of throwing.
RelationSet collect_relations(const NumberField& field, const FactorBase& fb, const SieveRegion& region,
                              std::size_t target, std::uint64_t budget = 0, unsigned threads = 1);

/// Norm identity prod N(p_i)^e_i == |Res(A, T)|, and with `full` also
/// <x> == prod p_i^e_i as HNF ideals.
bool verify_relation(const NumberField& field, const FactorBase& fb, const Relation& rel, bool full);

}  // namespace cgs
