#include "cgs/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <thread>

#include "cgs/error.hpp"
#include "cgs/ideal.hpp"

namespace cgs {

namespace {

constexpr std::uint64_t kTrialCap = 1u << 16;

}  // namespace

SmoothResult smooth_part(const Integer& N, std::uint64_t B, const std::vector<std::uint64_t>& primes) {
  SmoothResult out;
  Integer n = abs(N);
  if (n == 0) throw Error(ErrorCode::ZeroElement, "smoothness test of zero");
  bool cut_by_cap = false;
  for (std::uint64_t p : primes) {
    if (p > B) break;
    if (p > kTrialCap) {
      cut_by_cap = true;
      break;
    }
    if (Integer(static_cast<unsigned long>(p)) * p > n) break;
    if (!mpz_divisible_ui_p(n.get_mpz_t(), p)) continue;
    unsigned k = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
      ++k;
    }
    out.factors.emplace_back(p, k);
  }
  const Integer Bz(static_cast<unsigned long>(B));
  if (n == 1) {
    out.smooth = true;
    out.cofactor = 1;
    return out;
  }
  if (!cut_by_cap) {
    // Every prime below sqrt(n) was tried, so n is prime.
    out.cofactor = n;
    if (n <= Bz) {
      out.factors.emplace_back(n.get_ui(), 1);
      std::sort(out.factors.begin(), out.factors.end());
      out.smooth = true;
      out.cofactor = 1;
    }
    return out;
  }
  out.cofactor = n;
  if (n >= Bz * Bz * Bz) return out;
  auto fac = factor_integer(n, 1, 1u << 18);
  if (!fac) return out;
  for (const auto& [q, k] : *fac)
    if (q > Bz) return out;
  for (const auto& [q, k] : *fac) out.factors.emplace_back(q.get_ui(), k);
  std::sort(out.factors.begin(), out.factors.end());
  out.smooth = true;
  out.cofactor = 1;
  return out;
}

SmoothResult smooth_part(const Integer& N, std::uint64_t B) {
  return smooth_part(N, B, primes_up_to(std::min<std::uint64_t>(B, kTrialCap + 1)));
}

CandidateEnumerator::CandidateEnumerator(const SieveRegion& region, int field_degree)
    : region_(region), n_(field_degree) {
  if (region_.S < 1) throw Error(ErrorCode::InvalidArgument, "sieve coefficient bound must be >= 1");
  region_.t = std::min<unsigned>(region_.t, static_cast<unsigned>(std::max(0, n_ - 1)));
  if (region_.t == 0 || region_.inner >= region_.S) done_ = true;
}

bool CandidateEnumerator::advance_raw() {
  const long S = region_.S;
  if (!started_) {
    started_ = true;
    d_ = 1;
    a_.assign(2, -S);
    a_[1] = 1;
    return true;
  }
  for (unsigned i = 0; i < d_; ++i) {
    if (a_[i] < S) {
      ++a_[i];
      return true;
    }
    a_[i] = -S;
  }
  if (a_[d_] < S) {
    ++a_[d_];
    return true;
  }
  if (d_ >= region_.t) return false;
  ++d_;
  a_.assign(d_ + 1, -S);
  a_[d_] = 1;
  return true;
}

bool CandidateEnumerator::accept() const {
  long h = 0, g = 0;
  for (long c : a_) {
    h = std::max(h, std::labs(c));
    g = std::gcd(g, c);
  }
  if (h <= region_.inner) return false;
  if (region_.skip_imprimitive && g != 1) return false;
  if (region_.skip_reducible && d_ > 1) {
    ZPoly A(a_.begin(), a_.end());
    if (!certify_irreducible(A, 20)) return false;
  }
  return true;
}

bool CandidateEnumerator::next(AlgebraicInteger& out) {
  while (!done_) {
    if (!advance_raw()) {
      done_ = true;
      break;
    }
    if (!accept()) continue;
    out.coeffs.assign(n_, Integer(0));
    for (unsigned i = 0; i <= d_; ++i) out.coeffs[i] = a_[i];
    ++index_;
    return true;
  }
  return false;
}

void CandidateEnumerator::skip(std::uint64_t count) {
  AlgebraicInteger tmp;
  for (std::uint64_t i = 0; i < count && next(tmp); ++i) {
  }
}

std::vector<AlgebraicInteger> enumerate_candidates(const SieveRegion& region, const NumberField& field) {
  std::vector<AlgebraicInteger> out;
  CandidateEnumerator en(region, field.degree());
  AlgebraicInteger x;
  while (en.next(x)) out.push_back(x);
  return out;
}

std::size_t target_relation_count(std::size_t N) {
  if (N == 0) throw Error(ErrorCode::InvalidArgument, "factor base is empty");
  const auto excess = static_cast<std::size_t>(std::ceil(4.0 * std::sqrt(static_cast<double>(N)) - 1e-12));
  return N + std::max<std::size_t>(20, excess);
}

namespace {

struct Evaluated {
  Integer norm;
  Decomposition dec;
};

Evaluated evaluate(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x) {
  Evaluated ev;
  ev.norm = element_norm(field, x);
  if (ev.norm != 1) ev.dec = decompose(field, fb, x, ev.norm);
  return ev;
}

}  // namespace

void extend_relations(const NumberField& field, const FactorBase& fb, RelationSet& rels,
                      std::size_t target, std::uint64_t budget, unsigned threads) {
  if (target == 0) throw Error(ErrorCode::InvalidArgument, "relation target must be >= 1");
  if (rels.fb_hash.empty()) rels.fb_hash = fb.hash();
  if (rels.fb_hash != fb.hash()) throw Error(ErrorCode::HashMismatch, "relation set belongs to another factor base");
  threads = std::max(1u, threads);
  rels.budget_exhausted = false;

  CandidateEnumerator en(rels.region, field.degree());
  en.skip(rels.next_index);
  const std::size_t chunk = threads == 1 ? 64 : 256 * threads;

  std::vector<AlgebraicInteger> batch;
  std::vector<std::uint64_t> index;
  std::vector<Evaluated> results;
  while (rels.relations.size() < target) {
    if (budget != 0 && rels.counters.tested >= budget) {
      rels.budget_exhausted = true;
      return;
    }
    batch.clear();
    index.clear();
    AlgebraicInteger x;
    while (batch.size() < chunk && en.next(x)) {
      index.push_back(en.index() - 1);
      batch.push_back(x);
    }
    if (batch.empty()) {
      rels.region_exhausted = true;
      return;
    }
    results.assign(batch.size(), Evaluated{});
    if (threads == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) results[i] = evaluate(field, fb, batch[i]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < threads; ++w)
        pool.emplace_back([&, w] {
          for (std::size_t i = w; i < batch.size(); i += threads) results[i] = evaluate(field, fb, batch[i]);
        });
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (rels.relations.size() >= target) return;
      if (budget != 0 && rels.counters.tested >= budget) {
        rels.budget_exhausted = true;
        return;
      }
      ++rels.counters.tested;
      rels.next_index = index[i] + 1;
      Evaluated& ev = results[i];
      if (ev.norm == 1) {
        ++rels.counters.units;
        continue;
      }
      if (ev.dec.status == Decomposition::Status::ExcludedPrimeHit) {
        ++rels.counters.excluded_hits;
        continue;
      }
      if (!ev.dec.smooth()) continue;
      ++rels.counters.smooth;
      rels.relations.push_back(Relation{std::move(batch[i]), std::move(ev.dec.exponents), std::move(ev.norm)});
    }
  }
}

RelationSet collect_relations(const NumberField& field, const FactorBase& fb, const SieveRegion& region,
                              std::size_t target, std::uint64_t budget, unsigned threads) {
  RelationSet rels;
  rels.region = region;
  rels.fb_hash = fb.hash();
  extend_relations(field, fb, rels, target, budget, threads);
  return rels;
}

bool verify_relation(const NumberField& field, const FactorBase& fb, const Relation& rel, bool full) {
  if (rel.e.size() != fb.size()) return false;
  const Integer N = element_norm(field, rel.x);
  if (N != rel.norm) return false;
  Integer prod = 1;
  for (std::size_t i = 0; i < rel.e.size(); ++i) {
    if (rel.e[i] < 0) return false;
    prod *= ipow(fb.ideals[i].norm, static_cast<unsigned long>(rel.e[i]));
  }
  if (prod != N) return false;
  if (!full) return true;
  IdealHNF I = IdealHNF::unit(field);
  for (std::size_t i = 0; i < rel.e.size(); ++i)
    if (rel.e[i] > 0)
      I = ideal_mul(field, I, ideal_pow(field, fb.ideals[i].hnf(field), static_cast<unsigned long>(rel.e[i])));
  return I == principal_ideal(field, rel.x);
}

}  // namespace cgs
