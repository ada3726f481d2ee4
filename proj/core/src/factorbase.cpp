#include "cgs/factorbase.hpp"

#include <algorithm>
#include <cmath>
#include <json.hpp>

#include "cgs/error.hpp"
#include "cgs/sieve.hpp"

namespace cgs {

IdealHNF PrimeIdeal::hnf(const NumberField& field) const {
  AlgebraicInteger pp = field.zero();
  pp.coeffs[0] = static_cast<unsigned long>(p);
  return IdealHNF::from_generators(field, {pp, field.from_poly(fp::lift(g))});
}

bool FactorBase::is_excluded(std::uint64_t p) const {
  return std::binary_search(excluded_primes.begin(), excluded_primes.end(), p);
}

std::string FactorBase::dump() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& q : ideals) arr.push_back({{"p", q.p}, {"g", q.g}, {"e", q.e}, {"f", q.f}});
  return arr.dump();
}

std::string FactorBase::hash() const { return hex64(fnv1a64(std::to_string(bound) + ":" + dump())); }

FactorBase build_factor_base(const NumberField& field, std::uint64_t bound) {
  if (bound < 2) throw Error(ErrorCode::BoundTooSmall, "factor-base bound must be at least 2");
  FactorBase fb;
  fb.bound = bound;
  fb.primes = primes_up_to(bound);
  const Integer& disc = field.disc_T();
  for (std::uint64_t p : fb.primes) {
    const Integer p2 = Integer(static_cast<unsigned long>(p)) * static_cast<unsigned long>(p);
    if (mpz_divisible_p(disc.get_mpz_t(), p2.get_mpz_t()) && !dedekind_p_maximal(field.T(), p)) {
      fb.excluded_primes.push_back(p);
      continue;
    }
    const auto factors = fp::factor(fp::reduce(field.T(), p), p);
    const bool sole = factors.size() == 1;
    for (const auto& [g, e] : factors) {
      const unsigned f = static_cast<unsigned>(fp::degree(g));
      Integer norm = ipow(Integer(static_cast<unsigned long>(p)), f);
      if (norm > Integer(static_cast<unsigned long>(bound))) continue;
      fb.ideals.push_back(PrimeIdeal{p, g, f, e, norm, sole});
    }
  }
  std::sort(fb.ideals.begin(), fb.ideals.end(), [](const PrimeIdeal& a, const PrimeIdeal& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    if (a.p != b.p) return a.p < b.p;
    return a.g < b.g;
  });
  for (std::size_t i = 0; i < fb.ideals.size(); ++i) fb.above[fb.ideals[i].p].push_back(i);
  return fb;
}

double ideal_count_check(const FactorBase& fb) {
  const double B = static_cast<double>(fb.bound);
  return static_cast<double>(fb.ideals.size()) / (B / std::log(B));
}

namespace {

// p-adic root of T congruent to r mod p, to precision p^k (simple root).
Integer hensel_root(const ZPoly& T, std::uint64_t p, std::uint64_t r, unsigned k) {
  const Integer pp(static_cast<unsigned long>(p));
  const ZPoly dT = derivative(T);
  Integer root(static_cast<unsigned long>(r));
  unsigned prec = 1;
  while (prec < k) {
    prec = std::min(2 * prec, k);
    const Integer mod = ipow(pp, prec);
    Integer d = mod_floor(evaluate(dT, root), mod), inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t());
    root = mod_floor(root - evaluate(T, root) * inv, mod);
  }
  return root;
}

unsigned fast_valuation(const NumberField& field, const PrimeIdeal& q, const AlgebraicInteger& x,
                        unsigned upper_bound) {
  const Integer pp(static_cast<unsigned long>(q.p));
  const unsigned k = upper_bound + 1;
  const std::uint64_t r = (q.p - q.g[0]) % q.p;
  const Integer root = hensel_root(field.T(), q.p, r, k);
  const Integer mod = ipow(pp, k);
  Integer v = mod_floor(evaluate(x.as_poly(), root), mod);
  if (v == 0) return k;
  return valuation(v, pp);
}

}  // namespace

unsigned valuation_by_ideals(const NumberField& field, const PrimeIdeal& q, const AlgebraicInteger& x,
                             unsigned upper_bound) {
  const IdealHNF base = q.hnf(field);
  unsigned k = 0;
  IdealHNF power = base;
  while (k < upper_bound && power.contains(x)) {
    ++k;
    if (k < upper_bound) power = ideal_mul(field, power, base);
  }
  return k;
}

namespace {

unsigned valuation_bounded(const NumberField& field, const PrimeIdeal& q, const AlgebraicInteger& x,
                           unsigned vp_norm) {
  const unsigned upper = vp_norm / q.f;
  if (upper == 0) return 0;
  if (q.sole_prime_above) return upper;
  if (q.f == 1 && q.e == 1) return fast_valuation(field, q, x, vp_norm);
  return valuation_by_ideals(field, q, x, upper);
}

}  // namespace

unsigned valuation(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x,
                   std::size_t index) {
  const PrimeIdeal& q = fb.ideals.at(index);
  if (fb.is_excluded(q.p)) throw Error(ErrorCode::UnsupportedPrime, "prime " + std::to_string(q.p) + " is excluded");
  const Integer N = element_norm(field, x);
  return valuation_bounded(field, q, x, cgs::valuation(N, Integer(static_cast<unsigned long>(q.p))));
}

Decomposition decompose(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x) {
  return decompose(field, fb, x, element_norm(field, x));
}

Decomposition decompose(const NumberField& field, const FactorBase& fb, const AlgebraicInteger& x,
                        const Integer& norm) {
  Decomposition out;
  const SmoothResult sr = smooth_part(norm, fb.bound, fb.primes);
  if (!sr.smooth) return out;
  std::vector<int> e(fb.size(), 0);
  for (const auto& [p, vp] : sr.factors) {
    if (fb.is_excluded(p)) {
      out.status = Decomposition::Status::ExcludedPrimeHit;
      return out;
    }
    auto it = fb.above.find(p);
    if (it == fb.above.end()) return out;
    unsigned accounted = 0;
    for (std::size_t idx : it->second) {
      const PrimeIdeal& q = fb.ideals[idx];
      const unsigned v = valuation_bounded(field, q, x, vp);
      e[idx] = static_cast<int>(v);
      accounted += v * q.f;
    }
    // The remainder sits on primes above p of norm > B.
    if (accounted != vp) return out;
  }
  out.status = Decomposition::Status::Smooth;
  out.exponents = std::move(e);
  return out;
}

Decomposition decompose_ideal(const NumberField& field, const FactorBase& fb, const IdealHNF& I) {
  Decomposition out;
  const SmoothResult sr = smooth_part(I.norm(), fb.bound, fb.primes);
  if (!sr.smooth) return out;
  std::vector<int> e(fb.size(), 0);
  for (const auto& [p, vp] : sr.factors) {
    if (fb.is_excluded(p)) {
      out.status = Decomposition::Status::ExcludedPrimeHit;
      return out;
    }
    auto it = fb.above.find(p);
    if (it == fb.above.end()) return out;
    unsigned accounted = 0;
    for (std::size_t idx : it->second) {
      const PrimeIdeal& q = fb.ideals[idx];
      const unsigned upper = vp / q.f;
      unsigned v = 0;
      if (upper > 0) v = q.sole_prime_above ? upper : ideal_valuation(field, I, q.hnf(field), upper);
      e[idx] = static_cast<int>(v);
      accounted += v * q.f;
    }
    if (accounted != vp) return out;
  }
  out.status = Decomposition::Status::Smooth;
  out.exponents = std::move(e);
  return out;
}

}  // namespace cgs
