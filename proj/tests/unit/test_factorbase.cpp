#include <doctest.h>

#include <cmath>
#include <random>

#include "cgs/error.hpp"
#include "cgs/factorbase.hpp"
#include "test_support.hpp"

using namespace cgs;
using cgs::testing::elem;
using cgs::testing::field_of;

namespace {

struct Expect {
  std::uint64_t p;
  FpPoly g;
  unsigned e;
};

void check_base(const FactorBase& fb, const std::vector<Expect>& want) {
  REQUIRE(fb.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(fb.ideals[i].p == want[i].p);
    CHECK(fb.ideals[i].g == want[i].g);
    CHECK(fb.ideals[i].e == want[i].e);
    CHECK(fb.ideals[i].f == fp::degree(want[i].g));
  }
}

}  // namespace

TEST_CASE("factor base of X^2+5 up to 10") {
  auto K = field_of({5, 0, 1});
  auto fb = build_factor_base(K, 10);
  check_base(fb, {{2, {1, 1}, 2}, {3, {1, 1}, 1}, {3, {2, 1}, 1}, {5, {0, 1}, 2}, {7, {3, 1}, 1}, {7, {4, 1}, 1}});
  CHECK(fb.excluded_primes.empty());
  CHECK(ideal_count_check(fb) == doctest::Approx(6.0 / (10.0 / std::log(10.0))));
}

TEST_CASE("tiny bounds") {
  check_base(build_factor_base(field_of({5, 0, 1}), 2), {{2, {1, 1}, 2}});
  check_base(build_factor_base(field_of({1, 0, 1}), 2), {{2, {1, 1}, 2}});
  CHECK_THROWS_AS(build_factor_base(field_of({5, 0, 1}), 1), Error);
}

TEST_CASE("ideal count ratio at B = 100") {
  auto fb = build_factor_base(field_of({5, 0, 1}), 100);
  const double r = ideal_count_check(fb);
  CHECK(r >= 0.5);
  CHECK(r <= 2.5);
}

TEST_CASE("sum of e*f above each prime equals n when every ideal is small") {
  for (auto T : {ZPoly{5, 0, 1}, ZPoly{-1, -1, 0, 1}, ZPoly{6, 1, 1}, ZPoly{1, 1, 0, 0, 1}}) {
    auto K = NumberField::make(T);
    auto fb = build_factor_base(K, 400);
    for (std::uint64_t p : fb.primes) {
      if (fb.is_excluded(p)) continue;
      const Integer pn = ipow(Integer(static_cast<unsigned long>(p)), K.degree());
      if (pn > 400) continue;  // some ideal above p may exceed the bound
      unsigned sum = 0;
      for (std::size_t i : fb.above.at(p)) sum += fb.ideals[i].e * fb.ideals[i].f;
      CHECK(sum == static_cast<unsigned>(K.degree()));
    }
  }
}

TEST_CASE("valuation examples") {
  auto K = field_of({5, 0, 1});
  auto fb = build_factor_base(K, 10);
  CHECK(valuation(K, fb, K.theta(), 3) == 1);
  for (std::size_t i = 0; i < fb.size(); ++i) CHECK(valuation(K, fb, K.one(), i) == 0);
  CHECK(valuation(K, fb, elem(K, {1, 1}), 0) == 1);
  CHECK(valuation(K, fb, elem(K, {1, 1}), 1) == 1);
  CHECK(valuation(K, fb, elem(K, {1, 1}), 2) == 0);
}

TEST_CASE("decompose examples") {
  auto K = field_of({5, 0, 1});
  auto fb = build_factor_base(K, 10);
  auto d = decompose(K, fb, elem(K, {1, 1}));
  REQUIRE(d.smooth());
  CHECK(d.exponents == std::vector<int>{1, 1, 0, 0, 0, 0});
  d = decompose(K, fb, K.one());
  REQUIRE(d.smooth());
  CHECK(d.exponents == std::vector<int>(6, 0));
  d = decompose(K, fb, elem(K, {3, 1}));
  REQUIRE(d.smooth());
  CHECK(d.exponents == std::vector<int>{1, 0, 0, 0, 1, 0});
  CHECK_FALSE(decompose(K, fb, elem(K, {1, 3})).smooth());  // norm 46 = 2 * 23
}

TEST_CASE("fast valuations match exact ideal arithmetic") {
  std::mt19937_64 rng(17);
  for (auto T : {ZPoly{5, 0, 1}, ZPoly{-1, -1, 0, 1}, ZPoly{6, 1, 1}, ZPoly{2, 0, 0, 1}}) {
    auto K = NumberField::make(T);
    auto fb = build_factor_base(K, 60);
    for (int trial = 0; trial < 60; ++trial) {
      AlgebraicInteger x = K.zero();
      for (auto& c : x.coeffs) c = static_cast<long>(rng() % 13) - 6;
      if (x.is_zero()) continue;
      const Integer N = element_norm(K, x);
      for (std::size_t i = 0; i < fb.size(); ++i) {
        const unsigned ub = cgs::valuation(N, Integer(static_cast<unsigned long>(fb.ideals[i].p)));
        CHECK(valuation(K, fb, x, i) == valuation_by_ideals(K, fb.ideals[i], x, ub));
      }
    }
  }
}

TEST_CASE("valuations are additive") {
  std::mt19937_64 rng(23);
  auto K = field_of({-1, -1, 0, 1});
  auto fb = build_factor_base(K, 50);
  int checked = 0;
  for (int trial = 0; trial < 200 && checked < 40; ++trial) {
    AlgebraicInteger x = K.zero(), y = K.zero();
    for (auto& c : x.coeffs) c = static_cast<long>(rng() % 7) - 3;
    for (auto& c : y.coeffs) c = static_cast<long>(rng() % 7) - 3;
    if (x.is_zero() || y.is_zero()) continue;
    auto dx = decompose(K, fb, x), dy = decompose(K, fb, y);
    auto dxy = decompose(K, fb, mul_mod(K, x, y));
    if (!dx.smooth() || !dy.smooth()) continue;
    REQUIRE(dxy.smooth());
    for (std::size_t i = 0; i < fb.size(); ++i) CHECK(dxy.exponents[i] == dx.exponents[i] + dy.exponents[i]);
    ++checked;
  }
  CHECK(checked >= 20);
}

TEST_CASE("norm identity on smooth decompositions") {
  auto K = field_of({6, 1, 1});
  auto fb = build_factor_base(K, 40);
  for (long a = -20; a <= 20; ++a)
    for (long b = 1; b <= 5; ++b) {
      auto x = elem(K, {a, b});
      auto d = decompose(K, fb, x);
      if (!d.smooth()) continue;
      Integer prod = 1;
      for (std::size_t i = 0; i < fb.size(); ++i) prod *= ipow(fb.ideals[i].norm, d.exponents[i]);
      CHECK(prod == element_norm(K, x));
    }
}

TEST_CASE("excluded primes and determinism") {
  // X^2 + 3 has index 2 in the maximal order.
  auto K = field_of({3, 0, 1});
  auto fb = build_factor_base(K, 30);
  CHECK(fb.is_excluded(2));
  for (const auto& q : fb.ideals) CHECK(q.p != 2);
  auto d = decompose(K, fb, elem(K, {1, 1}));  // norm 4
  CHECK(d.status == Decomposition::Status::ExcludedPrimeHit);
  CHECK(build_factor_base(K, 30).dump() == fb.dump());
  CHECK(build_factor_base(K, 30).hash() == fb.hash());
}
