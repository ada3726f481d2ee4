#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cgs/error.hpp"
#include "cgs/sieve.hpp"
#include "test_support.hpp"

using namespace cgs;
using cgs::testing::elem;
using cgs::testing::field_of;

namespace {

std::vector<std::vector<long>> as_lists(const std::vector<AlgebraicInteger>& xs) {
  std::vector<std::vector<long>> out;
  for (const auto& x : xs) {
    std::vector<long> v;
    for (const auto& c : x.coeffs) v.push_back(c.get_si());
    out.push_back(v);
  }
  return out;
}

// Brute force: all tuples in the box, deduplicated up to sign, primitive,
// nonconstant.
std::size_t pruned_count(unsigned t, long S, int n) {
  std::set<std::vector<long>> seen;
  std::vector<long> a(t + 1, -S);
  while (true) {
    int deg = -1;
    long g = 0;
    for (unsigned i = 0; i <= t; ++i) {
      if (a[i] != 0) deg = static_cast<int>(i);
      g = std::gcd(g, a[i]);
    }
    if (deg >= 1 && deg < n && g == 1) {
      std::vector<long> v = a;
      if (v[deg] < 0)
        for (auto& c : v) c = -c;
      seen.insert(v);
    }
    unsigned i = 0;
    while (i <= t && a[i] == S) a[i++] = -S;
    if (i > t) break;
    ++a[i];
  }
  return seen.size();
}

}  // namespace

TEST_CASE("candidate stream examples") {
  auto K = field_of({5, 0, 1});
  SieveRegion r;
  r.t = 1;
  r.S = 1;
  CHECK(as_lists(enumerate_candidates(r, K)) == std::vector<std::vector<long>>{{-1, 1}, {0, 1}, {1, 1}});
  r.t = 0;
  CHECK(enumerate_candidates(r, K).empty());
  r.t = 1;
  r.S = 2;
  CHECK(enumerate_candidates(r, K).size() == 7);
}

TEST_CASE("stream completeness against brute force") {
  for (int n : {2, 3, 4})
    for (unsigned t = 1; t < static_cast<unsigned>(n); ++t)
      for (long S = 1; S <= 3; ++S) {
        SieveRegion r;
        r.t = t;
        r.S = S;
        CandidateEnumerator en(r, n);
        std::set<std::vector<long>> seen;
        AlgebraicInteger x;
        while (en.next(x)) {
          std::vector<long> v;
          for (const auto& c : x.coeffs) v.push_back(c.get_si());
          CHECK(seen.insert(v).second);
          std::vector<long> neg = v;
          for (auto& c : neg) c = -c;
          CHECK(seen.count(neg) == 0);
        }
        CHECK(seen.size() == pruned_count(t, S, n));
      }
}

TEST_CASE("growing the box keeps earlier candidates") {
  SieveRegion small{1, 2}, large{1, 4}, deg2{2, 2};
  auto K = field_of({-1, -1, 0, 1});
  auto a = as_lists(enumerate_candidates(small, K));
  auto b = as_lists(enumerate_candidates(large, K));
  auto c = as_lists(enumerate_candidates(deg2, K));
  for (const auto& v : a) CHECK(std::find(b.begin(), b.end(), v) != b.end());
  // Raising t extends the stream as a prefix.
  REQUIRE(c.size() > a.size());
  CHECK(std::equal(a.begin(), a.end(), c.begin()));
  // The inner-height exclusion enumerates exactly the new shell.
  SieveRegion shell{1, 4, 2};
  auto s = as_lists(enumerate_candidates(shell, K));
  CHECK(s.size() + a.size() == b.size());
}

TEST_CASE("skip_reducible drops factorable candidates") {
  auto K = field_of({1, 0, 0, 0, 0, 1, 1});
  SieveRegion r{2, 2};
  r.skip_reducible = true;
  for (const auto& x : enumerate_candidates(r, K)) {
    ZPoly A = x.as_poly();
    if (degree(A) == 2) CHECK(certify_irreducible(A, 20));
  }
  SieveRegion plain{2, 2};
  CHECK(enumerate_candidates(r, K).size() < enumerate_candidates(plain, K).size());
}

TEST_CASE("smooth_part examples") {
  auto s = smooth_part(30, 10);
  REQUIRE(s.smooth);
  CHECK(s.factors == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {3, 1}, {5, 1}});
  CHECK_FALSE(smooth_part(22, 10).smooth);
  s = smooth_part(720, 5);
  REQUIRE(s.smooth);
  CHECK(s.factors == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 2}, {5, 1}});
  s = smooth_part(1, 5);
  CHECK(s.smooth);
  CHECK(s.factors.empty());
}

TEST_CASE("smooth_part past the trial-division cap uses rho") {
  const std::uint64_t p = 65537, q = 70001;  // both prime, above 2^16
  const Integer N = Integer(static_cast<unsigned long>(p)) * q * 12;
  auto s = smooth_part(N, 100000);
  REQUIRE(s.smooth);
  CHECK(s.factors == std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}, {p, 1}, {q, 1}});
  CHECK_FALSE(smooth_part(N, 70000).smooth);
}

TEST_CASE("target relation count") {
  CHECK(target_relation_count(6) == 26);
  CHECK(target_relation_count(10000) == 10400);
  CHECK_THROWS_AS(target_relation_count(0), Error);
}

TEST_CASE("collect_relations on X^2+5") {
  auto K = field_of({5, 0, 1});
  auto fb = build_factor_base(K, 10);
  auto rels = collect_relations(K, fb, SieveRegion{1, 2}, 8);
  bool saw_1_theta = false, saw_theta = false;
  for (const auto& r : rels.relations) {
    CHECK(verify_relation(K, fb, r, true));
    if (r.x == elem(K, {1, 1})) {
      saw_1_theta = true;
      CHECK(r.e == std::vector<int>{1, 1, 0, 0, 0, 0});
    }
    if (r.x == K.theta()) {
      saw_theta = true;
      CHECK(r.e == std::vector<int>{0, 0, 0, 1, 0, 0});
    }
  }
  CHECK(saw_1_theta);
  CHECK(saw_theta);
  CHECK(rels.region_exhausted);
  CHECK(rels.counters.tested == 7);

  auto one = collect_relations(K, fb, SieveRegion{1, 2}, 1);
  REQUIRE(one.relations.size() == 1);
  for (const auto& x : enumerate_candidates(SieveRegion{1, 2}, K)) {
    if (decompose(K, fb, x).smooth() && element_norm(K, x) != 1) {
      CHECK(one.relations[0].x == x);
      break;
    }
  }
  CHECK_THROWS_AS(collect_relations(K, fb, SieveRegion{1, 2}, 0), Error);
}

TEST_CASE("hit rate agrees with the exhaustive oracle") {
  auto K = field_of({5, 0, 1});
  auto fb = build_factor_base(K, 10);
  SieveRegion r{1, 20};
  auto rels = collect_relations(K, fb, r, 1u << 30);
  std::size_t oracle = 0, total = 0;
  for (const auto& x : enumerate_candidates(r, K)) {
    ++total;
    if (decompose(K, fb, x).smooth()) ++oracle;
  }
  const double observed = double(rels.counters.smooth) / double(rels.counters.tested);
  const double expected = double(oracle) / double(total);
  CHECK(observed >= 0.5 * expected);
  CHECK(observed <= 2.0 * expected);
}

TEST_CASE("budget, resume and thread independence") {
  auto K = field_of({-1, -1, 0, 1});
  auto fb = build_factor_base(K, 60);
  SieveRegion r{2, 6};
  auto full = collect_relations(K, fb, r, 80);
  auto part = collect_relations(K, fb, r, 80, 100);
  CHECK(part.budget_exhausted);
  CHECK(part.counters.tested == 100);
  extend_relations(K, fb, part, 80);
  REQUIRE(part.relations.size() == full.relations.size());
  for (std::size_t i = 0; i < full.relations.size(); ++i) CHECK(part.relations[i].x == full.relations[i].x);
  CHECK(part.next_index == full.next_index);

  auto threaded = collect_relations(K, fb, r, 80, 0, 4);
  REQUIRE(threaded.relations.size() == full.relations.size());
  for (std::size_t i = 0; i < full.relations.size(); ++i) CHECK(threaded.relations[i].x == full.relations[i].x);
  CHECK(threaded.counters.tested == full.counters.tested);
}

TEST_CASE("every relation passes the norm identity and sampled ideal equality") {
  std::mt19937_64 rng(29);
  for (auto T : {ZPoly{5, 0, 1}, ZPoly{-1, -1, 0, 1}, ZPoly{6, 1, 1}, ZPoly{3, 0, 1}}) {
    auto K = NumberField::make(T);
    auto fb = build_factor_base(K, 40);
    auto rels = collect_relations(K, fb, SieveRegion{static_cast<unsigned>(K.degree() - 1), 5}, 60);
    for (const auto& r : rels.relations) {
      CHECK(verify_relation(K, fb, r, false));
      if (rng() % 20 == 0) CHECK(verify_relation(K, fb, r, true));
    }
  }
}
