#include <doctest.h>

#include <random>

#include "cgs/error.hpp"
#include "cgs/numfield.hpp"
#include "cgs/poly.hpp"
#include "test_support.hpp"

using namespace cgs;
using cgs::testing::field_of;
using cgs::testing::elem;

TEST_CASE("make_field computes degree, height and discriminant") {
  auto K = field_of({5, 0, 1});
  CHECK(K.degree() == 2);
  CHECK(K.height() == 5);
  CHECK(K.disc_T() == -20);
  CHECK(K.abs_disc() == 20);

  auto K3 = field_of({-1, -1, 0, 1});
  CHECK(K3.degree() == 3);
  CHECK(K3.height() == 1);
  CHECK(K3.disc_T() == -23);
}

TEST_CASE("make_field rejects bad defining polynomials") {
  auto code_of = [](ZPoly T) {
    try {
      NumberField::make(T);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::ParseError;
  };
  CHECK(code_of({-1, 0, 1}) == ErrorCode::Reducible);
  CHECK(code_of({1, 0, 2}) == ErrorCode::NotMonic);
  CHECK(code_of({3, 1}) == ErrorCode::DegreeTooSmall);
  CHECK(code_of({2, 3, 1}) == ErrorCode::Reducible);          // (X+1)(X+2)
  CHECK(code_of({1, 0, 2, 0, 1}) == ErrorCode::Reducible);    // (X^2+1)^2
  CHECK(code_of({-2, 1, -2, 1}) == ErrorCode::Reducible);     // (X-2)(X^2+1)
}

TEST_CASE("resultant examples and sign convention") {
  CHECK(resultant({-2, 1}, {1, 0, 1}) == 5);
  CHECK(resultant({1, 1}, {5, 0, 1}) == 6);
  CHECK(resultant({7}, {1, 2, 3, 1}) == 343);
  CHECK_THROWS_AS(resultant({}, {1, 1}), Error);
  // Res(X - r, T) = (-1)^n T(r) and Res(T, X - r) = T(r) for monic T.
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    ZPoly T(4);
    for (int i = 0; i < 3; ++i) T[i] = static_cast<long>(rng() % 21) - 10;
    T[3] = 1;
    for (long r = -10; r <= 10; ++r) {
      CHECK(resultant({-r, 1}, T) == -evaluate(T, r));
      CHECK(resultant(T, {-r, 1}) == evaluate(T, r));
    }
  }
}

TEST_CASE("subresultant PRS agrees with the Sylvester determinant") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    auto rnd_poly = [&] {
      ZPoly p(1 + rng() % 7);
      for (auto& c : p) c = static_cast<long>(rng() % 7) - 3;
      normalize(p);
      if (p.empty()) p = {1};
      return p;
    };
    ZPoly a = rnd_poly(), b = rnd_poly();
    CHECK(resultant(a, b) == resultant_sylvester(a, b));
  }
}

TEST_CASE("element_norm examples") {
  auto K = field_of({5, 0, 1});
  CHECK(element_norm(K, elem(K, {0, 1})) == 5);
  CHECK(element_norm(K, elem(K, {1, 1})) == 6);
  CHECK(element_norm(K, elem(K, {1})) == 1);
  CHECK_THROWS_AS(element_norm(K, K.zero()), Error);
}

TEST_CASE("norm_bound examples") {
  auto K = field_of({5, 0, 1});
  CHECK(norm_bound(K, 1, 1) == 18);
  CHECK(norm_bound(K, 0, 1) == 1);
  auto K3 = field_of({-1, -1, 0, 1});
  CHECK(norm_bound(K3, 2, 2) == 167);
}

TEST_CASE("mul_mod reduces modulo T") {
  auto K = field_of({5, 0, 1});
  CHECK(mul_mod(K, K.theta(), K.theta()) == elem(K, {-5, 0}));
  CHECK(mul_mod(K, elem(K, {3, 2}), K.one()) == elem(K, {3, 2}));
  CHECK(mul_mod(K, elem(K, {1, 1}), elem(K, {1, -1})) == elem(K, {6}));
}

TEST_CASE("norm is multiplicative") {
  std::mt19937_64 rng(3);
  for (auto T : {ZPoly{5, 0, 1}, ZPoly{-1, -1, 0, 1}, ZPoly{3, 1, 0, 2, 1}}) {
    auto K = NumberField::make(T);
    for (int i = 0; i < 40; ++i) {
      AlgebraicInteger x = K.zero(), y = K.zero();
      for (auto& c : x.coeffs) c = static_cast<long>(rng() % 11) - 5;
      for (auto& c : y.coeffs) c = static_cast<long>(rng() % 11) - 5;
      if (x.is_zero() || y.is_zero()) continue;
      CHECK(element_norm(K, mul_mod(K, x, y)) == element_norm(K, x) * element_norm(K, y));
    }
  }
}

TEST_CASE("norm bound holds on random samples") {
  std::mt19937_64 rng(5);
  auto K = field_of({-3, 2, 0, 5, 1});
  for (int i = 0; i < 300; ++i) {
    const unsigned t = 1 + rng() % 3;
    const long S = 1 + rng() % 20;
    ZPoly A(t + 1);
    for (auto& c : A) c = static_cast<long>(rng() % (2 * S + 1)) - S;
    normalize(A);
    if (A.empty()) continue;
    CHECK(element_norm(K, K.from_poly(A)) <= norm_bound(K, t, S));
  }
}

TEST_CASE("discriminant bookkeeping") {
  // X^2 + 3: disc -12, the index 2 is not removable from Z[theta] (2^2 | -12
  // and Z[theta] is not 2-maximal), so abs_disc stays an upper bound.
  auto K = field_of({3, 0, 1});
  CHECK(K.disc_T() == -12);
  CHECK(K.abs_disc() == 12);
  CHECK_FALSE(dedekind_p_maximal(K.T(), 2));
  CHECK(dedekind_p_maximal(field_of({5, 0, 1}).T(), 2));
  CHECK(polynomial_discriminant({1, 1, 0, 1}) == -31);
}
