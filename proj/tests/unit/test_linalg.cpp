#include <doctest.h>

#include <random>

#include "cgs/classgroup.hpp"
#include "cgs/error.hpp"
#include "cgs/linalg.hpp"
#include "cgs/poly.hpp"
#include "cgs/qforms.hpp"
#include "oracles.hpp"
#include "test_support.hpp"

using namespace cgs;
using cgs::testing::field_of;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo, long hi) {
  Matrix M(rows, Vector(cols));
  for (auto& r : M)
    for (auto& c : r) c = lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  return M;
}

bool in_lattice(const Matrix& gens, const Vector& v) {
  LatticeEchelon e(v.size());
  for (const auto& g : gens) e.insert(g);
  return e.contains(v);
}

}  // namespace

TEST_CASE("hnf examples") {
  CHECK(hnf({{2, 0}, {0, 3}}) == Matrix{{2, 0}, {0, 3}});
  CHECK(hnf({{1, 1}, {1, 3}}) == Matrix{{1, 1}, {0, 2}});
  CHECK(hnf({{4, 0}, {2, 2}}) == Matrix{{2, 2}, {0, 4}});
  CHECK(hnf({{4, 0}, {2, 2}}) == testing::naive_hnf({{4, 0}, {2, 2}}));
}

TEST_CASE("snf examples") {
  auto s = snf({{1, 0}, {0, 6}});
  CHECK(s.diagonal == Vector{1, 6});
  CHECK(s.nontrivial() == Vector{6});
  CHECK(snf({{2, 0}, {0, 3}}).diagonal == Vector{1, 6});
  CHECK(snf({{2, 0}, {0, 4}}).diagonal == Vector{2, 4});
  auto def = snf({{2, 4}, {1, 2}});
  CHECK_FALSE(def.full_rank);
  CHECK(def.rank == 1);
}

TEST_CASE("solve_in_lattice examples") {
  CHECK(solve_in_lattice({{1, 1}, {0, 2}}, {0, 0}) == Vector{0, 0});
  CHECK(solve_in_lattice({{1, 1}, {0, 2}}, {1, 3}) == Vector{1, 1});
  CHECK_FALSE(solve_in_lattice({{2, 0}, {0, 2}}, {1, 0}).has_value());
}

TEST_CASE("hnf and snf match the elementary-operation oracles") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    Matrix M = random_matrix(rng, r, c, -4, 4);
    bool nonzero = false;
    for (auto& row : M)
      for (auto& x : row) nonzero |= x != 0;
    if (!nonzero) continue;
    CHECK(hnf(M) == testing::naive_hnf(M));
    const SmithForm s = snf(M);
    CHECK(s.diagonal == testing::smith_by_minors(M));
    for (std::size_t i = 1; i < s.diagonal.size(); ++i) CHECK(s.diagonal[i] % s.diagonal[i - 1] == 0);
  }
}

TEST_CASE("hnf invariants up to 8x8") {
  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    Matrix M = random_matrix(rng, n, n, -9, 9);
    const Matrix H = hnf(M);
    if (H.empty()) continue;  // zero matrix
    CHECK(hnf(H) == H);
    for (const auto& row : M) CHECK(in_lattice(H, row));
    for (const auto& row : H) CHECK(in_lattice(M, row));
    const Integer det = determinant(M);
    if (det != 0) {
      REQUIRE(H.size() == n);
      Integer prod = 1;
      for (std::size_t i = 0; i < n; ++i) prod *= H[i][i];
      CHECK(prod == abs(det));
      CHECK(snf(M).product() == abs(det));
    }
    // Random membership: combination of rows is in, a perturbed vector is
    // in only if the oracle says so.
    Vector comb(n, 0);
    for (const auto& row : M) {
      const long k = static_cast<long>(rng() % 7) - 3;
      for (std::size_t j = 0; j < n; ++j) comb[j] += k * row[j];
    }
    CHECK(in_lattice(H, comb));
    auto sol = solve_in_lattice(M, comb);
    REQUIRE(sol.has_value());
    Vector back(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) back[j] += (*sol)[i] * M[i][j];
    CHECK(back == comb);
  }
}

TEST_CASE("tracked echelon solves over inserted rows") {
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t rows = 3 + rng() % 8, cols = 2 + rng() % 5;
    Matrix M = random_matrix(rng, rows, cols, -5, 5);
    LatticeEchelon e(cols, true);
    for (const auto& r : M) e.insert(r);
    Vector target(cols, 0);
    for (const auto& r : M) {
      const long k = static_cast<long>(rng() % 5) - 2;
      for (std::size_t j = 0; j < cols; ++j) target[j] += k * r[j];
    }
    auto x = e.solve(target);
    REQUIRE(x.has_value());
    REQUIRE(x->size() == rows);
    Vector back(cols, 0);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) back[j] += (*x)[i] * M[i][j];
    CHECK(back == target);
  }
}

TEST_CASE("class_group on small imaginary quadratic fields") {
  struct Case {
    ZPoly T;
    std::uint64_t B;
    long S;
    long h;
    Vector inv;
  };
  for (const auto& c : {Case{{5, 0, 1}, 10, 30, 2, {2}}, Case{{1, 0, 1}, 6, 30, 1, {}},
                        Case{{6, 1, 1}, 12, 50, 3, {3}}}) {
    auto K = NumberField::make(c.T);
    auto fb = build_factor_base(K, c.B);
    auto rels = collect_relations(K, fb, SieveRegion{1, c.S}, 1u << 30);
    auto res = class_group(rels.relations, fb, 1);
    CHECK(res.h == c.h);
    CHECK(res.invariants == c.inv);
    CHECK(res.h == class_number_forms(polynomial_discriminant(K.T()).get_si()));
  }
}

TEST_CASE("class_group reports rank deficiency") {
  auto K = field_of({5, 0, 1});
  auto fb = build_factor_base(K, 10);
  auto rels = collect_relations(K, fb, SieveRegion{1, 1}, 1u << 30);
  CHECK_THROWS_AS(class_group(rels.relations, fb, 1), Error);
}

TEST_CASE("pruned columns are the ideals of degree above t") {
  auto K = field_of({-1, -1, 0, 1});
  auto fb = build_factor_base(K, 30);
  for (std::size_t i : pruned_columns(fb, 1)) CHECK(fb.ideals[i].f > 1);
  CHECK(pruned_columns(fb, 2).size() <= pruned_columns(fb, 1).size());
}
