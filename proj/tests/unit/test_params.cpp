#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "cgs/error.hpp"
#include "cgs/params.hpp"
#include "param_oracles.hpp"
#include "test_support.hpp"

using namespace cgs;
using cgs::testing::field_of;

namespace {

ClassDescriptor desc(double n0, double d0, double alpha, double gamma, double omega = 3.0) {
  ClassDescriptor d;
  d.n0 = n0;
  d.d0 = d0;
  d.alpha = alpha;
  d.gamma = gamma;
  d.omega = omega;
  return d;
}

const Integer kDisc = Integer(1) << 400;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("eval_L examples") {
  const double e2 = std::exp(2.0);
  CHECK(eval_L(e2, 0.5, 1.0) == doctest::Approx(std::exp(std::exp(1.0) * std::sqrt(2.0))).epsilon(1e-12));
  CHECK(eval_L(e2, 0.5, 1.0) == doctest::Approx(46.73).epsilon(1e-3));
  CHECK(eval_L(Integer(1000), 0.0, 2.0) == doctest::Approx(std::pow(std::log(1000.0), 2)).epsilon(1e-12));
  CHECK(eval_L(Integer(1000), 1.0, 0.5) == doctest::Approx(std::sqrt(1000.0)).epsilon(1e-12));
  CHECK_THROWS_AS(eval_L(Integer(15), 0.5, 1.0), Error);
  CHECK_THROWS_AS(eval_L(e2, 1.5, 1.0), Error);
  CHECK_THROWS_AS(eval_L(e2, 0.5, -1.0), Error);
}

TEST_CASE("eval_L is monotone in a, c and N") {
  for (double logN : {3.0, 10.0, 100.0})
    for (int i = 0; i < 10; ++i) {
      const double a = i / 10.0;
      CHECK(log_L(logN, a + 0.1, 1.0) >= log_L(logN, a, 1.0));
      CHECK(log_L(logN, a, 1.5) >= log_L(logN, a, 1.0));
      CHECK(log_L(logN * 2, a, 1.0) >= log_L(logN, a, 1.0));
    }
}

TEST_CASE("medium constants at n0 = d0 = 1, alpha = gamma = 1/2") {
  auto r = medium_params(desc(1, 1, 0.5, 0.5), kDisc, 50);
  CHECK(r.regime == Regime::Medium);
  CHECK(r.c_s == doctest::Approx(std::cbrt(32.0 / 9.0)).epsilon(1e-12));
  CHECK(r.c_s == doctest::Approx(1.5263).epsilon(1e-4));
  CHECK(r.c_b == doctest::Approx(std::cbrt(16.0 / 81.0)).epsilon(1e-12));
  CHECK(r.c_b == doctest::Approx(0.582387).epsilon(1e-6));
  CHECK(r.exponent_a == doctest::Approx(1.0 / 3.0));
  CHECK(r.exponent_c == doctest::Approx(4 * r.c_b).epsilon(1e-12));
  CHECK(r.c_t == doctest::Approx(4 * r.c_b / r.c_s).epsilon(1e-12));
  // Quadratic from the two balance conditions.
  const double residual = 3 * 3 * r.c_s * r.c_b * r.c_b - 1 * 1.0 * 4 * r.c_b - 1 * 1.0 * r.c_s * r.c_s;
  CHECK(std::abs(residual) < 1e-9);
  CHECK(code_of([] { medium_params(desc(1, 1, 0.2, 0.9), kDisc, 10); }) == ErrorCode::WrongRegime);
}

TEST_CASE("small and large constants") {
  auto s = small_params(desc(1, 1, 0.2, 1.0), kDisc, 10);
  CHECK(s.c_b == doctest::Approx(std::sqrt(1.0 / 6.0)).epsilon(1e-12));
  CHECK(s.exponent_c == doctest::Approx(std::sqrt(16.0 / 6.0)).epsilon(1e-12));
  CHECK(s.exponent_a == doctest::Approx(0.5));
  CHECK(s.t == 1);
  CHECK(code_of([] { small_params(desc(1, 1, 0.5, 0.5), kDisc, 10); }) == ErrorCode::WrongRegime);

  auto l = large_params(desc(1, 1, 0.8, 0.3), kDisc, 100, 0.1);
  CHECK(l.c_b == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(l.exponent_c == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(l.exponent_c == doctest::Approx(4 * l.c_b).epsilon(1e-12));
  CHECK(l.exponent_a == doctest::Approx(0.4));
  CHECK(code_of([] { large_params(desc(1, 1, 0.5, 0.5), kDisc, 10); }) == ErrorCode::WrongRegime);
}

TEST_CASE("closed forms agree with numerical minimization") {
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> U(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double n0 = 0.5 + 2 * U(rng), d0 = 0.5 + 2 * U(rng), omega = 2 + U(rng);
    for (auto model : {LinearAlgebraModel::Classical, LinearAlgebraModel::LasVegas}) {
      const double W = model == LinearAlgebraModel::Classical ? omega + 1 : omega;
      const double w = W - 1;
      {
        const double gamma = 0.2 + 0.8 * U(rng);
        const double alpha = gamma / 2 + (2 * gamma - gamma / 2) * U(rng);
        if (alpha > 1) continue;
        auto r = medium_params(desc(n0, d0, alpha, gamma, omega), kDisc, 10, model);
        const double oracle = testing::medium_cb_oracle(n0, d0, alpha + gamma, W, w);
        CHECK(r.c_b <= oracle * (1 + 1e-6));
        CHECK(r.c_b >= oracle * (1 - 1e-6));
        const double res = 3 * w * r.c_s * r.c_b * r.c_b - d0 * (alpha + gamma) * W * r.c_b -
                           n0 * (alpha + gamma) * r.c_s * r.c_s;
        CHECK(std::abs(res) < 1e-9);
      }
      {
        const double alpha = 0.3 * U(rng);
        const double gamma = std::min(2.0, 2 * alpha + 0.05 + U(rng));
        for (unsigned ct = 1; ct <= 4; ++ct) {
          auto r = small_params(desc(n0, d0, alpha, gamma, omega), kDisc, 10, ct, model);
          const double oracle = testing::balanced_cb_oracle(d0 * gamma * ct / 2, W);
          CHECK(r.c_b == doctest::Approx(oracle).epsilon(1e-6));
        }
      }
      {
        const double alpha = 0.4 + 0.6 * U(rng);
        const double gamma = (alpha / 2) * (0.1 + 0.85 * U(rng));
        const double cs = 0.01 + U(rng);
        auto r = large_params(desc(n0, d0, alpha, gamma, omega), kDisc, 10, cs, model);
        const double oracle = testing::balanced_cb_oracle(n0 * alpha * (alpha + 4 * cs) / 8, W);
        CHECK(r.c_b == doctest::Approx(oracle).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("regime partition") {
  for (int i = 0; i <= 100; ++i)
    for (int j = 0; j <= 200; ++j) {
      const double a = i / 100.0, g = j / 100.0;
      if (a + g < 1) continue;
      int accepted = 0;
      const auto d = desc(1, 1, a, g);
      for (auto f : {+[](const ClassDescriptor& x) { medium_params(x, kDisc, 10); },
                     +[](const ClassDescriptor& x) { small_params(x, kDisc, 10); },
                     +[](const ClassDescriptor& x) { large_params(x, kDisc, 10); }}) {
        try {
          f(d);
          ++accepted;
        } catch (const Error& e) {
          CHECK(e.code() == ErrorCode::WrongRegime);
        }
      }
      CHECK(accepted == 1);
    }
  CHECK(regime_of(0.25, 0.5) == Regime::Medium);
  CHECK(regime_of(1.0, 0.5) == Regime::Medium);
}

TEST_CASE("large-degree limit constant") {
  const double w = std::log2(7.0);
  const double c = large_degree_limit_constant(1, 1, w, LinearAlgebraModel::LasVegas);
  CHECK(c == doctest::Approx(w / (2 * std::sqrt(2 * (w - 1)))).epsilon(1e-12));
  CHECK(std::round(c * 1000) / 1000 == doctest::Approx(0.738));
  // The limit of the large-regime runtime constant as c_s goes to zero.
  auto r = large_params(desc(1, 1, 1, 0.3, w), kDisc, 100, 1e-12, LinearAlgebraModel::LasVegas);
  CHECK(r.exponent_c == doctest::Approx(c).epsilon(1e-9));
}

TEST_CASE("strategy table rows") {
  auto s = strategy(0.4, 0.7, 0.6);
  CHECK(s.action == Action::Sieve);
  CHECK(s.regime == Regime::Medium);
  CHECK(s.exponent == doctest::Approx(1.1 / 3));
  s = strategy(0.3, 1.0, 0.9);
  CHECK(s.action == Action::PolyRedThenSieve);
  CHECK(s.exponent == doctest::Approx(0.45));
  s = strategy(0.8, 0.3, 0.3);
  CHECK(s.action == Action::Sieve);
  CHECK(s.regime == Regime::Large);
  CHECK(s.exponent == doctest::Approx(0.4));
  s = strategy(0.9, 1.0, 1.0);
  CHECK(s.action == Action::IdealReduction);
  CHECK(s.exponent == doctest::Approx(0.56));
  s = strategy(0.5, 0.5, 0.5);
  CHECK(s.label() == "Sieve(medium)");
  CHECK(s.exponent == doctest::Approx(1.0 / 3));
  CHECK_THROWS_AS(strategy(0.5, 0.6, 0.7), Error);
  CHECK_THROWS_AS(strategy(0.2, 0.6, 0.6), Error);
  CHECK_THROWS_AS(strategy(1.2, 0.6, 0.6), Error);
}

TEST_CASE("strategy regions have no islands and continuous boundaries") {
  const double step = 0.01;
  auto pts = strategy_regions(step);
  std::map<std::pair<long, long>, const RegionPoint*> grid;
  for (const auto& p : pts) grid[{std::lround(p.alpha / step), std::lround(p.gamma_0 / step)}] = &p;
  int islands = 0;
  for (const auto& [key, p] : grid) {
    if (!p->valid) continue;
    bool same = false, any = false;
    for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
      auto it = grid.find({key.first + di, key.second + dj});
      if (it == grid.end() || !it->second->valid) continue;
      any = true;
      same |= it->second->decision.label() == p->decision.label();
    }
    if (any && !same) ++islands;
  }
  CHECK(islands == 0);
  // Exponents change by at most one grid step across neighbouring points in
  // the gamma_0 <= 1 part, where every rule meets its neighbour continuously.
  double jump = 0;
  for (const auto& [key, p] : grid) {
    if (!p->valid || p->gamma_0 > 1 + 1e-9) continue;
    for (auto [di, dj] : {std::pair{1, 0}, {0, 1}}) {
      auto it = grid.find({key.first + di, key.second + dj});
      if (it == grid.end() || !it->second->valid || it->second->gamma_0 > 1 + 1e-9) continue;
      jump = std::max(jump, std::abs(it->second->decision.exponent - p->decision.exponent));
    }
  }
  CHECK(jump <= step + 1e-9);
  CHECK_THROWS_AS(strategy_regions(0.0), Error);
}

TEST_CASE("classify and desk-scale plans") {
  auto K = field_of({5, 0, 1});
  auto d = classify(K);
  CHECK(d.desk_scale);
  CHECK(d.alpha >= 0);
  CHECK(d.alpha <= 1);
  CHECK(d.gamma >= 1 - d.alpha - 1e-12);
  auto plan = desk_scale_plan(K);
  CHECK(plan.adaptive);
  CHECK(plan.B == 30);
  CHECK(plan.t == 1);
  CHECK(plan.S == 8);
  auto K3 = field_of({-1, -1, 0, 1});
  CHECK(desk_scale_plan(K3).t == 2);
  CHECK(degree_scale(Integer(3)) == doctest::Approx(std::log(16.0) / std::log(std::log(16.0))));

  auto hint = desc(1, 1, 0.5, 0.5);
  CHECK(code_of([&] { classify(K, desc(1, 1, 1.0, 0.0)); }) == ErrorCode::HintViolatesClassD);
  hint.n0 = 10;
  hint.d0 = 10;
  CHECK(classify(K, hint).alpha == 0.5);
}
