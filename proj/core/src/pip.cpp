#include "cgs/pip.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <thread>

#include "cgs/classgroup.hpp"
#include "cgs/error.hpp"
#include "cgs/lattice.hpp"
#include "cgs/linalg.hpp"

namespace cgs {

bool lll_bound_holds(const Vector& v, const Matrix& basis) {
  const std::size_t d = basis.size();
  if (d == 0) return false;
  Matrix gram(d, Vector(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Integer s = 0;
      for (std::size_t k = 0; k < basis[i].size(); ++k) s += basis[i][k] * basis[j][k];
      gram[i][j] = s;
    }
  const Integer det = determinant(gram);
  const Integer lhs = ipow(squared_norm(v), d);
  const Integer rhs = (Integer(1) << static_cast<mp_bitcnt_t>(d * (d - 1) / 2)) * det;
  return lhs <= rhs;
}

namespace {

AlgebraicInteger to_element(const Vector& v) { return AlgebraicInteger{v}; }

Matrix shuffled_sublattice(const Matrix& basis, unsigned dim, std::uint64_t seed) {
  Matrix b = basis;
  const std::size_t n = b.size();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (std::size_t step = 0; step < 2 * n * n; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % n;
    if (i == j) j = (j + 1) % n;
    const bool add = (rng() & 1) != 0;
    for (std::size_t k = 0; k < b[i].size(); ++k) {
      if (add) b[i][k] += b[j][k];
      else b[i][k] -= b[j][k];
    }
  }
  b.resize(dim);
  return b;
}

}  // namespace

ReducedIdeal reduce_ideal(const NumberField& field, const IdealHNF& a, unsigned sublattice_dim,
                          std::uint64_t shuffle_seed) {
  if (a.norm() == 0) throw Error(ErrorCode::ZeroIdeal, "cannot reduce the zero ideal");
  const unsigned n = static_cast<unsigned>(field.degree());
  Matrix basis = a.basis();
  if (sublattice_dim != 0 && sublattice_dim < n) basis = shuffled_sublattice(basis, sublattice_dim, shuffle_seed);
  const Matrix reduced = lll_reduce(basis);
  std::size_t best = 0;
  for (std::size_t i = 1; i < reduced.size(); ++i)
    if (squared_norm(reduced[i]) < squared_norm(reduced[best])) best = i;
  const Vector& v = reduced[best];
  if (!lll_bound_holds(v, basis)) throw Error(ErrorCode::ReductionFailed, "reduced vector exceeds the LLL bound");

  ReducedIdeal out;
  out.x0 = to_element(v);
  out.x0_norm = element_norm(field, out.x0);
  const IdealHNF px = principal_ideal(field, out.x0);
  out.id0 = ideal_colon(field, px, a);
  if (out.id0.norm() * a.norm() != out.x0_norm || !(ideal_mul(field, a, out.id0) == px))
    throw Error(ErrorCode::ReductionFailed, "ideal identity <x0> = a * id0 does not hold");
  return out;
}

Randomized randomize_with(const NumberField& field, const FactorBase& fb, const IdealHNF& a,
                          const std::vector<int>& exponents) {
  Randomized r;
  r.exponents = exponents;
  r.exponents.resize(fb.size(), 0);
  r.ideal = a;
  for (std::size_t i = 0; i < fb.size(); ++i)
    if (r.exponents[i] > 0)
      r.ideal = ideal_mul(field, r.ideal,
                          ideal_pow(field, fb.ideals[i].hnf(field), static_cast<unsigned long>(r.exponents[i])));
  return r;
}

Randomized randomize(const NumberField& field, const FactorBase& fb, const IdealHNF& a, std::uint64_t seed,
                     unsigned max_exp, unsigned ideals) {
  if (fb.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty factor base");
  std::vector<int> e(fb.size(), 0);
  const std::size_t pool = std::min<std::size_t>(fb.size(), 8);
  std::mt19937_64 rng(seed);
  for (unsigned k = 0; k < ideals; ++k) {
    const std::size_t idx = rng() % pool;
    e[idx] += static_cast<int>(rng() % (max_exp + 1));
  }
  return randomize_with(field, fb, a, e);
}

DescentConfig make_schedule(const ClassDescriptor& d, const Integer& abs_disc, Regime regime, double c_beta,
                            LinearAlgebraModel model) {
  if (regime_of(d.alpha, d.gamma) != regime)
    throw Error(ErrorCode::WrongRegime, "descriptor does not lie in the requested regime");
  const double omega_big = model == LinearAlgebraModel::LasVegas ? d.omega : d.omega + 1;
  const double omega_small = model == LinearAlgebraModel::LasVegas ? d.omega - 1 : d.omega;
  const double X = degree_scale(abs_disc);
  const double logX = std::log(X);
  const double e = std::exp(1.0);

  DescentConfig c;
  c.regime = regime;
  auto steps = [&](double inv) {
    const double arg = inv * logX;
    if (!(arg > 1)) return 0;
    return std::max(0, static_cast<int>(std::ceil(std::log2(arg) - 1e-12)));
  };

  if (regime == Regime::Medium) {
    c.k = (d.alpha + d.gamma) / 3;
    c.l = steps(1 / c.k);
    const double base = 4 * c.k * c.k * d.n0 * d.d0;
    c.y = std::sqrt(e * e * e * omega_small * omega_small / omega_big);
    const double q = base / (c.y * c.y);
    c.c_b = std::cbrt(base * omega_big / (omega_small * omega_small));
    c.s_limit = std::cbrt(q);
    c.schedule.push_back(std::cbrt(2 * c.k * d.n0 * d.d0 * d.n0 * d.d0));
    for (int i = 0; i < c.l; ++i) c.schedule.push_back(std::sqrt(c.schedule.back()) * std::pow(q, 1.0 / 6));
    c.e_s_l = e * c.schedule.back();
    c.feasible = e * c.s_limit <= c.c_b * (1 + 1e-9);
    c.c_d = std::sqrt(d.n0 * c.schedule[0] / d.d0);
    for (int i = 0; i < c.l; ++i) {
      const double delta = std::clamp(d.alpha - c.k * (1 + std::ldexp(1.0, -(i + 1))), 0.0, d.alpha);
      const double cd = std::sqrt(d.n0 * c.schedule[i] / d.d0);
      c.deltas.push_back(delta);
      c.sublattice_dims.push_back(cd * std::pow(X, delta));
    }
  } else {
    double s0 = 0;
    if (regime == Regime::Large) {
      c.k = d.alpha / 2;
      c.l = steps(1 / c.k);
      s0 = std::cbrt(c.k * std::pow(d.n0, 4) / (2 * c_beta * c_beta));
      const double c_s = 0.1;
      c.c_b = std::sqrt(d.n0 * d.alpha * (d.alpha + 4 * c_s) / (8 * omega_small));
      c.beta = c_beta;
    } else {
      c.k = d.gamma / 2;
      c.l = d.alpha > 0 ? steps(1 / d.alpha) : 0;
      s0 = c.k * d.n0 * d.d0;
      c.c_b = std::sqrt(c.k * d.d0 * 1.0 / omega_small);
    }
    c.y = 1.0;
    c.schedule.push_back(s0);
    const double ratio = c.l > 0 ? std::pow(c.c_b / (e * s0), 1.0 / c.l) : 1.0;
    for (int i = 0; i < c.l; ++i) c.schedule.push_back(c.schedule.back() * ratio);
    c.s_limit = c.schedule.back();
    c.e_s_l = e * c.schedule.back();
    c.feasible = c.e_s_l <= c.c_b * (1 + 1e-9);
    c.c_d = regime == Regime::Large ? (c.k * d.n0 / c.y) / ratio : 1.0;
    for (int i = 0; i < c.l; ++i) {
      const double delta = regime == Regime::Large ? c.k * (1 + std::ldexp(1.0, -(i + 1)))
                                                   : d.alpha * std::ldexp(1.0, -(i + 1));
      c.deltas.push_back(delta);
      c.sublattice_dims.push_back(c.c_d * std::pow(X, delta));
    }
  }
  if (!c.feasible)
    throw Error(ErrorCode::ScheduleInfeasible, "e*s_l = " + std::to_string(c.e_s_l) + " exceeds c_b = " +
                                                   std::to_string(c.c_b));
  return c;
}

namespace {

std::size_t support(const std::vector<int>& e) {
  return static_cast<std::size_t>(std::count_if(e.begin(), e.end(), [](int v) { return v != 0; }));
}

std::optional<DescentResult> descend_once(const NumberField& field, const FactorBase& fb, const IdealHNF& a,
                                          std::uint64_t attempt, const DescentOptions& opts, unsigned depth);

std::optional<DescentResult> try_smooth(const NumberField& field, const FactorBase& fb, const IdealHNF& I,
                                        const DescentOptions& opts) {
  const Decomposition dec = decompose_ideal(field, fb, I);
  if (!dec.smooth() || support(dec.exponents) > opts.fanout_limit) return std::nullopt;
  DescentResult r;
  r.exponents = dec.exponents;
  return r;
}

std::optional<DescentResult> descend_once(const NumberField& field, const FactorBase& fb, const IdealHNF& a,
                                          std::uint64_t attempt, const DescentOptions& opts, unsigned depth) {
  const std::uint64_t seed = opts.seed * 0x100000001b3ULL + attempt;
  try {
    const Randomized rnd = attempt == 0 ? randomize_with(field, fb, a, {})
                                        : randomize(field, fb, a, seed, opts.max_exp, opts.random_ideals);
    const ReducedIdeal red = reduce_ideal(field, rnd.ideal, opts.sublattice_dim, seed);
    std::optional<DescentResult> sub = try_smooth(field, fb, red.id0, opts);
    if (!sub && depth > 1 && red.id0.norm() < rnd.ideal.norm()) {
      for (std::uint64_t k = 0; k < 8 && !sub; ++k)
        sub = descend_once(field, fb, red.id0, attempt * 8 + k, opts, depth - 1);
    }
    if (!sub) return std::nullopt;
    // a = <x0> * id0^{-1} * prod p^{-w}, id0 = <G'> prod p^{E'}.
    DescentResult r;
    r.exponents.assign(fb.size(), 0);
    for (std::size_t i = 0; i < fb.size(); ++i) r.exponents[i] = -rnd.exponents[i] - sub->exponents[i];
    r.multipliers.emplace_back(red.x0, 1);
    for (auto& [x, s] : sub->multipliers) r.multipliers.emplace_back(x, -s);
    return r;
  } catch (const Error& err) {
    if (err.code() == ErrorCode::ReductionFailed) return std::nullopt;
    throw;
  }
}

}  // namespace

DescentResult descend(const NumberField& field, const FactorBase& fb, const IdealHNF& a,
                      const DescentOptions& opts) {
  if (a.norm() == 0) throw Error(ErrorCode::ZeroIdeal, "descent on the zero ideal");
  if (auto direct = try_smooth(field, fb, a, opts)) return *direct;
  const unsigned threads = std::max(1u, opts.threads);
  for (std::uint64_t base = 0; base < opts.max_attempts; base += threads) {
    const std::uint64_t count = std::min<std::uint64_t>(threads, opts.max_attempts - base);
    std::vector<std::optional<DescentResult>> found(count);
    if (count == 1) {
      found[0] = descend_once(field, fb, a, base, opts, std::max(1u, opts.max_depth));
    } else {
      std::vector<std::thread> pool;
      for (std::uint64_t i = 0; i < count; ++i)
        pool.emplace_back([&, i] { found[i] = descend_once(field, fb, a, base + i, opts, std::max(1u, opts.max_depth)); });
      for (auto& t : pool) t.join();
    }
    for (std::uint64_t i = 0; i < count; ++i)
      if (found[i]) {
        found[i]->attempts = base + i + 1;
        return *found[i];
      }
  }
  throw Error(ErrorCode::DescentBudgetExhausted,
              "no smooth reduction found in " + std::to_string(opts.max_attempts) + " attempts");
}

namespace {

AlgebraicInteger product(const NumberField& field, const std::vector<std::pair<AlgebraicInteger, unsigned>>& fs) {
  AlgebraicInteger acc = field.one();
  for (const auto& [x, e] : fs) acc = field.mul(acc, field.pow(x, e));
  return acc;
}

/// z with z * den = num in Z[theta], when it exists.
std::optional<AlgebraicInteger> exact_divide(const NumberField& field, const AlgebraicInteger& num,
                                             const AlgebraicInteger& den) {
  const std::size_t n = static_cast<std::size_t>(field.degree());
  const Matrix M = field.multiplication_matrix(den);  // row j = theta^j * den
  // Solve z * M = num: transpose to M^T z^T = num^T, Gaussian elimination over Q.
  std::vector<std::vector<mpq_class>> A(n, std::vector<mpq_class>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) A[i][j] = M[j][i];
    A[i][n] = num.coeffs[i];
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && A[piv][c] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(A[piv], A[c]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || A[r][c] == 0) continue;
      const mpq_class f = A[r][c] / A[c][c];
      for (std::size_t k = c; k <= n; ++k) A[r][k] -= f * A[c][k];
    }
  }
  AlgebraicInteger z;
  z.coeffs.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    mpq_class v = A[i][n] / A[i][i];
    v.canonicalize();
    if (v.get_den() != 1) return std::nullopt;
    z.coeffs[i] = v.get_num();
  }
  return z;
}

void add_factor(std::map<std::vector<Integer>, long>& acc, const AlgebraicInteger& x, long e) {
  if (e != 0) acc[x.coeffs] += e;
}

}  // namespace

bool verify_witness(const NumberField& field, const IdealHNF& a, const GeneratorWitness& w) {
  const AlgebraicInteger P = product(field, w.numerator);
  const AlgebraicInteger Q = product(field, w.denominator);
  if (P.is_zero() || Q.is_zero()) return false;
  return principal_ideal(field, P) == ideal_mul(field, a, principal_ideal(field, Q));
}

PipOutcome solve_pip(const NumberField& field, const FactorBase& fb, const std::vector<Relation>& relations,
                     const IdealHNF& a, const DescentOptions& opts) {
  const std::size_t N = fb.size();
  // Rational-prime relations first, then the sieve relations.
  std::vector<Vector> rows;
  std::vector<AlgebraicInteger> gens;
  for (const Relation& r : rational_prime_relations(field, fb)) {
    rows.emplace_back(r.e.begin(), r.e.end());
    gens.push_back(r.x);
  }
  for (const Relation& r : relations) {
    rows.emplace_back(r.e.begin(), r.e.end());
    gens.push_back(r.x);
  }

  PipOutcome out;
  out.descent = descend(field, fb, a, opts);
  Vector target(out.descent.exponents.begin(), out.descent.exponents.end());
  // Growing prefixes keep the combination short.
  LatticeEchelon lattice(N, true);
  std::optional<Vector> sol;
  std::size_t used = 0;
  for (std::size_t chunk = std::max<std::size_t>(N, 8); !sol; chunk *= 2) {
    const std::size_t upto = std::min(rows.size(), used + chunk);
    for (; used < upto; ++used) lattice.insert(rows[used]);
    sol = lattice.solve(target);
    if (used == rows.size()) break;
  }
  if (!sol) return out;
  out.principal = true;

  std::map<std::vector<Integer>, long> acc;
  for (const auto& [x, s] : out.descent.multipliers) add_factor(acc, x, s);
  for (std::size_t i = 0; i < sol->size(); ++i) {
    if ((*sol)[i] == 0) continue;
    if (!(*sol)[i].fits_slong_p()) throw Error(ErrorCode::InvalidArgument, "relation exponent too large");
    add_factor(acc, gens[i], (*sol)[i].get_si());
  }
  GeneratorWitness& w = out.witness;
  for (const auto& [coeffs, e] : acc) {
    if (e > 0) w.numerator.emplace_back(AlgebraicInteger{coeffs}, static_cast<unsigned>(e));
    else if (e < 0) w.denominator.emplace_back(AlgebraicInteger{coeffs}, static_cast<unsigned>(-e));
  }
  if (w.numerator.empty() && w.denominator.empty()) w.numerator.emplace_back(field.one(), 1u);
  w.verified = verify_witness(field, a, w);
  const AlgebraicInteger P = product(field, w.numerator);
  if (w.denominator.empty()) w.value = P;
  else w.value = exact_divide(field, P, product(field, w.denominator));
  return out;
}

}  // namespace cgs
