#include "cgs/lattice.hpp"

#include <utility>

#include "cgs/error.hpp"

namespace cgs {

Integer squared_norm(const Vector& v) {
  Integer s = 0;
  for (const auto& x : v) s += x * x;
  return s;
}

namespace {

Integer dot(const Vector& a, const Vector& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Integer round_nearest(const mpq_class& q) {
  // floor(q + 1/2)
  mpq_class h = q + mpq_class(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

}  // namespace

// Cohen, Algorithm 2.6.3, with mu and B kept as exact rationals.
Matrix lll_reduce(Matrix b, long delta_num, long delta_den) {
  const std::size_t n = b.size();
  if (n <= 1) return b;
  const mpq_class delta(delta_num, delta_den);
  std::vector<std::vector<mpq_class>> mu(n, std::vector<mpq_class>(n));
  std::vector<mpq_class> B(n);

  auto gram_schmidt_row = [&](std::size_t k) {
    for (std::size_t j = 0; j < k; ++j) {
      mpq_class s(dot(b[k], b[j]));
      for (std::size_t i = 0; i < j; ++i) s -= mu[j][i] * mu[k][i] * B[i];
      mu[k][j] = s / B[j];
      mu[k][j].canonicalize();
    }
    mpq_class s(dot(b[k], b[k]));
    for (std::size_t j = 0; j < k; ++j) s -= mu[k][j] * mu[k][j] * B[j];
    B[k] = s;
    if (B[k] == 0) throw Error(ErrorCode::InvalidArgument, "LLL input rows are dependent");
  };

  auto red = [&](std::size_t k, std::size_t l) {
    if (abs(mu[k][l]) <= mpq_class(1, 2)) return;
    const Integer q = round_nearest(mu[k][l]);
    for (std::size_t c = 0; c < b[k].size(); ++c) b[k][c] -= q * b[l][c];
    mu[k][l] -= q;
    for (std::size_t i = 0; i < l; ++i) mu[k][i] -= q * mu[l][i];
  };

  std::size_t kmax = 0;
  B[0] = mpq_class(dot(b[0], b[0]));
  if (B[0] == 0) throw Error(ErrorCode::InvalidArgument, "LLL input has a zero row");
  std::size_t k = 1;
  while (k < n) {
    if (k > kmax) {
      kmax = k;
      gram_schmidt_row(k);
    }
    red(k, k - 1);
    if (B[k] < (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]) {
      std::swap(b[k], b[k - 1]);
      for (std::size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
      const mpq_class m = mu[k][k - 1];
      const mpq_class bb = B[k] + m * m * B[k - 1];
      mu[k][k - 1] = m * B[k - 1] / bb;
      B[k] = B[k - 1] * B[k] / bb;
      B[k - 1] = bb;
      for (std::size_t i = k + 1; i <= kmax; ++i) {
        const mpq_class t = mu[i][k];
        mu[i][k] = mu[i][k - 1] - m * t;
        mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
      }
      if (k > 1) --k;
      continue;
    }
    for (std::size_t l = k - 1; l-- > 0;) red(k, l);
    ++k;
  }
  return b;
}

}  // namespace cgs
