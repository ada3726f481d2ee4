#include "cgs/ideal.hpp"

#include "cgs/error.hpp"

namespace cgs {

IdealHNF::IdealHNF(Matrix hnf_basis) : basis_(std::move(hnf_basis)), norm_(1) {
  for (std::size_t i = 0; i < basis_.size(); ++i) norm_ *= basis_[i][i];
}

IdealHNF IdealHNF::build(const NumberField& field, const Matrix& rows, bool check_theta) {
  const std::size_t n = static_cast<std::size_t>(field.degree());
  for (const auto& r : rows)
    if (r.size() != n) throw Error(ErrorCode::InvalidArgument, "ideal basis row has wrong length");
  Matrix H = hnf(rows);
  if (H.size() != n) throw Error(ErrorCode::ZeroIdeal, "lattice is not of full rank");
  IdealHNF I(std::move(H));
  if (check_theta && !I.closed_under_theta(field))
    throw Error(ErrorCode::InvalidArgument, "lattice is not closed under multiplication by theta");
  return I;
}

IdealHNF IdealHNF::from_generators(const NumberField& field, const std::vector<AlgebraicInteger>& gens) {
  Matrix rows;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    for (auto& r : field.multiplication_matrix(g)) rows.push_back(std::move(r));
  }
  if (rows.empty()) throw Error(ErrorCode::ZeroIdeal, "all generators are zero");
  return build(field, rows, false);
}

IdealHNF IdealHNF::from_rows(const NumberField& field, const Matrix& rows) {
  if (rows.empty()) throw Error(ErrorCode::ZeroIdeal, "no rows");
  return build(field, rows, true);
}

IdealHNF IdealHNF::unit(const NumberField& field) { return from_generators(field, {field.one()}); }

std::vector<AlgebraicInteger> IdealHNF::basis_elements() const {
  std::vector<AlgebraicInteger> out;
  out.reserve(basis_.size());
  for (const auto& r : basis_) out.push_back(AlgebraicInteger{r});
  return out;
}

bool IdealHNF::contains(const AlgebraicInteger& x) const {
  Vector rest = x.coeffs;
  const std::size_t n = basis_.size();
  if (rest.size() != n) return false;
  for (std::size_t j = 0; j < n; ++j) {
    if (rest[j] == 0) continue;
    const Integer& piv = basis_[j][j];
    if (!mpz_divisible_p(rest[j].get_mpz_t(), piv.get_mpz_t())) return false;
    const Integer q = rest[j] / piv;
    for (std::size_t k = j; k < n; ++k) rest[k] -= q * basis_[j][k];
  }
  return true;
}

bool IdealHNF::contains(const IdealHNF& other) const {
  for (const auto& r : other.basis_)
    if (!contains(AlgebraicInteger{r})) return false;
  return true;
}

bool IdealHNF::closed_under_theta(const NumberField& field) const {
  const AlgebraicInteger th = field.theta();
  for (const auto& r : basis_)
    if (!contains(field.mul(AlgebraicInteger{r}, th))) return false;
  return true;
}

IdealHNF ideal_mul(const NumberField& field, const IdealHNF& a, const IdealHNF& b) {
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  Matrix rows;
  const auto ea = a.basis_elements(), eb = b.basis_elements();
  rows.reserve(ea.size() * eb.size());
  for (const auto& x : ea)
    for (const auto& y : eb) rows.push_back(field.mul(x, y).coeffs);
  return IdealHNF::from_rows(field, rows);
}

IdealHNF ideal_pow(const NumberField& field, const IdealHNF& a, unsigned long e) {
  IdealHNF r = IdealHNF::unit(field), base = a;
  while (e) {
    if (e & 1) r = ideal_mul(field, r, base);
    e >>= 1;
    if (e) base = ideal_mul(field, base, base);
  }
  return r;
}

IdealHNF principal_ideal(const NumberField& field, const AlgebraicInteger& x) {
  return IdealHNF::from_generators(field, {x});
}

IdealHNF ideal_colon(const NumberField& field, const IdealHNF& num, const IdealHNF& den) {
  const std::size_t n = static_cast<std::size_t>(field.degree());
  const Matrix& H = num.basis();
  const Integer D = num.norm();

  // adj = D * H^{-1}, integral since H is integral with det D.
  std::vector<std::vector<mpq_class>> inv(n, std::vector<mpq_class>(n, 0));
  for (std::size_t c = 0; c < n; ++c) {
    // Solve inv * H = e_c row by row: inv is upper triangular too.
    inv[c][c] = mpq_class(1) / mpq_class(H[c][c]);
    for (std::size_t k = c + 1; k < n; ++k) {
      mpq_class s = 0;
      for (std::size_t j = c; j < k; ++j) s += inv[c][j] * mpq_class(H[j][k]);
      inv[c][k] = -s / mpq_class(H[k][k]);
    }
  }
  Matrix adj(n, Vector(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      mpq_class v = inv[i][j] * mpq_class(D);
      v.canonicalize();
      if (v.get_den() != 1) throw Error(ErrorCode::InvalidArgument, "adjugate is not integral");
      adj[i][j] = v.get_num();
    }

  // z is in the colon iff z * Mult(b_k) * adj == 0 (mod D) for every basis b_k of den.
  const auto gens = den.basis_elements();
  const std::size_t width = n * gens.size();
  Matrix cond(n, Vector(width, 0));
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const Matrix mult = field.multiplication_matrix(gens[k]);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Integer s = 0;
        for (std::size_t l = 0; l < n; ++l) s += mult[i][l] * adj[l][j];
        cond[i][k * n + j] = mod_floor(s, D);
      }
  }
  // Kernel of z -> z*cond mod D: echelon form of [cond | I ; D*I | 0] and keep
  // the rows whose pivots fall in the identity block.
  LatticeEchelon e(width + n);
  for (std::size_t i = 0; i < n; ++i) {
    Vector row(width + n, 0);
    for (std::size_t j = 0; j < width; ++j) row[j] = cond[i][j];
    row[width + i] = 1;
    e.insert(row);
  }
  for (std::size_t j = 0; j < width; ++j) {
    Vector row(width + n, 0);
    row[j] = D;
    e.insert(row);
  }
  Matrix kernel;
  for (auto& row : e.hnf()) {
    bool left_zero = true;
    for (std::size_t j = 0; j < width; ++j)
      if (row[j] != 0) {
        left_zero = false;
        break;
      }
    if (left_zero) kernel.emplace_back(row.begin() + static_cast<long>(width), row.end());
  }
  return IdealHNF::from_rows(field, kernel);
}

unsigned ideal_valuation(const NumberField& field, const IdealHNF& I, const IdealHNF& q,
                         unsigned upper_bound) {
  unsigned k = 0;
  IdealHNF power = q;
  while (k < upper_bound && power.contains(I)) {
    ++k;
    if (k < upper_bound) power = ideal_mul(field, power, q);
  }
  return k;
}

}  // namespace cgs
