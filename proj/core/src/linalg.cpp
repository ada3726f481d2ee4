#include "cgs/linalg.hpp"

#include <algorithm>
#include <utility>

#include "cgs/error.hpp"

namespace cgs {

namespace {

void axpy(Vector& dst, const Integer& q, const Vector& src) {
  for (std::size_t k = 0; k < dst.size(); ++k)
    if (src[k] != 0) dst[k] += q * src[k];
}

void combo_axpy(std::map<std::size_t, Integer>& dst, const Integer& q,
                const std::map<std::size_t, Integer>& src) {
  for (const auto& [k, c] : src) {
    Integer& d = dst[k];
    d += q * c;
    if (d == 0) dst.erase(k);
  }
}

}  // namespace

LatticeEchelon::LatticeEchelon(std::size_t columns, bool track_combinations)
    : columns_(columns), track_(track_combinations), rows_(columns) {}

void LatticeEchelon::reduce_mod_det(Vector& v) const {
  if (det_ == 0) return;
  for (auto& x : v)
    if (x != 0) x = mod_floor(x, det_);
}

bool LatticeEchelon::insert(const Vector& input) {
  if (input.size() != columns_) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
  Vector v = input;
  std::map<std::size_t, Integer> combo;
  if (track_) combo[inserted_] = 1;
  ++inserted_;
  reduce_mod_det(v);

  for (std::size_t j = 0; j < columns_; ++j) {
    if (v[j] == 0) continue;
    if (!rows_[j]) {
      if (v[j] < 0) {
        for (auto& x : v) x = -x;
        for (auto& [k, c] : combo) c = -c;
      }
      rows_[j] = Row{std::move(v), std::move(combo)};
      ++rank_;
      if (!track_ && rank_ == columns_) {
        det_ = pivot_product();
        for (std::size_t c = 0; c < columns_; ++c)
          for (std::size_t k = c + 1; k < columns_; ++k) rows_[c]->v[k] = mod_floor(rows_[c]->v[k], det_);
      }
      return true;
    }
    Row& r = *rows_[j];
    const Integer a = r.v[j], b = v[j];
    if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
      const Integer q = -(b / a);
      axpy(v, q, r.v);
      if (track_) combo_axpy(combo, q, r.combo);
    } else {
      Integer g, s, t;
      xgcd(g, s, t, a, b);
      const Integer ag = a / g, bg = b / g;
      Vector nr(columns_), nv(columns_);
      for (std::size_t k = 0; k < columns_; ++k) {
        nr[k] = s * r.v[k] + t * v[k];
        nv[k] = ag * v[k] - bg * r.v[k];
      }
      if (track_) {
        std::map<std::size_t, Integer> ncr, ncv;
        combo_axpy(ncr, s, r.combo);
        combo_axpy(ncr, t, combo);
        combo_axpy(ncv, ag, combo);
        combo_axpy(ncv, -bg, r.combo);
        r.combo = std::move(ncr);
        combo = std::move(ncv);
      }
      r.v = std::move(nr);
      v = std::move(nv);
      if (!track_ && det_ != 0) {
        det_ = pivot_product();
        reduce_mod_det(v);
        for (std::size_t k = j + 1; k < columns_; ++k) r.v[k] = mod_floor(r.v[k], det_);
      }
    }
    if (!track_ && det_ != 0) reduce_mod_det(v);
  }
  return false;
}

std::vector<std::size_t> LatticeEchelon::missing_pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < columns_; ++j)
    if (!rows_[j]) out.push_back(j);
  return out;
}

Integer LatticeEchelon::pivot_product() const {
  Integer d = 1;
  for (std::size_t j = 0; j < columns_; ++j)
    if (rows_[j]) d *= rows_[j]->v[j];
  return d;
}

Matrix LatticeEchelon::hnf() const {
  std::vector<std::pair<std::size_t, Vector>> rows;
  for (std::size_t j = 0; j < columns_; ++j)
    if (rows_[j]) rows.emplace_back(j, rows_[j]->v);
  // In full-rank untracked mode rows may carry multiples of det in columns
  // past their pivot; the reduction below absorbs them.
  for (std::size_t i = rows.size(); i-- > 0;) {
    Vector& ri = rows[i].second;
    for (std::size_t k = i + 1; k < rows.size(); ++k) {
      const std::size_t pk = rows[k].first;
      const Integer& piv = rows[k].second[pk];
      if (ri[pk] < 0 || ri[pk] >= piv) axpy(ri, -floor_div(ri[pk], piv), rows[k].second);
    }
  }
  Matrix out;
  out.reserve(rows.size());
  for (auto& [j, v] : rows) out.push_back(std::move(v));
  return out;
}

std::optional<Vector> LatticeEchelon::solve(const Vector& y) const {
  if (!track_) throw Error(ErrorCode::InvalidArgument, "solve requires combination tracking");
  if (y.size() != columns_) throw Error(ErrorCode::InvalidArgument, "target length mismatch");
  Vector rest = y;
  std::map<std::size_t, Integer> x;
  for (std::size_t j = 0; j < columns_; ++j) {
    if (rest[j] == 0) continue;
    if (!rows_[j]) return std::nullopt;
    const Row& r = *rows_[j];
    if (!mpz_divisible_p(rest[j].get_mpz_t(), r.v[j].get_mpz_t())) return std::nullopt;
    const Integer q = rest[j] / r.v[j];
    axpy(rest, -q, r.v);
    combo_axpy(x, q, r.combo);
  }
  Vector out(inserted_, 0);
  for (auto& [k, c] : x) out[k] = c;
  return out;
}

bool LatticeEchelon::contains(const Vector& y) const {
  Vector rest = y;
  reduce_mod_det(rest);
  for (std::size_t j = 0; j < columns_; ++j) {
    if (rest[j] == 0) continue;
    if (!rows_[j]) return false;
    const Vector& r = rows_[j]->v;
    if (!mpz_divisible_p(rest[j].get_mpz_t(), r[j].get_mpz_t())) return false;
    axpy(rest, -(rest[j] / r[j]), r);
    reduce_mod_det(rest);
  }
  return true;
}

Matrix hnf(const Matrix& M) {
  if (M.empty()) throw Error(ErrorCode::InvalidArgument, "hnf of empty matrix");
  LatticeEchelon e(M.front().size());
  for (const auto& row : M) e.insert(row);
  return e.hnf();
}

Vector SmithForm::nontrivial() const {
  Vector out;
  for (const auto& d : diagonal)
    if (d != 1) out.push_back(d);
  return out;
}

Integer SmithForm::product() const {
  Integer p = 1;
  for (const auto& d : diagonal) p *= d;
  return p;
}

namespace {

// Diagonalizes an arbitrary integer matrix in place by unimodular row and
// column operations; returns the nonzero diagonal as a divisibility chain.
Vector smith_generic(Matrix A) {
  const std::size_t m = A.size();
  const std::size_t n = m ? A[0].size() : 0;
  Vector diag;
  for (std::size_t k = 0; k < std::min(m, n); ++k) {
    for (;;) {
      std::size_t pi = m, pj = n;
      for (std::size_t i = k; i < m; ++i)
        for (std::size_t j = k; j < n; ++j)
          if (A[i][j] != 0 && (pi == m || abs(A[i][j]) < abs(A[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi == m) {
        std::sort(diag.begin(), diag.end());
        return diag;
      }
      std::swap(A[k], A[pi]);
      for (auto& row : A) std::swap(row[k], row[pj]);

      bool clean = true;
      const Integer p = A[k][k];
      for (std::size_t i = k + 1; i < m; ++i) {
        if (A[i][k] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), A[i][k].get_mpz_t(), p.get_mpz_t());
        for (std::size_t j = k; j < n; ++j) A[i][j] -= q * A[k][j];
        if (A[i][k] != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (A[k][j] == 0) continue;
        Integer q;
        mpz_tdiv_q(q.get_mpz_t(), A[k][j].get_mpz_t(), p.get_mpz_t());
        for (std::size_t i = k; i < m; ++i) A[i][j] -= q * A[i][k];
        if (A[k][j] != 0) clean = false;
      }
      if (!clean) continue;

      bool divides = true;
      for (std::size_t i = k + 1; i < m && divides; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!mpz_divisible_p(A[i][j].get_mpz_t(), p.get_mpz_t())) {
            for (std::size_t c = k; c < n; ++c) A[k][c] += A[i][c];
            divides = false;
            break;
          }
      if (divides) break;
    }
    diag.push_back(abs(A[k][k]));
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace

SmithForm snf(const Matrix& M) {
  if (M.empty() || M.front().empty()) throw Error(ErrorCode::InvalidArgument, "snf of empty matrix");
  Matrix H = hnf(M);
  SmithForm out;
  out.rank = H.size();
  const std::size_t n = M.front().size();
  out.full_rank = out.rank == n;
  if (H.empty()) return out;

  if (!out.full_rank) {
    out.diagonal = smith_generic(std::move(H));
    return out;
  }

  // Square upper-triangular: a unit pivot splits off a trivial factor.
  // Clearing row j to the right of a unit pivot (column operations) and then
  // column j above it (row operations) leaves e_j isolated.
  std::vector<bool> drop(n, false);
  for (std::size_t j = n; j-- > 0;) {
    if (H[j][j] != 1) continue;
    for (std::size_t k = j + 1; k < n; ++k) {
      if (H[j][k] == 0) continue;
      const Integer f = H[j][k];
      for (std::size_t i = 0; i < j; ++i)
        if (H[i][j] != 0) H[i][k] -= f * H[i][j];
      H[j][k] = 0;
    }
    for (std::size_t i = 0; i < j; ++i) H[i][j] = 0;
    drop[j] = true;
  }
  Matrix rest;
  std::vector<std::size_t> keep;
  for (std::size_t j = 0; j < n; ++j)
    if (!drop[j]) keep.push_back(j);
  for (std::size_t i : keep) {
    Vector row;
    for (std::size_t j : keep) row.push_back(H[i][j]);
    rest.push_back(std::move(row));
  }
  Vector diag(n - keep.size(), 1);
  if (!rest.empty()) {
    Vector d = smith_generic(std::move(rest));
    diag.insert(diag.end(), d.begin(), d.end());
  }
  out.diagonal = std::move(diag);
  return out;
}

std::optional<Vector> solve_in_lattice(const Matrix& M, const Vector& y) {
  if (M.empty()) throw Error(ErrorCode::InvalidArgument, "empty matrix");
  LatticeEchelon e(M.front().size(), true);
  for (const auto& row : M) e.insert(row);
  return e.solve(y);
}

}  // namespace cgs
