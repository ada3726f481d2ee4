#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "cgs/integer.hpp"

namespace cgs {

using Vector = std::vector<Integer>;
using Matrix = std::vector<Vector>;

/// Incremental row echelon basis of an integer lattice. Rows are kept keyed
/// by pivot column with positive pivots. Optionally records, for every basis
/// row, its combination over the inserted source rows; without tracking,
/// entries are reduced modulo the determinant once the basis has full rank.
class LatticeEchelon {
 public:
  explicit LatticeEchelon(std::size_t columns, bool track_combinations = false);

  /// Adds a generator. Returns true when the rank grew.
  bool insert(const Vector& v);

  std::size_t columns() const { return columns_; }
  std::size_t rank() const { return rank_; }
  std::size_t inserted() const { return inserted_; }
  bool full_rank() const { return rank_ == columns_; }
  /// Columns without a pivot.
  std::vector<std::size_t> missing_pivots() const;
  /// Product of the pivots (the lattice determinant when full rank).
  Integer pivot_product() const;

  /// Reduced row HNF: nonzero rows in pivot order, entries above each pivot
  /// in [0, pivot).
  Matrix hnf() const;

  /// Integer x with sum x_i * source_i = y, or nullopt when y is not in the
  /// lattice. Requires tracking.
  std::optional<Vector> solve(const Vector& y) const;

  /// Membership test; works with or without tracking.
  bool contains(const Vector& y) const;

 private:
  struct Row {
    Vector v;
    std::map<std::size_t, Integer> combo;
  };
  void reduce_mod_det(Vector& v) const;

  std::size_t columns_;
  bool track_;
  std::vector<std::optional<Row>> rows_;
  std::size_t rank_ = 0;
  std::size_t inserted_ = 0;
  Integer det_ = 0;  // 0 until full rank (untracked mode only)
};

/// Row-style Hermite normal form of the lattice spanned by the rows of M:
/// nonzero rows only, upper echelon, positive pivots, entries above pivots
/// reduced into [0, pivot).
Matrix hnf(const Matrix& M);

struct SmithForm {
  Vector diagonal;  // d_1 | d_2 | ... | d_r, all positive
  std::size_t rank = 0;
  bool full_rank = false;  // rank equals the column count
  Vector nontrivial() const;
  Integer product() const;
};

/// Smith normal form diagonal of M (M nonzero). A rank-deficient input is
/// reported through `full_rank`, not thrown.
SmithForm snf(const Matrix& M);

/// Exact x with x * M = y over the integers, or nullopt.
std::optional<Vector> solve_in_lattice(const Matrix& M, const Vector& y);

}  // namespace cgs
