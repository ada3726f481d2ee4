#pragma once

#include "cgs/linalg.hpp"

namespace cgs {

/// LLL reduction with exact rational Gram-Schmidt data. Rows of `basis` must
/// be linearly independent; they may be shorter than the ambient dimension.
/// delta is given as num/den (default 99/100).
Matrix lll_reduce(Matrix basis, long delta_num = 99, long delta_den = 100);

Integer squared_norm(const Vector& v);

}  // namespace cgs
