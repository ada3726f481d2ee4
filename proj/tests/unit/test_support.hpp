#pragma once
#include <initializer_list>
#include <vector>

#include "cgs/numfield.hpp"

namespace cgs::testing {

inline NumberField field_of(std::initializer_list<long> coeffs) {
  ZPoly T;
  for (long c : coeffs) T.push_back(c);
  return NumberField::make(T);
}

inline AlgebraicInteger elem(const NumberField& K, std::initializer_list<long> coeffs) {
  ZPoly a;
  for (long c : coeffs) a.push_back(c);
  normalize(a);
  return K.from_poly(a);
}

inline AlgebraicInteger elem(const NumberField& K, const std::vector<long>& coeffs) {
  ZPoly a(coeffs.begin(), coeffs.end());
  normalize(a);
  return K.from_poly(a);
}

}  // namespace cgs::testing
