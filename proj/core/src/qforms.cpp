#include "cgs/qforms.hpp"

#include <cstdlib>
#include <numeric>

#include "cgs/error.hpp"

namespace cgs {

namespace {

bool squarefree(long m) {
  m = std::labs(m);
  for (long p = 2; p * p <= m; ++p)
    if (m % (p * p) == 0) return false;
  return true;
}

long mod4(long x) { return ((x % 4) + 4) % 4; }

}  // namespace

std::vector<std::tuple<long, long, long>> reduced_forms(long D, bool primitive_only) {
  if (D >= 0 || (mod4(D) != 0 && mod4(D) != 1))
    throw Error(ErrorCode::OracleDomain, "reduced-form oracle needs D < 0 with D = 0, 1 mod 4");
  std::vector<std::tuple<long, long, long>> out;
  // a <= sqrt(|D|/3) for reduced forms.
  for (long a = 1; 3 * a * a <= -D; ++a) {
    for (long b = -a + 1; b <= a; ++b) {
      const long num = b * b - D;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if ((a == c || a == std::labs(b)) && b < 0) continue;
      if (primitive_only && std::gcd(std::gcd(a, std::labs(b)), c) != 1) continue;
      out.emplace_back(a, b, c);
    }
  }
  return out;
}

long class_number_forms(long D) { return static_cast<long>(reduced_forms(D).size()); }

bool is_fundamental_discriminant(long D) {
  if (D >= 0) return false;
  if (mod4(D) == 1) return squarefree(D);
  if (mod4(D) != 0) return false;
  const long m = D / 4;
  return (mod4(m) == 2 || mod4(m) == 3) && squarefree(m);
}

}  // namespace cgs
