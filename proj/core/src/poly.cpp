#include "cgs/poly.hpp"

#include <algorithm>
#include <utility>

#include "cgs/error.hpp"

namespace cgs {

void normalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const ZPoly& p) { return static_cast<int>(p.size()) - 1; }

const Integer& leading(const ZPoly& p) { return p.back(); }

Integer content(const ZPoly& p) {
  Integer g = 0;
  for (const auto& c : p) g = gcd(g, c);
  return g;
}

Integer height(const ZPoly& p) {
  Integer h = 0;
  for (const auto& c : p) h = std::max(h, Integer(abs(c)));
  return h;
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  normalize(r);
  return r;
}

ZPoly sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  normalize(r);
  return r;
}

ZPoly mul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  normalize(r);
  return r;
}

ZPoly scale(const ZPoly& a, const Integer& c) {
  ZPoly r(a);
  for (auto& x : r) x *= c;
  normalize(r);
  return r;
}

ZPoly derivative(const ZPoly& p) {
  if (p.size() <= 1) return {};
  ZPoly r(p.size() - 1);
  for (std::size_t i = 1; i < p.size(); ++i) r[i - 1] = p[i] * static_cast<unsigned long>(i);
  normalize(r);
  return r;
}

Integer evaluate(const ZPoly& p, const Integer& x) {
  Integer acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ZPoly rem_monic(const ZPoly& a, const ZPoly& m) {
  ZPoly r(a);
  normalize(r);
  const int dm = degree(m);
  while (degree(r) >= dm) {
    const int shift = degree(r) - dm;
    const Integer c = r.back();
    for (int i = 0; i <= dm; ++i) r[shift + i] -= c * m[i];
    normalize(r);
  }
  return r;
}

ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
  ZPoly r(a);
  normalize(r);
  const int db = degree(b);
  int e = degree(a) - db + 1;
  const Integer& lb = leading(b);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const Integer c = r.back();
    for (auto& x : r) x *= lb;
    for (int i = 0; i <= db; ++i) r[shift + i] -= c * b[i];
    normalize(r);
    --e;
  }
  if (e > 0) {
    const Integer f = ipow(lb, static_cast<unsigned long>(e));
    for (auto& x : r) x *= f;
  }
  return r;
}

namespace {

// Sylvester-determinant resultant lc(A)^deg B prod B(alpha), by the
// subresultant PRS (Collins/Brown, as in Cohen's Algorithm 3.3.7).
Integer subresultant_prs(ZPoly a, ZPoly b) {
  if (degree(a) == 0) return ipow(leading(a), static_cast<unsigned long>(degree(b)));
  if (degree(b) == 0) return ipow(leading(b), static_cast<unsigned long>(degree(a)));

  int s = 1;
  if (degree(a) < degree(b)) {
    std::swap(a, b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -1;
  }
  const Integer ca = content(a), cb = content(b);
  for (auto& x : a) x /= ca;
  for (auto& x : b) x /= cb;
  const Integer t = ipow(ca, static_cast<unsigned long>(degree(b))) *
                    ipow(cb, static_cast<unsigned long>(degree(a)));
  Integer g = 1, h = 1;

  for (;;) {
    const int delta = degree(a) - degree(b);
    if (degree(a) % 2 == 1 && degree(b) % 2 == 1) s = -s;
    ZPoly r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    const Integer div = g * ipow(h, static_cast<unsigned long>(delta));
    for (auto& x : r) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), div.get_mpz_t());
    b = std::move(r);
    g = leading(a);
    if (delta >= 1) {
      Integer num = ipow(g, static_cast<unsigned long>(delta));
      Integer den = ipow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (degree(b) == 0) {
      const int da = degree(a);
      Integer num = ipow(leading(b), static_cast<unsigned long>(da));
      Integer den = ipow(h, static_cast<unsigned long>(da - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return s * t * h;
    }
  }
}

}  // namespace

Integer resultant(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  Integer r = subresultant_prs(a, b);
  if ((degree(a) * degree(b)) % 2 == 1) r = -r;
  return r;
}

Integer determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant_sylvester(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::ZeroPolynomial, "resultant of zero polynomial");
  const int m = degree(a), n = degree(b);
  if (m == 0 && n == 0) return 1;
  const int size = m + n;
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[i][i + j] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s[n + i][i + j] = b[n - j];
  Integer r = determinant(std::move(s));
  if ((m * n) % 2 == 1) r = -r;
  return r;
}

}  // namespace cgs
