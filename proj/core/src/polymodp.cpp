#include "cgs/polymodp.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "cgs/error.hpp"

namespace cgs::fp {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

void normalize(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

int degree(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly reduce(const ZPoly& f, std::uint64_t p) {
  FpPoly r(f.size());
  const Integer pp(static_cast<unsigned long>(p));
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mod_floor(f[i], pp).get_ui();
  normalize(r);
  return r;
}

ZPoly lift(const FpPoly& f) {
  ZPoly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = static_cast<unsigned long>(f[i]);
  return r;
}

FpPoly add(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + b[i]) % p;
  normalize(r);
  return r;
}

FpPoly sub(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  normalize(r);
  return r;
}

FpPoly mul(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
  }
  normalize(r);
  return r;
}

void divmod(const FpPoly& a, const FpPoly& b, std::uint64_t p, FpPoly& q, FpPoly& r) {
  if (b.empty()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial mod p");
  r = a;
  normalize(r);
  const int db = degree(b);
  q.assign(std::max(0, degree(r) - db + 1), 0);
  const std::uint64_t inv = inverse(b.back(), p);
  while (!r.empty() && degree(r) >= db) {
    const int shift = degree(r) - db;
    const std::uint64_t c = mulmod(r.back(), inv, p);
    q[shift] = c;
    for (int i = 0; i <= db; ++i) r[shift + i] = (r[shift + i] + p - mulmod(c, b[i], p)) % p;
    normalize(r);
  }
  normalize(q);
}

FpPoly rem(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly q, r;
  divmod(a, b, p, q, r);
  return r;
}

FpPoly quo(const FpPoly& a, const FpPoly& b, std::uint64_t p) {
  FpPoly q, r;
  divmod(a, b, p, q, r);
  return q;
}

FpPoly monic(const FpPoly& a, std::uint64_t p) {
  if (a.empty()) return a;
  const std::uint64_t inv = inverse(a.back(), p);
  FpPoly r(a);
  for (auto& c : r) c = mulmod(c, inv, p);
  return r;
}

FpPoly gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  normalize(a);
  normalize(b);
  while (!b.empty()) {
    FpPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

FpPoly derivative(const FpPoly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  FpPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mulmod(a[i], i % p, p);
  normalize(r);
  return r;
}

FpPoly powmod(const FpPoly& base, const Integer& e, const FpPoly& m, std::uint64_t p) {
  FpPoly result{1};
  result = rem(result, m, p);
  FpPoly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

bool is_one(const FpPoly& a) { return a.size() == 1 && a[0] == 1; }

namespace {

using Factors = std::vector<std::pair<FpPoly, unsigned>>;

void squarefree(const FpPoly& f, std::uint64_t p, unsigned mult, Factors& out) {
  if (degree(f) <= 0) return;
  FpPoly c = gcd(f, derivative(f, p), p);
  FpPoly w = quo(f, c, p);
  unsigned i = 1;
  while (!is_one(w)) {
    FpPoly y = gcd(w, c, p);
    FpPoly z = quo(w, y, p);
    if (degree(z) > 0) out.emplace_back(monic(z, p), i * mult);
    ++i;
    w = std::move(y);
    c = quo(c, w, p);
  }
  if (degree(c) > 0) {
    // c is a polynomial in X^p; take the p-th root coefficientwise.
    FpPoly root;
    for (std::size_t j = 0; j < c.size(); j += p) root.push_back(c[j]);
    normalize(root);
    squarefree(monic(root, p), p, mult * static_cast<unsigned>(p), out);
  }
}

void equal_degree(const FpPoly& g, int d, std::uint64_t p, std::mt19937_64& rng,
                  std::vector<FpPoly>& out) {
  if (degree(g) == d) {
    out.push_back(g);
    return;
  }
  const Integer pp(static_cast<unsigned long>(p));
  for (;;) {
    FpPoly a(degree(g));
    for (auto& c : a) c = rng() % p;
    normalize(a);
    if (degree(a) <= 0) continue;
    FpPoly b;
    if (p == 2) {
      FpPoly term = a;
      b = a;
      for (int i = 1; i < d; ++i) {
        term = rem(mul(term, term, p), g, p);
        b = add(b, term, p);
      }
    } else {
      const Integer e = (ipow(pp, static_cast<unsigned long>(d)) - 1) / 2;
      b = sub(powmod(a, e, g, p), FpPoly{1}, p);
    }
    FpPoly h = gcd(g, b, p);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(quo(g, h, p), d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<FpPoly, unsigned>> factor(const FpPoly& f_in, std::uint64_t p) {
  FpPoly f = monic(f_in, p);
  normalize(f);
  if (f.empty()) throw Error(ErrorCode::ZeroPolynomial, "factor of zero polynomial mod p");
  Factors sqf;
  squarefree(f, p, 1, sqf);

  std::mt19937_64 rng(0x5eed0000ULL ^ p);
  std::map<FpPoly, unsigned> merged;
  const Integer pp(static_cast<unsigned long>(p));
  for (auto& [g0, mult] : sqf) {
    FpPoly g = g0;
    FpPoly h{0, 1};
    int i = 1;
    while (degree(g) >= 2 * i) {
      h = powmod(h, pp, g, p);
      FpPoly d = gcd(g, sub(h, FpPoly{0, 1}, p), p);
      if (degree(d) > 0) {
        std::vector<FpPoly> parts;
        equal_degree(d, i, p, rng, parts);
        for (auto& q : parts) merged[q] += mult;
        g = quo(g, d, p);
        h = rem(h, g, p);
      }
      ++i;
    }
    if (degree(g) > 0) merged[monic(g, p)] += mult;
  }
  Factors out(merged.begin(), merged.end());
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  return out;
}

}  // namespace cgs::fp
