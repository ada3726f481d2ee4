#include "cgs/integer.hpp"

#include <cmath>
#include <cstdio>

namespace cgs {

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_probable_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

unsigned strip_factor(Integer& n, const Integer& p) {
  unsigned k = 0;
  while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
    ++k;
  }
  return k;
}

unsigned valuation(Integer n, const Integer& p) { return strip_factor(n, p); }

std::optional<Integer> pollard_rho(const Integer& n, std::uint64_t iterations) {
  if (n % 2 == 0) return Integer(2);
  for (unsigned long c = 1; c < 64; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    std::uint64_t r = 1, spent = 0;
    const std::uint64_t m = 128;
    auto f = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          Integer d = abs(x - y);
          q = (q * d) % n;
        }
        g = gcd(q, n);
        k += m;
        spent += m;
      } while (k < r && g == 1 && spent < iterations);
      r *= 2;
    } while (g == 1 && spent < iterations);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(abs(x - ys), n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
    if (spent >= iterations) return std::nullopt;
  }
  return std::nullopt;
}

namespace {

bool split_into(const Integer& n, std::map<Integer, unsigned>& out, std::uint64_t rho_iterations) {
  if (n == 1) return true;
  if (is_probable_prime(n)) {
    out[n] += 1;
    return true;
  }
  Integer root;
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long k = 2; k < 64; ++k) {
      if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), k) != 0) {
        std::map<Integer, unsigned> inner;
        if (!split_into(root, inner, rho_iterations)) return false;
        for (auto& [p, e] : inner) out[p] += e * static_cast<unsigned>(k);
        return true;
      }
    }
  }
  auto d = pollard_rho(n, rho_iterations);
  if (!d) return false;
  return split_into(*d, out, rho_iterations) && split_into(n / *d, out, rho_iterations);
}

}  // namespace

std::optional<std::map<Integer, unsigned>> factor_integer(Integer n, std::uint64_t trial_limit,
                                                          std::uint64_t rho_iterations) {
  std::map<Integer, unsigned> out;
  n = abs(n);
  if (n == 0) return std::nullopt;
  for (std::uint64_t p : primes_up_to(trial_limit)) {
    if (Integer(p) * p > n) break;
    Integer pp(static_cast<unsigned long>(p));
    unsigned k = strip_factor(n, pp);
    if (k) out[pp] = k;
  }
  if (n > 1 && !split_into(n, out, rho_iterations)) return std::nullopt;
  return out;
}

Integer ipow(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

double log_abs(const Integer& n) {
  long e = 0;
  double m = mpz_get_d_2exp(&e, n.get_mpz_t());
  return std::log(std::fabs(m)) + static_cast<double>(e) * std::log(2.0);
}

std::string to_decimal(const Integer& n) { return n.get_str(10); }

Integer from_decimal(const std::string& s) {
  Integer r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("not a decimal integer: " + s);
  return r;
}

void xgcd(Integer& g, Integer& s, Integer& t, const Integer& a, const Integer& b) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

std::uint64_t fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace cgs
