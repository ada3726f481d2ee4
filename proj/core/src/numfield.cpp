#include "cgs/numfield.hpp"

#include <optional>
#include <set>

#include "cgs/error.hpp"
#include "cgs/polymodp.hpp"

namespace cgs {

bool AlgebraicInteger::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

ZPoly AlgebraicInteger::as_poly() const {
  ZPoly p(coeffs);
  normalize(p);
  return p;
}

Integer polynomial_discriminant(const ZPoly& T) {
  const int n = degree(T);
  Integer r = resultant(T, derivative(T));
  if (((n * (n - 1)) / 2) % 2 == 1) r = -r;
  return r;
}

bool certify_irreducible(const ZPoly& T, unsigned primes_to_try, bool* found_factor) {
  if (found_factor) *found_factor = false;
  const int n = degree(T);
  if (n <= 1) return n == 1;
  if (content(T) != 1 || T[0] == 0) {
    if (found_factor) *found_factor = true;
    return false;
  }
  const Integer disc = resultant(T, derivative(T));
  if (disc == 0) {
    if (found_factor) *found_factor = true;  // repeated factor
    return false;
  }
  const Integer& lc = leading(T);

  // Degrees a proper factor over Z could have, intersected across primes.
  std::set<int> possible;
  for (int d = 1; d < n; ++d) possible.insert(d);
  unsigned used = 0;
  for (std::uint64_t p : primes_up_to(20000)) {
    if (used >= primes_to_try || possible.empty()) break;
    if (mpz_divisible_ui_p(disc.get_mpz_t(), p) || mpz_divisible_ui_p(lc.get_mpz_t(), p)) continue;
    ++used;
    std::set<int> sums{0};
    for (auto& [g, e] : fp::factor(fp::reduce(T, p), p)) {
      for (unsigned k = 0; k < e; ++k) {
        std::set<int> next = sums;
        for (int s : sums) next.insert(s + fp::degree(g));
        sums = std::move(next);
      }
    }
    std::set<int> keep;
    for (int d : possible)
      if (sums.count(d)) keep.insert(d);
    possible = std::move(keep);
  }
  if (possible.empty()) return true;

  if (possible.count(1) || possible.count(n - 1)) {
    // A linear factor means a rational root num/den with num | T(0), den | lc.
    auto divisors_of = [](const Integer& c) -> std::optional<std::vector<Integer>> {
      auto fac = factor_integer(c);
      if (!fac) return std::nullopt;
      std::vector<Integer> divs{1};
      for (auto& [p, e] : *fac) {
        std::vector<Integer> next;
        for (const auto& d : divs) {
          Integer pk = 1;
          for (unsigned k = 0; k <= e; ++k, pk *= p) next.push_back(d * pk);
        }
        divs = std::move(next);
      }
      return divs;
    };
    auto nums = divisors_of(abs(T[0]));
    auto dens = divisors_of(abs(lc));
    if (nums && dens) {
      for (const auto& a : *nums)
        for (const auto& b : *dens)
          for (int sign : {1, -1}) {
            // b^n T(sign*a/b)
            Integer acc = 0, apow = 1, sa = sign * a;
            for (int i = 0; i <= n; ++i) {
              acc += T[i] * apow * ipow(b, static_cast<unsigned long>(n - i));
              apow *= sa;
            }
            if (acc == 0) {
              if (found_factor) *found_factor = true;
              return false;
            }
          }
      possible.erase(1);
      possible.erase(n - 1);
      if (possible.empty()) return true;
    }
  }
  return false;
}

bool dedekind_p_maximal(const ZPoly& T, std::uint64_t p) {
  const FpPoly Tp = fp::reduce(T, p);
  FpPoly g{1}, h{1};
  for (auto& [q, e] : fp::factor(Tp, p)) {
    g = fp::mul(g, q, p);
    for (unsigned k = 1; k < e; ++k) h = fp::mul(h, q, p);
  }
  const ZPoly G = fp::lift(g), H = fp::lift(h);
  ZPoly F = sub(mul(G, H), T);
  const Integer pp(static_cast<unsigned long>(p));
  for (auto& c : F) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pp.get_mpz_t());
  const FpPoly Fp = fp::reduce(F, p);
  FpPoly d = fp::gcd(fp::gcd(Fp, g, p), h, p);
  return fp::degree(d) == 0;
}

NumberField NumberField::make(ZPoly T, std::string label, const FieldOptions& opts) {
  normalize(T);
  if (T.empty() || leading(T) != 1) throw Error(ErrorCode::NotMonic, "defining polynomial must be monic");
  if (cgs::degree(T) < 2) throw Error(ErrorCode::DegreeTooSmall, "degree must be at least 2");
  bool found = false;
  if (!certify_irreducible(T, opts.irreducibility_primes, &found)) {
    throw Error(ErrorCode::Reducible, found ? "T factors over Z"
                                            : "T could not be certified irreducible");
  }

  NumberField K;
  K.T_ = std::move(T);
  K.n_ = cgs::degree(K.T_);
  K.height_ = cgs::height(K.T_);
  K.disc_T_ = polynomial_discriminant(K.T_);
  K.abs_disc_ = abs(K.disc_T_);
  K.label_ = std::move(label);

  // abs_disc is exact when every p with p^2 | disc is certified p-maximal;
  // otherwise it is only known to be an upper bound for |Delta_K|.
  K.disc_is_upper_bound_ = true;
  if (auto fac = factor_integer(K.disc_T_, opts.factoring_trial_limit, opts.factoring_rho_iterations)) {
    bool maximal = true;
    for (auto& [p, e] : *fac) {
      if (e < 2) continue;
      if (!p.fits_ulong_p() || !dedekind_p_maximal(K.T_, p.get_ui())) {
        maximal = false;
        break;
      }
    }
    K.disc_is_upper_bound_ = !maximal;
  }
  return K;
}

AlgebraicInteger NumberField::zero() const { return {std::vector<Integer>(n_, 0)}; }

AlgebraicInteger NumberField::one() const {
  auto x = zero();
  x.coeffs[0] = 1;
  return x;
}

AlgebraicInteger NumberField::theta() const {
  auto x = zero();
  x.coeffs[1] = 1;
  return x;
}

AlgebraicInteger NumberField::from_poly(const ZPoly& a) const {
  ZPoly r = rem_monic(a, T_);
  AlgebraicInteger x = zero();
  for (std::size_t i = 0; i < r.size(); ++i) x.coeffs[i] = r[i];
  return x;
}

AlgebraicInteger NumberField::mul(const AlgebraicInteger& x, const AlgebraicInteger& y) const {
  return from_poly(cgs::mul(x.as_poly(), y.as_poly()));
}

AlgebraicInteger NumberField::pow(const AlgebraicInteger& x, unsigned long e) const {
  AlgebraicInteger r = one(), b = x;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

std::vector<std::vector<Integer>> NumberField::multiplication_matrix(const AlgebraicInteger& x) const {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(n_);
  AlgebraicInteger cur = x;
  const AlgebraicInteger th = theta();
  for (int j = 0; j < n_; ++j) {
    rows.push_back(cur.coeffs);
    cur = mul(cur, th);
  }
  return rows;
}

Integer element_norm(const NumberField& field, const AlgebraicInteger& x) {
  const ZPoly a = x.as_poly();
  if (a.empty()) throw Error(ErrorCode::ZeroElement, "norm of zero");
  const int n = field.degree();
  const ZPoly& T = field.T();
  if (degree(a) == 0) return abs(ipow(a[0], n));
  if (degree(a) == 1) {
    // prod (a1*beta + a0) = (-1)^n sum_i T_i (-a0)^i a1^(n-i)
    Integer acc = 0, pw_a0 = 1;
    const Integer neg_a0 = -a[0];
    for (int i = 0; i <= n; ++i) {
      acc += T[i] * pw_a0 * ipow(a[1], static_cast<unsigned long>(n - i));
      pw_a0 *= neg_a0;
    }
    return abs(acc);
  }
  return abs(resultant(a, T));
}

Integer norm_bound(const NumberField& field, unsigned t, const Integer& S) {
  const unsigned long n = static_cast<unsigned long>(field.degree());
  // Square of the bound is an integer; take the exact ceiling of its root.
  Integer sq = ipow(Integer(t + 1), n) * ipow(Integer(n + 1), t) *
               ipow(field.height(), 2ul * t) * ipow(S, 2 * n);
  Integer r;
  mpz_sqrt(r.get_mpz_t(), sq.get_mpz_t());
  if (r * r != sq) r += 1;
  return r;
}

AlgebraicInteger mul_mod(const NumberField& field, const AlgebraicInteger& x, const AlgebraicInteger& y) {
  return field.mul(x, y);
}

}  // namespace cgs
