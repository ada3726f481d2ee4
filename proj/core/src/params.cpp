#include "cgs/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cgs/error.hpp"

namespace cgs {

namespace {

const double kLog16 = std::log(16.0);

double loglog_floor(const Integer& abs_disc) {
  return std::max(log_abs(abs_disc), kLog16);
}

Integer ceil_exp(double log_value) {
  if (log_value <= 0) return 1;
  if (log_value < 700) {
    mpf_class v(std::exp(log_value), 128);
    mpz_class out;
    mpz_set_f(out.get_mpz_t(), v.get_mpf_t());
    if (mpf_class(out, 128) < v) out += 1;
    return out;
  }
  // Far beyond desk scale: 2^k * e^r with double precision on the mantissa.
  const double k = std::floor(log_value / std::log(2.0)) - 60;
  const double r = log_value - k * std::log(2.0);
  Integer m = static_cast<unsigned long>(std::ceil(std::exp(r)));
  return m << static_cast<mp_bitcnt_t>(k);
}

struct OmegaPair {
  double big, small;
};

OmegaPair omegas(double omega, LinearAlgebraModel model) {
  if (model == LinearAlgebraModel::LasVegas) return {omega, omega - 1};
  return {omega + 1, omega};
}

void check_descriptor(const ClassDescriptor& d) {
  if (!(d.n0 > 0) || !(d.d0 > 0) || d.alpha < 0 || d.alpha > 1 || !(d.omega >= 2 && d.omega <= 3))
    throw Error(ErrorCode::DomainError, "class descriptor out of range");
}

void concretize(RegimeParams& r, double logD, int n, double t_exponent, double s_a, bool s_is_power_of_log) {
  const double X = logD / std::log(logD);
  r.t_real = r.c_t * std::pow(X, t_exponent);
  r.log_S = s_is_power_of_log ? r.c_s * std::log(logD) : log_L(logD, std::clamp(s_a, 0.0, 1.0), r.c_s);
  r.B = ceil_exp(r.log_B);
  r.S = ceil_exp(r.log_S);
  const double t_ceil = std::ceil(r.t_real - 1e-12);
  const double t_cap = static_cast<double>(std::max(1, n - 1));
  r.t = static_cast<unsigned>(std::clamp(t_ceil, 1.0, t_cap));
}

}  // namespace

double log_L(double log_N, double a, double c) {
  if (!(log_N >= kLog16 - 1e-12) || a < 0 || a > 1 || c < 0)
    throw Error(ErrorCode::DomainError, "L-notation needs N >= 16, a in [0,1], c >= 0");
  return c * std::pow(log_N, a) * std::pow(std::log(log_N), 1 - a);
}

double eval_L(double log_N, double a, double c) { return std::exp(log_L(log_N, a, c)); }

double eval_L(const Integer& N, double a, double c) {
  if (N < 16) throw Error(ErrorCode::DomainError, "L-notation needs N >= 16");
  return eval_L(log_abs(N), a, c);
}

double degree_scale(const Integer& abs_disc) {
  const double l = loglog_floor(abs_disc);
  return l / std::log(l);
}

ClassDescriptor classify(const NumberField& field, const std::optional<ClassDescriptor>& hint, double omega) {
  const double logD = loglog_floor(field.abs_disc());
  const double llD = std::log(logD);
  const double X = logD / llD;
  const double n = field.degree();
  const double d = log_abs(field.height());
  if (hint) {
    const ClassDescriptor& h = *hint;
    check_descriptor(h);
    const double Xa = std::pow(X, h.alpha);
    const double tol = 1e-9;
    const bool window = Xa / h.n0 <= n * (1 + tol) && n <= h.n0 * Xa * (1 + tol);
    const bool height_ok = d <= h.d0 * std::pow(logD, h.gamma) * std::pow(llD, 1 - h.gamma) * (1 + tol) + tol;
    const bool gamma_ok = h.gamma >= 1 - h.alpha - tol;
    if (!window || !height_ok || !gamma_ok)
      throw Error(ErrorCode::HintViolatesClassD, "hint does not describe this field");
    ClassDescriptor out = h;
    out.desk_scale = logD < 50;
    return out;
  }
  ClassDescriptor out;
  out.omega = omega;
  out.alpha = std::clamp(std::log(n) / std::log(X), 0.0, 1.0);
  const double Xa = std::pow(X, out.alpha);
  out.n0 = std::max({n / Xa, Xa / n, 1.0});
  out.d0 = 1.0;
  const double floor_gamma = 1 - out.alpha;
  out.gamma = d > 0 ? std::max(floor_gamma, std::log(d / llD) / std::log(X)) : floor_gamma;
  out.desk_scale = logD < 50;
  return out;
}

std::string to_string(Regime r) {
  switch (r) {
    case Regime::Medium: return "medium";
    case Regime::Small: return "small";
    case Regime::Large: return "large";
  }
  return "?";
}

Regime regime_of(double alpha, double gamma) {
  if (2 * alpha < gamma) return Regime::Small;
  if (alpha > 2 * gamma) return Regime::Large;
  return Regime::Medium;
}

RegimeParams medium_params(const ClassDescriptor& d, const Integer& abs_disc, int n, LinearAlgebraModel model) {
  check_descriptor(d);
  if (regime_of(d.alpha, d.gamma) != Regime::Medium)
    throw Error(ErrorCode::WrongRegime, "medium regime needs gamma/2 <= alpha <= 2 gamma");
  const auto [big, small] = omegas(d.omega, model);
  const double ag = d.alpha + d.gamma;
  RegimeParams r;
  r.regime = Regime::Medium;
  r.c_s = std::cbrt(2 * d.d0 * d.d0 * ag * big * big / (3 * d.n0 * small));
  r.c_b = std::cbrt(4 * d.n0 * d.d0 * ag * ag * big / (9 * small * small));
  r.c_t = big * r.c_b / r.c_s;
  r.exponent_a = ag / 3;
  r.exponent_c = std::cbrt(4 * d.n0 * d.d0 * ag * ag * std::pow(big, 4) / (9 * small * small));
  const double logD = loglog_floor(abs_disc);
  r.log_B = log_L(logD, ag / 3, r.c_b);
  concretize(r, logD, n, 2 * ag / 3 - d.gamma, 2 * ag / 3 - d.alpha, false);
  return r;
}

RegimeParams small_params(const ClassDescriptor& d, const Integer& abs_disc, int n, unsigned c_t_choice,
                          LinearAlgebraModel model) {
  check_descriptor(d);
  if (regime_of(d.alpha, d.gamma) != Regime::Small)
    throw Error(ErrorCode::WrongRegime, "small regime needs 2 alpha < gamma");
  if (c_t_choice < 1) throw Error(ErrorCode::InvalidArgument, "c_t must be >= 1");
  const auto [big, small] = omegas(d.omega, model);
  RegimeParams r;
  r.regime = Regime::Small;
  r.c_t = c_t_choice;
  r.c_b = std::sqrt(d.d0 * d.gamma * r.c_t / (2 * small));
  r.c_s = big * r.c_b / (r.c_t + 1);
  r.exponent_a = d.gamma / 2;
  r.exponent_c = std::sqrt(d.d0 * d.gamma * big * big * r.c_t / (2 * small));
  const double logD = loglog_floor(abs_disc);
  r.log_B = log_L(logD, d.gamma / 2, r.c_b);
  concretize(r, logD, n, 0.0, d.gamma / 2, false);
  return r;
}

RegimeParams large_params(const ClassDescriptor& d, const Integer& abs_disc, int n, double c_s_choice,
                          LinearAlgebraModel model) {
  check_descriptor(d);
  if (regime_of(d.alpha, d.gamma) != Regime::Large)
    throw Error(ErrorCode::WrongRegime, "large regime needs alpha > 2 gamma");
  if (!(c_s_choice > 0)) throw Error(ErrorCode::InvalidArgument, "c_s must be positive");
  const auto [big, small] = omegas(d.omega, model);
  RegimeParams r;
  r.regime = Regime::Large;
  r.c_s = c_s_choice;
  r.c_b = std::sqrt(d.n0 * d.alpha * (d.alpha + 4 * r.c_s) / (8 * small));
  r.c_t = big * r.c_b / r.c_s;
  r.exponent_a = d.alpha / 2;
  r.exponent_c = std::sqrt(d.n0 * d.alpha * (d.alpha + 4 * r.c_s) * big * big / (8 * small));
  const double logD = loglog_floor(abs_disc);
  r.log_B = log_L(logD, d.alpha / 2, r.c_b);
  concretize(r, logD, n, d.alpha / 2, 0.0, true);
  return r;
}

RegimeParams regime_params(const ClassDescriptor& d, const Integer& abs_disc, int n, LinearAlgebraModel model) {
  switch (regime_of(d.alpha, d.gamma)) {
    case Regime::Medium: return medium_params(d, abs_disc, n, model);
    case Regime::Small: return small_params(d, abs_disc, n, 1, model);
    case Regime::Large: return large_params(d, abs_disc, n, 0.1, model);
  }
  throw Error(ErrorCode::DomainError, "unreachable regime");
}

double large_degree_limit_constant(double n0, double alpha, double omega, LinearAlgebraModel model) {
  const auto [big, small] = omegas(omega, model);
  return std::sqrt(n0 * alpha * alpha * big * big / (8 * small));
}

std::string StrategyDecision::label() const {
  switch (action) {
    case Action::Sieve: return "Sieve(" + to_string(regime) + ")";
    case Action::PolyRedThenSieve: return "PolyRedThenSieve";
    case Action::IdealReduction: return "IdealReduction";
  }
  return "?";
}

StrategyDecision strategy(double alpha, double gamma_0, double gamma_F) {
  const double eps = 1e-12;
  if (alpha < -eps || alpha > 1 + eps || gamma_0 < -eps || gamma_0 > 2 + eps || gamma_F < -eps ||
      gamma_F > gamma_0 + eps || gamma_F < 1 - alpha - eps)
    throw Error(ErrorCode::DomainError, "strategy inputs outside the admissible domain");
  StrategyDecision s;
  if (alpha <= 0.5 + eps) {
    if (gamma_0 <= 2 * alpha + eps) {
      s = {Action::Sieve, Regime::Medium, (alpha + gamma_0) / 3, "alpha<=1/2, gamma_0<=2alpha"};
    } else if (gamma_F > 2 * alpha + eps) {
      s = {Action::PolyRedThenSieve, Regime::Small, gamma_F / 2, "alpha<=1/2, 2alpha<gamma_F<=gamma_0"};
    } else {
      s = {Action::PolyRedThenSieve, Regime::Medium, alpha, "alpha<=1/2, gamma_F<=2alpha<gamma_0"};
    }
    return s;
  }
  const double ideal_exp = std::max(0.5, (2 * alpha + 1) / 5);
  if (2 * gamma_0 <= alpha + eps) {
    s = {Action::Sieve, Regime::Large, alpha / 2, "alpha>1/2, 2gamma_0<=alpha"};
  } else if ((alpha + gamma_0) / 3 <= ideal_exp + eps) {
    s = {Action::Sieve, Regime::Medium, (alpha + gamma_0) / 3, "alpha>1/2, (alpha+gamma_0)/3<=max(1/2,(2alpha+1)/5)"};
  } else {
    s = {Action::IdealReduction, Regime::Medium, ideal_exp, "alpha>1/2, (alpha+gamma_0)/3>max(1/2,(2alpha+1)/5)"};
  }
  return s;
}

std::vector<RegionPoint> strategy_regions(double step, double gamma_max) {
  if (!(step > 0) || step > 0.1) throw Error(ErrorCode::InvalidArgument, "grid step must lie in (0, 0.1]");
  const long na = std::lround(std::floor(1.0 / step + 1e-9));
  const long ng = std::lround(std::floor(gamma_max / step + 1e-9));
  std::vector<RegionPoint> out;
  out.reserve(static_cast<std::size_t>((na + 1) * (ng + 1)));
  for (long i = 0; i <= na; ++i) {
    for (long j = 0; j <= ng; ++j) {
      RegionPoint pt;
      pt.alpha = i * step;
      pt.gamma_0 = j * step;
      pt.valid = pt.gamma_0 >= 1 - pt.alpha - 1e-9;
      if (pt.valid) pt.decision = strategy(pt.alpha, pt.gamma_0, std::max(pt.gamma_0, 1 - pt.alpha));
      out.push_back(pt);
    }
  }
  return out;
}

DeskPlan desk_scale_plan(const NumberField& field, const ClassDescriptor& d) {
  DeskPlan plan;
  const int n = field.degree();
  bool use_formulas = false;
  RegimeParams r;
  try {
    r = regime_params(d, field.abs_disc(), n);
    use_formulas = r.B >= 30 && r.B <= 1000000;
  } catch (const Error&) {
    use_formulas = false;
  }
  if (use_formulas) {
    plan.adaptive = false;
    plan.B = r.B.get_ui();
    plan.t = r.t;
    plan.S = r.S.fits_slong_p() ? r.S.get_si() : std::numeric_limits<long>::max();
    return plan;
  }
  const double l = log_abs(field.abs_disc());
  plan.adaptive = true;
  plan.B = std::max<std::uint64_t>(30, static_cast<std::uint64_t>(std::ceil(l * l - 1e-12)));
  plan.t = static_cast<unsigned>(std::min(n - 1, 2));
  plan.S = 8;
  return plan;
}

DeskPlan desk_scale_plan(const NumberField& field) { return desk_scale_plan(field, classify(field)); }

}  // namespace cgs
