#pragma once
#include <optional>
#include <string>
#include <vector>

#include "cgs/integer.hpp"
#include "cgs/numfield.hpp"

namespace cgs {

/// exp(c (log N)^a (loglog N)^(1-a)) without any o(1) term. Requires
/// N >= 16, 0 <= a <= 1 and c >= 0; throws DomainError otherwise.
double eval_L(const Integer& N, double a, double c);
double eval_L(double log_N, double a, double c);
/// Natural log of eval_L, usable where the value itself overflows.
double log_L(double log_N, double a, double c);

/// Parameters of the class D(n0, d0, alpha, gamma) plus the linear-algebra
/// exponent omega.
struct ClassDescriptor {
  double n0 = 1.0;
  double d0 = 1.0;
  double alpha = 0.5;
  double gamma = 0.5;
  double omega = 3.0;
  bool desk_scale = false;
};

/// Linear-algebra cost model. LasVegas replaces omega + 1 by omega (and omega
/// by omega - 1) in every constant, for runs that only solve a linear system.
enum class LinearAlgebraModel { Classical, LasVegas };

/// log|Delta| / loglog|Delta| with |Delta| floored at 16.
double degree_scale(const Integer& abs_disc);

/// Classifies the field. With a hint, checks the degree window and the
/// height inequality for the field and returns the hint (throws
/// HintViolatesClassD on failure).
ClassDescriptor classify(const NumberField& field, const std::optional<ClassDescriptor>& hint = std::nullopt,
                         double omega = 3.0);

enum class Regime { Medium, Small, Large };
std::string to_string(Regime r);
/// Medium for gamma/2 <= alpha <= 2 gamma, Small for 2 alpha < gamma, Large
/// for alpha > 2 gamma.
Regime regime_of(double alpha, double gamma);

struct RegimeParams {
  Regime regime = Regime::Medium;
  double c_b = 0, c_s = 0, c_t = 0;
  double log_B = 0, log_S = 0, t_real = 0;
  Integer B, S;
  unsigned t = 1;
  double exponent_a = 0, exponent_c = 0;  // runtime L(a, c)
};

RegimeParams medium_params(const ClassDescriptor& d, const Integer& abs_disc, int n,
                           LinearAlgebraModel model = LinearAlgebraModel::Classical);
RegimeParams small_params(const ClassDescriptor& d, const Integer& abs_disc, int n, unsigned c_t_choice = 1,
                          LinearAlgebraModel model = LinearAlgebraModel::Classical);
RegimeParams large_params(const ClassDescriptor& d, const Integer& abs_disc, int n, double c_s_choice = 0.1,
                          LinearAlgebraModel model = LinearAlgebraModel::Classical);
/// Dispatches on regime_of(alpha, gamma) with the default free constants.
RegimeParams regime_params(const ClassDescriptor& d, const Integer& abs_disc, int n,
                           LinearAlgebraModel model = LinearAlgebraModel::Classical);

/// Runtime constant of the large-degree sieve in the limit c_s -> 0:
/// (n0 alpha^2 big^2 / (8 small))^(1/2) with (big, small) = (omega+1, omega)
/// or (omega, omega-1) under the Las Vegas model.
double large_degree_limit_constant(double n0, double alpha, double omega, LinearAlgebraModel model);

enum class Action { Sieve, PolyRedThenSieve, IdealReduction };

struct StrategyDecision {
  Action action = Action::Sieve;
  Regime regime = Regime::Medium;  // sieve regime where relevant
  double exponent = 0;
  std::string row;
  std::string label() const;
};

/// Strategy selection over (alpha, gamma_0, gamma_F). Throws DomainError
/// outside [0,1] x [0,2] or when gamma_F > gamma_0 or gamma_F < 1 - alpha.
StrategyDecision strategy(double alpha, double gamma_0, double gamma_F);

struct RegionPoint {
  double alpha = 0, gamma_0 = 0;
  bool valid = false;  // gamma_0 >= 1 - alpha
  StrategyDecision decision;
};

/// Grid over alpha in [0,1], gamma_0 in [0, gamma_max] with gamma_F = gamma_0.
/// Grid coordinates are i * step exactly.
std::vector<RegionPoint> strategy_regions(double step, double gamma_max = 1.2);

struct DeskPlan {
  bool adaptive = false;
  std::uint64_t B = 0;
  unsigned t = 1;
  long S = 8;
};

/// Concrete sieve parameters. Uses the regime formulas when they give
/// 30 <= B <= 10^6, else B = max(30, ceil(log^2 |Delta|)), t = min(n-1, 2)
/// and S starting at 8 (doubled by the driver until enough relations).
DeskPlan desk_scale_plan(const NumberField& field, const ClassDescriptor& d);
DeskPlan desk_scale_plan(const NumberField& field);

}  // namespace cgs
