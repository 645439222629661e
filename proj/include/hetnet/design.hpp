#pragma once

#include <optional>

#include "hetnet/activity.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

struct CriticalPointResult {
  double lambda_f_c_star = 0.0;  ///< critical lambda_F * c, 1/m^2
  enum class Method { ClosedForm, Numerical } method = Method::ClosedForm;
  bool validity = true;          ///< lambda_M/(lambda_B mu) <= N - N_F held
  bool crossover_found = true;   ///< false: orthogonal dominates the whole range
  double bracket_lo = 0.0;
  double bracket_hi = 0.0;
  int iterations = 0;
};

/// Closed-form critical FAP density below which co-channel MU coverage beats
/// orthogonal, under uncoupled load (r_m = 0, one channel per service):
///   lambda_F' c' = (lambda_M/mu) * N_F/(N-N_F) * (P_B/(chi P_F))^delta
///                  * H2(beta_M, delta) / (delta pi csc(delta pi)).
CriticalPointResult critical_density_case1(const Scenario& s);

/// Root of M_C(beta_M | r_m, zeta_C(lfc)) - M_O(beta_M | zeta_O) in
/// lambda_F * c, with both activity factors taken from the linearly coupled
/// load model. A log-spaced prescan locates the sign change, then bisection
/// refines to 1e-3 relative. When coverage under orthogonal mode dominates
/// over the whole range, the result is typed "no crossover", not an error.
CriticalPointResult critical_density_numerical(const Scenario& s,
                                               double lo = 1e-6, double hi = 1e-1);

/// One cell of the effective-density summary: what a user of a tier sees.
struct EffectiveDensityCell {
  double mbs_density = 0.0;         ///< co-channel MBS density
  double fap_parent_density = 0.0;  ///< co-channel cluster density
  double c_tilde = 0.0;             ///< mean co-channel FAPs per cluster
  bool hole_at_observer = false;    ///< parent density vanishes inside B(0,r_m)
};

struct EffectiveDensityReport {
  Mode mode = Mode::CoChannel;
  double zeta = 1.0;
  double p_rm = 1.0;
  EffectiveDensityCell mu;           ///< MU on a femto-shared channel
  std::optional<EffectiveDensityCell> mu_reserved;  ///< partial: macro-only channels
  EffectiveDensityCell fu;
};

EffectiveDensityReport effective_densities(Mode mode, const Scenario& s, double zeta);

}  // namespace hetnet
