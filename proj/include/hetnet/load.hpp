#pragma once

#include <vector>

#include "hetnet/scenario.hpp"

namespace hetnet {

/// Probability that the nearest same-channel MU lies beyond r_m of a cluster
/// center: exp(-(lambda_m/mu) * pi * r_m^2).
double access_probability(double r_m, const TrafficParams& t);

/// Binomial PMF over {0..trials} successes with per-trial probability p.
/// Computed with a factorial-free recurrence; mass sums to 1 within 1e-12.
std::vector<double> accessible_channels_pmf(double p, int trials);

struct EffectiveClusterMean {
  double exact;    ///< c/(N p) * (1 - (1-p)^N)
  double approx;   ///< c/(N p), i.e. (c/N) exp((lambda_m/mu) pi r_m^2)
  double rel_gap;  ///< (approx - exact) / approx; exact never exceeds approx
};

/// Mean co-channel FAPs per cluster after channel splitting and cognition,
/// both the exact binomial expectation and its large-N approximation.
EffectiveClusterMean effective_cluster_mean(double p, int n, double c);

struct ErlangOccupancy {
  std::vector<double> pmf;  ///< occupancy distribution over {0..n_e}
  double zeta_exact;        ///< (1/n_e) * sum n*pmf[n]
  double zeta_linear;       ///< min(a*lambda_M/(mu*n_e), 1)
};

/// M/M/n_e/n_e occupancy for a cell of area a: truncated-Poisson PMF with
/// offered load a*lambda_M/mu, plus the exact and linear channel-use ratios.
ErlangOccupancy erlang_occupancy(double area, const TrafficParams& t, int n_e);

/// Gamma(3.5, rate 3.5*lambda_B) density of the typical cell area.
double cell_area_pdf(double a, double lambda_b);

/// Mean channel-use probability of an MBS over the cell-area distribution:
///   zeta = gamma(4.5, 3.5*phi)/(3.5*phi*Gamma(3.5)) + Gamma(3.5, 3.5*phi)/Gamma(3.5)
/// with phi = 1/inv_phi. Continuous, nondecreasing, 0 at inv_phi=0, ->1.
double activity_closed_form(double inv_phi);

/// Linear load approximation: min(lambda_M*n_bar/(lambda_B*mu*N_mode), 1),
/// where N_mode is the macro channel count of the sharing mode.
double activity_linear(Mode mode, const Scenario& s, double n_bar);

/// Channels available to the macro tier under the given sharing mode:
/// N for co-channel and partial, N - N_F for orthogonal.
int macro_channel_count(Mode mode, const Scenario& s);

}  // namespace hetnet
