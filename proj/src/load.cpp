#include "hetnet/load.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet {

double access_probability(double r_m, const TrafficParams& t) {
  if (!(r_m >= 0)) throw std::invalid_argument("access_probability requires r_m >= 0");
  const double density = per_channel_mu_density(t);
  return std::exp(-density * M_PI * r_m * r_m);
}

std::vector<double> accessible_channels_pmf(double p, int trials) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("pmf requires p in [0,1]");
  if (trials < 0) throw std::invalid_argument("pmf requires trials >= 0");
  std::vector<double> pmf(static_cast<std::size_t>(trials) + 1, 0.0);
  if (p == 0.0) { pmf[0] = 1.0; return pmf; }
  if (p == 1.0) { pmf[trials] = 1.0; return pmf; }
  // Start from the largest term in log space to avoid underflow for
  // extreme p, then fill both directions with the ratio recurrence.
  const int mode = std::clamp(static_cast<int>((trials + 1) * p), 0, trials);
  pmf[mode] = 1.0;
  for (int k = mode; k < trials; ++k)
    pmf[k + 1] = pmf[k] * (static_cast<double>(trials - k) / (k + 1)) * (p / (1.0 - p));
  for (int k = mode; k > 0; --k)
    pmf[k - 1] = pmf[k] * (static_cast<double>(k) / (trials - k + 1)) * ((1.0 - p) / p);
  double total = 0.0;
  for (double v : pmf) total += v;
  for (double& v : pmf) v /= total;
  return pmf;
}

EffectiveClusterMean effective_cluster_mean(double p, int n, double c) {
  if (!(p > 0.0 && p <= 1.0))
    throw std::invalid_argument("effective_cluster_mean: no accessible channels (p must be in (0,1])");
  if (n < 1) throw std::invalid_argument("effective_cluster_mean requires N >= 1");
  const double approx = c / (n * p);
  const double exact = approx * (1.0 - std::pow(1.0 - p, n));
  const double rel_gap = (c == 0.0) ? 0.0 : (approx - exact) / approx;
  return {exact, approx, rel_gap};
}

ErlangOccupancy erlang_occupancy(double area, const TrafficParams& t, int n_e) {
  if (!(area > 0)) throw std::invalid_argument("erlang_occupancy requires area > 0");
  if (n_e < 1) throw std::invalid_argument("erlang_occupancy requires n_e >= 1");
  const double rho = area * t.lambda_arrivals / t.mu;
  std::vector<double> pmf(static_cast<std::size_t>(n_e) + 1);
  double term = 1.0, total = 0.0;
  for (int k = 0; k <= n_e; ++k) {
    if (k > 0) term *= rho / k;
    pmf[k] = term;
    total += term;
  }
  double mean = 0.0;
  for (int k = 0; k <= n_e; ++k) {
    pmf[k] /= total;
    mean += k * pmf[k];
  }
  return {std::move(pmf), mean / n_e, std::min(rho / n_e, 1.0)};
}

double cell_area_pdf(double a, double lambda_b) {
  if (!(a > 0) || !(lambda_b > 0)) return 0.0;
  const double rate = 3.5 * lambda_b;
  return std::pow(rate, 3.5) / boost::math::tgamma(3.5) * std::pow(a, 2.5) * std::exp(-rate * a);
}

double activity_closed_form(double inv_phi) {
  if (!(inv_phi >= 0)) throw std::invalid_argument("activity_closed_form requires inv_phi >= 0");
  if (inv_phi == 0.0) return 0.0;
  const double x = 3.5 * (1.0 / inv_phi);  // 3.5 * phi
  // gamma(4.5,x)/(x*Gamma(3.5)) = inv_phi * P(4.5,x) since Gamma(4.5) = 3.5*Gamma(3.5).
  const double v = inv_phi * boost::math::gamma_p(4.5, x) + boost::math::gamma_q(3.5, x);
  return std::clamp(v, 0.0, 1.0);
}

int macro_channel_count(Mode mode, const Scenario& s) {
  if (mode == Mode::Orthogonal) return s.traffic.n_channels - s.spectrum.n_f;
  return s.traffic.n_channels;
}

double activity_linear(Mode mode, const Scenario& s, double n_bar) {
  if (!(n_bar > 0)) throw std::invalid_argument("activity_linear requires n_bar > 0");
  const int n_mode = macro_channel_count(mode, s);
  const double v = s.traffic.lambda_arrivals * n_bar / (s.net.lambda_b * s.traffic.mu * n_mode);
  return std::min(v, 1.0);
}

}  // namespace hetnet
