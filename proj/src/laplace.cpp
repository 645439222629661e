#include "hetnet/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hetnet {

namespace {

void require_lt_inputs(double s, double zeta) {
  if (!(s > 0)) throw std::invalid_argument("Laplace variable s must be positive");
  if (!(zeta >= 0.0 && zeta <= 1.0)) throw std::invalid_argument("zeta must lie in [0,1]");
}

}  // namespace

double lt_macro_to_fu(double s, double zeta, const NetworkParams& net) {
  require_lt_inputs(s, zeta);
  const double d = net.delta();
  const double expo = M_PI * M_PI * d * net.lambda_b * zeta *
                      std::pow(s * net.chi * net.p_b, d) * csc_pi(d);
  return std::exp(-expo);
}

double lt_intra_cluster(double s, double r_m, const NetworkParams& net,
                        const TrafficParams& traffic, int n_share,
                        const QuadratureSpec& spec) {
  require_lt_inputs(s, 1.0);
  if (!(r_m >= 0)) throw std::invalid_argument("r_m must be nonnegative");
  if (n_share < 1) throw std::invalid_argument("n_share must be >= 1");
  if (net.c == 0.0) return 1.0;
  const double d = net.delta();
  const double w = s * net.chi * net.p_f;
  const double c_tilde = net.c / n_share *
                         std::exp(per_channel_mu_density(traffic) * M_PI * r_m * r_m);
  const double R = net.r_cluster;
  const double expo = c_tilde / (R * R) * std::pow(w, d) * h1(w, R, d, spec);
  return std::exp(-expo);
}

double lt_inter_cluster(double s, const NetworkParams& net,
                        const TrafficParams& traffic, int n_share) {
  require_lt_inputs(s, 1.0);
  if (n_share < 1) throw std::invalid_argument("n_share must be >= 1");
  (void)traffic;  // the cognition thinning and the per-channel split cancel
  const double d = net.delta();
  const double expo = M_PI * M_PI * d * (net.lambda_f * net.c / n_share) *
                      std::pow(s * net.chi * net.p_f, d) * csc_pi(d);
  return std::exp(-expo);
}

double arc_inside_disc(double u, double rho, double disc_r) {
  if (u <= 0.0) return 0.0;
  if (rho <= 0.0) return u < disc_r ? 2.0 * M_PI : 0.0;
  if (u <= disc_r - rho) return 2.0 * M_PI;
  if (u >= disc_r + rho || u <= rho - disc_r) return 0.0;
  const double cosang = (u * u + rho * rho - disc_r * disc_r) / (2.0 * u * rho);
  return 2.0 * std::acos(std::clamp(cosang, -1.0, 1.0));
}

namespace {

// Integral of u * angle(u) * g(u) over the arc region [lo, hi], where the
// arc angle vanishes (or meets the full circle) like sqrt at both ends.
// u = lo + (hi-lo) sin^2(psi) turns those ends analytic.
template <typename G>
double arc_region_integral(const G& g, double lo, double hi, double rho, double R,
                           const QuadratureSpec& spec) {
  const double span = hi - lo;
  if (!(span > 0.0)) return 0.0;
  auto transformed = [&](double psi) {
    const double sp = std::sin(psi), cp = std::cos(psi);
    const double u = lo + span * sp * sp;
    return span * 2.0 * sp * cp * u * arc_inside_disc(u, rho, R) * g(u);
  };
  return integrate(transformed, 0.0, M_PI_2, spec);
}

// Mean of 1/(1 + |x-y|^alpha / w) over x uniform in the disc of radius R,
// for an observer y at distance rho from the disc center.
double disc_average(double w, double rho, double R, double alpha,
                    const QuadratureSpec& spec) {
  auto g = [w, alpha](double u) { return w / (w + std::pow(u, alpha)); };
  double total = 0.0;
  if (rho < R) {
    auto full_circle = [&](double u) { return 2.0 * M_PI * u * g(u); };
    total += integrate(full_circle, 0.0, R - rho, spec);
  }
  total += arc_region_integral(g, std::abs(R - rho), R + rho, rho, R, spec);
  return total / (M_PI * R * R);
}

}  // namespace

double fap_interference_integral(double w, double r_m, double R, double alpha,
                                 const QuadratureSpec& spec) {
  if (!(w > 0)) throw std::invalid_argument("fap_interference_integral requires w > 0");
  if (!(R > 0) || !(alpha > 2) || !(r_m >= 0))
    throw std::invalid_argument("fap_interference_integral: bad geometry");

  // Nested adaptivity: the inner disc average must be resolved well below
  // the outer tolerance, or its residual noise floors the outer estimate.
  const double delta = 2.0 / alpha;
  const double full_plane = M_PI * M_PI * delta * std::pow(w, delta) / std::sin(M_PI * delta);
  QuadratureSpec outer_spec = spec;
  outer_spec.rel_tol = std::max(spec.rel_tol, 1e-8);
  outer_spec.abs_tol = std::max(spec.abs_tol, outer_spec.rel_tol * full_plane * 0.1);
  QuadratureSpec inner_spec = spec;
  inner_spec.rel_tol = 1e-10;
  inner_spec.abs_tol = 1e-13;  // disc averages lie in [0,1]

  auto outer = [&](double rho) {
    return 2.0 * M_PI * rho * disc_average(w, rho, R, alpha, inner_spec);
  };

  // Integrate outward in doubling segments until the analytic bound on the
  // remaining tail, 2 pi w r^(2-alpha)/(alpha-2), is negligible.
  const double scale = std::pow(w, 1.0 / alpha);
  double a = r_m;
  double b = std::max({2.0 * R + r_m, 4.0 * scale, 2.0 * r_m, 100.0});
  double acc = 0.0;
  if (r_m < R) {  // the integrand's derivative breaks where holes leave the disc
    acc += integrate(outer, a, R, outer_spec);
    a = R;
  }
  for (int seg = 0; seg < 64; ++seg) {
    acc += integrate(outer, a, b, outer_spec);
    const double tail = 2.0 * M_PI * w * std::pow(b, 2.0 - alpha) / (alpha - 2.0);
    if (tail < 1e-9 * std::max(acc, 1e-300) || tail < outer_spec.abs_tol) {
      return acc + tail;
    }
    a = b;
    b *= 2.0;
  }
  throw QuadratureError("fap_interference_integral: outer tail did not shrink");
}

double lt_fap_to_mu(double s, double r_m, const NetworkParams& net,
                    const TrafficParams& traffic, int n_share,
                    const QuadratureSpec& spec) {
  require_lt_inputs(s, 1.0);
  if (n_share < 1) throw std::invalid_argument("n_share must be >= 1");
  (void)traffic;  // p_{r_m} thinning cancels against the per-channel split
  if (net.lambda_f == 0.0 || net.c == 0.0) return 1.0;
  const double w = s * net.chi * net.p_f;
  const double integral = fap_interference_integral(w, r_m, net.r_cluster, net.alpha, spec);
  return std::exp(-net.lambda_f * net.c / n_share * integral);
}

double lt_mbs_to_mu(double s, double r, double zeta, const NetworkParams& net,
                    const QuadratureSpec& spec) {
  require_lt_inputs(s, zeta);
  if (!(r > 0)) throw std::invalid_argument("lt_mbs_to_mu requires serving distance r > 0");
  const double d = net.delta();
  const double v = s * net.p_b / std::pow(r, 2.0 / d);
  const double expo = M_PI * net.lambda_b * zeta * std::pow(s * net.p_b, d) * h2(v, d, spec);
  return std::exp(-expo);
}

InterferenceMoments intra_cluster_moments(double y_norm, double epsilon,
                                          const NetworkParams& net,
                                          const TrafficParams& traffic,
                                          int n_share, double r_m,
                                          const QuadratureSpec& spec) {
  if (!(epsilon > 0))
    throw std::invalid_argument("moments diverge under singular path loss for alpha >= 2; need epsilon > 0");
  if (!(y_norm >= 0 && y_norm <= net.r_cluster))
    throw std::invalid_argument("intra_cluster_moments requires |y| <= R");
  if (n_share < 1) throw std::invalid_argument("n_share must be >= 1");
  if (net.c == 0.0) return {0.0, 0.0};
  const double R = net.r_cluster;
  const double c_tilde = net.c / n_share *
                         std::exp(per_channel_mu_density(traffic) * M_PI * r_m * r_m);
  const double pf = net.p_f;
  const double alpha = net.alpha;
  const double hi = y_norm + R;
  if (epsilon >= hi) return {0.0, 0.0};
  auto first_kernel = [&](double u) { return pf * std::pow(u, -alpha); };
  auto second_kernel = [&](double u) {
    const double pl = std::pow(u, -alpha);
    return pf * pf * pl * pl + pf * pl;
  };
  const double arc_lo = std::abs(R - y_norm);
  auto piecewise = [&](auto&& kernel) {
    double total = 0.0;
    if (y_norm < R && epsilon < R - y_norm) {
      auto full_circle = [&](double u) { return 2.0 * M_PI * u * kernel(u); };
      total += integrate(full_circle, epsilon, R - y_norm, spec);
    }
    total += arc_region_integral(kernel, std::max(epsilon, arc_lo), hi, y_norm, R, spec);
    return total;
  };
  const double norm = c_tilde / (M_PI * R * R);
  const double first = norm * piecewise(first_kernel);
  const double second = 2.0 * norm * piecewise(second_kernel);
  return {first, second};
}

}  // namespace hetnet
