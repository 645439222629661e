#include "hetnet/design.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "hetnet/load.hpp"
#include "hetnet/special_functions.hpp"

namespace hetnet {

CriticalPointResult critical_density_case1(const Scenario& s) {
  const NetworkParams& net = s.net;
  const TrafficParams& t = s.traffic;
  const int n = t.n_channels, nf = s.spectrum.n_f;
  if (nf >= n) throw std::invalid_argument("critical_density_case1: N_F must leave the macro tier >=1 channel");
  if (nf < 1) throw std::invalid_argument("critical_density_case1: N_F must be >= 1");
  const double d = net.delta();
  const double h2v = h2(s.spectrum.beta_m, d);
  CriticalPointResult out;
  out.method = CriticalPointResult::Method::ClosedForm;
  out.lambda_f_c_star = (t.lambda_arrivals / t.mu) *
                        (static_cast<double>(nf) / (n - nf)) *
                        std::pow(net.p_b / (net.chi * net.p_f), d) * h2v /
                        (d * M_PI * csc_pi(d));
  out.validity = t.lambda_arrivals / (net.lambda_b * t.mu) <= static_cast<double>(n - nf);
  return out;
}

CriticalPointResult critical_density_numerical(const Scenario& s, double lo, double hi) {
  if (!(lo > 0 && hi > lo)) throw std::invalid_argument("critical_density_numerical: bad search range");
  const double beta_m = s.spectrum.beta_m;
  const double r_m = s.spectrum.r_m;

  // Linearly coupled activity on both sides; the orthogonal side does not
  // depend on the FAP density, so it is solved once.
  ActivitySolver co(s, Mode::CoChannel, r_m, ActivityModel::Linear);
  ActivitySolver ortho(s, Mode::Orthogonal, 0.0, ActivityModel::Linear);
  const double zeta_o = ortho.solve().zeta;
  MuCoverage mo(s, Mode::Orthogonal, 0.0, {beta_m});
  const double cov_o = mo.eval(0, zeta_o);

  MuCoverage mc(s, Mode::CoChannel, r_m, {beta_m});
  auto diff = [&](double lfc) {
    const double zc = co.solve_with_fap_density(lfc).zeta;
    return mc.eval_with_fap_density(0, zc, lfc) - cov_o;
  };

  CriticalPointResult out;
  out.method = CriticalPointResult::Method::Numerical;
  out.validity = s.traffic.lambda_arrivals / (s.net.lambda_b * s.traffic.mu) <=
                 static_cast<double>(s.traffic.n_channels - s.spectrum.n_f);

  // Log-spaced prescan for the sign change. Coverage difference decreases
  // in the FAP density, so the crossover is the first bracket with a flip.
  constexpr int kPrescan = 16;
  std::vector<double> xs(kPrescan), fs(kPrescan);
  for (int i = 0; i < kPrescan; ++i) {
    xs[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (kPrescan - 1));
    fs[i] = diff(xs[i]);
  }
  int bracket = -1;
  for (int i = 0; i + 1 < kPrescan; ++i) {
    if (fs[i] > 0.0 && fs[i + 1] <= 0.0) { bracket = i; break; }
  }
  if (bracket < 0) {
    out.crossover_found = false;
    out.bracket_lo = lo;
    out.bracket_hi = hi;
    out.lambda_f_c_star = fs[0] <= 0.0 ? lo : hi;
    return out;
  }

  double a = xs[bracket], b = xs[bracket + 1];
  int it = 0;
  while ((b - a) / b > 1e-3 && it < 200) {
    const double m = std::sqrt(a * b);
    if (diff(m) > 0.0)
      a = m;
    else
      b = m;
    ++it;
  }
  out.lambda_f_c_star = std::sqrt(a * b);
  out.bracket_lo = a;
  out.bracket_hi = b;
  out.iterations = it;
  return out;
}

EffectiveDensityReport effective_densities(Mode mode, const Scenario& s, double zeta) {
  const NetworkParams& net = s.net;
  const int n = s.traffic.n_channels;
  const int nf = s.spectrum.n_f;
  const double p = access_probability(s.spectrum.r_m, s.traffic);

  EffectiveDensityReport rep;
  rep.mode = mode;
  rep.zeta = zeta;
  rep.p_rm = p;
  switch (mode) {
    case Mode::CoChannel:
      rep.mu = {zeta * net.lambda_b, p * net.lambda_f, net.c / (p * n), true};
      rep.fu = {zeta * net.lambda_b, p * net.lambda_f, net.c / (p * n), false};
      break;
    case Mode::Partial:
      rep.mu = {zeta * net.lambda_b, p * net.lambda_f, net.c / (p * nf), true};
      rep.mu_reserved = EffectiveDensityCell{zeta * net.lambda_b, 0.0, 0.0, false};
      rep.fu = {zeta * net.lambda_b, p * net.lambda_f, net.c / (p * nf), false};
      break;
    case Mode::Orthogonal:
      rep.mu = {zeta * net.lambda_b, 0.0, 0.0, false};
      rep.fu = {0.0, net.lambda_f, net.c / nf, false};
      break;
  }
  return rep;
}

}  // namespace hetnet
