#include "hetnet/coverage.hpp"

#include <boost/math/quadrature/gauss.hpp>

#include <algorithm>
#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>

namespace hetnet {

const char* tier_name(Tier t) { return t == Tier::MU ? "MU" : "FU"; }

namespace {

// Segment ends for the radial integral after u = pi*lambda_B*r^2; the
// Gaussian-type weight exp(-u) is below 1e-12 of its peak past the last end.
constexpr double kSegmentEnds[] = {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 27.631021};

double orthogonal_mu(double zeta, double threshold, double h2_val, double delta) {
  return 1.0 / (1.0 + zeta * std::pow(threshold, delta) * h2_val);
}

}  // namespace

MuCoverage::MuCoverage(const Scenario& s, Mode mode, double r_m,
                       std::vector<double> thresholds, bool with_integral_path,
                       const QuadratureSpec& spec)
    : mode_(mode),
      r_m_(r_m),
      n_total_(s.traffic.n_channels),
      delta_(s.net.delta()),
      lfc_default_(s.net.lambda_f * s.net.c),
      thresholds_(std::move(thresholds)) {
  const NetworkParams& net = s.net;
  if (!(net.lambda_b > 0)) throw std::invalid_argument("MU coverage requires lambda_b > 0");
  if (mode_ == Mode::Partial) p_c_ = s.spectrum.p_c(n_total_);

  h2_.reserve(thresholds_.size());
  k_unit_.reserve(thresholds_.size());
  for (double g : thresholds_) {
    h2_.push_back(h2(g, delta_, spec));
    k_unit_.push_back(M_PI * delta_ * csc_pi(delta_) / (net.lambda_b * n_total_) *
                      std::pow(g * net.chi * net.p_f / net.p_b, delta_));
  }

  const bool needs_cochannel = mode_ != Mode::Orthogonal;
  const bool needs_nodes = needs_cochannel && (r_m_ > 0.0 || with_integral_path);
  if (!needs_nodes) return;

  using gl = boost::math::quadrature::gauss<double, 24>;
  double a = 0.0;
  for (double b : kSegmentEnds) {
    const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    for (std::size_t j = 0; j < gl::abscissa().size(); ++j) {
      const double x = gl::abscissa()[j];
      const double wgt = gl::weights()[j] * half;
      if (j == 0 && x == 0.0) {  // center point appears once
        node_u_.push_back(mid);
        node_gl_w_.push_back(wgt);
        continue;
      }
      node_u_.push_back(mid - half * x);
      node_gl_w_.push_back(wgt);
      node_u_.push_back(mid + half * x);
      node_gl_w_.push_back(wgt);
    }
    a = b;
  }

  node_fap_integral_.resize(thresholds_.size());
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    node_fap_integral_[i].resize(node_u_.size());
    for (std::size_t k = 0; k < node_u_.size(); ++k) {
      const double r2 = node_u_[k] / (M_PI * net.lambda_b);
      const double w = thresholds_[i] * net.chi * net.p_f / net.p_b *
                       std::pow(r2, net.alpha / 2.0);
      node_fap_integral_[i][k] =
          fap_interference_integral(w, r_m_, net.r_cluster, net.alpha, spec);
    }
  }
  have_nodes_ = true;
}

double MuCoverage::cochannel(std::size_t idx, double zeta, double lambda_f_c,
                             bool force_integral) const {
  const double g = thresholds_[idx];
  const double interf = zeta * std::pow(g, delta_) * h2_[idx];
  if (r_m_ == 0.0 && !force_integral)
    return 1.0 / (1.0 + interf + lambda_f_c * k_unit_[idx]);
  if (!have_nodes_)
    throw std::logic_error("MuCoverage: integral path was not precomputed");
  const double fap_scale = lambda_f_c / n_total_;
  double acc = 0.0;
  for (std::size_t k = 0; k < node_u_.size(); ++k) {
    acc += node_gl_w_[k] * std::exp(-node_u_[k] * (1.0 + interf) -
                                    fap_scale * node_fap_integral_[idx][k]);
  }
  return acc;
}

double MuCoverage::eval(std::size_t idx, double zeta) const {
  return eval_with_fap_density(idx, zeta, lfc_default_);
}

double MuCoverage::eval_with_fap_density(std::size_t idx, double zeta,
                                         double lambda_f_c) const {
  if (idx >= thresholds_.size()) throw std::out_of_range("threshold index");
  if (!(zeta >= 0.0 && zeta <= 1.0)) throw std::invalid_argument("zeta must lie in [0,1]");
  switch (mode_) {
    case Mode::CoChannel:
      return cochannel(idx, zeta, lambda_f_c, false);
    case Mode::Orthogonal:
      return orthogonal_mu(zeta, thresholds_[idx], h2_[idx], delta_);
    case Mode::Partial:
      return p_c_ * cochannel(idx, zeta, lambda_f_c, false) +
             (1.0 - p_c_) * orthogonal_mu(zeta, thresholds_[idx], h2_[idx], delta_);
  }
  return 0.0;
}

double MuCoverage::eval_integral(std::size_t idx, double zeta) const {
  if (idx >= thresholds_.size()) throw std::out_of_range("threshold index");
  return cochannel(idx, zeta, lfc_default_, true);
}

double coverage_fu(const Scenario& s, const CoverageQuery& q) {
  if (!(q.threshold > 0)) throw std::invalid_argument("threshold must be positive");
  const NetworkParams& net = s.net;
  const double sv = q.threshold * std::pow(net.r0, net.alpha) / net.p_f;
  switch (q.mode) {
    case Mode::CoChannel:
      return lt_macro_to_fu(sv, q.zeta, net) *
             lt_intra_cluster(sv, s.spectrum.r_m, net, s.traffic, s.traffic.n_channels) *
             lt_inter_cluster(sv, net, s.traffic, s.traffic.n_channels);
    case Mode::Orthogonal:
      // No macro interference, non-cognitive access, N_F-way split.
      return lt_intra_cluster(sv, 0.0, net, s.traffic, s.spectrum.n_f) *
             lt_inter_cluster(sv, net, s.traffic, s.spectrum.n_f);
    case Mode::Partial:
      return lt_macro_to_fu(sv, q.zeta, net) *
             lt_intra_cluster(sv, s.spectrum.r_m, net, s.traffic, s.spectrum.n_f) *
             lt_inter_cluster(sv, net, s.traffic, s.spectrum.n_f);
  }
  return 0.0;
}

double coverage_mu(const Scenario& s, const CoverageQuery& q) {
  if (!(q.threshold > 0)) throw std::invalid_argument("threshold must be positive");
  MuCoverage ctx(s, q.mode, s.spectrum.r_m, {q.threshold});
  return ctx.eval(0, q.zeta);
}

double coverage(const Scenario& s, const CoverageQuery& q) {
  return q.tier == Tier::MU ? coverage_mu(s, q) : coverage_fu(s, q);
}

MeanChannels mean_channels_from(const MuCoverage& ctx, const Scenario& s,
                                double zeta, double lambda_f_c) {
  const std::vector<double>& gs = ctx.thresholds();
  if (gs.empty()) throw std::invalid_argument("mean_channels: empty MCS table");
  const double lfc = lambda_f_c < 0.0 ? s.net.lambda_f * s.net.c : lambda_f_c;
  std::vector<double> m(gs.size() + 1, 0.0);
  for (std::size_t i = 0; i < gs.size(); ++i) m[i] = ctx.eval_with_fap_density(i, zeta, lfc);
  if (!(m[0] > 0.0)) throw std::domain_error("total outage; demand undefined");
  MeanChannels out;
  out.probabilities.resize(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) {
    const double prob = (m[i] - m[i + 1]) / m[0];
    out.probabilities[i] = prob;
    out.n_bar += s.traffic.rth_over_b / std::log2(1.0 + gs[i]) * prob;
  }
  return out;
}

MeanChannels mean_channels(const Scenario& s, Mode mode, double r_m, double zeta) {
  MuCoverage ctx(s, mode, r_m, s.traffic.mcs.thresholds);
  return mean_channels_from(ctx, s, zeta);
}

namespace {

// Natural cubic spline on a uniform grid; used to cache the FAP interference
// integral in log-log space for the rate computation.
class UniformSpline {
 public:
  UniformSpline(double x0, double dx, std::vector<double> y)
      : x0_(x0), dx_(dx), y_(std::move(y)), m_(y_.size(), 0.0) {
    const std::size_t n = y_.size();
    if (n < 3) return;
    // Tridiagonal system M_{i-1} + 4 M_i + M_{i+1} = rhs_i with natural ends.
    std::vector<double> diag(n, 4.0), rhs(n, 0.0);
    for (std::size_t i = 1; i + 1 < n; ++i)
      rhs[i] = 6.0 * (y_[i + 1] - 2.0 * y_[i] + y_[i - 1]) / (dx_ * dx_);
    for (std::size_t i = 2; i + 1 < n; ++i) {
      const double f = 1.0 / diag[i - 1];
      diag[i] -= f;
      rhs[i] -= f * rhs[i - 1];
    }
    for (std::size_t i = n - 2; i >= 1; --i) {
      m_[i] = (rhs[i] - m_[i + 1]) / diag[i];
      if (i == 1) break;
    }
  }

  double operator()(double x) const {
    const std::size_t n = y_.size();
    double t = (x - x0_) / dx_;
    t = std::clamp(t, 0.0, static_cast<double>(n - 1));
    std::size_t i = std::min(static_cast<std::size_t>(t), n - 2);
    const double a = t - i;
    const double b = 1.0 - a;
    const double h2 = dx_ * dx_ / 6.0;
    return b * y_[i] + a * y_[i + 1] +
           h2 * (b * (b * b - 1.0) * m_[i] + a * (a * a - 1.0) * m_[i + 1]);
  }

 private:
  double x0_, dx_;
  std::vector<double> y_, m_;
};

// Cached w -> fap_interference_integral(w) map over a log grid, with the
// w^delta leading behavior used beyond the tabulated range.
class FapIntegralTable {
 public:
  FapIntegralTable(double w_min, double w_max, double r_m, double R,
                   double alpha, const QuadratureSpec& spec, int nodes = 420)
      : lw0_(std::log(w_min)),
        dlw_((std::log(w_max) - std::log(w_min)) / (nodes - 1)),
        lw1_(std::log(w_max)),
        delta_(2.0 / alpha) {
    std::vector<double> ly(nodes);
    for (int i = 0; i < nodes; ++i) {
      const double w = std::exp(lw0_ + i * dlw_);
      ly[i] = std::log(fap_interference_integral(w, r_m, R, alpha, spec));
    }
    e_lo_ = std::exp(ly.front());
    e_hi_ = std::exp(ly.back());
    spline_ = std::make_unique<UniformSpline>(lw0_, dlw_, std::move(ly));
  }

  double operator()(double w) const {
    const double lw = std::log(w);
    if (lw <= lw0_) return e_lo_ * std::pow(w / std::exp(lw0_), delta_);
    if (lw >= lw1_) return e_hi_ * std::pow(w / std::exp(lw1_), delta_);
    return std::exp((*spline_)(lw));
  }

 private:
  double lw0_, dlw_, lw1_, delta_;
  double e_lo_, e_hi_;
  std::unique_ptr<UniformSpline> spline_;
};

// Radial-integral MU coverage with the FAP kernel read from the table.
double mu_cochannel_from_table(const Scenario& s, double beta, double zeta,
                               const FapIntegralTable& table, double h2_val) {
  const NetworkParams& net = s.net;
  using gl = boost::math::quadrature::gauss<double, 24>;
  const double interf = zeta * std::pow(beta, net.delta()) * h2_val;
  const double fap_scale = net.lambda_f * net.c / s.traffic.n_channels;
  double acc = 0.0;
  double a = 0.0;
  for (double b : kSegmentEnds) {
    const double half = 0.5 * (b - a), mid = 0.5 * (b + a);
    auto term = [&](double u) {
      const double r2 = u / (M_PI * net.lambda_b);
      const double w = beta * net.chi * net.p_f / net.p_b * std::pow(r2, net.alpha / 2.0);
      return std::exp(-u * (1.0 + interf) - fap_scale * table(w));
    };
    for (std::size_t j = 0; j < gl::abscissa().size(); ++j) {
      const double x = gl::abscissa()[j];
      const double wgt = gl::weights()[j] * half;
      if (j == 0 && x == 0.0) {
        acc += wgt * term(mid);
        continue;
      }
      acc += wgt * (term(mid - half * x) + term(mid + half * x));
    }
    a = b;
  }
  return acc;
}

bool rate_is_unbounded(const Scenario& s, Tier tier, Mode mode, double zeta) {
  const NetworkParams& net = s.net;
  if (tier == Tier::FU) {
    // zeta is pinned at 1 for the FU, so the macro factor vanishes only
    // with the tier itself.
    const bool no_macro = mode == Mode::Orthogonal || net.lambda_b == 0.0;
    return net.c == 0.0 && no_macro;
  }
  if (zeta > 0.0) return false;
  if (mode == Mode::Orthogonal) return true;
  if (mode == Mode::Partial && s.spectrum.n_f < s.traffic.n_channels) return true;
  return net.lambda_f * net.c == 0.0;
}

}  // namespace

RateResult avg_rate(const Scenario& s, Tier tier, Mode mode, double zeta,
                    const QuadratureSpec& spec) {
  if (!(s.net.lambda_b > 0)) throw std::invalid_argument("avg_rate requires lambda_b > 0");
  if (rate_is_unbounded(s, tier, mode, zeta))
    return {std::numeric_limits<double>::infinity(), true};

  const double zeta_eff = tier == Tier::FU ? 1.0 : zeta;
  const double delta = s.net.delta();

  std::function<double(double)> cov;
  std::unique_ptr<FapIntegralTable> table;
  const bool needs_table = tier == Tier::MU && mode != Mode::Orthogonal &&
                           s.spectrum.r_m > 0.0 && s.net.lambda_f * s.net.c > 0.0;
  const double beta_lo = db_to_linear(-60.0), beta_hi = db_to_linear(80.0);
  if (needs_table) {
    const NetworkParams& net = s.net;
    const double u_min = 1e-4, u_max = kSegmentEnds[std::size(kSegmentEnds) - 1];
    const double r2_min = u_min / (M_PI * net.lambda_b);
    const double r2_max = u_max / (M_PI * net.lambda_b);
    const double base = net.chi * net.p_f / net.p_b;
    const double w_min = beta_lo * base * std::pow(r2_min, net.alpha / 2.0);
    const double w_max = beta_hi * base * std::pow(r2_max, net.alpha / 2.0);
    QuadratureSpec table_spec = spec;
    table_spec.rel_tol = std::max(spec.rel_tol, 1e-9);
    table.reset(new FapIntegralTable(w_min, w_max, s.spectrum.r_m, net.r_cluster,
                                     net.alpha, table_spec));
    const double p_c = mode == Mode::Partial ? s.spectrum.p_c(s.traffic.n_channels) : 1.0;
    cov = [&s, &table, delta, zeta_eff, p_c](double beta) {
      const double h2v = h2(beta, delta);
      const double co = mu_cochannel_from_table(s, beta, zeta_eff, *table, h2v);
      return p_c * co +
             (1.0 - p_c) / (1.0 + zeta_eff * std::pow(beta, delta) * h2v);
    };
  } else {
    cov = [&s, tier, mode, zeta_eff](double beta) {
      CoverageQuery q{tier, mode, beta, zeta_eff};
      return tier == Tier::MU ? coverage_mu(s, q) : coverage_fu(s, q);
    };
  }

  // E[log2(1+SIR)] = (1/ln 2) * integral over t of P(SIR > e^t - 1);
  // evaluated on a dB grid (uniform ladder in log-threshold), trapezoid in
  // t = ln(1+beta), plus the leading edge and a power-law tail bound.
  const double step_db = 0.5;
  double t_prev = 0.0, p_prev = 1.0;
  double acc = 0.0;
  double p_last = 1.0;
  for (double db = -60.0; db <= 80.0 + 1e-9; db += step_db) {
    const double beta = db_to_linear(db);
    const double p = cov(beta);
    const double t = std::log1p(beta);
    acc += 0.5 * (p + p_prev) * (t - t_prev);
    t_prev = t;
    p_prev = p;
    p_last = p;
    if (p < 1e-12) break;
  }
  // Tail: coverage decays at least like beta^(-delta) in t-space.
  acc += p_last / delta;
  if (!std::isfinite(acc)) throw QuadratureError("avg_rate: tail integration failed");
  return {acc / std::log(2.0), false};
}

}  // namespace hetnet
