#include "hetnet/scenario.hpp"

#include <sstream>

namespace hetnet {

const char* mode_name(Mode m) {
  switch (m) {
    case Mode::CoChannel: return "co-channel";
    case Mode::Orthogonal: return "orthogonal";
    case Mode::Partial: return "partial";
  }
  return "?";
}

McsTable McsTable::default_table(double gamma1) {
  // 0, 3, ..., 21 dB shifted so the lowest level sits at gamma1.
  McsTable t;
  const double scale = gamma1 / db_to_linear(0.0);
  for (int i = 0; i < 8; ++i) t.thresholds.push_back(scale * db_to_linear(3.0 * i));
  return t;
}

namespace {

template <typename T>
void fail(std::vector<std::string>& errs, const std::string& field, const char* msg, T value) {
  std::ostringstream os;
  os << field << ": " << msg << " (got " << value << ")";
  errs.push_back(os.str());
}

}  // namespace

std::vector<std::string> validate(const Scenario& s) {
  std::vector<std::string> errs;
  const NetworkParams& n = s.net;
  const TrafficParams& t = s.traffic;
  const SpectrumConfig& sp = s.spectrum;

  if (!(n.lambda_b > 0)) fail(errs, "lambda_b", "MBS density must be strictly positive", n.lambda_b);
  // lambda_f and c may be zero: a network without femto clusters is a valid
  // degenerate sweep endpoint.
  if (!(n.lambda_f >= 0)) fail(errs, "lambda_f", "cluster density must be nonnegative", n.lambda_f);
  if (!(n.c >= 0)) fail(errs, "c", "mean FAPs per cluster must be nonnegative", n.c);
  if (!(n.r_cluster > 0)) fail(errs, "r_cluster", "cluster radius must be strictly positive", n.r_cluster);
  if (!(n.r0 > 0)) fail(errs, "r0", "FU link distance must be strictly positive", n.r0);
  if (!(n.r0 < n.r_cluster)) fail(errs, "r0", "FU link distance must be below the cluster radius", n.r0);
  if (!(n.p_b > 0)) fail(errs, "p_b", "MBS power must be strictly positive", n.p_b);
  if (!(n.p_f > 0)) fail(errs, "p_f", "FAP power must be strictly positive", n.p_f);
  if (!(n.chi > 0 && n.chi <= 1)) fail(errs, "chi", "wall loss must lie in (0,1]", n.chi);
  if (!(n.alpha > 2)) fail(errs, "alpha", "alpha must exceed 2", n.alpha);

  if (!(t.lambda_arrivals >= 0)) fail(errs, "lambda_m_arrivals", "arrival density must be nonnegative", t.lambda_arrivals);
  if (!(t.mu > 0)) fail(errs, "mu", "departure rate must be strictly positive", t.mu);
  if (t.n_channels < 2) fail(errs, "n_channels", "need at least 2 channels", t.n_channels);
  if (!(t.rth_over_b > 0)) fail(errs, "rth_over_b", "per-service demand must be strictly positive", t.rth_over_b);

  if (t.mcs.thresholds.empty()) {
    fail(errs, "mcs_db", "MCS table must hold at least one threshold", 0);
  } else {
    double prev = 0.0;
    for (std::size_t i = 0; i < t.mcs.thresholds.size(); ++i) {
      double g = t.mcs.thresholds[i];
      if (!(g > 0)) fail(errs, "mcs_db", "MCS thresholds must be positive", g);
      if (i > 0 && !(g > prev)) fail(errs, "mcs_db", "MCS thresholds must be strictly increasing", g);
      prev = g;
    }
  }

  if (!(sp.r_m >= 0)) fail(errs, "r_m", "exclusion radius must be nonnegative", sp.r_m);
  if (!(sp.beta_m > 0)) fail(errs, "beta_m_db", "MU threshold must be positive", sp.beta_m);
  if (!(sp.beta_f > 0)) fail(errs, "beta_f_db", "FU threshold must be positive", sp.beta_f);
  if (sp.mode == Mode::Orthogonal || sp.mode == Mode::Partial) {
    if (sp.n_f < 1) fail(errs, "n_f", "femto tier needs >=1 channel", sp.n_f);
    if (sp.n_f >= t.n_channels) fail(errs, "n_f", "macro tier needs >=1 channel", sp.n_f);
  }

  return errs;
}

double per_channel_mu_density(const TrafficParams& t) {
  return t.lambda_arrivals / (static_cast<double>(t.n_channels) * t.mu);
}

}  // namespace hetnet
