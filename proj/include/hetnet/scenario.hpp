#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace hetnet {

// All powers, thresholds, and losses are stored linear. dB/dBm values are
// converted exactly once at the config/CLI boundary (scenario_io).
inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double v) { return 10.0 * std::log10(v); }
inline double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }
inline double watts_to_dbm(double w) { return 10.0 * std::log10(w) + 30.0; }

/// Physical-layer and geometry constants of the two-tier network.
struct NetworkParams {
  double lambda_b = 2e-5;              ///< MBS density, 1/m^2
  double lambda_f = 1e-4;              ///< cluster-parent density, 1/m^2
  double c = 7.85;                     ///< mean FAPs per cluster
  double r_cluster = 50.0;             ///< cluster radius R, m
  double r0 = 15.0;                    ///< FU-FAP link distance, m
  double p_b = dbm_to_watts(46.0);     ///< MBS transmit power, W
  double p_f = dbm_to_watts(20.0);     ///< FAP transmit power, W
  double chi = 0.1;                    ///< wall penetration loss, linear, in (0,1]
  double alpha = 4.0;                  ///< path-loss exponent, > 2

  double delta() const { return 2.0 / alpha; }
};

/// Modulation/coding thresholds, linear SIR, strictly increasing.
/// The (T+1)-th threshold is treated as +infinity in all summations.
struct McsTable {
  std::vector<double> thresholds;

  std::size_t size() const { return thresholds.size(); }

  /// T=8 levels evenly spaced from 0 dB to 21 dB, then scaled so that the
  /// first threshold equals gamma1 (the MU SIR threshold by default).
  static McsTable default_table(double gamma1 = 1.0);
};

/// Macro-tier load model: space-time arrivals, exponential holding times.
struct TrafficParams {
  double lambda_arrivals = 2e-4;       ///< lambda_M, service arrivals per (min * m^2)
  double mu = 1.0;                     ///< departure rate, 1/min
  int n_channels = 20;                 ///< N, total channels
  double rth_over_b = 0.5;             ///< per-service spectral-efficiency demand, b/s/Hz
  McsTable mcs = McsTable::default_table();

  /// Per-channel MU arrival density: lambda_m = lambda_M / N (exactly).
  double lambda_m() const { return lambda_arrivals / n_channels; }
};

enum class Mode { CoChannel, Orthogonal, Partial };

const char* mode_name(Mode m);

/// Spectrum-sharing configuration. CoChannel ignores n_f; Orthogonal ignores r_m.
struct SpectrumConfig {
  Mode mode = Mode::CoChannel;
  int n_f = 10;          ///< N_F, channels accessible to the femto tier
  double r_m = 0.0;      ///< exclusion radius, m
  double beta_m = 1.0;   ///< MU SIR threshold, linear
  double beta_f = 1.0;   ///< FU SIR threshold, linear

  double p_c(int n_channels) const {
    return static_cast<double>(n_f) / static_cast<double>(n_channels);
  }
};

struct Scenario {
  std::string id = "default";
  NetworkParams net;
  TrafficParams traffic;
  SpectrumConfig spectrum;
};

/// Checks every parameter invariant. Returns the complete list of violations,
/// each naming the field and the offending value; empty means valid.
/// Side-effect free and idempotent.
std::vector<std::string> validate(const Scenario& s);

/// Spatial density of macro users per channel: lambda_M / (N * mu), 1/m^2.
double per_channel_mu_density(const TrafficParams& t);

}  // namespace hetnet
