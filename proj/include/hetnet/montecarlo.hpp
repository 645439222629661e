#pragma once

#include <cstdint>
#include <vector>

#include "hetnet/coverage.hpp"
#include "hetnet/rng.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// Observation geometry and reproducibility knobs for one estimation run.
/// The window must span at least ten mean cell radii (10/sqrt(pi lambda_B)).
struct SimulationWindow {
  double radius = 0.0;  ///< interferer sampling radius around the tagged user, m
  double guard = 0.0;   ///< extra margin for MU sampling so access tests near the rim are exact, m
  uint64_t seed = 1;
  int64_t trials = 10000;
};

/// radius = max(10/sqrt(pi lambda_B), r_m + 5R), guard = R + r_m.
SimulationWindow default_window(const Scenario& s);

struct Point {
  double x = 0.0, y = 0.0;
  double norm() const;
};

struct ClusterRealization {
  Point center;
  std::vector<Point> faps;        ///< absolute positions
  std::vector<double> fap_fading; ///< unit-mean exponential, toward the tagged user
  uint64_t accessible_mask = 0;   ///< bit ch = channel accessible to this cluster
  int accessible_count = 0;
  int faps_on_tagged = 0;         ///< leading FAPs dealt onto the tagged channel
};

/// One snapshot of the network around a tagged user at the origin.
struct NetworkRealization {
  std::vector<Point> mbs;
  std::vector<double> mbs_fading;
  std::vector<uint8_t> mbs_active;            ///< tagged-channel Bernoulli(zeta) flags
  std::vector<ClusterRealization> clusters;
  std::vector<std::vector<Point>> mus;        ///< per channel, sampled to radius+guard
  int tagged_channel = 1;
};

struct McOptions {
  int threads = 0;                ///< 0 = hardware concurrency
  bool dedicated_channel = true;  ///< reserve channel 0 for the femto tier
};

/// Draws MBSs, cluster parents with their FAP offsets, and the per-channel
/// MU processes. Counts are Poisson in the sampling discs; FAP offsets are
/// uniform in the cluster disc; fading is exponential with unit mean.
NetworkRealization sample_realization(const Scenario& s, const SimulationWindow& w,
                                      TrialRng& rng);

/// Applies the exact cognitive access rule and the channel deal for the given
/// tagged channel: a cluster may use a channel iff the nearest MU of that
/// channel is farther than r_m from the cluster center (channel 0 is exempt
/// when dedicated); accessible channels are shared equally among the cluster
/// FAPs, remainder placed on uniformly chosen channels. MBS activity on the
/// tagged channel is Bernoulli(zeta) per station.
void apply_channel_access(NetworkRealization& nr, const Scenario& s, Mode mode,
                          double zeta, TrialRng& rng, const McOptions& opt = {});

/// Empirical P(SIR >= beta) for the tagged user of a tier with Wilson 95%
/// intervals. Identical (seed, trials) give identical curves regardless of
/// the worker count.
CoverageCurve estimate_coverage(const Scenario& s, Mode mode, Tier tier,
                                const std::vector<double>& thresholds_linear,
                                const SimulationWindow& w, double zeta,
                                const McOptions& opt = {});

struct LtEstimate {
  double mean = 1.0;            ///< empirical E[exp(-s I)]
  double std_err = 0.0;
  double mean_interference = 0.0;
  double tail_mean_correction = 0.0;  ///< analytic mean-interference bound beyond the window
  int64_t trials = 0;
};

LtEstimate mc_lt_macro_at_fu(const Scenario& s, double sv, double zeta,
                             const SimulationWindow& w, const McOptions& opt = {});
LtEstimate mc_lt_intra_cluster(const Scenario& s, double sv, double r_m,
                               const SimulationWindow& w, const McOptions& opt = {});
LtEstimate mc_lt_inter_cluster(const Scenario& s, double sv, double r_m,
                               const SimulationWindow& w, const McOptions& opt = {});
LtEstimate mc_lt_fap_at_mu(const Scenario& s, double sv, double r_m,
                           const SimulationWindow& w, const McOptions& opt = {});
LtEstimate mc_lt_mbs_beyond(const Scenario& s, double sv, double serving_r,
                            double zeta, const SimulationWindow& w,
                            const McOptions& opt = {});

struct ActivityEstimate {
  double zeta = 0.0;
  double std_err = 0.0;
  double n_bar_used = 0.0;
  int n_e = 1;
  int64_t cells = 0;
};

/// Fig-5-style activity validation: cell areas drawn from the gamma area
/// law, occupancy drawn from the truncated-Poisson queue with the channel
/// demand of the converged analytic solution, averaged over cells.
ActivityEstimate estimate_activity(const Scenario& s, const SimulationWindow& w,
                                   int64_t cells);

/// Slow audit path for the cell-area law: spatial Monte Carlo areas of the
/// typical cell of a PPP of the given density (no gamma assumption).
std::vector<double> audit_cell_areas(double lambda_b, int cells, uint64_t seed,
                                     int probes_per_cell = 20000);

}  // namespace hetnet
