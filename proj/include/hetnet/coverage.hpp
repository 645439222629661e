#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hetnet/laplace.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

enum class Tier { MU, FU };

const char* tier_name(Tier t);

struct CoverageQuery {
  Tier tier = Tier::MU;
  Mode mode = Mode::CoChannel;
  double threshold = 1.0;  ///< linear SIR
  double zeta = 1.0;       ///< MBS activity factor in [0,1]
};

struct CurvePoint {
  double threshold_db = 0.0;
  double probability = 0.0;
  double ci_half_width = 0.0;
  bool has_ci = false;
  bool degenerate = false;  ///< zero effective trials behind this point
};

/// A threshold-indexed coverage (or activity/rate) result; probabilities are
/// in [0,1] and nonincreasing in threshold.
struct CoverageCurve {
  std::string scenario_id;
  Mode mode = Mode::CoChannel;
  Tier tier = Tier::MU;
  std::string source;  ///< "analytic" or "montecarlo"
  uint64_t seed = 0;
  int64_t trials = 0;
  double zeta = std::numeric_limits<double>::quiet_NaN();
  std::vector<CurvePoint> points;
};

/// MU coverage over a fixed threshold list, reusable across activity-factor
/// iterations. The co-channel radial integral is discretized once on fixed
/// Gauss-Legendre nodes so that re-evaluations at new zeta or FAP density
/// cost only exponentials; r_m = 0 short-circuits to the closed form unless
/// the integral path is explicitly requested.
class MuCoverage {
 public:
  MuCoverage(const Scenario& s, Mode mode, double r_m,
             std::vector<double> thresholds, bool with_integral_path = false,
             const QuadratureSpec& spec = {});

  double eval(std::size_t idx, double zeta) const;

  /// Same, with the product lambda_F * c overridden (crossover searches).
  double eval_with_fap_density(std::size_t idx, double zeta, double lambda_f_c) const;

  /// Forces the radial-integral evaluation of the co-channel form even at
  /// r_m = 0 (closed-form consistency checks). Requires with_integral_path.
  double eval_integral(std::size_t idx, double zeta) const;

  const std::vector<double>& thresholds() const { return thresholds_; }
  Mode mode() const { return mode_; }

 private:
  double cochannel(std::size_t idx, double zeta, double lambda_f_c, bool force_integral) const;

  Mode mode_;
  double r_m_;
  int n_total_;
  double p_c_ = 0.0;
  double delta_;
  double lfc_default_;
  std::vector<double> thresholds_;
  std::vector<double> h2_;      // H2(threshold, delta)
  std::vector<double> k_unit_;  // closed-form FAP slope per unit lambda_F*c
  bool have_nodes_ = false;
  std::vector<double> node_u_, node_gl_w_;
  std::vector<std::vector<double>> node_fap_integral_;  // per threshold, per node
};

/// FU coverage (product of the interference transforms at s = beta r0^a / P_F).
double coverage_fu(const Scenario& s, const CoverageQuery& q);

/// MU coverage for the requested sharing mode.
double coverage_mu(const Scenario& s, const CoverageQuery& q);

/// Dispatch on query.tier.
double coverage(const Scenario& s, const CoverageQuery& q);

struct MeanChannels {
  double n_bar = 0.0;
  std::vector<double> probabilities;  ///< per-MCS usage mass, sums to 1
};

/// Mean channels demanded per MU service at the given activity factor:
/// sum of (R_th/B)/log2(1+Gamma_i) weighted by the per-MCS probabilities
/// [M(Gamma_i) - M(Gamma_{i+1})] / M(Gamma_1), with M(Gamma_{T+1}) = 0.
/// Throws std::domain_error("total outage; demand undefined") if M(Gamma_1)=0.
MeanChannels mean_channels(const Scenario& s, Mode mode, double r_m, double zeta);

/// Same computation against a prebuilt coverage context whose thresholds are
/// the scenario's MCS table; lambda_f_c < 0 means "use the scenario value".
MeanChannels mean_channels_from(const MuCoverage& ctx, const Scenario& s,
                                double zeta, double lambda_f_c = -1.0);

struct RateResult {
  double value = 0.0;
  bool unbounded = false;  ///< singular no-interference case
};

/// Mean best-effort spectral efficiency E[log2(1+SIR)] for the tier, via the
/// coverage-curve integral. The FU computation pins the MBS activity factor
/// to one (best-effort benchmark); the MU computation uses the given zeta.
RateResult avg_rate(const Scenario& s, Tier tier, Mode mode, double zeta,
                    const QuadratureSpec& spec = {});

}  // namespace hetnet
