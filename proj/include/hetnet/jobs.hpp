#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hetnet/scenario.hpp"

namespace hetnet {

/// One CLI invocation: what to compute, over which axis, and where to put it.
struct JobSpec {
  enum class Command { Analytic, Simulate, Compare, Sweep, Activity, CriticalPoint };
  enum class Quantity { Coverage, Rate, Zeta, Critical };

  Command command = Command::Analytic;
  Quantity quantity = Quantity::Coverage;
  std::string scenario_path;  ///< optional when inline_scenario is set
  std::string out_path;
  std::string axis;  ///< one of r_m, lambda_M, lambda_F, N_F, beta
  double range_lo = 0.0, range_hi = 0.0, range_step = 0.0;
  bool has_range = false;
  uint64_t seed = 1;
  int64_t trials = 10000;
  int threads = 0;
  std::optional<Mode> mode_override;
  bool all_modes = false;
  bool mu_only = false;
  std::optional<double> fixed_zeta;  ///< skip the activity solve (e.g. best-effort rate)
  std::optional<Scenario> inline_scenario;
  std::string preset_name;
  bool audit_cell_areas = false;
};

/// Fully populated job for a figure-reproduction run. Parameters the source
/// material leaves open (powers, wall loss, the load level) use the library
/// defaults and are embedded in the output's scenario block.
JobSpec preset(const std::string& name);

/// Executes the job and writes the CSV artifact (header
/// scenario_id,mode,tier,axis,axis_value,threshold_db,value,ci_low,ci_high,
/// zeta,n_bar,source,seed,trials; `#` comment block with the resolved
/// scenario). Returns 0 on success, 2 on configuration/validation errors,
/// 3 on solver or quadrature failures (diagnostics in out_path + ".log").
int run(const JobSpec& job);

/// Inclusive LO:HI:STEP expansion; empty when hi < lo.
std::vector<double> expand_range(double lo, double hi, double step);

}  // namespace hetnet
