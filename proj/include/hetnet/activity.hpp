#pragma once

#include <string>

#include "hetnet/coverage.hpp"
#include "hetnet/load.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// Which map is iterated to the activity fixed point: the gamma-averaged
/// Erlang closed form, or the clamped linear load approximation (used by the
/// crossover analysis, where activity and coverage are coupled linearly).
enum class ActivityModel { ErlangGamma, Linear };

struct ActivitySolution {
  double zeta = 0.0;       ///< converged activity factor in [0,1]
  double n_bar = 0.0;      ///< mean channels per service at zeta
  int iterations = 0;
  double residual = 0.0;   ///< |F(zeta) - zeta| at the returned point
  Mode mode = Mode::CoChannel;
  bool bracketed = true;   ///< false when no sign change existed on [0,1]
  std::string note;
};

/// Bisection solver for zeta = F(zeta), where F maps an activity factor
/// through coverage -> mean channel demand -> cell occupancy back to an
/// activity factor. Construction precomputes the coverage context for the
/// scenario's MCS grid, so repeated solves (and solves at overridden FAP
/// densities) only pay for scalar iteration.
class ActivitySolver {
 public:
  ActivitySolver(const Scenario& s, Mode mode, double r_m,
                 ActivityModel model = ActivityModel::ErlangGamma,
                 const QuadratureSpec& spec = {});

  ActivitySolution solve(double tolerance = 1e-6, int max_iter = 200) const;

  /// Solve with lambda_F * c overridden; everything else from the scenario.
  ActivitySolution solve_with_fap_density(double lambda_f_c,
                                          double tolerance = 1e-6,
                                          int max_iter = 200) const;

  /// One application of the fixed-point map at the given activity factor.
  double step(double zeta, double lambda_f_c = -1.0) const;

  double n_bar_at(double zeta, double lambda_f_c = -1.0) const;

 private:
  Scenario scenario_;
  Mode mode_;
  ActivityModel model_;
  int n_mode_;
  MuCoverage ctx_;
};

ActivitySolution solve_activity(Mode mode, double r_m, const Scenario& s,
                                double tolerance = 1e-6, int max_iter = 200,
                                ActivityModel model = ActivityModel::ErlangGamma);

}  // namespace hetnet
