#include "hetnet/activity.hpp"

#include <cmath>
#include <sstream>

namespace hetnet {

ActivitySolver::ActivitySolver(const Scenario& s, Mode mode, double r_m,
                               ActivityModel model, const QuadratureSpec& spec)
    : scenario_(s),
      mode_(mode),
      model_(model),
      n_mode_(macro_channel_count(mode, s)),
      ctx_(s, mode, r_m, s.traffic.mcs.thresholds, false, spec) {
  if (n_mode_ < 1) throw std::invalid_argument("macro tier needs >=1 channel");
}

double ActivitySolver::n_bar_at(double zeta, double lambda_f_c) const {
  return mean_channels_from(ctx_, scenario_, zeta, lambda_f_c).n_bar;
}

double ActivitySolver::step(double zeta, double lambda_f_c) const {
  const TrafficParams& t = scenario_.traffic;
  if (t.lambda_arrivals == 0.0) return 0.0;
  const double n_bar = n_bar_at(zeta, lambda_f_c);
  const double load = t.lambda_arrivals * n_bar /
                      (scenario_.net.lambda_b * t.mu * n_mode_);
  if (model_ == ActivityModel::Linear) return std::min(load, 1.0);
  return activity_closed_form(load);
}

namespace {

ActivitySolution bisect(const ActivitySolver& solver, Mode mode, double lambda_f_c,
                        double tolerance, int max_iter) {
  if (!(tolerance > 0)) throw std::invalid_argument("tolerance must be positive");
  auto g = [&](double z) { return solver.step(z, lambda_f_c) - z; };

  ActivitySolution out;
  out.mode = mode;

  double lo = 0.0, hi = 1.0;
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0 || ghi == 0.0) {
    out.zeta = glo == 0.0 ? lo : hi;
    out.residual = 0.0;
    out.n_bar = solver.n_bar_at(out.zeta, lambda_f_c);
    return out;
  }
  if (glo < 0.0 || ghi > 0.0) {
    // F maps [0,1] into [0,1], so this only happens at degenerate inputs;
    // report the boundary with the smaller residual.
    out.bracketed = false;
    out.zeta = std::abs(glo) <= std::abs(ghi) ? lo : hi;
    out.residual = std::min(std::abs(glo), std::abs(ghi));
    out.n_bar = solver.n_bar_at(out.zeta, lambda_f_c);
    out.note = "no sign change of F(zeta)-zeta on [0,1]";
    return out;
  }

  double mid = 0.5, gmid = 0.0;
  int it = 0;
  for (; it < max_iter; ++it) {
    mid = 0.5 * (lo + hi);
    gmid = g(mid);
    if (std::abs(gmid) <= tolerance || 0.5 * (hi - lo) <= tolerance) break;
    if (gmid > 0.0)
      lo = mid;
    else
      hi = mid;
  }
  out.zeta = mid;
  out.iterations = it + 1;
  out.residual = std::abs(gmid);
  out.n_bar = solver.n_bar_at(mid, lambda_f_c);
  if (it >= max_iter) {
    std::ostringstream os;
    os << "max_iter exceeded; bracket [" << lo << ", " << hi << "]";
    out.note = os.str();
  }
  return out;
}

}  // namespace

ActivitySolution ActivitySolver::solve(double tolerance, int max_iter) const {
  return bisect(*this, mode_, -1.0, tolerance, max_iter);
}

ActivitySolution ActivitySolver::solve_with_fap_density(double lambda_f_c,
                                                        double tolerance,
                                                        int max_iter) const {
  return bisect(*this, mode_, lambda_f_c, tolerance, max_iter);
}

ActivitySolution solve_activity(Mode mode, double r_m, const Scenario& s,
                                double tolerance, int max_iter, ActivityModel model) {
  ActivitySolver solver(s, mode, r_m, model);
  return solver.solve(tolerance, max_iter);
}

}  // namespace hetnet
