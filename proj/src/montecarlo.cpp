// Exact-rule stochastic-geometry simulator. The analytic side thins point
// processes and averages channel counts; here every rule is applied as
// stated: Poisson sampling of stations and users, the nearest-MU exclusion
// test per channel, balanced channel deals inside each cluster, and
// Bernoulli MBS activity. Estimators below are the validation oracles for
// the closed forms elsewhere in the library.

#include "hetnet/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hetnet/activity.hpp"
#include "hetnet/load.hpp"

namespace hetnet {

double Point::norm() const { return std::hypot(x, y); }

SimulationWindow default_window(const Scenario& s) {
  SimulationWindow w;
  w.radius = std::max(10.0 / std::sqrt(M_PI * s.net.lambda_b),
                      s.spectrum.r_m + 5.0 * s.net.r_cluster);
  w.guard = s.net.r_cluster + s.spectrum.r_m;
  return w;
}

namespace {

constexpr double kZ95 = 1.959963984540054;

void check_window(const Scenario& s, const SimulationWindow& w) {
  const double min_radius = 10.0 / std::sqrt(M_PI * s.net.lambda_b);
  if (w.radius < min_radius * (1.0 - 1e-12)) {
    std::ostringstream os;
    os << "window radius " << w.radius << " below 10 mean cell radii (" << min_radius << ")";
    throw std::invalid_argument(os.str());
  }
  if (w.trials < 1) throw std::invalid_argument("window.trials must be >= 1");
}

void check_scenario(const Scenario& s) {
  auto errs = validate(s);
  if (!errs.empty()) {
    std::string joined = "invalid scenario:";
    for (const auto& e : errs) joined += "\n  " + e;
    throw std::invalid_argument(joined);
  }
  if (s.traffic.n_channels > 64)
    throw std::invalid_argument("simulator channel masks support at most 64 channels");
}

int poisson_count(TrialRng& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  std::poisson_distribution<int> d(mean);
  return d(rng);
}

Point uniform_in_disc(TrialRng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double phi = 2.0 * M_PI * rng.uniform();
  return {r * std::cos(phi), r * std::sin(phi)};
}

double exp_fading(TrialRng& rng) { return -std::log1p(-rng.uniform()); }

double path_gain(double dx, double dy, double alpha) {
  const double d2 = dx * dx + dy * dy;
  return std::pow(d2, -0.5 * alpha);
}

int shared_channel_count(const Scenario& s, Mode mode) {
  return mode == Mode::CoChannel ? s.traffic.n_channels : s.spectrum.n_f;
}

// Uniform-grid index over cluster centers for radius queries.
class ClusterGrid {
 public:
  ClusterGrid(const std::vector<ClusterRealization>& cl, double cell, double extent)
      : cell_(std::max(cell, 1e-9)), extent_(extent) {
    nx_ = static_cast<int>(2.0 * extent_ / cell_) + 2;
    head_.assign(static_cast<std::size_t>(nx_) * nx_, -1);
    next_.assign(cl.size(), -1);
    for (std::size_t i = 0; i < cl.size(); ++i) {
      const int c = cell_index(cl[i].center.x, cl[i].center.y);
      next_[i] = head_[c];
      head_[c] = static_cast<int>(i);
    }
  }

  template <typename Fn>
  void for_each_within(const std::vector<ClusterRealization>& cl, double x, double y,
                       double radius, Fn&& fn) const {
    const int ix0 = clampi(static_cast<int>((x - radius + extent_) / cell_));
    const int ix1 = clampi(static_cast<int>((x + radius + extent_) / cell_));
    const int iy0 = clampi(static_cast<int>((y - radius + extent_) / cell_));
    const int iy1 = clampi(static_cast<int>((y + radius + extent_) / cell_));
    const double r2 = radius * radius;
    for (int iy = iy0; iy <= iy1; ++iy)
      for (int ix = ix0; ix <= ix1; ++ix)
        for (int i = head_[static_cast<std::size_t>(iy) * nx_ + ix]; i >= 0; i = next_[i]) {
          const double dx = cl[i].center.x - x, dy = cl[i].center.y - y;
          if (dx * dx + dy * dy <= r2) fn(i);
        }
  }

 private:
  int clampi(int v) const { return std::clamp(v, 0, nx_ - 1); }
  int cell_index(double x, double y) const {
    return clampi(static_cast<int>((y + extent_) / cell_)) * nx_ +
           clampi(static_cast<int>((x + extent_) / cell_));
  }
  double cell_, extent_;
  int nx_;
  std::vector<int> head_, next_;
};

// Balanced deal of k FAPs over the cluster's accessible channels; returns how
// many land on the tagged channel. Remainder channels are a uniform subset.
int dealt_count_on(const ClusterRealization& cl, int tagged, TrialRng& rng) {
  const int m = cl.accessible_count;
  if (m == 0) return 0;
  const bool tagged_ok = (cl.accessible_mask >> tagged) & 1ULL;
  const int k = static_cast<int>(cl.faps.size());
  if (!tagged_ok || k == 0) return 0;
  const int base = k / m;
  const int rem = k % m;
  if (rem == 0) return base;
  // Membership of the tagged channel in a uniform rem-subset of m channels.
  int chans[64];
  int idx = 0;
  for (int ch = 0; ch < 64 && idx < m; ++ch)
    if ((cl.accessible_mask >> ch) & 1ULL) chans[idx++] = ch;
  bool extra = false;
  for (int j = 0; j < rem; ++j) {
    const int pick = j + static_cast<int>(rng.uniform() * (m - j));
    std::swap(chans[j], chans[std::min(pick, m - 1)]);
    if (chans[j] == tagged) { extra = true; break; }
  }
  return base + (extra ? 1 : 0);
}

struct MeanVar {
  double mean = 0.0, m2 = 0.0;
  int64_t n = 0;
  void add(double v) {
    ++n;
    const double d = v - mean;
    mean += d / n;
    m2 += d * (v - mean);
  }
  double std_err() const { return n > 1 ? std::sqrt(m2 / (n - 1) / n) : 0.0; }
};

CurvePoint wilson_point(double threshold_db, int64_t covered, int64_t n) {
  CurvePoint pt;
  pt.threshold_db = threshold_db;
  pt.has_ci = true;
  if (n <= 0) {
    pt.degenerate = true;
    return pt;
  }
  const double p = static_cast<double>(covered) / n;
  const double z2 = kZ95 * kZ95;
  const double denom = 1.0 + z2 / n;
  pt.probability = p;
  pt.ci_half_width = kZ95 * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
  return pt;
}

}  // namespace

NetworkRealization sample_realization(const Scenario& s, const SimulationWindow& w,
                                      TrialRng& rng) {
  const NetworkParams& net = s.net;
  NetworkRealization nr;
  const double area = M_PI * w.radius * w.radius;

  const int n_mbs = poisson_count(rng, net.lambda_b * area);
  nr.mbs.reserve(n_mbs);
  for (int i = 0; i < n_mbs; ++i) nr.mbs.push_back(uniform_in_disc(rng, w.radius));

  const int n_par = poisson_count(rng, net.lambda_f * area);
  nr.clusters.resize(n_par);
  for (auto& cl : nr.clusters) {
    cl.center = uniform_in_disc(rng, w.radius);
    const int k = poisson_count(rng, net.c);
    cl.faps.reserve(k);
    for (int j = 0; j < k; ++j) {
      const Point off = uniform_in_disc(rng, net.r_cluster);
      cl.faps.push_back({cl.center.x + off.x, cl.center.y + off.y});
    }
  }

  const double mu_radius = w.radius + w.guard;
  const double mu_mean = per_channel_mu_density(s.traffic) * M_PI * mu_radius * mu_radius;
  nr.mus.resize(s.traffic.n_channels);
  for (auto& chan : nr.mus) {
    const int n_mu = poisson_count(rng, mu_mean);
    chan.reserve(n_mu);
    for (int i = 0; i < n_mu; ++i) chan.push_back(uniform_in_disc(rng, mu_radius));
  }

  nr.mbs_fading.resize(nr.mbs.size());
  for (auto& h : nr.mbs_fading) h = exp_fading(rng);
  for (auto& cl : nr.clusters) {
    cl.fap_fading.resize(cl.faps.size());
    for (auto& h : cl.fap_fading) h = exp_fading(rng);
  }
  return nr;
}

void apply_channel_access(NetworkRealization& nr, const Scenario& s, Mode mode,
                          double zeta, TrialRng& rng, const McOptions& opt) {
  const int shared = shared_channel_count(s, mode);
  const uint64_t full_mask = shared >= 64 ? ~0ULL : ((1ULL << shared) - 1ULL);
  for (auto& cl : nr.clusters) cl.accessible_mask = full_mask;

  const double r_m = s.spectrum.r_m;
  const bool cognition = mode != Mode::Orthogonal && r_m > 0.0 && !nr.clusters.empty();
  if (cognition) {
    double max_coord = 1.0;
    for (const auto& cl : nr.clusters)
      max_coord = std::max({max_coord, std::abs(cl.center.x), std::abs(cl.center.y)});
    ClusterGrid grid(nr.clusters, r_m, max_coord + r_m);
    const int first = opt.dedicated_channel ? 1 : 0;
    for (int ch = first; ch < shared; ++ch) {
      const uint64_t clear_bit = ~(1ULL << ch);
      for (const Point& mu : nr.mus[ch]) {
        grid.for_each_within(nr.clusters, mu.x, mu.y, r_m,
                             [&](int i) { nr.clusters[i].accessible_mask &= clear_bit; });
      }
    }
  }

  for (auto& cl : nr.clusters) {
    cl.accessible_count = std::popcount(cl.accessible_mask);
    cl.faps_on_tagged = dealt_count_on(cl, nr.tagged_channel, rng);
  }

  nr.mbs_active.resize(nr.mbs.size());
  for (auto& f : nr.mbs_active) f = rng.uniform() < zeta ? 1 : 0;
}

namespace {

// Accessibility of the tagged cluster centered at the origin.
uint64_t origin_cluster_mask(const NetworkRealization& nr, const Scenario& s, Mode mode,
                             const McOptions& opt) {
  const int shared = shared_channel_count(s, mode);
  uint64_t mask = shared >= 64 ? ~0ULL : ((1ULL << shared) - 1ULL);
  const double r_m = s.spectrum.r_m;
  if (mode == Mode::Orthogonal || r_m <= 0.0) return mask;
  const double r2 = r_m * r_m;
  const int first = opt.dedicated_channel ? 1 : 0;
  for (int ch = first; ch < shared; ++ch) {
    for (const Point& mu : nr.mus[ch]) {
      if (mu.x * mu.x + mu.y * mu.y <= r2) {
        mask &= ~(1ULL << ch);
        break;
      }
    }
  }
  return mask;
}

int pick_set_bit(uint64_t mask, int count, TrialRng& rng) {
  int target = static_cast<int>(rng.uniform() * count);
  if (target >= count) target = count - 1;
  for (int ch = 0; ch < 64; ++ch) {
    if ((mask >> ch) & 1ULL) {
      if (target == 0) return ch;
      --target;
    }
  }
  return -1;
}

double fap_interference_at_origin(const NetworkRealization& nr, const NetworkParams& net) {
  double acc = 0.0;
  for (const auto& cl : nr.clusters) {
    for (int j = 0; j < cl.faps_on_tagged; ++j) {
      acc += cl.fap_fading[j] * net.chi * net.p_f *
             path_gain(cl.faps[j].x, cl.faps[j].y, net.alpha);
    }
  }
  return acc;
}

double mbs_interference_at_origin(const NetworkRealization& nr, const NetworkParams& net,
                                  double power_factor, int skip_index) {
  double acc = 0.0;
  for (std::size_t i = 0; i < nr.mbs.size(); ++i) {
    if (static_cast<int>(i) == skip_index || !nr.mbs_active[i]) continue;
    acc += nr.mbs_fading[i] * power_factor * path_gain(nr.mbs[i].x, nr.mbs[i].y, net.alpha);
  }
  return acc;
}

double mu_trial_sir(const Scenario& s, Mode mode, double zeta,
                    const SimulationWindow& w, TrialRng& rng, const McOptions& opt) {
  const NetworkParams& net = s.net;
  NetworkRealization nr = sample_realization(s, w, rng);

  bool femto_on_tagged = mode != Mode::Orthogonal;
  if (mode == Mode::Partial) {
    // The analytic mixture weights shared channels by N_F/N; reproduce that
    // weight and, given shared, use a cognition-protected channel.
    femto_on_tagged = rng.uniform() < s.spectrum.p_c(s.traffic.n_channels);
  }
  // Channel 1 stands in for any cognition-protected channel (symmetry);
  // channel 0 is the femto-dedicated one, where the exclusion rule is void.
  nr.tagged_channel = (mode == Mode::CoChannel || s.spectrum.n_f >= 2) ? 1 : 0;

  if (femto_on_tagged) {
    nr.mus[nr.tagged_channel].push_back({0.0, 0.0});  // the tagged user's own exclusion hole
    apply_channel_access(nr, s, mode, zeta, rng, opt);
  } else {
    nr.mbs_active.resize(nr.mbs.size());
    for (auto& f : nr.mbs_active) f = rng.uniform() < zeta ? 1 : 0;
    for (auto& cl : nr.clusters) cl.faps_on_tagged = 0;
  }

  // Nearest station serves; with equal powers that maximizes received power.
  int serving = -1;
  double best_d2 = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < nr.mbs.size(); ++i) {
    const double d2 = nr.mbs[i].x * nr.mbs[i].x + nr.mbs[i].y * nr.mbs[i].y;
    if (d2 < best_d2) {
      best_d2 = d2;
      serving = static_cast<int>(i);
    }
  }
  if (serving < 0) return 0.0;

  const double signal = exp_fading(rng) * net.p_b * std::pow(best_d2, -0.5 * net.alpha);
  double interference = mbs_interference_at_origin(nr, net, net.p_b, serving);
  if (femto_on_tagged) interference += fap_interference_at_origin(nr, net);
  if (interference == 0.0) return std::numeric_limits<double>::infinity();
  return signal / interference;
}

double fu_trial_sir(const Scenario& s, Mode mode, double zeta,
                    const SimulationWindow& w, TrialRng& rng, const McOptions& opt) {
  const NetworkParams& net = s.net;
  NetworkRealization nr = sample_realization(s, w, rng);

  // Tagged cluster at the origin: serving FAP at fixed distance r0, the
  // remaining members sampled fresh (reduced Palm conditioning).
  const double h0 = exp_fading(rng);
  const int k = poisson_count(rng, net.c);
  std::vector<Point> members(k);
  std::vector<double> member_fading(k);
  for (int j = 0; j < k; ++j) {
    members[j] = uniform_in_disc(rng, net.r_cluster);
    member_fading[j] = exp_fading(rng);
  }
  (void)rng.uniform();  // serving FAP direction; isotropic, does not affect SIR

  const uint64_t mask = origin_cluster_mask(nr, s, mode, opt);
  const int m = std::popcount(mask);
  if (m == 0) return 0.0;  // no accessible channel (non-dedicated variant only)
  const int tagged = pick_set_bit(mask, m, rng);

  int intra_count = 0;
  {
    ClusterRealization tmp;
    tmp.accessible_mask = mask;
    tmp.accessible_count = m;
    tmp.faps.resize(k);
    intra_count = dealt_count_on(tmp, tagged, rng);
  }

  nr.tagged_channel = tagged;
  apply_channel_access(nr, s, mode, zeta, rng, opt);

  double interference = 0.0;
  if (mode != Mode::Orthogonal)
    interference += mbs_interference_at_origin(nr, net, net.chi * net.p_b, -1);
  for (int j = 0; j < intra_count; ++j)
    interference += member_fading[j] * net.chi * net.p_f *
                    path_gain(members[j].x, members[j].y, net.alpha);
  interference += fap_interference_at_origin(nr, net);

  const double signal = h0 * net.p_f * std::pow(net.r0, -net.alpha);
  if (interference == 0.0) return std::numeric_limits<double>::infinity();
  return signal / interference;
}

}  // namespace

CoverageCurve estimate_coverage(const Scenario& s, Mode mode, Tier tier,
                                const std::vector<double>& thresholds_linear,
                                const SimulationWindow& w, double zeta,
                                const McOptions& opt) {
  check_scenario(s);
  check_window(s, w);
  if (!(zeta >= 0.0 && zeta <= 1.0)) throw std::invalid_argument("zeta must lie in [0,1]");

  std::vector<double> sir(static_cast<std::size_t>(w.trials));
  parallel_trials(w.trials, opt.threads, w.seed, [&](int64_t t, TrialRng& rng) {
    sir[t] = tier == Tier::MU ? mu_trial_sir(s, mode, zeta, w, rng, opt)
                              : fu_trial_sir(s, mode, zeta, w, rng, opt);
  });

  CoverageCurve curve;
  curve.scenario_id = s.id;
  curve.mode = mode;
  curve.tier = tier;
  curve.source = "montecarlo";
  curve.seed = w.seed;
  curve.trials = w.trials;
  curve.zeta = zeta;
  curve.points.reserve(thresholds_linear.size());
  for (double beta : thresholds_linear) {
    int64_t covered = 0;
    for (double v : sir) covered += v >= beta ? 1 : 0;
    curve.points.push_back(wilson_point(linear_to_db(beta), covered, w.trials));
  }
  return curve;
}

namespace {

LtEstimate reduce_lt(const std::vector<double>& values, const std::vector<double>& interf,
                     double tail) {
  MeanVar mv, mi;
  for (double v : values) mv.add(v);
  for (double v : interf) mi.add(v);
  return {mv.mean, mv.std_err(), mi.mean, tail, mv.n};
}

}  // namespace

LtEstimate mc_lt_macro_at_fu(const Scenario& s, double sv, double zeta,
                             const SimulationWindow& w, const McOptions& opt) {
  check_scenario(s);
  const NetworkParams& net = s.net;
  std::vector<double> vals(w.trials), interf(w.trials);
  parallel_trials(w.trials, opt.threads, w.seed, [&](int64_t t, TrialRng& rng) {
    const double area = M_PI * w.radius * w.radius;
    const int n = poisson_count(rng, net.lambda_b * area);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const Point p = uniform_in_disc(rng, w.radius);
      const double h = exp_fading(rng);
      if (rng.uniform() < zeta) acc += h * net.chi * net.p_b * path_gain(p.x, p.y, net.alpha);
    }
    vals[t] = std::exp(-sv * acc);
    interf[t] = acc;
  });
  const double tail = 2.0 * M_PI * net.lambda_b * zeta * net.chi * net.p_b *
                      std::pow(w.radius, 2.0 - net.alpha) / (net.alpha - 2.0);
  return reduce_lt(vals, interf, tail);
}

LtEstimate mc_lt_intra_cluster(const Scenario& s, double sv, double r_m,
                               const SimulationWindow& w, const McOptions& opt) {
  check_scenario(s);
  const NetworkParams& net = s.net;
  // Channel accessibility of an isolated cluster is exactly Bernoulli per
  // channel: accessible iff the channel's MU disc of radius r_m is empty.
  const double p = std::exp(-per_channel_mu_density(s.traffic) * M_PI * r_m * r_m);
  const int n_other = s.traffic.n_channels - 1;
  std::vector<double> vals(w.trials), interf(w.trials);
  parallel_trials(w.trials, opt.threads, w.seed, [&](int64_t t, TrialRng& rng) {
    int n_acc = 0;
    for (int ch = 0; ch < n_other; ++ch) n_acc += rng.uniform() < p ? 1 : 0;
    const int m = n_acc + 1;  // dedicated channel always accessible
    const int k = poisson_count(rng, net.c);
    ClusterRealization tmp;
    tmp.accessible_mask = m >= 64 ? ~0ULL : ((1ULL << m) - 1ULL);
    tmp.accessible_count = m;
    tmp.faps.resize(k);
    const int tagged = static_cast<int>(rng.uniform() * m);
    const int count = dealt_count_on(tmp, std::min(tagged, m - 1), rng);
    double acc = 0.0;
    for (int j = 0; j < count; ++j) {
      const Point x = uniform_in_disc(rng, net.r_cluster);
      acc += exp_fading(rng) * net.chi * net.p_f * path_gain(x.x, x.y, net.alpha);
    }
    vals[t] = std::exp(-sv * acc);
    interf[t] = acc;
  });
  return reduce_lt(vals, interf, 0.0);
}

namespace {

LtEstimate fap_field_lt(const Scenario& s, double sv, double r_m, bool hole_at_origin,
                        const SimulationWindow& w, const McOptions& opt) {
  check_scenario(s);
  check_window(s, w);
  Scenario sc = s;
  sc.spectrum.r_m = r_m;
  const NetworkParams& net = sc.net;
  std::vector<double> vals(w.trials), interf(w.trials);
  parallel_trials(w.trials, opt.threads, w.seed, [&](int64_t t, TrialRng& rng) {
    NetworkRealization nr = sample_realization(sc, w, rng);
    nr.tagged_channel = 1;
    if (hole_at_origin) nr.mus[1].push_back({0.0, 0.0});
    apply_channel_access(nr, sc, Mode::CoChannel, 0.0, rng, opt);
    const double acc = fap_interference_at_origin(nr, net);
    vals[t] = std::exp(-sv * acc);
    interf[t] = acc;
  });
  // Mean interference beyond the window, with the per-channel FAP density.
  const double tail = 2.0 * M_PI * (net.lambda_f * net.c / sc.traffic.n_channels) *
                      net.chi * net.p_f * std::pow(w.radius, 2.0 - net.alpha) /
                      (net.alpha - 2.0);
  return reduce_lt(vals, interf, tail);
}

}  // namespace

LtEstimate mc_lt_inter_cluster(const Scenario& s, double sv, double r_m,
                               const SimulationWindow& w, const McOptions& opt) {
  return fap_field_lt(s, sv, r_m, false, w, opt);
}

LtEstimate mc_lt_fap_at_mu(const Scenario& s, double sv, double r_m,
                           const SimulationWindow& w, const McOptions& opt) {
  return fap_field_lt(s, sv, r_m, true, w, opt);
}

LtEstimate mc_lt_mbs_beyond(const Scenario& s, double sv, double serving_r,
                            double zeta, const SimulationWindow& w,
                            const McOptions& opt) {
  check_scenario(s);
  if (!(serving_r > 0 && serving_r < w.radius))
    throw std::invalid_argument("mc_lt_mbs_beyond requires 0 < r < window radius");
  const NetworkParams& net = s.net;
  std::vector<double> vals(w.trials), interf(w.trials);
  parallel_trials(w.trials, opt.threads, w.seed, [&](int64_t t, TrialRng& rng) {
    const double area = M_PI * (w.radius * w.radius - serving_r * serving_r);
    const int n = poisson_count(rng, net.lambda_b * area);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double r2 = serving_r * serving_r +
                        rng.uniform() * (w.radius * w.radius - serving_r * serving_r);
      (void)rng.uniform();  // angle; interference depends on radius only
      const double h = exp_fading(rng);
      if (rng.uniform() < zeta) acc += h * net.p_b * std::pow(r2, -0.5 * net.alpha);
    }
    vals[t] = std::exp(-sv * acc);
    interf[t] = acc;
  });
  const double tail = 2.0 * M_PI * net.lambda_b * zeta * net.p_b *
                      std::pow(w.radius, 2.0 - net.alpha) / (net.alpha - 2.0);
  return reduce_lt(vals, interf, tail);
}

ActivityEstimate estimate_activity(const Scenario& s, const SimulationWindow& w,
                                   int64_t cells) {
  check_scenario(s);
  if (cells < 1) throw std::invalid_argument("estimate_activity requires cells >= 1");
  const Mode mode = s.spectrum.mode;
  const ActivitySolution sol = solve_activity(mode, s.spectrum.r_m, s);
  const int n_mode = macro_channel_count(mode, s);
  const int n_e = std::max(1, static_cast<int>(n_mode / std::max(sol.n_bar, 1e-12)));

  std::vector<double> ratios(static_cast<std::size_t>(cells));
  parallel_trials(cells, 1, w.seed, [&](int64_t t, TrialRng& rng) {
    std::gamma_distribution<double> area_dist(3.5, 1.0 / (3.5 * s.net.lambda_b));
    const double a = area_dist(rng);
    const double rho = a * s.traffic.lambda_arrivals / s.traffic.mu;
    // Inverse-CDF draw from the truncated Poisson occupancy.
    double term = 1.0, total = 1.0;
    for (int n = 1; n <= n_e; ++n) {
      term *= rho / n;
      total += term;
    }
    double u = rng.uniform() * total;
    int occ = 0;
    term = 1.0;
    while (occ < n_e && u > term) {
      u -= term;
      ++occ;
      term *= rho / occ;
    }
    ratios[t] = static_cast<double>(occ) / n_e;
  });

  MeanVar mv;
  for (double v : ratios) mv.add(v);
  return {mv.mean, mv.std_err(), sol.n_bar, n_e, cells};
}

std::vector<double> audit_cell_areas(double lambda_b, int cells, uint64_t seed,
                                     int probes_per_cell) {
  if (!(lambda_b > 0)) throw std::invalid_argument("audit_cell_areas requires lambda_b > 0");
  const double win = 4.0 / std::sqrt(lambda_b);
  std::vector<double> areas(static_cast<std::size_t>(cells));
  parallel_trials(cells, 0, seed, [&](int64_t t, TrialRng& rng) {
    // Typical cell: a station conditioned at the origin among a PPP of peers.
    std::vector<Point> peers;
    const int n = poisson_count(rng, lambda_b * M_PI * win * win);
    peers.reserve(n);
    for (int i = 0; i < n; ++i) peers.push_back(uniform_in_disc(rng, win));
    int hits = 0;
    for (int p = 0; p < probes_per_cell; ++p) {
      const Point q = uniform_in_disc(rng, win);
      const double d2_origin = q.x * q.x + q.y * q.y;
      bool origin_wins = true;
      for (const Point& s2 : peers) {
        const double dx = q.x - s2.x, dy = q.y - s2.y;
        if (dx * dx + dy * dy < d2_origin) {
          origin_wins = false;
          break;
        }
      }
      hits += origin_wins ? 1 : 0;
    }
    areas[t] = M_PI * win * win * static_cast<double>(hits) / probes_per_cell;
  });
  return areas;
}

}  // namespace hetnet
