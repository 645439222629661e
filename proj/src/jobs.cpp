#include "hetnet/jobs.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "hetnet/activity.hpp"
#include "hetnet/coverage.hpp"
#include "hetnet/design.hpp"
#include "hetnet/load.hpp"
#include "hetnet/log.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/scenario_io.hpp"

namespace hetnet {

namespace {

struct CsvRow {
  std::string scenario_id, mode, tier, axis, source;
  std::optional<double> axis_value, threshold_db, value, ci_low, ci_high, zeta, n_bar;
  std::optional<uint64_t> seed;
  std::optional<int64_t> trials;
};

std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

std::string csv_quote(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void write_csv(const std::string& path, const Scenario& s, const std::vector<CsvRow>& rows,
               const std::vector<std::string>& notes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + path + "'");
  std::istringstream scen(scenario_to_text(s));
  std::string line;
  out << "# scenario " << s.id << "\n";
  while (std::getline(scen, line)) out << "# " << line << "\n";
  for (const auto& n : notes) out << "# " << n << "\n";
  out << "scenario_id,mode,tier,axis,axis_value,threshold_db,value,ci_low,ci_high,"
         "zeta,n_bar,source,seed,trials\n";
  auto opt = [](const std::optional<double>& v) { return v ? fmt_num(*v) : std::string(); };
  for (const auto& r : rows) {
    out << csv_quote(r.scenario_id) << ',' << csv_quote(r.mode) << ',' << csv_quote(r.tier)
        << ',' << csv_quote(r.axis) << ',' << opt(r.axis_value) << ',' << opt(r.threshold_db)
        << ',' << opt(r.value) << ',' << opt(r.ci_low) << ',' << opt(r.ci_high) << ','
        << opt(r.zeta) << ',' << opt(r.n_bar) << ',' << csv_quote(r.source) << ','
        << (r.seed ? std::to_string(*r.seed) : std::string()) << ','
        << (r.trials ? std::to_string(*r.trials) : std::string()) << "\n";
  }
}

Scenario resolve_scenario(const JobSpec& job) {
  if (!job.scenario_path.empty()) return load_scenario_file(job.scenario_path);
  if (job.inline_scenario) return *job.inline_scenario;
  Scenario s;
  s.id = job.preset_name.empty() ? "default" : job.preset_name;
  return s;
}

std::vector<Mode> job_modes(const JobSpec& job, const Scenario& s) {
  if (job.all_modes) return {Mode::CoChannel, Mode::Orthogonal, Mode::Partial};
  if (job.mode_override) return {*job.mode_override};
  return {s.spectrum.mode};
}

std::vector<double> beta_grid_db(const JobSpec& job) {
  if (job.has_range && (job.axis.empty() || job.axis == "beta"))
    return expand_range(job.range_lo, job.range_hi, job.range_step);
  return expand_range(-10.0, 25.0, 0.5);
}

double solve_zeta(const JobSpec& job, const Scenario& s, Mode mode, double* n_bar) {
  if (job.fixed_zeta) {
    if (n_bar) *n_bar = mean_channels(s, mode, s.spectrum.r_m, *job.fixed_zeta).n_bar;
    return *job.fixed_zeta;
  }
  const ActivitySolution sol = solve_activity(mode, s.spectrum.r_m, s);
  if (n_bar) *n_bar = sol.n_bar;
  return sol.zeta;
}

void append_curve(std::vector<CsvRow>& rows, const CoverageCurve& curve,
                  const std::string& axis, std::optional<double> axis_value,
                  double n_bar) {
  for (const auto& pt : curve.points) {
    CsvRow r;
    r.scenario_id = curve.scenario_id;
    r.mode = mode_name(curve.mode);
    r.tier = tier_name(curve.tier);
    r.axis = axis;
    r.axis_value = axis_value;
    r.threshold_db = pt.threshold_db;
    r.value = pt.probability;
    r.zeta = curve.zeta;
    r.n_bar = n_bar;
    r.source = curve.source;
    if (pt.has_ci) {
      r.ci_low = std::max(0.0, pt.probability - pt.ci_half_width);
      r.ci_high = std::min(1.0, pt.probability + pt.ci_half_width);
      r.seed = curve.seed;
      r.trials = curve.trials;
    }
    rows.push_back(r);
  }
}

CoverageCurve analytic_curve(const Scenario& s, Mode mode, Tier tier,
                             const std::vector<double>& thresholds, double zeta) {
  CoverageCurve curve;
  curve.scenario_id = s.id;
  curve.mode = mode;
  curve.tier = tier;
  curve.source = "analytic";
  curve.zeta = zeta;
  if (tier == Tier::MU) {
    MuCoverage ctx(s, mode, s.spectrum.r_m, thresholds);
    for (std::size_t i = 0; i < thresholds.size(); ++i) {
      CurvePoint pt;
      pt.threshold_db = linear_to_db(thresholds[i]);
      pt.probability = ctx.eval(i, zeta);
      curve.points.push_back(pt);
    }
  } else {
    for (double beta : thresholds) {
      CurvePoint pt;
      pt.threshold_db = linear_to_db(beta);
      pt.probability = coverage_fu(s, {Tier::FU, mode, beta, zeta});
      curve.points.push_back(pt);
    }
  }
  return curve;
}

void apply_axis(Scenario& s, const std::string& axis, double value) {
  if (axis == "r_m") s.spectrum.r_m = value;
  else if (axis == "lambda_M") s.traffic.lambda_arrivals = value;
  else if (axis == "lambda_F") s.net.lambda_f = value;
  else if (axis == "N_F" || axis == "n_f") s.spectrum.n_f = static_cast<int>(std::lround(value));
  else throw std::invalid_argument("unknown sweep axis '" + axis + "'");
}

void run_curves(const JobSpec& job, const Scenario& s, std::vector<CsvRow>& rows,
                bool analytic, bool montecarlo) {
  std::vector<double> thresholds;
  for (double db : beta_grid_db(job)) thresholds.push_back(db_to_linear(db));
  for (Mode mode : job_modes(job, s)) {
    for (Tier tier : {Tier::MU, Tier::FU}) {
      if (job.mu_only && tier == Tier::FU) continue;
      double n_bar = 0.0;
      const double zeta = solve_zeta(job, s, mode, &n_bar);
      if (analytic)
        append_curve(rows, analytic_curve(s, mode, tier, thresholds, zeta), "beta",
                     std::nullopt, n_bar);
      if (montecarlo) {
        SimulationWindow w = default_window(s);
        w.seed = job.seed;
        w.trials = job.trials;
        McOptions opt;
        opt.threads = job.threads;
        append_curve(rows, estimate_coverage(s, mode, tier, thresholds, w, zeta, opt),
                     "beta", std::nullopt, n_bar);
      }
    }
  }
}

void run_sweep(const JobSpec& job, const Scenario& base, std::vector<CsvRow>& rows) {
  if (job.axis.empty()) throw std::invalid_argument("sweep requires --axis");
  if (job.axis == "beta") {
    run_curves(job, base, rows, true, false);
    return;
  }
  const std::vector<double> values =
      job.has_range ? expand_range(job.range_lo, job.range_hi, job.range_step)
                    : std::vector<double>{};
  for (double v : values) {
    Scenario s = base;
    apply_axis(s, job.axis, v);
    const auto errs = validate(s);
    if (!errs.empty()) continue;  // e.g. N_F = N while sweeping N_F
    for (Mode mode : job_modes(job, s)) {
      double n_bar = 0.0;
      const double zeta = solve_zeta(job, s, mode, &n_bar);
      for (Tier tier : {Tier::MU, Tier::FU}) {
        if (job.mu_only && tier == Tier::FU) continue;
        CsvRow r;
        r.scenario_id = s.id;
        r.mode = mode_name(mode);
        r.tier = tier_name(tier);
        r.axis = job.axis;
        r.axis_value = v;
        r.zeta = zeta;
        r.n_bar = n_bar;
        r.source = "analytic";
        if (job.quantity == JobSpec::Quantity::Rate) {
          const RateResult rate = avg_rate(s, tier, mode, zeta);
          if (rate.unbounded) {
            log_error("unbounded; singular no-interference case");
            continue;
          }
          r.value = rate.value;
        } else {
          const double beta = tier == Tier::MU ? s.spectrum.beta_m : s.spectrum.beta_f;
          r.threshold_db = linear_to_db(beta);
          r.value = coverage(s, {tier, mode, beta, zeta});
        }
        rows.push_back(r);
      }
    }
  }
}

void run_activity(const JobSpec& job, const Scenario& base, std::vector<CsvRow>& rows) {
  std::vector<double> values{base.traffic.lambda_arrivals};
  std::string axis;
  if (job.has_range && !job.axis.empty()) {
    values = expand_range(job.range_lo, job.range_hi, job.range_step);
    axis = job.axis;
  }
  for (double v : values) {
    Scenario s = base;
    if (!axis.empty()) apply_axis(s, axis, v);
    for (Mode mode : job_modes(job, s)) {
      const ActivitySolution sol = solve_activity(mode, s.spectrum.r_m, s);
      CsvRow r;
      r.scenario_id = s.id;
      r.mode = mode_name(mode);
      r.axis = axis;
      if (!axis.empty()) r.axis_value = v;
      r.value = sol.zeta;
      r.zeta = sol.zeta;
      r.n_bar = sol.n_bar;
      r.source = "fixed_point";
      rows.push_back(r);

      CsvRow lin = r;
      lin.value = activity_linear(mode, s, sol.n_bar);
      lin.zeta = lin.value;
      lin.source = "linear";
      rows.push_back(lin);

      if (job.trials > 0) {
        SimulationWindow w = default_window(s);
        w.seed = job.seed;
        w.trials = job.trials;
        Scenario sm = s;
        sm.spectrum.mode = mode;
        const ActivityEstimate est = estimate_activity(sm, w, job.trials);
        CsvRow mc = r;
        mc.value = est.zeta;
        mc.zeta = est.zeta;
        mc.ci_low = est.zeta - 1.96 * est.std_err;
        mc.ci_high = est.zeta + 1.96 * est.std_err;
        mc.seed = job.seed;
        mc.trials = job.trials;
        mc.source = "montecarlo";
        rows.push_back(mc);
      }
    }
  }
}

void run_critical(const JobSpec& job, const Scenario& base, std::vector<CsvRow>& rows,
                  std::vector<std::string>& notes) {
  std::vector<double> r_m_values{base.spectrum.r_m};
  const bool sweep_rm = job.has_range && job.axis == "r_m";
  if (sweep_rm) r_m_values = expand_range(job.range_lo, job.range_hi, job.range_step);

  const CriticalPointResult cf = critical_density_case1(base);
  CsvRow row;
  row.scenario_id = base.id;
  row.axis = "lambda_f_c";
  row.value = cf.lambda_f_c_star;
  row.source = "closed_form";
  rows.push_back(row);
  if (!cf.validity)
    notes.push_back("case1 validity (lambda_M/(lambda_B mu) <= N-N_F): violated");

  for (double r_m : r_m_values) {
    Scenario s = base;
    s.spectrum.r_m = r_m;
    const CriticalPointResult num = critical_density_numerical(s);
    CsvRow r;
    r.scenario_id = s.id;
    r.axis = sweep_rm ? "r_m" : "lambda_f_c";
    if (sweep_rm) r.axis_value = r_m;
    r.source = "numerical";
    if (num.crossover_found) {
      r.value = num.lambda_f_c_star;
    } else {
      notes.push_back("no crossover in range at r_m = " + fmt_num(r_m));
    }
    rows.push_back(r);
  }
}

void run_area_audit(const JobSpec& job, const Scenario& s, std::vector<CsvRow>& rows) {
  const auto areas = audit_cell_areas(s.net.lambda_b, 300, job.seed);
  double mean = 0.0;
  for (double a : areas) mean += a;
  mean /= areas.size();
  CsvRow r;
  r.scenario_id = s.id;
  r.axis = "mean_cell_area_ratio";
  r.value = mean * s.net.lambda_b;  // 1.0 under the gamma area law
  r.source = "montecarlo";
  r.seed = job.seed;
  r.trials = static_cast<int64_t>(areas.size());
  rows.push_back(r);
}

}  // namespace

std::vector<double> expand_range(double lo, double hi, double step) {
  std::vector<double> out;
  if (!(step > 0)) return out;
  for (double v = lo; v <= hi + 1e-9 * std::max(1.0, std::abs(hi)); v += step) out.push_back(v);
  return out;
}

int run(const JobSpec& job) {
  Scenario s;
  try {
    s = resolve_scenario(job);
  } catch (const ScenarioParseError& e) {
    log_error(e.what());
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }
  const auto errs = validate(s);
  if (!errs.empty()) {
    for (const auto& e : errs) std::fprintf(stderr, "scenario error: %s\n", e.c_str());
    return 2;
  }
  if (job.out_path.empty()) {
    std::fprintf(stderr, "missing output path\n");
    return 2;
  }

  std::vector<CsvRow> rows;
  std::vector<std::string> notes;
  try {
    switch (job.command) {
      case JobSpec::Command::Analytic:
        run_curves(job, s, rows, true, false);
        break;
      case JobSpec::Command::Simulate:
        run_curves(job, s, rows, false, true);
        break;
      case JobSpec::Command::Compare:
        run_curves(job, s, rows, true, true);
        break;
      case JobSpec::Command::Sweep:
        run_sweep(job, s, rows);
        break;
      case JobSpec::Command::Activity:
        run_activity(job, s, rows);
        if (job.audit_cell_areas) run_area_audit(job, s, rows);
        break;
      case JobSpec::Command::CriticalPoint:
        run_critical(job, s, rows, notes);
        break;
    }
    write_csv(job.out_path, s, rows, notes);
  } catch (const QuadratureError& e) {
    std::ofstream log(job.out_path + ".log");
    log << "solver/quadrature failure\n" << e.what() << "\n";
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::ofstream log(job.out_path + ".log");
    log << "failure\n" << e.what() << "\n";
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  }
  return 0;
}

JobSpec preset(const std::string& name) {
  JobSpec job;
  job.preset_name = name;
  Scenario s;
  s.id = name;
  s.spectrum.r_m = 60.0;  // validation-figure default

  if (name == "fig3") {
    job.command = JobSpec::Command::Activity;
    job.quantity = JobSpec::Quantity::Zeta;
    job.axis = "lambda_M";
    job.range_lo = 2e-5;
    job.range_hi = 8e-4;
    job.range_step = 5.2e-5;
    job.has_range = true;
    job.trials = 0;  // analytic comparison only
    s.spectrum.r_m = 0.0;
  } else if (name == "fig4") {
    job.command = JobSpec::Command::Compare;
    job.axis = "beta";
    job.range_lo = -10.0;
    job.range_hi = 20.0;
    job.range_step = 0.5;
    job.has_range = true;
    job.trials = 20000;
  } else if (name == "fig5") {
    job.command = JobSpec::Command::Activity;
    job.quantity = JobSpec::Quantity::Zeta;
    job.axis = "lambda_M";
    job.range_lo = 2e-5;
    job.range_hi = 8e-4;
    job.range_step = 5.2e-5;
    job.has_range = true;
    job.trials = 10000;
  } else if (name == "fig6a") {
    job.command = JobSpec::Command::Sweep;
    job.axis = "r_m";
    job.range_lo = 0.0;
    job.range_hi = 120.0;
    job.range_step = 10.0;
    job.has_range = true;
  } else if (name == "fig6b") {
    job.command = JobSpec::Command::Sweep;
    job.axis = "lambda_M";
    job.range_lo = 2e-5;
    job.range_hi = 8e-4;
    job.range_step = 5.2e-5;
    job.has_range = true;
  } else if (name == "fig6c") {
    job.command = JobSpec::Command::Sweep;
    job.axis = "lambda_F";
    job.range_lo = 2e-5;
    job.range_hi = 3e-4;
    job.range_step = 2e-5;
    job.has_range = true;
  } else if (name == "fig7") {
    job.command = JobSpec::Command::Sweep;
    job.quantity = JobSpec::Quantity::Rate;
    job.axis = "r_m";
    job.range_lo = 0.0;
    job.range_hi = 120.0;
    job.range_step = 10.0;
    job.has_range = true;
    job.fixed_zeta = 1.0;  // best-effort benchmark
    s.net.lambda_b = 1e-5;
  } else if (name == "fig8") {
    job.command = JobSpec::Command::Sweep;
    job.axis = "N_F";
    job.range_lo = 1.0;
    job.range_hi = 19.0;
    job.range_step = 1.0;
    job.has_range = true;
    job.all_modes = true;
    s.spectrum.r_m = 70.0;
  } else if (name == "fig9") {
    job.command = JobSpec::Command::Sweep;
    job.axis = "r_m";
    job.range_lo = 0.0;
    job.range_hi = 120.0;
    job.range_step = 10.0;
    job.has_range = true;
    job.all_modes = true;
  } else if (name == "fig10") {
    job.command = JobSpec::Command::Sweep;
    job.axis = "lambda_F";
    job.range_lo = 5e-5;
    job.range_hi = 1.6e-3;
    job.range_step = 5e-5;
    job.has_range = true;
    job.all_modes = true;
    job.mu_only = true;
    s.spectrum.r_m = 0.0;
  } else {
    throw std::invalid_argument("unknown preset '" + name + "'");
  }
  job.inline_scenario = s;
  return job;
}

}  // namespace hetnet
