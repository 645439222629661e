// Command-line driver: parse a scenario, run analytic / simulation /
// comparison / sweep / activity / critical-point jobs, emit CSV.

#include <CLI11.hpp>

#include <cstdio>
#include <string>

#include "hetnet/jobs.hpp"
#include "hetnet/log.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Two-tier network coverage/load analysis and simulation"};
  app.require_subcommand(0, 1);

  hetnet::JobSpec job;
  std::string command, mode, range, preset_name;

  app.add_option("command", command,
                 "analytic|simulate|compare|sweep|activity|critical-point");
  app.add_option("--scenario", job.scenario_path, "scenario file (key = value lines)");
  app.add_option("--out", job.out_path, "output CSV path");
  app.add_option("--seed", job.seed, "RNG seed");
  app.add_option("--trials", job.trials, "Monte Carlo trials / cells");
  app.add_option("--threads", job.threads, "worker count (0 = hardware)");
  app.add_option("--axis", job.axis, "sweep axis: r_m|lambda_M|lambda_F|N_F|beta");
  app.add_option("--range", range, "LO:HI:STEP (inclusive)");
  app.add_option("--mode", mode, "co-channel|orthogonal|partial (overrides scenario)");
  app.add_option("--preset", preset_name, "figure preset: fig3..fig10");
  app.add_flag("--rate", [&job](int64_t) { job.quantity = hetnet::JobSpec::Quantity::Rate; },
               "sweep the average best-effort rate instead of coverage");
  app.add_flag("--audit-cell-areas",
               [&job](int64_t) { job.audit_cell_areas = true; },
               "activity: add a spatial Monte Carlo audit of the cell-area law");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 2 : 0;
  }

  try {
    if (!preset_name.empty()) {
      const std::string out = job.out_path;
      const uint64_t seed = job.seed;
      const bool trials_given = app.count("--trials") > 0;
      const int64_t trials = job.trials;
      const int threads = job.threads;
      const std::string scenario_path = job.scenario_path;
      job = hetnet::preset(preset_name);
      job.out_path = out;
      job.seed = seed;
      if (trials_given) job.trials = trials;
      job.threads = threads;
      if (!scenario_path.empty()) job.scenario_path = scenario_path;
    }

    if (!command.empty()) {
      if (command == "analytic") job.command = hetnet::JobSpec::Command::Analytic;
      else if (command == "simulate") job.command = hetnet::JobSpec::Command::Simulate;
      else if (command == "compare") job.command = hetnet::JobSpec::Command::Compare;
      else if (command == "sweep") job.command = hetnet::JobSpec::Command::Sweep;
      else if (command == "activity") job.command = hetnet::JobSpec::Command::Activity;
      else if (command == "critical-point") job.command = hetnet::JobSpec::Command::CriticalPoint;
      else {
        std::fprintf(stderr, "unknown command '%s'\n", command.c_str());
        return 2;
      }
    } else if (preset_name.empty()) {
      std::fprintf(stderr, "missing command (or --preset)\n");
      return 2;
    }

    if (!mode.empty()) {
      if (mode == "co-channel" || mode == "cochannel" || mode == "co_channel")
        job.mode_override = hetnet::Mode::CoChannel;
      else if (mode == "orthogonal") job.mode_override = hetnet::Mode::Orthogonal;
      else if (mode == "partial") job.mode_override = hetnet::Mode::Partial;
      else {
        std::fprintf(stderr, "unknown mode '%s'\n", mode.c_str());
        return 2;
      }
    }

    if (!range.empty()) {
      double lo, hi, step;
      if (std::sscanf(range.c_str(), "%lf:%lf:%lf", &lo, &hi, &step) != 3 || step <= 0) {
        std::fprintf(stderr, "bad --range '%s' (expected LO:HI:STEP)\n", range.c_str());
        return 2;
      }
      job.range_lo = lo;
      job.range_hi = hi;
      job.range_step = step;
      job.has_range = true;
    }

    return hetnet::run(job);
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 3;
  }
}
