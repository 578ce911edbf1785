// Command-line front end over the C API.
//
// Exit codes: 0 success, 2 usage/config/data errors, 3 when the optimizer
// cannot find any feasible candidate inside the configured bounds.
#include <cstdint>
#include <cstdio>
#include <string>

#include <CLI11.hpp>
#include <pvopt/pvopt.h>

namespace {

int exit_code_for(pvopt_status st) {
  return st == PVOPT_ERR_NO_FEASIBLE ? 3 : 2;
}

int fail(pvopt_session* s, pvopt_status st) {
  std::fprintf(stderr, "error (%s): %s\n", pvopt_status_name(st),
               pvopt_last_error(s));
  int code = exit_code_for(st);
  pvopt_session_close(s);
  return code;
}

void print_output(pvopt_session* s, const std::string& name) {
  for (size_t i = 0; i < pvopt_output_count(s); ++i) {
    if (name == pvopt_output_name(s, i)) {
      std::fputs(pvopt_output_text(s, i), stdout);
      return;
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"PV array sizing and orientation against retail tariffs"};
  app.require_subcommand(1);

  std::string config;
  std::string out_dir = "pvopt-out";
  std::string format = "text";
  std::uint64_t seed = 0;
  app.add_option("--config", config, "Run configuration JSON file")
      ->required();
  CLI::Option* seed_opt =
      app.add_option("--seed", seed, "Override the optimizer seed");
  app.add_option("--out", out_dir, "Directory for output files")
      ->capture_default_str();
  app.add_option("--format", format, "Report format on stdout")
      ->check(CLI::IsMember({"text", "csv"}))
      ->capture_default_str();

  CLI::App* cmd_optimize = app.add_subcommand(
      "optimize", "Find the best size and orientation for every plan");

  std::string plan;
  double tilt = 0.0, azimuth = 0.0;
  int panels = 0;
  CLI::App* cmd_evaluate =
      app.add_subcommand("evaluate", "Metrics for one explicit candidate");
  cmd_evaluate->add_option("--plan", plan, "Tariff plan id")->required();
  cmd_evaluate->add_option("--tilt", tilt, "Panel tilt, degrees")->required();
  cmd_evaluate->add_option("--azimuth", azimuth, "Panel azimuth, degrees")
      ->required();
  cmd_evaluate->add_option("--panels", panels, "Number of panels")->required();

  int panels_min = 0, panels_max = 30;
  CLI::App* cmd_sweep_size = app.add_subcommand(
      "sweep-size", "NPV for each array size at a fixed orientation");
  cmd_sweep_size->add_option("--plan", plan, "Tariff plan id")->required();
  cmd_sweep_size->add_option("--tilt", tilt, "Panel tilt, degrees")->required();
  cmd_sweep_size->add_option("--azimuth", azimuth, "Panel azimuth, degrees")
      ->required();
  cmd_sweep_size->add_option("--min", panels_min, "Smallest panel count")
      ->capture_default_str();
  cmd_sweep_size->add_option("--max", panels_max, "Largest panel count")
      ->capture_default_str();

  double tilt_min = 0.0, tilt_max = 90.0, tilt_step = 5.0;
  double az_min = -180.0, az_max = 180.0, az_step = 5.0;
  CLI::App* cmd_sweep_orient = app.add_subcommand(
      "sweep-orientation", "NPV over an orientation grid at a fixed size");
  cmd_sweep_orient->add_option("--plan", plan, "Tariff plan id")->required();
  cmd_sweep_orient->add_option("--panels", panels, "Number of panels")
      ->required();
  cmd_sweep_orient->add_option("--tilt-min", tilt_min, "")->capture_default_str();
  cmd_sweep_orient->add_option("--tilt-max", tilt_max, "")->capture_default_str();
  cmd_sweep_orient->add_option("--tilt-step", tilt_step, "")
      ->capture_default_str();
  cmd_sweep_orient->add_option("--az-min", az_min, "")->capture_default_str();
  cmd_sweep_orient->add_option("--az-max", az_max, "")->capture_default_str();
  cmd_sweep_orient->add_option("--az-step", az_step, "")->capture_default_str();

  CLI::App* cmd_validate = app.add_subcommand(
      "validate-data", "Check the input files and print the ingest report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::fprintf(stderr, "%s\n", e.what());
    return 2;
  }

  pvopt_session* s = nullptr;
  pvopt_status st = pvopt_session_open(config.c_str(), &s);
  if (st != PVOPT_OK) {
    if (s) return fail(s, st);
    std::fprintf(stderr, "error (%s): cannot open session\n",
                 pvopt_status_name(st));
    return 2;
  }
  if (*seed_opt) {
    st = pvopt_set_seed(s, seed);
    if (st != PVOPT_OK) return fail(s, st);
  }

  std::string primary;
  if (cmd_optimize->parsed()) {
    st = pvopt_run_optimize(s);
    primary = format == "csv" ? "report.csv" : "report.txt";
  } else if (cmd_evaluate->parsed()) {
    st = pvopt_run_evaluate(s, plan.c_str(), tilt, azimuth, panels);
    primary = format == "csv" ? "report.csv" : "report.txt";
  } else if (cmd_sweep_size->parsed()) {
    st = pvopt_run_sweep_size(s, plan.c_str(), tilt, azimuth, panels_min,
                              panels_max);
    primary = "sweep_size.csv";
  } else if (cmd_sweep_orient->parsed()) {
    st = pvopt_run_sweep_orientation(s, plan.c_str(), panels, tilt_min,
                                     tilt_max, tilt_step, az_min, az_max,
                                     az_step);
    primary = "sweep_orientation.csv";
  } else if (cmd_validate->parsed()) {
    st = pvopt_run_validate(s);
    primary = "ingest_report.txt";
  }
  if (st != PVOPT_OK) return fail(s, st);

  st = pvopt_write_outputs(s, out_dir.c_str());
  if (st != PVOPT_OK) return fail(s, st);

  print_output(s, primary);
  std::fprintf(stderr, "outputs written to %s\n", out_dir.c_str());
  pvopt_session_close(s);
  return 0;
}
