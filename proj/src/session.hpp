// One loaded configuration plus the commands that can run against it.
// Each command produces named text documents (reports, CSV tables) that the
// caller can read back or write to a directory.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "report.hpp"
#include "scenario.hpp"

namespace pvopt {

class Session {
 public:
  // Parses the config, ingests the data files, and builds the scenario.
  // Throws IoError / ParseError / ValidationError with file context.
  void load(const std::string& config_path);

  // Overrides the swarm seed from the config.  Call after load.
  void set_seed(std::uint64_t seed);

  // Optimizes every plan (in parallel) and writes the comparison report.
  void run_optimize();

  // Metrics for one explicit candidate.  The candidate must lie within the
  // configured bounds; the plan-switch saving is measured against the
  // optimized base plan, computed on demand.
  void run_evaluate(const std::string& plan_id, double tilt_deg,
                    double azimuth_deg, int panels);

  // NPV as a function of array size at a fixed orientation.
  void run_sweep_size(const std::string& plan_id, double tilt_deg,
                      double azimuth_deg, int panels_min, int panels_max);

  // NPV over an orientation grid at a fixed size.
  void run_sweep_orientation(const std::string& plan_id, int panels,
                             double tilt_min, double tilt_max,
                             double tilt_step, double az_min, double az_max,
                             double az_step);

  // Ingest diagnostics only.
  void run_validate();

  const std::vector<std::pair<std::string, std::string>>& outputs() const {
    return outputs_;
  }
  void write_outputs(const std::string& dir) const;

  const Scenario& scenario() const;

 private:
  struct PlanOutcome {
    OptimizeResult opt;
    CashFlowResult flows;
  };

  void require_loaded() const;
  std::size_t plan_index(const std::string& id) const;
  PlanOutcome optimize_plan(std::size_t plan) const;
  double baseline_npv();
  PlanRow make_row(std::size_t plan, const OptimizeResult& opt,
                   const CashFlowResult& flows, double baseline) const;

  RunConfig cfg_;
  std::optional<Scenario> scenario_;
  std::string ingest_report_;
  std::optional<double> baseline_npv_;
  std::vector<std::pair<std::string, std::string>> outputs_;
};

}  // namespace pvopt
