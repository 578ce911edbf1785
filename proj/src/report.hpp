// Output documents: the plan comparison report (text and CSV), optimizer
// convergence traces, sweep tables, and the ingest summary.
//
// Formatting rules: money to the cent, rates as percentages with two
// decimals, angles as whole degrees (the search lattice is integral), "-"
// wherever a metric is undefined or a plan has no worthwhile system.
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "data_ingest.hpp"
#include "pso.hpp"

namespace pvopt {

struct PlanRow {
  std::string plan_id;
  std::string retailer;
  std::string kind;
  bool is_base = false;
  bool viable = false;  // best NPV > 0
  int panels = 0;
  double size_kw = 0.0;
  double tilt_deg = 0.0;
  double azimuth_deg = 0.0;
  double npv = 0.0;
  double plan_saving = 0.0;
  std::optional<double> mirr_annual;
  std::optional<double> payback_years;
  double system_cost = 0.0;
  std::array<double, 4> quarterly_savings{};
  std::optional<std::string> note;
};

std::string render_report_text(const std::vector<PlanRow>& rows,
                               const std::string& base_plan_id);
std::string render_report_csv(const std::vector<PlanRow>& rows);

struct ConvergenceTrace {
  std::string plan_id;
  std::vector<IterationStat> history;  // best_score is the negated NPV
};

std::string render_convergence_csv(const std::vector<ConvergenceTrace>& traces);

struct SizeSweepRow {
  int panels = 0;
  double size_kw = 0.0;
  double npv = 0.0;
};

std::string render_size_sweep_csv(const std::string& plan_id,
                                  const std::vector<SizeSweepRow>& rows);

struct OrientationSweepRow {
  double tilt_deg = 0.0;
  double azimuth_deg = 0.0;
  double npv = 0.0;
};

std::string render_orientation_sweep_csv(
    const std::string& plan_id, const std::vector<OrientationSweepRow>& rows);

std::string render_ingest_report(const MeterReport& meter,
                                 const WeatherData& weather,
                                 const std::vector<std::string>& extra_warnings);

// Money with sign and two decimals; -0 is normalized to 0.
std::string format_money(double v);
// Fraction as a percentage with two decimals.
std::string format_percent(double fraction);

}  // namespace pvopt
