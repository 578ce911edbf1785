// Year-long simulation joining weather, load, the PV model and a tariff
// into investment metrics, plus the per-plan objective the optimizer runs
// against.
//
// The heavy, orientation-independent work (daily decomposition, sun
// geometry per hour, no-PV quarterly bills) happens once at construction.
// Per-orientation panel yields and per-candidate metrics are then cheap
// enough to evaluate tens of thousands of times.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "data_ingest.hpp"
#include "economics.hpp"
#include "insolation.hpp"
#include "pso.hpp"
#include "pv_array.hpp"
#include "tariff.hpp"

namespace pvopt {

struct ScenarioInputs {
  SiteSpec site;
  PanelSpec panel;
  PvModelOptions pv_options;
  double bop_efficiency = 0.90;
  RebateScheme rebate;
  EconomicAssumptions econ;
  BillingCalendar calendar;
  TimeConvention time_convention = TimeConvention::civil;
  std::vector<double> load_kwh;               // 8760 hourly values
  std::vector<CompleteWeatherYear> weather;   // one typical year or several
  std::vector<TariffPlan> plans;
};

struct CashFlowResult {
  double npv = 0.0;
  double system_cost = 0.0;
  std::array<double, 4> quarterly_savings{};  // first-year pattern
  std::optional<double> mirr_annual;
  std::optional<double> payback_years;
  double plan_saving = 0.0;  // vs the base-plan benchmark; set by the caller
};

class Scenario {
 public:
  explicit Scenario(ScenarioInputs in);

  const ScenarioInputs& in() const { return in_; }
  std::size_t plan_count() const { return in_.plans.size(); }
  std::size_t weather_year_count() const { return in_.weather.size(); }
  std::size_t base_plan_index() const { return base_plan_; }
  const TariffPlan& base_plan() const { return in_.plans[base_plan_]; }
  double base_quarter_cost(std::size_t plan, int quarter) const {
    return base_q_[plan][quarter];
  }
  double annual_base_cost(std::size_t plan) const;

  // Hourly AC energy of a single panel at the given orientation, kWh, for
  // one weather year.  out is resized to 8760.
  void per_panel_yield(const Orientation& plane, std::size_t year,
                       std::vector<double>& out) const;

  // All weather years at once; result[year][hour].
  std::vector<std::vector<double>> yields_for(const Orientation& plane) const;

  // First-year quarterly bill savings for a candidate, averaged across
  // weather years.  panels may be fractional (continuous search relaxation).
  std::array<double, 4> savings_from_yields(
      std::size_t plan, const std::vector<std::vector<double>>& yields,
      double panels) const;

  double upfront_cost(double panels) const;
  double npv_from_savings(const std::array<double, 4>& savings,
                          double panels) const;

  // Convenience composition of the three steps above.
  double npv_for(std::size_t plan, const Orientation& plane,
                 double panels) const;

  // Full metric set for one candidate.
  CashFlowResult evaluate(std::size_t plan, const Orientation& plane,
                          int panels) const;

 private:
  ScenarioInputs in_;
  std::size_t base_plan_ = 0;
  double inflation_q_ = 0.0;
  double discount_q_ = 0.0;
  std::vector<double> declination_;                    // [365]
  std::vector<std::vector<HorizontalHour>> geo_;       // [year][8760]
  std::vector<std::array<double, 4>> base_q_;          // [plan][quarter]
};

// Objective wrapper for one plan with memoized yields and NPVs.  Owns its
// caches; use one instance per optimizer thread.
class PlanEvaluator {
 public:
  PlanEvaluator(const Scenario& scenario, std::size_t plan);

  double npv_at(double tilt_deg, double azimuth_deg, double panels) const;

  // Negated NPV, for minimization.
  std::function<double(const Vec3&)> objective() const;

 private:
  using YieldSet = std::vector<std::vector<double>>;

  const std::shared_ptr<const YieldSet>& yields_at(double tilt_deg,
                                                   double azimuth_deg) const;

  const Scenario& scn_;
  std::size_t plan_;
  mutable std::unordered_map<std::uint64_t, double> npv_cache_;
  mutable std::unordered_map<std::uint64_t, std::shared_ptr<const YieldSet>>
      yield_cache_;
  mutable std::shared_ptr<const YieldSet> last_yields_;
};

}  // namespace pvopt
