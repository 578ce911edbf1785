// Run configuration: one JSON file naming the site, the hardware and money
// assumptions, the input data files, and the search settings.  Tariff plans
// live in their own JSON files referenced from the config.
//
// Unknown keys are rejected so a typo cannot silently fall back to a
// default.  Relative paths resolve against the config file's directory.
#pragma once

#include <string>
#include <vector>

#include "errors.hpp"
#include "pso.hpp"
#include "scenario.hpp"

namespace pvopt {

enum class WeatherMode {
  typical,   // collapse the weather years into one mean year
  per_year,  // simulate each year and average the bills
};

struct RunConfig {
  SiteSpec site;
  PanelSpec panel;
  PvModelOptions pv_options;
  double bop_efficiency = 0.90;
  RebateScheme rebate;
  EconomicAssumptions econ;
  BillingCalendar calendar;
  TimeConvention meter_time = TimeConvention::civil;
  WeatherMode weather_mode = WeatherMode::typical;
  std::string meter_path;
  std::string weather_path;
  std::vector<std::string> tariff_paths;
  ConstraintSet bounds = ConstraintSet::defaults();
  SwarmConfig swarm;
};

RunConfig load_run_config(const std::string& path);
TariffPlan load_tariff_json(const std::string& path);

}  // namespace pvopt
