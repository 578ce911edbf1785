// Retail electricity plans and billing.
//
// A plan is a supply charge per billing period plus a set of rate windows
// that must partition the week-hour grid exactly: every (day class, hour)
// pair covered by one and only one window.  Billing runs hour by hour; with
// panels the importable balance is load minus generation, with surplus
// credited at the feed-in rate.
#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pvopt {

enum class DaySet { all, weekday, weekend };

struct RateWindow {
  DaySet days = DaySet::all;
  int start_hour = 0;  // inclusive, 0..23
  int end_hour = 24;   // exclusive, 1..24; end <= start wraps past midnight
  double rate = 0.0;   // $/kWh
};

struct TariffPlan {
  std::string id;
  std::string retailer;
  std::string kind;                 // "flat" or "tou"
  double supply_charge = 0.0;       // $/period
  double feed_in_rate = 0.0;        // $/kWh
  std::vector<RateWindow> windows;
  std::optional<std::string> note;

  // Import rate for a week-hour after validate() has built the grid.
  double import_rate(bool weekend, int hour) const;
  void validate();  // throws std::invalid_argument naming the week-hour

 private:
  double grid_[2][24] = {};  // [weekend][hour]
  bool grid_built_ = false;
};

// Maps a simulation day index to a weekday.  Day 0 is year_start_weekday
// (0 = Monday .. 6 = Sunday); weekend is Saturday and Sunday.
struct BillingCalendar {
  int year_start_weekday = 0;
  bool is_weekend(int day_index) const {
    return (year_start_weekday + day_index) % 7 >= 5;
  }
};

struct EnergyBalance {
  int hour_index = 0;
  double load_kwh = 0.0;
  double pv_kwh = 0.0;
};

// Scheme reducing the upfront system cost by a per-kW certificate rebate.
struct RebateScheme {
  double unit_cost_per_w = 2.30;    // installed cost, $/W
  double certificate_multiplier = 20.73;  // certificates per kW of capacity
  double certificate_price = 35.0;  // $ each
};

// Base-case bill for one period: supply charge plus every hour of load at
// its import rate.  load must be whole days (24 h each); first_day_index
// positions day 0 of the span within the calendar.
double base_period_cost(const TariffPlan& plan, std::span<const double> load,
                        const BillingCalendar& cal, int first_day_index);

// Bill with PV for one period from hourly net balances.  Positive balance
// imports at the window rate, negative exports at the feed-in rate.  With
// pv_kwh all zero this reproduces base_period_cost bit for bit.
double pv_period_cost(const TariffPlan& plan,
                      std::span<const EnergyBalance> hours,
                      const BillingCalendar& cal, int first_day_index);

// Same bill computed from precomputed net balances (load - pv per hour).
double pv_period_cost_net(const TariffPlan& plan, std::span<const double> net,
                          const BillingCalendar& cal, int first_day_index);

// Upfront system cost for panel_count panels of rated_power_w each, floored
// at zero after the certificate rebate.
double system_cost(int panel_count, double rated_power_w,
                   const RebateScheme& rebate);

// Index of the plan with the lowest no-PV annual bill (four quarterly
// periods over an 8760-hour load).  Ties break toward the lexicographically
// smallest id.  Throws on an empty plan list.
std::size_t lowest_cost_base_plan(const std::vector<TariffPlan>& plans,
                                  std::span<const double> load,
                                  const BillingCalendar& cal);

// Days per quarterly billing period over a 365-day year.
inline constexpr int kQuarterDays[4] = {91, 91, 91, 92};

}  // namespace pvopt
