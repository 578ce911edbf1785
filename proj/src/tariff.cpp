#include "tariff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pvopt {

namespace {

const char* kWeekHourDay[2] = {"weekday", "weekend"};

bool window_applies(const RateWindow& w, bool weekend, int hour) {
  if (w.days == DaySet::weekday && weekend) return false;
  if (w.days == DaySet::weekend && !weekend) return false;
  if (w.end_hour > w.start_hour)
    return hour >= w.start_hour && hour < w.end_hour;
  // Wrapped window, e.g. 22..7.
  return hour >= w.start_hour || hour < w.end_hour;
}

std::string week_hour_name(bool weekend, int hour) {
  return std::string(kWeekHourDay[weekend ? 1 : 0]) + " " +
         (hour < 10 ? "0" : "") + std::to_string(hour) + ":00";
}

}  // namespace

void TariffPlan::validate() {
  if (id.empty()) throw std::invalid_argument("tariff plan has an empty id");
  if (kind != "flat" && kind != "tou")
    throw std::invalid_argument("plan " + id + ": kind '" + kind +
                                "' is not 'flat' or 'tou'");
  if (supply_charge < 0.0)
    throw std::invalid_argument("plan " + id + ": negative supply charge");
  if (feed_in_rate < 0.0)
    throw std::invalid_argument("plan " + id + ": negative feed-in rate");
  if (windows.empty())
    throw std::invalid_argument("plan " + id + ": no rate windows");

  for (const RateWindow& w : windows) {
    if (w.start_hour < 0 || w.start_hour > 23)
      throw std::invalid_argument("plan " + id + ": window start hour " +
                                  std::to_string(w.start_hour) +
                                  " outside 0..23");
    if (w.end_hour < 1 || w.end_hour > 24)
      throw std::invalid_argument("plan " + id + ": window end hour " +
                                  std::to_string(w.end_hour) +
                                  " outside 1..24");
    if (w.end_hour == w.start_hour)
      throw std::invalid_argument("plan " + id +
                                  ": window start and end hour are both " +
                                  std::to_string(w.start_hour));
    if (w.rate < 0.0)
      throw std::invalid_argument("plan " + id + ": negative rate");
  }

  if (kind == "flat") {
    if (windows.size() != 1 || windows[0].days != DaySet::all ||
        windows[0].start_hour != 0 || windows[0].end_hour != 24)
      throw std::invalid_argument(
          "plan " + id + ": flat plans need exactly one all-days 0..24 window");
  }

  // Every week-hour must be covered exactly once.
  for (int wk = 0; wk < 2; ++wk) {
    for (int h = 0; h < 24; ++h) {
      int count = 0;
      double rate = 0.0;
      for (const RateWindow& w : windows) {
        if (window_applies(w, wk == 1, h)) {
          ++count;
          rate = w.rate;
        }
      }
      if (count == 0)
        throw std::invalid_argument("plan " + id + ": no rate covers " +
                                    week_hour_name(wk == 1, h));
      if (count > 1)
        throw std::invalid_argument("plan " + id + ": overlapping rates at " +
                                    week_hour_name(wk == 1, h));
      grid_[wk][h] = rate;
    }
  }
  grid_built_ = true;
}

double TariffPlan::import_rate(bool weekend, int hour) const {
  if (!grid_built_)
    throw std::logic_error("plan " + id + ": import_rate before validate");
  if (hour < 0 || hour > 23)
    throw std::invalid_argument("hour " + std::to_string(hour) +
                                " outside 0..23");
  return grid_[weekend ? 1 : 0][hour];
}

double base_period_cost(const TariffPlan& plan, std::span<const double> load,
                        const BillingCalendar& cal, int first_day_index) {
  if (load.size() % 24 != 0)
    throw std::invalid_argument("billing span of " +
                                std::to_string(load.size()) +
                                " hours is not whole days");
  int days = static_cast<int>(load.size() / 24);
  double total = plan.supply_charge;
  for (int d = 0; d < days; ++d) {
    bool wk = cal.is_weekend(first_day_index + d);
    for (int h = 0; h < 24; ++h)
      total += plan.import_rate(wk, h) * load[static_cast<std::size_t>(d) * 24 + h];
  }
  return total;
}

double pv_period_cost_net(const TariffPlan& plan, std::span<const double> net,
                          const BillingCalendar& cal, int first_day_index) {
  if (net.size() % 24 != 0)
    throw std::invalid_argument("billing span of " +
                                std::to_string(net.size()) +
                                " hours is not whole days");
  int days = static_cast<int>(net.size() / 24);
  double total = plan.supply_charge;
  for (int d = 0; d < days; ++d) {
    bool wk = cal.is_weekend(first_day_index + d);
    for (int h = 0; h < 24; ++h) {
      double bal = net[static_cast<std::size_t>(d) * 24 + h];
      if (bal >= 0.0)
        total += plan.import_rate(wk, h) * bal;
      else
        total -= plan.feed_in_rate * -bal;
    }
  }
  return total;
}

double pv_period_cost(const TariffPlan& plan,
                      std::span<const EnergyBalance> hours,
                      const BillingCalendar& cal, int first_day_index) {
  if (hours.size() % 24 != 0)
    throw std::invalid_argument("billing span of " +
                                std::to_string(hours.size()) +
                                " hours is not whole days");
  std::vector<double> net(hours.size());
  for (std::size_t i = 0; i < hours.size(); ++i) {
    if (hours[i].pv_kwh < 0.0)
      throw std::invalid_argument("negative generation at hour " +
                                  std::to_string(hours[i].hour_index));
    net[i] = hours[i].load_kwh - hours[i].pv_kwh;
  }
  return pv_period_cost_net(plan, net, cal, first_day_index);
}

double system_cost(int panel_count, double rated_power_w,
                   const RebateScheme& rebate) {
  if (panel_count < 0)
    throw std::invalid_argument("panel count " + std::to_string(panel_count) +
                                " is negative");
  double watts = panel_count * rated_power_w;
  double gross = rebate.unit_cost_per_w * watts;
  double rebate_value =
      rebate.certificate_multiplier * (watts / 1000.0) * rebate.certificate_price;
  return std::max(0.0, gross - rebate_value);
}

std::size_t lowest_cost_base_plan(const std::vector<TariffPlan>& plans,
                                  std::span<const double> load,
                                  const BillingCalendar& cal) {
  if (plans.empty())
    throw std::invalid_argument("no tariff plans to choose a base plan from");
  if (load.size() != 8760)
    throw std::invalid_argument("base-plan comparison needs an 8760-hour load");

  std::size_t best = 0;
  double best_cost = 0.0;
  for (std::size_t i = 0; i < plans.size(); ++i) {
    double annual = 0.0;
    int day = 0;
    for (int q = 0; q < 4; ++q) {
      std::span<const double> slice =
          load.subspan(static_cast<std::size_t>(day) * 24,
                       static_cast<std::size_t>(kQuarterDays[q]) * 24);
      annual += base_period_cost(plans[i], slice, cal, day);
      day += kQuarterDays[q];
    }
    if (i == 0 || annual < best_cost ||
        (annual == best_cost && plans[i].id < plans[best].id)) {
      best = i;
      best_cost = annual;
    }
  }
  return best;
}

}  // namespace pvopt
