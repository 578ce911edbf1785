#include "scenario.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace pvopt {

namespace {

constexpr int kQuarterDayOffset[4] = {0, 91, 182, 273};

}  // namespace

Scenario::Scenario(ScenarioInputs in) : in_(std::move(in)) {
  in_.site.validate();
  in_.panel.validate();
  in_.econ.validate();
  if (!(in_.bop_efficiency > 0.0 && in_.bop_efficiency <= 1.0))
    throw std::invalid_argument("balance-of-plant efficiency " +
                                std::to_string(in_.bop_efficiency) +
                                " outside (0, 1]");
  if (in_.calendar.year_start_weekday < 0 || in_.calendar.year_start_weekday > 6)
    throw std::invalid_argument("year start weekday outside 0..6");
  if (in_.load_kwh.size() != 8760)
    throw std::invalid_argument("load series has " +
                                std::to_string(in_.load_kwh.size()) +
                                " hours, want 8760");
  for (std::size_t i = 0; i < in_.load_kwh.size(); ++i)
    if (!(in_.load_kwh[i] >= 0.0) || !std::isfinite(in_.load_kwh[i]))
      throw std::invalid_argument("load at hour " + std::to_string(i) +
                                  " is negative or not a number");
  if (in_.weather.empty())
    throw std::invalid_argument("no weather years supplied");
  if (in_.plans.empty()) throw std::invalid_argument("no tariff plans supplied");
  for (TariffPlan& p : in_.plans) p.validate();

  inflation_q_ = effective_quarterly_rate(in_.econ.inflation_rate_annual);
  discount_q_ = effective_quarterly_rate(in_.econ.discount_rate_annual);

  declination_.resize(365);
  for (int d = 0; d < 365; ++d) declination_[d] = declination(d + 1);

  geo_.resize(in_.weather.size());
  for (std::size_t y = 0; y < in_.weather.size(); ++y) {
    geo_[y].resize(8760);
    for (int d = 0; d < 365; ++d) {
      DailyInsolation daily = make_daily_insolation(
          in_.site, d + 1, in_.weather[y].days[d].global_kwh);
      std::array<HorizontalHour, 24> hours =
          decompose_day_horizontal(daily, in_.site, in_.time_convention);
      for (int h = 0; h < 24; ++h)
        geo_[y][static_cast<std::size_t>(d) * 24 + h] = hours[h];
    }
  }

  base_plan_ = lowest_cost_base_plan(in_.plans, in_.load_kwh, in_.calendar);
  base_q_.resize(in_.plans.size());
  for (std::size_t p = 0; p < in_.plans.size(); ++p) {
    for (int q = 0; q < 4; ++q) {
      std::span<const double> slice(
          in_.load_kwh.data() + kQuarterDayOffset[q] * 24,
          static_cast<std::size_t>(kQuarterDays[q]) * 24);
      base_q_[p][q] = base_period_cost(in_.plans[p], slice, in_.calendar,
                                       kQuarterDayOffset[q]);
    }
  }
}

double Scenario::annual_base_cost(std::size_t plan) const {
  double total = 0.0;
  for (int q = 0; q < 4; ++q) total += base_q_[plan][q];
  return total;
}

void Scenario::per_panel_yield(const Orientation& plane, std::size_t year,
                               std::vector<double>& out) const {
  out.assign(8760, 0.0);
  const std::vector<HorizontalHour>& geo = geo_[year];
  const ArrayConfig one_panel{1, in_.bop_efficiency};
  for (int d = 0; d < 365; ++d) {
    double t_max = in_.weather[year].days[d].t_max_c;
    for (int h = 0; h < 24; ++h) {
      const HorizontalHour& hh = geo[static_cast<std::size_t>(d) * 24 + h];
      if (!hh.daylight || hh.irr.global_kwh <= 0.0) continue;
      SolarInstant t{d + 1, hh.omega_deg, declination_[d]};
      double rb = beam_ratio(cos_incidence(in_.site, t, plane), hh.cos_zenith);
      HourlyIrradiance rec = hh.irr;
      rec.tilted_kwh = tilted_plane(rec, rb, plane.tilt_deg,
                                    in_.site.ground_reflectance);
      out[static_cast<std::size_t>(d) * 24 + h] =
          hourly_energy(rec, t_max, in_.panel, one_panel, in_.pv_options);
    }
  }
}

std::vector<std::vector<double>> Scenario::yields_for(
    const Orientation& plane) const {
  std::vector<std::vector<double>> out(weather_year_count());
  for (std::size_t y = 0; y < out.size(); ++y)
    per_panel_yield(plane, y, out[y]);
  return out;
}

std::array<double, 4> Scenario::savings_from_yields(
    std::size_t plan, const std::vector<std::vector<double>>& yields,
    double panels) const {
  const TariffPlan& tp = in_.plans[plan];
  std::array<double, 4> sav{};
  std::vector<double> net(8760);
  for (std::size_t y = 0; y < yields.size(); ++y) {
    const std::vector<double>& yld = yields[y];
    for (std::size_t i = 0; i < 8760; ++i)
      net[i] = in_.load_kwh[i] - panels * yld[i];
    for (int q = 0; q < 4; ++q) {
      std::span<const double> slice(
          net.data() + kQuarterDayOffset[q] * 24,
          static_cast<std::size_t>(kQuarterDays[q]) * 24);
      double pv_cost =
          pv_period_cost_net(tp, slice, in_.calendar, kQuarterDayOffset[q]);
      // Per-year difference keeps the zero-panel case exactly zero.
      sav[q] += base_q_[plan][q] - pv_cost;
    }
  }
  double years = static_cast<double>(yields.size());
  for (double& s : sav) s /= years;
  return sav;
}

double Scenario::upfront_cost(double panels) const {
  if (panels <= 0.0) return 0.0;
  double watts = panels * in_.panel.rated_power_w;
  double gross = in_.rebate.unit_cost_per_w * watts;
  double value = in_.rebate.certificate_multiplier * (watts / 1000.0) *
                 in_.rebate.certificate_price;
  return std::max(0.0, gross - value);
}

double Scenario::npv_from_savings(const std::array<double, 4>& savings,
                                  double panels) const {
  std::vector<double> series(in_.econ.horizon_quarters);
  for (int q = 0; q < in_.econ.horizon_quarters; ++q)
    series[q] = savings[q % 4];
  return npv(series, inflation_q_, discount_q_, upfront_cost(panels));
}

double Scenario::npv_for(std::size_t plan, const Orientation& plane,
                         double panels) const {
  return npv_from_savings(savings_from_yields(plan, yields_for(plane), panels),
                          panels);
}

CashFlowResult Scenario::evaluate(std::size_t plan, const Orientation& plane,
                                  int panels) const {
  if (plan >= in_.plans.size())
    throw std::invalid_argument("plan index out of range");
  if (panels < 0)
    throw std::invalid_argument("panel count " + std::to_string(panels) +
                                " is negative");
  CashFlowResult out;
  out.quarterly_savings =
      savings_from_yields(plan, yields_for(plane), panels);
  out.system_cost = upfront_cost(panels);
  out.npv = npv_from_savings(out.quarterly_savings, panels);

  int horizon = in_.econ.horizon_quarters;
  std::vector<double> flows(static_cast<std::size_t>(horizon) + 1);
  flows[0] = -out.system_cost;
  double esc = 1.0;
  std::vector<double> series(horizon);
  for (int q = 1; q <= horizon; ++q) {
    esc *= 1.0 + inflation_q_;
    series[q - 1] = out.quarterly_savings[(q - 1) % 4];
    flows[q] = series[q - 1] * esc;
  }
  out.mirr_annual = mirr(flows, discount_q_, discount_q_);
  out.payback_years = payback_period(series, out.system_cost, inflation_q_);
  return out;
}

namespace {

// Cache keys pack the three coordinates as offset integers; positions the
// swarm can reach stay far below the 2^20 offset.
constexpr std::int64_t kKeyOffset = 1 << 20;

bool integral_key(double b, double g, double z, std::uint64_t& key) {
  if (std::floor(b) != b || std::floor(g) != g || std::floor(z) != z)
    return false;
  if (std::abs(b) >= kKeyOffset || std::abs(g) >= kKeyOffset ||
      std::abs(z) >= kKeyOffset)
    return false;
  auto pack = [](double v) {
    return static_cast<std::uint64_t>(static_cast<std::int64_t>(v) + kKeyOffset);
  };
  key = (pack(b) << 42) | (pack(g) << 21) | pack(z);
  return true;
}

constexpr std::size_t kYieldCacheCap = 256;

}  // namespace

PlanEvaluator::PlanEvaluator(const Scenario& scenario, std::size_t plan)
    : scn_(scenario), plan_(plan) {
  if (plan >= scenario.plan_count())
    throw std::invalid_argument("plan index out of range");
}

const std::shared_ptr<const PlanEvaluator::YieldSet>& PlanEvaluator::yields_at(
    double tilt_deg, double azimuth_deg) const {
  std::uint64_t key = 0;
  if (!integral_key(tilt_deg, azimuth_deg, 0.0, key)) {
    last_yields_ = std::make_shared<YieldSet>(
        scn_.yields_for(Orientation{tilt_deg, azimuth_deg}));
    return last_yields_;
  }
  auto it = yield_cache_.find(key);
  if (it == yield_cache_.end()) {
    if (yield_cache_.size() >= kYieldCacheCap) yield_cache_.clear();
    it = yield_cache_
             .emplace(key, std::make_shared<YieldSet>(scn_.yields_for(
                               Orientation{tilt_deg, azimuth_deg})))
             .first;
  }
  return it->second;
}

double PlanEvaluator::npv_at(double tilt_deg, double azimuth_deg,
                             double panels) const {
  std::uint64_t key = 0;
  bool cacheable = integral_key(tilt_deg, azimuth_deg, panels, key);
  if (cacheable) {
    auto it = npv_cache_.find(key);
    if (it != npv_cache_.end()) return it->second;
  }
  const auto& yields = yields_at(tilt_deg, azimuth_deg);
  double v = scn_.npv_from_savings(
      scn_.savings_from_yields(plan_, *yields, panels), panels);
  if (cacheable) npv_cache_.emplace(key, v);
  return v;
}

std::function<double(const Vec3&)> PlanEvaluator::objective() const {
  return [this](const Vec3& x) { return -npv_at(x[0], x[1], x[2]); };
}

}  // namespace pvopt
