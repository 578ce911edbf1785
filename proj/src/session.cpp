#include "session.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <future>
#include <set>

namespace pvopt {

void Session::load(const std::string& config_path) {
  cfg_ = load_run_config(config_path);
  scenario_.reset();
  baseline_npv_.reset();
  outputs_.clear();

  MeterSeries meter = ingest_meter_csv(cfg_.meter_path);
  WeatherData weather = ingest_weather_csv(cfg_.weather_path);

  ScenarioInputs in;
  in.site = cfg_.site;
  in.panel = cfg_.panel;
  in.pv_options = cfg_.pv_options;
  in.bop_efficiency = cfg_.bop_efficiency;
  in.rebate = cfg_.rebate;
  in.econ = cfg_.econ;
  in.calendar = cfg_.calendar;
  in.time_convention = cfg_.meter_time;
  in.load_kwh = std::move(meter.hourly);

  std::vector<std::string> weather_warnings;
  if (cfg_.weather_mode == WeatherMode::typical)
    in.weather.push_back(typical_weather_year(weather.years));
  else
    in.weather = materialize_years(weather.years, weather_warnings);
  for (const CompleteWeatherYear& y : in.weather)
    for (const std::string& w : validate_weather(cfg_.site, y))
      weather_warnings.push_back(
          y.year == 0 ? w : "year " + std::to_string(y.year) + ": " + w);

  std::set<std::string> seen_ids;
  for (const std::string& path : cfg_.tariff_paths) {
    TariffPlan plan = load_tariff_json(path);
    if (!seen_ids.insert(plan.id).second)
      throw ValidationError("duplicate tariff plan id '" + plan.id + "' (" +
                            path + ")");
    in.plans.push_back(std::move(plan));
  }

  try {
    scenario_.emplace(std::move(in));
  } catch (const std::invalid_argument& e) {
    throw ValidationError(e.what());
  }
  ingest_report_ =
      render_ingest_report(meter.report, weather, weather_warnings);
}

void Session::require_loaded() const {
  if (!scenario_) throw std::logic_error("no configuration loaded");
}

const Scenario& Session::scenario() const {
  require_loaded();
  return *scenario_;
}

void Session::set_seed(std::uint64_t seed) {
  cfg_.swarm.seed = seed;
  baseline_npv_.reset();
}

std::size_t Session::plan_index(const std::string& id) const {
  const auto& plans = scenario_->in().plans;
  for (std::size_t i = 0; i < plans.size(); ++i)
    if (plans[i].id == id) return i;
  std::string known;
  for (const TariffPlan& p : plans) {
    if (!known.empty()) known += ", ";
    known += p.id;
  }
  throw std::invalid_argument("unknown plan id '" + id + "' (have: " + known +
                              ")");
}

Session::PlanOutcome Session::optimize_plan(std::size_t plan) const {
  PlanEvaluator eval(*scenario_, plan);
  PlanOutcome out;
  out.opt = optimize(eval.objective(), cfg_.bounds, cfg_.swarm);
  if (out.opt.feasible_found) {
    Orientation plane{out.opt.best_position[0], out.opt.best_position[1]};
    int panels = static_cast<int>(std::lround(out.opt.best_position[2]));
    out.flows = scenario_->evaluate(plan, plane, panels);
  }
  return out;
}

double Session::baseline_npv() {
  if (!baseline_npv_) {
    PlanOutcome base = optimize_plan(scenario_->base_plan_index());
    if (!base.opt.feasible_found)
      throw NoFeasibleError(
          "no feasible point within the configured bounds for plan " +
          scenario_->base_plan().id);
    baseline_npv_ = std::max(0.0, base.flows.npv);
  }
  return *baseline_npv_;
}

PlanRow Session::make_row(std::size_t plan, const OptimizeResult& opt,
                          const CashFlowResult& flows, double baseline) const {
  const TariffPlan& tp = scenario_->in().plans[plan];
  PlanRow row;
  row.plan_id = tp.id;
  row.retailer = tp.retailer;
  row.kind = tp.kind;
  row.is_base = plan == scenario_->base_plan_index();
  row.note = tp.note;
  row.panels = static_cast<int>(std::lround(opt.best_position[2]));
  row.size_kw = row.panels * scenario_->in().panel.rated_power_w / 1000.0;
  row.tilt_deg = opt.best_position[0];
  row.azimuth_deg = opt.best_position[1];
  row.npv = flows.npv;
  row.viable = flows.npv > 0.0;
  row.plan_saving = flows.npv - baseline;
  row.mirr_annual = flows.mirr_annual;
  row.payback_years = flows.payback_years;
  row.system_cost = flows.system_cost;
  row.quarterly_savings = flows.quarterly_savings;
  return row;
}

void Session::run_optimize() {
  require_loaded();
  outputs_.clear();

  std::size_t n = scenario_->plan_count();
  std::vector<std::future<PlanOutcome>> futures;
  futures.reserve(n);
  for (std::size_t p = 0; p < n; ++p)
    futures.push_back(std::async(std::launch::async,
                                 [this, p] { return optimize_plan(p); }));
  std::vector<PlanOutcome> outcomes;
  outcomes.reserve(n);
  for (auto& f : futures) outcomes.push_back(f.get());

  for (std::size_t p = 0; p < n; ++p)
    if (!outcomes[p].opt.feasible_found)
      throw NoFeasibleError(
          "no feasible point within the configured bounds for plan " +
          scenario_->in().plans[p].id);

  std::size_t base = scenario_->base_plan_index();
  double baseline = std::max(0.0, outcomes[base].flows.npv);
  baseline_npv_ = baseline;

  std::vector<PlanRow> rows;
  std::vector<ConvergenceTrace> traces;
  for (std::size_t p = 0; p < n; ++p) {
    rows.push_back(make_row(p, outcomes[p].opt, outcomes[p].flows, baseline));
    traces.push_back(
        {scenario_->in().plans[p].id, outcomes[p].opt.history});
  }

  outputs_.emplace_back("report.txt",
                        render_report_text(rows, scenario_->base_plan().id));
  outputs_.emplace_back("report.csv", render_report_csv(rows));
  outputs_.emplace_back("convergence.csv", render_convergence_csv(traces));
  outputs_.emplace_back("ingest_report.txt", ingest_report_);
}

void Session::run_evaluate(const std::string& plan_id, double tilt_deg,
                           double azimuth_deg, int panels) {
  require_loaded();
  std::size_t idx = plan_index(plan_id);

  Vec3 x{tilt_deg, azimuth_deg, static_cast<double>(panels)};
  static const char* axis[3] = {"tilt", "azimuth", "panels"};
  for (std::size_t j = 0; j < 3; ++j)
    if (cfg_.bounds.violation(j, x) > 0.0)
      throw std::invalid_argument(
          std::string(axis[j]) + " " + std::to_string(x[j]) +
          " outside the configured bounds [" +
          std::to_string(cfg_.bounds.lower[j]) + ", " +
          std::to_string(cfg_.bounds.upper[j]) + "]");

  CashFlowResult flows =
      scenario_->evaluate(idx, Orientation{tilt_deg, azimuth_deg}, panels);
  double baseline = baseline_npv();
  outputs_.clear();

  const TariffPlan& tp = scenario_->in().plans[idx];
  PlanRow row;
  row.plan_id = tp.id;
  row.retailer = tp.retailer;
  row.kind = tp.kind;
  row.is_base = idx == scenario_->base_plan_index();
  row.note = tp.note;
  row.panels = panels;
  row.size_kw = panels * scenario_->in().panel.rated_power_w / 1000.0;
  row.tilt_deg = tilt_deg;
  row.azimuth_deg = azimuth_deg;
  row.npv = flows.npv;
  row.viable = true;  // explicit candidate: always report the numbers
  row.plan_saving = flows.npv - baseline;
  row.mirr_annual = flows.mirr_annual;
  row.payback_years = flows.payback_years;
  row.system_cost = flows.system_cost;
  row.quarterly_savings = flows.quarterly_savings;

  outputs_.emplace_back(
      "report.txt", render_report_text({row}, scenario_->base_plan().id));
  outputs_.emplace_back("report.csv", render_report_csv({row}));
  outputs_.emplace_back("ingest_report.txt", ingest_report_);
}

void Session::run_sweep_size(const std::string& plan_id, double tilt_deg,
                             double azimuth_deg, int panels_min,
                             int panels_max) {
  require_loaded();
  std::size_t idx = plan_index(plan_id);
  if (panels_min < 0 || panels_max < panels_min)
    throw std::invalid_argument("panel range " + std::to_string(panels_min) +
                                ".." + std::to_string(panels_max) +
                                " is empty or negative");

  auto yields = scenario_->yields_for(Orientation{tilt_deg, azimuth_deg});
  std::vector<SizeSweepRow> rows;
  for (int z = panels_min; z <= panels_max; ++z) {
    double npv = scenario_->npv_from_savings(
        scenario_->savings_from_yields(idx, yields, z), z);
    rows.push_back({z, z * scenario_->in().panel.rated_power_w / 1000.0, npv});
  }
  outputs_.clear();
  outputs_.emplace_back("sweep_size.csv",
                        render_size_sweep_csv(plan_id, rows));
  outputs_.emplace_back("ingest_report.txt", ingest_report_);
}

void Session::run_sweep_orientation(const std::string& plan_id, int panels,
                                    double tilt_min, double tilt_max,
                                    double tilt_step, double az_min,
                                    double az_max, double az_step) {
  require_loaded();
  std::size_t idx = plan_index(plan_id);
  if (panels < 0)
    throw std::invalid_argument("panel count " + std::to_string(panels) +
                                " is negative");
  if (!(tilt_step > 0.0) || !(az_step > 0.0))
    throw std::invalid_argument("sweep steps must be positive");
  if (tilt_max < tilt_min || az_max < az_min)
    throw std::invalid_argument("sweep ranges are empty");

  int nt = static_cast<int>(std::floor((tilt_max - tilt_min) / tilt_step + 1e-9)) + 1;
  int na = static_cast<int>(std::floor((az_max - az_min) / az_step + 1e-9)) + 1;
  std::vector<OrientationSweepRow> rows;
  rows.reserve(static_cast<std::size_t>(nt) * na);
  for (int i = 0; i < nt; ++i) {
    double tilt = tilt_min + i * tilt_step;
    for (int k = 0; k < na; ++k) {
      double az = az_min + k * az_step;
      auto yields = scenario_->yields_for(Orientation{tilt, az});
      double npv = scenario_->npv_from_savings(
          scenario_->savings_from_yields(idx, yields, panels), panels);
      rows.push_back({tilt, az, npv});
    }
  }
  outputs_.clear();
  outputs_.emplace_back("sweep_orientation.csv",
                        render_orientation_sweep_csv(plan_id, rows));
  outputs_.emplace_back("ingest_report.txt", ingest_report_);
}

void Session::run_validate() {
  require_loaded();
  outputs_.clear();
  outputs_.emplace_back("ingest_report.txt", ingest_report_);
}

void Session::write_outputs(const std::string& dir) const {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec)
    throw IoError("cannot create output directory " + dir + ": " +
                  ec.message());
  for (const auto& [name, text] : outputs_) {
    std::filesystem::path p = std::filesystem::path(dir) / name;
    std::ofstream out(p);
    if (!out) throw IoError("cannot write " + p.string());
    out << text;
    if (!out) throw IoError("error writing " + p.string());
  }
}

}  // namespace pvopt
