#include "config.hpp"

#include <filesystem>
#include <fstream>
#include <initializer_list>

#include <json.hpp>

namespace pvopt {

namespace {

using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

void check_keys(const json& obj, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!obj.is_object())
    throw ValidationError(where + " must be a JSON object");
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        ok = true;
        break;
      }
    if (!ok)
      throw ValidationError(where + ": unknown key '" + it.key() + "'");
  }
}

double get_num(const json& obj, const std::string& where, const char* key,
               double fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number())
    throw ValidationError(where + "." + key + " must be a number");
  return v.get<double>();
}

double require_num(const json& obj, const std::string& where, const char* key) {
  if (!obj.contains(key))
    throw ValidationError(where + " is missing required key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_number())
    throw ValidationError(where + "." + key + " must be a number");
  return v.get<double>();
}

int get_int(const json& obj, const std::string& where, const char* key,
            int fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_number_integer())
    throw ValidationError(where + "." + key + " must be an integer");
  return v.get<int>();
}

std::string get_str(const json& obj, const std::string& where, const char* key,
                    const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string())
    throw ValidationError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

std::string require_str(const json& obj, const std::string& where,
                        const char* key) {
  if (!obj.contains(key))
    throw ValidationError(where + " is missing required key '" + key + "'");
  const json& v = obj.at(key);
  if (!v.is_string())
    throw ValidationError(where + "." + key + " must be a string");
  return v.get<std::string>();
}

std::string resolve(const std::filesystem::path& base_dir,
                    const std::string& p) {
  std::filesystem::path fp(p);
  if (fp.is_absolute()) return fp.string();
  return (base_dir / fp).string();
}

int weekday_index(const std::string& name, const std::string& where) {
  static const char* names[7] = {"monday",   "tuesday", "wednesday",
                                 "thursday", "friday",  "saturday",
                                 "sunday"};
  for (int i = 0; i < 7; ++i)
    if (name == names[i]) return i;
  throw ValidationError(where + ": unknown weekday '" + name + "'");
}

void parse_bounds_axis(const json& obj, const std::string& where,
                       const char* key, double& lo, double& hi) {
  if (!obj.contains(key)) return;
  const json& v = obj.at(key);
  if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
    throw ValidationError(where + "." + key + " must be [min, max]");
  lo = v[0].get<double>();
  hi = v[1].get<double>();
}

}  // namespace

TariffPlan load_tariff_json(const std::string& path) {
  json j = load_json_file(path);
  check_keys(j, path,
             {"id", "retailer", "kind", "supply_charge_per_quarter",
              "feed_in_rate", "rates", "note"});
  TariffPlan plan;
  plan.id = require_str(j, path, "id");
  plan.retailer = get_str(j, path, "retailer", "");
  plan.kind = require_str(j, path, "kind");
  plan.supply_charge = require_num(j, path, "supply_charge_per_quarter");
  plan.feed_in_rate = require_num(j, path, "feed_in_rate");
  if (j.contains("note")) plan.note = get_str(j, path, "note", "");

  if (!j.contains("rates") || !j.at("rates").is_array())
    throw ValidationError(path + ": 'rates' must be an array of windows");
  for (const json& w : j.at("rates")) {
    std::string where = path + ".rates";
    check_keys(w, where, {"days", "start", "end", "rate"});
    RateWindow rw;
    std::string days = get_str(w, where, "days", "all");
    if (days == "all")
      rw.days = DaySet::all;
    else if (days == "weekday")
      rw.days = DaySet::weekday;
    else if (days == "weekend")
      rw.days = DaySet::weekend;
    else
      throw ValidationError(where + ": unknown day set '" + days + "'");
    rw.start_hour = get_int(w, where, "start", 0);
    rw.end_hour = get_int(w, where, "end", 24);
    rw.rate = require_num(w, where, "rate");
    plan.windows.push_back(rw);
  }

  try {
    plan.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return plan;
}

RunConfig load_run_config(const std::string& path) {
  json j = load_json_file(path);
  check_keys(j, path,
             {"site", "panel", "pv_model", "rebate", "economics", "meter",
              "weather", "tariffs", "calendar", "bounds", "swarm"});
  std::filesystem::path base_dir =
      std::filesystem::path(path).parent_path();

  RunConfig cfg;

  if (!j.contains("site"))
    throw ValidationError(path + " is missing required key 'site'");
  {
    const json& s = j.at("site");
    std::string where = path + ".site";
    check_keys(s, where,
               {"latitude", "longitude", "standard_meridian",
                "ground_reflectance"});
    cfg.site.latitude_deg = require_num(s, where, "latitude");
    cfg.site.longitude_deg = require_num(s, where, "longitude");
    cfg.site.standard_meridian_deg = require_num(s, where, "standard_meridian");
    cfg.site.ground_reflectance =
        get_num(s, where, "ground_reflectance", 0.2);
  }

  if (j.contains("panel")) {
    const json& p = j.at("panel");
    std::string where = path + ".panel";
    check_keys(p, where,
               {"rated_power_w", "area_m2", "eta_stc", "t_noct_c",
                "mu_mpp_per_c"});
    cfg.panel.rated_power_w =
        get_num(p, where, "rated_power_w", cfg.panel.rated_power_w);
    cfg.panel.area_m2 = get_num(p, where, "area_m2", cfg.panel.area_m2);
    cfg.panel.eta_stc = get_num(p, where, "eta_stc", cfg.panel.eta_stc);
    cfg.panel.t_noct_c = get_num(p, where, "t_noct_c", cfg.panel.t_noct_c);
    cfg.panel.mu_mpp_per_c =
        get_num(p, where, "mu_mpp_per_c", cfg.panel.mu_mpp_per_c);
  }

  if (j.contains("pv_model")) {
    const json& p = j.at("pv_model");
    std::string where = path + ".pv_model";
    check_keys(p, where, {"mu_mode", "temp_ref", "bop_efficiency"});
    std::string mu = get_str(p, where, "mu_mode", "normalized");
    if (mu == "normalized")
      cfg.pv_options.mu_mode = MuMode::normalized;
    else if (mu == "raw")
      cfg.pv_options.mu_mode = MuMode::raw;
    else
      throw ValidationError(where + ": unknown mu_mode '" + mu + "'");
    std::string tr = get_str(p, where, "temp_ref", "ambient");
    if (tr == "ambient")
      cfg.pv_options.temp_ref = TempRefMode::ambient;
    else if (tr == "stc25")
      cfg.pv_options.temp_ref = TempRefMode::stc25;
    else
      throw ValidationError(where + ": unknown temp_ref '" + tr + "'");
    cfg.bop_efficiency = get_num(p, where, "bop_efficiency", 0.90);
  }

  if (j.contains("rebate")) {
    const json& r = j.at("rebate");
    std::string where = path + ".rebate";
    check_keys(r, where,
               {"unit_cost_per_w", "certificate_multiplier",
                "certificate_price"});
    cfg.rebate.unit_cost_per_w =
        get_num(r, where, "unit_cost_per_w", cfg.rebate.unit_cost_per_w);
    cfg.rebate.certificate_multiplier = get_num(
        r, where, "certificate_multiplier", cfg.rebate.certificate_multiplier);
    cfg.rebate.certificate_price =
        get_num(r, where, "certificate_price", cfg.rebate.certificate_price);
  }

  if (j.contains("economics")) {
    const json& e = j.at("economics");
    std::string where = path + ".economics";
    check_keys(e, where, {"discount_rate", "inflation_rate", "horizon_years"});
    cfg.econ.discount_rate_annual =
        get_num(e, where, "discount_rate", cfg.econ.discount_rate_annual);
    cfg.econ.inflation_rate_annual =
        get_num(e, where, "inflation_rate", cfg.econ.inflation_rate_annual);
    int years = get_int(e, where, "horizon_years", 15);
    if (years < 1)
      throw ValidationError(where + ".horizon_years must be positive");
    cfg.econ.horizon_quarters = 4 * years;
  }

  if (!j.contains("meter"))
    throw ValidationError(path + " is missing required key 'meter'");
  {
    const json& m = j.at("meter");
    std::string where = path + ".meter";
    check_keys(m, where, {"path", "time"});
    cfg.meter_path = resolve(base_dir, require_str(m, where, "path"));
    std::string t = get_str(m, where, "time", "civil");
    if (t == "civil")
      cfg.meter_time = TimeConvention::civil;
    else if (t == "solar")
      cfg.meter_time = TimeConvention::solar;
    else
      throw ValidationError(where + ": unknown time convention '" + t + "'");
  }

  if (!j.contains("weather"))
    throw ValidationError(path + " is missing required key 'weather'");
  {
    const json& w = j.at("weather");
    std::string where = path + ".weather";
    check_keys(w, where, {"path", "mode"});
    cfg.weather_path = resolve(base_dir, require_str(w, where, "path"));
    std::string mode = get_str(w, where, "mode", "typical");
    if (mode == "typical")
      cfg.weather_mode = WeatherMode::typical;
    else if (mode == "per-year")
      cfg.weather_mode = WeatherMode::per_year;
    else
      throw ValidationError(where + ": unknown weather mode '" + mode + "'");
  }

  if (!j.contains("tariffs") || !j.at("tariffs").is_array() ||
      j.at("tariffs").empty())
    throw ValidationError(path +
                          ": 'tariffs' must be a non-empty array of paths");
  for (const json& t : j.at("tariffs")) {
    if (!t.is_string())
      throw ValidationError(path + ".tariffs entries must be strings");
    cfg.tariff_paths.push_back(resolve(base_dir, t.get<std::string>()));
  }

  if (j.contains("calendar")) {
    const json& c = j.at("calendar");
    std::string where = path + ".calendar";
    check_keys(c, where, {"year_start_weekday"});
    cfg.calendar.year_start_weekday = weekday_index(
        get_str(c, where, "year_start_weekday", "monday"), where);
  }

  if (j.contains("bounds")) {
    const json& b = j.at("bounds");
    std::string where = path + ".bounds";
    check_keys(b, where, {"tilt", "azimuth", "panels"});
    Vec3 lo = cfg.bounds.lower, hi = cfg.bounds.upper;
    parse_bounds_axis(b, where, "tilt", lo[0], hi[0]);
    parse_bounds_axis(b, where, "azimuth", lo[1], hi[1]);
    parse_bounds_axis(b, where, "panels", lo[2], hi[2]);
    try {
      cfg.bounds = ConstraintSet::bounds(lo[0], hi[0], lo[1], hi[1], lo[2], hi[2]);
    } catch (const std::invalid_argument& e) {
      throw ValidationError(where + ": " + e.what());
    }
  }

  if (j.contains("swarm")) {
    const json& s = j.at("swarm");
    std::string where = path + ".swarm";
    check_keys(s, where,
               {"particles", "iterations", "seed", "tolerance", "stall_window",
                "discretize"});
    cfg.swarm.particle_count =
        get_int(s, where, "particles", cfg.swarm.particle_count);
    cfg.swarm.max_iterations =
        get_int(s, where, "iterations", cfg.swarm.max_iterations);
    if (s.contains("seed")) {
      const json& v = s.at("seed");
      if (!v.is_number_unsigned() && !v.is_number_integer())
        throw ValidationError(where + ".seed must be an integer");
      cfg.swarm.seed = v.get<std::uint64_t>();
    }
    cfg.swarm.tolerance = get_num(s, where, "tolerance", cfg.swarm.tolerance);
    cfg.swarm.stall_window =
        get_int(s, where, "stall_window", cfg.swarm.stall_window);
    if (s.contains("discretize")) {
      if (!s.at("discretize").is_boolean())
        throw ValidationError(where + ".discretize must be a boolean");
      cfg.swarm.discretize = s.at("discretize").get<bool>();
    }
  }

  try {
    cfg.site.validate();
    cfg.panel.validate();
    cfg.econ.validate();
    cfg.swarm.validate();
  } catch (const std::invalid_argument& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return cfg;
}

}  // namespace pvopt
