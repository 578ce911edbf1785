// Meter and weather file ingestion.
//
// Meter files are interval-start readings at 30 or 60 minute resolution,
// normalized onto an 8760-hour year indexed by (day_of_year - 1) * 24 + hour.
// Feb 29 readings are dropped.  Short gaps (up to 3 hours) are filled from
// the same interval one week earlier (or later when the history is missing);
// anything longer, or coverage below 90%, is rejected.
//
// Weather files carry one row per day: global horizontal exposure in MJ/m^2
// and the daily maximum temperature.  Multiple calendar years may be stacked
// in one file.
#pragma once

#include <array>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "solar_geometry.hpp"

namespace pvopt {

struct IngestError : ValidationError {
  using ValidationError::ValidationError;
};

struct FilledSpan {
  std::string start;  // timestamp of the first missing interval
  std::string end;    // timestamp of the last missing interval
  double hours = 0.0;
};

struct MeterReport {
  std::string source;
  int resolution_minutes = 60;
  long rows = 0;
  long expected_intervals = 0;
  long present_intervals = 0;
  double coverage = 1.0;  // before gap filling
  double raw_total_kwh = 0.0;
  std::vector<FilledSpan> filled;
  std::vector<std::string> warnings;
};

struct MeterSeries {
  std::vector<double> hourly;  // 8760 values
  MeterReport report;
};

MeterSeries ingest_meter_csv(const std::string& path);
MeterSeries parse_meter_csv(std::istream& in, const std::string& name);

struct WeatherDayRecord {
  double global_kwh = 0.0;  // horizontal daily exposure
  double t_max_c = 0.0;
};

struct WeatherYear {
  int year = 0;
  std::array<std::optional<WeatherDayRecord>, 365> days;
};

// A year with every day populated, ready for simulation.
struct CompleteWeatherYear {
  int year = 0;  // 0 marks a synthetic (averaged) year
  std::array<WeatherDayRecord, 365> days;
};

struct WeatherData {
  std::vector<WeatherYear> years;
  std::string source;
  std::vector<std::string> warnings;
};

WeatherData ingest_weather_csv(const std::string& path);
WeatherData parse_weather_csv(std::istream& in, const std::string& name);

// Day-by-day arithmetic mean across the years each day appears in.  Throws
// when some day is missing from every year.
CompleteWeatherYear typical_weather_year(const std::vector<WeatherYear>& years);

// Each input year completed by patching its missing days from the
// cross-year mean; appends a warning per patched year.
std::vector<CompleteWeatherYear> materialize_years(
    const std::vector<WeatherYear>& years, std::vector<std::string>& warnings);

// Physical plausibility warnings: days whose measured exposure exceeds the
// extraterrestrial ceiling by more than 5%.
std::vector<std::string> validate_weather(const SiteSpec& site,
                                          const CompleteWeatherYear& year);

// Calendar day-of-year with Feb 29 folded away: returns 1..365, or 0 for
// Feb 29 itself.
int day_of_year_no_leap(int year, int month, int day);

}  // namespace pvopt
