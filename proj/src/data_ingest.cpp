#include "data_ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "insolation.hpp"

namespace pvopt {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

const int kMonthDays[12] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
const int kMonthCum[12] = {0,   31,  59,  90,  120, 151,
                           181, 212, 243, 273, 304, 334};

// Days since 1970-01-01 (Howard Hinnant's civil-date algorithm).
long days_from_civil(int y, int m, int d) {
  y -= m <= 2;
  long era = (y >= 0 ? y : y - 399) / 400;
  unsigned yoe = static_cast<unsigned>(y - era * 400);
  unsigned doy = (153u * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<long>(doe) - 719468;
}

void civil_from_days(long z, int& y, int& m, int& d) {
  z += 719468;
  long era = (z >= 0 ? z : z - 146096) / 146097;
  unsigned doe = static_cast<unsigned>(z - era * 146097);
  unsigned yoe = (doe - doe / 1460 + doe / 36524 - doe / 146096) / 365;
  y = static_cast<int>(yoe) + static_cast<int>(era) * 400;
  unsigned doy = doe - (365 * yoe + yoe / 4 - yoe / 100);
  unsigned mp = (5 * doy + 2) / 153;
  d = static_cast<int>(doy - (153 * mp + 2) / 5 + 1);
  m = static_cast<int>(mp + (mp < 10 ? 3 : -9));
  y += m <= 2;
}

int days_in_month(int y, int m) {
  if (m == 2 && is_leap(y)) return 29;
  return kMonthDays[m - 1];
}

struct RowError : IngestError {
  using IngestError::IngestError;
};

[[noreturn]] void fail_row(const std::string& name, long line,
                           const std::string& what) {
  throw IngestError(name + " line " + std::to_string(line) + ": " + what);
}

int parse_uint_field(std::string_view s, const char* what) {
  int v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || v < 0)
    throw RowError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

double parse_number_field(std::string_view s, const char* what) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size() || !std::isfinite(v))
    throw RowError(std::string("bad ") + what + " '" + std::string(s) + "'");
  return v;
}

struct Date {
  int y, m, d;
};

Date parse_date_field(std::string_view s) {
  if (s.size() != 10 || s[4] != '-' || s[7] != '-')
    throw RowError("bad date '" + std::string(s) + "' (want YYYY-MM-DD)");
  Date dt{parse_uint_field(s.substr(0, 4), "year"),
          parse_uint_field(s.substr(5, 2), "month"),
          parse_uint_field(s.substr(8, 2), "day")};
  if (dt.m < 1 || dt.m > 12)
    throw RowError("month " + std::to_string(dt.m) + " outside 1..12");
  if (dt.d < 1 || dt.d > days_in_month(dt.y, dt.m))
    throw RowError("day " + std::to_string(dt.d) + " invalid for " +
                   std::to_string(dt.y) + "-" + std::to_string(dt.m));
  return dt;
}

struct Stamp {
  Date date;
  int hour, minute;
};

Stamp parse_timestamp_field(std::string_view s) {
  if (s.size() < 16 || (s[10] != 'T' && s[10] != ' '))
    throw RowError("bad timestamp '" + std::string(s) +
                   "' (want YYYY-MM-DD HH:MM)");
  Stamp st;
  st.date = parse_date_field(s.substr(0, 10));
  if (s[13] != ':')
    throw RowError("bad timestamp '" + std::string(s) + "'");
  st.hour = parse_uint_field(s.substr(11, 2), "hour");
  st.minute = parse_uint_field(s.substr(14, 2), "minute");
  if (s.size() > 16) {
    if (s.size() != 19 || s[16] != ':' || s.substr(17) != "00")
      throw RowError("bad timestamp '" + std::string(s) +
                     "' (seconds must be :00)");
  }
  if (st.hour > 23)
    throw RowError("hour " + std::to_string(st.hour) + " outside 0..23");
  if (st.minute > 59)
    throw RowError("minute " + std::to_string(st.minute) + " outside 0..59");
  return st;
}

std::string format_slot(long slot_minutes) {
  long day = slot_minutes / 1440;
  int rem = static_cast<int>(slot_minutes % 1440);
  int y, m, d;
  civil_from_days(day, y, m, d);
  char buf[20];
  std::snprintf(buf, sizeof buf, "%04d-%02d-%02d %02d:%02d", y, m, d, rem / 60,
                rem % 60);
  return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t c = line.find(',', pos);
    if (c == std::string_view::npos) {
      out.push_back(line.substr(pos));
      break;
    }
    out.push_back(line.substr(pos, c - pos));
    pos = c + 1;
  }
  return out;
}

std::string_view strip_cr(std::string_view line) {
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  return line;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

int day_of_year_no_leap(int year, int month, int day) {
  if (month == 2 && day == 29) return 0;
  int doy = kMonthCum[month - 1] + day;
  // After Feb 29 in a leap year the ordinal shifts back by one so the
  // output calendar always has 365 days.
  (void)year;
  return doy;
}

MeterSeries ingest_meter_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open meter file " + path);
  return parse_meter_csv(in, path);
}

MeterSeries parse_meter_csv(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    throw IngestError(name + ": empty file");
  if (lower(strip_cr(line)) != "timestamp,kwh")
    throw IngestError(name + ": header must be 'timestamp,kwh', got '" +
                      std::string(strip_cr(line)) + "'");

  struct Reading {
    long slot_minutes;
    double kwh;
    long line_no;
  };
  std::vector<Reading> rows;
  long dropped_leap = 0;
  long line_no = 1;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = strip_cr(line);
    if (sv.empty()) continue;
    auto fields = split_fields(sv);
    if (fields.size() != 2)
      fail_row(name, line_no,
               "expected 2 fields, got " + std::to_string(fields.size()));
    try {
      Stamp st = parse_timestamp_field(fields[0]);
      double kwh = parse_number_field(fields[1], "kwh value");
      if (kwh < 0.0)
        throw RowError("negative reading " + std::string(fields[1]));
      long slot = days_from_civil(st.date.y, st.date.m, st.date.d) * 1440 +
                  st.hour * 60 + st.minute;
      if (st.date.m == 2 && st.date.d == 29) {
        ++dropped_leap;
        continue;
      }
      rows.push_back({slot, kwh, line_no});
    } catch (const RowError& e) {
      fail_row(name, line_no, e.what());
    }
  }

  if (rows.size() < 2)
    throw IngestError(name + ": need at least two readings");

  // Order and duplicates.
  for (std::size_t i = 1; i < rows.size(); ++i) {
    if (rows[i].slot_minutes == rows[i - 1].slot_minutes)
      fail_row(name, rows[i].line_no,
               "duplicate timestamp " + format_slot(rows[i].slot_minutes));
    if (rows[i].slot_minutes < rows[i - 1].slot_minutes)
      fail_row(name, rows[i].line_no,
               "timestamps out of order at " + format_slot(rows[i].slot_minutes));
  }

  // Interval length from the smallest spacing; all stamps must align to it.
  long min_delta = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    long d = rows[i].slot_minutes - rows[i - 1].slot_minutes;
    if (min_delta == 0 || d < min_delta) min_delta = d;
  }
  if (min_delta != 30 && min_delta != 60)
    throw IngestError(name + ": unsupported interval of " +
                      std::to_string(min_delta) + " minutes (want 30 or 60)");
  int res = static_cast<int>(min_delta);
  for (const Reading& r : rows)
    if (r.slot_minutes % res != 0)
      fail_row(name, r.line_no,
               "timestamp " + format_slot(r.slot_minutes) +
                   " not aligned to " + std::to_string(res) + "-minute intervals");

  // Expected slots: one year from the first reading, skipping Feb 29.
  long slots_per_hour = 60 / res;
  long expected_count = 8760 * slots_per_hour;
  std::vector<long> expected;
  expected.reserve(expected_count);
  long cursor = rows.front().slot_minutes;
  while (static_cast<long>(expected.size()) < expected_count) {
    long day = cursor / 1440;
    int y, m, d;
    civil_from_days(day, y, m, d);
    if (!(m == 2 && d == 29)) expected.push_back(cursor);
    cursor += res;
  }
  long last_expected = expected.back();
  if (rows.back().slot_minutes > last_expected)
    fail_row(name, rows.back().line_no,
             "data extends past one year (" +
                 format_slot(rows.back().slot_minutes) + " after " +
                 format_slot(last_expected) + ")");

  std::map<long, double> values;
  double raw_total = 0.0;
  for (const Reading& r : rows) {
    values.emplace(r.slot_minutes, r.kwh);
    raw_total += r.kwh;
  }

  MeterSeries out;
  out.report.source = name;
  out.report.resolution_minutes = res;
  out.report.rows = static_cast<long>(rows.size());
  out.report.expected_intervals = expected_count;
  out.report.present_intervals = static_cast<long>(values.size());
  out.report.coverage =
      static_cast<double>(values.size()) / static_cast<double>(expected_count);
  out.report.raw_total_kwh = raw_total;
  if (dropped_leap > 0)
    out.report.warnings.push_back("dropped " + std::to_string(dropped_leap) +
                                  " leap-day readings");

  if (out.report.coverage < 0.90) {
    std::ostringstream msg;
    msg << name << ": only " << values.size() << " of " << expected_count
        << " intervals present ("
        << static_cast<int>(out.report.coverage * 1000.0) / 10.0
        << "% coverage, 90% required)";
    throw IngestError(msg.str());
  }

  // Gap runs over the expected slots.
  struct Gap {
    std::size_t first, last;  // indices into expected
  };
  std::vector<Gap> gaps;
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (values.count(expected[i])) continue;
    if (!gaps.empty() && gaps.back().last == i - 1 &&
        !values.count(expected[i - 1]))
      gaps.back().last = i;
    else
      gaps.push_back({i, i});
  }

  const double max_gap_hours = 3.0;
  std::vector<std::string> fatal;
  for (const Gap& g : gaps) {
    double hours =
        static_cast<double>(g.last - g.first + 1) / static_cast<double>(slots_per_hour);
    if (hours > max_gap_hours) {
      char len[16];
      std::snprintf(len, sizeof len, "%.1f h", hours);
      fatal.push_back(format_slot(expected[g.first]) + " to " +
                      format_slot(expected[g.last]) + " (" + len + ")");
    }
  }
  if (!fatal.empty()) {
    std::string msg = name + ": gaps longer than 3 hours: ";
    for (std::size_t i = 0; i < fatal.size() && i < 8; ++i) {
      if (i) msg += ", ";
      msg += fatal[i];
    }
    if (fatal.size() > 8)
      msg += ", and " + std::to_string(fatal.size() - 8) + " more";
    throw IngestError(msg);
  }

  long week = 7 * 24 * 60;
  for (const Gap& g : gaps) {
    for (std::size_t i = g.first; i <= g.last; ++i) {
      long slot = expected[i];
      auto prev = values.find(slot - week);
      if (prev != values.end()) {
        values.emplace(slot, prev->second);
        continue;
      }
      auto next = values.find(slot + week);
      if (next != values.end()) {
        values.emplace(slot, next->second);
        continue;
      }
      throw IngestError(name + ": cannot fill gap at " + format_slot(slot) +
                        ": the same interval is missing in the adjacent weeks");
    }
    out.report.filled.push_back(
        {format_slot(expected[g.first]), format_slot(expected[g.last]),
         static_cast<double>(g.last - g.first + 1) /
             static_cast<double>(slots_per_hour)});
  }

  out.hourly.assign(8760, 0.0);
  for (long slot : expected) {
    long day = slot / 1440;
    int y, m, d;
    civil_from_days(day, y, m, d);
    int doy = day_of_year_no_leap(y, m, d);
    int hour = static_cast<int>((slot % 1440) / 60);
    out.hourly[static_cast<std::size_t>(doy - 1) * 24 + hour] +=
        values.at(slot);
  }
  return out;
}

WeatherData ingest_weather_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open weather file " + path);
  return parse_weather_csv(in, path);
}

WeatherData parse_weather_csv(std::istream& in, const std::string& name) {
  std::string line;
  if (!std::getline(in, line))
    throw IngestError(name + ": empty file");
  if (lower(strip_cr(line)) != "date,global_exposure_mj_per_m2,max_temp_c")
    throw IngestError(
        name +
        ": header must be 'date,global_exposure_mj_per_m2,max_temp_c', got '" +
        std::string(strip_cr(line)) + "'");

  WeatherData out;
  out.source = name;
  std::map<int, WeatherYear> years;
  long line_no = 1;
  long dropped_leap = 0;
  long skipped_blank = 0;
  long prev_serial = 0;
  bool have_prev = false;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view sv = strip_cr(line);
    if (sv.empty()) continue;
    auto fields = split_fields(sv);
    if (fields.size() != 3)
      fail_row(name, line_no,
               "expected 3 fields, got " + std::to_string(fields.size()));
    try {
      Date dt = parse_date_field(fields[0]);
      long serial = days_from_civil(dt.y, dt.m, dt.d);
      if (have_prev && serial <= prev_serial)
        throw RowError(serial == prev_serial ? "duplicate date"
                                             : "dates out of order");
      prev_serial = serial;
      have_prev = true;

      if (dt.m == 2 && dt.d == 29) {
        ++dropped_leap;
        continue;
      }
      if (fields[1].empty() || fields[2].empty()) {
        ++skipped_blank;
        continue;  // counted as a missing day
      }
      double mj = parse_number_field(fields[1], "exposure");
      if (mj < 0.0) throw RowError("negative exposure " + std::string(fields[1]));
      double tmax = parse_number_field(fields[2], "max temperature");

      WeatherYear& yr = years[dt.y];
      yr.year = dt.y;
      int doy = day_of_year_no_leap(dt.y, dt.m, dt.d);
      yr.days[doy - 1] = WeatherDayRecord{mj / 3.6, tmax};
    } catch (const RowError& e) {
      fail_row(name, line_no, e.what());
    }
  }

  if (years.empty()) throw IngestError(name + ": no usable weather rows");

  if (dropped_leap > 0)
    out.warnings.push_back("dropped " + std::to_string(dropped_leap) +
                           " leap-day rows");
  if (skipped_blank > 0)
    out.warnings.push_back(std::to_string(skipped_blank) +
                           " rows with blank fields treated as missing days");
  for (auto& [y, yr] : years) {
    long missing = std::count_if(yr.days.begin(), yr.days.end(),
                                 [](const auto& d) { return !d.has_value(); });
    if (missing > 0)
      out.warnings.push_back("year " + std::to_string(y) + ": " +
                             std::to_string(missing) + " days missing");
    out.years.push_back(std::move(yr));
  }
  return out;
}

CompleteWeatherYear typical_weather_year(
    const std::vector<WeatherYear>& years) {
  if (years.empty())
    throw IngestError("no weather years to build a typical year from");
  CompleteWeatherYear out;
  out.year = 0;
  for (int d = 0; d < 365; ++d) {
    double h = 0.0, t = 0.0;
    int n = 0;
    for (const WeatherYear& yr : years) {
      if (!yr.days[d]) continue;
      h += yr.days[d]->global_kwh;
      t += yr.days[d]->t_max_c;
      ++n;
    }
    if (n == 0)
      throw IngestError("day " + std::to_string(d + 1) +
                        " is missing from every weather year");
    out.days[d] = {h / n, t / n};
  }
  return out;
}

std::vector<CompleteWeatherYear> materialize_years(
    const std::vector<WeatherYear>& years, std::vector<std::string>& warnings) {
  CompleteWeatherYear typical = typical_weather_year(years);
  std::vector<CompleteWeatherYear> out;
  out.reserve(years.size());
  for (const WeatherYear& yr : years) {
    CompleteWeatherYear full;
    full.year = yr.year;
    int patched = 0;
    for (int d = 0; d < 365; ++d) {
      if (yr.days[d]) {
        full.days[d] = *yr.days[d];
      } else {
        full.days[d] = typical.days[d];
        ++patched;
      }
    }
    if (patched > 0)
      warnings.push_back("year " + std::to_string(yr.year) + ": " +
                         std::to_string(patched) +
                         " missing days filled from the cross-year mean");
    out.push_back(full);
  }
  return out;
}

std::vector<std::string> validate_weather(const SiteSpec& site,
                                          const CompleteWeatherYear& year) {
  std::vector<std::string> warnings;
  for (int d = 0; d < 365; ++d) {
    double ho = daily_extraterrestrial(site, d + 1);
    if (year.days[d].global_kwh > 1.05 * ho) {
      char buf[96];
      std::snprintf(buf, sizeof buf,
                    "day %d: exposure %.2f kWh/m^2 exceeds the clear-sky "
                    "ceiling %.2f",
                    d + 1, year.days[d].global_kwh, ho);
      warnings.push_back(buf);
    }
  }
  return warnings;
}

}  // namespace pvopt
