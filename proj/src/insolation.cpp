#include "insolation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pvopt {

double erbs_daily_diffuse_fraction(double clearness_index,
                                   double sunset_hour_angle_deg) {
  if (!(clearness_index >= 0.0 && clearness_index <= 1.05))
    throw std::invalid_argument("clearness index " +
                                std::to_string(clearness_index) +
                                " outside [0, 1.05]");
  double k = clearness_index;
  double f;
  if (sunset_hour_angle_deg <= 81.4) {
    if (k < 0.715)
      f = 1.0 - 0.2727 * k + 2.4495 * k * k - 11.9514 * k * k * k +
          9.3879 * k * k * k * k;
    else
      f = 0.143;
  } else {
    if (k < 0.722)
      f = 1.0 + 0.2832 * k - 2.5557 * k * k + 0.8448 * k * k * k;
    else
      f = 0.175;
  }
  return std::min(f, 1.0);
}

namespace {

// Shared geometric factor of the Collares-Pereira and Liu-Jordan profiles:
// (pi/24) (cos w - cos w_s) / (sin w_s - (pi w_s / 180) cos w_s).
double profile_base(double omega_deg, double omega_s_deg, double* cw_out) {
  double cw = std::cos(deg2rad(omega_deg));
  double cws = std::cos(deg2rad(omega_s_deg));
  double sws = std::sin(deg2rad(omega_s_deg));
  double denom = sws - deg2rad(omega_s_deg) * cws;
  if (cw_out) *cw_out = cw;
  return (kPi / 24.0) * (cw - cws) / denom;
}

}  // namespace

double hourly_global_ratio(double omega_deg, double omega_s_deg) {
  if (std::abs(omega_deg) >= omega_s_deg) return 0.0;
  double cw;
  double base = profile_base(omega_deg, omega_s_deg, &cw);
  double ws_shift = deg2rad(omega_s_deg - 60.0);
  double a = 0.409 + 0.5016 * std::sin(ws_shift);
  double b = 0.6609 - 0.4767 * std::sin(ws_shift);
  return std::max(0.0, (a + b * cw) * base);
}

double hourly_diffuse_ratio(double omega_deg, double omega_s_deg) {
  if (std::abs(omega_deg) >= omega_s_deg) return 0.0;
  return std::max(0.0, profile_base(omega_deg, omega_s_deg, nullptr));
}

double daily_extraterrestrial(const SiteSpec& site, int day_of_year) {
  double delta = declination(day_of_year);
  double total = 0.0;
  for (int h = 0; h < 24; ++h) {
    SolarInstant t{day_of_year, 15.0 * (h + 0.5) - 180.0, delta};
    total += extraterrestrial_hourly(site, t);
  }
  return total;
}

DailyInsolation make_daily_insolation(const SiteSpec& site, int day_of_year,
                                      double global_kwh) {
  if (global_kwh < 0.0)
    throw std::invalid_argument("daily global insolation " +
                                std::to_string(global_kwh) + " is negative");
  DailyInsolation out;
  out.day_of_year = day_of_year;
  out.global_kwh = global_kwh;
  if (global_kwh == 0.0) return out;

  double ho = daily_extraterrestrial(site, day_of_year);
  if (ho <= 0.0) {
    // Polar night: measured energy cannot be split; treat as all diffuse.
    out.diffuse_kwh = global_kwh;
    return out;
  }
  out.clearness_index = std::clamp(global_kwh / ho, 0.0, 1.05);
  double ws =
      sunset_hour_angle(site.latitude_deg, declination(day_of_year)).degrees;
  double frac = erbs_daily_diffuse_fraction(out.clearness_index, ws);
  out.diffuse_kwh = frac * global_kwh;
  out.beam_kwh = std::max(0.0, global_kwh - out.diffuse_kwh);
  return out;
}

std::array<HorizontalHour, 24> decompose_day_horizontal(
    const DailyInsolation& day, const SiteSpec& site,
    TimeConvention convention) {
  std::array<HorizontalHour, 24> out{};
  for (int h = 0; h < 24; ++h) out[h].irr.hour_index = h;
  if (day.global_kwh <= 0.0) return out;

  double delta = declination(day.day_of_year);
  SunsetHourAngle ws = sunset_hour_angle(site.latitude_deg, delta);
  if (ws.degrees <= 0.0) return out;

  for (int h = 0; h < 24; ++h) {
    double mid = h + 0.5;
    double omega = convention == TimeConvention::civil
                       ? solar_hour_angle(mid, day.day_of_year, site)
                       : 15.0 * (mid - 12.0);
    if (std::abs(omega) >= ws.degrees) continue;

    SolarInstant t{day.day_of_year, omega, delta};
    double ctz = cos_zenith(site, t);
    if (ctz <= 0.0) continue;

    HorizontalHour& hh = out[h];
    hh.omega_deg = omega;
    hh.cos_zenith = ctz;
    hh.daylight = true;
    HourlyIrradiance& rec = hh.irr;
    rec.global_kwh = hourly_global_ratio(omega, ws.degrees) * day.global_kwh;
    rec.diffuse_kwh =
        hourly_diffuse_ratio(omega, ws.degrees) * day.diffuse_kwh;
    rec.beam_kwh = rec.global_kwh - rec.diffuse_kwh;
    if (rec.beam_kwh < 0.0) {
      // Profile mismatch near sunrise/sunset: fold the excess into diffuse.
      rec.diffuse_kwh = rec.global_kwh;
      rec.beam_kwh = 0.0;
    }
    rec.extraterrestrial_kwh = extraterrestrial_hourly(site, t);
  }
  return out;
}

std::array<HourlyIrradiance, 24> decompose_day(const DailyInsolation& day,
                                               const SiteSpec& site,
                                               const Orientation& plane,
                                               TimeConvention convention) {
  std::array<HorizontalHour, 24> horiz =
      decompose_day_horizontal(day, site, convention);
  std::array<HourlyIrradiance, 24> out{};
  double delta = declination(day.day_of_year);
  for (int h = 0; h < 24; ++h) {
    out[h] = horiz[h].irr;
    if (!horiz[h].daylight || out[h].global_kwh <= 0.0) continue;
    SolarInstant t{day.day_of_year, horiz[h].omega_deg, delta};
    double rb = beam_ratio(cos_incidence(site, t, plane), horiz[h].cos_zenith);
    out[h].tilted_kwh =
        tilted_plane(out[h], rb, plane.tilt_deg, site.ground_reflectance);
  }
  return out;
}

double tilted_plane(const HourlyIrradiance& hour, double beam_ratio,
                    double tilt_deg, double ground_reflectance) {
  double total = hour.global_kwh;
  if (total <= 0.0) return 0.0;

  double ai = hour.extraterrestrial_kwh > 0.0
                  ? std::clamp(hour.beam_kwh / hour.extraterrestrial_kwh, 0.0, 1.0)
                  : 0.0;
  double f = hour.beam_kwh > 0.0 ? std::sqrt(hour.beam_kwh / total) : 0.0;
  double cb = std::cos(deg2rad(tilt_deg));
  double sh = std::sin(deg2rad(tilt_deg) / 2.0);

  double tilted = (hour.beam_kwh + ai * hour.diffuse_kwh) * beam_ratio +
                  (1.0 - ai) * hour.diffuse_kwh * ((1.0 + cb) / 2.0) *
                      (1.0 + f * sh * sh * sh) +
                  total * ground_reflectance * ((1.0 - cb) / 2.0);
  return std::max(0.0, tilted);
}

}  // namespace pvopt
