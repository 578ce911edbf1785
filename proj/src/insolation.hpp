// Decomposition of daily global insolation into hourly beam and diffuse
// components, and transposition onto a tilted plane.
//
// Pipeline per day: clearness index from daily extraterrestrial irradiation,
// Erbs daily diffuse fraction, Collares-Pereira / Liu-Jordan hourly profiles,
// then an anisotropic-sky (HDKR) tilted-plane conversion per hour.
#pragma once

#include <array>

#include "solar_geometry.hpp"

namespace pvopt {

enum class TimeConvention {
  civil,  // hour buckets are clock hours; hour angle via longitude + EoT
  solar,  // hour buckets are already solar hours
};

struct DailyInsolation {
  int day_of_year = 1;
  double global_kwh = 0.0;   // H, horizontal, kWh/m^2
  double diffuse_kwh = 0.0;  // H_d
  double beam_kwh = 0.0;     // H_b = H - H_d
  double clearness_index = 0.0;
};

struct HourlyIrradiance {
  int hour_index = 0;  // 0..23, start of the local hour
  double global_kwh = 0.0;
  double beam_kwh = 0.0;
  double diffuse_kwh = 0.0;
  double tilted_kwh = 0.0;
  double extraterrestrial_kwh = 0.0;
};

// Erbs et al. daily diffuse fraction H_d/H from clearness index K_T, with the
// sunset-season split at omega_s = 81.4 degrees.  Result clamped to <= 1.
double erbs_daily_diffuse_fraction(double clearness_index,
                                   double sunset_hour_angle_deg);

// Collares-Pereira & Rabl ratio r_t = I/H for the hour centred on omega.
// Zero outside daylight; clamped >= 0 near sunrise/sunset.
double hourly_global_ratio(double omega_deg, double omega_s_deg);

// Liu & Jordan ratio r_d = I_d/H_d, same shape without the (a + b cos w) term.
double hourly_diffuse_ratio(double omega_deg, double omega_s_deg);

// Daily horizontal extraterrestrial irradiation H_o, kWh/m^2, accumulated
// from the hourly integral on the solar-hour grid.
double daily_extraterrestrial(const SiteSpec& site, int day_of_year);

// Clearness index (clamped to [0, 1.05]) and Erbs split for one day.
DailyInsolation make_daily_insolation(const SiteSpec& site, int day_of_year,
                                      double global_kwh);

// Orientation-independent part of the hourly profile: horizontal components
// plus the sun geometry needed to transpose onto any plane later.
struct HorizontalHour {
  HourlyIrradiance irr;    // tilted_kwh left 0
  double omega_deg = 0.0;
  double cos_zenith = 0.0;
  bool daylight = false;
};

std::array<HorizontalHour, 24> decompose_day_horizontal(
    const DailyInsolation& day, const SiteSpec& site,
    TimeConvention convention = TimeConvention::civil);

// Hourly profile for one day on the given plane.  Night hours are all-zero.
std::array<HourlyIrradiance, 24> decompose_day(
    const DailyInsolation& day, const SiteSpec& site, const Orientation& plane,
    TimeConvention convention = TimeConvention::civil);

// HDKR tilted-plane irradiation for one hour, kWh/m^2, given the beam ratio
// for that hour.  Horizontal-beam anisotropy index A_i = I_b/I_o and the
// Klucher horizon-brightening factor f = sqrt(I_b/I) come from the record.
double tilted_plane(const HourlyIrradiance& hour, double beam_ratio,
                    double tilt_deg, double ground_reflectance);

}  // namespace pvopt
