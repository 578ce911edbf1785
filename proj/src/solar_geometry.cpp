#include "solar_geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pvopt {

namespace {

void check_day(int n) {
  if (n < 1 || n > 365)
    throw std::invalid_argument("day_of_year " + std::to_string(n) +
                                " outside 1..365");
}

}  // namespace

void SiteSpec::validate() const {
  if (!(latitude_deg > -90.0 && latitude_deg < 90.0))
    throw std::invalid_argument("latitude " + std::to_string(latitude_deg) +
                                " outside (-90, 90)");
  if (!(longitude_deg >= -180.0 && longitude_deg <= 180.0))
    throw std::invalid_argument("longitude " + std::to_string(longitude_deg) +
                                " outside [-180, 180]");
  if (!(standard_meridian_deg >= -180.0 && standard_meridian_deg <= 180.0))
    throw std::invalid_argument("standard meridian " +
                                std::to_string(standard_meridian_deg) +
                                " outside [-180, 180]");
  if (!(ground_reflectance >= 0.0 && ground_reflectance <= 1.0))
    throw std::invalid_argument("ground reflectance " +
                                std::to_string(ground_reflectance) +
                                " outside [0, 1]");
}

double declination(int day_of_year) {
  check_day(day_of_year);
  return 23.45 * std::sin(deg2rad(360.0 * (284 + day_of_year) / 365.0));
}

SunsetHourAngle sunset_hour_angle(double latitude_deg, double declination_deg) {
  if (!(latitude_deg > -90.0 && latitude_deg < 90.0))
    throw std::invalid_argument("latitude " + std::to_string(latitude_deg) +
                                " outside (-90, 90)");
  double c = -std::tan(deg2rad(latitude_deg)) * std::tan(deg2rad(declination_deg));
  SunsetHourAngle out;
  if (c > 1.0) {
    out.degrees = 0.0;  // polar night
    out.polar_clamp = true;
  } else if (c < -1.0) {
    out.degrees = 180.0;  // polar day
    out.polar_clamp = true;
  } else {
    out.degrees = rad2deg(std::acos(c));
  }
  return out;
}

double cos_incidence(const SiteSpec& site, const SolarInstant& t,
                     const Orientation& plane) {
  double sd = std::sin(deg2rad(t.declination_deg));
  double cd = std::cos(deg2rad(t.declination_deg));
  double sp = std::sin(deg2rad(site.latitude_deg));
  double cp = std::cos(deg2rad(site.latitude_deg));
  double sb = std::sin(deg2rad(plane.tilt_deg));
  double cb = std::cos(deg2rad(plane.tilt_deg));
  double sg = std::sin(deg2rad(plane.azimuth_deg));
  double cg = std::cos(deg2rad(plane.azimuth_deg));
  double sw = std::sin(deg2rad(t.hour_angle_deg));
  double cw = std::cos(deg2rad(t.hour_angle_deg));
  // Southern-hemisphere surface azimuth convention: the sign of the
  // phi-cross-terms is flipped relative to the usual northern form.
  return sd * sp * cb + sd * cp * sb * cg + cd * cp * cb * cw -
         cd * sp * sb * cg * cw + cd * sb * sg * sw;
}

double cos_zenith(const SiteSpec& site, const SolarInstant& t) {
  double sd = std::sin(deg2rad(t.declination_deg));
  double cd = std::cos(deg2rad(t.declination_deg));
  double sp = std::sin(deg2rad(site.latitude_deg));
  double cp = std::cos(deg2rad(site.latitude_deg));
  double cw = std::cos(deg2rad(t.hour_angle_deg));
  return sd * sp + cd * cp * cw;
}

double beam_ratio(double cos_theta, double cos_theta_z) {
  return std::max(0.0, cos_theta) / std::max(cos_theta_z, kBeamRatioFloor);
}

double extraterrestrial_hourly(const SiteSpec& site, const SolarInstant& t) {
  check_day(t.day_of_year);
  if (cos_zenith(site, t) <= 0.0) return 0.0;

  SunsetHourAngle ws = sunset_hour_angle(site.latitude_deg, t.declination_deg);
  double w1 = std::clamp(t.hour_angle_deg - 7.5, -ws.degrees, ws.degrees);
  double w2 = std::clamp(t.hour_angle_deg + 7.5, -ws.degrees, ws.degrees);
  if (w2 <= w1) return 0.0;

  double ecc = 1.0 + 0.033 * std::cos(deg2rad(360.0 * t.day_of_year / 365.0));
  double sd = std::sin(deg2rad(t.declination_deg));
  double cd = std::cos(deg2rad(t.declination_deg));
  double sp = std::sin(deg2rad(site.latitude_deg));
  double cp = std::cos(deg2rad(site.latitude_deg));
  // Integral of G_on cos(theta_z) over [w1, w2], J/m^2, then to kWh/m^2.
  double joules = (12.0 * 3600.0 / kPi) * kSolarConstant * ecc *
                  (cp * cd * (std::sin(deg2rad(w2)) - std::sin(deg2rad(w1))) +
                   deg2rad(w2 - w1) * sp * sd);
  return std::max(0.0, joules / 3.6e6);
}

double equation_of_time_hours(int day_of_year) {
  check_day(day_of_year);
  double b = deg2rad(360.0 * (day_of_year - 1) / 365.0);
  double minutes =
      229.18 * (0.000075 + 0.001868 * std::cos(b) - 0.032077 * std::sin(b) -
                0.014615 * std::cos(2.0 * b) - 0.04089 * std::sin(2.0 * b));
  return minutes / 60.0;
}

double solar_hour_angle(double clock_hour, int day_of_year,
                        const SiteSpec& site) {
  // 4 minutes of time per degree of longitude.
  double solar_time = clock_hour +
                      (site.longitude_deg - site.standard_meridian_deg) * (4.0 / 60.0) +
                      equation_of_time_hours(day_of_year);
  double w = 15.0 * (solar_time - 12.0);
  w = std::fmod(w + 540.0, 360.0);
  if (w < 0.0) w += 360.0;
  return w - 180.0;
}

}  // namespace pvopt
