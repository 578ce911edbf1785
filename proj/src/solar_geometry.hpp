// Sun position and plane-of-array geometry.
//
// Angle convention: latitude negative south of the equator, longitude degrees
// east, hour angle negative before solar noon (15 degrees per hour).  Panel
// azimuth is measured from the equator-facing direction, positive toward west,
// so 0 means due north for a southern-hemisphere site.
#pragma once

#include <cmath>

namespace pvopt {

constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * (kPi / 180.0); }
inline double rad2deg(double r) { return r * (180.0 / kPi); }

constexpr double kSolarConstant = 1367.0;  // W/m^2

// Zenith floor for the beam ratio: below 85 deg solar elevation the ratio
// blows up at sunrise/sunset, so the denominator is clamped to cos(85 deg).
inline const double kBeamRatioFloor = std::cos(deg2rad(85.0));

struct SiteSpec {
  double latitude_deg = 0.0;
  double longitude_deg = 0.0;
  double standard_meridian_deg = 0.0;  // timezone reference meridian, deg east
  double ground_reflectance = 0.2;
  void validate() const;  // throws std::invalid_argument
};

struct SolarInstant {
  int day_of_year = 1;       // 1..365, no leap day
  double hour_angle_deg = 0.0;
  double declination_deg = 0.0;
};

struct Orientation {
  double tilt_deg = 0.0;     // 0 = horizontal
  double azimuth_deg = 0.0;  // 0 = equator-facing
};

struct SunsetHourAngle {
  double degrees = 90.0;
  bool polar_clamp = false;  // cos(omega_s) fell outside [-1,1]
};

// Cooper's declination for day n, degrees.
double declination(int day_of_year);

// Sunset hour angle from cos(omega_s) = -tan(phi) tan(delta), clamped to
// [-1,1] with the clamp flagged (continuous polar day or night).
SunsetHourAngle sunset_hour_angle(double latitude_deg, double declination_deg);

// Cosine of the beam incidence angle on a tilted plane.  May be negative
// (sun behind the plane).
double cos_incidence(const SiteSpec& site, const SolarInstant& t,
                     const Orientation& plane);

// Cosine of the solar zenith angle (cos_incidence of a horizontal plane).
double cos_zenith(const SiteSpec& site, const SolarInstant& t);

// Beam irradiance ratio R_b = max(0, cos theta) / max(cos theta_z, floor).
double beam_ratio(double cos_theta, double cos_theta_z);

// Extraterrestrial irradiation on a horizontal plane for the hour centred on
// t.hour_angle_deg, kWh/m^2.  Integrated over the 15-degree window clipped to
// daylight; 0 if the sun is below the horizon at the window midpoint.
double extraterrestrial_hourly(const SiteSpec& site, const SolarInstant& t);

// Spencer's equation of time, hours (add to local mean solar time).
double equation_of_time_hours(int day_of_year);

// Solar hour angle for a civil clock time (hours, fractional).  Applies the
// longitude correction against the standard meridian plus the equation of
// time, wrapped to [-180, 180].
double solar_hour_angle(double clock_hour, int day_of_year,
                        const SiteSpec& site);

}  // namespace pvopt
