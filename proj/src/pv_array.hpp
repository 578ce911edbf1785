// PV array electrical model: NOCT cell temperature, linear efficiency
// derating with temperature, and hourly DC-to-AC energy.
#pragma once

#include "insolation.hpp"

namespace pvopt {

struct PanelSpec {
  double rated_power_w = 250.0;   // STC nameplate
  double area_m2 = 1.64;
  double eta_stc = 0.1527;        // module efficiency at STC
  double t_noct_c = 44.0;
  double mu_mpp_per_c = -0.0041;  // power temperature coefficient, 1/degC
  void validate() const;          // throws std::invalid_argument
};

struct ArrayConfig {
  int panel_count = 0;
  double bop_efficiency = 0.90;  // inverter + wiring, applied to DC output
};

// The temperature coefficient enters the efficiency as an absolute slope.
// normalized treats mu_mpp_per_c as relative to eta_stc (datasheet %/degC
// converted to a fraction); raw uses it as efficiency points per degC.
enum class MuMode { normalized, raw };

// Reference temperature for the derating delta: ambient reproduces a model
// whose output is independent of the ambient series (the NOCT rise alone
// drives the loss); stc25 derates against the 25 degC STC cell temperature.
enum class TempRefMode { ambient, stc25 };

struct PvModelOptions {
  MuMode mu_mode = MuMode::normalized;
  TempRefMode temp_ref = TempRefMode::ambient;
};

// NOCT cell temperature for plane-of-array irradiance g_wm2 (W/m^2), reduced
// by the fraction of absorbed energy converted to electricity.
double cell_temperature(double g_wm2, double t_ambient_c,
                        const PanelSpec& panel);

// Module efficiency at the given cell temperature, clamped >= 0.
double operating_efficiency(double t_cell_c, double t_ambient_c,
                            const PanelSpec& panel,
                            const PvModelOptions& opts);

// AC energy for one hour, kWh.  Plane-of-array power density is taken as
// tilted_kwh * 1000 W/m^2 over the hour.
double hourly_energy(const HourlyIrradiance& hour, double t_ambient_c,
                     const PanelSpec& panel, const ArrayConfig& config,
                     const PvModelOptions& opts);

}  // namespace pvopt
