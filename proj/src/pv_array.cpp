#include "pv_array.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace pvopt {

void PanelSpec::validate() const {
  if (!(eta_stc > 0.0 && eta_stc < 0.3))
    throw std::invalid_argument("panel eta_stc " + std::to_string(eta_stc) +
                                " outside (0, 0.3)");
  if (!(mu_mpp_per_c > -0.01 && mu_mpp_per_c < 0.0))
    throw std::invalid_argument("panel mu_mpp " + std::to_string(mu_mpp_per_c) +
                                " outside (-0.01, 0)");
  if (!(t_noct_c > 30.0 && t_noct_c < 60.0))
    throw std::invalid_argument("panel t_noct " + std::to_string(t_noct_c) +
                                " outside (30, 60)");
  if (!(area_m2 > 0.0))
    throw std::invalid_argument("panel area " + std::to_string(area_m2) +
                                " not positive");
  if (!(rated_power_w > 0.0))
    throw std::invalid_argument("panel rated power " +
                                std::to_string(rated_power_w) +
                                " not positive");
  // Nameplate consistency: P = eta * A * 1000 W/m^2 within 2%.
  double implied = eta_stc * area_m2 * 1000.0;
  if (std::abs(implied - rated_power_w) > 0.02 * rated_power_w)
    throw std::invalid_argument(
        "panel rated power " + std::to_string(rated_power_w) +
        " W inconsistent with eta_stc * area (" + std::to_string(implied) +
        " W)");
}

double cell_temperature(double g_wm2, double t_ambient_c,
                        const PanelSpec& panel) {
  if (g_wm2 < 0.0)
    throw std::invalid_argument("irradiance " + std::to_string(g_wm2) +
                                " is negative");
  return t_ambient_c +
         (panel.t_noct_c - 20.0) * (g_wm2 / 800.0) * (1.0 - panel.eta_stc);
}

double operating_efficiency(double t_cell_c, double t_ambient_c,
                            const PanelSpec& panel,
                            const PvModelOptions& opts) {
  double ref = opts.temp_ref == TempRefMode::ambient ? t_ambient_c : 25.0;
  double mu_abs = opts.mu_mode == MuMode::normalized
                      ? panel.mu_mpp_per_c * panel.eta_stc
                      : panel.mu_mpp_per_c;
  return std::max(0.0, panel.eta_stc + mu_abs * (t_cell_c - ref));
}

double hourly_energy(const HourlyIrradiance& hour, double t_ambient_c,
                     const PanelSpec& panel, const ArrayConfig& config,
                     const PvModelOptions& opts) {
  if (config.panel_count < 0)
    throw std::invalid_argument("panel count " +
                                std::to_string(config.panel_count) +
                                " is negative");
  if (hour.tilted_kwh <= 0.0 || config.panel_count == 0) return 0.0;
  double g = hour.tilted_kwh * 1000.0;  // mean W/m^2 over the hour
  double tc = cell_temperature(g, t_ambient_c, panel);
  double eta = operating_efficiency(tc, t_ambient_c, panel, opts);
  // Per-panel energy rounds first so the result is exactly linear in count.
  double per_panel =
      panel.area_m2 * hour.tilted_kwh * eta * config.bop_efficiency;
  return per_panel * config.panel_count;
}

}  // namespace pvopt
