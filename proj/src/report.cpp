#include "report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace pvopt {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

double unsign_zero(double v, double quantum) {
  // Values that would print as -0.00 collapse to zero.
  return std::abs(v) < quantum / 2.0 ? 0.0 : v;
}

std::string angle_str(double deg) {
  double r = std::round(deg);
  if (std::abs(deg - r) < 1e-9) return fmt("%.0f", unsign_zero(r, 1.0));
  return fmt("%.1f", deg);
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string format_money(double v) {
  v = unsign_zero(v, 0.01);
  if (v < 0.0) return "-$" + fmt("%.2f", -v);
  return "$" + fmt("%.2f", v);
}

std::string format_percent(double fraction) {
  return fmt("%.2f", unsign_zero(fraction * 100.0, 0.01)) + "%";
}

std::string render_report_text(const std::vector<PlanRow>& rows,
                               const std::string& base_plan_id) {
  std::ostringstream out;
  out << "Plan comparison (base plan: " << base_plan_id << ")\n\n";

  const char* headers[] = {"plan",   "kind",    "size kW", "tilt",
                           "azim",   "NPV",     "saving",  "MIRR",
                           "payback"};
  std::vector<std::array<std::string, 9>> cells;
  for (const PlanRow& r : rows) {
    std::array<std::string, 9> c;
    c[0] = r.plan_id + (r.is_base ? " (base)" : "");
    c[1] = r.kind;
    if (r.viable) {
      c[2] = fmt("%.2f", r.size_kw);
      c[3] = angle_str(r.tilt_deg);
      c[4] = angle_str(r.azimuth_deg);
      c[5] = format_money(r.npv);
      c[6] = format_money(r.plan_saving);
      c[7] = r.mirr_annual ? format_percent(*r.mirr_annual) : "-";
      c[8] = r.payback_years ? fmt("%.1f y", *r.payback_years) : "-";
    } else {
      for (int i = 2; i < 9; ++i) c[i] = "-";
    }
    cells.push_back(c);
  }

  std::size_t width[9];
  for (int i = 0; i < 9; ++i) {
    width[i] = std::string(headers[i]).size();
    for (const auto& c : cells) width[i] = std::max(width[i], c[i].size());
  }
  auto pad = [&](const std::string& s, std::size_t w, bool left) {
    std::string p(w - s.size(), ' ');
    return left ? s + p : p + s;
  };
  for (int i = 0; i < 9; ++i)
    out << (i ? "  " : "") << pad(headers[i], width[i], i < 2);
  out << "\n";
  for (const auto& c : cells) {
    for (int i = 0; i < 9; ++i) out << (i ? "  " : "") << pad(c[i], width[i], i < 2);
    out << "\n";
  }

  // Best viable plan by NPV; ties keep the first in row order.
  const PlanRow* best = nullptr;
  for (const PlanRow& r : rows)
    if (r.viable && (!best || r.npv > best->npv)) best = &r;
  out << "\n";
  if (best) {
    out << "Best plan: " << best->plan_id << " with " << best->panels
        << " panels (" << fmt("%.2f", best->size_kw) << " kW) at tilt "
        << angle_str(best->tilt_deg) << ", azimuth "
        << angle_str(best->azimuth_deg) << ": NPV " << format_money(best->npv)
        << ", upfront " << format_money(best->system_cost) << "\n";
  } else {
    out << "No plan supports a PV system with positive NPV; the best course "
           "is the base plan with no panels.\n";
  }
  for (const PlanRow& r : rows)
    if (r.note) out << "note: " << r.plan_id << ": " << *r.note << "\n";
  return out.str();
}

std::string render_report_csv(const std::vector<PlanRow>& rows) {
  std::ostringstream out;
  out << "plan_id,retailer,kind,base_plan,viable,panels,size_kw,tilt_deg,"
         "azimuth_deg,npv,plan_saving,mirr_annual,payback_years,system_cost,"
         "saving_q1,saving_q2,saving_q3,saving_q4\n";
  for (const PlanRow& r : rows) {
    out << csv_escape(r.plan_id) << ',' << csv_escape(r.retailer) << ','
        << r.kind << ',' << (r.is_base ? 1 : 0) << ',' << (r.viable ? 1 : 0)
        << ',';
    if (r.viable) {
      out << r.panels << ',' << fmt("%.3f", r.size_kw) << ','
          << angle_str(r.tilt_deg) << ',' << angle_str(r.azimuth_deg) << ','
          << fmt("%.2f", unsign_zero(r.npv, 0.01)) << ','
          << fmt("%.2f", unsign_zero(r.plan_saving, 0.01)) << ','
          << (r.mirr_annual ? fmt("%.6f", *r.mirr_annual) : "") << ','
          << (r.payback_years ? fmt("%.2f", *r.payback_years) : "") << ','
          << fmt("%.2f", r.system_cost) << ',';
      for (int q = 0; q < 4; ++q)
        out << fmt("%.2f", unsign_zero(r.quarterly_savings[q], 0.01))
            << (q < 3 ? "," : "");
    } else {
      out << ",,,,,,,,,,,";
    }
    out << '\n';
  }
  return out.str();
}

std::string render_convergence_csv(
    const std::vector<ConvergenceTrace>& traces) {
  std::ostringstream out;
  out << "plan_id,iteration,best_npv\n";
  for (const ConvergenceTrace& t : traces) {
    for (const IterationStat& s : t.history) {
      out << csv_escape(t.plan_id) << ',' << s.iteration << ',';
      if (std::isfinite(s.best_score)) out << fmt("%.2f", -s.best_score);
      out << '\n';
    }
  }
  return out.str();
}

std::string render_size_sweep_csv(const std::string& plan_id,
                                  const std::vector<SizeSweepRow>& rows) {
  std::ostringstream out;
  out << "plan_id,panels,size_kw,npv\n";
  for (const SizeSweepRow& r : rows)
    out << csv_escape(plan_id) << ',' << r.panels << ','
        << fmt("%.3f", r.size_kw) << ',' << fmt("%.2f", unsign_zero(r.npv, 0.01))
        << '\n';
  return out.str();
}

std::string render_orientation_sweep_csv(
    const std::string& plan_id, const std::vector<OrientationSweepRow>& rows) {
  std::ostringstream out;
  out << "plan_id,tilt_deg,azimuth_deg,npv\n";
  for (const OrientationSweepRow& r : rows)
    out << csv_escape(plan_id) << ',' << angle_str(r.tilt_deg) << ','
        << angle_str(r.azimuth_deg) << ','
        << fmt("%.2f", unsign_zero(r.npv, 0.01)) << '\n';
  return out.str();
}

std::string render_ingest_report(const MeterReport& meter,
                                 const WeatherData& weather,
                                 const std::vector<std::string>& extra_warnings) {
  std::ostringstream out;
  out << "meter file: " << meter.source << "\n";
  out << "  resolution: " << meter.resolution_minutes << " minutes\n";
  out << "  rows: " << meter.rows << "\n";
  out << "  coverage: " << fmt("%.1f", meter.coverage * 100.0) << "% ("
      << meter.present_intervals << " of " << meter.expected_intervals
      << " intervals)\n";
  out << "  total energy: " << fmt("%.3f", meter.raw_total_kwh) << " kWh\n";
  if (meter.filled.empty()) {
    out << "  filled gaps: none\n";
  } else {
    out << "  filled gaps:\n";
    for (const FilledSpan& f : meter.filled)
      out << "    " << f.start << " to " << f.end << " ("
          << fmt("%.1f", f.hours) << " h, copied from the adjacent week)\n";
  }
  for (const std::string& w : meter.warnings) out << "  warning: " << w << "\n";

  out << "weather file: " << weather.source << "\n";
  out << "  years:";
  for (const WeatherYear& y : weather.years) out << " " << y.year;
  out << "\n";
  for (const std::string& w : weather.warnings)
    out << "  warning: " << w << "\n";
  for (const std::string& w : extra_warnings) out << "  warning: " << w << "\n";
  return out.str();
}

}  // namespace pvopt
