#include "economics.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace pvopt {

void EconomicAssumptions::validate() const {
  if (!(discount_rate_annual > -1.0))
    throw std::invalid_argument("discount rate " +
                                std::to_string(discount_rate_annual) +
                                " not above -100%");
  if (!(inflation_rate_annual > -1.0))
    throw std::invalid_argument("inflation rate " +
                                std::to_string(inflation_rate_annual) +
                                " not above -100%");
  if (horizon_quarters < 1)
    throw std::invalid_argument("horizon of " +
                                std::to_string(horizon_quarters) +
                                " quarters is not positive");
}

double effective_quarterly_rate(double annual_rate) {
  if (!(annual_rate > -1.0))
    throw std::invalid_argument("annual rate " + std::to_string(annual_rate) +
                                " not above -100%");
  return std::pow(1.0 + annual_rate, 0.25) - 1.0;
}

double annualize_quarterly(double quarterly_rate) {
  double g = 1.0 + quarterly_rate;
  return g * g * g * g - 1.0;
}

double npv(std::span<const double> quarterly_savings, double inflation_q,
           double discount_q, double upfront_cost) {
  double factor = (1.0 + inflation_q) / (1.0 + discount_q);
  double weight = 1.0;
  double total = 0.0;
  for (double s : quarterly_savings) {
    weight *= factor;
    total += s * weight;
  }
  return total - upfront_cost;
}

std::optional<double> mirr(std::span<const double> cash_flows,
                           double finance_rate_q, double reinvest_rate_q) {
  if (cash_flows.size() < 2) return std::nullopt;
  std::size_t periods = cash_flows.size() - 1;

  double fv_pos = 0.0;
  double pv_neg = 0.0;
  for (std::size_t t = 0; t < cash_flows.size(); ++t) {
    double cf = cash_flows[t];
    if (cf > 0.0)
      fv_pos += cf * std::pow(1.0 + reinvest_rate_q,
                              static_cast<double>(periods - t));
    else if (cf < 0.0)
      pv_neg += cf / std::pow(1.0 + finance_rate_q, static_cast<double>(t));
  }
  if (fv_pos == 0.0 || pv_neg == 0.0) return std::nullopt;

  double quarterly =
      std::pow(fv_pos / -pv_neg, 1.0 / static_cast<double>(periods)) - 1.0;
  return annualize_quarterly(quarterly);
}

std::optional<double> payback_period(std::span<const double> quarterly_savings,
                                     double upfront_cost, double inflation_q) {
  if (upfront_cost <= 0.0) return 0.0;
  double esc = 1.0;
  double cum = 0.0;
  for (std::size_t q = 0; q < quarterly_savings.size(); ++q) {
    esc *= 1.0 + inflation_q;
    double inflow = quarterly_savings[q] * esc;
    double prev = cum;
    cum += inflow;
    if (cum >= upfront_cost && inflow > 0.0) {
      double frac = (upfront_cost - prev) / inflow;
      return (static_cast<double>(q) + frac) / 4.0;
    }
  }
  return std::nullopt;
}

}  // namespace pvopt
