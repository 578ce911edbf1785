// Investment metrics over a quarterly horizon: NPV of inflation-escalated
// bill savings, modified internal rate of return, and discounted-free
// payback period.
#pragma once

#include <optional>
#include <span>

namespace pvopt {

struct EconomicAssumptions {
  double discount_rate_annual = 0.06;
  double inflation_rate_annual = 0.02;
  int horizon_quarters = 60;
  void validate() const;  // throws std::invalid_argument
};

// Quarterly rate equivalent to an annual rate under compounding:
// (1 + annual)^(1/4) - 1.
double effective_quarterly_rate(double annual_rate);

// Net present value of quarterly savings escalated by inflation and
// discounted quarterly, minus the upfront cost:
//   sum_q savings[q-1] (1+r_i)^q / (1+r_d)^q - upfront, q = 1..Q.
// Rates are quarterly.
double npv(std::span<const double> quarterly_savings, double inflation_q,
           double discount_q, double upfront_cost);

// Modified IRR of a cash-flow series (element 0 at time 0): negative flows
// discounted to present at finance_rate_q, positive flows compounded to the
// horizon at reinvest_rate_q.  Returns the annualized rate, or nullopt when
// the series lacks a sign change.  Rates per quarter.
std::optional<double> mirr(std::span<const double> cash_flows,
                           double finance_rate_q, double reinvest_rate_q);

// First time the cumulative nominal (inflation-escalated, undiscounted)
// savings reach the upfront cost, in years, linearly interpolated within the
// crossing quarter.  nullopt if never reached within the series.
std::optional<double> payback_period(std::span<const double> quarterly_savings,
                                     double upfront_cost, double inflation_q);

// Annual rate equivalent to a quarterly rate: (1 + q)^4 - 1.
double annualize_quarterly(double quarterly_rate);

}  // namespace pvopt
