// Optimal price and a few mean residual life values for a handful of p.

#include <cstdio>

#include "singular_mrl/singular_mrl.hpp"

int main() {
  namespace sm = singular_mrl;
  for (double p : {0.5, 1.0, 2.0}) {
    const sm::PSingularParams params(p);
    const sm::PricingResult r = sm::optimal_price(params);
    std::printf("p = %-4g  x* = %.12f  payoff = %.12f  m(0) = %.6f  m(1/2) = %.6f\n", p,
                r.optimal_price, r.expected_payoff, sm::mrl(params, 0.0).value,
                sm::mrl(params, 0.5).value);
  }
}
