#ifndef PLAPCLAW_RATES_HPP
#define PLAPCLAW_RATES_HPP

#include <string>
#include <string_view>

namespace plapclaw {

/// Named decay-rate presets used by the verify command. Each selector fixes
/// the theoretical power-law exponents (upper bounds, epsilon losses dropped)
/// for the deviation norms and the gradient norms as functions of p, q and
/// the gradient exponent r+1.
enum class RateSet {
  Thm1_1,  // constant state, L^2 data: L^q (q>=2) and sup norm
  Thm1_2,  // constant state, L^1 data: L^q (q>=1), sup norm, gradient L^{p+1}
  Thm1_4,  // rarefaction, L^2 data
  Thm1_5,  // rarefaction, L^1 data; gradient rate branches at p = (2+sqrt(22))/6
  Thm1_6,  // rarefaction, gradient L^{r+1} with r > p
  Thm7_1,  // pure diffusion, L^2 data
  Thm7_2,  // pure diffusion, L^1 data; gradient L^{p+1}
  Thm7_3,  // pure diffusion, gradient L^{r+1}
};

RateSet parse_rate_set(std::string_view name);  // e.g. "Thm7.2"
std::string rate_set_name(RateSet set);

/// Reference exponent for the deviation norm ||phi||_{L^q}; q may be
/// infinity. Throws when the selector does not cover the requested q.
double reference_exponent_lq(RateSet set, double p, double q);

/// Reference exponent for the gradient norm ||d_x u||_{L^{r+1}} (r_plus_1 =
/// p+1 selects the base gradient estimate).
double reference_exponent_gradient(RateSet set, double p, double r_plus_1);

/// Branch point of the gradient rates for the rarefaction rate sets.
double gradient_branch_point();

}  // namespace plapclaw

#endif
