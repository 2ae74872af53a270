#ifndef PLAPCLAW_PROPERTIES_HPP
#define PLAPCLAW_PROPERTIES_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "plapclaw/diagnostics.hpp"
#include "plapclaw/waves.hpp"

namespace plapclaw {

/// One line of a property report.
struct PropertyOutcome {
  std::string name;
  bool pass = false;
  std::string detail;
};

/// Fit of ||d_x U^r(t)||_{L^q} (centered differences of samples, midpoint
/// norms) against log(1+t) over a geometric time ladder in [t_lo, t_hi].
/// The theoretical exponent is -(1 - 1/q).
DecayFit wave_gradient_decay_fit(const WaveState& ws, double q, double t_lo,
                                 double t_hi, double tolerance);

/// Randomized check of the pointwise algebraic identity behind the energy
/// dissipation split; residuals are compared against 1e-10 of the natural
/// scale max(|a|,|b|)^{p+1}.
std::vector<PropertyOutcome> identity_fuzz_suite(int cases, uint64_t seed);

/// Properties of the smooth fan approximant w(t, x): strict bounds, strict
/// monotonicity, characteristic-residual contract and gradient decay.
std::vector<PropertyOutcome> fan_approximant_suite(double q_filter = 0.0);

/// Properties of the smoothed wave U^r: bounds, monotonicity, initial
/// profile, convergence to the exact fan, gradient decay rates.
std::vector<PropertyOutcome> smoothed_wave_suite(double q_filter = 0.0);

/// Randomized sup-norm interpolation checks on smooth compactly supported
/// fields; the ratio contract is 1.05.
std::vector<PropertyOutcome> interpolation_fuzz_suite(int cases, uint64_t seed,
                                                      double p_override = 0.0);

/// Self-similar solution gate: residual contract, similarity collapse, mass
/// conservation and norm scaling.
std::vector<PropertyOutcome> barenblatt_suite(double p_override = 0.0);

}  // namespace plapclaw

#endif
