#ifndef PLAPCLAW_DIAGNOSTICS_HPP
#define PLAPCLAW_DIAGNOSTICS_HPP

#include <vector>

#include "plapclaw/model.hpp"
#include "plapclaw/waves.hpp"

namespace plapclaw {

/// Lebesgue norm by the midpoint rule, (sum |v_j|^q dx)^{1/q}; q may be
/// infinity (max |v_j|). Requires q >= 1.
double lq_norm(const Field& field, double q);

/// Centered differences in the interior, one-sided at the edges.
Field discrete_gradient(const Field& field);

enum class AsymptoticState { ExactRarefaction, SmoothedUr, Constant };

/// Deviation of a state from the sampled asymptotic wave at time t.
Field deviation(const Field& u, double t, const WaveState& ws, AsymptoticState which);

/// Deviation from a constant asymptotic state.
Field deviation_from_constant(const Field& u, double value);

/// Weighted energy quantities of a snapshot: the time-weighted L^q mass of
/// the deviation, the fan term picking up the wave's stretching, the
/// gradient-weighted dissipation integrand, and the gradient energy of the
/// full state with its own dissipation integrand. For q in [1,2) the
/// |phi|^{q-2} integrands are singular at zero and are skipped.
struct EnergyReport {
  double t = 0.0;
  double alpha = 0.0;
  double q = 2.0;
  double weighted_lq = 0.0;       // (1+t)^alpha ||phi||_q^q
  double fan_term = 0.0;          // int |phi|^q d_x U^r
  double dissipation = 0.0;       // int |phi|^{q-2} (d_x phi)^2 (|d_x phi|^{p-1} + |d_x U^r|^{p-1})
  double grad_energy = 0.0;       // ||d_x u||_{p+1}^{p+1}
  double grad_dissipation = 0.0;  // int |d_x u|^{2(p-1)} (d_x^2 u)^2
  double lp_pow_p = 0.0;          // ||phi||_p^p
  double lq_pow_q = 0.0;          // ||phi||_q^q
  bool q_terms_skipped = false;   // true when q < 2
};

EnergyReport energy_report(const Field& u, double t, double alpha, double q,
                           const WaveState& ws, const ViscosityParams& visc);

/// Sup-norm interpolation bound with explicit constant:
///   ||phi||_inf^{(3p+q-1)/(p+1)}
///     <= ((3p+q-1)/(p+1)) (int phi^2)^{p/(p+1)}
///        (int |phi|^{q-2} |d_x phi|^{p+1})^{1/(p+1)}.
/// Returns both sides and their ratio (<= 1 up to discretization slack for
/// resolved fields; 0 for the zero field). Requires the field to decay at the
/// grid edges.
struct InterpolationCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
};

InterpolationCheck interpolation_check(const Field& phi, double p, double q);

/// Power-law fit of a positive time series: least-squares slope of log(value)
/// against log(1+t) over [window_lo, window_hi]. Rates from the decay theory
/// are upper bounds, so `pass` is one-sided.
struct DecayFit {
  double exponent = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;
  double reference_exponent = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

DecayFit decay_fit(const std::vector<double>& times,
                   const std::vector<double>& values, double reference_exponent,
                   double window_lo, double window_hi, double tolerance);

}  // namespace plapclaw

#endif
