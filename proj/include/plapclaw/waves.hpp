#ifndef PLAPCLAW_WAVES_HPP
#define PLAPCLAW_WAVES_HPP

#include "plapclaw/model.hpp"

namespace plapclaw {

/// Asymptotic rarefaction state connecting u_minus to u_plus under a convex
/// flux. Caches the characteristic speeds at the far fields.
struct WaveState {
  FluxModel flux;
  FarField far_field;
  double lambda_minus;
  double lambda_plus;

  WaveState(FluxModel fx, FarField ff)
      : flux(std::move(fx)),
        far_field(ff),
        lambda_minus(flux.lambda(ff.u_minus)),
        lambda_plus(flux.lambda(ff.u_plus)) {}
};

/// Self-similar fan solution of the quadratic-flux Riemann problem:
/// w_minus for xi <= w_minus, xi on the fan, w_plus for xi >= w_plus.
double burgers_rarefaction(double xi, double w_minus, double w_plus);

struct CharacteristicRoot {
  double w;   // transported initial value w0(x0)
  double x0;  // foot of the characteristic through (t, x)
};

/// Smooth fan approximant built from the tanh-profile initial data
///   w0(z) = (w_minus + w_plus)/2 + ((w_plus - w_minus)/2) tanh z
/// transported along characteristics: solves x = x0 + w0(x0) t for the unique
/// x0 (the map is strictly increasing in x0) and returns w = w0(x0).
/// Residual guarantee: |x - x0 - w0(x0) t| <= 1e-11 max(1, |x|).
CharacteristicRoot smoothed_burgers(double t, double x, double w_minus,
                                    double w_plus);

/// Exact rarefaction wave u^r(xi): u_minus below the fan, lambda^{-1}(xi)
/// inside, u_plus above. Continuous and nondecreasing in xi.
double exact_rarefaction(double xi, const WaveState& ws);

/// Smoothed rarefaction U^r(t, x) = lambda^{-1} of the smooth fan approximant
/// run between the characteristic speeds. Strictly increasing in x and
/// strictly inside (u_minus, u_plus). Requires a genuine fan (u_minus < u_plus).
double smoothed_rarefaction(double t, double x, const WaveState& ws);

enum class WaveKind { Exact, Smoothed };

/// Pointwise samples at cell centers. For Exact at t = 0 this is the Riemann
/// datum (u_minus left of 0, u_plus right, midpoint value at a center on 0).
Field sample_wave(const Grid& grid, double t, const WaveState& ws, WaveKind which);

}  // namespace plapclaw

#endif
