#ifndef PLAPCLAW_ORACLES_HPP
#define PLAPCLAW_ORACLES_HPP

#include "plapclaw/model.hpp"

namespace plapclaw {

/// Parameters of the compactly supported self-similar source solution of
///   u_t = mu (|u_x|^{p-1} u_x)_x,
/// namely u(t, x) = t^{-alpha} F(x t^{-alpha}) with alpha = 1/(2p) and
///   F(xi) = (C - ((p-1)/(p+1)) (alpha/mu)^{1/p} |xi|^{(p+1)/p})_+^{p/(p-1)}.
/// The profile solves -alpha xi F = mu |F'|^{p-1} F', conserves mass, and is
/// supported in |xi| <= xi_max. Trust in the closed form is established by
/// barenblatt_residual below, not assumed.
struct BarenblattParams {
  double p;
  double C;
  double mu;

  BarenblattParams(double p_, double C_, double mu_ = 1.0)
      : p(p_), C(C_), mu(mu_) {
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    if (!(C > 0.0)) throw std::invalid_argument("profile constant must be positive");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  }

  double alpha() const { return 1.0 / (2.0 * p); }
  double xi_max() const;
};

/// Pointwise evaluation of the self-similar solution; t > 0 required.
double barenblatt(double t, double x, const BarenblattParams& params);

/// Analytic space derivative of the same solution (closed-form profile slope).
double barenblatt_gradient(double t, double x, const BarenblattParams& params);

/// Validation gate: max over sampled interior (t, x) of
/// |u_t - mu (|u_x|^{p-1} u_x)_x| normalized by max |u_t|, with u_t and the
/// outer divergence taken by five-point finite differences. Sampling covers
/// the inner 90% of the support; the free boundary itself has limited
/// smoothness and is excluded. Contract: <= 1e-3.
double barenblatt_residual(const BarenblattParams& params, int n_samples);

Field barenblatt_field(const Grid& grid, double t, const BarenblattParams& params);

}  // namespace plapclaw

#endif
