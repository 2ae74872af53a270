#include "plapclaw/diagnostics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plapclaw {

double lq_norm(const Field& field, double q) {
  if (!(q >= 1.0)) throw std::invalid_argument("norm exponent must be at least 1");
  if (std::isinf(q)) {
    double m = 0.0;
    for (double v : field.values) m = std::max(m, std::abs(v));
    return m;
  }
  const double dx = field.grid.dx();
  double sum = 0.0;
  if (q == 1.0) {
    for (double v : field.values) sum += std::abs(v);
  } else if (q == 2.0) {
    for (double v : field.values) sum += v * v;
  } else {
    for (double v : field.values) sum += std::pow(std::abs(v), q);
  }
  return std::pow(sum * dx, 1.0 / q);
}

Field discrete_gradient(const Field& field) {
  const int n = field.grid.n_cells;
  if (n < 3) throw std::invalid_argument("gradient needs at least 3 cells");
  const double dx = field.grid.dx();
  Field out(field.grid);
  const auto& v = field.values;
  out.values[0] = (v[1] - v[0]) / dx;
  for (int j = 1; j + 1 < n; ++j) out.values[j] = (v[j + 1] - v[j - 1]) / (2.0 * dx);
  out.values[n - 1] = (v[n - 1] - v[n - 2]) / dx;
  return out;
}

Field deviation(const Field& u, double t, const WaveState& ws,
                AsymptoticState which) {
  if (which == AsymptoticState::Constant)
    return deviation_from_constant(u, ws.far_field.u_minus);
  const Field wave = sample_wave(
      u.grid, t, ws,
      which == AsymptoticState::ExactRarefaction ? WaveKind::Exact : WaveKind::Smoothed);
  Field out(u.grid);
  for (int j = 0; j < u.grid.n_cells; ++j)
    out.values[j] = u.values[j] - wave.values[j];
  return out;
}

Field deviation_from_constant(const Field& u, double value) {
  Field out(u.grid);
  for (int j = 0; j < u.grid.n_cells; ++j) out.values[j] = u.values[j] - value;
  return out;
}

EnergyReport energy_report(const Field& u, double t, double alpha, double q,
                           const WaveState& ws, const ViscosityParams& visc) {
  const int n = u.grid.n_cells;
  const double dx = u.grid.dx();
  const double p = visc.p;

  EnergyReport rep;
  rep.t = t;
  rep.alpha = alpha;
  rep.q = q;
  rep.q_terms_skipped = q < 2.0;

  const bool degenerate_fan = !(ws.far_field.u_minus < ws.far_field.u_plus);
  const Field phi = degenerate_fan
                        ? deviation_from_constant(u, ws.far_field.u_minus)
                        : deviation(u, t, ws, AsymptoticState::SmoothedUr);
  Field wave_grad(u.grid);
  if (!degenerate_fan) {
    const Field wave = sample_wave(u.grid, t, ws, WaveKind::Smoothed);
    wave_grad = discrete_gradient(wave);
  }
  const Field phi_grad = discrete_gradient(phi);
  const Field u_grad = discrete_gradient(u);

  double lq_q = 0.0, lp_p = 0.0, fan = 0.0, diss = 0.0;
  double grad_e = 0.0, grad_d = 0.0;
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(phi.values[j]);
    lq_q += std::pow(a, q);
    lp_p += std::pow(a, p);
    if (!rep.q_terms_skipped) {
      const double w = (q == 2.0) ? 1.0 : std::pow(a, q - 2.0);
      fan += std::pow(a, q) * wave_grad.values[j];
      const double gp = phi_grad.values[j];
      diss += w * gp * gp *
              (std::pow(std::abs(gp), p - 1.0) +
               std::pow(std::abs(wave_grad.values[j]), p - 1.0));
    }
    grad_e += std::pow(std::abs(u_grad.values[j]), p + 1.0);
    // centered second difference
    if (j > 0 && j + 1 < n) {
      const double uxx =
          (u.values[j + 1] - 2.0 * u.values[j] + u.values[j - 1]) / (dx * dx);
      grad_d += std::pow(std::abs(u_grad.values[j]), 2.0 * (p - 1.0)) * uxx * uxx;
    }
  }
  rep.lq_pow_q = lq_q * dx;
  rep.lp_pow_p = lp_p * dx;
  rep.weighted_lq = std::pow(1.0 + t, alpha) * rep.lq_pow_q;
  rep.fan_term = fan * dx;
  rep.dissipation = diss * dx;
  rep.grad_energy = grad_e * dx;
  rep.grad_dissipation = grad_d * dx;
  return rep;
}

InterpolationCheck interpolation_check(const Field& phi, double p, double q) {
  if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
  if (!(q >= 2.0)) throw std::invalid_argument("interpolation check needs q >= 2");
  const int n = phi.grid.n_cells;
  const double dx = phi.grid.dx();

  double sup = 0.0;
  for (double v : phi.values) sup = std::max(sup, std::abs(v));
  InterpolationCheck out;
  if (sup == 0.0) return out;

  if (std::abs(phi.values[0]) >= 1e-8 * sup ||
      std::abs(phi.values[n - 1]) >= 1e-8 * sup)
    throw std::invalid_argument("interpolation check requires decaying field");

  const Field grad = discrete_gradient(phi);
  double l2_sq = 0.0, mixed = 0.0;
  for (int j = 0; j < n; ++j) {
    const double a = std::abs(phi.values[j]);
    l2_sq += a * a;
    const double w = (q == 2.0) ? 1.0 : std::pow(a, q - 2.0);
    mixed += w * std::pow(std::abs(grad.values[j]), p + 1.0);
  }
  l2_sq *= dx;
  mixed *= dx;

  const double exponent = (3.0 * p + q - 1.0) / (p + 1.0);
  out.lhs = std::pow(sup, exponent);
  out.rhs = exponent * std::pow(l2_sq, p / (p + 1.0)) *
            std::pow(mixed, 1.0 / (p + 1.0));
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
  return out;
}

DecayFit decay_fit(const std::vector<double>& times,
                   const std::vector<double>& values, double reference_exponent,
                   double window_lo, double window_hi, double tolerance) {
  if (times.size() != values.size())
    throw std::invalid_argument("times and values must have equal length");
  if (!(window_lo < window_hi))
    throw std::invalid_argument("fit window must be nonempty");

  std::vector<double> xs, ys;
  for (size_t i = 0; i < times.size(); ++i) {
    if (times[i] < window_lo || times[i] > window_hi) continue;
    if (!(values[i] > 0.0))
      throw std::invalid_argument("non-positive value in fit window");
    xs.push_back(std::log1p(times[i]));
    ys.push_back(std::log(values[i]));
  }
  if (xs.size() < 5)
    throw std::invalid_argument("fewer than 5 in-window samples");

  const size_t m = xs.size();
  double sx = 0.0, sy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sx += xs[i];
    sy += ys[i];
  }
  const double mx = sx / m, my = sy / m;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit window collapses to one time");

  DecayFit fit;
  fit.exponent = sxy / sxx;
  fit.intercept = my - fit.exponent * mx;
  double ss_res = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const double r = ys[i] - (fit.intercept + fit.exponent * xs[i]);
    ss_res += r * r;
  }
  fit.r_squared = syy > 1e-300 ? 1.0 - ss_res / syy : 1.0;
  fit.window_lo = window_lo;
  fit.window_hi = window_hi;
  fit.reference_exponent = reference_exponent;
  fit.tolerance = tolerance;
  fit.pass = fit.exponent <= reference_exponent + tolerance;
  return fit;
}

}  // namespace plapclaw
