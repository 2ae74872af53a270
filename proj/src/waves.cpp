#include "plapclaw/waves.hpp"

#include <algorithm>
#include <cmath>

namespace plapclaw {

namespace {

// tanh saturates beyond |z| ~ 20 in double precision; clamping keeps the
// characteristic map well behaved for arbitrarily large arguments.
inline double tanh_clamped(double z) { return std::tanh(std::clamp(z, -40.0, 40.0)); }

inline double initial_profile(double z, double w_minus, double w_plus) {
  return 0.5 * (w_minus + w_plus) + 0.5 * (w_plus - w_minus) * tanh_clamped(z);
}

inline double initial_profile_slope(double z, double w_minus, double w_plus) {
  const double c = std::cosh(std::clamp(z, -40.0, 40.0));
  return 0.5 * (w_plus - w_minus) / (c * c);
}

}  // namespace

double burgers_rarefaction(double xi, double w_minus, double w_plus) {
  if (!(w_minus <= w_plus))
    throw std::invalid_argument("not a rarefaction configuration");
  if (xi <= w_minus) return w_minus;
  if (xi >= w_plus) return w_plus;
  return xi;
}

CharacteristicRoot smoothed_burgers(double t, double x, double w_minus,
                                    double w_plus) {
  if (!(w_minus < w_plus))
    throw std::invalid_argument("not a rarefaction configuration");
  if (!(t >= 0.0)) throw std::invalid_argument("time must be nonnegative");
  if (t == 0.0) return {initial_profile(x, w_minus, w_plus), x};

  // x0 + w0(x0) t is strictly increasing with slope >= 1, and w0 is bounded,
  // so the root lies inside this bracket.
  const double bound = std::max(std::abs(w_minus), std::abs(w_plus)) * t + 1.0;
  double lo = x - bound;
  double hi = x + bound;
  const double tol = 1e-12 * std::max(1.0, std::abs(x));

  auto residual = [&](double z) {
    return z + initial_profile(z, w_minus, w_plus) * t - x;
  };

  double z = std::clamp(x - initial_profile(x, w_minus, w_plus) * t, lo, hi);
  double g = residual(z);
  for (int it = 0; it < 200 && std::abs(g) > tol; ++it) {
    if (g > 0.0)
      hi = z;
    else
      lo = z;
    if (hi - lo <= 1e-15 * std::max(1.0, std::abs(x))) {
      z = 0.5 * (lo + hi);
      break;
    }
    const double dg = 1.0 + initial_profile_slope(z, w_minus, w_plus) * t;
    double next = z - g / dg;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    double g_next = residual(next);
    // Newton can ping-pong between the saturated tail and the steep fan
    // without leaving the bracket; demand contraction or fall back to
    // bisection, which keeps the iteration count bounded.
    if (std::abs(g_next) > 0.9 * std::abs(g)) {
      next = 0.5 * (lo + hi);
      g_next = residual(next);
    }
    z = next;
    g = g_next;
  }
  return {initial_profile(z, w_minus, w_plus), z};
}

double exact_rarefaction(double xi, const WaveState& ws) {
  if (!std::isfinite(xi)) throw std::invalid_argument("non-finite input");
  if (xi <= ws.lambda_minus) return ws.far_field.u_minus;
  if (xi >= ws.lambda_plus) return ws.far_field.u_plus;
  return ws.flux.lambda_inverse(xi);
}

double smoothed_rarefaction(double t, double x, const WaveState& ws) {
  if (!(ws.far_field.u_minus < ws.far_field.u_plus))
    throw std::invalid_argument("degenerate fan; use constant state");
  const CharacteristicRoot root =
      smoothed_burgers(t, x, ws.lambda_minus, ws.lambda_plus);
  // w stays strictly inside (lambda_minus, lambda_plus); clamp only guards
  // against rounding at the saturated tails.
  const double w = std::clamp(root.w, ws.lambda_minus, ws.lambda_plus);
  return ws.flux.lambda_inverse(w);
}

Field sample_wave(const Grid& grid, double t, const WaveState& ws, WaveKind which) {
  Field out(grid);
  if (which == WaveKind::Smoothed) {
    for (int j = 0; j < grid.n_cells; ++j)
      out.values[j] = smoothed_rarefaction(t, grid.center(j), ws);
    return out;
  }
  if (t == 0.0) {
    // Riemann datum; the measure-zero cell centered exactly on 0 takes the
    // symmetric average.
    for (int j = 0; j < grid.n_cells; ++j) {
      const double xc = grid.center(j);
      if (xc < 0.0)
        out.values[j] = ws.far_field.u_minus;
      else if (xc > 0.0)
        out.values[j] = ws.far_field.u_plus;
      else
        out.values[j] = 0.5 * (ws.far_field.u_minus + ws.far_field.u_plus);
    }
    return out;
  }
  for (int j = 0; j < grid.n_cells; ++j)
    out.values[j] = exact_rarefaction(grid.center(j) / t, ws);
  return out;
}

}  // namespace plapclaw
