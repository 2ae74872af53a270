#include "plapclaw/oracles.hpp"

#include <algorithm>
#include <cmath>

namespace plapclaw {

namespace {

double profile_k(const BarenblattParams& pr) {
  return (pr.p - 1.0) / (pr.p + 1.0) * std::pow(pr.alpha() / pr.mu, 1.0 / pr.p);
}

}  // namespace

double BarenblattParams::xi_max() const {
  const double k = (p - 1.0) / (p + 1.0) * std::pow(alpha() / mu, 1.0 / p);
  return std::pow(C / k, p / (p + 1.0));
}

double barenblatt(double t, double x, const BarenblattParams& params) {
  if (!(t > 0.0)) throw std::invalid_argument("time must be positive");
  const double a = params.alpha();
  const double xi = x * std::pow(t, -a);
  const double base =
      params.C - profile_k(params) * std::pow(std::abs(xi), (params.p + 1.0) / params.p);
  if (base <= 0.0) return 0.0;
  return std::pow(t, -a) * std::pow(base, params.p / (params.p - 1.0));
}

double barenblatt_gradient(double t, double x, const BarenblattParams& params) {
  if (!(t > 0.0)) throw std::invalid_argument("time must be positive");
  const double p = params.p;
  const double a = params.alpha();
  const double xi = x * std::pow(t, -a);
  const double base = params.C - profile_k(params) * std::pow(std::abs(xi), (p + 1.0) / p);
  if (base <= 0.0) return 0.0;
  const double F = std::pow(base, p / (p - 1.0));
  // F'(xi) = -(alpha/mu)^{1/p} sgn(xi) |xi|^{1/p} F^{1/p}
  const double Fp = -std::pow(a / params.mu, 1.0 / p) *
                    (xi >= 0.0 ? 1.0 : -1.0) * std::pow(std::abs(xi), 1.0 / p) *
                    std::pow(F, 1.0 / p);
  return std::pow(t, -2.0 * a) * Fp;
}

double barenblatt_residual(const BarenblattParams& params, int n_samples) {
  if (n_samples < 1000)
    throw std::invalid_argument("residual check needs at least 1000 samples");
  const double xi_max = params.xi_max();
  const double times[] = {0.7, 1.0, 2.3};
  const int nx = n_samples / 3 + 1;
  double worst = 0.0;
  for (double t : times) {
    const double half_width = 0.9 * xi_max * std::pow(t, params.alpha());
    const double h = 1e-4 * std::max(1.0, half_width);
    const double k = 1e-5 * t;
    double max_ut = 0.0;
    std::vector<double> resid(nx);
    for (int i = 0; i < nx; ++i) {
      const double x = -half_width + 2.0 * half_width * i / (nx - 1);
      auto u = [&](double tt, double xx) { return barenblatt(tt, xx, params); };
      const double ut = (-u(t + 2 * k, x) + 8 * u(t + k, x) - 8 * u(t - k, x) +
                         u(t - 2 * k, x)) /
                        (12.0 * k);
      auto g = [&](double xx) {
        return params.mu * signed_pow(barenblatt_gradient(t, xx, params), params.p);
      };
      const double gx =
          (-g(x + 2 * h) + 8 * g(x + h) - 8 * g(x - h) + g(x - 2 * h)) / (12.0 * h);
      resid[i] = std::abs(ut - gx);
      max_ut = std::max(max_ut, std::abs(ut));
    }
    for (double r : resid) worst = std::max(worst, r / max_ut);
  }
  return worst;
}

Field barenblatt_field(const Grid& grid, double t, const BarenblattParams& params) {
  Field out(grid);
  for (int j = 0; j < grid.n_cells; ++j)
    out.values[j] = barenblatt(t, grid.center(j), params);
  return out;
}

}  // namespace plapclaw
