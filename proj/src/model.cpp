#include "plapclaw/model.hpp"

#include <algorithm>
#include <cmath>

namespace plapclaw {

double signed_pow(double a, double p) {
  if (!std::isfinite(a)) throw std::invalid_argument("non-finite input");
  if (a == 0.0) return 0.0;
  if (p == 2.0) return std::abs(a) * a;
  if (p == 3.0) return a * a * a;
  if (p == 1.5) return std::sqrt(std::abs(a)) * a;
  return std::pow(std::abs(a), p - 1.0) * a;
}

double identity_45_residual(double a, double b, double p) {
  if (!std::isfinite(a) || !std::isfinite(b))
    throw std::invalid_argument("non-finite input");
  const double abs_a = std::pow(std::abs(a), p - 1.0);
  const double abs_b = std::pow(std::abs(b), p - 1.0);
  const double lhs = (signed_pow(a, p) - signed_pow(b, p)) * (a - b);
  const double rhs = 0.5 * (abs_a + abs_b) * (a - b) * (a - b) +
                     0.5 * (abs_a - abs_b) * (a * a - b * b);
  return lhs - rhs;
}

Field::Field(Grid g, std::vector<double> v) : grid(g), values(std::move(v)) {
  if (values.size() != static_cast<size_t>(grid.n_cells))
    throw std::invalid_argument("field length does not match grid");
  for (double x : values)
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite field value");
}

FluxModel::FluxModel(Kind kind, std::vector<double> coeffs, double u_lo,
                     double u_hi)
    : kind_(kind), coeffs_(std::move(coeffs)), u_lo_(u_lo), u_hi_(u_hi) {
  if (!(u_lo_ < u_hi_))
    throw std::invalid_argument("flux interval must satisfy u_lo < u_hi");
  if (kind_ == Kind::PolyConvex) {
    if (coeffs_.empty())
      throw std::invalid_argument("polynomial flux needs at least one coefficient");
    // Dense convexity check; a strictly increasing lambda is what makes the
    // rarefaction construction well defined.
    const int samples = 10000;
    for (int i = 0; i <= samples; ++i) {
      const double u = u_lo_ + (u_hi_ - u_lo_) * i / samples;
      if (!(lambda_prime(u) > 0.0))
        throw std::invalid_argument(
            "flux is not strictly convex on the admissible interval");
    }
  }
}

FluxModel FluxModel::burgers(double u_lo, double u_hi) {
  return FluxModel(Kind::Burgers, {0.5}, u_lo, u_hi);
}

FluxModel FluxModel::poly_convex(std::vector<double> coeffs, double u_lo,
                                 double u_hi) {
  return FluxModel(Kind::PolyConvex, std::move(coeffs), u_lo, u_hi);
}

double FluxModel::f(double u) const {
  if (kind_ == Kind::Burgers) return 0.5 * u * u;
  // Horner on f(u)/u^2.
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * u + *it;
  return acc * u * u;
}

double FluxModel::lambda(double u) const {
  if (kind_ == Kind::Burgers) return u;
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * u + (i + 2.0) * coeffs_[i];
  return acc * u;
}

double FluxModel::lambda_prime(double u) const {
  if (kind_ == Kind::Burgers) return 1.0;
  double acc = 0.0;
  for (size_t i = coeffs_.size(); i-- > 0;) {
    const double k = i + 2.0;
    acc = acc * u + k * (k - 1.0) * coeffs_[i];
  }
  return acc;
}

double FluxModel::lambda_inverse(double y) const {
  const double y_lo = lambda(u_lo_);
  const double y_hi = lambda(u_hi_);
  if (y < y_lo || y > y_hi)
    throw std::domain_error("value outside lambda range");
  if (kind_ == Kind::Burgers) return y;

  const double rtol = 1e-14 * std::max(1.0, std::abs(y));
  double lo = u_lo_, hi = u_hi_;
  double u = lo + (hi - lo) * (y - y_lo) / (y_hi - y_lo + 1e-300);
  double g = lambda(u) - y;
  for (int it = 0; it < 200 && std::abs(g) > rtol; ++it) {
    if (g > 0.0)
      hi = u;
    else
      lo = u;
    if (hi - lo <= 1e-13) return 0.5 * (lo + hi);
    double next = u - g / lambda_prime(u);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);  // bisection fallback
    double g_next = lambda(next) - y;
    if (std::abs(g_next) > 0.9 * std::abs(g)) {  // demand contraction
      next = 0.5 * (lo + hi);
      g_next = lambda(next) - y;
    }
    u = next;
    g = g_next;
  }
  return u;
}

}  // namespace plapclaw
