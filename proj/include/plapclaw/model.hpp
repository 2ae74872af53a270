#ifndef PLAPCLAW_MODEL_HPP
#define PLAPCLAW_MODEL_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace plapclaw {

/// Odd power map s -> |s|^{p-1} s with p > 1. Vanishes (degenerately) at
/// s = 0, which is what makes the diffusion below nonlinear.
double signed_pow(double a, double p);

/// Residual LHS - RHS of the algebraic identity
///   (|a|^{p-1}a - |b|^{p-1}b)(a - b)
///     = 1/2 (|a|^{p-1} + |b|^{p-1})(a - b)^2
///     + 1/2 (|a|^{p-1} - |b|^{p-1})(a^2 - b^2).
/// Exact in real arithmetic; the return value is pure rounding noise.
double identity_45_residual(double a, double b, double p);

struct ViscosityParams {
  double p;   // nonlinearity exponent, > 1
  double mu;  // viscosity coefficient, > 0

  ViscosityParams(double p_, double mu_) : p(p_), mu(mu_) {
    if (!(p > 1.0)) throw std::invalid_argument("p must exceed 1");
    if (!(mu > 0.0)) throw std::invalid_argument("mu must be positive");
  }
};

/// Convex flux f with f(0) = f'(0) = 0 and f'' > 0 on a declared admissible
/// interval [u_lo, u_hi]. lambda = f' is strictly increasing there, hence
/// invertible; lambda_inverse solves lambda(u) = y by safeguarded Newton.
class FluxModel {
 public:
  enum class Kind { Burgers, PolyConvex };

  static FluxModel burgers(double u_lo = -50.0, double u_hi = 50.0);

  /// Polynomial flux f(u) = sum_{k>=2} c_k u^k; `coeffs` starts at the u^2
  /// term so f(0) = f'(0) = 0 holds by construction. Convexity is checked by
  /// dense sampling of f'' on [u_lo, u_hi]; non-convex inputs are rejected.
  static FluxModel poly_convex(std::vector<double> coeffs, double u_lo,
                               double u_hi);

  double f(double u) const;
  double lambda(double u) const;        // f'
  double lambda_prime(double u) const;  // f''

  /// Unique u in [u_lo, u_hi] with lambda(u) = y, to 1e-12 absolute.
  /// Throws std::domain_error("value outside lambda range") when y is not in
  /// [lambda(u_lo), lambda(u_hi)].
  double lambda_inverse(double y) const;

  Kind kind() const { return kind_; }
  double u_lo() const { return u_lo_; }
  double u_hi() const { return u_hi_; }
  const std::vector<double>& coefficients() const { return coeffs_; }

 private:
  FluxModel(Kind kind, std::vector<double> coeffs, double u_lo, double u_hi);

  Kind kind_;
  std::vector<double> coeffs_;  // ascending powers, starting at u^2
  double u_lo_, u_hi_;
};

struct Grid {
  double x_min;
  double x_max;
  int n_cells;

  Grid(double x_min_, double x_max_, int n_cells_)
      : x_min(x_min_), x_max(x_max_), n_cells(n_cells_) {
    if (!(x_min < x_max)) throw std::invalid_argument("x_min must be below x_max");
    if (n_cells < 2) throw std::invalid_argument("n_cells must be at least 2");
  }

  double dx() const { return (x_max - x_min) / n_cells; }
  double center(int j) const { return x_min + (j + 0.5) * dx(); }
};

/// Cell-centered samples on a uniform grid. Integrals over a Field use the
/// midpoint rule sum(v_j) * dx throughout.
struct Field {
  Grid grid;
  std::vector<double> values;

  explicit Field(Grid g) : grid(g), values(static_cast<size_t>(g.n_cells), 0.0) {}
  Field(Grid g, std::vector<double> v);
};

struct FarField {
  double u_minus;
  double u_plus;

  FarField(double um, double up) : u_minus(um), u_plus(up) {
    if (!(u_minus <= u_plus))
      throw std::invalid_argument("far field states must satisfy u_minus <= u_plus");
  }
};

}  // namespace plapclaw

#endif
