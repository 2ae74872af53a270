#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "plapclaw/model.hpp"

using namespace plapclaw;

namespace {

// Independent bisection oracle for lambda(u) = y on a bracket.
double bisect_lambda(const FluxModel& fx, double y, double lo, double hi) {
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (fx.lambda(mid) < y)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("signed_pow basic values") {
  CHECK(signed_pow(2.0, 2.0) == doctest::Approx(4.0));
  CHECK(signed_pow(-2.0, 2.0) == doctest::Approx(-4.0));
  CHECK(signed_pow(0.0, 1.5) == 0.0);
  CHECK(signed_pow(3.0, 1.5) == doctest::Approx(std::pow(3.0, 1.5)));
  CHECK_THROWS_WITH(signed_pow(std::nan(""), 2.0), "non-finite input");
}

TEST_CASE("signed_pow is exactly odd") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> state(-10.0, 10.0);
  std::uniform_real_distribution<double> expo(1.0 + 1e-9, 4.0);
  for (int i = 0; i < 10000; ++i) {
    const double a = state(rng), p = expo(rng);
    CHECK(signed_pow(-a, p) == -signed_pow(a, p));
  }
}

TEST_CASE("signed_pow is strictly increasing") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> state(-5.0, 5.0);
  for (int i = 0; i < 2000; ++i) {
    double a = state(rng), b = state(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(signed_pow(a, 2.5) < signed_pow(b, 2.5));
  }
}

TEST_CASE("dissipation identity closed-form cases") {
  // b = 0: LHS = |a|^{p-1} a^2, both halves contribute equally.
  CHECK(identity_45_residual(1.0, 0.0, 2.0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(identity_45_residual(0.7, 0.7, 3.2) == 0.0);
  CHECK(std::abs(identity_45_residual(1.7, -0.3, 2.5)) <=
        1e-12 * std::pow(1.7, 3.5));
}

TEST_CASE("dissipation identity randomized residual") {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> state(-3.0, 3.0);
  std::uniform_real_distribution<double> expo(1.0 + 1e-6, 4.0);
  for (int i = 0; i < 20000; ++i) {
    const double a = state(rng);
    const double b = (i % 5 == 0) ? a + 1e-13 : state(rng);
    const double p = expo(rng);
    const double scale = std::pow(std::max(std::abs(a), std::abs(b)), p + 1.0);
    if (scale == 0.0) continue;
    CHECK(std::abs(identity_45_residual(a, b, p)) <= 1e-10 * scale);
  }
}

TEST_CASE("viscosity parameter validation") {
  CHECK_THROWS_WITH(ViscosityParams(0.5, 1.0), "p must exceed 1");
  CHECK_THROWS_WITH(ViscosityParams(1.0, 1.0), "p must exceed 1");
  CHECK_THROWS_WITH(ViscosityParams(2.0, 0.0), "mu must be positive");
  CHECK(ViscosityParams(1.5, 0.3).p == 1.5);
}

TEST_CASE("grid and field validation") {
  CHECK_THROWS(Grid(1.0, 0.0, 10));
  CHECK_THROWS(Grid(0.0, 1.0, 1));
  const Grid g(0.0, 1.0, 10);
  CHECK(g.dx() == doctest::Approx(0.1));
  CHECK(g.center(0) == doctest::Approx(0.05));
  CHECK_THROWS(Field(g, std::vector<double>(5, 0.0)));
  std::vector<double> bad(10, 0.0);
  bad[3] = std::numeric_limits<double>::infinity();
  CHECK_THROWS(Field(g, bad));
}

TEST_CASE("far field ordering") {
  CHECK_THROWS(FarField(1.0, -1.0));
  CHECK(FarField(0.5, 0.5).u_minus == 0.5);  // constant-state case allowed
}

TEST_CASE("burgers flux closed forms") {
  const FluxModel fx = FluxModel::burgers();
  CHECK(fx.f(0.0) == 0.0);
  CHECK(fx.lambda(0.0) == 0.0);
  CHECK(fx.f(0.7) == doctest::Approx(0.245));
  CHECK(fx.lambda(3.0) == 3.0);
  CHECK(fx.lambda_prime(-2.0) == 1.0);
  CHECK(fx.lambda_inverse(0.5) == doctest::Approx(0.5));
}

TEST_CASE("polynomial flux evaluation and inversion") {
  // f(u) = u^2/2 + u^4/4, lambda(u) = u + u^3
  const FluxModel fx = FluxModel::poly_convex({0.5, 0.0, 0.25}, -2.0, 2.0);
  CHECK(fx.f(1.0) == doctest::Approx(0.75));
  CHECK(fx.lambda(1.0) == doctest::Approx(2.0));
  CHECK(fx.lambda_prime(1.0) == doctest::Approx(4.0));
  CHECK(fx.lambda_inverse(2.0) == doctest::Approx(1.0).epsilon(1e-12));
  // root of u + u^3 = 1, frozen from the bisection oracle
  CHECK(fx.lambda_inverse(1.0) ==
        doctest::Approx(0.68232780382801933).epsilon(1e-11));
  CHECK(std::abs(fx.lambda_inverse(1.0) - bisect_lambda(fx, 1.0, 0.0, 1.0)) <=
        5e-12);
  CHECK_THROWS_WITH(fx.lambda_inverse(100.0), "value outside lambda range");
}

TEST_CASE("lambda inversion round trip") {
  const FluxModel cubic = FluxModel::poly_convex({0.5, 0.0, 0.25}, -2.0, 2.0);
  const FluxModel quadratic = FluxModel::poly_convex({0.3, 0.05}, -1.5, 3.0);
  for (const auto* fx : {&cubic, &quadratic}) {
    for (int i = 0; i <= 500; ++i) {
      const double u = fx->u_lo() + (fx->u_hi() - fx->u_lo()) * i / 500.0;
      CHECK(fx->lambda_inverse(fx->lambda(u)) == doctest::Approx(u).epsilon(1e-10));
    }
  }
}

TEST_CASE("non-convex polynomials are rejected") {
  // f = u^2/2 - u^4 loses convexity away from 0
  CHECK_THROWS(FluxModel::poly_convex({0.5, 0.0, -1.0}, -2.0, 2.0));
  // concave everywhere
  CHECK_THROWS(FluxModel::poly_convex({-0.5}, -1.0, 1.0));
  // convex on a small interval is fine even if not on a larger one
  CHECK_NOTHROW(FluxModel::poly_convex({0.5, 0.0, -0.01}, -1.0, 1.0));
}
