#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "plapclaw/diagnostics.hpp"
#include "plapclaw/oracles.hpp"
#include "plapclaw/properties.hpp"
#include "plapclaw/rates.hpp"

using namespace plapclaw;

TEST_CASE("parameter validation") {
  CHECK_THROWS_WITH(BarenblattParams(1.0, 1.0), "p must exceed 1");
  CHECK_THROWS(BarenblattParams(2.0, -1.0));
  CHECK_THROWS(BarenblattParams(2.0, 1.0, 0.0));
  CHECK(BarenblattParams(2.0, 1.0).alpha() == doctest::Approx(0.25));
  CHECK(BarenblattParams(2.0, 1.0).xi_max() > 0.0);
  CHECK_THROWS(barenblatt(0.0, 0.0, BarenblattParams(2.0, 1.0)));
  CHECK_THROWS(barenblatt(-1.0, 0.0, BarenblattParams(2.0, 1.0)));
}

TEST_CASE("profile center value and compact support") {
  const BarenblattParams params(2.0, 1.0);
  CHECK(barenblatt(1.0, 0.0, params) == doctest::Approx(1.0));  // C^{p/(p-1)}
  const double edge = params.xi_max();
  CHECK(barenblatt(1.0, edge * 1.0001, params) == 0.0);
  CHECK(barenblatt(1.0, -edge * 1.5, params) == 0.0);
  CHECK(barenblatt(1.0, edge * 0.999, params) > 0.0);
  CHECK(barenblatt_gradient(1.0, edge * 1.2, params) == 0.0);
}

TEST_CASE("evenness and gradient oddness") {
  const BarenblattParams params(1.7, 0.9, 1.3);
  for (double x : {0.1, 0.37, 1.2, 2.0}) {
    CHECK(barenblatt(2.0, x, params) == barenblatt(2.0, -x, params));
    CHECK(barenblatt_gradient(2.0, x, params) ==
          -barenblatt_gradient(2.0, -x, params));
  }
}

TEST_CASE("analytic gradient matches finite differences away from the kinks") {
  const BarenblattParams params(2.5, 1.2, 0.8);
  const double t = 1.4;
  const double h = 1e-6;
  for (double xi_frac : {0.2, 0.5, 0.8}) {
    const double x = xi_frac * params.xi_max() * std::pow(t, params.alpha());
    const double fd =
        (barenblatt(t, x + h, params) - barenblatt(t, x - h, params)) / (2.0 * h);
    CHECK(barenblatt_gradient(t, x, params) == doctest::Approx(fd).epsilon(1e-7));
  }
}

TEST_CASE("pointwise residual gate for the derived profile") {
  for (double p : {1.5, 2.0, 3.0}) {
    const double resid = barenblatt_residual(BarenblattParams(p, 1.0), 3000);
    INFO("p = ", p, " residual ", resid);
    CHECK(resid <= 1e-3);
  }
  CHECK(barenblatt_residual(BarenblattParams(2.0, 4.0), 3000) <= 1e-3);
  CHECK(barenblatt_residual(BarenblattParams(1.5, 1.0, 0.6), 3000) <= 1e-3);
  CHECK_THROWS(barenblatt_residual(BarenblattParams(2.0, 1.0), 10));
}

TEST_CASE("field sampling: symmetry and sup value") {
  const BarenblattParams params(2.0, 1.0);
  const Grid g(-6.0, 6.0, 1200);
  const Field f = barenblatt_field(g, 2.0, params);
  for (int j = 0; j < g.n_cells / 2; ++j)
    CHECK(std::abs(f.values[j] - f.values[g.n_cells - 1 - j]) <= 1e-14);
  const double sup = lq_norm(f, std::numeric_limits<double>::infinity());
  // grid centers straddle the peak; the sampled sup sits just below t^{-a} C^2
  const double exact_sup = std::pow(2.0, -0.25);
  CHECK(sup <= exact_sup);
  CHECK(sup >= exact_sup * (1.0 - 1e-4));
}

TEST_CASE("similarity family suite") {
  for (const auto& outcome : barenblatt_suite()) {
    INFO(outcome.name, " ", outcome.detail);
    CHECK(outcome.pass);
  }
}

TEST_CASE("norm decay of the family matches the diffusion-only rates") {
  const BarenblattParams params(2.0, 1.0);
  std::vector<double> times;
  for (double t = 2.0; t <= 2048.0; t *= 2.0) times.push_back(t);
  const Grid g(-45.0, 45.0, 45000);
  for (double q : {1.0, 2.0, std::numeric_limits<double>::infinity()}) {
    std::vector<double> norms;
    for (double t : times) norms.push_back(lq_norm(barenblatt_field(g, t, params), q));
    const double ref = reference_exponent_lq(RateSet::Thm7_2, params.p, q);
    const DecayFit fit = decay_fit(times, norms, ref, 2.0, 2048.0, 0.05);
    INFO("q = ", q, " fitted ", fit.exponent, " ref ", ref);
    // exact in t (not 1+t); the log(1+t) abscissa costs a little at t = O(1)
    CHECK(std::abs(fit.exponent - ref) <= 0.04);
  }
}

TEST_CASE("gradient norm decay matches the higher-derivative rates") {
  const BarenblattParams params(2.0, 1.0);
  std::vector<double> times;
  for (double t = 4.0; t <= 4096.0; t *= 2.0) times.push_back(t);
  const Grid g(-60.0, 60.0, 60000);

  // base exponent p+1 and one r+1 > p+1; the family attains both rates
  const double exponents[] = {params.p + 1.0, 4.0};
  for (double r_plus_1 : exponents) {
    std::vector<double> norms;
    for (double t : times)
      norms.push_back(
          lq_norm(discrete_gradient(barenblatt_field(g, t, params)), r_plus_1));
    const double ref =
        r_plus_1 == params.p + 1.0
            ? reference_exponent_gradient(RateSet::Thm7_2, params.p, r_plus_1)
            : reference_exponent_gradient(RateSet::Thm7_3, params.p, r_plus_1);
    const DecayFit fit = decay_fit(times, norms, ref, 4.0, 4096.0, 0.05);
    INFO("r+1 = ", r_plus_1, " fitted ", fit.exponent, " ref ", ref);
    CHECK(std::abs(fit.exponent - ref) <= 0.05);
  }
}
