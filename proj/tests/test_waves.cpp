#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "plapclaw/properties.hpp"
#include "plapclaw/waves.hpp"

using namespace plapclaw;

namespace {

// Independent bisection for x0 + w0(x0) t = x with w0 the tanh profile.
double bisect_root(double t, double x, double wm, double wp, double lo, double hi) {
  auto g = [&](double z) {
    return z + (0.5 * (wm + wp) + 0.5 * (wp - wm) * std::tanh(z)) * t - x;
  };
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

const double kInf = std::numeric_limits<double>::infinity();

}  // namespace

TEST_CASE("quadratic-flux fan branches") {
  CHECK(burgers_rarefaction(-2.0, -1.0, 1.0) == -1.0);
  CHECK(burgers_rarefaction(0.5, -1.0, 1.0) == 0.5);
  CHECK(burgers_rarefaction(0.0, -1.0, 1.0) == 0.0);
  CHECK(burgers_rarefaction(3.0, -1.0, 1.0) == 1.0);
  CHECK_THROWS_WITH(burgers_rarefaction(0.0, 1.0, -1.0),
                    "not a rarefaction configuration");
}

TEST_CASE("smooth approximant at t = 0 evaluates the initial profile") {
  const auto r = smoothed_burgers(0.0, 1.3, -1.0, 1.0);
  CHECK(r.w == doctest::Approx(std::tanh(1.3)).epsilon(1e-14));
  CHECK(r.x0 == 1.3);
}

TEST_CASE("odd initial profile pins the center characteristic") {
  const auto r = smoothed_burgers(5.0, 0.0, -1.0, 1.0);
  CHECK(r.w == doctest::Approx(0.0).epsilon(1e-13));
  CHECK(r.x0 == doctest::Approx(0.0).epsilon(1e-13));
}

TEST_CASE("characteristic root matches the bisection oracle") {
  const auto r = smoothed_burgers(1.0, 1.0, -1.0, 1.0);
  // frozen: root of x0 + tanh(x0) = 1
  CHECK(r.x0 == doctest::Approx(0.52129845700027894).epsilon(1e-10));
  CHECK(r.w == doctest::Approx(0.47870154299972106).epsilon(1e-10));
  CHECK(std::abs(r.x0 - bisect_root(1.0, 1.0, -1.0, 1.0, 0.0, 1.0)) <= 5e-12);
}

TEST_CASE("characteristic residual contract over random inputs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 5000; ++i) {
    const double t = std::pow(10.0, 3.0 * unit(rng)) - 0.999;
    const double wm = -2.0 * unit(rng) - 0.1;
    const double wp = 2.0 * unit(rng) + 0.1;
    // follow the fan so the characteristic foot stays out of the saturated
    // tanh tails, where strict bounds are not resolvable in doubles
    const double x_lo = wm * t - 12.0, x_hi = wp * t + 12.0;
    const double x = x_lo + (x_hi - x_lo) * unit(rng);
    const auto r = smoothed_burgers(t, x, wm, wp);
    const double w0 = 0.5 * (wm + wp) + 0.5 * (wp - wm) * std::tanh(r.x0);
    CHECK(std::abs(x - r.x0 - w0 * t) <= 1e-11 * std::max(1.0, std::abs(x)));
    CHECK(r.w > wm);
    CHECK(r.w < wp);
  }
}

TEST_CASE("exact fan evaluation") {
  const WaveState burgers01(FluxModel::burgers(), FarField(0.0, 1.0));
  CHECK(exact_rarefaction(0.5, burgers01) == doctest::Approx(0.5));
  CHECK(exact_rarefaction(2.0, burgers01) == 1.0);
  CHECK(exact_rarefaction(-0.5, burgers01) == 0.0);

  const WaveState cubic(FluxModel::poly_convex({0.5, 0.0, 0.25}, -2.0, 2.0),
                        FarField(-1.0, 1.0));
  CHECK(exact_rarefaction(2.0, cubic) == 1.0);  // lambda(1) = 2 is the fan edge
  CHECK(exact_rarefaction(0.0, cubic) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("smoothed wave center and saturation") {
  const WaveState ws(FluxModel::burgers(), FarField(-1.0, 1.0));
  CHECK(smoothed_rarefaction(0.0, 0.0, ws) == doctest::Approx(0.0).epsilon(1e-13));
  for (double t : {0.0, 3.0, 250.0}) {
    CHECK(smoothed_rarefaction(t, t + 1e4, ws) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(smoothed_rarefaction(t, -t - 1e4, ws) ==
          doctest::Approx(-1.0).epsilon(1e-12));
  }
  CHECK(smoothed_rarefaction(1.0, 1.0, ws) ==
        doctest::Approx(0.47870154299972106).epsilon(1e-10));

  const WaveState degenerate(FluxModel::burgers(), FarField(0.5, 0.5));
  CHECK_THROWS_WITH(smoothed_rarefaction(1.0, 0.0, degenerate),
                    "degenerate fan; use constant state");
}

TEST_CASE("sampling the exact wave") {
  const WaveState ws(FluxModel::burgers(), FarField(0.0, 1.0));
  const Grid grid(-2.0, 2.0, 400);
  const Field f = sample_wave(grid, 1.0, ws, WaveKind::Exact);
  for (int j = 0; j < grid.n_cells; ++j)
    CHECK(f.values[j] == exact_rarefaction(grid.center(j) / 1.0, ws));

  // Riemann datum at t = 0; the grid has no cell centered exactly on 0 here.
  const Field r = sample_wave(grid, 0.0, ws, WaveKind::Exact);
  CHECK(r.values[0] == 0.0);
  CHECK(r.values[grid.n_cells - 1] == 1.0);

  // A grid with a center exactly on 0 takes the average.
  const Grid odd(-1.5, 1.5, 3);
  const Field ro = sample_wave(odd, 0.0, ws, WaveKind::Exact);
  CHECK(ro.values[1] == doctest::Approx(0.5));
}

TEST_CASE("smoothed sampling at t = 0 composes the inverse speed") {
  const WaveState ws(FluxModel::poly_convex({0.5, 0.0, 0.25}, -2.0, 2.0),
                     FarField(-1.0, 1.0));
  const Grid grid(-6.0, 6.0, 129);
  const Field f = sample_wave(grid, 0.0, ws, WaveKind::Smoothed);
  for (int j = 0; j < grid.n_cells; ++j) {
    const double x = grid.center(j);
    const double w = 0.5 * (ws.lambda_minus + ws.lambda_plus) +
                     0.5 * (ws.lambda_plus - ws.lambda_minus) * std::tanh(x);
    CHECK(f.values[j] == doctest::Approx(ws.flux.lambda_inverse(w)).epsilon(1e-12));
  }
}

TEST_CASE("smoothed wave approaches the exact fan") {
  const WaveState ws(FluxModel::burgers(), FarField(-1.0, 1.0));
  auto sup_diff = [&](double t) {
    const Grid g(-t - 12.0, t + 12.0, 4000);
    double sup = 0.0;
    for (int j = 0; j < g.n_cells; ++j) {
      const double x = g.center(j);
      sup = std::max(sup, std::abs(smoothed_rarefaction(t, x, ws) -
                                   exact_rarefaction(x / t, ws)));
    }
    return sup;
  };
  const double d10 = sup_diff(10.0);
  const double d1000 = sup_diff(1000.0);
  CHECK(d1000 <= d10);
  CHECK(d1000 <= sup_diff(100.0));
}

TEST_CASE("wave property suites hold") {
  for (const auto& outcome : fan_approximant_suite()) {
    INFO(outcome.name, " ", outcome.detail);
    CHECK(outcome.pass);
  }
  for (const auto& outcome : smoothed_wave_suite()) {
    INFO(outcome.name, " ", outcome.detail);
    CHECK(outcome.pass);
  }
}

TEST_CASE("sampled gradient decay rates") {
  const WaveState ws(FluxModel::burgers(), FarField(-1.0, 1.0));
  for (double q : {1.0, 2.0, kInf}) {
    const DecayFit fit = wave_gradient_decay_fit(ws, q, 1.0, 1000.0, 0.1);
    INFO("q = ", q, " fitted ", fit.exponent, " reference ", fit.reference_exponent);
    CHECK(std::abs(fit.exponent - fit.reference_exponent) <= 0.1);
  }
}
