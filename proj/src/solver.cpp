#include "plapclaw/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace plapclaw {

namespace {

constexpr double kDtUnderflow = 1e-14;

void fill_ghosts(const std::vector<double>& u, std::vector<double>& ext,
                 const Problem& prob) {
  const int n = static_cast<int>(u.size());
  std::copy(u.begin(), u.end(), ext.begin() + 1);
  if (prob.boundary == BoundaryRule::DirichletFarField) {
    ext[0] = prob.far_field.u_minus;
    ext[n + 1] = prob.far_field.u_plus;
  } else {
    ext[0] = u[0];
    ext[n + 1] = u[n - 1];
  }
}

// Interface totals T_i = G_i - F_i so that a conservative update reads
// u_j += (dt/dx) (T_{j+1} - T_j).
void interface_totals(const std::vector<double>& ext, std::vector<double>& T,
                      const Problem& prob) {
  const int n_if = static_cast<int>(T.size());
  const double dx = prob.grid.dx();
  const double inv_dx = 1.0 / dx;
  const double p = prob.visc.p;
  const double mu = prob.visc.mu;

  if (!prob.flux) {
    if (p == 2.0) {
      for (int i = 0; i < n_if; ++i) {
        const double s = (ext[i + 1] - ext[i]) * inv_dx;
        T[i] = mu * std::abs(s) * s;
      }
    } else {
      for (int i = 0; i < n_if; ++i)
        T[i] = mu * signed_pow((ext[i + 1] - ext[i]) * inv_dx, p);
    }
    return;
  }

  const FluxModel& fx = *prob.flux;
  if (fx.kind() == FluxModel::Kind::Burgers) {
    for (int i = 0; i < n_if; ++i) {
      const double ul = ext[i], ur = ext[i + 1];
      const double a = std::max(std::abs(ul), std::abs(ur));
      const double F = 0.25 * (ul * ul + ur * ur) - 0.5 * a * (ur - ul);
      const double s = (ur - ul) * inv_dx;
      const double G = (p == 2.0) ? mu * std::abs(s) * s : mu * signed_pow(s, p);
      T[i] = G - F;
    }
    return;
  }

  for (int i = 0; i < n_if; ++i) {
    const double ul = ext[i], ur = ext[i + 1];
    const double a = std::max(std::abs(fx.lambda(ul)), std::abs(fx.lambda(ur)));
    const double F = 0.5 * (fx.f(ul) + fx.f(ur)) - 0.5 * a * (ur - ul);
    const double G = mu * signed_pow((ur - ul) * inv_dx, p);
    T[i] = G - F;
  }
}

struct StepStats {
  double mass = 0.0;
  double min_u = std::numeric_limits<double>::infinity();
  double max_u = -std::numeric_limits<double>::infinity();
};

struct Workspace {
  std::vector<double> ext;     // n + 2
  std::vector<double> totals;  // n + 1
  std::vector<double> stage;   // n

  explicit Workspace(int n) : ext(n + 2), totals(n + 1), stage(n) {}
};

// Two-stage SSP Runge-Kutta (Heun). The final combination is a convex
// average of forward-Euler updates, so the monotone-scheme bounds carry over.
void heun_step(std::vector<double>& u, double dt, const Problem& prob,
               Workspace& ws, StepStats& stats) {
  const int n = static_cast<int>(u.size());
  const double r = dt / prob.grid.dx();

  fill_ghosts(u, ws.ext, prob);
  interface_totals(ws.ext, ws.totals, prob);
  for (int j = 0; j < n; ++j)
    ws.stage[j] = u[j] + r * (ws.totals[j + 1] - ws.totals[j]);

  fill_ghosts(ws.stage, ws.ext, prob);
  interface_totals(ws.ext, ws.totals, prob);

  double sum = 0.0, comp = 0.0;  // Kahan
  double mn = std::numeric_limits<double>::infinity();
  double mx = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < n; ++j) {
    const double v =
        0.5 * u[j] + 0.5 * (ws.stage[j] + r * (ws.totals[j + 1] - ws.totals[j]));
    u[j] = v;
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    mn = std::min(mn, v);
    mx = std::max(mx, v);
  }
  stats.mass = sum * prob.grid.dx();
  stats.min_u = mn;
  stats.max_u = mx;
}

double field_mass(const std::vector<double>& u, double dx) {
  double sum = 0.0, comp = 0.0;
  for (double v : u) {
    const double y = v - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum * dx;
}

double stable_dt_raw(const std::vector<double>& u, const Problem& prob,
                     double t_now) {
  const int n = prob.grid.n_cells;
  const double dx = prob.grid.dx();

  double advective = std::numeric_limits<double>::infinity();
  if (prob.flux) {
    double a_max = 0.0;
    for (double v : u) a_max = std::max(a_max, std::abs(prob.flux->lambda(v)));
    if (a_max > 0.0) advective = dx / a_max;
  }

  double s_max = 0.0;
  if (prob.boundary == BoundaryRule::DirichletFarField) {
    s_max = std::max(std::abs(u[0] - prob.far_field.u_minus),
                     std::abs(prob.far_field.u_plus - u[n - 1]));
  }
  for (int j = 0; j + 1 < n; ++j)
    s_max = std::max(s_max, std::abs(u[j + 1] - u[j]));
  s_max /= dx;

  double diffusive = std::numeric_limits<double>::infinity();
  if (s_max > 0.0)
    diffusive = dx * dx /
                (2.0 * prob.visc.mu * prob.visc.p * std::pow(s_max, prob.visc.p - 1.0));

  double dt = prob.time.cfl * std::min(advective, diffusive);
  if (!(dt >= kDtUnderflow))
    throw NumericalBlowup(t_now, "time step underflow below 1e-14");

  // Land exactly on the next observation time (and on t_end).
  double limit = prob.time.t_end - t_now;
  for (double tobs : prob.time.observations)
    if (tobs > t_now + 1e-12 * std::max(1.0, tobs)) {
      limit = std::min(limit, tobs - t_now);
      break;
    }
  return std::min(dt, limit);
}

}  // namespace

double BumpSpec::evaluate(double x) const {
  const double z = (x - center) / width;
  switch (shape) {
    case Shape::Gaussian:
      return amplitude * std::exp(-z * z);
    case Shape::CompactHat:
      return amplitude * std::max(0.0, 1.0 - std::abs(z));
    case Shape::PowerTail: {
      // |x|^{-2 decay} tails (square integrable for decay > 1/4, not
      // integrable for decay <= 1/2), smoothly truncated at 50 widths.
      constexpr double kCut = 50.0;
      if (std::abs(z) >= kCut) return 0.0;
      const double window = 1.0 - (z / kCut) * (z / kCut);
      return amplitude * std::pow(1.0 + z * z, -tail_decay) * window * window;
    }
  }
  return 0.0;
}

void Problem::validate() const {
  if (!(time.cfl > 0.0 && time.cfl < 1.0))
    throw std::invalid_argument("cfl must lie in (0,1)");
  if (!(time.t_end > 0.0)) throw std::invalid_argument("t_end must be positive");
  if (grid.n_cells < 3) throw std::invalid_argument("n_cells must be at least 3");

  double prev = -std::numeric_limits<double>::infinity();
  for (double tobs : time.observations) {
    if (tobs < 0.0 || tobs > time.t_end * (1.0 + 1e-12))
      throw std::invalid_argument("observation times must lie in [0, t_end]");
    if (tobs < prev) throw std::invalid_argument("observation times must be sorted");
    prev = tobs;
  }

  const double lam_m = flux ? flux->lambda(far_field.u_minus) : 0.0;
  const double lam_p = flux ? flux->lambda(far_field.u_plus) : 0.0;
  if (-grid.x_min < std::abs(lam_m) * time.t_end + 10.0 ||
      grid.x_max < std::abs(lam_p) * time.t_end + 10.0)
    throw std::invalid_argument(
        "grid too narrow: boundaries must clear the fan by a margin of 10");

  if (flux) {
    const double amp = initial.bump ? std::abs(initial.bump->amplitude) : 0.0;
    double margin = 1.0 + amp;
    if (initial.base == InitialSpec::Base::ExactRiemann)
      margin += far_field.u_plus - far_field.u_minus;
    if (far_field.u_minus - margin < flux->u_lo() ||
        far_field.u_plus + margin > flux->u_hi())
      throw std::invalid_argument(
          "flux admissible interval too small for the reachable states");
  } else {
    if (far_field.u_minus != far_field.u_plus)
      throw std::invalid_argument(
          "pure diffusion runs need equal far field states");
  }

  switch (initial.base) {
    case InitialSpec::Base::SmoothedRarefaction:
      if (!flux) throw std::invalid_argument("rarefaction base needs a flux");
      if (!(far_field.u_minus < far_field.u_plus))
        throw std::invalid_argument("degenerate fan; use constant state");
      break;
    case InitialSpec::Base::ExactRiemann:
      if (!flux) throw std::invalid_argument("Riemann base needs a flux");
      break;
    case InitialSpec::Base::Constant:
      if (far_field.u_minus != initial.constant_value ||
          far_field.u_plus != initial.constant_value)
        throw std::invalid_argument(
            "constant base requires far fields equal to the constant");
      break;
    case InitialSpec::Base::Barenblatt:
      if (!(initial.barenblatt_t0 > 0.0))
        throw std::invalid_argument("Barenblatt start time must be positive");
      if (far_field.u_minus != 0.0 || far_field.u_plus != 0.0)
        throw std::invalid_argument("Barenblatt base requires zero far fields");
      break;
  }

  if (initial.bump && !(initial.bump->width > 0.0))
    throw std::invalid_argument("bump width must be positive");
}

std::optional<WaveState> Problem::wave_state() const {
  if (!flux || !(far_field.u_minus < far_field.u_plus)) return std::nullopt;
  return WaveState(*flux, far_field);
}

Field Problem::initial_field() const {
  Field out(grid);
  switch (initial.base) {
    case InitialSpec::Base::SmoothedRarefaction:
      out = sample_wave(grid, 0.0, *wave_state(), WaveKind::Smoothed);
      break;
    case InitialSpec::Base::ExactRiemann:
      out = sample_wave(grid, 0.0, WaveState(*flux, far_field), WaveKind::Exact);
      break;
    case InitialSpec::Base::Constant:
      std::fill(out.values.begin(), out.values.end(), initial.constant_value);
      break;
    case InitialSpec::Base::Barenblatt: {
      const BarenblattParams params(visc.p, initial.barenblatt_C, visc.mu);
      out = barenblatt_field(grid, initial.barenblatt_t0, params);
      break;
    }
  }
  if (initial.bump)
    for (int j = 0; j < grid.n_cells; ++j)
      out.values[j] += initial.bump->evaluate(grid.center(j));
  return out;
}

double numerical_flux(double u_left, double u_right, const FluxModel& flux) {
  const double a =
      std::max(std::abs(flux.lambda(u_left)), std::abs(flux.lambda(u_right)));
  return 0.5 * (flux.f(u_left) + flux.f(u_right)) - 0.5 * a * (u_right - u_left);
}

double viscous_flux(double u_left, double u_right, double dx,
                    const ViscosityParams& visc) {
  if (!(dx > 0.0)) throw std::invalid_argument("dx must be positive");
  return visc.mu * signed_pow((u_right - u_left) / dx, visc.p);
}

double stable_dt(const Field& state, const Problem& prob, double t_now) {
  return stable_dt_raw(state.values, prob, t_now);
}

Field step(const Field& state, double dt, const Problem& prob) {
  Workspace ws(prob.grid.n_cells);
  StepStats stats;
  std::vector<double> u = state.values;
  heun_step(u, dt, prob, ws, stats);
  if (!std::isfinite(stats.mass) || !std::isfinite(stats.min_u) ||
      !std::isfinite(stats.max_u))
    throw NumericalBlowup(std::numeric_limits<double>::quiet_NaN(),
                          "numerical blow-up");
  return Field(state.grid, std::move(u));
}

Trajectory run(const Problem& prob) {
  prob.validate();
  Field init = prob.initial_field();
  std::vector<double> u = init.values;
  const int n = prob.grid.n_cells;
  Workspace ws(n);

  Trajectory traj;
  traj.steps.reserve(4096);

  double t = 0.0;
  double prev_min = *std::min_element(u.begin(), u.end());
  double prev_max = *std::max_element(u.begin(), u.end());
  const double mass0 = field_mass(u, prob.grid.dx());

  size_t oi = 0;
  const auto& obs = prob.time.observations;
  auto maybe_snapshot = [&]() {
    while (oi < obs.size() && t >= obs[oi] - 1e-9 * std::max(1.0, obs[oi])) {
      traj.snapshots.emplace_back(obs[oi], Field(prob.grid, u));
      ++oi;
    }
  };
  maybe_snapshot();

  const double t_stop = prob.time.t_end * (1.0 - 1e-13);
  while (t < t_stop) {
    const double dt = stable_dt_raw(u, prob, t);
    StepStats stats;
    heun_step(u, dt, prob, ws, stats);
    t += dt;
    if (!std::isfinite(stats.mass) || !std::isfinite(stats.min_u) ||
        !std::isfinite(stats.max_u))
      throw NumericalBlowup(t, "numerical blow-up");

    traj.max_principle_slack =
        std::max({traj.max_principle_slack, prev_min - stats.min_u,
                  stats.max_u - prev_max});
    prev_min = stats.min_u;
    prev_max = stats.max_u;
    if (mass0 != 0.0)
      traj.mass_rel_drift = std::max(traj.mass_rel_drift,
                                     std::abs(stats.mass - mass0) / std::abs(mass0));

    traj.steps.push_back({t, dt, stats.mass, stats.min_u, stats.max_u});
    // Snap onto observation times so snapshot labels stay exact.
    if (oi < obs.size() && std::abs(t - obs[oi]) <= 1e-9 * std::max(1.0, obs[oi]))
      t = obs[oi];
    maybe_snapshot();
  }
  return traj;
}

}  // namespace plapclaw
