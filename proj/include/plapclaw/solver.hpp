#ifndef PLAPCLAW_SOLVER_HPP
#define PLAPCLAW_SOLVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "plapclaw/model.hpp"
#include "plapclaw/oracles.hpp"
#include "plapclaw/waves.hpp"

namespace plapclaw {

enum class BoundaryRule { DirichletFarField, ZeroGradient };

struct BumpSpec {
  enum class Shape { Gaussian, CompactHat, PowerTail };
  Shape shape = Shape::Gaussian;
  double amplitude = 0.0;
  double center = 0.0;
  double width = 1.0;
  double tail_decay = 0.4;  // PowerTail only: |x|^{-2*tail_decay} far field

  double evaluate(double x) const;
};

struct InitialSpec {
  enum class Base { SmoothedRarefaction, ExactRiemann, Constant, Barenblatt };
  Base base = Base::SmoothedRarefaction;
  double constant_value = 0.0;    // Constant
  double barenblatt_t0 = 1.0;     // Barenblatt
  double barenblatt_C = 1.0;      // Barenblatt
  std::optional<BumpSpec> bump;
};

struct TimeSchedule {
  double t_end = 1.0;
  double cfl = 0.4;
  std::vector<double> observations;  // sorted, within [0, t_end]
};

/// Full problem statement. `flux` empty means the pure degenerate-diffusion
/// equation u_t = mu (|u_x|^{p-1} u_x)_x (no convective term).
struct Problem {
  std::optional<FluxModel> flux;
  ViscosityParams visc;
  FarField far_field;
  InitialSpec initial;
  Grid grid;
  TimeSchedule time;
  BoundaryRule boundary = BoundaryRule::DirichletFarField;

  /// Checks the cross-field invariants: observation times sorted inside
  /// [0, t_end], CFL in (0,1), the fan never reaching the boundary, and the
  /// admissible flux interval covering the reachable states.
  void validate() const;

  /// Cell-centered initial data per `initial` (base state plus optional bump).
  Field initial_field() const;

  std::optional<WaveState> wave_state() const;
};

struct StepRecord {
  double t;
  double dt;
  double mass;
  double min_u;
  double max_u;
};

struct Trajectory {
  std::vector<std::pair<double, Field>> snapshots;
  std::vector<StepRecord> steps;
  // Run summary: worst per-step violation of the discrete max principle and
  // the largest relative drift of total mass over the run.
  double max_principle_slack = 0.0;
  double mass_rel_drift = 0.0;
};

struct NumericalBlowup : std::runtime_error {
  double t;
  explicit NumericalBlowup(double t_, const std::string& what)
      : std::runtime_error(what), t(t_) {}
};

/// Local Lax-Friedrichs (Rusanov) convective flux,
///   1/2 (f(uL) + f(uR)) - 1/2 a (uR - uL),  a = max(|lambda(uL)|, |lambda(uR)|).
/// Consistent and monotone under the CFL bound.
double numerical_flux(double u_left, double u_right, const FluxModel& flux);

/// Two-point degenerate diffusive flux mu |du/dx|^{p-1} du/dx at an interface.
double viscous_flux(double u_left, double u_right, double dx,
                    const ViscosityParams& visc);

/// Largest stable explicit step from state at time t_now: CFL times the
/// tighter of the advective bound dx/max|lambda| and the diffusive bound
/// dx^2 / (2 mu p max|du/dx|^{p-1}), clamped to land on the next observation
/// time. Throws when the step underflows below 1e-14 (blow-up signal).
double stable_dt(const Field& state, const Problem& prob, double t_now);

/// One conservative update over dt (two-stage SSP Runge-Kutta), ghost cells
/// filled per the problem's boundary rule.
Field step(const Field& state, double dt, const Problem& prob);

/// Advance from t = 0 to t_end with adaptive steps, recording snapshots at the
/// observation times and a per-step log. Deterministic given the problem.
Trajectory run(const Problem& prob);

}  // namespace plapclaw

#endif
