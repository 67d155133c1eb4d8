#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "frontlab/grid.hpp"
#include "frontlab/model.hpp"

namespace frontlab {

/// Traveling front of the steady moving-frame equation
/// D Y'' + c Y' + R(Y) = 0 with Y(-inf) = 0 and Y(+inf) = y_plus.
struct FrontProfile {
  SpatialGrid grid;
  GridField Y0;
  GridField Y0prime;
  double c = 0;
  Vec y_minus, y_plus;
  double omega_minus = 0;  // < 0; left tail bound  |Y0 - Y_-| <= C exp(-omega_minus x)
  double omega_plus = 0;   // > 0; right tail bound |Y0 - Y_+| <= C exp(-omega_plus x)
  double C_minus = 0, C_plus = 0;
  double residual = 0;
  bool tail_warning = false;
  bool degenerate_zero_mode = false;
};

GridField initial_guess(const ReactionModel& m, const Vec& y_minus, const Vec& y_plus,
                        const SpatialGrid& grid, double steepness);

struct PhaseCondition {
  enum class Kind { PinComponent, Orthogonality };
  Kind kind = Kind::PinComponent;
  int component = 0;
  double value = 0;          // PinComponent: required value of Y_component(0)
  GridField reference;       // Orthogonality: <Y - ref, ref'> = 0

  static PhaseCondition pin(int component, double value) {
    return PhaseCondition{Kind::PinComponent, component, value, {}};
  }
  static PhaseCondition orthogonality(GridField ref) {
    return PhaseCondition{Kind::Orthogonality, 0, 0.0, std::move(ref)};
  }
};

struct FrontSolveOptions {
  double tol = 1e-11;
  int max_iter = 60;
  bool upwind_zero_diffusion = false;  // upwind Dx rows for components with d_j = 0
  double armijo = 1e-4;
  int max_backtracks = 40;
};

struct FrontSolveError : Error {
  double final_residual;
  std::vector<double> damping_history;
  FrontSolveError(const std::string& what, double res, std::vector<double> hist)
      : Error(what), final_residual(res), damping_history(std::move(hist)) {}
};

/// Damped Newton on the extended system (steady equation, phase(Y)) = 0 with
/// unknowns (interior Y, c); fits tail rates and differentiates the profile.
FrontProfile solve_front(const ReactionModel& m, const SpatialGrid& grid, const GridField& guess,
                         double c_guess, const PhaseCondition& phase,
                         const FrontSolveOptions& opts = {});

struct ContinuationResult {
  std::vector<FrontProfile> profiles;
  bool complete = false;
  std::string diagnostic;
};

/// Natural-parameter continuation; each step warm-starts from the previous
/// profile. Failure at step 0 throws; later failures truncate.
ContinuationResult continue_front(const std::function<ReactionModel(double)>& family,
                                  const std::vector<double>& parameters,
                                  const SpatialGrid& grid, const GridField& seed_guess,
                                  double c_guess, const PhaseCondition& phase,
                                  const FrontSolveOptions& opts = {});

struct DecayFit {
  double omega_minus = 0, omega_plus = 0;
  double C_minus = 0, C_plus = 0;
  bool undetermined_minus = false, undetermined_plus = false;
};

/// Log-linear least squares of log|Y0 - Y_pm| on the outer quarter of each
/// half-domain (5 boundary nodes excluded).
DecayFit fit_decay_rates(const FrontProfile& p);

/// Shifted wave Y_q(x) = Y_0(x - q) by cubic interpolation; requires
/// |q| <= X/10. Speed and tail rates are unchanged.
FrontProfile shift_front(const FrontProfile& p, double q);

}  // namespace frontlab
