#pragma once

#include <vector>

#include "frontlab/spectrum.hpp"

namespace frontlab {

struct Trajectory {
  double dt = 0;
  Vec times;
  std::vector<GridField> states;
  double q = 0;
  std::string scheme;

  int steps() const { return static_cast<int>(states.size()) - 1; }
};

/// Crank-Nicolson propagation of ydot = L_q y (unweighted matrix; weighted
/// norms are applied at measurement time). One factorization, reused.
Trajectory propagate_linear(const WeightedOperator& op, const GridField& y0, double T, double dt);

struct DecayRateReport {
  double nu_hat = 0;  // slowest fitted rate over samples
  double C_hat = 0;
  std::vector<double> sample_rates;
  bool poor_fit = false;
};

/// Fits exp decay of |T_q(t) P_s y|_alpha over random unit fields on the
/// second half of [0, T].
DecayRateReport semigroup_decay_rate(const WeightedOperator& op, const ProjectionPair& pair,
                                     double T, double dt, int samples,
                                     unsigned long long seed = 7);

struct LimitSemigroupReport {
  double S1_bound = 0;  // sup_t |S1(t) y|_0 over unit samples
  double S2_rate = 0;   // fitted decay rate rho_hat of S2
  double S_bound = 0;   // sup_t |S(t) y|_0 over unit samples
  double Q_error = 0;   // triangular reconstruction error of the (1,2) block
  bool hyp_S1 = false, hyp_S2 = false, hyp_S = false;
};

/// Empirical Hypothesis 2.9 checks on the limit blocks at the minus state.
LimitSemigroupReport limit_semigroup_check(const ReactionModel& m, const FrontProfile& profile,
                                           const Weight& w, double T, double dt, int samples = 20,
                                           unsigned long long seed = 11);

enum class FqPath { ClosedForm, Quadrature };

/// Nonlinear remainder F_q(y) = R(Y_q + y) - R(Y_q) - dR(Y_q) y, either in
/// closed form or as the 16-point Gauss-Legendre realization of the integral
/// form int_0^1 (dR(Y_q + t y) - dR(Y_q)) y dt.
GridField eval_Fq(const ReactionModel& m, const GridField& Yq, const GridField& y,
                  FqPath path = FqPath::ClosedForm);

struct NonlinearityReport {
  // empirical constants for the four estimates
  double C_F0 = 0;      // |F(y)|_0      <= C |y|_0 (|y|_alpha + |v|_0)
  double C_Falpha = 0;  // |F(y)|_alpha  <= C |y|_0 |y|_alpha
  double C_lip0 = 0;    // |F(y)-F(yb)|_0 bound
  double C_lipalpha = 0;
  bool pass = false;  // all maxima finite and stable under sample doubling
};

NonlinearityReport check_nonlinearity_estimates(const ReactionModel& m,
                                                const FrontProfile& profile, double q,
                                                const Weight& w, int sample_count, double delta1,
                                                unsigned long long seed = 21);

struct BlowUpError : Error {
  double time;
  BlowUpError(const std::string& what, double t) : Error(what), time(t) {}
};

/// IMEX integration of ydot = L_q y + F_q(y): Crank-Nicolson on the linear
/// part, Heun predictor-corrector on F_q. Aborts if |y|_0 exceeds 10x the
/// initial bound.
Trajectory evolve_semilinear(const ReactionModel& m, const FrontProfile& profile, double q,
                             const GridField& y0, double T, double dt);

/// Direct integrator for the moving-frame equation: evolves the deviation
/// w = Y - Y0 with the constant linear part D dxx + c dx implicit and the
/// full reaction difference explicit. Independent of the linearization path.
Trajectory evolve_full_deviation(const ReactionModel& m, const FrontProfile& profile,
                                 const GridField& w0, double T, double dt);

/// Random smooth localized field (sum of Gaussian bumps), for norm sampling.
GridField random_smooth_field(const SpatialGrid& grid, int components, std::mt19937_64& rng,
                              int bumps = 8, double support = 20.0, double width_min = 2.0,
                              double width_max = 6.0);

}  // namespace frontlab
