#pragma once

#include <memory>
#include <random>

#include "frontlab/evolve.hpp"

namespace frontlab {

/// Rates 0 < omega < rho < nu of the trajectory norms and semigroup bounds.
struct RateBundle {
  double omega = 0, rho = 0, nu = 0;
  void validate() const;
};

/// Working rates from measured decay: omega = min(rho_hat, nu_hat)/2; rho is
/// pulled inside (omega, nu) when the measured rho_hat exceeds nu.
RateBundle make_rates(double rho_hat, double nu_hat);

struct LPConfig {
  double T = 90.0;
  double dt = 0.01;
  double tol_fixed_point = 1e-6;
  double delta = 0.05;    // trajectory-ball radius for ||.||
  double delta0 = 0.01;   // data-ball radius for |z0|_beta
  double q0 = 0.5;        // admissible shift range
  double eta = 0.005;     // foliation ball radius (default delta0/2)
  int max_iterations = 30;
  RateBundle rates;

  void validate() const;  // enforces exp(-2 omega T) <= tol_fixed_point etc.
};

/// Everything q-dependent the Lyapunov-Perron engine needs, built once per
/// shift: shifted profile, operator, projection pair, CN factorizations.
struct LeafContext {
  double q = 0;
  FrontProfile shifted;  // Y_q on the grid
  WeightedOperator op;
  ProjectionPair pair;
  GridField Fq_base;     // R(Y_q) precomputed
  RowMat dR_base;        // dR(Y_q) per node
  // Crank-Nicolson data for step dt: factor of (I - dt/2 L) and I + dt/2 L
  std::shared_ptr<BandedLU<double>> cn_lu;
  BandedMatrix<double> cn_right;
  double dt = 0;
};

struct LPDeps {
  const ReactionModel* model = nullptr;
  const FrontProfile* profile = nullptr;  // base front (q = 0)
  const Weight* weight = nullptr;
};

LeafContext make_leaf(const LPDeps& deps, double q, const LPConfig& cfg);

struct LPApplyResult {
  Trajectory y;
  double phi_coeff = 0;       // -(S(0) + tail): pi_q component of y(0)
  double tail_bound = 0;      // estimated truncation of the infinite integral
  bool tail_unreliable = false;
  std::vector<double> center_integral;  // S_k = int_{t_k}^T pi(F) + tail
};

/// One application of the Lyapunov-Perron operator Phi_q(y_in, z0): linear
/// inhomogeneous sweep for the stable part plus scalar center tail.
LPApplyResult lp_apply(const LeafContext& leaf, const Trajectory& y_in, const GridField& z0,
                       const LPConfig& cfg);

struct LPSolution {
  double q = 0;
  GridField z0;
  Trajectory y;
  double phi_coeff = 0;
  std::vector<double> contraction_factors;
  double tail_bound = 0;
  int iterations = 0;
  double final_update = 0;
};

struct ContractionError : Error {
  std::vector<double> factors;
  ContractionError(const std::string& what, std::vector<double> f)
      : Error(what), factors(std::move(f)) {}
};

/// Picard iteration from y = 0 to the fixed point of Phi_q(., z0); aborts on
/// three consecutive non-contracting steps or on leaving the delta-ball.
LPSolution lp_fixed_point(const LeafContext& leaf, const GridField& z0, const LPConfig& cfg,
                          const Trajectory* warm_start = nullptr);

/// Y_q + z0 + phi Y_q' as a full-state field (a point on M_q^s).
GridField manifold_point(const LeafContext& leaf, const GridField& z0, double phi_coeff);

struct LipschitzInQReport {
  std::vector<double> quotients;  // |phi(q_i) - phi(q_j)| / |q_i - q_j|
  bool bounded = false;           // variation < 2x across refinement
};

LipschitzInQReport lipschitz_in_q_check(const LPDeps& deps, const GridField& z0_base,
                                        const std::vector<double>& q_ladder, const LPConfig& cfg);

enum class FoliationMethod { RootFind, AsymptoticPhase };

struct FoliationResult {
  double q_star = 0;
  double residual = 0;
  std::pair<double, double> bracket{0, 0};
  FoliationMethod method = FoliationMethod::RootFind;
  std::vector<std::pair<double, double>> g_samples;  // (q, g(q)) evaluations
  int sign_changes = 0;
};

struct FoliationError : Error {
  std::vector<std::pair<double, double>> g_profile;
  FoliationError(const std::string& what, std::vector<std::pair<double, double>> g)
      : Error(what), g_profile(std::move(g)) {}
};

/// Finds the unique shift q with Y0_state in M_q^s. RootFind solves
/// g(q) = pi_q(Y0_state - Y_q) - phi_q(P_q^s (Y0_state - Y_q)) = 0 by
/// bracketing + secant; AsymptoticPhase evolves the full equation and
/// matches the end state against the shifted-front family.
FoliationResult foliate(const LPDeps& deps, const GridField& Y0_state, const LPConfig& cfg,
                        FoliationMethod method = FoliationMethod::RootFind);

/// Membership residual |g(q)| of a state against leaf q, floored at the
/// fixed-point solver resolution (values below it are indistinguishable
/// from zero).
double membership_residual(const LPDeps& deps, const GridField& Y0_state, double q,
                           const LPConfig& cfg);

struct TheoremCheck {
  std::string name;
  bool pass = false;
  double measured = 0;
  double threshold = 0;
  std::string detail;
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_pass = false;
};

struct VerifyPlan {
  std::vector<double> q_samples{-0.2, 0.0, 0.2};
  int z0_draws = 3;
  double decay_T = 60.0;
  double invariance_t0 = 5.0;
  double u_bound_limit = 20.0;
  unsigned long long seed = 31;
  bool run_foliation = true;
};

/// Runs the Theorem 4.1 verification suite: weighted decay (ii)(a),
/// u-boundedness (ii)(b), v-decay (ii)(c), forward invariance (i),
/// foliation round trips and disjointness (iv), Lipschitz in q (v).
TheoremReport verify_theorem(const LPDeps& deps, const LPConfig& cfg, const VerifyPlan& plan);

}  // namespace frontlab
