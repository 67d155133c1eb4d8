#pragma once

#include <vector>

#include "frontlab/front.hpp"
#include "frontlab/linalg.hpp"

namespace frontlab {

/// Grid realization of L_q Y = D Y_xx + c Y_x + dR(Y_q) Y together with its
/// weight-conjugated form Lw = Gamma L Gamma^{-1} and the multiplication
/// operator B_q(x) = dR(Y_q(x)) - dR(0).
struct WeightedOperator {
  BandedMatrix<double> L;
  BandedMatrix<double> Lw;
  RowMat Bq;           // node i row: row-major n x n of B_q(x_i)
  double q = 0;
  double c = 0;
  int n = 0, n1 = 0, n2 = 0;
  SpatialGrid grid;
  Weight weight;
  Vec gamma_nodes;
  GridField Yq, Yqprime;
};

WeightedOperator assemble_linearization(const ReactionModel& m, const FrontProfile& profile,
                                        double q, const Weight& w);

enum class Side { Minus, Plus };

/// Constant-coefficient operator at an end state. For the minus side also
/// carries the triangular blocks L1 = D1 dxx + c dx + A1 (size n1*N) and
/// L2 = D2 dxx + c dx + dV R2(0,0) (size n2*N), both unweighted.
struct LimitOperator {
  WeightedOperator op;
  Mat dR_limit;                 // n x n Jacobian at the end state
  BandedMatrix<double> L1, L2;  // minus side only
  Mat dV_R1;                    // n1 x n2 coupling block of dR(0)
};

LimitOperator limit_operator(const ReactionModel& m, const FrontProfile& profile, Side side,
                             const Weight& w);

struct CurvePoint {
  double k = 0;
  int side = 0;    // -1 or +1
  int branch = 0;
  Complex lambda;
};

struct EssentialCurves {
  std::vector<CurvePoint> points;
  double ess_sup_real = 0;
  bool pass_a = false;  // Hypothesis 2.4(a): sup Re < 0
};

/// Eigenvalue curves of the weighted limit symbols
/// M_pm(k) = (ik - alpha_pm)^2 D + c (ik - alpha_pm) I + dR(Y_pm).
EssentialCurves essential_spectrum_curves(const ReactionModel& m, const FrontProfile& profile,
                                          const Weight& w, const Vec& k_grid);

Vec default_k_grid(double k_max = 20.0, int points = 2001);

struct SpectralDecomposition {
  std::vector<EigPair> eigenvalues;  // rightmost first
  GridField zero_mode;               // eigenvector of lambda0 mapped back by Gamma^{-1}
  Complex lambda0;
  double zero_mode_cosine = 0;       // |<v, Gamma Yq'>| / norms
  double ess_sup_real = 0;
  double simplicity_margin = 0;      // distance from lambda0 to nearest other eigenvalue
  double nu = 0;                     // -max(Re nonzero eigenvalues, ess_sup_real)
  bool hyp_a = false, hyp_b = false;
};

/// Rightmost eigenvalues of Lw: dense QR for dim <= 2500, otherwise
/// shift-invert Arnoldi with shifts near 0 and near the expected gap.
SpectralDecomposition point_spectrum(const WeightedOperator& op, int count,
                                     const EssentialCurves& ess);

/// Rank-one spectral projection data: P_q^c Y = pi_q(Y) Y_q' with
/// pi_q(Y) = integral <Z_q, gamma Y> dx realized by the trapezoid rule and
/// normalized so pi_q(Y_q') = 1.
struct ProjectionPair {
  GridField Yqprime;
  GridField Zq;
  SpatialGrid grid;
  Weight weight;
  Vec gamma_nodes;
  double pi_of_yqprime = 0;  // post-normalization check value (== 1)
};

struct AdjointModeError : Error {
  using Error::Error;
};

ProjectionPair adjoint_zero_mode(const WeightedOperator& op, const GridField& Yqprime);

double pi_q(const ProjectionPair& pair, const GridField& y);

struct ProjectionResult {
  GridField Pc_y;
  GridField Ps_y;
  double pi_value = 0;
};

ProjectionResult apply_projections(const ProjectionPair& pair, const GridField& y);

struct ProjectionLipschitzReport {
  std::vector<double> gaps;        // |q - p| per ladder rung
  std::vector<double> ratios_beta; // sup ||(P_q - P_p) Y||_beta / |q - p| over samples
  std::vector<double> ratios_alpha;
  bool bounded = false;            // ratios within 2x of each other across the ladder
};

ProjectionLipschitzReport projection_lipschitz_check(const ReactionModel& m,
                                                     const FrontProfile& profile, const Weight& w,
                                                     const std::vector<double>& gaps,
                                                     int samples = 100,
                                                     unsigned long long seed = 99);

}  // namespace frontlab
