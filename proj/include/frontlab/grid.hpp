#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/SparseCore>

#include "frontlab/types.hpp"

namespace frontlab {

/// Uniform grid on [-X, X] with an odd number of nodes so x = 0 is a node.
struct SpatialGrid {
  double X = 0;
  int N = 0;
  double h = 0;
  Vec nodes;
};

SpatialGrid make_grid(double X, int N);

/// Exponential weight of class alpha: gamma(x) = exp(eta(x)) with
/// eta(x) = alpha_minus*x for x <= -x0, alpha_plus*x for x >= x0, and the
/// quintic Hermite interpolant (matching value and two derivatives) between.
struct Weight {
  double alpha_minus = 0;
  double alpha_plus = 0;
  double x0 = 0;
  // eta on (-x0, x0) as polynomial in t = (x + x0) / (2 x0)
  std::array<double, 6> mid{};

  double eta(double x) const;
  double eta_prime(double x) const;
  double eta_second(double x) const;
  double gamma(double x) const;

  /// gamma evaluated at every node.
  Vec sample(const SpatialGrid& grid) const;

  static Weight identity() { return Weight{0.0, 0.0, 1.0, {}}; }
};

Weight make_weight(double alpha_minus, double alpha_plus, double x0);

/// (alphaomega) admissibility window against fitted profile tail rates:
/// 0 < alpha_minus < -omega_minus and 0 <= alpha_plus < omega_plus.
bool weight_admissible(const Weight& w, double omega_minus, double omega_plus);

enum class NormKind { Sup, H1 };

/// Discrete realization of |.|_0 (no weight) and |.|_alpha (with weight).
/// Sup: max_i of the Euclidean node norm of (gamma y)(x_i).
/// H1: sqrt(h sum |(gamma y)_i|^2 + h sum |Dx(gamma y)_i|^2), centered Dx.
double norm(const SpatialGrid& grid, const GridField& y, NormKind kind);
double norm(const SpatialGrid& grid, const Weight& w, const GridField& y, NormKind kind);

/// |y|_beta = max(|y|_0, |y|_alpha).
double norm_beta(const SpatialGrid& grid, const Weight& w, const GridField& y,
                 NormKind kind = NormKind::Sup);

struct TrajectoryNorms {
  double w_alpha = 0;   // sup_k e^(omega t_k) |y(t_k)|_alpha
  double zero_zero = 0; // sup_k |y(t_k)|_0
  double v_w0 = 0;      // sup_k e^(omega t_k) |v(t_k)|_0, v = last n2 components
  double total = 0;     // max of the three
};

TrajectoryNorms trajectory_norms(std::span<const std::pair<double, GridField>> traj,
                                 double omega, const SpatialGrid& grid, const Weight& w,
                                 int n2, NormKind kind = NormKind::Sup);

enum class BoundaryCondition { Dirichlet0 };

struct DiffOps {
  Eigen::SparseMatrix<double> Dx;
  Eigen::SparseMatrix<double> Dxx;
};

/// Second-order centered stencils; dirichlet0 drops off-domain values
/// (valid for fields that decay toward the boundary).
DiffOps diff_ops(const SpatialGrid& grid, BoundaryCondition bc = BoundaryCondition::Dirichlet0);

}  // namespace frontlab
