#include "frontlab/grid.hpp"

#include <cmath>
#include <vector>

namespace frontlab {

SpatialGrid make_grid(double X, int N) {
  if (X <= 0) throw Error("make_grid: X must be positive");
  if (N < 3 || N % 2 == 0) throw Error("make_grid: N must be odd and >= 3");
  SpatialGrid g;
  g.X = X;
  g.N = N;
  g.h = 2.0 * X / (N - 1);
  g.nodes = Vec::LinSpaced(N, -X, X);
  g.nodes[(N - 1) / 2] = 0.0;  // exact midpoint
  return g;
}

namespace {

// Quintic Hermite basis on [0,1] in terms of endpoint value/first/second
// derivative data (d2 terms vanish here: the matched pieces are linear).
void hermite_quintic(double y0, double d0, double y1, double d1, std::array<double, 6>& coef) {
  // p(t) = sum c_k t^k with p(0)=y0, p'(0)=d0, p''(0)=0, p(1)=y1, p'(1)=d1, p''(1)=0
  coef[0] = y0;
  coef[1] = d0;
  coef[2] = 0.0;
  coef[3] = 10 * (y1 - y0) - 6 * d0 - 4 * d1;
  coef[4] = -15 * (y1 - y0) + 8 * d0 + 7 * d1;
  coef[5] = 6 * (y1 - y0) - 3 * d0 - 3 * d1;
}

}  // namespace

Weight make_weight(double alpha_minus, double alpha_plus, double x0) {
  if (x0 <= 0) throw Error("make_weight: x0 must be positive");
  Weight w;
  w.alpha_minus = alpha_minus;
  w.alpha_plus = alpha_plus;
  w.x0 = x0;
  // eta in t = (x + x0)/(2 x0); endpoint data from the linear tails
  const double L = 2 * x0;
  hermite_quintic(-alpha_minus * x0, alpha_minus * L, alpha_plus * x0, alpha_plus * L, w.mid);
  return w;
}

double Weight::eta(double x) const {
  if (x <= -x0) return alpha_minus * x;
  if (x >= x0) return alpha_plus * x;
  const double t = (x + x0) / (2 * x0);
  double p = 0;
  for (int k = 5; k >= 0; --k) p = p * t + mid[k];
  return p;
}

double Weight::eta_prime(double x) const {
  if (x <= -x0) return alpha_minus;
  if (x >= x0) return alpha_plus;
  const double t = (x + x0) / (2 * x0);
  double p = 0;
  for (int k = 5; k >= 1; --k) p = p * t + k * mid[k];
  return p / (2 * x0);
}

double Weight::eta_second(double x) const {
  if (x <= -x0 || x >= x0) return 0.0;
  const double t = (x + x0) / (2 * x0);
  double p = 0;
  for (int k = 5; k >= 2; --k) p = p * t + k * (k - 1) * mid[k];
  return p / (4 * x0 * x0);
}

double Weight::gamma(double x) const { return std::exp(eta(x)); }

Vec Weight::sample(const SpatialGrid& grid) const {
  Vec g(grid.N);
  for (int i = 0; i < grid.N; ++i) g[i] = gamma(grid.nodes[i]);
  return g;
}

bool weight_admissible(const Weight& w, double omega_minus, double omega_plus) {
  return w.alpha_minus > 0 && w.alpha_minus < -omega_minus && w.alpha_plus >= 0 &&
         w.alpha_plus < omega_plus;
}

namespace {

double node_norm(const RowMat& v, int i) {
  double s = 0;
  for (int c = 0; c < v.cols(); ++c) s += v(i, c) * v(i, c);
  return std::sqrt(s);
}

double weighted_norm(const SpatialGrid& grid, const Vec* gamma, const GridField& y,
                     NormKind kind) {
  const int N = y.nodes();
  if (N != grid.N) throw Error("norm: field does not match grid");
  auto gval = [&](int i) { return gamma ? (*gamma)[i] : 1.0; };
  if (kind == NormKind::Sup) {
    double m = 0;
    for (int i = 0; i < N; ++i) m = std::max(m, gval(i) * node_norm(y.values, i));
    return m;
  }
  // discrete H1 of gamma*y with centered Dx (dirichlet0 at the ends)
  const double h = grid.h;
  double s = 0;
  RowMat gy = y.values;
  for (int i = 0; i < N; ++i) gy.row(i) *= gval(i);
  for (int i = 0; i < N; ++i) {
    for (int c = 0; c < gy.cols(); ++c) {
      const double lo = (i > 0) ? gy(i - 1, c) : 0.0;
      const double hi = (i < N - 1) ? gy(i + 1, c) : 0.0;
      const double d = (hi - lo) / (2 * h);
      s += gy(i, c) * gy(i, c) + d * d;
    }
  }
  return std::sqrt(h * s);
}

}  // namespace

double norm(const SpatialGrid& grid, const GridField& y, NormKind kind) {
  return weighted_norm(grid, nullptr, y, kind);
}

double norm(const SpatialGrid& grid, const Weight& w, const GridField& y, NormKind kind) {
  Vec g = w.sample(grid);
  return weighted_norm(grid, &g, y, kind);
}

double norm_beta(const SpatialGrid& grid, const Weight& w, const GridField& y, NormKind kind) {
  return std::max(norm(grid, y, kind), norm(grid, w, y, kind));
}

TrajectoryNorms trajectory_norms(std::span<const std::pair<double, GridField>> traj, double omega,
                                 const SpatialGrid& grid, const Weight& w, int n2, NormKind kind) {
  if (traj.empty()) throw Error("trajectory_norms: empty trajectory");
  if (omega <= 0) throw Error("trajectory_norms: omega must be positive");
  Vec g = w.sample(grid);
  TrajectoryNorms out;
  double tprev = traj.front().first;
  for (const auto& [t, y] : traj) {
    if (t < tprev) throw Error("trajectory_norms: times must be nondecreasing");
    tprev = t;
    const double ew = std::exp(omega * t);
    out.w_alpha = std::max(out.w_alpha, ew * weighted_norm(grid, &g, y, kind));
    out.zero_zero = std::max(out.zero_zero, weighted_norm(grid, nullptr, y, kind));
    const int n = y.components();
    GridField v = GridField::zero(y.nodes(), n2);
    v.values = y.values.rightCols(n2);
    out.v_w0 = std::max(out.v_w0, ew * weighted_norm(grid, nullptr, v, kind));
  }
  out.total = std::max({out.w_alpha, out.zero_zero, out.v_w0});
  return out;
}

DiffOps diff_ops(const SpatialGrid& grid, BoundaryCondition) {
  const int N = grid.N;
  const double h = grid.h;
  DiffOps ops;
  ops.Dx.resize(N, N);
  ops.Dxx.resize(N, N);
  std::vector<Eigen::Triplet<double>> tx, txx;
  for (int i = 0; i < N; ++i) {
    if (i > 0) {
      tx.emplace_back(i, i - 1, -1.0 / (2 * h));
      txx.emplace_back(i, i - 1, 1.0 / (h * h));
    }
    txx.emplace_back(i, i, -2.0 / (h * h));
    if (i < N - 1) {
      tx.emplace_back(i, i + 1, 1.0 / (2 * h));
      txx.emplace_back(i, i + 1, 1.0 / (h * h));
    }
  }
  ops.Dx.setFromTriplets(tx.begin(), tx.end());
  ops.Dxx.setFromTriplets(txx.begin(), txx.end());
  return ops;
}

}  // namespace frontlab
