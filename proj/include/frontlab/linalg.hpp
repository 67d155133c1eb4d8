#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

#include "frontlab/types.hpp"

namespace frontlab {

struct SingularMatrixError : Error {
  int pivot_index;
  SingularMatrixError(int idx, const std::string& what) : Error(what), pivot_index(idx) {}
};

/// Square banded matrix with kl sub- and ku superdiagonals, band storage
/// as in LAPACK xGBTRF: column j lives in ab(kl + ku + i - j, j) with an
/// extra kl rows on top for pivoting fill-in.
template <typename Scalar>
class BandedMatrix {
 public:
  BandedMatrix() = default;
  BandedMatrix(int m, int kl, int ku);

  int dim() const { return m_; }
  int lower() const { return kl_; }
  int upper() const { return ku_; }

  Scalar at(int i, int j) const;
  void set(int i, int j, Scalar v);
  void add(int i, int j, Scalar v);

  bool in_band(int i, int j) const {
    return i >= 0 && j >= 0 && i < m_ && j < m_ && i - j <= kl_ && j - i <= ku_;
  }

  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  Vector multiply(const Vector& x) const;
  void multiply(const Scalar* x, Scalar* y) const;

  BandedMatrix<Scalar> transpose() const;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> dense() const;

  /// Entrywise a*this + b*other (bands must be compatible in dimension).
  static BandedMatrix<Scalar> combine(Scalar a, const BandedMatrix<Scalar>& A, Scalar b,
                                      const BandedMatrix<Scalar>& B);

  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& storage() const { return ab_; }

 private:
  int m_ = 0, kl_ = 0, ku_ = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> ab_;  // (2kl+ku+1) x m

  template <typename S>
  friend class BandedLU;
};

/// LU factorization with partial pivoting of a banded matrix.
template <typename Scalar>
class BandedLU {
 public:
  explicit BandedLU(const BandedMatrix<Scalar>& A);

  using Vector = typename BandedMatrix<Scalar>::Vector;
  Vector solve(const Vector& b) const;
  void solve_in_place(Scalar* b) const;

 private:
  int m_, kl_, ku_;
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> lu_;
  std::vector<int> piv_;
};

/// One-shot banded solve (factor + solve).
Vec banded_solve(const BandedMatrix<double>& A, const Vec& b);

struct EigPair {
  Complex value;
  CVec vector;
  double residual = 0;  // ||A v - lambda v|| / scale
};

/// Rightmost (largest real part) eigenvalues of a dense matrix via the QR
/// algorithm, residual-checked.
std::vector<EigPair> eigs_rightmost(const Mat& A, int count);

/// Matrix accessed through its action and a shifted solve; shift-invert
/// Arnoldi recovers the eigenvalues nearest `shift`.
struct ShiftInvertHandle {
  int dim = 0;
  Complex shift;
  std::function<void(const Complex* x, Complex* y)> apply;          // y = A x
  std::function<void(const Complex* x, Complex* y)> solve_shifted;  // y = (A - shift I)^{-1} x
  double norm_scale = 1.0;  // estimate of ||A|| for residual tests
};

struct ArnoldiOptions {
  int krylov_dim = 80;
  int max_restarts = 4;
  double tol = 1e-9;   // relative residual, scaled by norm_scale
  unsigned long long seed = 12345;
};

std::vector<EigPair> eigs_rightmost(const ShiftInvertHandle& op, int count,
                                    const ArnoldiOptions& opts = {});

/// Composite trapezoid rule over strictly increasing abscissae.
double quad_trapezoid(std::span<const double> t, std::span<const double> f);
double quad_trapezoid(std::span<const std::pair<double, double>> samples);

}  // namespace frontlab
