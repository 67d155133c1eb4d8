#include "frontlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

namespace frontlab {

template <typename Scalar>
BandedMatrix<Scalar>::BandedMatrix(int m, int kl, int ku) : m_(m), kl_(kl), ku_(ku) {
  if (m <= 0 || kl < 0 || ku < 0 || kl >= m || ku >= m)
    throw Error("BandedMatrix: invalid dimensions");
  ab_.setZero(2 * kl + ku + 1, m);
}

template <typename Scalar>
Scalar BandedMatrix<Scalar>::at(int i, int j) const {
  if (!in_band(i, j)) return Scalar(0);
  return ab_(kl_ + ku_ + i - j, j);
}

template <typename Scalar>
void BandedMatrix<Scalar>::set(int i, int j, Scalar v) {
  if (!in_band(i, j)) throw Error("BandedMatrix::set outside band");
  ab_(kl_ + ku_ + i - j, j) = v;
}

template <typename Scalar>
void BandedMatrix<Scalar>::add(int i, int j, Scalar v) {
  if (!in_band(i, j)) throw Error("BandedMatrix::add outside band");
  ab_(kl_ + ku_ + i - j, j) += v;
}

template <typename Scalar>
void BandedMatrix<Scalar>::multiply(const Scalar* x, Scalar* y) const {
  for (int i = 0; i < m_; ++i) {
    Scalar s(0);
    const int jlo = std::max(0, i - kl_);
    const int jhi = std::min(m_ - 1, i + ku_);
    for (int j = jlo; j <= jhi; ++j) s += ab_(kl_ + ku_ + i - j, j) * x[j];
    y[i] = s;
  }
}

template <typename Scalar>
typename BandedMatrix<Scalar>::Vector BandedMatrix<Scalar>::multiply(const Vector& x) const {
  if (x.size() != m_) throw Error("BandedMatrix::multiply: size mismatch");
  Vector y(m_);
  multiply(x.data(), y.data());
  return y;
}

template <typename Scalar>
BandedMatrix<Scalar> BandedMatrix<Scalar>::transpose() const {
  BandedMatrix<Scalar> t(m_, ku_, kl_);
  for (int j = 0; j < m_; ++j) {
    const int ilo = std::max(0, j - ku_);
    const int ihi = std::min(m_ - 1, j + kl_);
    for (int i = ilo; i <= ihi; ++i) t.set(j, i, ab_(kl_ + ku_ + i - j, j));
  }
  return t;
}

template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> BandedMatrix<Scalar>::dense() const {
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> D =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(m_, m_);
  for (int j = 0; j < m_; ++j) {
    const int ilo = std::max(0, j - ku_);
    const int ihi = std::min(m_ - 1, j + kl_);
    for (int i = ilo; i <= ihi; ++i) D(i, j) = ab_(kl_ + ku_ + i - j, j);
  }
  return D;
}

template <typename Scalar>
BandedMatrix<Scalar> BandedMatrix<Scalar>::combine(Scalar a, const BandedMatrix<Scalar>& A,
                                                   Scalar b, const BandedMatrix<Scalar>& B) {
  if (A.m_ != B.m_) throw Error("BandedMatrix::combine: size mismatch");
  BandedMatrix<Scalar> out(A.m_, std::max(A.kl_, B.kl_), std::max(A.ku_, B.ku_));
  for (int j = 0; j < out.m_; ++j) {
    const int ilo = std::max(0, j - out.ku_);
    const int ihi = std::min(out.m_ - 1, j + out.kl_);
    for (int i = ilo; i <= ihi; ++i) out.set(i, j, a * A.at(i, j) + b * B.at(i, j));
  }
  return out;
}

// LU with partial pivoting in LAPACK band layout: U may fill kl extra
// superdiagonals, multipliers overwrite the subdiagonal part.
template <typename Scalar>
BandedLU<Scalar>::BandedLU(const BandedMatrix<Scalar>& A)
    : m_(A.dim()), kl_(A.lower()), ku_(A.upper()), lu_(A.storage()), piv_(A.dim()) {
  const int kv = kl_ + ku_;  // effective upper bandwidth after pivoting
  auto entry = [&](int i, int j) -> Scalar& { return lu_(kl_ + ku_ + i - j, j); };
  for (int k = 0; k < m_; ++k) {
    const int imax = std::min(m_ - 1, k + kl_);
    int p = k;
    double best = std::abs(entry(k, k));
    for (int i = k + 1; i <= imax; ++i) {
      const double v = std::abs(entry(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    piv_[k] = p;
    if (best == 0.0)
      throw SingularMatrixError(k, "banded LU: zero pivot at index " + std::to_string(k));
    const int jhi = std::min(m_ - 1, k + kv);
    if (p != k)
      for (int j = k; j <= jhi; ++j) std::swap(entry(k, j), entry(p, j));
    const Scalar pivot = entry(k, k);
    for (int i = k + 1; i <= imax; ++i) {
      const Scalar l = entry(i, k) / pivot;
      entry(i, k) = l;
      for (int j = k + 1; j <= jhi; ++j) entry(i, j) -= l * entry(k, j);
    }
  }
}

template <typename Scalar>
void BandedLU<Scalar>::solve_in_place(Scalar* b) const {
  const int kv = kl_ + ku_;
  auto entry = [&](int i, int j) -> const Scalar& { return lu_(kl_ + ku_ + i - j, j); };
  for (int k = 0; k < m_; ++k) {
    if (piv_[k] != k) std::swap(b[k], b[piv_[k]]);
    const int imax = std::min(m_ - 1, k + kl_);
    for (int i = k + 1; i <= imax; ++i) b[i] -= entry(i, k) * b[k];
  }
  for (int j = m_ - 1; j >= 0; --j) {
    b[j] /= entry(j, j);
    const int ilo = std::max(0, j - kv);
    for (int i = ilo; i < j; ++i) b[i] -= entry(i, j) * b[j];
  }
}

template <typename Scalar>
typename BandedLU<Scalar>::Vector BandedLU<Scalar>::solve(const Vector& b) const {
  if (b.size() != m_) throw Error("BandedLU::solve: size mismatch");
  Vector x = b;
  solve_in_place(x.data());
  return x;
}

template class BandedMatrix<double>;
template class BandedMatrix<Complex>;
template class BandedLU<double>;
template class BandedLU<Complex>;

Vec banded_solve(const BandedMatrix<double>& A, const Vec& b) {
  return BandedLU<double>(A).solve(b);
}

std::vector<EigPair> eigs_rightmost(const Mat& A, int count) {
  if (A.rows() != A.cols()) throw Error("eigs_rightmost: matrix not square");
  if (count < 1 || count > A.rows()) throw Error("eigs_rightmost: invalid count");
  Eigen::EigenSolver<Mat> es(A);
  if (es.info() != Eigen::Success) throw Error("eigs_rightmost: dense QR failed");
  const CVec vals = es.eigenvalues();
  const CMat vecs = es.eigenvectors();
  std::vector<int> order(vals.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return vals[a].real() > vals[b].real(); });
  const double scale = A.cwiseAbs().rowwise().sum().maxCoeff();  // ||A||_inf
  std::vector<EigPair> out;
  out.reserve(count);
  for (int r = 0; r < count; ++r) {
    EigPair p;
    p.value = vals[order[r]];
    p.vector = vecs.col(order[r]);
    p.residual = (A * p.vector - p.value * p.vector).norm() / std::max(scale, 1e-300);
    out.push_back(std::move(p));
  }
  return out;
}

namespace {

struct RitzCandidate {
  Complex value;
  CVec vector;
  double residual;
};

std::vector<RitzCandidate> arnoldi_pass(const ShiftInvertHandle& op, int kdim,
                                        std::mt19937_64& rng) {
  const int m = op.dim;
  kdim = std::min(kdim, m);
  CMat V(m, kdim + 1);
  CMat H = CMat::Zero(kdim + 1, kdim);
  CVec v0(m);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  for (int i = 0; i < m; ++i) v0[i] = Complex(unif(rng), unif(rng));
  V.col(0) = v0 / v0.norm();
  CVec w(m);
  int built = 0;
  for (int j = 0; j < kdim; ++j) {
    op.solve_shifted(V.col(j).data(), w.data());
    // modified Gram-Schmidt with one re-orthogonalization sweep
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= j; ++i) {
        const Complex hij = V.col(i).dot(w);
        w -= hij * V.col(i);
        if (pass == 0)
          H(i, j) = hij;
        else
          H(i, j) += hij;
      }
    }
    const double nw = w.norm();
    H(j + 1, j) = nw;
    built = j + 1;
    if (nw < 1e-14) break;  // invariant subspace found
    V.col(j + 1) = w / nw;
  }
  Eigen::ComplexEigenSolver<CMat> es(H.topLeftCorner(built, built));
  std::vector<RitzCandidate> out;
  for (int i = 0; i < built; ++i) {
    const Complex theta = es.eigenvalues()[i];
    if (std::abs(theta) < 1e-14) continue;
    RitzCandidate c;
    c.value = op.shift + 1.0 / theta;
    c.vector = V.leftCols(built) * es.eigenvectors().col(i);
    c.vector /= c.vector.norm();
    CVec Av(m);
    op.apply(c.vector.data(), Av.data());
    c.residual = (Av - c.value * c.vector).norm() / std::max(op.norm_scale, 1e-300);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

std::vector<EigPair> eigs_rightmost(const ShiftInvertHandle& op, int count,
                                    const ArnoldiOptions& opts) {
  if (count < 1 || count > op.dim) throw Error("eigs_rightmost: invalid count");
  std::mt19937_64 rng(opts.seed);
  std::vector<RitzCandidate> converged;
  double best_residual = 1e300;
  int kdim = opts.krylov_dim;
  for (int attempt = 0; attempt <= opts.max_restarts; ++attempt) {
    auto candidates = arnoldi_pass(op, kdim, rng);
    for (auto& c : candidates) {
      best_residual = std::min(best_residual, c.residual);
      if (c.residual > opts.tol) continue;
      bool dup = false;
      for (const auto& kept : converged)
        if (std::abs(kept.value - c.value) < 1e-8 * std::max(1.0, std::abs(c.value))) {
          dup = true;
          break;
        }
      if (!dup) converged.push_back(std::move(c));
    }
    if (static_cast<int>(converged.size()) >= count) break;
    kdim = std::min(op.dim, kdim + kdim / 2);  // grow the subspace and retry
  }
  if (static_cast<int>(converged.size()) < count)
    throw Error("eigs_rightmost: Arnoldi did not converge; best residual " +
                std::to_string(best_residual));
  std::sort(converged.begin(), converged.end(),
            [](const RitzCandidate& a, const RitzCandidate& b) {
              return a.value.real() > b.value.real();
            });
  std::vector<EigPair> out;
  for (int i = 0; i < count; ++i)
    out.push_back(EigPair{converged[i].value, converged[i].vector, converged[i].residual});
  return out;
}

double quad_trapezoid(std::span<const double> t, std::span<const double> f) {
  if (t.size() != f.size()) throw Error("quad_trapezoid: length mismatch");
  if (t.size() < 2) throw Error("quad_trapezoid: need at least 2 samples");
  double s = 0;
  for (size_t k = 0; k + 1 < t.size(); ++k) {
    if (!(t[k + 1] > t[k])) throw Error("quad_trapezoid: abscissae not strictly increasing");
    s += 0.5 * (t[k + 1] - t[k]) * (f[k] + f[k + 1]);
  }
  return s;
}

double quad_trapezoid(std::span<const std::pair<double, double>> samples) {
  std::vector<double> t(samples.size()), f(samples.size());
  for (size_t i = 0; i < samples.size(); ++i) {
    t[i] = samples[i].first;
    f[i] = samples[i].second;
  }
  return quad_trapezoid(t, f);
}

}  // namespace frontlab
