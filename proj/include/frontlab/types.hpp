#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace frontlab {

using Vec = Eigen::VectorXd;
using Mat = Eigen::MatrixXd;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using Complex = std::complex<double>;

// Row-major so that values.data() is the node-major flat layout
// [y_0^(1)..y_0^(n), y_1^(1)..] used by the banded operators.
using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Samples of a function R -> R^n on a spatial grid; row i holds the value
/// at node x_i.
struct GridField {
  RowMat values;

  GridField() = default;
  explicit GridField(RowMat v) : values(std::move(v)) {}

  static GridField zero(int nodes, int components) {
    return GridField(RowMat::Zero(nodes, components));
  }

  int nodes() const { return static_cast<int>(values.rows()); }
  int components() const { return static_cast<int>(values.cols()); }

  Eigen::Map<Vec> flat() { return {values.data(), values.size()}; }
  Eigen::Map<const Vec> flat() const { return {values.data(), values.size()}; }

  static GridField from_flat(const Vec& v, int components) {
    if (components <= 0 || v.size() % components != 0)
      throw std::invalid_argument("from_flat: size not divisible by component count");
    RowMat m(v.size() / components, components);
    Eigen::Map<Vec>(m.data(), m.size()) = v;
    return GridField(std::move(m));
  }
};

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace frontlab
