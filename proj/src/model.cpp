#include "frontlab/model.hpp"

#include <cmath>
#include <random>

namespace frontlab {

double ignition_rate(double u, double a, double b) {
  if (u <= 0) return 0.0;
  const double t = -b / u;
  if (t < -708.0) return 0.0;  // exp underflows to 0 anyway; avoid -inf edge
  return a * std::exp(t);
}

double ignition_rate_derivative(double u, double a, double b) {
  const double v = ignition_rate(u, a, b);
  if (v == 0.0) return 0.0;
  return v * b / (u * u);
}

namespace {

double require_positive(const std::map<std::string, double>& params, const std::string& key,
                        double fallback) {
  auto it = params.find(key);
  const double v = (it == params.end()) ? fallback : it->second;
  if (!(v > 0)) throw Error("builtin_model: parameter '" + key + "' must be positive");
  return v;
}

ReactionModel make_gasless(const std::map<std::string, double>& params) {
  const double beta = require_positive(params, "beta", 0.5);
  ReactionModel m;
  m.name = "gasless_combustion";
  m.n = 2;
  m.n1 = 1;
  m.n2 = 1;
  m.diffusion = Vec::Zero(2);
  m.diffusion << 1.0, 0.0;
  m.A1 = Mat::Zero(1, 1);
  m.params = {{"beta", beta}};
  const double u_left = 1.0 / beta;
  m.y_minus_raw = Vec::Zero(2);
  m.y_minus_raw << u_left, 0.0;
  m.y_plus_raw = Vec::Zero(2);
  m.y_plus_raw << 0.0, 1.0;
  m.y_plus = m.y_plus_raw - m.y_minus_raw;
  // shifted variables (u~, v) = (u - 1/beta, v)
  m.reaction = [beta, u_left](const double* y, double* r) {
    const double rate = y[1] * ignition_rate(y[0] + u_left);
    r[0] = rate;
    r[1] = -beta * rate;
  };
  m.jacobian = [beta, u_left](const double* y, double* jac) {
    const double u = y[0] + u_left;
    const double gv = ignition_rate(u);
    const double gpv = ignition_rate_derivative(u);
    jac[0] = y[1] * gpv;
    jac[1] = gv;
    jac[2] = -beta * y[1] * gpv;
    jac[3] = -beta * gv;
  };
  return m;
}

ReactionModel make_exo_endo(const std::map<std::string, double>& params) {
  const double sigma = require_positive(params, "sigma", 0.5);
  const double tau = require_positive(params, "tau", 1.0);
  const double a2 = require_positive(params, "a2", 1.0);
  const double b2 = require_positive(params, "b2", 1.0);
  const double a3 = require_positive(params, "a3", 1.0);
  const double b3 = require_positive(params, "b3", 1.0);
  const double d2 = require_positive(params, "d2", 1.0);
  const double d3 = require_positive(params, "d3", 1.0);
  ReactionModel m;
  m.name = "exo_endo";
  m.n = 3;
  m.n1 = 1;
  m.n2 = 2;
  m.diffusion = Vec::Zero(3);
  m.diffusion << 1.0, d2, d3;
  m.A1 = Mat::Zero(1, 1);
  m.params = {{"sigma", sigma}, {"tau", tau}, {"a2", a2}, {"b2", b2},
              {"a3", a3},       {"b3", b3},   {"d2", d2}, {"d3", d3}};
  const double u_left = 1.0 - sigma / tau;
  m.y_minus_raw = Vec::Zero(3);
  m.y_minus_raw << u_left, 0.0, 0.0;
  m.y_plus_raw = Vec::Zero(3);
  m.y_plus_raw << 0.0, 1.0, 1.0;
  m.y_plus = m.y_plus_raw - m.y_minus_raw;
  // shifted variables (y1~, y2, y3) = (y1 - u_left, y2, y3)
  m.reaction = [=](const double* y, double* r) {
    const double u = y[0] + u_left;
    const double f2 = ignition_rate(u, a2, b2);
    const double f3 = ignition_rate(u, a3, b3);
    r[0] = y[1] * f2 - sigma * y[2] * f3;
    r[1] = -y[1] * f2;
    r[2] = -tau * y[2] * f3;
  };
  m.jacobian = [=](const double* y, double* jac) {
    const double u = y[0] + u_left;
    const double f2 = ignition_rate(u, a2, b2);
    const double f3 = ignition_rate(u, a3, b3);
    const double f2p = ignition_rate_derivative(u, a2, b2);
    const double f3p = ignition_rate_derivative(u, a3, b3);
    jac[0] = y[1] * f2p - sigma * y[2] * f3p;
    jac[1] = f2;
    jac[2] = -sigma * f3;
    jac[3] = -y[1] * f2p;
    jac[4] = -f2;
    jac[5] = 0.0;
    jac[6] = -tau * y[2] * f3p;
    jac[7] = 0.0;
    jac[8] = -tau * f3;
  };
  return m;
}

}  // namespace

ReactionModel builtin_model(BuiltinModel which, const std::map<std::string, double>& params) {
  switch (which) {
    case BuiltinModel::GaslessCombustion:
      return make_gasless(params);
    case BuiltinModel::ExoEndo:
      return make_exo_endo(params);
  }
  throw Error("builtin_model: unknown model");
}

ReactionModel custom_model(const CustomModelSpec& spec) {
  if (spec.n1 < 0 || spec.n2 < 1) throw Error("custom_model: need n1 >= 0, n2 >= 1");
  const int n = spec.n1 + spec.n2;
  if (spec.diffusion.size() != n) throw Error("custom_model: diffusion length != n1 + n2");
  if ((spec.diffusion.array() < 0).any()) throw Error("custom_model: diffusion must be >= 0");
  if (spec.A1.rows() != spec.n1 || spec.A1.cols() != spec.n1)
    throw Error("custom_model: A1 must be n1 x n1");
  if (!spec.reaction || !spec.jacobian) throw Error("custom_model: R and dR required");
  ReactionModel m;
  m.name = spec.name;
  m.n = n;
  m.n1 = spec.n1;
  m.n2 = spec.n2;
  m.diffusion = spec.diffusion;
  m.A1 = spec.A1;
  m.reaction = spec.reaction;
  m.jacobian = spec.jacobian;
  m.y_plus = spec.y_plus;
  m.y_minus_raw = Vec::Zero(n);
  m.y_plus_raw = spec.y_plus;
  auto report = check_product_structure(m, 64);
  if (!report.pass)
    throw Error("custom_model: product structure R(U,0) = (A1 U, 0) violated, max violation " +
                std::to_string(report.max_violation));
  return m;
}

Vec eval_reaction(const ReactionModel& m, const Vec& y) {
  if (y.size() != m.n) throw Error("eval_reaction: dimension mismatch");
  if (!y.allFinite()) throw Error("eval_reaction: non-finite state");
  Vec r(m.n);
  m.reaction(y.data(), r.data());
  return r;
}

Mat eval_jacobian(const ReactionModel& m, const Vec& y) {
  if (y.size() != m.n) throw Error("eval_jacobian: dimension mismatch");
  if (!y.allFinite()) throw Error("eval_jacobian: non-finite state");
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> j(m.n, m.n);
  m.jacobian(y.data(), j.data());
  return Mat(j);
}

void eval_reaction_field(const ReactionModel& m, const GridField& y, GridField& out) {
  if (y.components() != m.n) throw Error("eval_reaction_field: dimension mismatch");
  out.values.resize(y.nodes(), m.n);
  for (int i = 0; i < y.nodes(); ++i) m.reaction(y.values.row(i).data(), out.values.row(i).data());
}

void eval_jacobian_field(const ReactionModel& m, const GridField& y, RowMat& out) {
  if (y.components() != m.n) throw Error("eval_jacobian_field: dimension mismatch");
  out.resize(y.nodes(), m.n * m.n);
  for (int i = 0; i < y.nodes(); ++i) m.jacobian(y.values.row(i).data(), out.row(i).data());
}

ProductStructureReport check_product_structure(const ReactionModel& m, int sample_count,
                                               unsigned long long seed) {
  if (sample_count < 1) throw Error("check_product_structure: sample_count >= 1 required");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> box(-2.0, 2.0);
  ProductStructureReport rep;
  rep.pass = true;
  Vec y = Vec::Zero(m.n), r(m.n);
  for (int s = 0; s < sample_count; ++s) {
    for (int i = 0; i < m.n1; ++i) y[i] = box(rng);
    for (int i = m.n1; i < m.n; ++i) y[i] = 0.0;
    m.reaction(y.data(), r.data());
    Vec a1u = m.A1 * y.head(m.n1);
    double viol = 0;
    for (int i = 0; i < m.n1; ++i) viol = std::max(viol, std::abs(r[i] - a1u[i]));
    for (int i = m.n1; i < m.n; ++i) viol = std::max(viol, std::abs(r[i]));
    rep.max_violation = std::max(rep.max_violation, viol);
    const double scale = 1.0 + (m.n1 > 0 ? a1u.cwiseAbs().maxCoeff() : 0.0);
    if (viol > 1e-12 * scale) rep.pass = false;
  }
  return rep;
}

}  // namespace frontlab
