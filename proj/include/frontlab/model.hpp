#pragma once

#include <functional>
#include <map>
#include <string>

#include "frontlab/types.hpp"

namespace frontlab {

/// Reaction-diffusion model Y_t = D Y_xx + R(Y) in shifted coordinates
/// (left end state mapped to 0), with the product structure
/// R(U,0) = (A1 U, 0) for the split Y = (U, V), U in R^n1, V in R^n2.
struct ReactionModel {
  std::string name;
  int n = 0, n1 = 0, n2 = 0;
  Vec diffusion;  // diag of D, length n
  Mat A1;         // n1 x n1

  // Pointwise evaluators in shifted coordinates. jac fills row-major n x n.
  std::function<void(const double* y, double* r)> reaction;
  std::function<void(const double* y, double* jac)> jacobian;

  Vec y_plus;                     // shifted right end state (left end state is 0)
  Vec y_minus_raw, y_plus_raw;    // original (unshifted) end states
  std::map<std::string, double> params;
};

enum class BuiltinModel { GaslessCombustion, ExoEndo };

/// Construct a built-in model; parameters default per model and may be
/// overridden by name (gasless: beta; exo_endo: sigma, tau, a2, a3, b2, b3,
/// d2, d3). Throws on nonpositive required parameters.
ReactionModel builtin_model(BuiltinModel which, const std::map<std::string, double>& params = {});

/// User-supplied model bundle; validated against the product-structure
/// sample check before acceptance.
struct CustomModelSpec {
  std::string name = "custom";
  int n1 = 0, n2 = 0;
  Vec diffusion;
  Mat A1;
  std::function<void(const double* y, double* r)> reaction;   // shifted coords
  std::function<void(const double* y, double* jac)> jacobian;
  Vec y_plus;
};

ReactionModel custom_model(const CustomModelSpec& spec);

Vec eval_reaction(const ReactionModel& m, const Vec& y);
Mat eval_jacobian(const ReactionModel& m, const Vec& y);

/// R applied row-wise to a field; out is resized as needed.
void eval_reaction_field(const ReactionModel& m, const GridField& y, GridField& out);
/// Jacobian per node, row i holds row-major dR(y_i) flattened to n*n.
void eval_jacobian_field(const ReactionModel& m, const GridField& y, RowMat& out);

struct ProductStructureReport {
  double max_violation = 0;
  bool pass = false;
};

/// Samples U in a box and checks R(U,0) = (A1 U, 0) within
/// 1e-12 * (1 + |A1 U|_inf) per sample.
ProductStructureReport check_product_structure(const ReactionModel& m, int sample_count,
                                               unsigned long long seed = 2024);

/// Ignition-type rate a*exp(-b/u) for u > 0, 0 otherwise (underflow-guarded).
double ignition_rate(double u, double a = 1.0, double b = 1.0);
double ignition_rate_derivative(double u, double a = 1.0, double b = 1.0);

}  // namespace frontlab
