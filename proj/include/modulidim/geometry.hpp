#pragma once

#include <array>
#include <utility>

namespace modulidim {

/// Sample of the one-parameter family of transverse metrics
///   g_T = drho^2/Delta + rho^2/4 (sigma1^2 + sigma2^2 + Delta sigma3^2),
///   Delta = 1 + 4(a-1)/(27 rho^4) - rho^2,
/// on an interval times SU(2).
struct MetricParams {
  double a = 0.5;
  double rho = 0.9;

  void validate() const;  // 0 < a < 1, rho > 0, Delta(a, rho) > 0
};

double delta_fn(double a, double rho);

/// Transverse curvature operator data on an orthonormal coframe
/// e^1 = rho/2 sigma1, e^2 = rho/2 sigma2, e^3 = rho sqrt(Delta)/2 sigma3,
/// e^4 = drho/sqrt(Delta).
struct CurvatureReport {
  // Action of R_T on e^12 - e^34, e^13 + e^24, e^14 - e^23, in that order.
  std::array<double, 3> asd_eigenvalues{};
  double bt_norm = 0;             // Frobenius norm of the SD/ASD mixing block
  double s_t = 0;                 // 4 * trace of the ASD diagonal block
  double einstein_residual = 0;   // max |Ric_T - (s_T/4) g_T| entry
  double delta = 0;
  double max_asymmetry = 0;       // operator symmetry defect on Lambda^2
  // Self-validated conventions: Maurer-Cartan factor in
  // d sigma_i = -c sigma_j ^ sigma_k and the global sign of the operator.
  int maurer_cartan_factor = 0;
  int curvature_sign = 0;
  double convention_residual = 0;
};

/// Assembles the curvature through Cartan's first structure equation with
/// dual-number differentiation in rho, self-validating the Maurer-Cartan and
/// sign conventions against the closed-form eigenvalues.  Throws
/// DegenerateMetricError when Delta <= 0 and a ComputationError when no
/// convention reproduces the eigenvalues.
CurvatureReport transverse_curvature(const MetricParams& m);

struct EigenformCheck {
  double max_residual = 0;
  bool pass = false;
};

/// Largest deviation of the computed R_T action from the closed-form
/// eigenvalues (8-8D)/rho^2 - 6 and (4D-4)/rho^2 + 6 across the three
/// anti-self-dual basis forms.
EigenformCheck verify_eigenforms(const MetricParams& m, double tol);

/// Endpoints of the component of {Delta > 0}, bisected to 1e-12.
std::pair<double, double> delta_positive_range(double a);

struct IrreducibilityWitness {
  double rho = 0;
  double value = 0;
};

/// Grid sample of rho maximizing |(4 Delta - 4)/rho^2 + 6| over the valid
/// range; throws NoWitnessError when every sample is below 1e-3.
IrreducibilityWitness irreducibility_witness(double a);

} // namespace modulidim
