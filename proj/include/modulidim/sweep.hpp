#pragma once

#include <string>
#include <vector>

namespace modulidim {

/// Batch property sweeps over coprime pairs and sample grids.  Each kernel
/// exists in a serial reference form and an OpenMP form; both must produce
/// identical results, and the benchmark target compares their runtimes.

struct LawSweepReport {
  long long pairs_checked = 0;
  long long violations = 0;
  std::string first_violation;

  bool ok() const { return violations == 0; }
};

/// Reciprocity and oddness of the exact Dedekind sum over coprime
/// 1 <= h < k <= max_k.
LawSweepReport dedekind_reciprocity_sweep_serial(int max_k);
LawSweepReport dedekind_reciprocity_sweep_omp(int max_k);

/// 6 m s(w;m) integer, 12 w m s(w;m) = w^2 + 1 (mod m), and
/// 2 - (w + w')/m + 12 s(w;m) integer, over coprime pairs with m <= max_m.
LawSweepReport dedekind_integrality_sweep_serial(int max_m);
LawSweepReport dedekind_integrality_sweep_omp(int max_m);

/// |exact - cotangent sum| < 2^-64 over coprime pairs with m <= max_m.
LawSweepReport dedekind_numeric_agreement_sweep_serial(int max_m);
LawSweepReport dedekind_numeric_agreement_sweep_omp(int max_m);

/// Numeric cyclotomic sums rationalize exactly to w - 1 and w' - 1 over
/// coprime pairs with m <= max_m.
LawSweepReport cyclotomic_identity_sweep_serial(int max_m);
LawSweepReport cyclotomic_identity_sweep_omp(int max_m);

/// fixed_point_term_general with weights {0, w-1, 1-w} equals (2-w-w')/m
/// exactly over coprime pairs with m <= max_m.
LawSweepReport fixed_point_consistency_sweep_serial(int max_m);
LawSweepReport fixed_point_consistency_sweep_omp(int max_m);

struct CurvatureGridReport {
  int samples = 0;
  double max_einstein_residual = 0;
  double max_bt_norm = 0;
  double max_st_deviation = 0;      // |s_T - 24|
  double max_eigenvalue_split = 0;  // |lambda_2 - lambda_3|
  double max_asymmetry = 0;
  double max_eigenform_residual = 0;
};

/// Curvature reports over a_count values of a and rho_count samples of rho
/// inside each valid range.
CurvatureGridReport curvature_grid_scan_serial(int a_count, int rho_count);
CurvatureGridReport curvature_grid_scan_omp(int a_count, int rho_count);

} // namespace modulidim
