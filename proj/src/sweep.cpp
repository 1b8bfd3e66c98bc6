#include "modulidim/sweep.hpp"

#include "modulidim/dedekind.hpp"
#include "modulidim/geometry.hpp"
#include "modulidim/numbers.hpp"
#include "modulidim/orbifold.hpp"
#include "modulidim/precision.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace modulidim {

namespace {

std::vector<std::pair<long long, long long>> coprime_pairs(int max_m) {
  // (w, m) with 1 <= w < m <= max_m, gcd(w, m) = 1
  std::vector<std::pair<long long, long long>> out;
  for (long long m = 2; m <= max_m; ++m)
    for (long long w = 1; w < m; ++w)
      if (std::gcd(w, m) == 1) out.emplace_back(w, m);
  return out;
}

// Runs `check` over every pair, collecting the count and first failure by
// pair order regardless of the execution order.
template <class Check>
LawSweepReport run_pair_sweep(const std::vector<std::pair<long long, long long>>& pairs,
                              bool parallel, const Check& check) {
  const std::int64_t n = static_cast<std::int64_t>(pairs.size());
  std::vector<unsigned char> failed(pairs.size(), 0);

  if (parallel) {
#pragma omp parallel for schedule(dynamic, 64)
    for (std::int64_t i = 0; i < n; ++i) {
      failed[i] = check(pairs[i].first, pairs[i].second) ? 0 : 1;
    }
  } else {
    for (std::int64_t i = 0; i < n; ++i) {
      failed[i] = check(pairs[i].first, pairs[i].second) ? 0 : 1;
    }
  }

  LawSweepReport rep;
  rep.pairs_checked = n;
  for (std::int64_t i = 0; i < n; ++i) {
    if (!failed[i]) continue;
    ++rep.violations;
    if (rep.first_violation.empty()) {
      std::ostringstream os;
      os << "(w=" << pairs[i].first << ", m=" << pairs[i].second << ")";
      rep.first_violation = os.str();
    }
  }
  return rep;
}

bool reciprocity_and_oddness(long long h, long long k) {
  // pairs arrive as (w, m) = (h, k) with h < k
  Rational lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
  if (lhs != dedekind_reciprocity_rhs(h, k)) return false;
  return dedekind_sum(k - h, k) == -dedekind_sum(h, k);
}

bool integrality(long long w, long long m) {
  Rational s = dedekind_sum(w, m);
  Rational six_ms = Rational(6) * m * s;
  if (!is_integer(six_ms)) return false;
  Rational twelve = Rational(12) * w * m * s;
  if (!is_integer(twelve)) return false;
  Int residue = (rational_to_integer(twelve) - (Int(w) * w + 1)) % Int(m);
  if (residue != 0) return false;
  long long wp = mod_inverse(w, m);
  Rational summand = Rational(2) - make_rational(Int(w + wp), Int(m)) + Rational(12) * s;
  return is_integer(summand);
}

bool numeric_agreement(long long w, long long m) {
  PrecisionReal exact = pr_from_rational(dedekind_sum(w, m));
  PrecisionReal numeric = dedekind_sum_numeric(w, m);
  return boost::multiprecision::abs(exact - numeric) < pr_pow2(-64);
}

bool cyclotomic_identity(long long w, long long m) {
  CyclicSingularity s{m, w, std::nullopt};
  auto [s1, s2] = cyclotomic_pair_sums(s);
  return s1 == Rational(w - 1) && s2 == Rational(w_prime(s) - 1);
}

bool fixed_point_consistency(long long w, long long m) {
  CyclicSingularity s{m, w, std::vector<long long>{0, w - 1, 1 - w}};
  return fixed_point_term_general(s, 3) == fixed_point_term_adjoint_so3(s);
}

CurvatureGridReport curvature_grid_scan(int a_count, int rho_count, bool parallel) {
  struct Sample {
    double a, rho;
  };
  std::vector<Sample> samples;
  for (int i = 1; i <= a_count; ++i) {
    double a = static_cast<double>(i) / (a_count + 1);
    auto [lo, hi] = delta_positive_range(a);
    double margin = (hi - lo) * 0.05;
    for (int j = 0; j < rho_count; ++j) {
      double rho = (lo + margin) +
                   (hi - lo - 2 * margin) * j / std::max(1, rho_count - 1);
      samples.push_back({a, rho});
    }
  }

  const std::int64_t n = static_cast<std::int64_t>(samples.size());
  std::vector<CurvatureReport> reports(samples.size());
  std::vector<double> residuals(samples.size());

  auto body = [&](std::int64_t i) {
    MetricParams mp{samples[i].a, samples[i].rho};
    reports[i] = transverse_curvature(mp);
    residuals[i] = verify_eigenforms(mp, 1e-8).max_residual;
  };
  if (parallel) {
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < n; ++i) body(i);
  } else {
    for (std::int64_t i = 0; i < n; ++i) body(i);
  }

  CurvatureGridReport rep;
  rep.samples = static_cast<int>(n);
  for (std::int64_t i = 0; i < n; ++i) {
    const CurvatureReport& r = reports[i];
    rep.max_einstein_residual = std::max(rep.max_einstein_residual, r.einstein_residual);
    rep.max_bt_norm = std::max(rep.max_bt_norm, r.bt_norm);
    rep.max_st_deviation = std::max(rep.max_st_deviation, std::abs(r.s_t - 24.0));
    rep.max_eigenvalue_split =
        std::max(rep.max_eigenvalue_split,
                 std::abs(r.asd_eigenvalues[1] - r.asd_eigenvalues[2]));
    rep.max_asymmetry = std::max(rep.max_asymmetry, r.max_asymmetry);
    rep.max_eigenform_residual = std::max(rep.max_eigenform_residual, residuals[i]);
  }
  return rep;
}

} // namespace

LawSweepReport dedekind_reciprocity_sweep_serial(int max_k) {
  return run_pair_sweep(coprime_pairs(max_k), false, reciprocity_and_oddness);
}
LawSweepReport dedekind_reciprocity_sweep_omp(int max_k) {
  return run_pair_sweep(coprime_pairs(max_k), true, reciprocity_and_oddness);
}

LawSweepReport dedekind_integrality_sweep_serial(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), false, integrality);
}
LawSweepReport dedekind_integrality_sweep_omp(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), true, integrality);
}

LawSweepReport dedekind_numeric_agreement_sweep_serial(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), false, numeric_agreement);
}
LawSweepReport dedekind_numeric_agreement_sweep_omp(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), true, numeric_agreement);
}

LawSweepReport cyclotomic_identity_sweep_serial(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), false, cyclotomic_identity);
}
LawSweepReport cyclotomic_identity_sweep_omp(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), true, cyclotomic_identity);
}

LawSweepReport fixed_point_consistency_sweep_serial(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), false, fixed_point_consistency);
}
LawSweepReport fixed_point_consistency_sweep_omp(int max_m) {
  return run_pair_sweep(coprime_pairs(max_m), true, fixed_point_consistency);
}

CurvatureGridReport curvature_grid_scan_serial(int a_count, int rho_count) {
  return curvature_grid_scan(a_count, rho_count, false);
}
CurvatureGridReport curvature_grid_scan_omp(int a_count, int rho_count) {
  return curvature_grid_scan(a_count, rho_count, true);
}

} // namespace modulidim
