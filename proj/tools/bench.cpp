// Times the OpenMP sweep kernels against their serial reference
// implementations and checks that both produce identical results.

#include "modulidim/jobs.hpp"
#include "modulidim/sweep.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

namespace {

using Clock = std::chrono::steady_clock;

double seconds(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double>(b - a).count();
}

template <class F>
double time_run(const F& f) {
  auto t0 = Clock::now();
  f();
  return seconds(t0, Clock::now());
}

void row(const std::string& name, double serial, double parallel, bool same) {
  std::printf("%-42s %10.3fs %10.3fs %8.2fx   %s\n", name.c_str(), serial, parallel,
              parallel > 0 ? serial / parallel : 0.0, same ? "match" : "MISMATCH");
}

} // namespace

int main() {
  using namespace modulidim;

  std::printf("threads available: %d\n\n", omp_get_max_threads());
  std::printf("%-42s %11s %11s %9s\n", "kernel", "serial", "openmp", "speedup");

  {
    LawSweepReport a, b;
    double ts = time_run([&] { a = dedekind_reciprocity_sweep_serial(300); });
    double tp = time_run([&] { b = dedekind_reciprocity_sweep_omp(300); });
    row("dedekind reciprocity+oddness (k<=300)", ts, tp,
        a.pairs_checked == b.pairs_checked && a.violations == b.violations);
  }
  {
    LawSweepReport a, b;
    double ts = time_run([&] { a = dedekind_integrality_sweep_serial(800); });
    double tp = time_run([&] { b = dedekind_integrality_sweep_omp(800); });
    row("dedekind integrality (m<=800)", ts, tp,
        a.pairs_checked == b.pairs_checked && a.violations == b.violations);
  }
  {
    LawSweepReport a, b;
    double ts = time_run([&] { a = dedekind_numeric_agreement_sweep_serial(150); });
    double tp = time_run([&] { b = dedekind_numeric_agreement_sweep_omp(150); });
    row("dedekind exact-vs-cotangent (m<=150)", ts, tp,
        a.pairs_checked == b.pairs_checked && a.violations == b.violations);
  }
  {
    LawSweepReport a, b;
    double ts = time_run([&] { a = cyclotomic_identity_sweep_serial(60); });
    double tp = time_run([&] { b = cyclotomic_identity_sweep_omp(60); });
    row("cyclotomic identity (m<=60)", ts, tp,
        a.pairs_checked == b.pairs_checked && a.violations == b.violations);
  }
  {
    LawSweepReport a, b;
    double ts = time_run([&] { a = fixed_point_consistency_sweep_serial(60); });
    double tp = time_run([&] { b = fixed_point_consistency_sweep_omp(60); });
    row("fixed-point closed form vs numeric (m<=60)", ts, tp,
        a.pairs_checked == b.pairs_checked && a.violations == b.violations);
  }
  {
    CurvatureGridReport a, b;
    double ts = time_run([&] { a = curvature_grid_scan_serial(8, 64); });
    double tp = time_run([&] { b = curvature_grid_scan_omp(8, 64); });
    row("curvature grid (8 x 64 samples)", ts, tp,
        a.samples == b.samples &&
            a.max_einstein_residual == b.max_einstein_residual &&
            a.max_bt_norm == b.max_bt_norm &&
            a.max_st_deviation == b.max_st_deviation);
  }
  {
    std::vector<JobDescriptor> jobs;
    for (int p = 2; p <= 40; ++p) {
      for (int q = 1; q < p; ++q) {
        jobs.push_back({"ypq-index", {{"p", p}, {"q", q}}});
        jobs.push_back({"ypq-quasireg", {{"p", p}, {"q", q}}});
      }
    }
    std::string sa, sb;
    double ts = time_run([&] { sa = batch_output(run_batch(jobs, 1)); });
    double tp = time_run([&] { sb = batch_output(run_batch(jobs, omp_get_max_threads())); });
    row("batch of " + std::to_string(jobs.size()) + " jobs", ts, tp, sa == sb);
  }

  return 0;
}
