// Acceptance suite: one line per criterion, hard tolerances, nonzero exit on
// any failure.  Runtime budgets are enforced where stated.

#include "modulidim/dedekind.hpp"
#include "modulidim/geometry.hpp"
#include "modulidim/jobs.hpp"
#include "modulidim/laurent.hpp"
#include "modulidim/localization.hpp"
#include "modulidim/numbers.hpp"
#include "modulidim/orbifold.hpp"
#include "modulidim/sweep.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>
#include <vector>

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int number, const std::string& name, bool pass, double elapsed,
            const std::string& detail = "") {
  std::printf("[%s] criterion %2d: %-58s (%.2fs)%s%s\n", pass ? "PASS" : "FAIL", number,
              name.c_str(), elapsed, detail.empty() ? "" : " ", detail.c_str());
  if (!pass) ++g_failures;
}

template <class F>
void criterion(int number, const std::string& name, double budget_seconds, const F& body) {
  auto t0 = Clock::now();
  bool pass = false;
  std::string detail;
  try {
    pass = body(&detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    pass = false;
  }
  double elapsed = std::chrono::duration<double>(Clock::now() - t0).count();
  if (budget_seconds > 0 && elapsed > budget_seconds) {
    pass = false;
    detail += " [over budget " + std::to_string(budget_seconds) + "s]";
  }
  report(number, name, pass, elapsed, detail);
}

modulidim::Rational rat(long long n, long long d = 1) {
  return modulidim::make_rational(modulidim::Int(n), modulidim::Int(d));
}

} // namespace

int main() {
  using namespace modulidim;

  criterion(1, "Dedekind reciprocity (k<=200) and integrality (m<=500)", 5.0,
            [](std::string* detail) {
              LawSweepReport recip = dedekind_reciprocity_sweep_omp(200);
              LawSweepReport integ = dedekind_integrality_sweep_omp(500);
              if (!recip.ok()) *detail = "reciprocity violation at " + recip.first_violation;
              if (!integ.ok()) *detail += " integrality violation at " + integ.first_violation;
              *detail += "pairs: " + std::to_string(recip.pairs_checked) + " + " +
                         std::to_string(integ.pairs_checked);
              return recip.ok() && integ.ok();
            });

  criterion(2, "du Val summand equals 3 - m for 2 <= m <= 100", 1.0, [](std::string*) {
    for (long long m = 2; m <= 100; ++m) {
      if (duval_summand(m) != rat(3 - m)) return false;
    }
    return true;
  });

  criterion(3, "orbifold K3 headline: 48 by three exact routes", 0.0, [](std::string* detail) {
    CyK3Dimension d = cy_k3_dimension({2, 3, 7});
    bool ok = d.neg_index == 48 && d.h11 == 11;

    std::vector<CyclicSingularity> sings = {{2, 1, std::nullopt},
                                            {3, 2, std::nullopt},
                                            {7, 6, std::nullopt}};
    BasicTopology top{0, 3, rat(-7), rat(15), std::nullopt, std::nullopt};
    Rational route2 = index_asd_bundle(top, sings);
    ok = ok && route2 == -48;

    SignatureBookkeeping bk = signature_bookkeeping(rat(-545, 21), rat(545, 42), sings);
    ok = ok && bk.tauB == -7 && bk.chiB == 15;
    IndexResult route3 = index_general(bk.p1B_asd, 3, 0, 3, sings);
    ok = ok && route3.value == -48 && route3.value == route2 &&
         Rational(-d.neg_index) == route2;
    *detail = "negIndex=" + std::to_string(d.neg_index) + " h11=" + rational_to_string(d.h11) +
              " asd=" + rational_to_string(route2) + " general=" +
              rational_to_string(route3.value);
    return ok;
  });

  criterion(4, "flatness obstruction: {2,3,7} -> 463/42, 16xA1 -> 24", 0.0, [](std::string*) {
    FlatnessObstruction reid = flatness_obstruction({2, 3, 7});
    FlatnessObstruction kummer = flatness_obstruction(std::vector<long long>(16, 2));
    return reid.value == rat(463, 42) && !reid.is_flat && kummer.value == 24 &&
           kummer.is_flat;
  });

  criterion(5, "localization: -(t^-1+1+t), dim 3, all coprime p<=20; oracle w=30", 2.0,
            [](std::string* detail) {
              LaurentPoly expect = -(LaurentPoly::t_power(-1) +
                                     LaurentPoly::constant(rat(1)) + LaurentPoly::t_power(1));
              int pairs = 0;
              for (long long p = 2; p <= 20; ++p) {
                for (long long q = 1; q < p; ++q) {
                  if (std::gcd(p, q) != 1) continue;
                  ++pairs;
                  if (invariant_index(ypq_orbit_data({p, q})) != expect) return false;
                  if (moduli_dimension({p, q}).dimension != 3) return false;
                }
              }
              for (auto [p, q] : {std::pair<long long, long long>{2, 1}, {4, 1}}) {
                LaurentPoly oracle = truncated_expansion_oracle(ypq_orbit_data({p, q}), 30);
                for (std::int64_t t = -1; t <= 1; ++t) {
                  if (oracle.coefficient(Exponents{0, t, 0}) != -1) return false;
                }
              }
              *detail = std::to_string(pairs) + " coprime pairs";
              return pairs == 127;
            });

  criterion(6, "quasi-regularity of (1,0),(7,3) vs (2,1),(3,1),(3,2)", 0.0, [](std::string*) {
    return quasi_regularity({1, 0}) == Regularity::quasi_regular &&
           quasi_regularity({7, 3}) == Regularity::quasi_regular &&
           quasi_regularity({2, 1}) == Regularity::irregular &&
           quasi_regularity({3, 1}) == Regularity::irregular &&
           quasi_regularity({3, 2}) == Regularity::irregular;
  });

  criterion(7, "curvature: eigenvalues 1e-8, bT 1e-8, sT 1e-6, Einstein grid", 2.0,
            [](std::string* detail) {
              bool ok = true;
              for (double rho : {0.8, 0.9}) {
                MetricParams mp{0.5, rho};
                CurvatureReport rep = transverse_curvature(mp);
                double d = delta_fn(0.5, rho);
                double lam1 = (8 - 8 * d) / (rho * rho) - 6;
                double lam2 = (4 * d - 4) / (rho * rho) + 6;
                ok = ok && std::abs(rep.asd_eigenvalues[0] - lam1) < 1e-8;
                ok = ok && std::abs(rep.asd_eigenvalues[1] - lam2) < 1e-8;
                ok = ok && std::abs(rep.asd_eigenvalues[2] - lam2) < 1e-8;
                ok = ok && rep.bt_norm < 1e-8;
                ok = ok && std::abs(rep.s_t - 24.0) < 1e-6;
              }
              CurvatureGridReport grid = curvature_grid_scan_omp(5, 5);
              ok = ok && grid.samples == 25;
              ok = ok && grid.max_einstein_residual < 1e-8;
              ok = ok && grid.max_bt_norm < 1e-8;
              ok = ok && grid.max_st_deviation < 1e-6;
              char buf[160];
              std::snprintf(buf, sizeof(buf),
                            "einstein=%.2e bT=%.2e sT-24=%.2e over %d samples",
                            grid.max_einstein_residual, grid.max_bt_norm,
                            grid.max_st_deviation, grid.samples);
              *detail = buf;
              return ok;
            });

  criterion(8, "cyclotomic sums rationalize to w-1 and w'-1 for m<=60", 0.0,
            [](std::string* detail) {
              LawSweepReport rep = cyclotomic_identity_sweep_omp(60);
              *detail = std::to_string(rep.pairs_checked) + " pairs";
              if (!rep.ok()) *detail += " first failure " + rep.first_violation;
              return rep.ok();
            });

  criterion(9, "fixed-point term with weights {0,w-1,1-w} = (2-w-w')/m for m<=60", 0.0,
            [](std::string* detail) {
              LawSweepReport rep = fixed_point_consistency_sweep_omp(60);
              *detail = std::to_string(rep.pairs_checked) + " pairs";
              if (!rep.ok()) *detail += " first failure " + rep.first_violation;
              return rep.ok();
            });

  criterion(10, "batch determinism: 3 runs, parallelism 1 vs 8, byte-identical", 0.0,
             [](std::string* detail) {
               std::vector<JobDescriptor> jobs;
               for (int p = 2; p <= 10; ++p) {
                 for (int q = 1; q < p; ++q) {
                   jobs.push_back({"ypq-index", {{"p", p}, {"q", q}}});
                   jobs.push_back({"ypq-quasireg", {{"p", p}, {"q", q}}});
                 }
               }
               jobs.push_back({"cy-dim", {{"orders", {2, 3, 7}}}});
               jobs.push_back({"flatness", {{"orders", {2, 3, 7}}}});
               jobs.push_back({"dedekind", {{"w", 5}, {"m", 7}}});
               jobs.push_back({"dedekind", {{"w", 4}, {"m", 8}}});  // per-job error
               jobs.push_back({"ypq-curvature", {{"a", 0.5}, {"rho", 0.9}, {"tol", 1e-8}}});
               jobs.push_back({"u1-moduli",
                               {{"duality", "SD"}, {"b1", 2}, {"latticeRank", 1}}});

               std::string reference = batch_output(run_batch(jobs, 1));
               for (int run = 0; run < 3; ++run) {
                 if (batch_output(run_batch(jobs, 1)) != reference) return false;
                 if (batch_output(run_batch(jobs, 8)) != reference) return false;
               }
               *detail = std::to_string(jobs.size()) + " jobs";
               return true;
             });

  if (g_failures == 0) {
    std::printf("all acceptance criteria passed\n");
  } else {
    std::printf("%d criterion(s) FAILED\n", g_failures);
  }
  return g_failures == 0 ? 0 : 1;
}
