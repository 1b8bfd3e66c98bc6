#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modulidim/dedekind.hpp"
#include "modulidim/errors.hpp"
#include "modulidim/numbers.hpp"
#include "modulidim/precision.hpp"
#include "modulidim/sweep.hpp"

#include <numeric>

using namespace modulidim;

namespace {
Rational rat(long long n, long long d = 1) { return make_rational(Int(n), Int(d)); }
}

TEST_CASE("dedekind_sum frozen values") {
  CHECK(dedekind_sum(1, 1) == 0);
  CHECK(dedekind_sum(1, 2) == 0);
  CHECK(dedekind_sum(1, 3) == rat(1, 18));
  CHECK(dedekind_sum(5, 7) == rat(-1, 14));
  CHECK(dedekind_sum(6, 7) == rat(-5, 14));
  // s(1, k) = (k-1)(k-2)/(12k), s(m-1; m) = -s(1; m)
  for (long long k = 2; k <= 40; ++k) {
    CHECK(dedekind_sum(1, k) == rat((k - 1) * (k - 2), 12 * k));
    CHECK(dedekind_sum(k - 1, k) == -dedekind_sum(1, k));
  }
  // periodicity in w
  CHECK(dedekind_sum(5 + 7, 7) == dedekind_sum(5, 7));
}

TEST_CASE("dedekind_sum rejects non-coprime input") {
  CHECK_THROWS_AS(dedekind_sum(2, 4), NotCoprimeError);
  CHECK_THROWS_AS(dedekind_sum(7, 7), NotCoprimeError);
  CHECK_THROWS_AS(dedekind_sum(14, 7), NotCoprimeError);
  CHECK_THROWS_AS(dedekind_sum_numeric(3, 9), NotCoprimeError);
}

TEST_CASE("numeric cotangent oracle agrees with the exact recursion") {
  PrecisionReal bound = pr_pow2(-80);
  CHECK(dedekind_sum_numeric(1, 1) == 0);  // empty sum
  CHECK(boost::multiprecision::abs(dedekind_sum_numeric(1, 2)) < bound);
  CHECK(boost::multiprecision::abs(dedekind_sum_numeric(1, 3) - pr_from_rational(rat(1, 18))) <
        bound);
  CHECK(boost::multiprecision::abs(dedekind_sum_numeric(6, 7) - pr_from_rational(rat(-5, 14))) <
        bound);
  for (long long m = 2; m <= 40; ++m) {
    for (long long w = 1; w < m; ++w) {
      if (std::gcd(w, m) != 1) continue;
      PrecisionReal exact = pr_from_rational(dedekind_sum(w, m));
      CHECK(boost::multiprecision::abs(exact - dedekind_sum_numeric(w, m)) < pr_pow2(-64));
    }
  }
}

TEST_CASE("reciprocity, oddness, integrality sweeps (serial reference)") {
  LawSweepReport recip = dedekind_reciprocity_sweep_serial(80);
  CHECK(recip.ok());
  CHECK(recip.pairs_checked > 0);

  LawSweepReport integ = dedekind_integrality_sweep_serial(120);
  CHECK(integ.ok());
}

TEST_CASE("openmp sweeps match the serial reference") {
  LawSweepReport s1 = dedekind_reciprocity_sweep_serial(60);
  LawSweepReport p1 = dedekind_reciprocity_sweep_omp(60);
  CHECK(s1.pairs_checked == p1.pairs_checked);
  CHECK(s1.violations == p1.violations);

  LawSweepReport s2 = dedekind_integrality_sweep_serial(90);
  LawSweepReport p2 = dedekind_integrality_sweep_omp(90);
  CHECK(s2.pairs_checked == p2.pairs_checked);
  CHECK(s2.violations == p2.violations);

  LawSweepReport s3 = dedekind_numeric_agreement_sweep_serial(40);
  LawSweepReport p3 = dedekind_numeric_agreement_sweep_omp(40);
  CHECK(s3.pairs_checked == p3.pairs_checked);
  CHECK(s3.violations == p3.violations);
  CHECK(s3.ok());
}

TEST_CASE("exact and numeric paths agree to 2^-64 up to m = 300") {
  LawSweepReport rep = dedekind_numeric_agreement_sweep_omp(300);
  CHECK(rep.ok());
  CHECK(rep.pairs_checked == 27397);
}
