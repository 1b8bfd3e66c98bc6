#pragma once

#include "modulidim/numbers.hpp"

#include <boost/multiprecision/mpfr.hpp>

#include <optional>

namespace modulidim {

using PrecisionReal = boost::multiprecision::mpfr_float;

/// Working precision in bits of mantissa.  Defaults to 100, or the value of
/// MODULIDIM_PRECISION when set; never below 100.
int precision_bits();

/// Overrides the working precision for this process.
void set_precision_bits(int bits);

PrecisionReal pr_pi();
PrecisionReal pr_from_rational(const Rational& r);
PrecisionReal pr_pow2(long exponent);  // 2^exponent
Int pr_floor_to_int(const PrecisionReal& x);

/// cot(pi * num / den) with 0 < num/den < 1 enforced by reduction mod den.
PrecisionReal cot_pi_frac(long long num, long long den);

struct PrecisionComplex {
  PrecisionReal re;
  PrecisionReal im;

  PrecisionComplex() : re(0), im(0) {}
  PrecisionComplex(PrecisionReal r, PrecisionReal i) : re(std::move(r)), im(std::move(i)) {}

  PrecisionComplex& operator+=(const PrecisionComplex& o);
  friend PrecisionComplex operator+(PrecisionComplex a, const PrecisionComplex& b) {
    return a += b;
  }
  friend PrecisionComplex operator*(const PrecisionComplex& a, const PrecisionComplex& b);
  friend PrecisionComplex operator/(const PrecisionComplex& a, const PrecisionComplex& b);
};

/// exp(2 pi i k / m).
PrecisionComplex unit_root(long long k, long long m);

/// Best rational p/q with q <= denominator_bound within 2^(-precision/2) of x,
/// by continued fractions; nullopt when no convergent lands inside the
/// tolerance.
std::optional<Rational> rationalize(const PrecisionReal& x, const Int& denominator_bound);

} // namespace modulidim
