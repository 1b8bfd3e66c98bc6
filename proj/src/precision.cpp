#include "modulidim/precision.hpp"

#include "modulidim/errors.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>

namespace modulidim {

namespace {

constexpr int kDefaultBits = 100;

int read_env_bits() {
  const char* raw = std::getenv("MODULIDIM_PRECISION");
  if (!raw) return kDefaultBits;
  char* end = nullptr;
  long v = std::strtol(raw, &end, 10);
  if (end == raw || *end != '\0' || v < kDefaultBits) return kDefaultBits;
  return static_cast<int>(v);
}

std::atomic<int>& bits_store() {
  static std::atomic<int> bits(0);
  return bits;
}

unsigned digits10_for_bits(int bits) {
  // ceil(bits * log10(2)) plus guard digits so the mantissa is never short.
  return static_cast<unsigned>(bits * 0.30103) + 4;
}

} // namespace

int precision_bits() {
  int b = bits_store().load(std::memory_order_relaxed);
  if (b == 0) {
    set_precision_bits(read_env_bits());
    b = bits_store().load(std::memory_order_relaxed);
  }
  return b;
}

void set_precision_bits(int bits) {
  if (bits < kDefaultBits) bits = kDefaultBits;
  bits_store().store(bits, std::memory_order_relaxed);
  PrecisionReal::default_precision(digits10_for_bits(bits));
}

PrecisionReal pr_pi() {
  (void)precision_bits();
  PrecisionReal x;
  mpfr_const_pi(x.backend().data(), MPFR_RNDN);
  return x;
}

PrecisionReal pr_from_rational(const Rational& r) {
  (void)precision_bits();
  PrecisionReal x;
  mpfr_set_q(x.backend().data(), r.backend().data(), MPFR_RNDN);
  return x;
}

PrecisionReal pr_pow2(long exponent) {
  (void)precision_bits();
  PrecisionReal one(1);
  return boost::multiprecision::ldexp(one, exponent);
}

Int pr_floor_to_int(const PrecisionReal& x) {
  PrecisionReal f = boost::multiprecision::floor(x);
  Int z;
  mpfr_get_z(z.backend().data(), f.backend().data(), MPFR_RNDN);
  return z;
}

PrecisionReal cot_pi_frac(long long num, long long den) {
  if (den <= 0) throw ValidationError("cot_pi_frac: denominator must be positive");
  long long r = mod_floor(num, den);
  if (r == 0) throw ComputationError("cot_pi_frac: pole at an integer multiple of pi");
  PrecisionReal arg = pr_pi() * PrecisionReal(r) / PrecisionReal(den);
  PrecisionReal out;
  mpfr_cot(out.backend().data(), arg.backend().data(), MPFR_RNDN);
  return out;
}

PrecisionComplex& PrecisionComplex::operator+=(const PrecisionComplex& o) {
  re += o.re;
  im += o.im;
  return *this;
}

PrecisionComplex operator*(const PrecisionComplex& a, const PrecisionComplex& b) {
  return PrecisionComplex(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
}

PrecisionComplex operator/(const PrecisionComplex& a, const PrecisionComplex& b) {
  PrecisionReal d = b.re * b.re + b.im * b.im;
  if (d == 0) throw ComputationError("complex division by zero");
  return PrecisionComplex((a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d);
}

PrecisionComplex unit_root(long long k, long long m) {
  if (m <= 0) throw ValidationError("unit_root: order must be positive");
  long long r = mod_floor(k, m);
  PrecisionReal arg = PrecisionReal(2) * pr_pi() * PrecisionReal(r) / PrecisionReal(m);
  PrecisionReal c, s;
  mpfr_sin_cos(s.backend().data(), c.backend().data(), arg.backend().data(), MPFR_RNDN);
  return PrecisionComplex(c, s);
}

std::optional<Rational> rationalize(const PrecisionReal& x, const Int& denominator_bound) {
  if (denominator_bound < 1) throw ValidationError("rationalize: bound must be >= 1");
  const PrecisionReal tol = pr_pow2(-precision_bits() / 2);
  // Once the continued-fraction remainder drops below this, the expansion is
  // numerical noise and the current convergent is exact to working precision.
  const PrecisionReal noise = pr_pow2(-(precision_bits() - 8));

  Int h_prev(1), h_prev2(0);  // convergent numerators
  Int k_prev(0), k_prev2(1);  // convergent denominators
  bool have_candidate = false;
  Int best_h(0), best_k(1);

  PrecisionReal xi = x;
  for (int iter = 0; iter < 300; ++iter) {
    Int a = pr_floor_to_int(xi);
    Int h = a * h_prev + h_prev2;
    Int k = a * k_prev + k_prev2;
    if (iter > 0 && k > denominator_bound) break;
    if (iter == 0 || k <= denominator_bound) {
      best_h = h;
      best_k = k;
      have_candidate = true;
    }
    h_prev2 = h_prev;
    h_prev = h;
    k_prev2 = k_prev;
    k_prev = k;
    PrecisionReal frac = xi - pr_from_rational(Rational(a));
    if (frac < noise) break;
    xi = PrecisionReal(1) / frac;
  }
  if (!have_candidate) return std::nullopt;
  Rational cand = make_rational(best_h, best_k);
  PrecisionReal err = boost::multiprecision::abs(x - pr_from_rational(cand));
  if (err > tol) return std::nullopt;
  if (denominator(cand) > denominator_bound) return std::nullopt;
  return cand;
}

} // namespace modulidim
