#include "modulidim/dedekind.hpp"

#include "modulidim/errors.hpp"

#include <numeric>

namespace modulidim {

namespace {

void check_args(long long w, long long m) {
  if (m < 1) throw ValidationError("dedekind_sum: m must be >= 1");
  if (w < 1) throw ValidationError("dedekind_sum: w must be >= 1");
  if (std::gcd(w, m) != 1) {
    throw NotCoprimeError("dedekind_sum: gcd(w, m) != 1");
  }
}

} // namespace

Rational dedekind_sum(long long w, long long m) {
  check_args(w, m);
  long long h = mod_floor(w, m);
  long long k = m;
  Rational acc(0);
  int sign = 1;
  while (h != 0) {
    // s(h, k) = -1/4 + (h^2 + k^2 + 1) / (12 h k) - s(k mod h, h)
    Int hh(h), kk(k);
    Rational term = make_rational(hh * hh + kk * kk + 1, 12 * hh * kk) - make_rational(1, 4);
    acc += sign > 0 ? term : -term;
    sign = -sign;
    long long next = k % h;
    k = h;
    h = next;
  }
  return acc;
}

PrecisionReal dedekind_sum_numeric(long long w, long long m) {
  check_args(w, m);
  long long wr = mod_floor(w, m);
  PrecisionReal total(0);
  for (long long k = 1; k < m; ++k) {
    total += cot_pi_frac(k, m) * cot_pi_frac(k * wr, m);
  }
  return total / PrecisionReal(4 * m);
}

Rational dedekind_reciprocity_rhs(long long h, long long k) {
  Int hh(h), kk(k);
  return make_rational(hh * hh + kk * kk + 1, 12 * hh * kk) - make_rational(1, 4);
}

} // namespace modulidim
