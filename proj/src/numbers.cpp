#include "modulidim/numbers.hpp"

#include "modulidim/errors.hpp"

#include <limits>

namespace modulidim {

Rational make_rational(const Int& n, const Int& d) {
  if (d == 0) throw ValidationError("rational: zero denominator");
  Rational r(n);
  r /= Rational(d);
  return r;
}

Rational rational_from_string(const std::string& s) {
  auto bad = [&]() { return ValidationError("malformed rational: '" + s + "'"); };
  std::string body = s;
  // trim
  const char* ws = " \t\r\n";
  auto b = body.find_first_not_of(ws);
  auto e = body.find_last_not_of(ws);
  if (b == std::string::npos) throw bad();
  body = body.substr(b, e - b + 1);

  auto slash = body.find('/');
  try {
    if (slash == std::string::npos) return Rational(Int(body));
    Int num(body.substr(0, slash));
    Int den(body.substr(slash + 1));
    return make_rational(num, den);
  } catch (const std::runtime_error&) {
    throw bad();
  }
}

std::string rational_to_string(const Rational& r) {
  return r.str();
}

std::string rational_to_fraction_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

bool is_integer(const Rational& r) {
  return denominator(r) == 1;
}

Int rational_to_integer(const Rational& r) {
  if (!is_integer(r)) {
    throw ComputationError("expected an integer, got " + rational_to_string(r));
  }
  return numerator(r);
}

long long to_long_checked(const Int& v) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
    throw ComputationError("integer out of machine range: " + v.str());
  }
  return v.convert_to<long long>();
}

Rational rational_pow(const Rational& base, long long e) {
  if (e == 0) return Rational(1);
  if (base == 0) {
    if (e < 0) throw ValidationError("0 raised to a negative power");
    return Rational(0);
  }
  bool invert = e < 0;
  unsigned long long k = invert ? static_cast<unsigned long long>(-(e + 1)) + 1ULL
                                : static_cast<unsigned long long>(e);
  Rational acc(1);
  Rational b = base;
  while (k > 0) {
    if (k & 1ULL) acc *= b;
    b *= b;
    k >>= 1;
  }
  if (invert) acc = Rational(1) / acc;
  return acc;
}

Int integer_sqrt(const Int& n) {
  if (n < 0) throw ValidationError("integer_sqrt of a negative number");
  return sqrt(n);
}

bool is_perfect_square(const Int& n, Int* root) {
  if (n < 0) return false;
  Int r = sqrt(n);
  if (r * r == n) {
    if (root) *root = r;
    return true;
  }
  return false;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw ComputationError("exponent overflow in Laurent arithmetic");
  }
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw ComputationError("exponent overflow in Laurent arithmetic");
  }
  return out;
}

long long mod_floor(long long a, long long m) {
  long long r = a % m;
  return r < 0 ? r + m : r;
}

long long mod_inverse(long long w, long long m) {
  if (m <= 0) throw ValidationError("mod_inverse: modulus must be positive");
  long long a = mod_floor(w, m);
  // extended Euclid on (a, m)
  long long old_r = a, r = m;
  long long old_s = 1, s = 0;
  while (r != 0) {
    long long q = old_r / r;
    long long tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
  }
  if (old_r != 1) throw NotCoprimeError("mod_inverse: arguments are not coprime");
  return mod_floor(old_s, m);
}

} // namespace modulidim
