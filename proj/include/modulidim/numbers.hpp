#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <string>

namespace modulidim {

using Int = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

/// Canonicalized rational n/d.  Throws ValidationError when d == 0.
Rational make_rational(const Int& n, const Int& d);

/// Parses "p", "-p" or "p/q".  Throws ValidationError on malformed input.
Rational rational_from_string(const std::string& s);

/// "p" when the denominator is 1, otherwise "p/q".
std::string rational_to_string(const Rational& r);

/// Always "p/q", including "p/1".
std::string rational_to_fraction_string(const Rational& r);

bool is_integer(const Rational& r);

/// Integer value of r; throws ComputationError when r is not an integer.
Int rational_to_integer(const Rational& r);

long long to_long_checked(const Int& v);

/// base^e for possibly negative e; throws ValidationError on 0^negative.
Rational rational_pow(const Rational& base, long long e);

/// floor(sqrt(n)) for n >= 0.
Int integer_sqrt(const Int& n);

bool is_perfect_square(const Int& n, Int* root = nullptr);

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Least nonnegative residue of a mod m (m > 0).
long long mod_floor(long long a, long long m);

/// Inverse of w mod m in (0, m); throws NotCoprimeError when gcd(w, m) != 1.
long long mod_inverse(long long w, long long m);

} // namespace modulidim
