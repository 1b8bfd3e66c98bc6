#pragma once

#include "modulidim/numbers.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace modulidim {

/// Exponent vector for the torus characters s, t, u.  A variable is "absent"
/// when its exponent is zero in every stored term.
struct Exponents {
  std::int64_t s = 0;
  std::int64_t t = 0;
  std::int64_t u = 0;

  friend auto operator<=>(const Exponents&, const Exponents&) = default;
};

/// Finitely supported exponent-vector -> Rational map.  Terms are kept in a
/// sorted map and zero coefficients are never stored, so iteration order and
/// serialization are deterministic.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Rational& c);
  static LaurentPoly monomial(const Rational& c, const Exponents& e);
  static LaurentPoly t_power(std::int64_t e);

  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_univariate_t() const;

  /// Adds c * x^e, pruning the term if the coefficient cancels.
  void add_term(const Exponents& e, const Rational& c);

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(const Exponents& e) const;  // multiply by x^e

  /// Value at (s, t, u); point coordinates must be nonzero wherever a
  /// negative exponent occurs.
  Rational eval(const Rational& sv, const Rational& tv, const Rational& uv) const;

  Rational coefficient(const Exponents& e) const;

  std::int64_t max_t_degree() const;  // requires !is_zero()

  /// Human-readable form, ascending by exponent; a polynomial whose
  /// coefficients are all negative is rendered as -(...).
  std::string pretty() const;

  /// Sorted "coeff * s^a t^b u^c" term list.
  std::vector<std::string> term_strings() const;

 private:
  std::map<Exponents, Rational> terms_;
};

/// Sum of coefficients of a polynomial in t alone.
Rational eval_at_one(const LaurentPoly& p);

} // namespace modulidim
