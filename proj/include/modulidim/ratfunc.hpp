#pragma once

#include "modulidim/laurent.hpp"

#include <cstdint>
#include <set>

namespace modulidim {

/// 1 - t^e, e != 0.
LaurentPoly one_minus_t_pow(std::int64_t e);

/// Exact division of a polynomial in t by (1 - t^e).  Returns false and
/// leaves `quotient` untouched when the division has a remainder.
bool try_divide_one_minus_t_pow(const LaurentPoly& p, std::int64_t e, LaurentPoly* quotient);

/// Rational function numerator / prod (1 - t^e).  The denominator is kept as
/// a multiset of exponents; this is the only denominator family the
/// localization produces, and it cancels exactly without polynomial
/// factorization.  Normalization divides out every factor that divides the
/// numerator; equality is decided by cross-multiplication.
class RationalFunction {
 public:
  RationalFunction() = default;  // zero
  explicit RationalFunction(LaurentPoly numerator,
                            std::multiset<std::int64_t> denominator_factors = {});

  static RationalFunction zero() { return RationalFunction(); }
  static RationalFunction one() {
    return RationalFunction(LaurentPoly::constant(Rational(1)));
  }

  const LaurentPoly& numerator() const { return num_; }
  const std::multiset<std::int64_t>& denominator_factors() const { return factors_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return factors_.empty(); }

 private:
  void normalize();

  LaurentPoly num_;
  std::multiset<std::int64_t> factors_;
};

/// Exact sum, normalized.  Both operands must be functions of t alone.
RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b);

/// Cross-multiplied identity test.
bool rf_equal(const RationalFunction& a, const RationalFunction& b);

/// The underlying Laurent polynomial; throws NonPolynomialError when a
/// denominator factor survives normalization.
LaurentPoly rf_to_laurent(const RationalFunction& a);

} // namespace modulidim
