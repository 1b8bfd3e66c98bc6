#include "modulidim/ratfunc.hpp"

#include "modulidim/errors.hpp"

#include <map>
#include <utility>

namespace modulidim {

LaurentPoly one_minus_t_pow(std::int64_t e) {
  if (e == 0) throw ValidationError("denominator factor (1 - t^0) vanishes");
  LaurentPoly p = LaurentPoly::constant(Rational(1));
  p.add_term(Exponents{0, e, 0}, Rational(-1));
  return p;
}

bool try_divide_one_minus_t_pow(const LaurentPoly& p, std::int64_t e, LaurentPoly* quotient) {
  if (e == 0) throw ValidationError("division by (1 - t^0)");
  if (!p.is_univariate_t()) {
    throw ValidationError("rational-function division expects a polynomial in t alone");
  }
  if (p.is_zero()) {
    *quotient = LaurentPoly();
    return true;
  }
  if (e < 0) {
    // (1 - t^e) = (1 - t^|e|) * (-t^e), so divide by (1 - t^|e|) and shift.
    LaurentPoly q;
    if (!try_divide_one_minus_t_pow(p, -e, &q)) return false;
    *quotient = q.shifted(Exponents{0, -e, 0}).scaled(Rational(-1));
    return true;
  }

  // Work on the sparse t-coefficient map, peeling from the lowest degree:
  // subtracting c*t^d*(1 - t^e) moves mass from degree d to degree d+e.
  std::map<std::int64_t, Rational> rem;
  for (const auto& [ex, c] : p.terms()) rem[ex.t] = c;
  const std::int64_t max_deg = p.max_t_degree();

  LaurentPoly q;
  while (!rem.empty()) {
    auto it = rem.begin();
    std::int64_t d = it->first;
    Rational c = it->second;
    if (d > max_deg - e) return false;  // quotient degree bound exceeded: remainder
    q.add_term(Exponents{0, d, 0}, c);
    rem.erase(it);
    auto [jt, inserted] = rem.emplace(d + e, c);
    if (!inserted) {
      jt->second += c;
      if (jt->second == 0) rem.erase(jt);
    }
  }
  *quotient = std::move(q);
  return true;
}

RationalFunction::RationalFunction(LaurentPoly numerator,
                                   std::multiset<std::int64_t> denominator_factors)
    : num_(std::move(numerator)), factors_(std::move(denominator_factors)) {
  for (std::int64_t e : factors_) {
    if (e == 0) throw ValidationError("denominator factor (1 - t^0) vanishes");
  }
  if (!num_.is_univariate_t()) {
    throw ValidationError("RationalFunction numerator must be a polynomial in t alone");
  }
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    factors_.clear();
    return;
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      LaurentPoly q;
      if (try_divide_one_minus_t_pow(num_, *it, &q)) {
        num_ = std::move(q);
        factors_.erase(it);
        changed = true;
        break;
      }
    }
  }
}

namespace {

LaurentPoly factor_product(const std::multiset<std::int64_t>& factors) {
  LaurentPoly p = LaurentPoly::constant(Rational(1));
  for (std::int64_t e : factors) p = p * one_minus_t_pow(e);
  return p;
}

} // namespace

RationalFunction rf_add(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  LaurentPoly num = a.numerator() * factor_product(b.denominator_factors()) +
                    b.numerator() * factor_product(a.denominator_factors());
  std::multiset<std::int64_t> factors = a.denominator_factors();
  factors.insert(b.denominator_factors().begin(), b.denominator_factors().end());
  return RationalFunction(std::move(num), std::move(factors));
}

bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
  return a.numerator() * factor_product(b.denominator_factors()) ==
         b.numerator() * factor_product(a.denominator_factors());
}

LaurentPoly rf_to_laurent(const RationalFunction& a) {
  if (!a.is_laurent()) {
    throw NonPolynomialError("rational function is not a Laurent polynomial");
  }
  return a.numerator();
}

} // namespace modulidim
