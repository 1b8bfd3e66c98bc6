#include "modulidim/localization.hpp"

#include "modulidim/errors.hpp"

#include <numeric>

namespace modulidim {

void OrbitContribution::validate() const {
  for (const ExpansionFactor& f : factors) {
    if (f.monomial == Monomial2{0, 0}) {
      throw ValidationError("OrbitContribution: expansion factor monomial must not be 1");
    }
  }
  for (const auto& [e, c] : numerator.terms()) {
    if (e.u != 0) {
      throw ValidationError("OrbitContribution: u may only appear through the delta");
    }
  }
}

void YpqParams::validate() const {
  if (q < 0 || p <= q) throw ValidationError("YpqParams: need p > q >= 0");
  if (std::gcd(p, q) != 1) throw NotCoprimeError("YpqParams: gcd(p, q) != 1");
}

namespace {

LaurentPoly st_monomial(const Rational& c, std::int64_t es, std::int64_t et) {
  return LaurentPoly::monomial(c, Exponents{es, et, 0});
}

LaurentPoly ypq_numerator_00() {
  // 1 + s t^-1 + t s^-1
  LaurentPoly p = LaurentPoly::constant(Rational(1));
  p += st_monomial(Rational(1), 1, -1);
  p += st_monomial(Rational(1), -1, 1);
  return p;
}

LaurentPoly ypq_numerator_01() {
  // 1 + s t^3 + s^-1 t^-3
  LaurentPoly p = LaurentPoly::constant(Rational(1));
  p += st_monomial(Rational(1), 1, 3);
  p += st_monomial(Rational(1), -1, -3);
  return p;
}

} // namespace

std::vector<OrbitContribution> ypq_orbit_data(const YpqParams& y) {
  y.validate();
  const long long p = y.p;
  const long long q = y.q;
  std::vector<OrbitContribution> orbits(4);

  orbits[0].numerator = ypq_numerator_00();
  orbits[0].factors = {{{-1, 0}, Polarization::plus}, {{0, -1}, Polarization::plus}};
  orbits[0].delta = {0, 0};

  orbits[1].numerator = ypq_numerator_01();
  orbits[1].factors = {{{-1, -2}, Polarization::plus}, {{0, 1}, Polarization::plus}};
  orbits[1].delta = {0, q - p};

  orbits[2].numerator = ypq_numerator_00();
  orbits[2].factors = {{{-1, 0}, Polarization::minus}, {{0, -1}, Polarization::plus}};
  orbits[2].delta = {p, 0};

  orbits[3].numerator = ypq_numerator_01();
  orbits[3].factors = {{{-1, -2}, Polarization::minus}, {{0, 1}, Polarization::plus}};
  orbits[3].delta = {p, p + q};

  return orbits;
}

RationalFunction orbit_invariant_part(const OrbitContribution& c) {
  c.validate();

  int s_index = -1;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (c.factors[i].monomial.s != 0) {
      if (s_index >= 0) {
        throw UnsupportedContributionError(
            "orbit_invariant_part: more than one s-carrying expansion factor");
      }
      s_index = static_cast<int>(i);
    }
  }

  std::multiset<std::int64_t> tail;
  for (std::size_t i = 0; i < c.factors.size(); ++i) {
    if (static_cast<int>(i) == s_index) continue;
    tail.insert(c.factors[i].monomial.t);
  }

  // u-invariance forces the delta replication index to zero, so the delta
  // contributes the factor 1 and drops out here.
  RationalFunction sum;
  for (const auto& [e, coeff] : c.numerator.terms()) {
    const std::int64_t alpha = e.s;
    const std::int64_t beta = e.t;
    if (s_index < 0) {
      if (alpha != 0) continue;
      sum = rf_add(sum, RationalFunction(LaurentPoly::monomial(coeff, Exponents{0, beta, 0}),
                                         tail));
      continue;
    }
    const Monomial2 x = c.factors[static_cast<std::size_t>(s_index)].monomial;
    const Polarization pol = c.factors[static_cast<std::size_t>(s_index)].polarization;
    if (alpha % x.s != 0) continue;
    if (pol == Polarization::plus) {
      const std::int64_t k = -alpha / x.s;
      if (k < 0) continue;
      std::int64_t texp = checked_add(beta, checked_mul(k, x.t));
      sum = rf_add(sum, RationalFunction(LaurentPoly::monomial(coeff, Exponents{0, texp, 0}),
                                         tail));
    } else {
      const std::int64_t k = alpha / x.s;
      if (k < 1) continue;
      std::int64_t texp = checked_add(beta, -checked_mul(k, x.t));
      sum = rf_add(sum, RationalFunction(LaurentPoly::monomial(-coeff, Exponents{0, texp, 0}),
                                         tail));
    }
  }
  return sum;
}

LaurentPoly invariant_index(const std::vector<OrbitContribution>& contribs) {
  RationalFunction total;
  for (const OrbitContribution& c : contribs) {
    total = rf_add(total, orbit_invariant_part(c));
  }
  return rf_to_laurent(total);
}

Regularity quasi_regularity(const YpqParams& y) {
  y.validate();
  Int d = Int(4) * y.p * y.p - Int(3) * y.q * y.q;
  return is_perfect_square(d) ? Regularity::quasi_regular : Regularity::irregular;
}

DimensionResult moduli_dimension(const YpqParams& y) {
  y.validate();
  DimensionResult out;
  if (quasi_regularity(y) == Regularity::quasi_regular) {
    out.warnings.push_back(
        "parameters are quasi-regular: the rank-2 invariant extraction is not the basic "
        "complex, no dimension claim is attached");
  }
  Rational dim = -eval_at_one(invariant_index(ypq_orbit_data(y)));
  out.dimension = to_long_checked(rational_to_integer(dim));
  return out;
}

LaurentPoly truncated_expansion_oracle(const std::vector<OrbitContribution>& contribs,
                                       int window) {
  if (window < 1) throw ValidationError("truncated_expansion_oracle: window must be >= 1");
  LaurentPoly total;
  for (const OrbitContribution& c : contribs) {
    c.validate();
    LaurentPoly expanded = c.numerator;
    for (const ExpansionFactor& f : c.factors) {
      // The displayed polarization picks the expansion side of the s-carrying
      // factor.  Pure-t tails expand ascending in t (the t -> 0 series of the
      // rational function 1/(1 - t^e)): the direction the exact path's
      // rational-function arithmetic realizes, and the one that makes the
      // orbit tails telescope.
      Polarization pol = f.polarization;
      if (f.monomial.s == 0) {
        pol = f.monomial.t > 0 ? Polarization::plus : Polarization::minus;
      }
      LaurentPoly series;
      if (pol == Polarization::plus) {
        for (int k = 0; k <= window; ++k) {
          series.add_term(Exponents{checked_mul(k, f.monomial.s),
                                    checked_mul(k, f.monomial.t), 0},
                          Rational(1));
        }
      } else {
        for (int k = 1; k <= window; ++k) {
          series.add_term(Exponents{checked_mul(-k, f.monomial.s),
                                    checked_mul(-k, f.monomial.t), 0},
                          Rational(-1));
        }
      }
      expanded = expanded * series;
    }
    LaurentPoly delta_series;
    for (int n = -window; n <= window; ++n) {
      delta_series.add_term(Exponents{checked_mul(n, c.delta.s),
                                      checked_mul(n, c.delta.t), n},
                            Rational(1));
    }
    expanded = expanded * delta_series;
    total += expanded;
  }

  LaurentPoly restricted;
  for (const auto& [e, coeff] : total.terms()) {
    if (e.s == 0 && e.u == 0 && e.t >= -window && e.t <= window) {
      restricted.add_term(Exponents{0, e.t, 0}, coeff);
    }
  }
  return restricted;
}

} // namespace modulidim
