#pragma once

#include "modulidim/laurent.hpp"
#include "modulidim/ratfunc.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace modulidim {

enum class Polarization { plus, minus };

/// Monomial s^a t^b in the two torus characters that survive to the
/// extraction; u only ever appears through the delta constraint.
struct Monomial2 {
  std::int64_t s = 0;
  std::int64_t t = 0;

  friend bool operator==(const Monomial2&, const Monomial2&) = default;
};

/// [1/(1 - s^a t^b)]^+ expands as sum_{k>=0} x^k,
/// [1/(1 - s^a t^b)]^- expands as -sum_{k>=1} x^{-k}.
struct ExpansionFactor {
  Monomial2 monomial;
  Polarization polarization = Polarization::plus;
};

/// Closed-Reeb-orbit fixed-point datum: numerator character, polarized
/// expansion factors and the delta constraint delta(1 - u s^a t^b), read as
/// the formal sum over integer replication indices.
struct OrbitContribution {
  LaurentPoly numerator;  // in s, t
  std::vector<ExpansionFactor> factors;
  Monomial2 delta;

  void validate() const;
};

struct YpqParams {
  long long p = 2;
  long long q = 1;

  void validate() const;  // gcd(p, q) = 1, p > q >= 0
};

/// The four closed-orbit contributions for Y^{p,q}.
std::vector<OrbitContribution> ypq_orbit_data(const YpqParams& y);

/// s^0 u^0 part of a single contribution: u-invariance pins the delta
/// replication index to zero, then each numerator monomial matches at most
/// one expansion index of the unique s-carrying factor; the surviving
/// t-monomials multiply the remaining factors as exact rational functions.
RationalFunction orbit_invariant_part(const OrbitContribution& c);

/// Sum of the invariant parts, converted to a Laurent polynomial in t.
/// Throws NonPolynomialError when the sum keeps a denominator (incomplete
/// orbit data) and UnsupportedContributionError when some contribution has
/// more than one s-carrying factor.
LaurentPoly invariant_index(const std::vector<OrbitContribution>& contribs);

enum class Regularity { quasi_regular, irregular };

/// QuasiRegular iff 4p^2 - 3q^2 is a perfect square (exact integer test).
Regularity quasi_regularity(const YpqParams& y);

struct DimensionResult {
  long long dimension = 0;
  std::vector<std::string> warnings;
};

/// -(invariant index evaluated at t = 1).  Attaches a warning for
/// quasi-regular parameters, where the rank-2 extraction is not the basic
/// complex.
DimensionResult moduli_dimension(const YpqParams& y);

/// Brute-force verification path: every factor and delta expanded to
/// |index| <= window, multiplied out, then restricted to s- and u-degree
/// zero and |t-degree| <= window.
LaurentPoly truncated_expansion_oracle(const std::vector<OrbitContribution>& contribs,
                                       int window);

} // namespace modulidim
