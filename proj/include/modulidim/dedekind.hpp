#pragma once

#include "modulidim/numbers.hpp"
#include "modulidim/precision.hpp"

namespace modulidim {

/// Dedekind sum s(w; m), exact, via the reciprocity recursion
///   s(h, k) + s(k, h) = -1/4 + (h/k + k/h + 1/(hk)) / 12,   s(*, 1) = 0,
/// in O(log m) rational operations.  w is reduced mod m first; throws
/// NotCoprimeError when gcd(w, m) != 1 (in particular for w = m, m > 1).
Rational dedekind_sum(long long w, long long m);

/// Direct cotangent sum (1/4m) sum_{k=1}^{m-1} cot(pi k/m) cot(pi k w/m) at
/// working precision.  O(m); kept as the test oracle for the exact path.
PrecisionReal dedekind_sum_numeric(long long w, long long m);

/// Right-hand side of the reciprocity identity for (h, k).
Rational dedekind_reciprocity_rhs(long long h, long long k);

} // namespace modulidim
