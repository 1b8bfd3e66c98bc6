#pragma once

#include "modulidim/numbers.hpp"
#include "modulidim/precision.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace modulidim {

/// Isolated cyclic orbifold point: Z_m acting on C^2 by
/// (z1, z2) -> (zeta^k z1, zeta^{w k} z2), optionally with the weights of the
/// Z_m action on the adjoint fibre.
struct CyclicSingularity {
  long long m = 2;
  long long w = 1;
  std::optional<std::vector<long long>> adjoint_weights;

  void validate() const;  // m >= 2, 0 < w < m after reduction, gcd(w, m) = 1
};

/// User-supplied basic topological data.  The library consumes these numbers,
/// it does not derive them from a manifold description.
struct BasicTopology {
  long long b1B = 0;
  long long bplusB = 0;
  Rational tauB;
  Rational chiB;
  std::optional<Rational> p1B_H;
  std::optional<Rational> eB_H;

  /// 1 - b1B + bplusB = (chiB + tauB)/2 must hold when all four are given.
  bool consistent() const;
};

/// Modular inverse w' with w w' = 1 (mod m), 0 < w' < m.
long long w_prime(const CyclicSingularity& s);

/// Fixed-point contribution (1/m) sum_k (chi(k) - dimG)/det(1 - g_k) for a
/// general weight multiset, evaluated at working precision through the
/// sin^2 * (1 - cot cot) form and rationalized with denominator bound 4m^2.
/// When the weights have the {0, w-1, 1-w} shape the result is certified
/// against the closed form.  Throws RationalizationFailedError.
Rational fixed_point_term_general(const CyclicSingularity& s, int dim_g);

/// Closed form (2 - w - w')/m for the adjoint of the anti-self-dual 2-form
/// bundle (weights {0, w-1, 1-w}).
Rational fixed_point_term_adjoint_so3(const CyclicSingularity& s);

struct IndexResult {
  Rational value;
  std::vector<std::string> warnings;
};

/// ind = p1B(g_P)[X] + dimG/2 (1 - b1B + b+B) + sum_j fixed-point term.
/// Singularities without weights fall back to the closed form when
/// dim_g == 3, otherwise MissingWeightsError.  A non-integer result attaches
/// an integrality warning rather than failing.
IndexResult index_general(const Rational& p1b_gp, int dim_g, long long b1b, long long bplus_b,
                          const std::vector<CyclicSingularity>& sings);

/// ind = 5/4 (3 tauB - chiB) + sum_j (2 - (w_j + w'_j)/m_j + 12 s(w_j; m_j)).
/// Each per-singularity summand is asserted to be an integer.
Rational index_asd_bundle(const BasicTopology& top, const std::vector<CyclicSingularity>& sings);

/// 2 - 2(m-1)/m + 12 s(m-1; m) for an A_{m-1} point; equals 3 - m.
Rational duval_summand(long long m);

struct CyK3Dimension {
  long long neg_index = 0;
  Rational h11;
};

/// negIndex = 90 - 2 sum (2 m_j - 1), h11 = 20 - sum (m_j - 1), with the
/// internal cross-check negIndex = 5 h11 - 10 + sum (m_j - 3).
/// Throws NegativeH11Error / InconsistentFormulasError.
CyK3Dimension cy_k3_dimension(const std::vector<long long>& orders);

struct FlatnessObstruction {
  Rational value;
  bool is_flat = false;
};

/// sum (m_j^2 - 1)/m_j compared with 24.
FlatnessObstruction flatness_obstruction(const std::vector<long long>& orders);

struct SignatureBookkeeping {
  Rational tauB;
  Rational chiB;
  Rational p1B_asd;
};

/// tauB = p1B(H)/3 - sum 4 s(w_j; m_j), chiB = eB(H) + sum (1 - 1/m_j),
/// p1B on the ASD bundle = p1B(H) - 2 eB(H).
SignatureBookkeeping signature_bookkeeping(const Rational& p1b_h, const Rational& eb_h,
                                           const std::vector<CyclicSingularity>& sings);

/// (lambda/2pi)^2 * integral of omega^2: the basic Pontryagin pairing for the
/// SU(2) bundle L + L* built from a trivial line bundle with connection
/// d + i lambda eta.
Rational basic_p1_su2(const Rational& lambda_over_2pi, const Rational& omega2_integral);

enum class Duality { SD, ASD };

struct ModuliDescriptorU1 {
  Duality duality = Duality::ASD;
  long long b1 = 0;
  long long lattice_rank = 0;
  std::vector<long long> torsion_orders;

  void validate() const;
};

struct U1Components {
  long long component_group_rank = 0;
  std::vector<long long> component_torsion;
  std::string component_topology;
};

/// Component data of the U(1) instanton moduli group: each ASD component is a
/// torus T^{b1}, each SD component is R x T^{b1}.
U1Components u1_moduli_descriptor(const ModuliDescriptorU1& d);

/// Numeric evaluation of the two cyclotomic sums
///   sum_k (1 + zeta^{kw})/(1 - zeta^k)  and  sum_k (1 + zeta^k)/(1 - zeta^{kw}),
/// rationalized with denominator bound 4m^2.  Equal to w - 1 and w' - 1.
std::pair<Rational, Rational> cyclotomic_pair_sums(const CyclicSingularity& s);

} // namespace modulidim
