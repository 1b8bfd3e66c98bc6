#include "modulidim/orbifold.hpp"

#include "modulidim/dedekind.hpp"
#include "modulidim/errors.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace modulidim {

void CyclicSingularity::validate() const {
  if (m < 2) throw ValidationError("CyclicSingularity: m must be >= 2");
  if (w <= 0 || w >= m) throw ValidationError("CyclicSingularity: w must satisfy 0 < w < m");
  if (std::gcd(w, m) != 1) throw NotCoprimeError("CyclicSingularity: gcd(w, m) != 1");
}

bool BasicTopology::consistent() const {
  return Rational(1 - b1B + bplusB) == (chiB + tauB) / 2;
}

long long w_prime(const CyclicSingularity& s) {
  s.validate();
  return mod_inverse(s.w, s.m);
}

namespace {

PrecisionReal sin_pi_frac_squared(long long num, long long den) {
  long long r = mod_floor(num, den);
  if (r == 0) return PrecisionReal(0);
  PrecisionReal arg = pr_pi() * PrecisionReal(r) / PrecisionReal(den);
  PrecisionReal s;
  mpfr_sin(s.backend().data(), arg.backend().data(), MPFR_RNDN);
  return s * s;
}

bool has_asd_weight_shape(const std::vector<long long>& weights, long long w, long long m) {
  if (weights.size() != 3) return false;
  std::multiset<long long> got;
  for (long long u : weights) got.insert(mod_floor(u, m));
  std::multiset<long long> want{0, mod_floor(w - 1, m), mod_floor(1 - w, m)};
  return got == want;
}

} // namespace

Rational fixed_point_term_general(const CyclicSingularity& s, int dim_g) {
  s.validate();
  if (!s.adjoint_weights || static_cast<int>(s.adjoint_weights->size()) != dim_g) {
    throw MissingWeightsError(
        "fixed_point_term_general: adjoint weights of length dimG are required");
  }
  const long long m = s.m;
  const long long w = s.w;
  const std::vector<long long>& weights = *s.adjoint_weights;

  PrecisionReal total(0);
  for (long long k = 1; k < m; ++k) {
    PrecisionReal s2(0);
    for (long long u : weights) s2 += sin_pi_frac_squared(k * u, m);
    if (s2 == 0) continue;
    PrecisionReal cc = cot_pi_frac(k, m) * cot_pi_frac(k * w, m);
    total += s2 * (PrecisionReal(1) - cc);
  }
  total = -total / PrecisionReal(2 * m);

  Int bound = Int(4) * m * m;
  auto r = rationalize(total, bound);
  if (!r) {
    throw RationalizationFailedError(
        "fixed_point_term_general: no rational within denominator bound 4m^2");
  }
  if (has_asd_weight_shape(weights, w, m)) {
    Rational closed = fixed_point_term_adjoint_so3(s);
    if (*r != closed) {
      throw RationalizationFailedError(
          "fixed_point_term_general: rationalized value fails the closed-form certificate");
    }
  }
  return *r;
}

Rational fixed_point_term_adjoint_so3(const CyclicSingularity& s) {
  s.validate();
  return make_rational(Int(2 - s.w - w_prime(s)), Int(s.m));
}

IndexResult index_general(const Rational& p1b_gp, int dim_g, long long b1b, long long bplus_b,
                          const std::vector<CyclicSingularity>& sings) {
  if (dim_g < 1) throw ValidationError("index_general: dimG must be >= 1");
  if (b1b < 0 || bplus_b < 0) throw ValidationError("index_general: Betti numbers must be >= 0");
  IndexResult out;
  out.value = p1b_gp + make_rational(Int(dim_g), Int(2)) * Rational(1 - b1b + bplus_b);
  for (const CyclicSingularity& s : sings) {
    if (s.adjoint_weights) {
      out.value += fixed_point_term_general(s, dim_g);
    } else if (dim_g == 3) {
      out.value += fixed_point_term_adjoint_so3(s);
    } else {
      throw MissingWeightsError("index_general: singularity without adjoint weights");
    }
  }
  if (!is_integer(out.value)) {
    out.warnings.push_back("index is not an integer: inputs are mutually inconsistent");
  }
  return out;
}

Rational index_asd_bundle(const BasicTopology& top, const std::vector<CyclicSingularity>& sings) {
  Rational acc = make_rational(Int(5), Int(4)) * (Rational(3) * top.tauB - top.chiB);
  for (const CyclicSingularity& s : sings) {
    Rational summand = Rational(2) - make_rational(Int(s.w + w_prime(s)), Int(s.m)) +
                       Rational(12) * dedekind_sum(s.w, s.m);
    if (!is_integer(summand)) {
      throw InconsistentFormulasError(
          "index_asd_bundle: per-singularity summand is not an integer");
    }
    acc += summand;
  }
  return acc;
}

Rational duval_summand(long long m) {
  if (m < 2) throw ValidationError("duval_summand: m must be >= 2");
  return Rational(2) - make_rational(Int(2 * (m - 1)), Int(m)) +
         Rational(12) * dedekind_sum(m - 1, m);
}

CyK3Dimension cy_k3_dimension(const std::vector<long long>& orders) {
  long long sum_2m1 = 0;
  long long sum_m1 = 0;
  long long sum_m3 = 0;
  for (long long m : orders) {
    if (m < 2) throw ValidationError("cy_k3_dimension: each order must be >= 2");
    sum_2m1 += 2 * m - 1;
    sum_m1 += m - 1;
    sum_m3 += m - 3;
  }
  CyK3Dimension out;
  out.neg_index = 90 - 2 * sum_2m1;
  out.h11 = Rational(20 - sum_m1);
  if (out.h11 < 0) {
    throw NegativeH11Error("cy_k3_dimension: h^{1,1} < 0, input is geometrically impossible");
  }
  Rational cross = Rational(5) * out.h11 - Rational(10) + Rational(sum_m3);
  if (cross != Rational(out.neg_index)) {
    throw InconsistentFormulasError("cy_k3_dimension: dimension formulas disagree");
  }
  return out;
}

FlatnessObstruction flatness_obstruction(const std::vector<long long>& orders) {
  FlatnessObstruction out;
  out.value = Rational(0);
  for (long long m : orders) {
    if (m < 2) throw ValidationError("flatness_obstruction: each order must be >= 2");
    out.value += make_rational(Int(m) * m - 1, Int(m));
  }
  out.is_flat = out.value == 24;
  return out;
}

SignatureBookkeeping signature_bookkeeping(const Rational& p1b_h, const Rational& eb_h,
                                           const std::vector<CyclicSingularity>& sings) {
  SignatureBookkeeping out;
  out.tauB = p1b_h / 3;
  out.chiB = eb_h;
  for (const CyclicSingularity& s : sings) {
    out.tauB -= Rational(4) * dedekind_sum(s.w, s.m);
    out.chiB += Rational(1) - make_rational(Int(1), Int(s.m));
  }
  out.p1B_asd = p1b_h - 2 * eb_h;
  return out;
}

Rational basic_p1_su2(const Rational& lambda_over_2pi, const Rational& omega2_integral) {
  if (omega2_integral < 0) {
    throw ValidationError("basic_p1_su2: the volume pairing must be >= 0");
  }
  return lambda_over_2pi * lambda_over_2pi * omega2_integral;
}

void ModuliDescriptorU1::validate() const {
  if (b1 < 0 || lattice_rank < 0) {
    throw ValidationError("ModuliDescriptorU1: ranks must be nonnegative");
  }
  for (long long t : torsion_orders) {
    if (t < 1) throw ValidationError("ModuliDescriptorU1: torsion orders must be positive");
  }
}

U1Components u1_moduli_descriptor(const ModuliDescriptorU1& d) {
  d.validate();
  U1Components out;
  out.component_group_rank = d.lattice_rank;
  out.component_torsion = d.torsion_orders;
  std::string torus = "T^" + std::to_string(d.b1);
  out.component_topology = d.duality == Duality::ASD ? torus : "R x " + torus;
  return out;
}

std::pair<Rational, Rational> cyclotomic_pair_sums(const CyclicSingularity& s) {
  s.validate();
  const long long m = s.m;
  const long long w = s.w;
  PrecisionComplex s1, s2;
  const PrecisionComplex one(PrecisionReal(1), PrecisionReal(0));
  for (long long k = 1; k < m; ++k) {
    PrecisionComplex zk = unit_root(k, m);
    PrecisionComplex zkw = unit_root(k * w, m);
    s1 += (one + zkw) / (one + PrecisionComplex(-zk.re, -zk.im));
    s2 += (one + zk) / (one + PrecisionComplex(-zkw.re, -zkw.im));
  }
  const PrecisionReal tol = pr_pow2(-precision_bits() / 2);
  if (boost::multiprecision::abs(s1.im) > tol || boost::multiprecision::abs(s2.im) > tol) {
    throw RationalizationFailedError("cyclotomic_pair_sums: imaginary part did not cancel");
  }
  Int bound = Int(4) * m * m;
  auto r1 = rationalize(s1.re, bound);
  auto r2 = rationalize(s2.re, bound);
  if (!r1 || !r2) {
    throw RationalizationFailedError("cyclotomic_pair_sums: rationalization failed");
  }
  return {*r1, *r2};
}

} // namespace modulidim
