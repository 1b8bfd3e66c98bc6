#include "modulidim/geometry.hpp"

#include "modulidim/dual.hpp"
#include "modulidim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <vector>

namespace modulidim {

namespace {

template <class T>
T delta_generic(const T& rho, double a) {
  T r2 = rho * rho;
  T r4 = r2 * r2;
  return T(1.0) + T(4.0 * (a - 1.0) / 27.0) / r4 - r2;
}

template <class T>
struct StructureCoeffs {
  // de^i = A_i e^4 ^ e^i - B_i e^j ^ e^k (cyclic), de^4 = 0, e^4 = g drho.
  T A[3];
  T B[3];
  T g;
};

template <class T>
StructureCoeffs<T> structure_coeffs(const T& rho, double a, int mc) {
  auto f12 = [](auto r) { return r * decltype(r)(0.5); };
  auto f3 = [a](auto r) { return r * sqrt(delta_generic(r, a)) * decltype(r)(0.5); };

  T f[3] = {f12(rho), f12(rho), f3(rho)};
  T fp[3] = {derivative(f12, rho), derivative(f12, rho), derivative(f3, rho)};
  T g = T(1.0) / sqrt(delta_generic(rho, a));

  StructureCoeffs<T> out;
  out.g = g;
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int k = (i + 2) % 3;
    out.A[i] = fp[i] / (g * f[i]);
    out.B[i] = T(static_cast<double>(mc)) * f[i] / (f[j] * f[k]);
  }
  return out;
}

template <class T>
void fill_structure_tensor(const StructureCoeffs<T>& sc, T K[4][4][4]) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) K[a][b][c] = T(0.0);
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    int k = (i + 2) % 3;
    K[i][3][i] = sc.A[i];
    K[i][i][3] = -sc.A[i];
    K[i][j][k] = -sc.B[i];
    K[i][k][j] = sc.B[i];
  }
}

template <class T>
void fill_connection(const T K[4][4][4], T G[4][4][4]) {
  // Gamma_{abc} = (K_{abc} + K_{bca} - K_{cab})/2: the unique antisymmetric
  // solution of the torsion-free structure equation in an orthonormal frame.
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        G[a][b][c] = (K[a][b][c] + K[b][c][a] - K[c][a][b]) * T(0.5);
}

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

struct Operator6 {
  double m[6][6];
};

struct AssembledCurvature {
  double R[4][4][4][4];
  Operator6 op;
  double delta;
};

AssembledCurvature assemble(double a, double rho, int mc, int sign) {
  using D = Dual<double>;
  const D rho_d(rho, 1.0);

  auto sc = structure_coeffs<D>(rho_d, a, mc);
  D Kd[4][4][4];
  fill_structure_tensor(sc, Kd);
  D Gd[4][4][4];
  fill_connection(Kd, Gd);

  double K[4][4][4], G[4][4][4], Gp[4][4][4];
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y)
      for (int z = 0; z < 4; ++z) {
        K[x][y][z] = Kd[x][y][z].re;
        G[x][y][z] = Gd[x][y][z].re;
        Gp[x][y][z] = Gd[x][y][z].du;
      }
  const double inv_g = 1.0 / sc.g.re;

  AssembledCurvature out;
  std::memset(out.R, 0, sizeof(out.R));
  auto acc = [&out](int x, int y, int c, int d, double v) {
    out.R[x][y][c][d] += v;
    out.R[x][y][d][c] -= v;
  };

  for (int x = 0; x < 4; ++x) {
    for (int y = 0; y < 4; ++y) {
      for (int c = 0; c < 4; ++c) {
        if (G[x][y][c] == 0.0 && Gp[x][y][c] == 0.0) continue;
        // d(Gamma e^c) = Gamma' drho ^ e^c + Gamma de^c, drho = e^4/g
        if (c != 3) acc(x, y, 3, c, Gp[x][y][c] * inv_g);
        for (int d = 0; d < 4; ++d)
          for (int e = d + 1; e < 4; ++e)
            if (K[c][d][e] != 0.0) acc(x, y, d, e, G[x][y][c] * K[c][d][e]);
      }
      for (int e = 0; e < 4; ++e)
        for (int c = 0; c < 4; ++c)
          for (int d = c + 1; d < 4; ++d) {
            double v = G[x][e][c] * G[e][y][d] - G[x][e][d] * G[e][y][c];
            if (v != 0.0) acc(x, y, c, d, v);
          }
    }
  }

  if (sign < 0) {
    for (int x = 0; x < 4; ++x)
      for (int y = 0; y < 4; ++y)
        for (int c = 0; c < 4; ++c)
          for (int d = 0; d < 4; ++d) out.R[x][y][c][d] = -out.R[x][y][c][d];
  }

  // R(e^{ij}) = sum_{k<l} R_{ijkl} e^{kl}; columns indexed by (ij).
  for (int col = 0; col < 6; ++col)
    for (int row = 0; row < 6; ++row)
      out.op.m[row][col] =
          out.R[kPairs[col][0]][kPairs[col][1]][kPairs[row][0]][kPairs[row][1]];
  out.delta = delta_generic(rho, a);
  return out;
}

constexpr double kAsdBasis[3][6] = {
    {1, 0, 0, 0, 0, -1},  // e12 - e34
    {0, 1, 0, 0, 1, 0},   // e13 + e24
    {0, 0, 1, -1, 0, 0},  // e14 - e23
};
constexpr double kSdBasis[3][6] = {
    {1, 0, 0, 0, 0, 1},   // e12 + e34
    {0, 1, 0, 0, -1, 0},  // e13 - e24
    {0, 0, 1, 1, 0, 0},   // e14 + e23
};

void apply(const Operator6& op, const double v[6], double out[6]) {
  for (int r = 0; r < 6; ++r) {
    out[r] = 0;
    for (int c = 0; c < 6; ++c) out[r] += op.m[r][c] * v[c];
  }
}

double dot6(const double a[6], const double b[6]) {
  double s = 0;
  for (int i = 0; i < 6; ++i) s += a[i] * b[i];
  return s;
}

std::array<double, 3> closed_form_eigenvalues(double delta, double rho) {
  const double r2 = rho * rho;
  return {(8 - 8 * delta) / r2 - 6, (4 * delta - 4) / r2 + 6, (4 * delta - 4) / r2 + 6};
}

double eigenform_residual(const AssembledCurvature& ac, double rho) {
  auto lam = closed_form_eigenvalues(ac.delta, rho);
  double worst = 0;
  for (int i = 0; i < 3; ++i) {
    double image[6];
    apply(ac.op, kAsdBasis[i], image);
    for (int c = 0; c < 6; ++c) {
      worst = std::max(worst, std::abs(image[c] - lam[i] * kAsdBasis[i][c]));
    }
  }
  return worst;
}

constexpr double kConventionTolerance = 1e-6;

AssembledCurvature assemble_validated(double a, double rho, int* mc_out, int* sign_out,
                                      double* residual_out) {
  double best = -1;
  for (int mc : {1, 2}) {
    for (int sign : {1, -1}) {
      AssembledCurvature ac = assemble(a, rho, mc, sign);
      double res = eigenform_residual(ac, rho);
      if (res < kConventionTolerance) {
        *mc_out = mc;
        *sign_out = sign;
        *residual_out = res;
        return ac;
      }
      best = best < 0 ? res : std::min(best, res);
    }
  }
  throw ComputationError(
      "transverse_curvature: no frame convention reproduces the closed-form eigenvalues "
      "(best residual " +
      std::to_string(best) + ")");
}

} // namespace

void MetricParams::validate() const {
  if (!(a > 0.0 && a < 1.0)) throw ValidationError("MetricParams: a must lie in (0, 1)");
  if (!(rho > 0.0)) throw ValidationError("MetricParams: rho must be positive");
  if (!(delta_fn(a, rho) > 0.0)) {
    throw DegenerateMetricError("MetricParams: Delta(a, rho) <= 0, the coframe degenerates");
  }
}

double delta_fn(double a, double rho) {
  if (!(rho > 0.0)) throw ValidationError("delta_fn: rho must be positive");
  return delta_generic(rho, a);
}

CurvatureReport transverse_curvature(const MetricParams& m) {
  m.validate();
  CurvatureReport rep;
  AssembledCurvature ac = assemble_validated(m.a, m.rho, &rep.maurer_cartan_factor,
                                             &rep.curvature_sign, &rep.convention_residual);
  rep.delta = ac.delta;

  for (int i = 0; i < 3; ++i) {
    double image[6];
    apply(ac.op, kAsdBasis[i], image);
    rep.asd_eigenvalues[i] = dot6(image, kAsdBasis[i]) / dot6(kAsdBasis[i], kAsdBasis[i]);
  }
  rep.s_t = 4 * (rep.asd_eigenvalues[0] + rep.asd_eigenvalues[1] + rep.asd_eigenvalues[2]);

  double bt = 0;
  for (int i = 0; i < 3; ++i) {
    double image[6];
    apply(ac.op, kAsdBasis[i], image);
    for (int j = 0; j < 3; ++j) {
      double entry = dot6(kSdBasis[j], image) / 2.0;  // both basis vectors have norm sqrt(2)
      bt += entry * entry;
    }
  }
  rep.bt_norm = std::sqrt(bt);

  double ric[4][4];
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      ric[b][d] = 0;
      for (int x = 0; x < 4; ++x) ric[b][d] += ac.R[x][b][x][d];
    }
  double worst = 0;
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double want = b == d ? rep.s_t / 4.0 : 0.0;
      worst = std::max(worst, std::abs(ric[b][d] - want));
    }
  rep.einstein_residual = worst;

  double asym = 0;
  for (int r = 0; r < 6; ++r)
    for (int c = 0; c < 6; ++c) asym = std::max(asym, std::abs(ac.op.m[r][c] - ac.op.m[c][r]));
  rep.max_asymmetry = asym;
  return rep;
}

EigenformCheck verify_eigenforms(const MetricParams& m, double tol) {
  if (!(tol > 0)) throw ValidationError("verify_eigenforms: tol must be positive");
  m.validate();
  int mc = 0, sign = 0;
  double res = 0;
  AssembledCurvature ac = assemble_validated(m.a, m.rho, &mc, &sign, &res);
  EigenformCheck out;
  out.max_residual = eigenform_residual(ac, m.rho);
  out.pass = out.max_residual < tol;
  return out;
}

std::pair<double, double> delta_positive_range(double a) {
  if (!(a > 0.0 && a < 1.0)) throw ValidationError("delta_positive_range: a must lie in (0, 1)");
  const int n = 8192;
  const double lo = 1e-6, hi = 1.0;
  int first = -1, last = -1;
  for (int i = 0; i <= n; ++i) {
    double rho = lo + (hi - lo) * i / n;
    if (delta_fn(a, rho) > 0) {
      if (first < 0) first = i;
      last = i;
    }
  }
  if (first < 0) {
    throw DegenerateMetricError("delta_positive_range: no rho with Delta > 0 found");
  }
  auto bisect = [&](double neg, double pos) {
    // Delta(neg) <= 0 < Delta(pos); returns the crossing to 1e-12.
    for (int it = 0; it < 200 && std::abs(pos - neg) > 1e-12; ++it) {
      double mid = 0.5 * (neg + pos);
      (delta_fn(a, mid) > 0 ? pos : neg) = mid;
    }
    return 0.5 * (neg + pos);
  };
  double step = (hi - lo) / n;
  double left = first == 0 ? lo : bisect(lo + step * (first - 1), lo + step * first);
  double right = last == n ? hi : bisect(lo + step * (last + 1), lo + step * last);
  return {left, right};
}

IrreducibilityWitness irreducibility_witness(double a) {
  auto [left, right] = delta_positive_range(a);
  const int n = 2000;
  const double margin = (right - left) * 1e-3;
  IrreducibilityWitness best;
  double best_mag = -1;
  for (int i = 0; i <= n; ++i) {
    double rho = (left + margin) + (right - left - 2 * margin) * i / n;
    double d = delta_fn(a, rho);
    if (d <= 0) continue;
    double v = (4 * d - 4) / (rho * rho) + 6;
    if (std::abs(v) > best_mag) {
      best_mag = std::abs(v);
      best = {rho, v};
    }
  }
  if (best_mag < 1e-3) {
    throw NoWitnessError("irreducibility_witness: repeated eigenvalue vanishes on the grid");
  }
  return best;
}

} // namespace modulidim
