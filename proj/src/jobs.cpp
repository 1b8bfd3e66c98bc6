#include "modulidim/jobs.hpp"

#include "modulidim/dedekind.hpp"
#include "modulidim/errors.hpp"
#include "modulidim/geometry.hpp"
#include "modulidim/localization.hpp"
#include "modulidim/numbers.hpp"
#include "modulidim/orbifold.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace modulidim {

using nlohmann::json;

namespace {

long long get_integer(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw ValidationError(std::string("payload field '") + key + "' must be an integer");
  }
  return j[key].get<long long>();
}

double get_real(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number()) {
    throw ValidationError(std::string("payload field '") + key + "' must be a number");
  }
  return j[key].get<double>();
}

Rational get_rational(const json& j, const char* key) {
  if (!j.contains(key)) {
    throw ValidationError(std::string("payload field '") + key + "' is required");
  }
  const json& v = j[key];
  if (v.is_string()) return rational_from_string(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long long>());
  throw ValidationError(std::string("payload field '") + key +
                        "' must be a rational string \"p/q\" or an integer");
}

std::vector<long long> get_integer_list(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array()) {
    throw ValidationError(std::string("payload field '") + key + "' must be an array");
  }
  std::vector<long long> out;
  for (const json& v : j[key]) {
    if (!v.is_number_integer()) {
      throw ValidationError(std::string("payload field '") + key +
                            "' must contain integers only");
    }
    out.push_back(v.get<long long>());
  }
  return out;
}

std::vector<CyclicSingularity> parse_singularities(const json& payload) {
  std::vector<CyclicSingularity> sings;
  if (!payload.contains("singularities")) return sings;
  if (!payload["singularities"].is_array()) {
    throw ValidationError("payload field 'singularities' must be an array");
  }
  for (const json& sj : payload["singularities"]) {
    CyclicSingularity s;
    s.m = get_integer(sj, "m");
    s.w = get_integer(sj, "w");
    if (sj.contains("weights")) s.adjoint_weights = get_integer_list(sj, "weights");
    s.validate();
    sings.push_back(std::move(s));
  }
  return sings;
}

OrbitContribution parse_orbit(const json& oj) {
  OrbitContribution c;
  if (!oj.contains("numerator") || !oj["numerator"].is_array()) {
    throw ValidationError("orbit 'numerator' must be an array of [coeff, [s, t]] pairs");
  }
  for (const json& term : oj["numerator"]) {
    if (!term.is_array() || term.size() != 2 || !term[1].is_array() || term[1].size() != 2) {
      throw ValidationError("orbit numerator term must be [coeff, [s, t]]");
    }
    Rational coeff = term[0].is_string() ? rational_from_string(term[0].get<std::string>())
                                         : Rational(term[0].get<long long>());
    c.numerator.add_term(
        Exponents{term[1][0].get<std::int64_t>(), term[1][1].get<std::int64_t>(), 0}, coeff);
  }
  if (!oj.contains("factors") || !oj["factors"].is_array()) {
    throw ValidationError("orbit 'factors' must be an array");
  }
  for (const json& fj : oj["factors"]) {
    if (!fj.contains("monomial") || !fj["monomial"].is_array() || fj["monomial"].size() != 2 ||
        !fj.contains("polarization")) {
      throw ValidationError("orbit factor must have 'monomial' [s, t] and 'polarization'");
    }
    std::string pol = fj["polarization"].get<std::string>();
    if (pol != "+" && pol != "-") {
      throw ValidationError("orbit factor polarization must be \"+\" or \"-\"");
    }
    c.factors.push_back({{fj["monomial"][0].get<std::int64_t>(),
                          fj["monomial"][1].get<std::int64_t>()},
                         pol == "+" ? Polarization::plus : Polarization::minus});
  }
  if (!oj.contains("delta") || !oj["delta"].is_array() || oj["delta"].size() != 2) {
    throw ValidationError("orbit 'delta' must be [s, t]");
  }
  c.delta = {oj["delta"][0].get<std::int64_t>(), oj["delta"][1].get<std::int64_t>()};
  c.validate();
  return c;
}

json run_dedekind(const json& payload, const JobOptions& opts) {
  long long w = get_integer(payload, "w");
  long long m = get_integer(payload, "m");
  json out;
  out["value"] = rational_to_fraction_string(dedekind_sum(w, m));
  if (opts.with_formula) {
    out["formula"] = "Dedekind sum s(w;m) by the reciprocity recursion";
  }
  return out;
}

json run_orbifold_index(json payload, const JobOptions& opts) {
  std::vector<CyclicSingularity> sings = parse_singularities(payload);

  bool have_general = false;
  bool have_asd = false;
  Rational general_value, asd_value;
  std::vector<std::string> warnings;

  std::optional<Rational> tau, chi;
  long long b1 = 0, bplus = 0;
  bool have_betti = false;
  if (payload.contains("topology")) {
    const json& top = payload["topology"];
    if (top.contains("tauB")) tau = get_rational(top, "tauB");
    if (top.contains("chiB")) chi = get_rational(top, "chiB");
    if (top.contains("b1B") || top.contains("bplusB")) {
      b1 = get_integer(top, "b1B");
      bplus = get_integer(top, "bplusB");
      have_betti = true;
    }
  }

  if (payload.contains("characteristic")) {
    const json& ch = payload["characteristic"];
    SignatureBookkeeping bk =
        signature_bookkeeping(get_rational(ch, "p1B_H"), get_rational(ch, "eB_H"), sings);
    if ((tau && *tau != bk.tauB) || (chi && *chi != bk.chiB)) {
      throw ValidationError(
          "supplied tauB/chiB disagree with the signature/Gauss-Bonnet bookkeeping");
    }
    tau = bk.tauB;
    chi = bk.chiB;
    if (!payload.contains("bundle")) {
      json bundle;
      bundle["dimG"] = 3;
      bundle["p1B"] = rational_to_string(bk.p1B_asd);
      payload["bundle"] = bundle;
    }
  }

  if (tau && chi && have_betti) {
    BasicTopology top{b1, bplus, *tau, *chi, std::nullopt, std::nullopt};
    if (!top.consistent()) {
      throw ValidationError(
          "inconsistent topology: 1 - b1B + b+B != (chiB + tauB)/2");
    }
  }

  if (payload.contains("bundle")) {
    const json& bundle = payload["bundle"];
    int dim_g = static_cast<int>(get_integer(bundle, "dimG"));
    Rational p1b = get_rational(bundle, "p1B");
    if (!have_betti) {
      throw ValidationError("bundle route needs topology.b1B and topology.bplusB");
    }
    IndexResult r = index_general(p1b, dim_g, b1, bplus, sings);
    general_value = r.value;
    have_general = true;
    warnings.insert(warnings.end(), r.warnings.begin(), r.warnings.end());
  }
  if (tau && chi) {
    BasicTopology top{b1, bplus, *tau, *chi, std::nullopt, std::nullopt};
    asd_value = index_asd_bundle(top, sings);
    have_asd = true;
  }

  if (!have_general && !have_asd) {
    throw ValidationError(
        "orbifold-index needs either bundle.{dimG,p1B} or topology.{tauB,chiB}");
  }
  if (have_general && have_asd && general_value != asd_value) {
    warnings.push_back("the bundle and signature routes disagree: inputs are inconsistent");
  }
  Rational value = have_asd ? asd_value : general_value;

  json out;
  out["index"] = rational_to_string(value);
  if (is_integer(value)) {
    out["dimension"] = to_long_checked(rational_to_integer(-value));
  }
  out["warnings"] = warnings;
  if (opts.with_formula) {
    out["formula"] =
        "orbifold index over isolated cyclic points: characteristic term plus "
        "per-singularity fixed-point contributions";
  }
  return out;
}

json run_cy_dim(const json& payload, const JobOptions& opts) {
  std::vector<long long> orders = get_integer_list(payload, "orders");
  CyK3Dimension d = cy_k3_dimension(orders);
  FlatnessObstruction f = flatness_obstruction(orders);
  json out;
  out["negIndex"] = d.neg_index;
  out["h11"] = rational_to_string(d.h11);
  json warnings = json::array();
  if (f.is_flat) {
    warnings.push_back(
        "flatness obstruction equals 24: the orbifold is flat and no moduli claim holds");
  }
  out["warnings"] = warnings;
  if (opts.with_formula) {
    out["formula"] = "transverse Calabi-Yau K3 dimension 90 - 2 sum(2m-1) with "
                     "h11 = 20 - sum(m-1)";
  }
  return out;
}

json run_flatness(const json& payload, const JobOptions& opts) {
  FlatnessObstruction f = flatness_obstruction(get_integer_list(payload, "orders"));
  json out;
  out["value"] = rational_to_string(f.value);
  out["isFlat"] = f.is_flat;
  if (opts.with_formula) {
    out["formula"] = "flatness obstruction sum (m^2 - 1)/m compared with 24";
  }
  return out;
}

std::vector<OrbitContribution> orbits_from_payload(const json& payload) {
  if (payload.contains("orbits")) {
    if (!payload["orbits"].is_array()) {
      throw ValidationError("payload field 'orbits' must be an array");
    }
    std::vector<OrbitContribution> contribs;
    for (const json& oj : payload["orbits"]) contribs.push_back(parse_orbit(oj));
    return contribs;
  }
  YpqParams y{get_integer(payload, "p"), get_integer(payload, "q")};
  return ypq_orbit_data(y);
}

json run_ypq_index(const json& payload, const JobOptions& opts) {
  std::vector<OrbitContribution> contribs = orbits_from_payload(payload);
  LaurentPoly index = invariant_index(contribs);
  Rational dim = -eval_at_one(index);

  json out;
  out["invariantIndex"] = index.pretty();
  json warnings = json::array();
  if (!payload.contains("orbits")) {
    YpqParams y{get_integer(payload, "p"), get_integer(payload, "q")};
    DimensionResult d = moduli_dimension(y);
    for (const std::string& w : d.warnings) warnings.push_back(w);
  }
  if (is_integer(dim)) {
    out["dimension"] = to_long_checked(rational_to_integer(dim));
  }
  out["warnings"] = warnings;
  if (opts.with_formula) {
    out["formula"] = "equivariant localization over closed Reeb orbits; invariant part of "
                     "the polarized character sum, evaluated at t = 1";
  }
  return out;
}

json run_ypq_quasireg(const json& payload, const JobOptions& opts) {
  YpqParams y{get_integer(payload, "p"), get_integer(payload, "q")};
  Regularity r = quasi_regularity(y);
  Int disc = Int(4) * y.p * y.p - Int(3) * y.q * y.q;
  json out;
  out["quasiRegular"] = r == Regularity::quasi_regular;
  out["discriminant"] = disc.str();
  Int root;
  if (is_perfect_square(disc, &root)) out["root"] = root.str();
  if (opts.with_formula) {
    out["formula"] = "quasi-regularity test: 4p^2 - 3q^2 a perfect square";
  }
  return out;
}

json run_ypq_curvature(const json& payload, const JobOptions& opts) {
  MetricParams mp{get_real(payload, "a"), get_real(payload, "rho")};
  CurvatureReport rep = transverse_curvature(mp);
  json out;
  out["a"] = mp.a;
  out["rho"] = mp.rho;
  out["delta"] = rep.delta;
  out["asdEigenvalues"] = rep.asd_eigenvalues;
  out["bTNorm"] = rep.bt_norm;
  out["sT"] = rep.s_t;
  out["einsteinResidual"] = rep.einstein_residual;
  out["maurerCartanFactor"] = rep.maurer_cartan_factor;
  out["curvatureSign"] = rep.curvature_sign;
  if (payload.contains("tol")) {
    double tol = get_real(payload, "tol");
    EigenformCheck chk = verify_eigenforms(mp, tol);
    json check;
    check["maxResidual"] = chk.max_residual;
    check["pass"] = chk.pass;
    out["eigenformCheck"] = check;
  }
  if (opts.with_formula) {
    out["formula"] = "transverse curvature operator from Cartan structure equations; "
                     "eigenvalues (8-8D)/rho^2 - 6 and (4D-4)/rho^2 + 6";
  }
  return out;
}

json run_u1_moduli(const json& payload, const JobOptions& opts) {
  ModuliDescriptorU1 d;
  if (!payload.contains("duality") || !payload["duality"].is_string()) {
    throw ValidationError("payload field 'duality' must be a string");
  }
  std::string duality = payload["duality"].get<std::string>();
  if (duality == "SD") {
    d.duality = Duality::SD;
  } else if (duality == "ASD") {
    d.duality = Duality::ASD;
  } else {
    throw ValidationError("duality must be \"SD\" or \"ASD\"");
  }
  d.b1 = get_integer(payload, "b1");
  d.lattice_rank = get_integer(payload, "latticeRank");
  if (payload.contains("torsionOrders")) {
    d.torsion_orders = get_integer_list(payload, "torsionOrders");
  }
  U1Components c = u1_moduli_descriptor(d);
  json out;
  out["componentGroupRank"] = c.component_group_rank;
  out["componentTorsion"] = c.component_torsion;
  out["componentTopology"] = c.component_topology;
  if (opts.with_formula) {
    out["formula"] = "U(1) instanton moduli: lattice of transverse classes times the "
                     "Jacobian torus; SD components gain a real line";
  }
  return out;
}

} // namespace

JobDescriptor parse_job(const json& j) {
  if (!j.is_object() || !j.contains("command") || !j["command"].is_string()) {
    throw ValidationError("job must be an object with a string 'command'");
  }
  JobDescriptor job;
  job.command = j["command"].get<std::string>();
  job.payload = j.contains("payload") ? j["payload"] : json::object();
  if (!job.payload.is_object()) {
    throw ValidationError("job 'payload' must be an object");
  }
  return job;
}

JobOutcome run_job(const JobDescriptor& job, const JobOptions& opts) {
  JobOutcome out;
  try {
    if (job.command == "dedekind") {
      out.result = run_dedekind(job.payload, opts);
    } else if (job.command == "orbifold-index") {
      out.result = run_orbifold_index(job.payload, opts);
    } else if (job.command == "cy-dim") {
      out.result = run_cy_dim(job.payload, opts);
    } else if (job.command == "flatness") {
      out.result = run_flatness(job.payload, opts);
    } else if (job.command == "ypq-index") {
      out.result = run_ypq_index(job.payload, opts);
    } else if (job.command == "ypq-quasireg") {
      out.result = run_ypq_quasireg(job.payload, opts);
    } else if (job.command == "ypq-curvature") {
      out.result = run_ypq_curvature(job.payload, opts);
    } else if (job.command == "u1-moduli") {
      out.result = run_u1_moduli(job.payload, opts);
    } else {
      throw ValidationError("unknown command '" + job.command + "'");
    }
  } catch (const ValidationError& e) {
    out.exit_code = kExitValidation;
    out.result = json{{"error", {{"type", "validation"}, {"message", e.what()}}}};
  } catch (const ComputationError& e) {
    out.exit_code = kExitComputation;
    out.result = json{{"error", {{"type", "computation"}, {"message", e.what()}}}};
  } catch (const std::exception& e) {
    out.exit_code = kExitComputation;
    out.result = json{{"error", {{"type", "internal"}, {"message", e.what()}}}};
  }
  return out;
}

std::vector<JobOutcome> run_batch(const std::vector<JobDescriptor>& jobs, int parallelism,
                                  const JobOptions& opts) {
  if (parallelism < 1) throw ValidationError("run_batch: parallelism must be >= 1");
  std::vector<JobOutcome> outcomes(jobs.size());
  const std::int64_t n = static_cast<std::int64_t>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(parallelism) if (parallelism > 1)
  for (std::int64_t i = 0; i < n; ++i) {
    outcomes[i] = run_job(jobs[i], opts);
  }
  return outcomes;
}

std::string batch_output(const std::vector<JobOutcome>& outcomes) {
  std::ostringstream os;
  for (const JobOutcome& o : outcomes) {
    os << o.result.dump() << "\n";
  }
  return os.str();
}

} // namespace modulidim
