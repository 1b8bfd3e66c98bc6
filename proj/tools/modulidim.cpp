#include "modulidim/errors.hpp"
#include "modulidim/jobs.hpp"
#include "modulidim/precision.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using modulidim::JobDescriptor;
using modulidim::JobOptions;
using modulidim::JobOutcome;
using nlohmann::json;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw modulidim::ValidationError("cannot open file: " + path);
  }
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw modulidim::ValidationError(std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

int emit(const JobOutcome& outcome) {
  if (outcome.ok()) {
    std::cout << outcome.result.dump() << "\n";
  } else {
    std::cerr << outcome.result.dump() << "\n";
  }
  return outcome.exit_code;
}

int run_single(const std::string& command, const json& payload, const JobOptions& opts) {
  return emit(modulidim::run_job(JobDescriptor{command, payload}, opts));
}

int run_batch_file(const std::string& path, int jobs, const JobOptions& opts) {
  json j = load_json_file(path);
  if (!j.is_array()) {
    throw modulidim::ValidationError("batch file must contain a JSON array of jobs");
  }
  std::vector<JobDescriptor> descriptors;
  for (const json& job : j) descriptors.push_back(modulidim::parse_job(job));
  std::vector<JobOutcome> outcomes = modulidim::run_batch(descriptors, jobs, opts);
  std::cout << modulidim::batch_output(outcomes);
  for (const JobOutcome& o : outcomes) {
    if (!o.ok()) return o.exit_code;
  }
  return 0;
}

// Merges --config content under explicit flags: flags win.
json merged_payload(const std::string& config_path, json payload) {
  if (config_path.empty()) return payload;
  json base = load_json_file(config_path);
  if (!base.is_object()) {
    throw modulidim::ValidationError("config file must contain a JSON object");
  }
  base.update(payload);
  return base;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact moduli-space dimensions for contact instantons on K-contact "
               "5-manifolds"};
  app.require_subcommand(0, 1);

  JobOptions opts;
  app.add_flag("--formula", opts.with_formula,
               "attach a human-readable formula tag to every result");

  std::string batch_path;
  int jobs = 1;
  app.add_option("--batch", batch_path, "run a JSON array of jobs");
  app.add_option("--jobs", jobs, "batch parallelism")->check(CLI::PositiveNumber);

  std::string config_path;
  app.add_option("--config", config_path, "JSON object merged into the payload")
      ->check(CLI::ExistingFile);

  // dedekind <w> <m>
  long long ded_w = 0, ded_m = 0;
  CLI::App* ded = app.add_subcommand("dedekind", "exact Dedekind sum s(w; m)");
  ded->add_option("w", ded_w)->required();
  ded->add_option("m", ded_m)->required();

  // orbifold-index --config file.json
  CLI::App* orb = app.add_subcommand(
      "orbifold-index", "index over isolated cyclic orbifold points (payload via --config)");

  // cy-dim <orders...>
  std::vector<long long> cy_orders;
  CLI::App* cy = app.add_subcommand("cy-dim", "transverse Calabi-Yau K3 moduli dimension");
  cy->add_option("orders", cy_orders, "du Val orders m_j >= 2");

  // flatness <orders...>
  std::vector<long long> flat_orders;
  CLI::App* flat = app.add_subcommand("flatness", "flatness obstruction sum (m^2-1)/m vs 24");
  flat->add_option("orders", flat_orders, "du Val orders m_j >= 2");

  // ypq-index / ypq-quasireg / ypq-curvature, plus a "ypq" verb group
  long long p = 0, q = 0;
  CLI::App* ypq_index = app.add_subcommand("ypq-index", "invariant index and dimension");
  ypq_index->add_option("p", p);
  ypq_index->add_option("q", q);

  long long qp = 0, qq = 0;
  CLI::App* ypq_quasireg = app.add_subcommand("ypq-quasireg", "quasi-regularity test");
  ypq_quasireg->add_option("p", qp)->required();
  ypq_quasireg->add_option("q", qq)->required();

  double curv_a = 0, curv_rho = 0, curv_tol = 0;
  bool curv_tol_set = false;
  CLI::App* ypq_curv = app.add_subcommand("ypq-curvature", "transverse curvature report");
  ypq_curv->add_option("--a", curv_a, "metric parameter in (0,1)")->required();
  ypq_curv->add_option("--rho", curv_rho, "radial sample with Delta > 0")->required();
  CLI::Option* tol_opt = ypq_curv->add_option("--tol", curv_tol, "eigenform check tolerance");

  CLI::App* ypq = app.add_subcommand("ypq", "Y^{p,q} verbs");
  long long gp = 0, gq = 0;
  CLI::App* ypq_index2 = ypq->add_subcommand("index", "invariant index and dimension");
  ypq_index2->add_option("p", gp)->required();
  ypq_index2->add_option("q", gq)->required();
  long long gqp = 0, gqq = 0;
  CLI::App* ypq_quasireg2 = ypq->add_subcommand("quasireg", "quasi-regularity test");
  ypq_quasireg2->add_option("p", gqp)->required();
  ypq_quasireg2->add_option("q", gqq)->required();
  double ga = 0, grho = 0, gtol = 0;
  CLI::App* ypq_curv2 = ypq->add_subcommand("curvature", "transverse curvature report");
  ypq_curv2->add_option("--a", ga)->required();
  ypq_curv2->add_option("--rho", grho)->required();
  CLI::Option* gtol_opt = ypq_curv2->add_option("--tol", gtol);

  // u1-moduli
  std::string u1_duality;
  long long u1_b1 = 0, u1_rank = 0;
  std::vector<long long> u1_torsion;
  CLI::App* u1 = app.add_subcommand("u1-moduli", "U(1) instanton moduli components");
  u1->add_option("--duality", u1_duality, "SD or ASD");
  u1->add_option("--b1", u1_b1, "first Betti number");
  u1->add_option("--rank", u1_rank, "lattice rank");
  u1->add_option("--torsion", u1_torsion, "torsion orders");

  for (CLI::App* sub : app.get_subcommands({})) {
    sub->fallthrough();
    for (CLI::App* nested : sub->get_subcommands({})) nested->fallthrough();
  }

  CLI11_PARSE(app, argc, argv);

  try {
    modulidim::precision_bits();  // apply MODULIDIM_PRECISION before any work

    if (!batch_path.empty()) {
      return run_batch_file(batch_path, jobs, opts);
    }

    if (ded->parsed()) {
      return run_single("dedekind", merged_payload(config_path, {{"w", ded_w}, {"m", ded_m}}),
                        opts);
    }
    if (orb->parsed()) {
      return run_single("orbifold-index", merged_payload(config_path, json::object()), opts);
    }
    if (cy->parsed()) {
      json payload = json::object();
      if (!cy_orders.empty()) payload["orders"] = cy_orders;
      return run_single("cy-dim", merged_payload(config_path, payload), opts);
    }
    if (flat->parsed()) {
      json payload = json::object();
      if (!flat_orders.empty()) payload["orders"] = flat_orders;
      return run_single("flatness", merged_payload(config_path, payload), opts);
    }
    if (ypq_index->parsed()) {
      json payload = json::object();
      if (ypq_index->count("p") && ypq_index->count("q")) {
        payload["p"] = p;
        payload["q"] = q;
      }
      return run_single("ypq-index", merged_payload(config_path, payload), opts);
    }
    if (ypq_quasireg->parsed()) {
      return run_single("ypq-quasireg", merged_payload(config_path, {{"p", qp}, {"q", qq}}),
                        opts);
    }
    if (ypq_curv->parsed()) {
      json payload = {{"a", curv_a}, {"rho", curv_rho}};
      curv_tol_set = tol_opt->count() > 0;
      if (curv_tol_set) payload["tol"] = curv_tol;
      return run_single("ypq-curvature", merged_payload(config_path, payload), opts);
    }
    if (ypq->parsed()) {
      if (ypq_index2->parsed()) {
        return run_single("ypq-index", {{"p", gp}, {"q", gq}}, opts);
      }
      if (ypq_quasireg2->parsed()) {
        return run_single("ypq-quasireg", {{"p", gqp}, {"q", gqq}}, opts);
      }
      if (ypq_curv2->parsed()) {
        json payload = {{"a", ga}, {"rho", grho}};
        if (gtol_opt->count() > 0) payload["tol"] = gtol;
        return run_single("ypq-curvature", payload, opts);
      }
      std::cerr << app.help() << "\n";
      return modulidim::kExitValidation;
    }
    if (u1->parsed()) {
      json payload = json::object();
      if (u1->count("--duality")) payload["duality"] = u1_duality;
      if (u1->count("--b1")) payload["b1"] = u1_b1;
      if (u1->count("--rank")) payload["latticeRank"] = u1_rank;
      if (u1->count("--torsion")) payload["torsionOrders"] = u1_torsion;
      return run_single("u1-moduli", merged_payload(config_path, payload), opts);
    }

    std::cerr << app.help() << "\n";
    return modulidim::kExitValidation;
  } catch (const modulidim::ValidationError& e) {
    std::cerr << nlohmann::json{{"error", {{"type", "validation"}, {"message", e.what()}}}}.dump()
              << "\n";
    return modulidim::kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json{{"error", {{"type", "internal"}, {"message", e.what()}}}}.dump()
              << "\n";
    return modulidim::kExitComputation;
  }
}
