#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modulidim/jobs.hpp"
#include "modulidim/numbers.hpp"

#include <json.hpp>

using namespace modulidim;
using nlohmann::json;

TEST_CASE("cy-dim job") {
  JobOutcome out = run_job({"cy-dim", {{"orders", {2, 3, 7}}}});
  REQUIRE(out.ok());
  CHECK(out.result["negIndex"] == 48);
  CHECK(out.result["h11"] == "11");
  CHECK(out.result["warnings"].empty());

  // sixteen A1 points are flat: the dimension numbers come with a warning
  JobOutcome flat = run_job({"cy-dim", {{"orders", std::vector<int>(16, 2)}}});
  REQUIRE(flat.ok());
  CHECK(flat.result["negIndex"] == -6);
  CHECK(flat.result["h11"] == "4");
  CHECK(!flat.result["warnings"].empty());
}

TEST_CASE("dedekind job serializes the exact fraction") {
  JobOutcome out = run_job({"dedekind", {{"w", 1}, {"m", 1}}});
  REQUIRE(out.ok());
  CHECK(out.result["value"] == "0/1");

  JobOutcome s57 = run_job({"dedekind", {{"w", 5}, {"m", 7}}});
  CHECK(s57.result["value"] == "-1/14");

  JobOutcome bad = run_job({"dedekind", {{"w", 2}, {"m", 4}}});
  CHECK(!bad.ok());
  CHECK(bad.exit_code == kExitValidation);
  CHECK(bad.result.contains("error"));
}

TEST_CASE("ypq-index job") {
  JobOutcome out = run_job({"ypq-index", {{"p", 2}, {"q", 1}}});
  REQUIRE(out.ok());
  CHECK(out.result["invariantIndex"] == "-(t^-1+1+t)");
  CHECK(out.result["dimension"] == 3);
  CHECK(out.result["warnings"].empty());

  JobOutcome quasireg = run_job({"ypq-index", {{"p", 7}, {"q", 3}}});
  REQUIRE(quasireg.ok());
  CHECK(!quasireg.result["warnings"].empty());

  // generic orbit table: the toy contribution extracts to the constant 1
  json orbit = json::parse(R"({
    "numerator": [["1", [0, 0]]],
    "factors": [{"monomial": [-1, 0], "polarization": "+"}],
    "delta": [0, 0]
  })");
  JobOutcome toy = run_job({"ypq-index", {{"orbits", json::array({orbit})}}});
  REQUIRE(toy.ok());
  CHECK(toy.result["invariantIndex"] == "1");
  CHECK(toy.result["dimension"] == -1);
}

TEST_CASE("ypq-quasireg job") {
  JobOutcome qr = run_job({"ypq-quasireg", {{"p", 7}, {"q", 3}}});
  REQUIRE(qr.ok());
  CHECK(qr.result["quasiRegular"] == true);
  CHECK(qr.result["discriminant"] == "169");
  CHECK(qr.result["root"] == "13");

  JobOutcome irr = run_job({"ypq-quasireg", {{"p", 2}, {"q", 1}}});
  CHECK(irr.result["quasiRegular"] == false);
  CHECK(irr.result["discriminant"] == "13");
  CHECK(!irr.result.contains("root"));
}

TEST_CASE("orbifold-index job, both routes") {
  json payload = {
      {"singularities", {{{"m", 2}, {"w", 1}}, {{"m", 3}, {"w", 2}}, {{"m", 7}, {"w", 6}}}},
      {"topology", {{"tauB", "-7"}, {"chiB", "15"}, {"b1B", 0}, {"bplusB", 3}}},
      {"bundle", {{"dimG", 3}, {"p1B", "-1090/21"}}}};
  JobOutcome out = run_job({"orbifold-index", payload});
  REQUIRE(out.ok());
  CHECK(out.result["index"] == "-48");
  CHECK(out.result["dimension"] == 48);
  CHECK(out.result["warnings"].empty());

  // characteristic route
  json chpayload = {
      {"singularities", {{{"m", 2}, {"w", 1}}, {{"m", 3}, {"w", 2}}, {{"m", 7}, {"w", 6}}}},
      {"topology", {{"b1B", 0}, {"bplusB", 3}}},
      {"characteristic", {{"p1B_H", "-545/21"}, {"eB_H", "545/42"}}}};
  JobOutcome ch = run_job({"orbifold-index", chpayload});
  REQUIRE(ch.ok());
  CHECK(ch.result["index"] == "-48");
  CHECK(ch.result["dimension"] == 48);

  // inconsistent topology is rejected
  json badpayload = {{"topology", {{"tauB", "-7"}, {"chiB", "16"}, {"b1B", 0}, {"bplusB", 3}}}};
  JobOutcome bad = run_job({"orbifold-index", badpayload});
  CHECK(bad.exit_code == kExitValidation);
}

TEST_CASE("ypq-curvature job") {
  JobOutcome out = run_job({"ypq-curvature", {{"a", 0.5}, {"rho", 0.9}, {"tol", 1e-8}}});
  REQUIRE(out.ok());
  CHECK(out.result["eigenformCheck"]["pass"] == true);
  CHECK(out.result["maurerCartanFactor"] == 1);
  CHECK(out.result["sT"].get<double>() == doctest::Approx(24.0).epsilon(1e-9));

  JobOutcome degenerate = run_job({"ypq-curvature", {{"a", 0.5}, {"rho", 2.0}}});
  CHECK(degenerate.exit_code == kExitComputation);
  CHECK(degenerate.result["error"]["type"] == "computation");
}

TEST_CASE("u1-moduli job") {
  JobOutcome out = run_job({"u1-moduli",
                            {{"duality", "ASD"}, {"b1", 1}, {"latticeRank", 2},
                             {"torsionOrders", {2}}}});
  REQUIRE(out.ok());
  CHECK(out.result["componentTopology"] == "T^1");
  CHECK(out.result["componentGroupRank"] == 2);

  JobOutcome sd = run_job({"u1-moduli", {{"duality", "SD"}, {"b1", 0}, {"latticeRank", 1}}});
  CHECK(sd.result["componentTopology"] == "R x T^0");
}

TEST_CASE("unknown command") {
  JobOutcome out = run_job({"no-such-thing", json::object()});
  CHECK(out.exit_code == kExitValidation);
}

TEST_CASE("formula tags") {
  JobOptions opts;
  opts.with_formula = true;
  JobOutcome out = run_job({"cy-dim", {{"orders", {2, 3, 7}}}}, opts);
  REQUIRE(out.ok());
  CHECK(out.result.contains("formula"));
  JobOutcome plain = run_job({"cy-dim", {{"orders", {2, 3, 7}}}});
  CHECK(!plain.result.contains("formula"));
}

TEST_CASE("batch basics") {
  CHECK(run_batch({}, 1).empty());

  std::vector<JobDescriptor> two = {{"cy-dim", {{"orders", {2, 3, 7}}}},
                                    {"cy-dim", {{"orders", json::array()}}}};
  auto outcomes = run_batch(two, 1);
  REQUIRE(outcomes.size() == 2);
  CHECK(outcomes[0].result["negIndex"] == 48);
  CHECK(outcomes[1].result["negIndex"] == 90);

  // mixed valid/invalid: the batch never aborts, failures stay per-job
  std::vector<JobDescriptor> mixed = {{"dedekind", {{"w", 5}, {"m", 7}}},
                                      {"dedekind", {{"w", 2}, {"m", 4}}},
                                      {"ypq-index", {{"p", 3}, {"q", 2}}}};
  auto mixed_out = run_batch(mixed, 4);
  REQUIRE(mixed_out.size() == 3);
  CHECK(mixed_out[0].ok());
  CHECK(!mixed_out[1].ok());
  CHECK(mixed_out[2].ok());
  CHECK(mixed_out[2].result["dimension"] == 3);
}

TEST_CASE("batch output is byte-identical across runs and parallelism") {
  std::vector<JobDescriptor> jobs;
  for (int p = 2; p <= 12; ++p) {
    for (int q = 1; q < p; ++q) {
      jobs.push_back({"ypq-index", {{"p", p}, {"q", q}}});
      jobs.push_back({"ypq-quasireg", {{"p", p}, {"q", q}}});
    }
  }
  jobs.push_back({"cy-dim", {{"orders", {2, 3, 7}}}});
  jobs.push_back({"ypq-curvature", {{"a", 0.5}, {"rho", 0.9}}});
  jobs.push_back({"dedekind", {{"w", 0}, {"m", 0}}});  // per-job error

  std::string first = batch_output(run_batch(jobs, 1));
  for (int run = 0; run < 2; ++run) {
    CHECK(batch_output(run_batch(jobs, 1)) == first);
    CHECK(batch_output(run_batch(jobs, 8)) == first);
  }
}

TEST_CASE("emitted rational fields round-trip through the p/q serialization") {
  auto roundtrips = [](const json& field) {
    std::string s = field.get<std::string>();
    Rational r = rational_from_string(s);
    return rational_to_string(r) == s || rational_to_fraction_string(r) == s;
  };
  CHECK(roundtrips(run_job({"dedekind", {{"w", 5}, {"m", 7}}}).result["value"]));
  CHECK(roundtrips(run_job({"dedekind", {{"w", 1}, {"m", 1}}}).result["value"]));
  CHECK(roundtrips(run_job({"cy-dim", {{"orders", {2, 3, 7}}}}).result["h11"]));
  CHECK(roundtrips(run_job({"flatness", {{"orders", {2, 3, 7}}}}).result["value"]));
  json payload = {
      {"singularities", {{{"m", 2}, {"w", 1}}, {{"m", 3}, {"w", 2}}, {{"m", 7}, {"w", 6}}}},
      {"topology", {{"tauB", "-7"}, {"chiB", "15"}, {"b1B", 0}, {"bplusB", 3}}},
      {"bundle", {{"dimG", 3}, {"p1B", "-1090/21"}}}};
  CHECK(roundtrips(run_job({"orbifold-index", payload}).result["index"]));
}

TEST_CASE("parse_job validation") {
  CHECK_THROWS(parse_job(json::array()));
  CHECK_THROWS(parse_job(json{{"payload", json::object()}}));
  JobDescriptor d = parse_job(json{{"command", "dedekind"}, {"payload", {{"w", 1}, {"m", 1}}}});
  CHECK(d.command == "dedekind");
}
