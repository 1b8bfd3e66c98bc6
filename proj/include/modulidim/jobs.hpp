#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace modulidim {

/// One batch job: a command name from the CLI vocabulary plus its
/// command-specific JSON payload.
struct JobDescriptor {
  std::string command;
  nlohmann::json payload;
};

struct JobOptions {
  bool with_formula = false;  // attach the formula provenance tag
};

/// Exit codes shared by single runs and per-job results.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitComputation = 3;

struct JobOutcome {
  nlohmann::json result;  // value object on success, error object on failure
  int exit_code = kExitOk;

  bool ok() const { return exit_code == kExitOk; }
};

JobDescriptor parse_job(const nlohmann::json& j);

/// Dispatches one job.  Never throws: errors are encoded in the outcome.
JobOutcome run_job(const JobDescriptor& job, const JobOptions& opts = {});

/// Runs jobs with the requested parallelism; results come back in input
/// order and per-job failures never abort the batch.
std::vector<JobOutcome> run_batch(const std::vector<JobDescriptor>& jobs, int parallelism,
                                  const JobOptions& opts = {});

/// Canonical serialization used for determinism checks: one compact JSON
/// object per line, in input order.
std::string batch_output(const std::vector<JobOutcome>& outcomes);

} // namespace modulidim
