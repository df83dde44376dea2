#pragma once
// Check registry, worker pool and report assembly shared by the CLI and the
// Python bindings.
#include <string>
#include <vector>

#include "fppcert/certify.hpp"
#include "fppcert/report.hpp"
#include "fppcert/sextic.hpp"

namespace fpp {

const char* toolkit_version();

// Every check id, in report order.
const std::vector<std::string>& all_check_ids();
// Check ids selected by a subcommand; throws ConfigError for unknown names.
std::vector<std::string> checks_for_subcommand(const std::string& name);

// Worker count: hardware concurrency capped by FPPCERT_THREADS when set.
// Throws ConfigError on a malformed value.
int worker_threads_from_env();

SamplingParams sampling_params(const RunConfig& cfg);

// Validates the configuration against the selected checks (ConfigError)
// before anything runs.
void validate_config(const RunConfig& cfg, const std::vector<std::string>& ids);

Json report_meta(const RunConfig& cfg);

// Runs the selected checks on cfg.threads workers; records keep the order of `ids`.
CertReport run_checks(const RunConfig& cfg, const std::vector<std::string>& ids);
CertReport run_all(const RunConfig& cfg);

}  // namespace fpp
