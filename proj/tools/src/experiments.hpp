#ifndef LAGMULT_TOOLS_EXPERIMENTS_HPP
#define LAGMULT_TOOLS_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "config.hpp"
#include "lagmult/sequences.hpp"

namespace lagmult::tools {

struct RunResult {
  int exit_code = 0;
  std::string csv;
  nlohmann::json summary;
  /// Human-readable lines, one per check or bank member.
  std::vector<std::string> report;
};

/// constant:1, abel at 0.5/0.9/0.99, riesz at N in {4,8,16,32} with delta in
/// {0.5,1,2}, char at {4,8,16,32}, osc:2.
std::vector<std::string> default_bank();

/// Parses the configured bank (or the default). Malformed specs and empty
/// sequence files raise UsageError.
std::vector<MultiplierSeq> load_bank(const ExperimentConfig& cfg);

RunResult cmd_verify(const ExperimentConfig& cfg);
RunResult cmd_wbv_equivalence(const ExperimentConfig& cfg);
RunResult cmd_mpinfty_embedding(const ExperimentConfig& cfg);
RunResult cmd_embedding_sweep(const ExperimentConfig& cfg);
RunResult cmd_charex(const ExperimentConfig& cfg);
RunResult cmd_hardy_suite(const ExperimentConfig& cfg);

RunResult run_experiment(const ExperimentConfig& cfg);

}  // namespace lagmult::tools

#endif
