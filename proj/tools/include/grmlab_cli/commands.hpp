#pragma once

#include <string>
#include <vector>

#include "grmlab/config.hpp"
#include "grmlab_cli/io.hpp"

namespace grmlab::cli {

struct RunConfig {
  std::string command;  ///< measure | chain | certify | verify-chain | decompose | gldim
  std::string algebra = "lambda1";
  std::string module;
  std::string weights;  ///< empty selects unit weights
  std::string kind = "gr";
  std::string chain_file;  ///< verify-chain: explicit steps
  Caps caps;
  std::string output;  ///< empty writes to stdout
  std::string format = "json";
};

json config_to_json(const RunConfig& c);

struct RunResult {
  int exit_code = 0;  ///< 0 pass, 1 check failure, 2 cap or input error
  json report;
  std::string text;  ///< rendered report
};

/// Runs one subcommand; never throws.
RunResult run(const RunConfig& config);

/// Applies GRMLAB_SEED from the environment, if set.
void apply_environment(RunConfig& config);

}  // namespace grmlab::cli
