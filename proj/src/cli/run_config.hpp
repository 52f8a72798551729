#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "keyrate/game.hpp"
#include "keyrate/gaussian_regions.hpp"

namespace keyrate::cli {

enum class OutputFormat { Csv, Json };

/// Everything one CLI invocation needs. Optional fields are unset when the
/// user did not supply them; the command picks its own default.
struct RunConfig {
  std::string command;  // region | game | ne-map | dm-bound
  ChannelParams channel;

  // region
  std::string scheme = "all";
  std::size_t rho_grid = SweepGrid::kDefaultResolution;
  std::size_t beta_grid = SweepGrid::kDefaultResolution;
  std::size_t lambda_grid = SweepGrid::kDefaultResolution;
  std::optional<double> rho1, beta1, beta2, lambda1, lambda2;
  std::size_t max_evals = 10'000'000;
  std::size_t directions = 64;

  // game / ne-map
  double tolerance = kDefaultNeTolerance;
  std::string payoff_mode = "signed";
  bool gamma2 = false;
  std::size_t grid_n = 0;  // 0 = command default (1001 for game, 101 for ne-map)
  double p = 1.0;

  // dm-bound
  std::string input_path;

  std::string output_path;  // file (game, ne-map, dm-bound) or prefix (region)
  OutputFormat output_format = OutputFormat::Csv;
  std::size_t threads = 0;  // KEYRATE_THREADS, 0 = auto
};

// Turns a JSON config object into command-line tokens ("--key value" or
// "--flag"). Keys are the long flag names without dashes.
std::vector<std::string> config_tokens(const nlohmann::json& doc);

struct ParseOutcome {
  RunConfig config;
  std::string help;  // nonempty when --help was requested
};

// Parses argv-style tokens (without the program name). A `--config FILE`
// is expanded first; explicit flags override values from the file.
// Throws CLI::ParseError subclasses, DomainError or IoError.
ParseOutcome parse_run_config(const std::vector<std::string>& args);

}  // namespace keyrate::cli
