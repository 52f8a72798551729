#include "cli/run_config.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "keyrate/errors.hpp"

namespace keyrate::cli {

using nlohmann::json;

namespace {

std::string scalar_token(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    // Round-trip precision; CLI11 parses it back exactly.
    return json(v.get<double>()).dump();
  }
  throw DomainError("config values must be strings, numbers or booleans");
}

void add_channel(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--p1", cfg.channel.p1, "Power constraint of BS1 (linear SNR)")->required();
  cmd->add_option("--p2", cfg.channel.p2, "Power constraint of BS2 (linear SNR)")->required();
  cmd->add_option("--a1", cfg.channel.alpha1, "Cross gain into receiver 1")->required();
  cmd->add_option("--a2", cfg.channel.alpha2, "Cross gain into receiver 2")->required();
}

void add_output(CLI::App* cmd, RunConfig& cfg, const char* what) {
  cmd->add_option("-o,--out", cfg.output_path, what);
  cmd->add_option("--format", cfg.output_format, "Output format: csv or json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, OutputFormat>{{"csv", OutputFormat::Csv},
                                              {"json", OutputFormat::Json}},
          CLI::ignore_case));
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  std::vector<std::string> from_file;
  std::optional<std::size_t> command_pos;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw DomainError("--config needs a file argument");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      if (!command_pos && !args[i].empty() && args[i][0] != '-') command_pos = out.size();
      out.push_back(args[i]);
      continue;
    }
    std::ifstream in(path);
    if (!in) throw IoError("cannot open config file '" + path + "'");
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw DomainError("malformed config file '" + path + "': " + e.what());
    }
    const auto tokens = config_tokens(doc);
    from_file.insert(from_file.end(), tokens.begin(), tokens.end());
  }
  if (from_file.empty()) return out;
  if (!command_pos) throw DomainError("--config requires a command");
  // File values go right after the command so later flags win.
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(*command_pos + 1), from_file.begin(),
             from_file.end());
  return out;
}

std::size_t threads_from_env() {
  const char* env = std::getenv("KEYRATE_THREADS");
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0) {
    throw DomainError(std::string("KEYRATE_THREADS must be a nonnegative integer, got '") + env +
                      "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

std::vector<std::string> config_tokens(const json& doc) {
  if (!doc.is_object()) throw DomainError("config file must hold a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : doc.items()) {
    if (key == "command") continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back("--" + key);
      continue;
    }
    tokens.push_back("--" + key);
    tokens.push_back(scalar_token(value));
  }
  return tokens;
}

ParseOutcome parse_run_config(const std::vector<std::string>& args) {
  ParseOutcome outcome;
  RunConfig& cfg = outcome.config;

  CLI::App app{"Secret-key rate regions and key-agreement games on the two-pair interference "
               "channel",
               "keyrate"};
  app.require_subcommand(1);
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

  std::optional<std::size_t> threads;
  auto* region = app.add_subcommand("region", "Sweep key-rate regions (pure, ts, an, all)");
  add_channel(region, cfg);
  region->add_option("--scheme", cfg.scheme, "pure | ts | an | all")
      ->check(CLI::IsMember({"pure", "ts", "an", "all"}));
  region->add_option("--rho-grid", cfg.rho_grid, "Points on the rho1 axis");
  region->add_option("--beta-grid", cfg.beta_grid, "Points on each beta axis");
  region->add_option("--lambda-grid", cfg.lambda_grid, "Points on each lambda axis");
  region->add_option("--rho1", cfg.rho1, "Fix rho1 instead of sweeping it");
  region->add_option("--beta1", cfg.beta1, "Fix beta1 instead of sweeping it");
  region->add_option("--beta2", cfg.beta2, "Fix beta2 instead of sweeping it");
  region->add_option("--lambda1", cfg.lambda1, "Fix lambda1 instead of sweeping it");
  region->add_option("--lambda2", cfg.lambda2, "Fix lambda2 instead of sweeping it");
  region->add_option("--max-evals", cfg.max_evals, "Cap on rate evaluations per scheme");
  region->add_option("--directions", cfg.directions, "Ray directions for containment checks");
  region->add_option("--threads", threads, "Worker threads, 0 = all cores (default: $KEYRATE_THREADS)");
  add_output(region, cfg, "Output file prefix (default: region)");

  auto* game = app.add_subcommand("game", "Analyze the 2x2 strategy game (and optionally the "
                                          "artificial-noise game)");
  add_channel(game, cfg);
  game->add_option("--beta1", cfg.beta1, "Power control of BS1 (default 1)");
  game->add_option("--beta2", cfg.beta2, "Power control of BS2 (default 1)");
  game->add_option("--tol", cfg.tolerance, "Equilibrium tie tolerance");
  game->add_option("--payoff-mode", cfg.payoff_mode, "signed | clamped")
      ->check(CLI::IsMember({"signed", "clamped"}));
  game->add_flag("--gamma2", cfg.gamma2, "Add best-response analysis over lambda");
  game->add_option("--grid-n", cfg.grid_n, "Best-response grid points (default 1001)");
  game->add_option("-o,--out", cfg.output_path, "Report file (default: stdout)");

  auto* nemap = app.add_subcommand("ne-map", "Equilibrium map over (alpha1, alpha2)");
  nemap->add_option("--p", cfg.p, "Power of both base stations");
  nemap->add_option("--grid", cfg.grid_n, "Points per alpha axis (default 101)");
  nemap->add_option("--tol", cfg.tolerance, "Equilibrium tie tolerance");
  nemap->add_option("--threads", threads, "Worker threads, 0 = all cores (default: $KEYRATE_THREADS)");
  nemap->add_option("--payoff-mode", cfg.payoff_mode, "signed | clamped")
      ->check(CLI::IsMember({"signed", "clamped"}));
  add_output(nemap, cfg, "Map file (default: stdout)");

  auto* dm = app.add_subcommand("dm-bound", "Evaluate the inner bound on a factored PMF file");
  dm->add_option("input", cfg.input_path, "FactoredPmf JSON file")->required();
  dm->add_option("-o,--out", cfg.output_path, "Report file (default: stdout)");

  std::vector<std::string> tokens = expand_config(args);
  std::reverse(tokens.begin(), tokens.end());
  try {
    app.parse(tokens);
  } catch (const CLI::CallForHelp&) {
    for (const auto* sub : app.get_subcommands()) {
      outcome.help = sub->help();
      return outcome;
    }
    outcome.help = app.help();
    return outcome;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.command == "region" && cfg.output_path.empty()) cfg.output_path = "region";
  cfg.threads = threads ? *threads : threads_from_env();
  return outcome;
}

}  // namespace keyrate::cli
