#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "cli/run_config.hpp"

namespace keyrate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitIo = 2;

int cmd_region(const RunConfig& cfg, std::ostream& out);
int cmd_game(const RunConfig& cfg, std::ostream& out);
int cmd_ne_map(const RunConfig& cfg, std::ostream& out, std::ostream& err);
int cmd_dm_bound(const RunConfig& cfg, std::ostream& out);

// Parses `args` (without the program name), dispatches, and maps errors to
// exit codes: 1 for validation errors, 2 for I/O errors. Messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace keyrate::cli
