#pragma once

// JSON form of FactoredPmf:
//
//   {
//     "alphabets": {"v1f": 2, "v2f": 2, "x1": 2, "x2": 2,
//                   "y1": 2, "y2": 2, "v1b": 1, "v2b": 1},
//     "p_v1f": [..],                 // [v1f]
//     "p_v2f": [..],                 // [v2f]
//     "p_x1_given_v1f": [[..], ..],  // [v1f][x1]
//     "p_x2_given_v2f": [[..], ..],  // [v2f][x2]
//     "p_y_given_x": [[[[..]]]],     // [x1][x2][y1][y2]
//     "p_v1b_given_y1": [[..], ..],  // [y1][v1b]
//     "p_v2b_given_y2": [[..], ..]   // [y2][v2b]
//   }

#include <filesystem>
#include <string>

#include "json.hpp"
#include "keyrate/dm_inner_bound.hpp"

namespace keyrate {

// Throws DomainError naming the factor (and row, for bad rows) on malformed
// or invalid input.
FactoredPmf factored_pmf_from_json(const nlohmann::json& doc);
nlohmann::json factored_pmf_to_json(const FactoredPmf& f);

// Throws IoError if the file cannot be read, DomainError if it does not parse.
FactoredPmf load_factored_pmf(const std::filesystem::path& path);

}  // namespace keyrate
