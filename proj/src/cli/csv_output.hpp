#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "keyrate/game.hpp"
#include "keyrate/gaussian_regions.hpp"

namespace keyrate::cli {

// 12 significant digits; shortest form, so equal values print identically.
std::string format_number(double v);

inline constexpr const char* kRegionHeader =
    "scheme,rho1,beta1,beta2,lambda1,lambda2,s1,s2,r1,r2,on_frontier";
inline constexpr const char* kHullHeader = "r1,r2";
inline constexpr const char* kNeMapHeader =
    "alpha1,alpha2,ne_fwfw,ne_fwbw,ne_bwfw,ne_bwbw,analytic_class,agree";

void write_region_row(std::ostream& out, Scheme scheme, const RegionPoint& pt);
void write_points_csv(std::ostream& out, const RegionSample& sample);
void write_frontier_csv(std::ostream& out, const RegionSample& sample);
void write_hull_csv(std::ostream& out, const std::vector<Point2>& hull);
void write_ne_map_csv(std::ostream& out, const std::vector<NeMapCell>& cells);

nlohmann::json region_to_json(const RegionSample& sample);
nlohmann::json hull_to_json(const std::vector<Point2>& hull);
nlohmann::json ne_map_to_json(const std::vector<NeMapCell>& cells);

// Writes `text` to `path`; throws IoError when the file cannot be written.
void write_file(const std::filesystem::path& path, const std::string& text);

}  // namespace keyrate::cli
