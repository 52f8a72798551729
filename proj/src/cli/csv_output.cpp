#include "cli/csv_output.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "keyrate/errors.hpp"

namespace keyrate::cli {

using nlohmann::json;

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

namespace {

std::string optional_number(double v) { return std::isnan(v) ? std::string() : format_number(v); }

json optional_json(double v) { return std::isnan(v) ? json(nullptr) : json(v); }

// Frontier rows keep the points' order.
template <typename Pred>
void write_rows(std::ostream& out, const RegionSample& sample, Pred keep) {
  out << kRegionHeader << '\n';
  for (const auto& pt : sample.points) {
    if (keep(pt)) write_region_row(out, sample.scheme, pt);
  }
}

}  // namespace

void write_region_row(std::ostream& out, Scheme scheme, const RegionPoint& pt) {
  const ParamRecord& p = pt.params;
  out << to_string(scheme) << ',' << optional_number(p.rho1) << ',' << optional_number(p.beta1)
      << ',' << optional_number(p.beta2) << ',' << optional_number(p.lambda1) << ','
      << optional_number(p.lambda2) << ',';
  if (p.profile) out << to_string(p.profile->s1) << ',' << to_string(p.profile->s2);
  else out << ',';
  out << ',' << format_number(pt.rates.r1) << ',' << format_number(pt.rates.r2) << ','
      << (pt.on_frontier ? 1 : 0) << '\n';
}

void write_points_csv(std::ostream& out, const RegionSample& sample) {
  write_rows(out, sample, [](const RegionPoint&) { return true; });
}

void write_frontier_csv(std::ostream& out, const RegionSample& sample) {
  write_rows(out, sample, [](const RegionPoint& pt) { return pt.on_frontier; });
}

void write_hull_csv(std::ostream& out, const std::vector<Point2>& hull) {
  out << kHullHeader << '\n';
  for (const auto& v : hull) out << format_number(v.x) << ',' << format_number(v.y) << '\n';
}

void write_ne_map_csv(std::ostream& out, const std::vector<NeMapCell>& cells) {
  out << kNeMapHeader << '\n';
  for (const auto& c : cells) {
    const ProfileSet& ne = c.report.equilibria;
    out << format_number(c.alpha1) << ',' << format_number(c.alpha2) << ',' << ne[0] << ','
        << ne[1] << ',' << ne[2] << ',' << ne[3] << ','
        << to_string(c.report.analytic.analytic_class) << ','
        << (c.report.agree ? (*c.report.agree ? "1" : "0") : "") << '\n';
  }
}

json hull_to_json(const std::vector<Point2>& hull) {
  json arr = json::array();
  for (const auto& v : hull) arr.push_back({{"r1", v.x}, {"r2", v.y}});
  return arr;
}

json region_to_json(const RegionSample& sample) {
  json points = json::array();
  for (const auto& pt : sample.points) {
    const ParamRecord& p = pt.params;
    json row = {{"rho1", optional_json(p.rho1)},       {"beta1", optional_json(p.beta1)},
                {"beta2", optional_json(p.beta2)},     {"lambda1", optional_json(p.lambda1)},
                {"lambda2", optional_json(p.lambda2)}, {"r1", pt.rates.r1},
                {"r2", pt.rates.r2},                   {"on_frontier", pt.on_frontier}};
    row["s1"] = p.profile ? json(std::string(to_string(p.profile->s1))) : json(nullptr);
    row["s2"] = p.profile ? json(std::string(to_string(p.profile->s2))) : json(nullptr);
    points.push_back(std::move(row));
  }
  json frontier = json::array();
  for (const auto& r : sample.frontier) frontier.push_back({{"r1", r.r1}, {"r2", r.r2}});
  return {{"scheme", to_string(sample.scheme)},
          {"points", std::move(points)},
          {"frontier", std::move(frontier)},
          {"hull", hull_to_json(sample.hull)}};
}

json ne_map_to_json(const std::vector<NeMapCell>& cells) {
  json arr = json::array();
  for (const auto& c : cells) {
    json ne = json::array();
    for (const Profile p : profiles_in(c.report.equilibria)) ne.push_back(to_string(p));
    arr.push_back({{"alpha1", c.alpha1},
                   {"alpha2", c.alpha2},
                   {"equilibria", std::move(ne)},
                   {"analytic_class", to_string(c.report.analytic.analytic_class)},
                   {"agree", c.report.agree ? json(*c.report.agree) : json(nullptr)}});
  }
  return arr;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << text;
  out.flush();
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace keyrate::cli
