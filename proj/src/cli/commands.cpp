#include "cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "CLI11.hpp"
#include "cli/csv_output.hpp"
#include "keyrate/dm_inner_bound.hpp"
#include "keyrate/errors.hpp"
#include "keyrate/factored_pmf_json.hpp"

namespace keyrate::cli {

using nlohmann::json;

namespace {

ParamAxis axis_for(const std::optional<double>& fixed, std::size_t resolution) {
  return fixed ? ParamAxis::fixed(*fixed) : ParamAxis::linspace(resolution);
}

SweepGrid grid_from(const RunConfig& cfg) {
  SweepGrid g;
  g.rho1 = axis_for(cfg.rho1, cfg.rho_grid);
  g.beta1 = axis_for(cfg.beta1, cfg.beta_grid);
  g.beta2 = axis_for(cfg.beta2, cfg.beta_grid);
  g.lambda1 = axis_for(cfg.lambda1, cfg.lambda_grid);
  g.lambda2 = axis_for(cfg.lambda2, cfg.lambda_grid);
  g.max_evaluations = cfg.max_evals;
  g.threads = cfg.threads;
  return g;
}

// Writes to `path`, or to `out` when the path is empty.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") out << text;
  else write_file(path, text);
}

std::string summary_line(const RegionSample& s) {
  double max_r1 = 0.0;
  double max_r2 = 0.0;
  for (const auto& pt : s.points) {
    max_r1 = std::max(max_r1, pt.rates.r1);
    max_r2 = std::max(max_r2, pt.rates.r2);
  }
  std::ostringstream line;
  line << "scheme=" << to_string(s.scheme) << " points=" << s.points.size()
       << " frontier=" << s.frontier.size() << " hull_vertices=" << s.hull.size()
       << " max_r1=" << format_number(max_r1) << " max_r2=" << format_number(max_r2);
  return line.str();
}

json channel_json(const ChannelParams& ch) {
  return {{"alpha1", ch.alpha1}, {"alpha2", ch.alpha2}, {"p1", ch.p1}, {"p2", ch.p2}};
}

json profiles_json(ProfileSet set) {
  json arr = json::array();
  for (const Profile p : profiles_in(set)) arr.push_back(to_string(p));
  return arr;
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json analytic_json(const AnalyticConditions& c) {
  return {{"equal_power", c.equal_power},
          {"effective_power", c.effective_power},
          {"lambda1", c.lambda1},
          {"bwbw_threshold", c.bwbw_threshold},
          {"fwbw_threshold", c.fwbw_threshold},
          {"bwfw_threshold", c.bwfw_threshold},
          {"fwfw_ne", c.fwfw},
          {"bwbw_ne", optional_bool(c.bwbw)},
          {"fwbw_ne", optional_bool(c.fwbw)},
          {"bwfw_ne", optional_bool(c.bwfw)},
          {"analytic_class", to_string(c.analytic_class)}};
}

}  // namespace

int cmd_region(const RunConfig& cfg, std::ostream& out) {
  std::vector<Scheme> schemes;
  if (cfg.scheme == "all") {
    schemes = {Scheme::Pure, Scheme::TimeSharing, Scheme::ArtificialNoise};
  } else {
    schemes = {parse_scheme(cfg.scheme)};
  }
  const SweepGrid grid = grid_from(cfg);

  std::vector<RegionSample> samples;
  for (const Scheme s : schemes) samples.push_back(sweep_region(cfg.channel, s, grid));

  const std::string& prefix = cfg.output_path;
  json doc = {{"channel", channel_json(cfg.channel)}, {"schemes", json::object()}};
  for (const auto& s : samples) {
    const std::string stem = prefix + "_" + std::string(to_string(s.scheme));
    if (cfg.output_format == OutputFormat::Csv) {
      std::ostringstream points, frontier, hull;
      write_points_csv(points, s);
      write_frontier_csv(frontier, s);
      write_hull_csv(hull, s.hull);
      write_file(stem + "_points.csv", points.str());
      write_file(stem + "_frontier.csv", frontier.str());
      write_file(stem + "_hull.csv", hull.str());
    } else {
      doc["schemes"][std::string(to_string(s.scheme))] = region_to_json(s);
    }
    out << summary_line(s) << '\n';
  }

  if (samples.size() > 1) {
    std::vector<Point2> all_vertices;
    for (const auto& s : samples) all_vertices.insert(all_vertices.end(), s.hull.begin(), s.hull.end());
    const std::vector<Point2> union_hull = achievable_hull(all_vertices);

    auto hull_of = [&](Scheme scheme) -> const std::vector<Point2>& {
      return std::find_if(samples.begin(), samples.end(),
                          [&](const RegionSample& s) { return s.scheme == scheme; })
          ->hull;
    };
    const auto dirs = quadrant_directions(cfg.directions);
    const auto& an = hull_of(Scheme::ArtificialNoise);
    const auto& ts = hull_of(Scheme::TimeSharing);
    const auto& pure = hull_of(Scheme::Pure);
    const bool an_ts = hull_contains(an, ts, dirs);
    const bool ts_pure = hull_contains(ts, pure, dirs);
    const bool an_pure = hull_contains(an, pure, dirs);

    if (cfg.output_format == OutputFormat::Csv) {
      std::ostringstream hull;
      write_hull_csv(hull, union_hull);
      write_file(prefix + "_union_hull.csv", hull.str());
    } else {
      doc["union_hull"] = hull_to_json(union_hull);
      doc["containment"] = {{"directions", cfg.directions},
                            {"slack", 1e-9},
                            {"an_contains_ts", an_ts},
                            {"ts_contains_pure", ts_pure},
                            {"an_contains_pure", an_pure}};
    }
    out << "containment an>=ts=" << (an_ts ? "yes" : "no") << " ts>=pure=" << (ts_pure ? "yes" : "no")
        << " an>=pure=" << (an_pure ? "yes" : "no") << " directions=" << cfg.directions << '\n';
  }

  if (cfg.output_format == OutputFormat::Json) write_file(prefix + ".json", doc.dump(2) + "\n");
  return kExitOk;
}

int cmd_game(const RunConfig& cfg, std::ostream& out) {
  const double beta1 = cfg.beta1.value_or(1.0);
  const double beta2 = cfg.beta2.value_or(1.0);
  const PayoffMode mode = parse_payoff_mode(cfg.payoff_mode);
  const MatrixGame g = build_gamma1(cfg.channel, beta1, beta2);
  const NeReport report = analyze_gamma1(cfg.channel, beta1, beta2, cfg.tolerance, mode);

  json payoffs = json::array();
  for (const Profile p : kAllProfiles) {
    payoffs.push_back({{"profile", to_string(p)},
                       {"r1", g.payoff(p).r1},
                       {"r2", g.payoff(p).r2},
                       {"margin1", g.margin(p).m1},
                       {"margin2", g.margin(p).m2}});
  }
  json doc = {{"channel", channel_json(cfg.channel)},
              {"beta1", beta1},
              {"beta2", beta2},
              {"payoff_mode", to_string(mode)},
              {"payoffs", std::move(payoffs)},
              {"equilibria", profiles_json(report.equilibria)},
              {"all_tie", report.all_tie},
              {"analytic", analytic_json(report.analytic)},
              {"agree", optional_bool(report.agree)},
              {"tolerances", {{"ne_tie", cfg.tolerance}, {"analytic_relative", 1e-12}}}};

  if (cfg.gamma2) {
    const std::size_t grid_n = cfg.grid_n == 0 ? 1001 : cfg.grid_n;
    json responses = json::array();
    bool all_endpoint = true;
    for (int player : {1, 2}) {
      for (double other : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const BestResponse br = best_response_lambda(cfg.channel, player, other, grid_n);
        all_endpoint = all_endpoint && br.endpoint_attained;
        responses.push_back({{"player", player},
                             {"lambda_other", other},
                             {"max_payoff", br.max_payoff},
                             {"argmax", br.argmax},
                             {"endpoint_attained", br.endpoint_attained}});
      }
    }
    const ProfileSet corner = gamma2_corner_ne(cfg.channel, cfg.tolerance);
    const ProfileSet gamma1_clamped = pure_ne(build_gamma1(cfg.channel), cfg.tolerance,
                                              PayoffMode::Clamped);
    doc["gamma2"] = {{"grid_n", grid_n},
                     {"best_responses", std::move(responses)},
                     {"all_endpoint", all_endpoint},
                     {"corner_equilibria", profiles_json(corner)},
                     {"matches_gamma1_clamped", corner == gamma1_clamped}};
  }

  emit(cfg.output_path, doc.dump(2) + "\n", out);
  return kExitOk;
}

int cmd_ne_map(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::size_t grid_n = cfg.grid_n == 0 ? 101 : cfg.grid_n;
  const auto cells =
      ne_map(cfg.p, grid_n, cfg.tolerance, parse_payoff_mode(cfg.payoff_mode), cfg.threads);
  const auto disagreements = std::count_if(cells.begin(), cells.end(), [](const NeMapCell& c) {
    return c.report.agree.has_value() && !*c.report.agree;
  });

  std::ostringstream text;
  if (cfg.output_format == OutputFormat::Csv) {
    write_ne_map_csv(text, cells);
  } else {
    const json doc = {{"p", cfg.p}, {"grid_n", grid_n}, {"cells", ne_map_to_json(cells)}};
    text << doc.dump(2) << '\n';
  }
  emit(cfg.output_path, text.str(), out);
  std::ostream& summary = cfg.output_path.empty() || cfg.output_path == "-" ? err : out;
  summary << "cells=" << cells.size() << " disagreements=" << disagreements << '\n';
  return kExitOk;
}

int cmd_dm_bound(const RunConfig& cfg, std::ostream& out) {
  const FactoredPmf f = load_factored_pmf(cfg.input_path);
  const InnerBoundTerms t = inner_bound_terms(f);
  const RatePair r = t.rates();
  const bool forward_only = f.alphabets.v1b == 1 && f.alphabets.v2b == 1;

  json doc = {{"r1", r.r1},
              {"r2", r.r2},
              {"terms",
               {{"I(V1f;Y1)", t.fwd1_gain},
                {"I(V1f;Y2|V2f)", t.fwd1_leak},
                {"I(V1b;X1|V1f)", t.bwd1_gain},
                {"I(V1b;Y2,V2f|V1f)", t.bwd1_leak},
                {"I(V2f;Y2)", t.fwd2_gain},
                {"I(V2f;Y1|V1f)", t.fwd2_leak},
                {"I(V2b;X2|V2f)", t.bwd2_gain},
                {"I(V2b;Y1,V1f|V2f)", t.bwd2_leak}}},
              {"forward_only", forward_only}};
  if (forward_only) {
    doc["forward_rates"] = {{"r1", pos_part(t.fwd1_gain - t.fwd1_leak)},
                            {"r2", pos_part(t.fwd2_gain - t.fwd2_leak)}};
  }
  emit(cfg.output_path, doc.dump(2) + "\n", out);
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const ParseOutcome parsed = parse_run_config(args);
    if (!parsed.help.empty()) {
      out << parsed.help;
      return kExitOk;
    }
    const RunConfig& cfg = parsed.config;
    if (cfg.command == "region") return cmd_region(cfg, out);
    if (cfg.command == "game") return cmd_game(cfg, out);
    if (cfg.command == "ne-map") return cmd_ne_map(cfg, out, err);
    return cmd_dm_bound(cfg, out);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitIo;
  } catch (const DomainError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ResourceError& e) {
    err << "too large: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
}

}  // namespace keyrate::cli
