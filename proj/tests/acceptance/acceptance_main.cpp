// One PASS/FAIL line per acceptance criterion. With no arguments every
// criterion runs; otherwise only the named ones. Exit status is nonzero when
// any selected criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "keyrate/dm_inner_bound.hpp"
#include "keyrate/game.hpp"
#include "keyrate/gaussian_regions.hpp"
#include "keyrate/parallel.hpp"
#include "oracles.hpp"

using namespace keyrate;
using enum PureStrategy;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::vector<std::string> log;  // counterexamples, printed before the verdict

  void fail(std::string what) {
    pass = false;
    if (log.size() < 50) log.push_back(std::move(what));
  }
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

ProfileSet set_of(std::initializer_list<Profile> ps) {
  ProfileSet s;
  for (const Profile p : ps) s.set(profile_index(p));
  return s;
}

constexpr Profile kFF{FW, FW}, kFB{FW, BW}, kBF{BW, FW}, kBB{BW, BW};

Outcome ne_trichotomy() {
  Outcome o;
  const auto cells = ne_map(1.0, 101, kDefaultNeTolerance, PayoffMode::Signed, 0);
  std::size_t checked = 0, disagreements = 0;
  for (const NeMapCell& c : cells) {
    if (!c.report.agree || !*c.report.agree) {
      ++disagreements;
      o.fail(fmt("analytic disagreement at a1=%.2f a2=%.2f: %s", c.alpha1, c.alpha2,
                 format_profiles(c.report.equilibria).c_str()));
    }
    if (c.alpha1 == 0.0 && c.alpha2 == 0.0) continue;
    ++checked;
    const ProfileSet want = c.alpha1 > c.alpha2   ? set_of({kFB})
                            : c.alpha1 < c.alpha2 ? set_of({kBF})
                                                  : set_of({kFF, kFB, kBF});
    if (c.report.equilibria != want)
      o.fail(fmt("a1=%.2f a2=%.2f: got %s, expected %s", c.alpha1, c.alpha2,
                 format_profiles(c.report.equilibria).c_str(), format_profiles(want).c_str()));
  }
  o.detail = fmt("%zu cells checked, %zu analytic disagreements", checked, disagreements);
  return o;
}

Outcome bwbw_exclusion() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::size_t hits = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    double a1 = unit(rng), a2 = unit(rng);
    while (a1 == 0.0 && a2 == 0.0) a1 = unit(rng);
    const double p = 100.0 - 99.5 * unit(rng);  // (0.5, 100]
    const ProfileSet ne = pure_ne(build_gamma1({a1, a2, p, p}), 1e-9);
    if (ne.test(profile_index(kBB))) {
      ++hits;
      o.fail(fmt("(BW,BW) is an equilibrium at a1=%.17g a2=%.17g P=%.17g", a1, a2, p));
    }
  }
  const AnalyticConditions low = analytic_ne_conditions({1, 1, 0.4, 0.4});
  const bool low_ne = pure_ne(build_gamma1({1, 1, 0.4, 0.4}), 1e-9).test(profile_index(kBB));
  if (!low_ne) o.fail("(BW,BW) not an equilibrium at P=0.4, a1=a2=1");
  if (!low.bwbw.value_or(false)) o.fail("analytic (BW,BW) test rejects P=0.4, a1=a2=1");
  if (std::abs(low.lambda1 - 0.64 / 2.6) > 1e-12 || std::abs(low.bwbw_threshold - 0.4 / 1.4) > 1e-12)
    o.fail(fmt("P=0.4 condition values off: Lambda1=%.12g threshold=%.12g", low.lambda1,
               low.bwbw_threshold));
  o.detail = fmt("1000 draws, %zu with (BW,BW); P=0.4: Lambda1=%.5f <= %.5f, (BW,BW) NE=%s", hits,
                 low.lambda1, low.bwbw_threshold, low_ne ? "yes" : "no");
  return o;
}

Outcome corner_reductions() {
  Outcome o;
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const ChannelParams ch = oracle::random_channel(rng);
    auto compare = [&](RatePair got, RatePair want, const char* what) {
      const double err = std::max(std::abs(got.r1 - want.r1), std::abs(got.r2 - want.r2));
      worst = std::max(worst, err);
      if (err > 1e-12)
        o.fail(fmt("%s off by %.3g at a1=%.17g a2=%.17g P1=%.17g P2=%.17g", what, err, ch.alpha1,
                   ch.alpha2, ch.p1, ch.p2));
    };
    for (const Profile p : kAllProfiles) {
      const AnParams an{1, 1, p.s1 == BW ? 1.0 : 0.0, p.s2 == BW ? 1.0 : 0.0};
      compare(artificial_noise_rates(ch, an), pure_rates(ch, p.s1, p.s2),
              ("an corner " + to_string(p)).c_str());
    }
    compare(time_sharing_rates(ch, {1.0, 1, 1}), pure_rates(ch, FW, BW), "ts rho1=1");
    compare(time_sharing_rates(ch, {0.0, 1, 1}), pure_rates(ch, BW, FW), "ts rho1=0");
  }
  o.detail = fmt("500 channels, max deviation %.3g", worst);
  return o;
}



Outcome region_containment_at(std::size_t resolution, std::string& summary) {
  Outcome o;
  const ChannelParams ch{0.2, 0.2, 100.0, 100.0};
  SweepGrid grid;
  grid.rho1 = grid.beta1 = grid.beta2 = grid.lambda1 = grid.lambda2 = ParamAxis::linspace(resolution);
  grid.threads = 0;
  const auto t0 = std::chrono::steady_clock::now();
  const RegionSample pure = sweep_region(ch, Scheme::Pure, grid);
  const RegionSample ts = sweep_region(ch, Scheme::TimeSharing, grid);
  const RegionSample an = sweep_region(ch, Scheme::ArtificialNoise, grid);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

  const auto dirs = quadrant_directions(64);
  const bool an_ts = hull_contains(an.hull, ts.hull, dirs, 1e-9);
  const bool ts_pure = hull_contains(ts.hull, pure.hull, dirs, 1e-9);
  if (!an_ts) o.fail(fmt("%zu-grid: an hull does not contain ts hull", resolution));
  if (!ts_pure) {
    double worst = 0.0, at = 0.0;
    for (const double th : dirs) {
      const double gap = radial_extent(pure.hull, th) - radial_extent(ts.hull, th);
      if (gap > worst) worst = gap, at = th;
    }
    o.fail(fmt("%zu-grid: ts hull does not contain pure hull; largest radial gap %.6g at angle %.4f rad",
               resolution, worst, at));
    for (const auto& pt : pure.points)
      if (!point_in_hull(ts.hull, {pt.rates.r1, pt.rates.r2}, 1e-9))
        o.fail(fmt("  pure point %s = (%.9g, %.9g) lies outside the ts hull",
                   to_string(*pt.params.profile).c_str(), pt.rates.r1, pt.rates.r2));
  }
  const RatePair ff = pure_rates(ch, FW, FW), bb = pure_rates(ch, BW, BW);
  const bool dominated = bb.r1 > ff.r1 && bb.r2 > ff.r2;
  if (!dominated) o.fail("(FW,FW) not dominated by (BW,BW)");
  summary = fmt("%zu^4 grid (%zu an points, %.1f s): an>=ts=%s ts>=pure=%s (FW,FW)<(BW,BW)=%s",
                resolution, an.points.size(), secs, an_ts ? "yes" : "no", ts_pure ? "yes" : "no",
                dominated ? "yes" : "no");
  return o;
}

Outcome region_containment() {
  std::string smoke_summary, full_summary;
  Outcome smoke = region_containment_at(21, smoke_summary);
  Outcome full = region_containment_at(41, full_summary);
  full.detail = full_summary + "; " + smoke_summary;
  return full;
}

Outcome endpoint_best_responses() {
  Outcome o;
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_real_distribution<double> power(0.6, 100.0);
  std::size_t responses = 0, non_endpoint = 0, mismatched = 0, signed_mismatched = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const double p = power(rng);
    const ChannelParams ch{unit(rng), unit(rng), p, p};
    for (const int player : {1, 2})
      for (const double other : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        const BestResponse br = best_response_lambda(ch, player, other, 1001, 1e-9);
        ++responses;
        if (!br.endpoint_attained) {
          ++non_endpoint;
          o.fail(fmt("interior best response: a1=%.17g a2=%.17g P=%.17g player=%d lambda_other=%.2f "
                     "argmax=%.3f..%.3f max=%.12g",
                     ch.alpha1, ch.alpha2, p, player, other, br.argmax.front(), br.argmax.back(),
                     br.max_payoff));
        }
      }
    // Gamma2's corners carry the rate payoffs, so they are compared with the
    // matrix game on the same payoffs.
    const MatrixGame g = build_gamma1(ch);
    const ProfileSet corner = gamma2_corner_ne(ch);
    const ProfileSet gamma1 = pure_ne(g, kDefaultNeTolerance, PayoffMode::Clamped);
    if (corner != gamma1) {
      ++mismatched;
      o.fail(fmt("corner equilibria %s differ from Gamma1 %s at a1=%.17g a2=%.17g P=%.17g",
                 format_profiles(corner).c_str(), format_profiles(gamma1).c_str(), ch.alpha1,
                 ch.alpha2, p));
    }
    signed_mismatched += corner != pure_ne(g);
  }
  o.detail = fmt("%zu best responses, %zu interior; %zu corner-set mismatches (%zu against signed-margin Gamma1)",
                 responses, non_endpoint, mismatched, signed_mismatched);
  return o;
}

Outcome inner_bound_consistency() {
  Outcome o;
  std::mt19937_64 rng(1234);
  const DmAlphabets binary{2, 2, 2, 2, 2, 2, 2, 2};
  double worst_sub = 0.0, worst_fwd = 0.0, worst_chain = 0.0, min_mi = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const FactoredPmf f = oracle::random_factored(rng, binary, trial % 5 == 0 ? 0.2 : 0.0);
    const JointPmf joint = expand_joint(f);
    for (const Profile p : kAllProfiles) {
      const RatePair got = theorem1_bounds(with_strategies(f, p.s1, p.s2));
      const RatePair want = oracle::pure_substitution_bounds(joint, p.s1, p.s2);
      const double err = std::max(std::abs(got.r1 - want.r1), std::abs(got.r2 - want.r2));
      worst_sub = std::max(worst_sub, err);
      if (err > 1e-10) o.fail(fmt("trial %d %s: substitution off by %.3g", trial, to_string(p).c_str(), err));
    }
    FactoredPmf fwd = f;
    fwd.alphabets.v1b = fwd.alphabets.v2b = 1;
    fwd.p_v1b_given_y1 = fwd.p_v2b_given_y2 = {1.0, 1.0};
    const JointPmf fj = expand_joint(fwd);
    const RatePair r = theorem1_bounds(fwd);
    const double e1 = r.r1 - pos_part(oracle::mi(fj, {"v1f"}, {"y1"}) - oracle::mi(fj, {"v1f"}, {"y2"}, {"v2f"}));
    const double e2 = r.r2 - pos_part(oracle::mi(fj, {"v2f"}, {"y2"}) - oracle::mi(fj, {"v2f"}, {"y1"}, {"v1f"}));
    worst_fwd = std::max({worst_fwd, std::abs(e1), std::abs(e2)});
    if (std::max(std::abs(e1), std::abs(e2)) > 1e-10) o.fail(fmt("trial %d: forward-only reduction off", trial));
  }
  for (int trial = 0; trial < 1000; ++trial) {
    const JointPmf p = oracle::random_joint(rng, 4, 3, trial % 4 == 0 ? 0.3 : 0.0);
    const VarList a{"v0"}, b{"v1"}, c{"v2"}, d{"v3"};
    const double i_a_bc = mutual_information(p, a, {"v1", "v2"}, d);
    const double chain = mutual_information(p, a, b, d) + mutual_information(p, a, c, {"v1", "v3"});
    worst_chain = std::max(worst_chain, std::abs(i_a_bc - chain));
    if (std::abs(i_a_bc - chain) > 1e-10) o.fail(fmt("joint %d: chain rule off by %.3g", trial, i_a_bc - chain));
    for (const double v : {oracle::mi(p, a, b), oracle::mi(p, a, b, c), oracle::mi(p, {"v0", "v1"}, d, c)}) {
      min_mi = std::min(min_mi, v);
      if (v < -1e-10) o.fail(fmt("joint %d: negative mutual information %.3g", trial, v));
    }
    if (mutual_information(p, a, b, c) < 0.0) o.fail(fmt("joint %d: clamped value negative", trial));
  }
  o.detail = fmt("substitutions max err %.3g, forward-only max err %.3g, chain rule max err %.3g, min raw MI %.3g",
                 worst_sub, worst_fwd, worst_chain, min_mi);
  return o;
}

Outcome fwfw_iff() {
  Outcome o;
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int used = 0;
  while (used < 500) {
    const double b1 = 0.1 + 0.9 * unit(rng), b2 = 0.1 + 0.9 * unit(rng);
    const double p1 = 1.0 + 99.0 * unit(rng), p2 = 1.0 + 99.0 * unit(rng);
    const double a1 = 0.05 + 0.95 * unit(rng);
    const double a2 = std::sqrt(a1 * a1 * b2 * p2 / (b1 * p1));
    if (a2 > 1.0) continue;
    ++used;
    const ChannelParams ch{a1, a2, p1, p2};
    if (!analytic_ne_conditions(ch, b1, b2).fwfw) o.fail(fmt("analytic test misses equality, draw %d", used));
    if (!pure_ne(build_gamma1(ch, b1, b2)).test(profile_index(kFF)))
      o.fail(fmt("(FW,FW) missing at a1=%.17g a2=%.17g b1=%.17g b2=%.17g P1=%.17g P2=%.17g", a1, a2, b1,
                 b2, p1, p2));
    for (const double scale : {1.0 + 1e-3, 1.0 - 1e-3}) {
      const ChannelParams moved{a1, a2 * std::sqrt(scale), p1, p2};
      if (moved.alpha2 > 1.0) continue;
      if (pure_ne(build_gamma1(moved, b1, b2)).test(profile_index(kFF)))
        o.fail(fmt("(FW,FW) survives relative %.0e perturbation at a1=%.17g a2=%.17g b1=%.17g b2=%.17g "
                   "P1=%.17g P2=%.17g",
                   scale - 1.0, a1, a2, b1, b2, p1, p2));
    }
  }
  o.detail = "500 draws with P in [1, 100], perturbations of +-1e-3";
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

const std::vector<Criterion> kCriteria = {
    {"ne_trichotomy", ne_trichotomy},   {"bwbw_exclusion", bwbw_exclusion},
    {"corner_reductions", corner_reductions}, {"region_containment", region_containment},
    {"endpoint_best_responses", endpoint_best_responses},     {"inner_bound_consistency", inner_bound_consistency},
    {"fwfw_iff", fwfw_iff},
};

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> wanted(argv + 1, argv + argc);
  for (const auto& w : wanted) {
    bool known = false;
    for (const auto& c : kCriteria) known = known || w == c.name;
    if (!known) {
      std::fprintf(stderr, "unknown criterion '%s'; known:", w.c_str());
      for (const auto& c : kCriteria) std::fprintf(stderr, " %s", c.name);
      std::fprintf(stderr, "\n");
      return 2;
    }
  }
  int failures = 0;
  for (const auto& c : kCriteria) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), c.name) == wanted.end()) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    for (const auto& line : o.log) std::printf("  %s\n", line.c_str());
    std::printf("%s %s (%.1f s) %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
