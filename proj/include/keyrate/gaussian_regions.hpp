#pragma once

// Closed-form key rates on the Gaussian interference channel
//   Y1 = X1 + a1 X2 + N1,   Y2 = a2 X1 + X2 + N2,   N_i ~ N(0, 1)
// in the weak-interference regime, for pure strategies, time sharing and
// artificial noise, plus grid sweeps of the achievable region.

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <string_view>
#include <vector>

#include "keyrate/info_math.hpp"
#include "keyrate/region_geometry.hpp"
#include "keyrate/types.hpp"

namespace keyrate {

struct ChannelParams {
  double alpha1 = 0.0;  // cross gain of X2 into receiver 1
  double alpha2 = 0.0;  // cross gain of X1 into receiver 2
  double p1 = 1.0;      // power constraint of BS1 (unit noise variance)
  double p2 = 1.0;

  // Throws DomainError naming the violated invariant:
  // p1, p2 > 0 and alpha_i^2 <= 1.
  void validate() const;
};

/// Both players' secrecy margins before the outer [.]^+ clamp. The game
/// analysis compares these directly; pure_rates() clamps them.
struct RateMargins {
  double m1 = 0.0;
  double m2 = 0.0;

  RatePair clamped() const { return {pos_part(m1), pos_part(m2)}; }
};

// Pure-strategy margins with transmit powers beta_i * P_i. beta = 1 gives the
// plain pure-strategy rows.
RateMargins pure_margins(const ChannelParams& ch, PureStrategy s1, PureStrategy s2,
                         double beta1 = 1.0, double beta2 = 1.0);

RatePair pure_rates(const ChannelParams& ch, PureStrategy s1, PureStrategy s2,
                    double beta1 = 1.0, double beta2 = 1.0);

struct TsParams {
  double rho1 = 0.5;  // slot-1 fraction; slot 2 gets 1 - rho1
  double beta1 = 1.0;
  double beta2 = 1.0;

  void validate() const;
};

// Slot 1: pair 1 forward, pair 2 backward. Slot 2 mirrored. Linear in rho1.
RatePair time_sharing_rates(const ChannelParams& ch, const TsParams& ts);

struct AnParams {
  double beta1 = 1.0;
  double beta2 = 1.0;
  double lambda1 = 0.0;  // fraction of beta1*P1 spent on artificial noise
  double lambda2 = 0.0;

  void validate() const;
};

/// Artificial-noise rates. BS_i sends X_i = V_if + A_i with forward-key power
/// (1 - lambda_i) beta_i P_i and noise power lambda_i beta_i P_i; the noise
/// doubles as backward-phase randomness (V_ib = Y_i). Each pair's rate is the
/// sum of a clamped forward term and a clamped backward term.
RatePair artificial_noise_rates(const ChannelParams& ch, const AnParams& an);

// Per-player forward (A) and backward (B) terms before clamping.
struct AnTerms {
  double forward1 = 0, backward1 = 0;
  double forward2 = 0, backward2 = 0;
};
AnTerms artificial_noise_terms(const ChannelParams& ch, const AnParams& an);

// ---------------------------------------------------------------------------
// Sweeps

enum class Scheme { Pure, TimeSharing, ArtificialNoise };

std::string_view to_string(Scheme s) noexcept;
// Accepts "pure", "ts", "an". Throws DomainError otherwise.
Scheme parse_scheme(std::string_view name);

/// Values taken by one swept parameter.
struct ParamAxis {
  std::vector<double> values;

  // n evenly spaced points on [0, 1]; n >= 2.
  static ParamAxis linspace(std::size_t n);
  static ParamAxis fixed(double v);
};

struct SweepGrid {
  static constexpr std::size_t kDefaultResolution = 41;

  ParamAxis rho1 = ParamAxis::linspace(kDefaultResolution);
  ParamAxis beta1 = ParamAxis::linspace(kDefaultResolution);
  ParamAxis beta2 = ParamAxis::linspace(kDefaultResolution);
  ParamAxis lambda1 = ParamAxis::linspace(kDefaultResolution);
  ParamAxis lambda2 = ParamAxis::linspace(kDefaultResolution);

  std::size_t max_evaluations = 10'000'000;
  std::size_t threads = 1;  // 0 = hardware concurrency

  // Number of rate evaluations for `scheme`.
  std::size_t evaluations(Scheme scheme) const;
};

/// Parameters of one evaluated point. Fields the scheme does not use are NaN
/// (and `profile` is empty outside the pure scheme).
struct ParamRecord {
  static constexpr double kUnused = std::numeric_limits<double>::quiet_NaN();

  double rho1 = kUnused;
  double beta1 = kUnused;
  double beta2 = kUnused;
  double lambda1 = kUnused;
  double lambda2 = kUnused;
  std::optional<Profile> profile;
};

struct RegionPoint {
  ParamRecord params;
  RatePair rates;
  bool on_frontier = false;
};

/// Result of a sweep. `points` holds one entry per evaluated parameter tuple
/// in lexicographic parameter order. `frontier` is the deduplicated set of
/// Pareto-maximal rate pairs sorted by increasing r1; `hull` is the
/// counterclockwise hull of the points plus (0,0), (max r1, 0), (0, max r2).
struct RegionSample {
  Scheme scheme = Scheme::Pure;
  std::vector<RegionPoint> points;
  std::vector<RatePair> frontier;
  std::vector<Point2> hull;
};

// Throws ResourceError if the grid exceeds max_evaluations, DomainError if a
// swept axis has fewer than 2 values or a value lies outside [0, 1].
RegionSample sweep_region(const ChannelParams& ch, Scheme scheme, const SweepGrid& grid);

}  // namespace keyrate
