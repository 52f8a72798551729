#pragma once

// Non-cooperative key-rate games between the two BS-user pairs.
//
// Gamma1: 2x2 matrix game over {FW, BW} with pure-strategy payoffs.
// Gamma2: continuous game over the artificial-noise splits
//         (lambda1, lambda2) in [0,1]^2 at full power.

#include <array>
#include <bitset>
#include <optional>
#include <string_view>
#include <vector>

#include "keyrate/gaussian_regions.hpp"
#include "keyrate/types.hpp"

namespace keyrate {

inline constexpr double kDefaultNeTolerance = 1e-9;

/// Which payoff a player compares when checking deviations.
///
/// Signed compares the secrecy margins before the [.]^+ clamp. Clamped
/// compares the achievable rates themselves; whenever both of a player's
/// margins are negative the two strategies tie at rate 0, which turns large
/// parts of the high-interference corner into multi-equilibrium cells.
enum class PayoffMode { Signed, Clamped };

std::string_view to_string(PayoffMode m) noexcept;
PayoffMode parse_payoff_mode(std::string_view name);

struct MatrixGame {
  ChannelParams channel;
  double beta1 = 1.0;
  double beta2 = 1.0;
  // Indexed by profile_index().
  std::array<RateMargins, 4> margins{};
  std::array<RatePair, 4> payoffs{};

  const RatePair& payoff(Profile p) const { return payoffs[profile_index(p)]; }
  const RateMargins& margin(Profile p) const { return margins[profile_index(p)]; }
};

MatrixGame build_gamma1(const ChannelParams& ch, double beta1 = 1.0, double beta2 = 1.0);

// Membership flags indexed by profile_index().
using ProfileSet = std::bitset<4>;

std::vector<Profile> profiles_in(ProfileSet set);
std::string format_profiles(ProfileSet set);

// Weak-inequality pure Nash equilibria: no unilateral deviation improves a
// player's payoff by more than `tol`.
ProfileSet pure_ne(const MatrixGame& g, double tol = kDefaultNeTolerance,
                   PayoffMode mode = PayoffMode::Signed);

// Leakage argument of (BW,BW) in the equal-power game:
//   P^2 (a1 + a2)^2 / (1 + (1 + a2^2) P + (1 + a1^2) P + (1 - a1 a2)^2 P^2)
double lambda_big(double alpha1, double alpha2, double p);

enum class AnalyticClass { DiagThreeNe, FwBwUnique, BwFwUnique, LowSnrOther, NotClassified };

std::string_view to_string(AnalyticClass c) noexcept;

/// Closed-form equilibrium conditions of Gamma1.
///
/// The (FW,FW) test holds for any powers. The remaining tests and the
/// classification need beta1 = beta2 and p1 = p2; outside that regime
/// `equal_power` is false, those tests are unset and the class is
/// NotClassified.
struct AnalyticConditions {
  bool equal_power = false;
  double effective_power = 0.0;  // beta * P in the equal-power regime

  bool fwfw = false;  // a2^2 beta1 P1 == a1^2 beta2 P2 (relative 1e-12)
  std::optional<bool> bwbw;  // Lambda1 <= min(a1^2, a2^2) P / (1 + P)
  std::optional<bool> fwbw;  // a2^2 P / (1 + P) <= Lambda1 and a2 <= a1
  std::optional<bool> bwfw;  // a1^2 P / (1 + P) <= Lambda1 and a1 <= a2

  double lambda1 = 0.0;
  double bwbw_threshold = 0.0;  // min(a1^2, a2^2) P / (1 + P)
  double fwbw_threshold = 0.0;  // a2^2 P / (1 + P)
  double bwfw_threshold = 0.0;  // a1^2 P / (1 + P)

  AnalyticClass analytic_class = AnalyticClass::NotClassified;

  // Profiles the condition tests admit; empty optional outside equal power.
  std::optional<ProfileSet> predicted() const;
};

AnalyticConditions analytic_ne_conditions(const ChannelParams& ch, double beta1 = 1.0,
                                          double beta2 = 1.0);

struct NeReport {
  ProfileSet equilibria;
  double tie_tolerance = kDefaultNeTolerance;
  PayoffMode mode = PayoffMode::Signed;
  AnalyticConditions analytic;
  // Enumeration equals the analytic prediction (only in the equal-power regime).
  std::optional<bool> agree;
  // Every profile is an equilibrium (e.g. no interference at all).
  bool all_tie = false;
};

NeReport analyze_gamma1(const ChannelParams& ch, double beta1 = 1.0, double beta2 = 1.0,
                        double tol = kDefaultNeTolerance, PayoffMode mode = PayoffMode::Signed);

// Artificial-noise rates at beta1 = beta2 = 1.
RatePair gamma2_payoffs(const ChannelParams& ch, double lambda1, double lambda2);

struct BestResponse {
  std::vector<double> argmax;  // grid maximizers within 1e-9 of the maximum
  double max_payoff = 0.0;
  bool endpoint_attained = false;  // 0 or 1 is among the maximizers
};

// Grid search of player `player`'s (1 or 2) Gamma2 payoff over its own
// lambda on `grid_n` >= 11 evenly spaced points, opponent fixed.
BestResponse best_response_lambda(const ChannelParams& ch, int player, double lambda_other,
                                  std::size_t grid_n = 1001, double tol = 1e-9);

// Pure equilibria of Gamma2 restricted to lambda in {0,1}^2 (0 = FW, 1 = BW).
ProfileSet gamma2_corner_ne(const ChannelParams& ch, double tol = kDefaultNeTolerance);

struct NeMapCell {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  NeReport report;
};

// Row-major over alpha1 (outer) and alpha2 (inner), each on grid_n >= 3
// evenly spaced points of [0,1]; beta1 = beta2 = 1, p1 = p2 = p.
std::vector<NeMapCell> ne_map(double p, std::size_t grid_n, double tol = kDefaultNeTolerance,
                              PayoffMode mode = PayoffMode::Signed, std::size_t threads = 1);

}  // namespace keyrate
