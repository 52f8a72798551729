#include "keyrate/game.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "keyrate/errors.hpp"
#include "keyrate/parallel.hpp"

namespace keyrate {

namespace {

// x <= y up to a relative rounding slack.
bool leq(double x, double y) {
  return x <= y + 1e-12 * std::max({std::abs(x), std::abs(y), 1e-300});
}

bool near_equal(double x, double y) { return leq(x, y) && leq(y, x); }

double player_value(const MatrixGame& g, Profile p, int player, PayoffMode mode) {
  if (mode == PayoffMode::Signed) {
    const RateMargins& m = g.margin(p);
    return player == 1 ? m.m1 : m.m2;
  }
  const RatePair& r = g.payoff(p);
  return player == 1 ? r.r1 : r.r2;
}

// Generic 2x2 weak-NE enumeration over a value table indexed by profile.
template <typename Value>
ProfileSet enumerate_ne(Value&& value, double tol) {
  ProfileSet out;
  for (const Profile p : kAllProfiles) {
    const Profile dev1{other(p.s1), p.s2};
    const Profile dev2{p.s1, other(p.s2)};
    const bool stable1 = value(p, 1) >= value(dev1, 1) - tol;
    const bool stable2 = value(p, 2) >= value(dev2, 2) - tol;
    if (stable1 && stable2) out.set(profile_index(p));
  }
  return out;
}

}  // namespace

std::string_view to_string(PayoffMode m) noexcept {
  return m == PayoffMode::Signed ? "signed" : "clamped";
}

PayoffMode parse_payoff_mode(std::string_view name) {
  if (name == "signed") return PayoffMode::Signed;
  if (name == "clamped") return PayoffMode::Clamped;
  throw DomainError("unknown payoff mode '" + std::string(name) +
                    "' (expected signed or clamped)");
}

MatrixGame build_gamma1(const ChannelParams& ch, double beta1, double beta2) {
  MatrixGame g;
  g.channel = ch;
  g.beta1 = beta1;
  g.beta2 = beta2;
  for (const Profile p : kAllProfiles) {
    const RateMargins m = pure_margins(ch, p.s1, p.s2, beta1, beta2);
    g.margins[profile_index(p)] = m;
    g.payoffs[profile_index(p)] = m.clamped();
  }
  return g;
}

std::vector<Profile> profiles_in(ProfileSet set) {
  std::vector<Profile> out;
  for (const Profile p : kAllProfiles) {
    if (set.test(profile_index(p))) out.push_back(p);
  }
  return out;
}

std::string format_profiles(ProfileSet set) {
  std::string out = "{";
  for (const Profile p : profiles_in(set)) {
    if (out.size() > 1) out += ",";
    out += to_string(p);
  }
  return out + "}";
}

ProfileSet pure_ne(const MatrixGame& g, double tol, PayoffMode mode) {
  if (!(tol >= 0.0)) throw DomainError("NE tolerance must be >= 0");
  return enumerate_ne([&](Profile p, int player) { return player_value(g, p, player, mode); },
                      tol);
}

double lambda_big(double alpha1, double alpha2, double p) {
  const double sum = alpha1 + alpha2;
  const double coupling = 1.0 - alpha1 * alpha2;
  return p * p * sum * sum /
         (1.0 + (1.0 + alpha2 * alpha2) * p + (1.0 + alpha1 * alpha1) * p +
          coupling * coupling * p * p);
}

std::string_view to_string(AnalyticClass c) noexcept {
  switch (c) {
    case AnalyticClass::DiagThreeNe:
      return "diag_three_ne";
    case AnalyticClass::FwBwUnique:
      return "fwbw_unique";
    case AnalyticClass::BwFwUnique:
      return "bwfw_unique";
    case AnalyticClass::LowSnrOther:
      return "low_snr_other";
    case AnalyticClass::NotClassified:
      return "not_classified";
  }
  return "?";
}

std::optional<ProfileSet> AnalyticConditions::predicted() const {
  if (!equal_power) return std::nullopt;
  ProfileSet s;
  s.set(profile_index({PureStrategy::FW, PureStrategy::FW}), fwfw);
  s.set(profile_index({PureStrategy::FW, PureStrategy::BW}), fwbw.value_or(false));
  s.set(profile_index({PureStrategy::BW, PureStrategy::FW}), bwfw.value_or(false));
  s.set(profile_index({PureStrategy::BW, PureStrategy::BW}), bwbw.value_or(false));
  return s;
}

AnalyticConditions analytic_ne_conditions(const ChannelParams& ch, double beta1, double beta2) {
  ch.validate();
  TsParams{0.0, beta1, beta2}.validate();  // beta range check
  const double a1s = ch.alpha1 * ch.alpha1;
  const double a2s = ch.alpha2 * ch.alpha2;

  AnalyticConditions c;
  c.fwfw = near_equal(a2s * beta1 * ch.p1, a1s * beta2 * ch.p2);
  c.equal_power = beta1 == beta2 && ch.p1 == ch.p2;
  if (!c.equal_power) return c;

  const double p = beta1 * ch.p1;
  c.effective_power = p;
  c.lambda1 = lambda_big(ch.alpha1, ch.alpha2, p);
  const double snr_factor = p / (1.0 + p);
  c.bwbw_threshold = std::min(a1s, a2s) * snr_factor;
  c.fwbw_threshold = a2s * snr_factor;
  c.bwfw_threshold = a1s * snr_factor;
  c.bwbw = leq(c.lambda1, c.bwbw_threshold);
  c.fwbw = leq(c.fwbw_threshold, c.lambda1) && leq(a2s, a1s);
  c.bwfw = leq(c.bwfw_threshold, c.lambda1) && leq(a1s, a2s);

  const bool in_unit_square =
      ch.alpha1 >= 0.0 && ch.alpha1 <= 1.0 && ch.alpha2 >= 0.0 && ch.alpha2 <= 1.0;
  if (!in_unit_square || beta1 == 0.0) {
    c.analytic_class = AnalyticClass::NotClassified;
  } else if (!(p > 0.5)) {
    c.analytic_class = AnalyticClass::LowSnrOther;
  } else if (near_equal(ch.alpha1, ch.alpha2)) {
    c.analytic_class = AnalyticClass::DiagThreeNe;
  } else if (ch.alpha1 > ch.alpha2) {
    c.analytic_class = AnalyticClass::FwBwUnique;
  } else {
    c.analytic_class = AnalyticClass::BwFwUnique;
  }
  return c;
}

NeReport analyze_gamma1(const ChannelParams& ch, double beta1, double beta2, double tol,
                        PayoffMode mode) {
  NeReport r;
  r.tie_tolerance = tol;
  r.mode = mode;
  r.equilibria = pure_ne(build_gamma1(ch, beta1, beta2), tol, mode);
  r.analytic = analytic_ne_conditions(ch, beta1, beta2);
  // The closed forms describe the unclamped comparison, so clamped-mode maps
  // disagree wherever both margins of a player are negative.
  if (const auto predicted = r.analytic.predicted()) {
    r.agree = *predicted == r.equilibria;
  }
  r.all_tie = r.equilibria.all();
  return r;
}

RatePair gamma2_payoffs(const ChannelParams& ch, double lambda1, double lambda2) {
  return artificial_noise_rates(ch, {1.0, 1.0, lambda1, lambda2});
}

BestResponse best_response_lambda(const ChannelParams& ch, int player, double lambda_other,
                                  std::size_t grid_n, double tol) {
  if (player != 1 && player != 2) throw DomainError("player must be 1 or 2");
  if (grid_n < 11) throw DomainError("best-response grid needs >= 11 points");
  const ParamAxis grid = ParamAxis::linspace(grid_n);

  std::vector<double> values(grid_n);
  for (std::size_t i = 0; i < grid_n; ++i) {
    const double own = grid.values[i];
    values[i] = player == 1 ? gamma2_payoffs(ch, own, lambda_other).r1
                            : gamma2_payoffs(ch, lambda_other, own).r2;
  }
  BestResponse br;
  br.max_payoff = *std::max_element(values.begin(), values.end());
  for (std::size_t i = 0; i < grid_n; ++i) {
    if (values[i] >= br.max_payoff - tol) br.argmax.push_back(grid.values[i]);
  }
  br.endpoint_attained = values.front() >= br.max_payoff - tol ||
                         values.back() >= br.max_payoff - tol;
  return br;
}

ProfileSet gamma2_corner_ne(const ChannelParams& ch, double tol) {
  std::array<RatePair, 4> table{};
  for (const Profile p : kAllProfiles) {
    table[profile_index(p)] = gamma2_payoffs(ch, p.s1 == PureStrategy::BW ? 1.0 : 0.0,
                                             p.s2 == PureStrategy::BW ? 1.0 : 0.0);
  }
  return enumerate_ne(
      [&](Profile p, int player) {
        const RatePair& r = table[profile_index(p)];
        return player == 1 ? r.r1 : r.r2;
      },
      tol);
}

std::vector<NeMapCell> ne_map(double p, std::size_t grid_n, double tol, PayoffMode mode,
                              std::size_t threads) {
  if (grid_n < 3) throw DomainError("NE map grid needs >= 3 points per axis");
  const ParamAxis axis = ParamAxis::linspace(grid_n);
  std::vector<NeMapCell> cells(grid_n * grid_n);
  parallel_for(cells.size(), threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      NeMapCell& cell = cells[k];
      cell.alpha1 = axis.values[k / grid_n];
      cell.alpha2 = axis.values[k % grid_n];
      cell.report = analyze_gamma1({cell.alpha1, cell.alpha2, p, p}, 1.0, 1.0, tol, mode);
    }
  });
  return cells;
}

}  // namespace keyrate
