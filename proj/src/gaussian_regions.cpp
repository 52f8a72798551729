#include "keyrate/gaussian_regions.hpp"

#include <algorithm>
#include <string>

#include "keyrate/errors.hpp"
#include "keyrate/info_math.hpp"
#include "keyrate/parallel.hpp"

namespace keyrate {

namespace {

void require_unit(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError(std::string(name) + " must lie in [0,1], got " + std::to_string(v));
  }
}

// C(a) - C(b) for a, b >= 0.
double cap_gap(double a, double b) { return capacity(a) - capacity(b); }

}  // namespace

void ChannelParams::validate() const {
  if (!(p1 > 0.0) || !std::isfinite(p1)) {
    throw DomainError("p1 must be finite and > 0, got " + std::to_string(p1));
  }
  if (!(p2 > 0.0) || !std::isfinite(p2)) {
    throw DomainError("p2 must be finite and > 0, got " + std::to_string(p2));
  }
  if (!(alpha1 * alpha1 <= 1.0)) {
    throw DomainError("weak interference requires alpha1^2 <= 1, got alpha1 = " +
                      std::to_string(alpha1));
  }
  if (!(alpha2 * alpha2 <= 1.0)) {
    throw DomainError("weak interference requires alpha2^2 <= 1, got alpha2 = " +
                      std::to_string(alpha2));
  }
}

void TsParams::validate() const {
  require_unit(rho1, "rho1");
  require_unit(beta1, "beta1");
  require_unit(beta2, "beta2");
}

void AnParams::validate() const {
  require_unit(beta1, "beta1");
  require_unit(beta2, "beta2");
  require_unit(lambda1, "lambda1");
  require_unit(lambda2, "lambda2");
}

RateMargins pure_margins(const ChannelParams& ch, PureStrategy s1, PureStrategy s2,
                         double beta1, double beta2) {
  ch.validate();
  require_unit(beta1, "beta1");
  require_unit(beta2, "beta2");
  const double q1 = beta1 * ch.p1;
  const double q2 = beta2 * ch.p2;
  const double a1 = ch.alpha1;
  const double a2 = ch.alpha2;
  const double a1s = a1 * a1;
  const double a2s = a2 * a2;

  const double own1 = q1 / (1.0 + a1s * q2);
  const double own2 = q2 / (1.0 + a2s * q1);

  using enum PureStrategy;
  if (s1 == FW && s2 == FW) {
    return {cap_gap(own1, a2s * q1), cap_gap(own2, a1s * q2)};
  }
  if (s1 == FW && s2 == BW) {
    const double leak2 = (a2s * q1 + a1s * q2 * q2 + a1s * a2s * q1 * q2) / (1.0 + q2 + a1s * q2);
    return {cap_gap(own1, a2s * q1 / (1.0 + q2)), cap_gap(own2, leak2)};
  }
  if (s1 == BW && s2 == FW) {
    const double leak1 = (a1s * q2 + a2s * q1 * q1 + a1s * a2s * q1 * q2) / (1.0 + q1 + a2s * q1);
    return {cap_gap(own1, leak1), cap_gap(own2, a1s * q2 / (1.0 + q1))};
  }
  const double cross = a2 * q1 + a1 * q2;
  const double coupling = 1.0 - a1 * a2;
  const double shared = cross * cross / (1.0 + (1.0 + a2s) * q1 + (1.0 + a1s) * q2 +
                                         coupling * coupling * q1 * q2);
  return {cap_gap(own1, shared), cap_gap(own2, shared)};
}

RatePair pure_rates(const ChannelParams& ch, PureStrategy s1, PureStrategy s2, double beta1,
                    double beta2) {
  return pure_margins(ch, s1, s2, beta1, beta2).clamped();
}

RatePair time_sharing_rates(const ChannelParams& ch, const TsParams& ts) {
  ch.validate();
  ts.validate();
  const double q1 = ts.beta1 * ch.p1;
  const double q2 = ts.beta2 * ch.p2;
  const double a1s = ch.alpha1 * ch.alpha1;
  const double a2s = ch.alpha2 * ch.alpha2;
  const double rho2 = 1.0 - ts.rho1;

  const double own1 = q1 / (1.0 + a1s * q2);
  const double own2 = q2 / (1.0 + a2s * q1);

  // Pair 1 transmits its key in slot 1 and recovers one from Y1 in slot 2.
  const double r1_slot1 = pos_part(cap_gap(own1, a2s * q1 / (1.0 + q2)));
  const double r1_slot2 = pos_part(cap_gap(
      own1, (a1s * q2 + a2s * q1 * q1 + a1s * a2s * q1 * q2) / (1.0 + q1 + a2s * q1)));
  const double r2_slot2 = pos_part(cap_gap(own2, a1s * q2 / (1.0 + q1)));
  const double r2_slot1 = pos_part(cap_gap(
      own2, (a2s * q1 + a1s * q2 * q2 + a1s * a2s * q1 * q2) / (1.0 + q2 + a1s * q2)));

  return {ts.rho1 * r1_slot1 + rho2 * r1_slot2, rho2 * r2_slot2 + ts.rho1 * r2_slot1};
}

AnTerms artificial_noise_terms(const ChannelParams& ch, const AnParams& an) {
  ch.validate();
  an.validate();
  const double q1 = an.beta1 * ch.p1;
  const double q2 = an.beta2 * ch.p2;
  const double a1s = ch.alpha1 * ch.alpha1;
  const double a2s = ch.alpha2 * ch.alpha2;
  const double l1 = an.lambda1;
  const double l2 = an.lambda2;
  const double coupling = 1.0 - ch.alpha1 * ch.alpha2;
  const double joint_noise = coupling * coupling * l1 * l2 * q1 * q2;

  AnTerms t;
  t.forward1 = cap_gap((1.0 - l1) * q1 / (1.0 + a1s * q2 + l1 * q1),
                       (1.0 - l1) * a2s * q1 / (1.0 + a2s * l1 * q1 + l2 * q2));
  t.backward1 =
      cap_gap((joint_noise + a1s * l2 * q2 + l1 * q1) / (1.0 + a2s * l1 * q1 + l2 * q2), a1s * q2);
  t.forward2 = cap_gap((1.0 - l2) * q2 / (1.0 + a2s * q1 + l2 * q2),
                       (1.0 - l2) * a1s * q2 / (1.0 + a1s * l2 * q2 + l1 * q1));
  t.backward2 =
      cap_gap((joint_noise + a2s * l1 * q1 + l2 * q2) / (1.0 + a1s * l2 * q2 + l1 * q1), a2s * q1);
  return t;
}

RatePair artificial_noise_rates(const ChannelParams& ch, const AnParams& an) {
  const AnTerms t = artificial_noise_terms(ch, an);
  return {pos_part(t.forward1) + pos_part(t.backward1),
          pos_part(t.forward2) + pos_part(t.backward2)};
}

// ---------------------------------------------------------------------------

std::string_view to_string(Scheme s) noexcept {
  switch (s) {
    case Scheme::Pure:
      return "pure";
    case Scheme::TimeSharing:
      return "ts";
    case Scheme::ArtificialNoise:
      return "an";
  }
  return "?";
}

Scheme parse_scheme(std::string_view name) {
  if (name == "pure") return Scheme::Pure;
  if (name == "ts") return Scheme::TimeSharing;
  if (name == "an") return Scheme::ArtificialNoise;
  throw DomainError("unknown scheme '" + std::string(name) + "' (expected pure, ts or an)");
}

ParamAxis ParamAxis::linspace(std::size_t n) {
  if (n < 2) throw DomainError("grid resolution must be >= 2, got " + std::to_string(n));
  ParamAxis axis;
  axis.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    axis.values[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return axis;
}

ParamAxis ParamAxis::fixed(double v) { return ParamAxis{{v}}; }

std::size_t SweepGrid::evaluations(Scheme scheme) const {
  switch (scheme) {
    case Scheme::Pure:
      return 4;
    case Scheme::TimeSharing:
      return rho1.values.size() * beta1.values.size() * beta2.values.size();
    case Scheme::ArtificialNoise:
      return beta1.values.size() * beta2.values.size() * lambda1.values.size() *
             lambda2.values.size();
  }
  return 0;
}

namespace {

void check_axis(const ParamAxis& axis, const char* name) {
  if (axis.values.empty()) throw DomainError(std::string(name) + " axis is empty");
  for (double v : axis.values) require_unit(v, name);
}

// Pure scheme: beta from a fixed axis, else full power.
double pure_beta(const ParamAxis& axis) { return axis.values.size() == 1 ? axis.values[0] : 1.0; }

RatePair evaluate(const ChannelParams& ch, Scheme scheme, const ParamRecord& rec) {
  switch (scheme) {
    case Scheme::Pure:
      return pure_rates(ch, rec.profile->s1, rec.profile->s2, rec.beta1, rec.beta2);
    case Scheme::TimeSharing:
      return time_sharing_rates(ch, {rec.rho1, rec.beta1, rec.beta2});
    case Scheme::ArtificialNoise:
      return artificial_noise_rates(ch, {rec.beta1, rec.beta2, rec.lambda1, rec.lambda2});
  }
  return {};
}

// Parameter tuple of the flat index `i`, last axis fastest.
ParamRecord record_at(Scheme scheme, const SweepGrid& g, std::size_t i) {
  ParamRecord rec;
  auto take = [&i](const ParamAxis& axis) {
    const std::size_t n = axis.values.size();
    const double v = axis.values[i % n];
    i /= n;
    return v;
  };
  switch (scheme) {
    case Scheme::Pure:
      rec.profile = kAllProfiles[i];
      rec.beta1 = pure_beta(g.beta1);
      rec.beta2 = pure_beta(g.beta2);
      break;
    case Scheme::TimeSharing:
      rec.beta2 = take(g.beta2);
      rec.beta1 = take(g.beta1);
      rec.rho1 = take(g.rho1);
      break;
    case Scheme::ArtificialNoise:
      rec.lambda2 = take(g.lambda2);
      rec.lambda1 = take(g.lambda1);
      rec.beta2 = take(g.beta2);
      rec.beta1 = take(g.beta1);
      break;
  }
  return rec;
}

}  // namespace

RegionSample sweep_region(const ChannelParams& ch, Scheme scheme, const SweepGrid& grid) {
  ch.validate();
  switch (scheme) {
    case Scheme::Pure:
      check_axis(grid.beta1, "beta1");
      check_axis(grid.beta2, "beta2");
      break;
    case Scheme::TimeSharing:
      check_axis(grid.rho1, "rho1");
      check_axis(grid.beta1, "beta1");
      check_axis(grid.beta2, "beta2");
      break;
    case Scheme::ArtificialNoise:
      check_axis(grid.beta1, "beta1");
      check_axis(grid.beta2, "beta2");
      check_axis(grid.lambda1, "lambda1");
      check_axis(grid.lambda2, "lambda2");
      break;
  }
  const std::size_t n = grid.evaluations(scheme);
  if (n > grid.max_evaluations) {
    throw ResourceError("sweep needs " + std::to_string(n) + " evaluations, cap is " +
                        std::to_string(grid.max_evaluations));
  }

  RegionSample sample;
  sample.scheme = scheme;
  sample.points.resize(n);
  parallel_for(n, grid.threads, [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      RegionPoint& pt = sample.points[i];
      pt.params = record_at(scheme, grid, i);
      pt.rates = evaluate(ch, scheme, pt.params);
    }
  });

  std::vector<Point2> cloud;
  cloud.reserve(n);
  for (const auto& pt : sample.points) cloud.push_back({pt.rates.r1, pt.rates.r2});

  const std::vector<Point2> frontier = pareto_frontier(cloud);
  sample.frontier.reserve(frontier.size());
  for (const auto& p : frontier) sample.frontier.push_back({p.x, p.y});

  // A point is on the frontier when it coincides (within tolerance) with a
  // frontier pair; frontier is sorted by x, so search by x.
  for (auto& pt : sample.points) {
    const Point2 q{pt.rates.r1, pt.rates.r2};
    auto it = std::lower_bound(frontier.begin(), frontier.end(), q.x - kDominanceTolerance,
                               [](const Point2& p, double x) { return p.x < x; });
    for (; it != frontier.end() && it->x <= q.x + kDominanceTolerance; ++it) {
      if (std::abs(it->y - q.y) <= kDominanceTolerance) {
        pt.on_frontier = true;
        break;
      }
    }
  }

  sample.hull = achievable_hull(cloud);
  return sample;
}

}  // namespace keyrate
