#include "keyrate/dm_inner_bound.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "keyrate/errors.hpp"

namespace keyrate {

namespace {

void check_table(const std::vector<double>& table, std::size_t rows, std::size_t cols,
                 const char* name) {
  if (table.size() != rows * cols) {
    throw DomainError(std::string(name) + ": expected " + std::to_string(rows * cols) +
                      " entries, got " + std::to_string(table.size()));
  }
  for (std::size_t r = 0; r < rows; ++r) {
    double sum = 0.0;
    for (std::size_t c = 0; c < cols; ++c) {
      const double v = table[r * cols + c];
      if (!(v >= 0.0 && v <= 1.0)) {
        throw DomainError(std::string(name) + ": row " + std::to_string(r) + " has entry " +
                          std::to_string(v) + " outside [0,1]");
      }
      sum += v;
    }
    if (std::abs(sum - 1.0) > FactoredPmf::kRowTolerance) {
      throw DomainError(std::string(name) + ": row " + std::to_string(r) + " sums to " +
                        std::to_string(sum));
    }
  }
}

std::size_t checked_product(const DmAlphabets& a, std::size_t cap) {
  const std::size_t sizes[] = {a.v1f, a.v2f, a.x1, a.x2, a.y1, a.y2, a.v1b, a.v2b};
  std::size_t total = 1;
  for (std::size_t s : sizes) {
    if (s == 0) throw DomainError("alphabet sizes must be positive");
    if (total > cap / s) {
      throw ResourceError("joint table exceeds the cap of " + std::to_string(cap) + " entries");
    }
    total *= s;
  }
  return total;
}

std::vector<double> identity_table(std::size_t n) {
  std::vector<double> t(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) t[i * n + i] = 1.0;
  return t;
}

std::vector<double> input_marginal(const std::vector<double>& prior,
                                   const std::vector<double>& encoder, std::size_t nx) {
  std::vector<double> px(nx, 0.0);
  for (std::size_t v = 0; v < prior.size(); ++v) {
    for (std::size_t x = 0; x < nx; ++x) px[x] += prior[v] * encoder[v * nx + x];
  }
  return px;
}

}  // namespace

void FactoredPmf::validate() const {
  const auto& a = alphabets;
  checked_product(a, std::numeric_limits<std::size_t>::max());
  check_table(p_v1f, 1, a.v1f, "p_v1f");
  check_table(p_v2f, 1, a.v2f, "p_v2f");
  check_table(p_x1_given_v1f, a.v1f, a.x1, "p_x1_given_v1f");
  check_table(p_x2_given_v2f, a.v2f, a.x2, "p_x2_given_v2f");
  check_table(p_y_given_x, a.x1 * a.x2, a.y1 * a.y2, "p_y_given_x");
  check_table(p_v1b_given_y1, a.y1, a.v1b, "p_v1b_given_y1");
  check_table(p_v2b_given_y2, a.y2, a.v2b, "p_v2b_given_y2");
}

JointPmf expand_joint(const FactoredPmf& f, std::size_t max_entries) {
  f.validate();
  const auto& a = f.alphabets;
  const std::size_t total = checked_product(a, max_entries);

  std::vector<double> probs;
  probs.reserve(total);
  for (std::size_t v1f = 0; v1f < a.v1f; ++v1f)
    for (std::size_t v2f = 0; v2f < a.v2f; ++v2f)
      for (std::size_t x1 = 0; x1 < a.x1; ++x1)
        for (std::size_t x2 = 0; x2 < a.x2; ++x2) {
          const double head = f.p_v1f[v1f] * f.p_v2f[v2f] * f.p_x1_given_v1f[v1f * a.x1 + x1] *
                              f.p_x2_given_v2f[v2f * a.x2 + x2];
          const std::size_t channel_row = (x1 * a.x2 + x2) * a.y1 * a.y2;
          for (std::size_t y1 = 0; y1 < a.y1; ++y1)
            for (std::size_t y2 = 0; y2 < a.y2; ++y2) {
              const double mid = head * f.p_y_given_x[channel_row + y1 * a.y2 + y2];
              for (std::size_t v1b = 0; v1b < a.v1b; ++v1b)
                for (std::size_t v2b = 0; v2b < a.v2b; ++v2b)
                  probs.push_back(mid * f.p_v1b_given_y1[y1 * a.v1b + v1b] *
                                  f.p_v2b_given_y2[y2 * a.v2b + v2b]);
            }
        }

  return JointPmf(kDmVariables, {a.v1f, a.v2f, a.x1, a.x2, a.y1, a.y2, a.v1b, a.v2b},
                  std::move(probs), 1e-10);
}

RatePair InnerBoundTerms::rates() const {
  return {pos_part(fwd1_gain - fwd1_leak) + pos_part(bwd1_gain - bwd1_leak),
          pos_part(fwd2_gain - fwd2_leak) + pos_part(bwd2_gain - bwd2_leak)};
}

double forward_leakage_2(const JointPmf& joint) {
  return mutual_information(joint, {"v2f"}, {"y1"}, {"v1f"});
}

InnerBoundTerms inner_bound_terms(const JointPmf& joint) {
  InnerBoundTerms t;
  t.fwd1_gain = mutual_information(joint, {"v1f"}, {"y1"});
  t.fwd1_leak = mutual_information(joint, {"v1f"}, {"y2"}, {"v2f"});
  t.bwd1_gain = mutual_information(joint, {"v1b"}, {"x1"}, {"v1f"});
  t.bwd1_leak = mutual_information(joint, {"v1b"}, {"y2", "v2f"}, {"v1f"});
  t.fwd2_gain = mutual_information(joint, {"v2f"}, {"y2"});
  t.fwd2_leak = forward_leakage_2(joint);
  t.bwd2_gain = mutual_information(joint, {"v2b"}, {"x2"}, {"v2f"});
  t.bwd2_leak = mutual_information(joint, {"v2b"}, {"y1", "v1f"}, {"v2f"});
  return t;
}

InnerBoundTerms inner_bound_terms(const FactoredPmf& f) {
  return inner_bound_terms(expand_joint(f));
}

RatePair theorem1_bounds(const FactoredPmf& f) { return inner_bound_terms(f).rates(); }

RatePair pure_strategy_dm_bounds(const FactoredPmf& f, PureStrategy s1, PureStrategy s2) {
  const JointPmf io = marginalize(expand_joint(f), {"x1", "x2", "y1", "y2"});
  const double gain1 = mutual_information(io, {"x1"}, {"y1"});
  const double gain2 = mutual_information(io, {"x2"}, {"y2"});

  double leak1 = 0.0;
  double leak2 = 0.0;
  using enum PureStrategy;
  if (s1 == FW && s2 == FW) {
    leak1 = mutual_information(io, {"x1"}, {"y2", "x2"});
    leak2 = mutual_information(io, {"x2"}, {"y1", "x1"});
  } else if (s1 == FW && s2 == BW) {
    leak1 = mutual_information(io, {"x1"}, {"y2"});
    leak2 = mutual_information(io, {"y2"}, {"y1", "x1"});
  } else if (s1 == BW && s2 == FW) {
    leak1 = mutual_information(io, {"y1"}, {"y2", "x2"});
    leak2 = mutual_information(io, {"x2"}, {"y1"});
  } else {
    leak1 = mutual_information(io, {"y1"}, {"y2"});
    leak2 = leak1;
  }
  return {pos_part(gain1 - leak1), pos_part(gain2 - leak2)};
}

std::vector<double> input_marginal_x1(const FactoredPmf& f) {
  return input_marginal(f.p_v1f, f.p_x1_given_v1f, f.alphabets.x1);
}

std::vector<double> input_marginal_x2(const FactoredPmf& f) {
  return input_marginal(f.p_v2f, f.p_x2_given_v2f, f.alphabets.x2);
}

FactoredPmf with_strategies(const FactoredPmf& f, PureStrategy s1, PureStrategy s2) {
  f.validate();
  FactoredPmf out;
  out.alphabets = f.alphabets;
  out.p_y_given_x = f.p_y_given_x;
  auto& a = out.alphabets;

  const auto px1 = input_marginal_x1(f);
  const auto px2 = input_marginal_x2(f);

  if (s1 == PureStrategy::FW) {
    a.v1f = a.x1;
    out.p_v1f = px1;
    out.p_x1_given_v1f = identity_table(a.x1);
    a.v1b = 1;
    out.p_v1b_given_y1.assign(a.y1, 1.0);
  } else {
    a.v1f = 1;
    out.p_v1f = {1.0};
    out.p_x1_given_v1f = px1;
    a.v1b = a.y1;
    out.p_v1b_given_y1 = identity_table(a.y1);
  }

  if (s2 == PureStrategy::FW) {
    a.v2f = a.x2;
    out.p_v2f = px2;
    out.p_x2_given_v2f = identity_table(a.x2);
    a.v2b = 1;
    out.p_v2b_given_y2.assign(a.y2, 1.0);
  } else {
    a.v2f = 1;
    out.p_v2f = {1.0};
    out.p_x2_given_v2f = px2;
    a.v2b = a.y2;
    out.p_v2b_given_y2 = identity_table(a.y2);
  }
  return out;
}

}  // namespace keyrate
