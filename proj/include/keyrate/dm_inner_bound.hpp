#pragma once

// Achievable key-rate bounds on a discrete-memoryless interference channel
// with a public feedback channel, evaluated exactly on finite alphabets.
//
// The joint law is restricted to the factored form
//   p(v1f) p(v2f) p(x1|v1f) p(x2|v2f) p(y1,y2|x1,x2) p(v1b|y1) p(v2b|y2)
// where v1f/v2f drive the forward wiretap codes and v1b/v2b are the users'
// backward (public-channel) auxiliaries. An absent auxiliary is a size-1
// alphabet.

#include <cstddef>
#include <vector>

#include "keyrate/info_math.hpp"
#include "keyrate/types.hpp"

namespace keyrate {

struct DmAlphabets {
  std::size_t v1f = 1, v2f = 1, x1 = 1, x2 = 1, y1 = 1, y2 = 1, v1b = 1, v2b = 1;
};

/// Factored distribution. Tables are flat and row-major in the index order
/// given next to each member; conditioning indices come first.
struct FactoredPmf {
  static constexpr double kRowTolerance = 1e-12;

  DmAlphabets alphabets;
  std::vector<double> p_v1f;           // [v1f]
  std::vector<double> p_v2f;           // [v2f]
  std::vector<double> p_x1_given_v1f;  // [v1f][x1]
  std::vector<double> p_x2_given_v2f;  // [v2f][x2]
  std::vector<double> p_y_given_x;     // [x1][x2][y1][y2]
  std::vector<double> p_v1b_given_y1;  // [y1][v1b]
  std::vector<double> p_v2b_given_y2;  // [y2][v2b]

  // Throws DomainError naming the offending factor and row.
  void validate() const;
};

// Variable labels of the expanded joint, in table order.
inline const VarList kDmVariables = {"v1f", "v2f", "x1", "x2", "y1", "y2", "v1b", "v2b"};

inline constexpr std::size_t kDefaultJointCap = 10'000'000;

// Dense joint over kDmVariables. Throws ResourceError when the product of the
// alphabet sizes exceeds `max_entries`.
JointPmf expand_joint(const FactoredPmf& f, std::size_t max_entries = kDefaultJointCap);

/// The eight mutual-information terms of the inner bound, before clamping.
///   r1 = [fwd1_gain - fwd1_leak]^+ + [bwd1_gain - bwd1_leak]^+
///   r2 = [fwd2_gain - fwd2_leak]^+ + [bwd2_gain - bwd2_leak]^+
struct InnerBoundTerms {
  double fwd1_gain = 0;  // I(V1f;Y1)
  double fwd1_leak = 0;  // I(V1f;Y2|V2f)
  double bwd1_gain = 0;  // I(V1b;X1|V1f)
  double bwd1_leak = 0;  // I(V1b;Y2,V2f|V1f)
  double fwd2_gain = 0;  // I(V2f;Y2)
  double fwd2_leak = 0;  // I(V2f;Y1|V1f), see forward_leakage_2
  double bwd2_gain = 0;  // I(V2b;X2|V2f)
  double bwd2_leak = 0;  // I(V2b;Y1,V1f|V2f)

  RatePair rates() const;
};

// Pair 2's forward leakage term. Read as the conditional I(V2f;Y1|V1f),
// mirroring pair 1; kept separate so the alternative I(V2f;Y1,V1f) is a
// one-line change.
double forward_leakage_2(const JointPmf& joint);

InnerBoundTerms inner_bound_terms(const JointPmf& joint);
InnerBoundTerms inner_bound_terms(const FactoredPmf& f);

RatePair theorem1_bounds(const FactoredPmf& f);

/// Pure-strategy bounds computed directly from channel inputs and outputs of
/// the expanded joint (the auxiliaries of `f` are marginalized away):
///   (FW,FW): [I(X1;Y1) - I(X1;Y2,X2)]^+,  [I(X2;Y2) - I(X2;Y1,X1)]^+
///   (FW,BW): [I(X1;Y1) - I(X1;Y2)]^+,     [I(X2;Y2) - I(Y2;Y1,X1)]^+
///   (BW,FW): [I(X1;Y1) - I(Y1;Y2,X2)]^+,  [I(X2;Y2) - I(X2;Y1)]^+
///   (BW,BW): [I(X1;Y1) - I(Y1;Y2)]^+,     [I(X2;Y2) - I(Y2;Y1)]^+
RatePair pure_strategy_dm_bounds(const FactoredPmf& f, PureStrategy s1, PureStrategy s2);

/// Rewrites `f` so that pair i plays the pure strategy s_i:
///   FW: V_if = X_i (identity encoder), V_ib constant;
///   BW: V_if constant, V_ib = Y_i (identity).
/// The input law p(x1) p(x2) p(y1,y2|x1,x2) is preserved.
FactoredPmf with_strategies(const FactoredPmf& f, PureStrategy s1, PureStrategy s2);

// The input marginals p(x1), p(x2) induced by f.
std::vector<double> input_marginal_x1(const FactoredPmf& f);
std::vector<double> input_marginal_x2(const FactoredPmf& f);

}  // namespace keyrate
