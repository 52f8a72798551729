#pragma once

// Scalar capacity function, positive-part clamp and exact entropy / mutual
// information on dense finite joint distributions. All quantities are in bits.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace keyrate {

// 1/2 log2(1 + x). Throws DomainError for negative or non-finite x.
double capacity(double x);

// max(x, 0).
constexpr double pos_part(double x) noexcept { return x > 0.0 ? x : 0.0; }

using VarList = std::vector<std::string>;

/// Dense joint probability table over named finite-alphabet variables.
///
/// Entries are stored row-major: the last variable varies fastest. The
/// constructor validates that the table has prod(alphabet_sizes) entries, that
/// every entry is nonnegative and that the total mass is 1 within 1e-12.
class JointPmf {
 public:
  static constexpr double kSumTolerance = 1e-12;

  JointPmf(VarList names, std::vector<std::size_t> alphabet_sizes,
           std::vector<double> probabilities);

  // Skips the normalization check; used for tables built by exact
  // summation of already-validated factors, where `sum_tolerance` is looser.
  JointPmf(VarList names, std::vector<std::size_t> alphabet_sizes,
           std::vector<double> probabilities, double sum_tolerance);

  const VarList& names() const noexcept { return names_; }
  const std::vector<std::size_t>& alphabet_sizes() const noexcept { return sizes_; }
  const std::vector<double>& probabilities() const noexcept { return probs_; }
  std::size_t num_variables() const noexcept { return names_.size(); }
  std::size_t size() const noexcept { return probs_.size(); }

  // Position of `name` in names(); throws DomainError for unknown labels.
  std::size_t index_of(const std::string& name) const;

  // Probability at a full assignment (one symbol per variable).
  double at(std::span<const std::size_t> symbols) const;

 private:
  void validate(double sum_tolerance) const;

  VarList names_;
  std::vector<std::size_t> sizes_;
  std::vector<double> probs_;
};

// Sums out every variable not in `keep`. The result keeps the variable order
// of `p`, so keeping all variables returns `p` unchanged.
JointPmf marginalize(const JointPmf& p, const VarList& keep);

// Shannon entropy H(vars) in bits. An empty list has entropy 0.
double entropy(const JointPmf& p, const VarList& vars);

/// I(A;B|C) in bits, computed as H(A,C) + H(B,C) - H(A,B,C) - H(C).
///
/// A and B must be nonempty and A, B, C pairwise disjoint; C may be empty.
/// Rounding can push the sum slightly below zero: values down to -1e-10 are
/// clamped to 0, anything lower throws std::logic_error.
double mutual_information(const JointPmf& p, const VarList& a, const VarList& b,
                          const VarList& c = {});

}  // namespace keyrate
