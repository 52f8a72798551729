#include "keyrate/info_math.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "keyrate/errors.hpp"

namespace keyrate {

double capacity(double x) {
  if (!std::isfinite(x) || x < 0.0) {
    throw DomainError("capacity: argument must be finite and >= 0, got " +
                      std::to_string(x));
  }
  return 0.5 * std::log1p(x) / std::numbers::ln2;
}

JointPmf::JointPmf(VarList names, std::vector<std::size_t> alphabet_sizes,
                   std::vector<double> probabilities)
    : JointPmf(std::move(names), std::move(alphabet_sizes), std::move(probabilities),
               kSumTolerance) {}

JointPmf::JointPmf(VarList names, std::vector<std::size_t> alphabet_sizes,
                   std::vector<double> probabilities, double sum_tolerance)
    : names_(std::move(names)),
      sizes_(std::move(alphabet_sizes)),
      probs_(std::move(probabilities)) {
  validate(sum_tolerance);
}

void JointPmf::validate(double sum_tolerance) const {
  if (names_.size() != sizes_.size()) {
    throw DomainError("JointPmf: " + std::to_string(names_.size()) + " names but " +
                      std::to_string(sizes_.size()) + " alphabet sizes");
  }
  std::unordered_set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second) throw DomainError("JointPmf: duplicate variable '" + n + "'");
  }
  std::size_t expected = 1;
  for (std::size_t s : sizes_) {
    if (s == 0) throw DomainError("JointPmf: alphabet sizes must be positive");
    expected *= s;
  }
  if (probs_.size() != expected) {
    throw DomainError("JointPmf: expected " + std::to_string(expected) + " entries, got " +
                      std::to_string(probs_.size()));
  }
  double total = 0.0;
  for (double v : probs_) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      throw DomainError("JointPmf: entries must be finite and nonnegative");
    }
    total += v;
  }
  if (std::abs(total - 1.0) > sum_tolerance) {
    throw DomainError("JointPmf: entries sum to " + std::to_string(total) + ", not 1");
  }
}

std::size_t JointPmf::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw DomainError("unknown variable label '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

double JointPmf::at(std::span<const std::size_t> symbols) const {
  if (symbols.size() != sizes_.size()) throw DomainError("JointPmf::at: wrong arity");
  std::size_t flat = 0;
  for (std::size_t i = 0; i < sizes_.size(); ++i) {
    if (symbols[i] >= sizes_[i]) throw DomainError("JointPmf::at: symbol out of range");
    flat = flat * sizes_[i] + symbols[i];
  }
  return probs_[flat];
}

namespace {

// Marginal table over the variables flagged in `kept` (original order).
std::vector<double> marginal_table(const JointPmf& p, const std::vector<bool>& kept) {
  const auto& sizes = p.alphabet_sizes();
  const std::size_t n = sizes.size();

  // Stride of each variable inside the reduced table; 0 for summed-out ones.
  std::vector<std::size_t> stride(n, 0);
  std::size_t out_size = 1;
  for (std::size_t i = n; i-- > 0;) {
    if (kept[i]) {
      stride[i] = out_size;
      out_size *= sizes[i];
    }
  }

  std::vector<double> out(out_size, 0.0);
  std::vector<std::size_t> digit(n, 0);
  std::size_t out_index = 0;
  for (double v : p.probabilities()) {
    out[out_index] += v;
    // Odometer increment, last variable fastest.
    for (std::size_t i = n; i-- > 0;) {
      if (++digit[i] < sizes[i]) {
        out_index += stride[i];
        break;
      }
      out_index -= stride[i] * (sizes[i] - 1);
      digit[i] = 0;
    }
  }
  return out;
}

std::vector<bool> selection(const JointPmf& p, const VarList& vars) {
  std::vector<bool> kept(p.num_variables(), false);
  for (const auto& v : vars) {
    const std::size_t i = p.index_of(v);
    if (kept[i]) throw DomainError("variable '" + v + "' listed twice");
    kept[i] = true;
  }
  return kept;
}

double entropy_of(const std::vector<double>& table) {
  double h = 0.0;
  for (double v : table) {
    if (v > 0.0) h -= v * std::log2(v);
  }
  return h;
}

}  // namespace

JointPmf marginalize(const JointPmf& p, const VarList& keep) {
  if (keep.empty()) throw DomainError("marginalize: keep set must be nonempty");
  const auto kept = selection(p, keep);
  VarList names;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    if (kept[i]) {
      names.push_back(p.names()[i]);
      sizes.push_back(p.alphabet_sizes()[i]);
    }
  }
  // The marginal inherits whatever rounding the source table carried.
  return JointPmf(std::move(names), std::move(sizes), marginal_table(p, kept), 1e-9);
}

double entropy(const JointPmf& p, const VarList& vars) {
  if (vars.empty()) return 0.0;
  return entropy_of(marginal_table(p, selection(p, vars)));
}

double mutual_information(const JointPmf& p, const VarList& a, const VarList& b,
                          const VarList& c) {
  if (a.empty() || b.empty()) {
    throw DomainError("mutual_information: A and B must be nonempty");
  }
  auto joined = [](std::initializer_list<const VarList*> parts) {
    VarList out;
    for (const auto* part : parts) out.insert(out.end(), part->begin(), part->end());
    return out;
  };
  const VarList all = joined({&a, &b, &c});
  // selection() rejects repeated labels, which is exactly an overlap check.
  try {
    selection(p, all);
  } catch (const DomainError& e) {
    const std::string what = e.what();
    if (what.find("listed twice") != std::string::npos) {
      throw DomainError("mutual_information: variable sets overlap (" + what + ")");
    }
    throw;
  }

  const double value = entropy(p, joined({&a, &c})) + entropy(p, joined({&b, &c})) -
                       entropy(p, all) - entropy(p, c);
  if (value < -1e-10) {
    throw std::logic_error("mutual_information: negative result " + std::to_string(value));
  }
  return value > 0.0 ? value : 0.0;
}

}  // namespace keyrate
