#pragma once

#include <array>
#include <string>
#include <string_view>

namespace keyrate {

/// Achievable secret-key rates of the two BS-user pairs, in bits per channel
/// use. Both components are nonnegative once clamped.
///
/// A pair is achievable when keys K1, K2 of these rates can be agreed with
/// vanishing error probability while the rate of information either user
/// learns about the other pair's key vanishes (weak secrecy).
struct RatePair {
  double r1 = 0.0;
  double r2 = 0.0;

  friend bool operator==(const RatePair&, const RatePair&) = default;
};

// FW: key carried by a wiretap code on the forward link. BW: key distilled by
// the user from its channel output over the public feedback channel.
enum class PureStrategy { FW = 0, BW = 1 };

struct Profile {
  PureStrategy s1 = PureStrategy::FW;
  PureStrategy s2 = PureStrategy::FW;

  friend bool operator==(const Profile&, const Profile&) = default;
};

inline constexpr std::array<Profile, 4> kAllProfiles = {
    Profile{PureStrategy::FW, PureStrategy::FW}, Profile{PureStrategy::FW, PureStrategy::BW},
    Profile{PureStrategy::BW, PureStrategy::FW}, Profile{PureStrategy::BW, PureStrategy::BW}};

// Position of a profile in kAllProfiles.
constexpr std::size_t profile_index(Profile p) noexcept {
  return 2 * static_cast<std::size_t>(p.s1) + static_cast<std::size_t>(p.s2);
}

constexpr PureStrategy other(PureStrategy s) noexcept {
  return s == PureStrategy::FW ? PureStrategy::BW : PureStrategy::FW;
}

constexpr std::string_view to_string(PureStrategy s) noexcept {
  return s == PureStrategy::FW ? "FW" : "BW";
}

inline std::string to_string(Profile p) {
  return "(" + std::string(to_string(p.s1)) + "," + std::string(to_string(p.s2)) + ")";
}

}  // namespace keyrate
