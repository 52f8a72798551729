#include <cmath>
#include <random>

#include "doctest.h"
#include "keyrate/errors.hpp"
#include "keyrate/info_math.hpp"
#include "oracles.hpp"

using namespace keyrate;

namespace {

JointPmf uniform_bits() { return JointPmf({"x", "y"}, {2, 2}, {0.25, 0.25, 0.25, 0.25}); }

JointPmf copy_bit() { return JointPmf({"x", "y"}, {2, 2}, {0.5, 0.0, 0.0, 0.5}); }

// X, Z iid uniform bits, Y = X xor Z. Table order (x, y, z).
JointPmf xor_triple() {
  std::vector<double> p(8, 0.0);
  for (int x = 0; x < 2; ++x)
    for (int z = 0; z < 2; ++z) p[(x * 2 + (x ^ z)) * 2 + z] = 0.25;
  return JointPmf({"x", "y", "z"}, {2, 2, 2}, p);
}

}  // namespace

TEST_CASE("capacity values") {
  CHECK(capacity(0.0) == 0.0);
  CHECK(capacity(1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(capacity(3.0) == doctest::Approx(1.0).epsilon(1e-15));
  // 1/2 log2(101), 30-digit reference.
  CHECK(std::abs(capacity(100.0) - 3.32910574137589736858) < 1e-14);
  // Small arguments keep full relative precision: C(x) ~ x / (2 ln 2).
  CHECK(capacity(1e-18) == doctest::Approx(1e-18 / (2.0 * std::log(2.0))).epsilon(1e-12));
}

TEST_CASE("capacity rejects bad arguments") {
  CHECK_THROWS_AS(capacity(-1e-12), DomainError);
  CHECK_THROWS_AS(capacity(std::nan("")), DomainError);
  CHECK_THROWS_AS(capacity(INFINITY), DomainError);
}

TEST_CASE("capacity is strictly increasing and concave on a grid") {
  const double h = 0.05;
  double prev = capacity(0.0);
  for (int i = 1; i < 2000; ++i) {
    const double x = i * h;
    const double c = capacity(x);
    CHECK(c > prev);
    const double second = capacity(x + h) - 2.0 * c + capacity(x - h);
    CHECK(second < 0.0);
    prev = c;
  }
}

TEST_CASE("pos_part") {
  CHECK(pos_part(-0.3) == 0.0);
  CHECK(pos_part(0.0) == 0.0);
  CHECK(pos_part(0.7) == 0.7);
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-10, 10);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    CHECK(pos_part(x) + pos_part(-x) == std::abs(x));
  }
}

TEST_CASE("JointPmf validation") {
  CHECK_THROWS_AS(JointPmf({"x"}, {2}, {0.5, 0.6}), DomainError);
  CHECK_THROWS_AS(JointPmf({"x"}, {2}, {1.5, -0.5}), DomainError);
  CHECK_THROWS_AS(JointPmf({"x"}, {3}, {0.5, 0.5}), DomainError);
  CHECK_THROWS_AS(JointPmf({"x", "x"}, {1, 1}, {1.0}), DomainError);
  CHECK_THROWS_AS(JointPmf({"x"}, {0}, {}), DomainError);
  CHECK_NOTHROW(JointPmf({"x"}, {2}, {0.5, 0.5}));
}

TEST_CASE("marginalize") {
  SUBCASE("uniform pair keep first") {
    const JointPmf m = marginalize(uniform_bits(), {"x"});
    CHECK(m.names() == VarList{"x"});
    CHECK(m.probabilities() == std::vector<double>{0.5, 0.5});
  }
  SUBCASE("copy keep second") {
    const JointPmf m = marginalize(copy_bit(), {"y"});
    CHECK(m.probabilities() == std::vector<double>{0.5, 0.5});
  }
  SUBCASE("keep everything, in any order, is the identity") {
    std::mt19937_64 rng(11);
    const JointPmf p = oracle::random_joint(rng, 4, 3);
    VarList shuffled = p.names();
    std::reverse(shuffled.begin(), shuffled.end());
    const JointPmf m = marginalize(p, shuffled);
    CHECK(m.names() == p.names());
    CHECK(m.probabilities() == p.probabilities());
  }
  SUBCASE("middle variable") {
    // p(a,b,c) with b kept, checked against the map-based oracle.
    std::mt19937_64 rng(5);
    const JointPmf p = oracle::random_joint(rng, 3, 4);
    const JointPmf m = marginalize(p, {"v1"});
    const auto ref = oracle::marginal_by_map(p, {"v1"});
    REQUIRE(m.size() == ref.size());
    for (const auto& [key, prob] : ref) CHECK(m.probabilities()[key[0]] == doctest::Approx(prob));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(marginalize(uniform_bits(), {"w"}), DomainError);
    CHECK_THROWS_AS(marginalize(uniform_bits(), {}), DomainError);
  }
}

TEST_CASE("mutual information examples") {
  CHECK(mutual_information(uniform_bits(), {"x"}, {"y"}) == doctest::Approx(0.0));
  CHECK(mutual_information(copy_bit(), {"x"}, {"y"}) == doctest::Approx(1.0).epsilon(1e-15));

  const JointPmf t = xor_triple();
  // Independently: H over the 8-entry table by explicit map summation.
  CHECK(oracle::mi(t, {"x"}, {"y"}) == doctest::Approx(0.0));
  CHECK(oracle::mi(t, {"x"}, {"y"}, {"z"}) == doctest::Approx(1.0));
  CHECK(std::abs(mutual_information(t, {"x"}, {"y"})) < 1e-15);
  CHECK(std::abs(mutual_information(t, {"x"}, {"y"}, {"z"}) - 1.0) < 1e-15);
}

TEST_CASE("mutual information rejects overlapping or empty sets") {
  const JointPmf t = xor_triple();
  CHECK_THROWS_AS(mutual_information(t, {"x"}, {"x"}), DomainError);
  CHECK_THROWS_AS(mutual_information(t, {"x"}, {"y"}, {"y"}), DomainError);
  CHECK_THROWS_AS(mutual_information(t, {}, {"y"}), DomainError);
  CHECK_THROWS_AS(mutual_information(t, {"x"}, {"q"}), DomainError);
}

TEST_CASE("mutual information properties on random tables") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 300; ++trial) {
    const JointPmf p = oracle::random_joint(rng, 4, 3, trial % 3 == 0 ? 0.3 : 0.0);
    const VarList a{"v0"}, b{"v1"}, b2{"v2"}, c{"v3"};

    const double iab = mutual_information(p, a, b, c);
    CHECK(iab >= 0.0);
    CHECK(std::abs(iab - mutual_information(p, b, a, c)) < 1e-12);
    CHECK(std::abs(iab - std::max(0.0, oracle::mi(p, a, b, c))) < 1e-12);

    // Chain rule: I(A;B,B'|C) = I(A;B|C) + I(A;B'|B,C).
    const double joint = mutual_information(p, a, {"v1", "v2"}, c);
    const double split = iab + mutual_information(p, a, b2, {"v1", "v3"});
    CHECK(std::abs(joint - split) < 1e-10);

    CHECK(entropy(p, {}) == 0.0);
    CHECK(std::abs(entropy(p, {"v0", "v2"}) - oracle::map_entropy(p, {"v0", "v2"})) < 1e-12);
  }
}
