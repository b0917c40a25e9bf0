#include "riley/two_bridge.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "oracles.hpp"

namespace riley {
namespace {

PairError error_of(std::int64_t a, std::int64_t b) {
  try {
    TwoBridgePair::validate(a, b);
  } catch (const InvalidPair& e) {
    return e.kind();
  }
  ADD_FAILURE() << "S(" << a << "," << b << ") unexpectedly valid";
  return PairError::kAlphaNotPositive;
}

TEST(ValidateTest, AcceptsAndRejects) {
  const auto p = TwoBridgePair::validate(7, 3);
  EXPECT_EQ(p.alpha(), 7);
  EXPECT_EQ(p.beta(), 3);
  EXPECT_EQ(error_of(7, 2), PairError::kBetaEven);
  EXPECT_EQ(error_of(9, 3), PairError::kNotCoprime);
  EXPECT_EQ(error_of(8, 3), PairError::kAlphaEven);
  EXPECT_EQ(error_of(-7, 3), PairError::kAlphaNotPositive);
  EXPECT_EQ(error_of(0, 1), PairError::kAlphaNotPositive);
  EXPECT_EQ(error_of(7, 9), PairError::kBetaOutOfRange);
  EXPECT_EQ(error_of(7, -7), PairError::kBetaOutOfRange);
  EXPECT_EQ(error_of(1, 0), PairError::kBetaEven);
  EXPECT_STREQ(InvalidPair(PairError::kNotCoprime).what(), "gcd(alpha,beta) must be 1");
}

TEST(NormalizeOddTest, EvenBeta) {
  EXPECT_EQ(normalize_odd(15, 4), TwoBridgePair::validate(15, -11));
  EXPECT_EQ(normalize_odd(7, 3), TwoBridgePair::validate(7, 3));
  EXPECT_EQ(normalize_odd(5, 2), TwoBridgePair::validate(5, -3));
  EXPECT_EQ(normalize_odd(5, -2), TwoBridgePair::validate(5, 3));
  EXPECT_THROW(normalize_odd(15, 6), InvalidPair);
  EXPECT_THROW(normalize_odd(15, 0), InvalidPair);
}

TEST(FloorTest, MatchesSteppedFloor) {
  for (std::int64_t n = -60; n <= 60; ++n)
    for (std::int64_t d = 1; d <= 9; ++d) EXPECT_EQ(floor_div(n, d), oracle::stepped_floor(n, d)) << n << "/" << d;
}

TEST(ModInverseTest, Inverts) {
  EXPECT_EQ(mod_inverse(3, 7), 5);
  EXPECT_EQ(mod_inverse(-3, 7), 2);
  EXPECT_EQ(mod_inverse(11, 15), 11);
  EXPECT_THROW(mod_inverse(3, 9), std::domain_error);
  for (std::int64_t m = 3; m < 60; m += 2)
    for (std::int64_t b = 1; b < m; ++b)
      if (std::gcd(b, m) == 1) EXPECT_EQ(mod_floor(b * mod_inverse(b, m), m), 1);
}

TEST(EpsilonTest, KnownSequences) {
  EXPECT_EQ(epsilon_sequence(TwoBridgePair::validate(7, 3)).signs(), (std::vector<int>{1, 1, -1, -1, 1, 1}));
  EXPECT_EQ(epsilon_sequence(TwoBridgePair::validate(7, 5)).signs(), (std::vector<int>{1, -1, 1, 1, -1, 1}));
  EXPECT_EQ(epsilon_sequence(TwoBridgePair::validate(3, 1)).signs(), (std::vector<int>{1, 1}));
  EXPECT_EQ(epsilon_sequence(TwoBridgePair::validate(5, 3)).signs(), (std::vector<int>{1, -1, -1, 1}));
}

TEST(EpsilonTest, RejectsNonSigns) { EXPECT_THROW(EpsilonSequence({1, 0}), std::invalid_argument); }

// Exhaustive up to alpha = 99: matches the stepped-floor oracle, is a
// palindrome, and negates under mirroring.
TEST(EpsilonTest, ExhaustiveProperties) {
  for (const auto& p : enumerate_S(99)) {
    const auto eps = epsilon_sequence(p);
    ASSERT_EQ(eps.size(), static_cast<std::size_t>(p.alpha() - 1));
    EXPECT_EQ(eps.signs(), oracle::epsilon(p.alpha(), p.beta())) << p;
    EXPECT_TRUE(eps.is_palindrome()) << p;
    const auto m = epsilon_sequence(mirror(p));
    for (std::size_t i = 0; i < eps.size(); ++i) ASSERT_EQ(m[i], -eps[i]) << p;
  }
}

TEST(MirrorTest, FlipsSign) {
  EXPECT_EQ(mirror(TwoBridgePair::validate(7, 3)), TwoBridgePair::validate(7, -3));
  EXPECT_EQ(mirror(TwoBridgePair::validate(15, 11)), TwoBridgePair::validate(15, -11));
  for (const auto& p : enumerate_S(25)) EXPECT_EQ(mirror(mirror(p)), p);
}

TEST(EquivalentTest, Examples) {
  const auto p73 = TwoBridgePair::validate(7, 3);
  EXPECT_TRUE(equivalent(p73, TwoBridgePair::validate(7, 5), false));
  EXPECT_TRUE(equivalent(p73, p73, false));
  EXPECT_FALSE(equivalent(TwoBridgePair::validate(5, 1), TwoBridgePair::validate(5, 3), true));
  EXPECT_FALSE(equivalent(p73, TwoBridgePair::validate(7, -3), false));
  EXPECT_TRUE(equivalent(p73, TwoBridgePair::validate(7, -3), true));
  EXPECT_FALSE(equivalent(p73, TwoBridgePair::validate(9, 1), true));
}

TEST(EquivalentProperty, IsEquivalenceRelation) {
  for (std::int64_t a = 3; a <= 45; a += 2) {
    std::vector<TwoBridgePair> slice;
    for (const auto& p : enumerate_S(a))
      if (p.alpha() == a) slice.push_back(p);
    for (bool mirror_flag : {false, true}) {
      for (const auto& p : slice) {
        EXPECT_TRUE(equivalent(p, p, mirror_flag));
        for (const auto& q : slice) {
          EXPECT_EQ(equivalent(p, q, mirror_flag), equivalent(q, p, mirror_flag));
          if (!equivalent(p, q, mirror_flag)) continue;
          for (const auto& r : slice)
            if (equivalent(q, r, mirror_flag)) EXPECT_TRUE(equivalent(p, r, mirror_flag)) << p << q << r;
        }
      }
    }
  }
}

TEST(EnumerateTest, SPlus) {
  using V = std::vector<TwoBridgePair>;
  auto P = [](std::int64_t a, std::int64_t b) { return TwoBridgePair::validate(a, b); };
  EXPECT_EQ(enumerate_S_plus(3), (V{P(3, 1)}));
  EXPECT_EQ(enumerate_S_plus(5), (V{P(3, 1), P(5, 1), P(5, 3)}));
  EXPECT_EQ(enumerate_S_plus(7), (V{P(3, 1), P(5, 1), P(5, 3), P(7, 1), P(7, 3), P(7, 5)}));
  EXPECT_TRUE(enumerate_S_plus(2).empty());
  const auto s = enumerate_S_plus(99);
  EXPECT_TRUE(std::is_sorted(s.begin(), s.end()));
  EXPECT_EQ(enumerate_S(99).size(), 2 * s.size());
}

TEST(EnumerateTest, Sbar) {
  using V = std::vector<TwoBridgePair>;
  auto P = [](std::int64_t a, std::int64_t b) { return TwoBridgePair::validate(a, b); };
  EXPECT_EQ(enumerate_Sbar(7), (V{P(3, 1), P(5, 1), P(5, 3), P(7, 1), P(7, 3)}));
  EXPECT_EQ(enumerate_Sbar(3), (V{P(3, 1)}));
}

// Brute-force S-bar: search every beta' directly rather than inverting.
TEST(EnumerateProperty, SbarMatchesBruteForce) {
  for (std::int64_t n : {3, 5, 9, 21, 51, 99}) {
    const auto splus = enumerate_S_plus(n);
    std::vector<TwoBridgePair> brute;
    for (const auto& p : splus) {
      bool starred = false;
      for (const auto& q : splus)
        if (q.alpha() == p.alpha() && q.beta() < p.beta() && (p.beta() * q.beta()) % p.alpha() == 1) starred = true;
      if (!starred) brute.push_back(p);
    }
    const auto sbar = enumerate_Sbar(n);
    EXPECT_EQ(sbar, brute) << n;
    EXPECT_TRUE(std::includes(splus.begin(), splus.end(), sbar.begin(), sbar.end()));
    for (std::int64_t a = 3; a <= n; a += 2)
      EXPECT_TRUE(std::find(sbar.begin(), sbar.end(), TwoBridgePair::validate(a, 1)) != sbar.end());
  }
}

TEST(TorusTest, Membership) {
  EXPECT_TRUE(is_torus(TwoBridgePair::validate(5, 1)));
  EXPECT_FALSE(is_torus(TwoBridgePair::validate(7, 3)));
  EXPECT_TRUE(is_torus(TwoBridgePair::validate(9, -1)));
  EXPECT_TRUE(is_torus(TwoBridgePair::validate(9, 7)) == false);
  for (const auto& p : enumerate_S(41))
    EXPECT_EQ(is_torus(p), equivalent(p, TwoBridgePair::validate(p.alpha(), 1), true)) << p;
}

TEST(CanonicalTest, SmallestPositiveRepresentative) {
  EXPECT_EQ(canonical_representative(TwoBridgePair::validate(7, 5)), TwoBridgePair::validate(7, 3));
  EXPECT_EQ(canonical_representative(TwoBridgePair::validate(7, -3)), TwoBridgePair::validate(7, 3));
  EXPECT_EQ(canonical_representative(TwoBridgePair::validate(15, -11)), TwoBridgePair::validate(15, 11));
  for (const auto& p : enumerate_S(41)) {
    const auto c = canonical_representative(p);
    EXPECT_GT(c.beta(), 0);
    EXPECT_TRUE(equivalent(p, c, true));
    for (const auto& q : enumerate_S_plus(p.alpha()))
      if (q.alpha() == p.alpha() && equivalent(p, q, true)) EXPECT_LE(c.beta(), q.beta());
  }
}

}  // namespace
}  // namespace riley
