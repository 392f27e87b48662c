#include <gtest/gtest.h>

#include <random>

#include "frobq/frobenius.hpp"
#include "oracles/frobenius_bruteforce.hpp"
#include "test_support.hpp"

namespace frobq {
namespace {

using testing::random_polynomial;

QuotientRing quotient(std::uint32_t p, std::vector<std::string> vars,
                      std::string_view relations) {
  RingPtr ring = PolyRing::make(p, std::move(vars));
  return QuotientRing(ring, Ideal::parse(relations, ring));
}

QuotientRing nilline() { return quotient(2, {"x", "y"}, "x^2"); }
QuotientRing fermat3(std::uint32_t p) {
  return quotient(p, {"x", "y", "z"}, "x^3 + y^3 + z^3");
}

// ----------------------------------------------------------------- oracles

// Frozen output of the exhaustive scans; the engine tests below compare
// against these values.
TEST(FrobeniusOracle, NillineChain) {
  for (std::uint32_t e = 1; e <= 3; ++e) {
    auto member = oracle::nilline_chain_member(e);
    EXPECT_TRUE((member[{0, 1}]));
    EXPECT_FALSE((member[{1, 0}]));
    EXPECT_FALSE((member[{1, 1}]));
  }
  EXPECT_FALSE((oracle::nilline_chain_member(0)[{0, 1}]));
}

TEST(FrobeniusOracle, Fermat3Chain) {
  EXPECT_EQ(oracle::fermat3_chain_member(5, 0).size(), 1u);
  for (std::uint32_t e = 1; e <= 4; ++e) {
    auto member = oracle::fermat3_chain_member(5, e);
    ASSERT_EQ(member.size(), 5u) << "e = " << e;
    for (const auto& c : member) {
      EXPECT_EQ(c[0], 0u);
      EXPECT_EQ(c[1], 0u);
    }
  }
}

// ------------------------------------------------------------ power / root

TEST(FrobeniusPower, Examples) {
  auto R2 = PolyRing::make(2, {"x", "y"});
  EXPECT_TRUE(ideal_equal(frobenius_power(Ideal::parse("x; y", R2), 1),
                          Ideal::parse("x^2; y^2", R2)));
  auto R3 = PolyRing::make(3, {"x", "y"});
  EXPECT_TRUE(ideal_equal(frobenius_power(Ideal::parse("x + y", R3), 1),
                          Ideal::parse("x^3 + y^3", R3)));
  Ideal I = Ideal::parse("x^2 + y; x*y", R3);
  EXPECT_TRUE(ideal_equal(frobenius_power(I, 0), I));
}

TEST(FrobeniusPower, CapIsEnforced) {
  auto R = PolyRing::make(2, {"x"});
  EXPECT_THROW(frobenius_power(Ideal::parse("x", R), kMaxFrobeniusExponent + 1),
               ExponentOverflow);
  EXPECT_EQ(FrobeniusExponent::make(5, 3).q, 125u);
}

TEST(FrobeniusPower, ContainedAndComposes) {
  std::mt19937_64 rng(43);
  for (std::uint32_t p : {2u, 3u}) {
    auto ring = PolyRing::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      Ideal I(ring, {random_polynomial(ring, rng, 3, 2), random_polynomial(ring, rng, 3, 2)});
      EXPECT_TRUE(ideal_contains(I, frobenius_power(I, 1)));
      EXPECT_TRUE(ideal_equal(frobenius_power(I, 2),
                              frobenius_power(frobenius_power(I, 1), 1)));
    }
  }
}

TEST(FrobeniusRoot, Examples) {
  auto R = PolyRing::make(2, {"x", "y"});
  EXPECT_TRUE(ideal_equal(frobenius_root(Ideal::parse("x^2*y^3", R), 1),
                          Ideal::parse("x*y", R)));
  EXPECT_TRUE(ideal_equal(frobenius_root(Ideal::parse("x^3 + y^3", R), 1),
                          Ideal::parse("x; y", R)));
  EXPECT_TRUE(ideal_equal(frobenius_root(Ideal::parse("x^2; y^2", R), 1),
                          Ideal::parse("x; y", R)));
}

TEST(FrobeniusRoot, AdjunctionWithPower) {
  std::mt19937_64 rng(47);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = PolyRing::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 10; ++trial) {
      Ideal I(ring, {random_polynomial(ring, rng, 3, 3), random_polynomial(ring, rng, 2, 3)});
      EXPECT_TRUE(ideal_equal(frobenius_root(frobenius_power(I, 1), 1), I));
      EXPECT_TRUE(ideal_contains(frobenius_power(frobenius_root(I, 1), 1), I));
    }
  }
}

// ----------------------------------------------------------------- preimage

TEST(FrobeniusPreimage, KernelAndEliminationAgree) {
  // NILLINE with a = (y): the colength path (known = (y, x^2)) and the
  // elimination path (known = J only, infinite colength) must agree.
  QuotientRing R = nilline();
  Ideal target = frobenius_power(R.ideal("y"), 1, R);
  Ideal by_kernel = frobenius_preimage(target, 1, R.ideal("y"));
  Ideal by_elimination = frobenius_preimage(target, 1, R.relations());
  EXPECT_TRUE(ideal_equal(by_kernel, by_elimination));
  EXPECT_TRUE(ideal_equal(by_kernel, R.ideal("x; y")));
}

TEST(FrobeniusPreimage, RejectsWrongKnownPart) {
  QuotientRing R = nilline();
  EXPECT_THROW(frobenius_preimage(R.ideal("y^4"), 1, R.ideal("y")), InvalidArgument);
}

TEST(FrobeniusPreimage, PolynomialRingIsFlat) {
  std::mt19937_64 rng(53);
  auto ring = PolyRing::make(3, {"x", "y"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I(ring, {random_polynomial(ring, rng, 3, 2), random_polynomial(ring, rng, 2, 2)});
    Ideal pre = frobenius_preimage(frobenius_power(I, 1), 1, Ideal::zero(ring));
    EXPECT_TRUE(ideal_equal(pre, I));
  }
}

// ------------------------------------------------------------------ closure

TEST(FrobeniusClosure, RegularRingIsClosed) {
  std::mt19937_64 rng(59);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    QuotientRing R = QuotientRing::polynomial(PolyRing::make(p, {"x", "y", "z"}));
    for (int trial = 0; trial < 5; ++trial) {
      Ideal a(R.ambient(), {random_polynomial(R.ambient(), rng, 2, 2),
                            random_polynomial(R.ambient(), rng, 2, 2)});
      auto closure = frobenius_closure(a, R, {.e_max = 3, .lookahead = 2});
      ASSERT_TRUE(closure.stabilized);
      EXPECT_EQ(closure.e_star, 0u);
      EXPECT_TRUE(ideal_equal(closure.closure, a));
      auto q = q_exponent(a, R, closure, 3);
      ASSERT_EQ(q.status, QStatus::Found);
      EXPECT_EQ(q.exponent.q, 1u);
    }
  }
}

TEST(FrobeniusClosure, NillineGolden) {
  QuotientRing R = nilline();
  Ideal a = R.ideal("y");
  auto result = frobenius_closure(a, R, {.e_max = 3, .lookahead = 2});
  ASSERT_TRUE(result.stabilized);
  EXPECT_EQ(result.e_star, 1u);
  EXPECT_TRUE(ideal_equal(result.closure, R.ideal("x; y")));
  // each chain member matches the oracle's membership table on {1, x}
  for (std::uint32_t e = 0; e < result.chain.size(); ++e) {
    auto member = oracle::nilline_chain_member(e);
    const Ideal& F = result.chain[e];
    EXPECT_EQ(ideal_member(parse_polynomial("x", R.ambient()), F), (member[{0, 1}]));
    EXPECT_EQ(ideal_member(parse_polynomial("1", R.ambient()), F), (member[{1, 0}]));
  }
  auto q = q_exponent(a, R, {.e_max = 3, .lookahead = 2});
  ASSERT_EQ(q.status, QStatus::Found);
  EXPECT_EQ(q.exponent.e, 1u);
  EXPECT_EQ(q.exponent.q, 2u);
}

TEST(FrobeniusClosure, Fermat3Golden) {
  QuotientRing R = fermat3(5);
  Ideal a = R.ideal("y; z");
  auto result = frobenius_closure(a, R, {.e_max = 4, .lookahead = 2});
  ASSERT_TRUE(result.stabilized);
  EXPECT_EQ(result.e_star, 1u);
  EXPECT_EQ(result.closure.to_string(), "x^2; y; z");
  // compare every chain member with the exhaustive scan over {1, x, x^2}
  for (std::uint32_t e = 1; e < result.chain.size(); ++e) {
    auto members = oracle::fermat3_chain_member(5, e);
    for (std::uint32_t c0 = 0; c0 < 5; ++c0) {
      for (std::uint32_t c1 = 0; c1 < 5; ++c1) {
        for (std::uint32_t c2 = 0; c2 < 5; ++c2) {
          Polynomial r = Polynomial::constant(R.ambient(), c0) +
                         Polynomial::constant(R.ambient(), c1) * parse_polynomial("x", R.ambient()) +
                         Polynomial::constant(R.ambient(), c2) * parse_polynomial("x^2", R.ambient());
          bool expected = std::find(members.begin(), members.end(),
                                    std::array<std::uint32_t, 3>{c0, c1, c2}) != members.end();
          EXPECT_EQ(ideal_member(r, result.chain[e]), expected);
        }
      }
    }
  }
  auto q = q_exponent(a, R, result, 4);
  ASSERT_EQ(q.status, QStatus::Found);
  EXPECT_EQ(q.exponent.e, 1u);
  EXPECT_EQ(q.exponent.q, 5u);
}

TEST(FrobeniusClosure, CertifiedDirection) {
  QuotientRing R = fermat3(5);
  for (const char* text : {"y; z", "x; y", "x + y; z", "y"}) {
    Ideal a = R.ideal(text);
    auto result = frobenius_closure(a, R, {.e_max = 3, .lookahead = 2});
    ASSERT_TRUE(result.stabilized) << text;
    EXPECT_TRUE(result.certified_lower);
    Ideal target = frobenius_power(a, result.e_star, R);
    const std::uint64_t q = FrobeniusExponent::make(5, result.e_star).q;
    for (const auto& g : result.closure.generators()) {
      EXPECT_TRUE(ideal_member(g.frobenius(q), target)) << text << " " << g.to_string();
    }
    EXPECT_TRUE(ideal_contains(result.closure, a));
    for (std::size_t e = 1; e < result.chain.size(); ++e) {
      EXPECT_TRUE(ideal_contains(result.chain[e], result.chain[e - 1]));
    }
  }
}

TEST(FrobeniusClosure, MonotoneAndIdempotent) {
  QuotientRing R = nilline();
  ClosureOptions opts{.e_max = 3, .lookahead = 2};
  Ideal small = R.ideal("y^2");
  Ideal big = R.ideal("y");
  Ideal small_f = frobenius_closure(small, R, opts).closure;
  Ideal big_f = frobenius_closure(big, R, opts).closure;
  EXPECT_TRUE(ideal_contains(big_f, small_f));
  EXPECT_TRUE(ideal_equal(frobenius_closure(big_f, R, opts).closure, big_f));
  EXPECT_TRUE(ideal_equal(frobenius_closure(small_f, R, opts).closure, small_f));
  EXPECT_TRUE(ideal_equal(small_f, R.ideal("x; y^2")));
}

TEST(FrobeniusClosure, UnstabilizedIsReported) {
  QuotientRing R = nilline();
  auto result = frobenius_closure(R.ideal("y"), R, {.e_max = 1, .lookahead = 2});
  EXPECT_FALSE(result.stabilized);
  EXPECT_EQ(result.window, 1u);
  EXPECT_EQ(result.chain.size(), 2u);
  auto q = q_exponent(R.ideal("y"), R, result, 1);
  EXPECT_EQ(q.status, QStatus::Unstabilized);
}

TEST(FrobeniusClosure, NonPrimaryIdealUsesElimination) {
  // In F_2[x,y,z,w]/(xz,xw,yz,yw), a = (x + z) is not primary to the
  // maximal ideal; the chain goes through the elimination path.
  QuotientRing R = quotient(2, {"x", "y", "z", "w"}, "x*z; x*w; y*z; y*w");
  Ideal a = R.ideal("x + z");
  auto result = frobenius_closure(a, R, {.e_max = 3, .lookahead = 2});
  ASSERT_TRUE(result.stabilized);
  EXPECT_TRUE(ideal_equal(result.closure, a));
}

TEST(QuotientRing, Basics) {
  QuotientRing R = quotient(2, {"x", "y", "z", "w"}, "x*z; x*w; y*z; y*w");
  EXPECT_EQ(R.dimension(), 2);
  EXPECT_TRUE(R.is_zero(parse_polynomial("x*z + y*w", R.ambient())));
  EXPECT_TRUE(ideal_contains(R.maximal_ideal(), R.relations()));
  auto ring = PolyRing::make(2, {"x"});
  EXPECT_THROW(QuotientRing(ring, Ideal::parse("x; x + 1", ring)), InvalidArgument);
}

}  // namespace
}  // namespace frobq
