#include <gtest/gtest.h>

#include <random>

#include "frobq/ideal.hpp"
#include "oracles/linear_membership.hpp"
#include "test_support.hpp"

namespace frobq {
namespace {

using testing::random_polynomial;

struct Fixture {
  RingPtr ring;
  Ideal operator()(std::string_view text) const { return Ideal::parse(text, ring); }
  Polynomial poly(std::string_view text) const { return parse_polynomial(text, ring); }
};

Fixture in(std::uint32_t p, std::vector<std::string> vars,
           OrderKind kind = OrderKind::Grevlex) {
  return {PolyRing::make(p, std::move(vars), kind)};
}

std::vector<std::string> basis_strings(const Ideal& I) {
  std::vector<std::string> out;
  for (const auto& g : I.basis()) out.push_back(g.to_string());
  return out;
}

TEST(GroebnerBasis, Principal) {
  auto R = in(5, {"x", "y"});
  EXPECT_EQ(basis_strings(R("x")), (std::vector<std::string>{"x"}));
}

TEST(GroebnerBasis, OneReduction) {
  auto R = in(5, {"x", "y"});
  EXPECT_EQ(basis_strings(R("x + y; y")), (std::vector<std::string>{"x", "y"}));
}

// Hand Buchberger run in lex x > y > z (see derivation in the commit notes):
// S(g1,g2) gives xz - y^2, S(g2,g3) gives y^3 - z^2, all other pairs reduce
// to zero.
TEST(GroebnerBasis, TwistedCubicLex) {
  auto R = in(7, {"x", "y", "z"}, OrderKind::Lex);
  Ideal I = R("y - x^2; z - x*y");
  EXPECT_EQ(basis_strings(I),
            (std::vector<std::string>{"x^2 + 6*y", "x*y + 6*z", "x*z + 6*y^2",
                                      "y^3 + 6*z^2"}));
  // cross-check each basis element and each generator with the oracle
  for (const auto& g : I.basis()) {
    EXPECT_TRUE(oracle::member_up_to_degree(g, I.generators(), 6));
  }
  for (const auto& g : I.generators()) {
    EXPECT_TRUE(reduce_full(g, I.basis()).is_zero());
  }
}

TEST(GroebnerBasis, UnitAndZero) {
  auto R = in(3, {"x", "y"});
  EXPECT_TRUE(R("x; x + 1").is_unit());
  EXPECT_EQ(R("x; x + 1").to_string(), "1");
  EXPECT_TRUE(Ideal::zero(R.ring).basis().empty());
  EXPECT_EQ(Ideal::zero(R.ring).to_string(), "0");
  EXPECT_TRUE(R("0; 0").is_zero());
}

TEST(GroebnerBasis, BudgetIsReported) {
  auto R = in(5, {"x", "y", "z"});
  BudgetScope scope(GbBudget{.max_basis_size = 2});
  EXPECT_THROW(R("x*y - z; y*z - x; x*z - y").basis(), BudgetExceeded);
}

TEST(GroebnerBasis, BuchbergerCertificateOnRandomIdeals) {
  std::mt19937_64 rng(17);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = PolyRing::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(random_polynomial(ring, rng, 4, 4));
      Ideal I(ring, gens);
      EXPECT_TRUE(is_groebner_basis(I.basis()));
      for (const auto& g : gens) EXPECT_TRUE(ideal_member(g, I));
      // reduced: monic, no term of any element divisible by another's lead
      for (std::size_t i = 0; i < I.basis().size(); ++i) {
        const auto& g = I.basis()[i];
        EXPECT_EQ(g.leading_coeff(), 1u);
        for (std::size_t j = 0; j < I.basis().size(); ++j) {
          if (i == j) continue;
          for (const auto& t : g.terms()) {
            EXPECT_FALSE(I.basis()[j].leading_monomial().divides(t.mono));
          }
        }
      }
    }
  }
}

TEST(GroebnerBasis, DeterministicAcrossGeneratorOrder) {
  auto R = in(5, {"x", "y", "z"});
  EXPECT_EQ(R("x^2 - y*z; y^2 - x*z; z^2 - x*y").basis(),
            R("z^2 - x*y; x^2 - y*z; y^2 - x*z").basis());
}

TEST(NormalForm, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(normal_form(R.poly("x^2 + x*y"), R("x")).is_zero());
  EXPECT_EQ(normal_form(R.poly("y^2"), R("x")).to_string(), "y^2");
  EXPECT_EQ(normal_form(R.poly("x*y + y"), R("x - y")).to_string(), "y^2 + y");
}

TEST(NormalForm, IdempotentAndDifferenceInIdeal) {
  std::mt19937_64 rng(23);
  auto ring = PolyRing::make(3, {"x", "y", "z"});
  for (int trial = 0; trial < 30; ++trial) {
    Ideal I(ring, {random_polynomial(ring, rng, 3, 3), random_polynomial(ring, rng, 3, 3)});
    Polynomial f = random_polynomial(ring, rng, 6, 5);
    Polynomial nf = normal_form(f, I);
    EXPECT_EQ(normal_form(nf, I), nf);
    EXPECT_TRUE(ideal_member(f - nf, I));
  }
}

TEST(IdealMember, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(ideal_member(R.poly("x + y"), R("x; y")));
  EXPECT_FALSE(ideal_member(R.poly("x"), R("x^2; y")));
  EXPECT_TRUE(ideal_member(R.poly("x^2*y^2"), R("x^2*y; x*y^2")));
}

TEST(IdealMember, RingMismatch) {
  auto a = in(5, {"x", "y"});
  auto b = in(5, {"x", "z"});
  EXPECT_THROW(ideal_member(b.poly("x"), a("x")), RingMismatch);
  EXPECT_THROW(ideal_equal(b("x"), a("x")), RingMismatch);
}

TEST(IdealEqual, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(ideal_equal(R("x; y"), R("x + y; y")));
  EXPECT_FALSE(ideal_equal(R("x"), R("x^2")));
}

// (x)∩(y)∩(x,y)^2 collapses to (xy); the monomial ideal (x^2y, xy^2) is
// (x)∩(y)∩(x,y)^3.
TEST(IdealEqual, IntersectionOfPowers) {
  auto R = in(5, {"x", "y"});
  Ideal sq = intersect(intersect(R("x"), R("y")), R("x; y") * R("x; y"));
  EXPECT_TRUE(ideal_equal(sq, R("x*y")));
  EXPECT_FALSE(ideal_equal(R("x^2*y; x*y^2"), sq));
  Ideal cube = intersect(intersect(R("x"), R("y")), R("x; y") * R("x; y") * R("x; y"));
  EXPECT_TRUE(ideal_equal(R("x^2*y; x*y^2"), cube));
}

TEST(Colon, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(ideal_equal(colon(R("x^2"), R("x")), R("x")));
  EXPECT_TRUE(ideal_equal(colon(R("x*y"), R("x")), R("y")));

  auto S = in(2, {"x", "y", "z", "w"});
  Ideal J = S("x*z; x*w; y*z; y*w");
  Ideal q = colon(J, S("x"));
  EXPECT_TRUE(ideal_equal(q, S("z; w")));
  EXPECT_TRUE(ideal_member(S.poly("z"), q));
  EXPECT_TRUE(ideal_member(S.poly("w"), q));
  EXPECT_FALSE(ideal_member(S.poly("y"), q));
}

TEST(Colon, ByZeroIsUnit) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(colon(R("x"), Ideal::zero(R.ring)).is_unit());
}

TEST(Colon, AdjunctionOnRandomIdeals) {
  std::mt19937_64 rng(29);
  auto ring = PolyRing::make(3, {"x", "y", "z"});
  for (int trial = 0; trial < 15; ++trial) {
    Ideal I(ring, {random_polynomial(ring, rng, 3, 3), random_polynomial(ring, rng, 3, 3)});
    Ideal K(ring, {random_polynomial(ring, rng, 2, 2)});
    Ideal Q = colon(I, K);
    EXPECT_TRUE(ideal_contains(I, Q * K));
    EXPECT_TRUE(ideal_contains(Q, I));
    Ideal M = intersect(I, K);
    EXPECT_TRUE(ideal_contains(I, M));
    EXPECT_TRUE(ideal_contains(K, M));
    EXPECT_TRUE(ideal_contains(M, I * K));
  }
}

TEST(Intersect, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(ideal_equal(intersect(R("x"), R("y")), R("x*y")));
  Ideal I = R("x^2 + y; x*y");
  EXPECT_TRUE(ideal_equal(intersect(I, I), I));

  auto S = in(2, {"x", "y", "z", "w"});
  EXPECT_TRUE(ideal_equal(intersect(S("x; y"), S("z; w")), S("x*z; x*w; y*z; y*w")));
}

TEST(Saturate, SpecExamples) {
  auto R = in(5, {"x", "y"});
  auto s1 = saturate(R("x^2*y; x*y^2"), R("x; y"));
  EXPECT_TRUE(ideal_equal(s1.ideal, R("x*y")));
  EXPECT_EQ(s1.index, 1);

  auto s2 = saturate(R("x"), R("y"));
  EXPECT_TRUE(ideal_equal(s2.ideal, R("x")));
  EXPECT_EQ(s2.index, 0);

  auto T = in(2, {"x"});
  EXPECT_TRUE(saturate(T("x^2"), T("x")).ideal.is_unit());
}

TEST(Saturate, ContainsColonAndIdempotent) {
  std::mt19937_64 rng(31);
  auto ring = PolyRing::make(5, {"x", "y", "z"});
  for (int trial = 0; trial < 10; ++trial) {
    Ideal I(ring, {random_polynomial(ring, rng, 3, 3), random_polynomial(ring, rng, 3, 3)});
    Ideal K(ring, {random_polynomial(ring, rng, 2, 1)});
    Ideal sat = saturate(I, K).ideal;
    EXPECT_TRUE(ideal_contains(sat, colon(I, K)));
    EXPECT_TRUE(ideal_equal(saturate(sat, K).ideal, sat));
  }
}

TEST(KrullDimension, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_EQ(krull_dimension(Ideal::zero(R.ring)), 2);
  EXPECT_EQ(krull_dimension(R("x; y")), 0);
  EXPECT_EQ(krull_dimension(R("1")), -1);
  auto S = in(2, {"x", "y", "z", "w"});
  EXPECT_EQ(krull_dimension(S("x*z; x*w; y*z; y*w")), 2);
  EXPECT_EQ(krull_dimension(S("x*z; x*w; y*z; y*w; x + z; y + w")), 0);
  EXPECT_EQ(krull_dimension(S("x*z; x*w; y*z; y*w; x; y")), 2);
}

// Oracle: enumerate independent variable subsets of the leading ideal by hand.
TEST(KrullDimension, AgreesWithLeadingTermIdeal) {
  std::mt19937_64 rng(37);
  auto ring = PolyRing::make(3, {"x", "y", "z"});
  for (int trial = 0; trial < 20; ++trial) {
    Ideal I(ring, {random_polynomial(ring, rng, 3, 3), random_polynomial(ring, rng, 3, 2)});
    std::vector<Polynomial> leads;
    for (const auto& g : I.basis()) leads.push_back(Polynomial::term(ring, 1, g.leading_monomial()));
    EXPECT_EQ(krull_dimension(I), krull_dimension(Ideal(ring, leads)));
  }
}

TEST(RadicalMember, SpecExamples) {
  auto R = in(5, {"x", "y"});
  EXPECT_TRUE(radical_member(R.poly("x"), R("x^2")));
  EXPECT_FALSE(radical_member(R.poly("y"), R("x")));
  auto S = in(2, {"x", "y", "z", "w"});
  Ideal I = S("x*z; x*w; y*z; y*w; (x+z)^2; (y+w)^2");
  EXPECT_TRUE(radical_member(S.poly("x + z"), I));
  for (const char* v : {"x", "y", "z", "w"}) EXPECT_TRUE(radical_member(S.poly(v), I));
}

TEST(OracleEquivalence, SmallRandomInstances) {
  std::mt19937_64 rng(41);
  int certified = 0;
  for (std::uint32_t p : {2u, 3u, 5u}) {
    auto ring = PolyRing::make(p, {"x", "y", "z"});
    for (int trial = 0; trial < 8; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 2; ++k) gens.push_back(random_polynomial(ring, rng, 3, 3));
      Ideal I(ring, gens);
      Polynomial f = random_polynomial(ring, rng, 2, 1) * gens[0] +
                     random_polynomial(ring, rng, 2, 1) * gens[1];
      bool by_oracle = oracle::member_up_to_degree(f, gens, oracle::default_bound(f, gens));
      EXPECT_TRUE(by_oracle);
      EXPECT_TRUE(ideal_member(f, I));
      certified += by_oracle;
    }
  }
  EXPECT_GT(certified, 0);
}

}  // namespace
}  // namespace frobq
