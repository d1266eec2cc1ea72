#include "demflag/charring.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace demflag;

namespace {

Weight aff(std::vector<std::int64_t> h, std::int64_t d) { return Weight(std::move(h), d); }

FormalCharacter random_character(const AffineDatum& ad, int terms) {
  FormalCharacter f(ad.label());
  for (int t = 0; t < terms; ++t) {
    Weight mu(ad.dim());
    for (auto& x : mu.h) x = oracle::uniform(-4, 4);
    mu.d = oracle::uniform(-2, 2);
    f.add(mu, oracle::uniform(-3, 3));
  }
  return f;
}

}  // namespace

class CharringA1 : public ::testing::Test {
 protected:
  AffineDatum ad = affinize(build_finite_datum('A', 1));
  RootDatum rd = build_finite_datum('A', 1);
};

TEST_F(CharringA1, DemazureStepLadder) {
  const auto L1 = ad.fundamental(1);
  const FormalCharacter expect(ad.label(), L1);
  FormalCharacter two = expect;
  two.add(L1 - ad.simple_root(1), 1);
  EXPECT_EQ(demazure_step(ad, 1, FormalCharacter(ad.label(), L1)), two);
  EXPECT_EQ(demazure_step(ad, 0, FormalCharacter(ad.label(), L1)), expect);
  EXPECT_TRUE(demazure_step(ad, 1, FormalCharacter(ad.label(), aff({1, -1}, 0))).empty());
}

TEST_F(CharringA1, DemazureStepNegativeBranch) {
  // n = -3: -(e^{mu+a} + e^{mu+2a})
  const Weight mu = aff({3, -3}, 0);
  FormalCharacter expect(ad.label());
  expect.add(mu + ad.simple_root(1), -1);
  expect.add(mu + 2 * ad.simple_root(1), -1);
  EXPECT_EQ(demazure_step(ad, 1, FormalCharacter(ad.label(), mu)), expect);
}

TEST_F(CharringA1, WordCharacterExamples) {
  const auto L1 = ad.fundamental(1);
  EXPECT_EQ(demazure_word_char(ad, WeylWord{}, L1), FormalCharacter(ad.label(), L1));

  FormalCharacter one(ad.label(), L1);
  one.add(aff({2, -1}, 0), 1);
  EXPECT_EQ(demazure_word_char(ad, WeylWord{{1}}, L1), one);

  const Weight top = ad.fundamental(0) + ad.delta();
  const auto a0 = ad.simple_root(0), a1 = ad.simple_root(1);
  FormalCharacter four(ad.label());
  for (const Weight& w : {top, top - a0, top - a0 - a1, top - a0 - 2 * a1}) four.add(w, 1);
  EXPECT_EQ(demazure_word_char(ad, WeylWord{{1, 0}}, top), four);
}

TEST_F(CharringA1, WeylCharacterFinite) {
  FormalCharacter expect(rd.label());
  for (std::int64_t h : {2, 0, -2}) expect.add(rd.weight({h}), 1);
  EXPECT_EQ(weyl_character_finite(rd, rd.weight({2})), expect);
  EXPECT_EQ(weyl_character_finite(rd, rd.zero()), FormalCharacter(rd.label(), rd.zero()));
  try {
    weyl_character_finite(rd, rd.weight({-1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDominant);
  }
}

TEST_F(CharringA1, ProjectionExamples) {
  const auto g = project_graded_classical(ad, FormalCharacter(ad.label(), ad.fundamental(0) + ad.delta()));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_EQ(g.coeff(rd.zero(), 1), 1);
  EXPECT_EQ(project_graded_classical(ad, FormalCharacter(ad.label(), ad.delta())).coeff(rd.zero(), 1), 1);

  const auto four = demazure_word_char(ad, WeylWord{{1, 0}}, ad.fundamental(0) + ad.delta());
  GradedClassicalCharacter expect(rd.label());
  expect.add(rd.weight({2}), 0, 1);
  expect.add(rd.weight({0}), 0, 1);
  expect.add(rd.weight({-2}), 0, 1);
  expect.add(rd.weight({0}), 1, 1);
  const auto g4 = project_graded_classical(ad, four);
  EXPECT_EQ(g4, expect);
  EXPECT_TRUE(check_w_invariance_per_grade(rd, g4));

  FormalCharacter flat(rd.label());
  flat.add(rd.weight({2}), 1);
  flat.add(rd.weight({0}), 2);
  flat.add(rd.weight({-2}), 1);
  EXPECT_EQ(forget_grading(g4), flat);
  EXPECT_TRUE(check_w_invariance(rd, flat));

  EXPECT_THROW(project_graded_classical(ad, FormalCharacter("A2^(1)", ad.delta())), Error);
}

TEST_F(CharringA1, WInvarianceExamples) {
  GradedClassicalCharacter single(rd.label());
  single.add(rd.weight({1}), 0, 1);
  EXPECT_FALSE(check_w_invariance_per_grade(rd, single));
  EXPECT_TRUE(check_w_invariance_per_grade(rd, GradedClassicalCharacter(rd.label())));

  // invariant in total but not grade by grade
  GradedClassicalCharacter split(rd.label());
  split.add(rd.weight({1}), 0, 1);
  split.add(rd.weight({-1}), 1, 1);
  EXPECT_FALSE(check_w_invariance_per_grade(rd, split));
  EXPECT_TRUE(check_w_invariance(rd, forget_grading(split)));
}

TEST_F(CharringA1, ShiftGrade) {
  GradedClassicalCharacter g(rd.label());
  g.add(rd.weight({2}), 0, 1);
  g.add(rd.weight({0}), 1, 3);
  EXPECT_EQ(shift_grade(g, 0), g);
  EXPECT_EQ(shift_grade(shift_grade(g, 4), -4), g);
  const auto s = shift_grade(g, 7);
  EXPECT_EQ(s.coeff(rd.weight({2}), 7), 1);
  EXPECT_EQ(s.coeff(rd.weight({0}), 8), 3);
  EXPECT_EQ(s.min_grade(), 7);
}

TEST(Charring, StepIsIdempotent) {
  for (int n : {1, 2}) {
    const auto ad = affinize(build_finite_datum('A', n));
    for (int rep = 0; rep < 50; ++rep) {
      const auto f = random_character(ad, 4);
      for (int i : ad.nodes()) {
        const auto once = demazure_step(ad, i, f);
        EXPECT_EQ(demazure_step(ad, i, once), once);
      }
    }
  }
}

TEST(Charring, StepOutputIsReflectionInvariant) {
  const auto ad = affinize(build_finite_datum('A', 2));
  for (int rep = 0; rep < 30; ++rep) {
    const auto f = random_character(ad, 3);
    for (int i : ad.nodes()) {
      const auto g = demazure_step(ad, i, f);
      for (const auto& [mu, c] : g) EXPECT_EQ(g.coeff(reflect_weight(ad, i, mu)), c);
    }
  }
}

TEST(Charring, BraidRelatedWordsAgree) {
  const auto ad = affinize(build_finite_datum('A', 2));
  const std::vector<std::pair<WeylWord, WeylWord>> pairs{
      {WeylWord{{0, 1, 0}}, WeylWord{{1, 0, 1}}},
      {WeylWord{{1, 2, 1}}, WeylWord{{2, 1, 2}}},
      {WeylWord{{2, 0, 2, 1}}, WeylWord{{0, 2, 0, 1}}},
      {WeylWord{{1, 0, 1, 2}}, WeylWord{{0, 1, 0, 2}}},
      {WeylWord{{0, 1, 2, 1}}, WeylWord{{0, 2, 1, 2}}},
  };
  for (int rep = 0; rep < 4; ++rep) {
    Weight seed(ad.dim());
    for (auto& x : seed.h) x = oracle::uniform(0, 3);
    for (const auto& [u, v] : pairs) EXPECT_EQ(demazure_word_char(ad, u, seed), demazure_word_char(ad, v, seed));
  }
}

TEST(Charring, ExtremalCoefficientsAndDimension) {
  for (auto [s, n] : std::vector<std::pair<char, int>>{{'A', 2}, {'A', 3}, {'B', 3}, {'C', 2}, {'C', 3}, {'G', 2}, {'D', 4}}) {
    const auto rd = build_finite_datum(s, n);
    for (int rep = 0; rep < 4; ++rep) {
      Weight lam(rd.dim());
      for (auto& x : lam.h) x = oracle::uniform(0, 2);
      const auto ch = weyl_character_finite(rd, lam);
      EXPECT_TRUE(check_w_invariance(rd, ch)) << rd.label() << lam;
      EXPECT_EQ(ch.coeff(lam), 1);
      EXPECT_EQ(ch.coeff(apply_w0(rd, lam)), 1);
      EXPECT_EQ(ch.mass(), oracle::weyl_dimension(rd, lam)) << rd.label() << lam;
    }
  }
  const auto a2 = build_finite_datum('A', 2);
  const auto c = weyl_character_finite(a2, a2.fundamental(1));
  EXPECT_EQ(c.size(), 3u);
  for (const auto& [mu, k] : c) EXPECT_EQ(k, 1);
}

TEST(Charring, StepFixesInvariantCharacters) {
  const auto rd = build_finite_datum('C', 2);
  const auto ch = weyl_character_finite(rd, rd.weight({1, 1}));
  for (int i : rd.nodes()) EXPECT_EQ(demazure_step(rd, i, ch), ch);
}

TEST(Charring, MismatchedDataRejected) {
  FormalCharacter a("A1", Weight({1}, 0)), b("A2", Weight({1, 0}, 0));
  try {
    a += b;
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::DatumMismatch);
  }
}

TEST(Charring, ProductOfCharacters) {
  const auto rd = build_finite_datum('A', 1);
  const auto v1 = weyl_character_finite(rd, rd.weight({1}));
  FormalCharacter expect(rd.label());
  expect.add(rd.weight({2}), 1);
  expect.add(rd.weight({0}), 2);
  expect.add(rd.weight({-2}), 1);
  EXPECT_EQ(v1 * v1, expect);
  EXPECT_EQ((v1 * v1).mass(), 4);
}
