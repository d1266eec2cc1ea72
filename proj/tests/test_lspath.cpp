#include "demflag/charring.hpp"
#include "demflag/crystal.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace demflag;

namespace {

Weight aff(std::vector<std::int64_t> h, std::int64_t d) { return Weight(std::move(h), d); }

class PathsA1 : public ::testing::Test {
 protected:
  AffineDatum ad = affinize(build_finite_datum('A', 1));
  Weight L0 = ad.fundamental(0), L1 = ad.fundamental(1), delta = ad.delta();
};

/// Words produced by make_dominant for images of lambda under alternating words up to `max_len`.
std::set<WeylWord> reachable_words(const AffineDatum& ad, const Weight& lambda, std::size_t max_len) {
  std::set<WeylWord> out;
  std::vector<std::vector<int>> frontier{{}};
  for (std::size_t len = 0; len <= max_len; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier) {
      const auto [lam, word] = make_dominant(ad, apply_word(ad, WeylWord{w}, lambda));
      if (word.length() <= max_len) out.insert(word);
      for (int i : ad.nodes())
        if (w.empty() || w.front() != i) {
          auto v = w;
          v.insert(v.begin(), i);
          next.push_back(std::move(v));
        }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST_F(PathsA1, StraightPaths) {
  for (const Weight& w : {L0, L1, 2 * L1, L0 + L1 + 3 * delta}) {
    const auto p = straight_path(ad, w);
    EXPECT_EQ(p.segments().size(), 1u);
    EXPECT_EQ(p.weight(), w);
    for (int i : ad.nodes()) {
      EXPECT_EQ(eps_phi(ad, i, p), (EpsPhi{0, w.h[ad.slot(i)]}));
      EXPECT_FALSE(root_op_e(ad, i, p));
    }
  }
  try {
    straight_path(ad, aff({2, -1}, 0));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotDominant);
  }
}

TEST_F(PathsA1, ZeroPathKeepsItsDimension) {
  const auto z = straight_path(ad, ad.zero());
  EXPECT_TRUE(z.segments().empty());
  EXPECT_EQ(z.weight(), ad.zero());
  EXPECT_EQ(concat_paths(z, z).weight(), ad.zero());
  for (int i : ad.nodes()) EXPECT_FALSE(root_op_f(ad, i, z));
  EXPECT_EQ(crystal_character(generate_demazure_set(ad, ad.zero(), WeylWord{{1, 0}})),
            FormalCharacter(ad.label(), ad.zero()));
}

TEST_F(PathsA1, LoweringAndRaising) {
  const auto b = straight_path(ad, L1);
  const auto f1 = root_op_f(ad, 1, b);
  ASSERT_TRUE(f1);
  EXPECT_EQ(*f1, LSPath::straight(L1 - ad.simple_root(1)));
  EXPECT_FALSE(root_op_f(ad, 1, *f1));
  EXPECT_EQ(eps_phi(ad, 1, *f1), (EpsPhi{1, 0}));
  EXPECT_EQ(root_op_e(ad, 1, *f1), b);

  const auto f0 = root_op_f(ad, 0, straight_path(ad, L0));
  ASSERT_TRUE(f0);
  EXPECT_EQ(f0->weight(), L0 - ad.simple_root(0));
  EXPECT_FALSE(root_op_f(ad, 1, straight_path(ad, L0)));
}

TEST_F(PathsA1, LoweringSplitsAStraightPath) {
  // phi_1(2 Lambda_1) = 2: f_1 once gives a two-segment path, twice the reflected straight path
  const auto b = straight_path(ad, 2 * L1);
  const auto once = root_op_f(ad, 1, b);
  ASSERT_TRUE(once);
  EXPECT_EQ(once->segments().size(), 2u);
  EXPECT_EQ(once->weight(), 2 * L1 - ad.simple_root(1));
  const auto twice = root_op_f(ad, 1, *once);
  ASSERT_TRUE(twice);
  EXPECT_EQ(*twice, LSPath::straight(reflect_weight(ad, 1, 2 * L1)));
  EXPECT_EQ(root_op_e(ad, 1, *twice), once);
}

TEST_F(PathsA1, DemazureSets) {
  EXPECT_EQ(generate_demazure_set(ad, L1, WeylWord{}).size(), 1u);
  const auto two = generate_demazure_set(ad, L1, WeylWord{{1}});
  EXPECT_EQ(two.size(), 2u);
  FormalCharacter expect(ad.label(), L1);
  expect.add(L1 - ad.simple_root(1), 1);
  EXPECT_EQ(crystal_character(two), expect);
  EXPECT_EQ(crystal_character(two), demazure_word_char(ad, WeylWord{{1}}, L1));

  const auto four = generate_demazure_set(ad, L0 + delta, WeylWord{{1, 0}});
  EXPECT_EQ(four.size(), 4u);
  EXPECT_EQ(crystal_character(four), demazure_word_char(ad, WeylWord{{1, 0}}, L0 + delta));

  EXPECT_EQ(crystal_character(generate_demazure_set(ad, L0, WeylWord{})), FormalCharacter(ad.label(), L0));
}

TEST_F(PathsA1, ConcatenationAddsWeights) {
  EXPECT_EQ(concat_paths(straight_path(ad, L0), straight_path(ad, L1)).weight(), L0 + L1);
  const auto f = *root_op_f(ad, 1, straight_path(ad, 2 * L1));
  EXPECT_EQ(concat_paths(straight_path(ad, L0 + delta), f).weight(), L0 + delta + f.weight());
  EXPECT_EQ(concat_paths(f, f).weight(), 2 * f.weight());
  // concatenating a straight path with itself is the same straight path scaled
  EXPECT_EQ(concat_paths(straight_path(ad, L1), straight_path(ad, L1)), LSPath::straight(2 * L1));
}

TEST_F(PathsA1, JosephExamples) {
  const auto one = joseph_highest(ad, L0, L1, WeylWord{{1}});
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].path, straight_path(ad, L1));
  EXPECT_EQ(one[0].nu, L0 + L1);

  const auto empty = joseph_highest(ad, L0, 2 * L1, WeylWord{});
  ASSERT_EQ(empty.size(), 1u);
  EXPECT_EQ(empty[0].nu, L0 + 2 * L1);

  const auto pairs = joseph_highest(ad, L0, L0 + delta, WeylWord{{1, 0}});
  std::multiset<Weight> nus;
  for (const auto& h : pairs) {
    nus.insert(h.nu);
    EXPECT_TRUE(ad.is_dominant(h.nu));
    EXPECT_EQ(h.nu, L0 + h.path.weight());
  }
  EXPECT_EQ(nus, (std::multiset<Weight>{aff({0, 2}, 0), aff({2, 0}, 1)}));
}

TEST(Paths, CrystalAxiomsAndEStability) {
  for (int n : {1, 2}) {
    const auto ad = affinize(build_finite_datum('A', n));
    for (int rep = 0; rep < 6; ++rep) {
      Weight lam(ad.dim());
      for (auto& x : lam.h) x = oracle::uniform(0, 2);
      if (lam.is_zero()) lam.h[0] = 1;
      WeylWord w;
      for (int k = 0; k < (n == 1 ? 5 : 3); ++k) w.letters.push_back(static_cast<int>(oracle::uniform(0, n)));
      const auto ps = generate_demazure_set(ad, lam, w);
      for (const auto& p : ps.paths) {
        for (int i : ad.nodes()) {
          const auto ep = eps_phi(ad, i, p);
          EXPECT_EQ(ep.phi - ep.eps, p.weight().h[ad.slot(i)]);
          EXPECT_EQ(ad.level(p.weight()), ad.level(lam));
          if (auto q = root_op_e(ad, i, p)) {
            EXPECT_TRUE(ps.contains(*q));
            EXPECT_EQ(root_op_f(ad, i, *q), p);
            EXPECT_EQ(eps_phi(ad, i, *q).eps, ep.eps - 1);
          } else {
            EXPECT_EQ(ep.eps, 0);
          }
          if (auto q = root_op_f(ad, i, p)) {
            EXPECT_EQ(root_op_e(ad, i, *q), p);
            EXPECT_EQ(q->weight(), p.weight() - ad.simple_root(i));
          } else {
            EXPECT_EQ(ep.phi, 0);
          }
        }
      }
    }
  }
}

TEST(Paths, CrystalMatchesOperatorsOnA1) {
  const auto ad = affinize(build_finite_datum('A', 1));
  for (std::int64_t a = 0; a <= 2; ++a)
    for (std::int64_t b = 0; a + b <= 2; ++b) {
      if (a + b == 0) continue;
      const Weight lam = aff({a, b}, 0);
      for (const auto& w : reachable_words(ad, lam, 6))
        EXPECT_EQ(crystal_character(generate_demazure_set(ad, lam, w)), demazure_word_char(ad, w, lam))
            << lam << " word size " << w.length();
    }
}

TEST(Paths, CrystalMatchesOperatorsOnA2) {
  const auto ad = affinize(build_finite_datum('A', 2));
  for (int k : ad.nodes()) {
    const Weight lam = ad.fundamental(k);
    for (const auto& w : reachable_words(ad, lam, 4))
      EXPECT_EQ(crystal_character(generate_demazure_set(ad, lam, w)), demazure_word_char(ad, w, lam))
          << lam << " word size " << w.length();
  }
}

TEST(Paths, JosephCriterionAgreesWithConcatenation) {
  const auto ad = affinize(build_finite_datum('A', 1));
  for (int rep = 0; rep < 10; ++rep) {
    const Weight mu = aff({oracle::uniform(0, 2), oracle::uniform(0, 2)}, 0);
    const Weight lam = aff({oracle::uniform(0, 2), oracle::uniform(1, 2)}, 0);
    const WeylWord w{{0, 1, 0, 1}};
    const auto ps = generate_demazure_set(ad, lam, w);
    const auto hi = joseph_highest(ad, mu, lam, w);
    std::set<LSPath> chosen;
    for (const auto& h : hi) chosen.insert(h.path);
    for (const auto& b : ps.paths) EXPECT_EQ(chosen.count(b) == 1, joseph_criterion(ad, mu, b)) << mu << lam << b;
  }
}

TEST(Paths, ExportGraphListsLoweringEdges) {
  const auto ad = affinize(build_finite_datum('A', 1));
  const auto ps = generate_demazure_set(ad, ad.fundamental(1), WeylWord{{1}});
  const auto text = export_graph(ad, ps);
  std::istringstream in(text);
  std::size_t src = 0, dst = 0;
  int node = -1;
  ASSERT_TRUE(in >> src >> node >> dst);
  EXPECT_EQ(node, 1);
  EXPECT_NE(src, dst);
  EXPECT_FALSE(in >> src);
}

TEST(Paths, FiniteTypeOperatorsWork) {
  const auto rd = build_finite_datum('G', 2);
  const auto ps = generate_demazure_set(rd, rd.fundamental(1), rd.longest_word());
  EXPECT_EQ(ps.size(), 7u);
  EXPECT_EQ(crystal_character(ps), weyl_character_finite(rd, rd.fundamental(1)));
}
