#include <gtest/gtest.h>

#include "gridlike/generators.hpp"
#include "gridlike/transversal.hpp"
#include "oracles.hpp"

using namespace gridlike;

TEST(ColouredGraph, ValidatesPartition) {
  const Graph g(4, {{0, 2}, {1, 3}});
  EXPECT_NO_THROW(ColouredGraph(g, {{0, 1}, {2, 3}}));
  EXPECT_THROW(ColouredGraph(g, {{0, 2}, {1, 3}}), InputError);
  EXPECT_THROW(ColouredGraph(g, {{0, 1}, {2}}), InputError);
  EXPECT_THROW(ColouredGraph(g, {{0, 1}, {1, 2, 3}}), InputError);
  const ColouredGraph cg(g, {{0, 1}, {2, 3}});
  EXPECT_EQ(cg.class_edges(0), 2u);
  EXPECT_EQ(cg.bichromatic(0, 1).m(), 2u);
}

TEST(CheckTransversal, Failures) {
  const ColouredGraph cg(Graph(4, {{0, 2}}), {{0, 1}, {2, 3}});
  EXPECT_TRUE(check_transversal(cg, {{0, 3}}));
  EXPECT_FALSE(check_transversal(cg, {{0, 2}}));
  EXPECT_FALSE(check_transversal(cg, {{2, 0}}));
  EXPECT_FALSE(check_transversal(cg, {{0}}));
}

TEST(Thresholds, Values) {
  EXPECT_EQ(lll_threshold(2, 1), 6);
  EXPECT_EQ(lll_threshold(3, 1), 17);
  EXPECT_EQ(lll_threshold(3, 2), 33);
  EXPECT_EQ(lll_threshold(5, 0), 0);
  EXPECT_THROW(lll_threshold(1, 1), PreconditionError);
  EXPECT_EQ(greedy_threshold(2, 1), 3);
  EXPECT_EQ(greedy_threshold(3, 1), 7);
}

TEST(RandomDegenerate, PairsAreDegenerate) {
  Rng rng(2);
  for (int trial = 0; trial < 50; ++trial) {
    const int d = 1 + trial % 3;
    const ColouredGraph cg = random_degenerate_coloured(3, d, 6, rng);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        const Graph pair = cg.bichromatic(i, j);
        EXPECT_LE(oracle::degeneracy(pair), d);
        EXPECT_LE(pair.m(), static_cast<std::size_t>(d) * pair.n());
      }
  }
}

TEST(MoserTardos, DeterministicPerSeed) {
  Rng rng(4);
  const ColouredGraph cg = random_degenerate_coloured(3, 1, 17, rng);
  const auto a = transversal_lll(cg, 1, 77, 1000);
  const auto b = transversal_lll(cg, 1, 77, 1000);
  ASSERT_TRUE(a.transversal);
  EXPECT_EQ(a.transversal, b.transversal);
  EXPECT_EQ(a.rounds, b.rounds);
  EXPECT_EQ(a.seed, 77u);
}

TEST(MoserTardos, AgreesWithExistence) {
  Rng rng(6);
  for (int trial = 0; trial < 200; ++trial) {
    const ColouredGraph cg = random_degenerate_coloured(3, 2, 2 + trial % 3, rng, 0.9);
    const bool exists = oracle::has_transversal(cg.graph(), cg.classes());
    const auto out = moser_tardos(cg, static_cast<std::uint64_t>(trial), 5000);
    if (out.transversal) {
      EXPECT_TRUE(check_transversal(cg, *out.transversal));
    }
    if (!exists) {
      EXPECT_FALSE(out.transversal);
    }
    if (exists) {
      EXPECT_TRUE(out.transversal) << "5000 rounds should find one of these tiny transversals";
    }
    const auto full = exhaustive_transversal(cg);
    EXPECT_TRUE(full.complete);
    EXPECT_EQ(full.transversal.has_value(), exists);
  }
}

TEST(Lll, HypothesesChecked) {
  Rng rng(5);
  EXPECT_THROW(transversal_lll(random_degenerate_coloured(2, 1, 5, rng), 1, 0, 100), PreconditionError);
  EXPECT_THROW(transversal_lll(ColouredGraph(complete_bipartite(6, 6), {{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11}}), 1,
                               0, 100),
               PreconditionError);
  EXPECT_NO_THROW(transversal_lll(random_degenerate_coloured(2, 1, 6, rng), 1, 0, 100));
}

TEST(Lll, ZeroDegeneracyAlwaysSucceeds) {
  Rng rng(9);
  for (int n = 1; n <= 4; ++n) {
    const auto out = transversal_lll(random_degenerate_coloured(4, 0, n, rng), 0, 1, 0);
    ASSERT_TRUE(out.transversal);
    EXPECT_EQ(out.rounds, 0u);
  }
}

TEST(Greedy, SucceedsAboveBound) {
  Rng rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 2 + trial % 3;
    const int d = 1 + trial % 2;
    const ColouredGraph cg = random_degenerate_coloured(r, d, greedy_threshold(r, d), rng);
    const auto t = transversal_greedy(cg, d);
    ASSERT_TRUE(t);
    EXPECT_TRUE(check_transversal(cg, *t));
  }
}

TEST(Greedy, FailsOnCounterexample) {
  EXPECT_FALSE(transversal_greedy(counterexample_graph(3, 1), 1));
}

TEST(Counterexample, Structure) {
  for (int r = 2; r <= 4; ++r) {
    for (int d = 1; d <= 2; ++d) {
      const ColouredGraph cg = counterexample_graph(r, d);
      EXPECT_EQ(cg.classes()[0].size(), static_cast<std::size_t>(d * (r - 1)));
      EXPECT_FALSE(oracle::has_transversal(cg.graph(), cg.classes()));
      for (int i = 1; i < r; ++i) EXPECT_EQ(oracle::degeneracy(cg.bichromatic(0, i)), d);
      for (int i = 1; i < r; ++i)
        for (int j = i + 1; j < r; ++j) EXPECT_EQ(cg.bichromatic(i, j).m(), 0u);
    }
  }
  EXPECT_EQ(counterexample_graph(3, 1, 4).graph().n(), 2 + 8);
  EXPECT_THROW(counterexample_graph(1, 1), PreconditionError);
}

TEST(General, TrimsAndResamples) {
  Rng rng(14);
  for (int trial = 0; trial < 100; ++trial) {
    const ColouredGraph cg = random_degenerate_coloured(3, 1, 30, rng);
    std::int64_t worst_edges = 0, worst_size = 1;
    for (int i = 0; i < 3; ++i) {
      const auto m = static_cast<std::int64_t>(cg.class_edges(i));
      const auto n = static_cast<std::int64_t>(cg.classes()[i].size());
      if (m * worst_size > worst_edges * n) worst_edges = m, worst_size = n;
    }
    // t = max m_i / n_i; then n_i = 30 >= 2et needs t <= 5.5
    const Rational t{worst_edges, worst_size};
    if (30 < 2 * std::numbers::e * t.value()) continue;
    const GeneralOutcome out = transversal_general(cg, t, static_cast<std::uint64_t>(trial), 10000);
    ASSERT_TRUE(out.resample.transversal);
    EXPECT_TRUE(check_transversal(cg, *out.resample.transversal));
    for (const DeletionStep& s : out.deletions) {
      // (m - deg) / (n - 1) <= m / n
      EXPECT_LE((s.class_edges - s.degree) * s.class_size, s.class_edges * (s.class_size - 1));
    }
    EXPECT_EQ(out.deletions.size(), static_cast<std::size_t>(3 * (30 - out.target_size)));
  }
}

TEST(General, HypothesisChecked) {
  const ColouredGraph cg = counterexample_graph(3, 1);
  EXPECT_THROW(transversal_general(cg, Rational{1, 1}, 0, 10), PreconditionError);
}
