#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "kcut/oracle.hpp"
#include "kcut/psp.hpp"

using namespace kcut;
using namespace kcut::fixtures;

TEST(Rational, ArithmeticAndParse) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
  EXPECT_LT(Rational(3, 4), Rational(1));
  EXPECT_EQ(Rational::parse("6/8"), Rational(3, 4));
  EXPECT_EQ(Rational(-3, 6).str(), "-1/2");
}

TEST(Loads, PartitionValueExamples) {
  EXPECT_EQ(partition_value(complete(4)).value, Rational(2));
  EXPECT_EQ(partition_value(cycle(4)).value, Rational(4, 3));
  PartitionValue ex = partition_value(ex1());
  EXPECT_EQ(ex.value, Rational(1));
  EXPECT_EQ(ex.partition.blocks(), (std::vector<VertexSet>{range(0, 4), range(4, 8)}));
}

TEST(Loads, PartitionValueMatchesOracle) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    Graph g = gnp(7 + static_cast<int>(seed % 3), 0.5, seed);
    PartitionValue pv = partition_value(g);
    OracleResult o = brute_partition_value(g);
    EXPECT_EQ(pv.value, o.value) << "seed " << seed;
    EXPECT_EQ(pv.partition, *o.partition) << "seed " << seed;
  }
}

TEST(Loads, PartitionValueCapacity) {
  ExactLoadOptions opt;
  opt.exact_cap = 6;
  EXPECT_THROW(partition_value(cycle(8), opt), CapabilityError);
}

TEST(Loads, IdealExamples) {
  for (const Rational& l : ideal_loads(complete(4)).load) EXPECT_EQ(l, Rational(1, 2));
  for (const Rational& l : ideal_loads(cycle(4)).load) EXPECT_EQ(l, Rational(3, 4));
  Graph g = ex1();
  LoadVector lv = ideal_loads(g);
  EdgeId bridge = *g.find_edge(0, 4);
  for (EdgeId e = 0; e < g.num_edges(); ++e)
    EXPECT_EQ(lv.load[e], e == bridge ? Rational(1) : Rational(1, 2));
}

TEST(Loads, GreedyPackingDependsOnEdgeOrder) {
  PackingState lex = greedy_tree_packing(complete(4), 2, true);
  ASSERT_EQ(lex.trees.size(), 2u);
  EXPECT_EQ(*std::max_element(lex.usage.begin(), lex.usage.end()), 2);

  Graph ordered(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}});
  PackingState even = greedy_tree_packing(ordered, 2, true);
  for (auto u : even.usage) EXPECT_EQ(u, 1);
}

TEST(Loads, GreedyPackingInvariants) {
  Graph g = gnp(12, 0.4, 3);
  PackingState p = greedy_tree_packing(g, 9, true);
  std::int64_t total = 0;
  for (auto u : p.usage) total += u;
  EXPECT_EQ(total, 9 * (g.num_vertices() - 1));
  for (const auto& tree : p.trees) {
    std::vector<EdgeId> others;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
      if (std::find(tree.begin(), tree.end(), e) == tree.end()) others.push_back(e);
    EXPECT_EQ(components(g, others).size(), 1);
    EXPECT_EQ(static_cast<int>(tree.size()), g.num_vertices() - 1);
  }
  LoadVector lv = concrete_loads(p);
  EXPECT_EQ(lv.provenance, LoadProvenance::Concrete);
  EXPECT_EQ(lv.t, 9);
}

TEST(Loads, RequiredTreeCount) {
  EXPECT_EQ(required_tree_count(2, 6, Rational(1, 2)), 87);
  EXPECT_EQ(required_tree_count(5, 1, Rational(1, 2)), 1);
  EXPECT_THROW(required_tree_count(2, 6, Rational(2)), PreconditionError);
}

TEST(Psp, Ex1Chain) {
  Graph g = ex1();
  PSPChain chain = loadsweep_psp(g, {});
  ASSERT_EQ(chain.depth(), 2);
  EXPECT_EQ(chain.level(1).lambda, Rational(1));
  EXPECT_EQ(chain.level(2).lambda, Rational(2));
  EXPECT_EQ(chain.level(1).edges, (std::vector<EdgeId>{*g.find_edge(0, 4)}));
  EXPECT_EQ(chain.partition(0), Partition::whole(8));
  EXPECT_EQ(chain.partition(1).size(), 2);
  EXPECT_EQ(chain.partition(2), Partition::discrete(8));
  EXPECT_EQ(static_cast<int>(chain.prefix(2).size()), g.num_edges());
}

TEST(Psp, K4AndSingleEdge) {
  PSPChain k4 = loadsweep_psp(complete(4), {});
  ASSERT_EQ(k4.depth(), 1);
  EXPECT_EQ(k4.level(1).lambda, Rational(2));
  PSPChain edge = loadsweep_psp(path(2), {});
  ASSERT_EQ(edge.depth(), 1);
  EXPECT_EQ(edge.level(1).lambda, Rational(1));
}

TEST(Psp, IdentityHoldsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    Graph g = gnp(9, 0.4, seed);
    PSPChain chain = loadsweep_psp(g, {});
    EXPECT_EQ(chain.partition(chain.depth()), Partition::discrete(9));
    for (int i = 1; i <= chain.depth(); ++i) {
      const PSPLevel& lv = chain.level(i);
      EXPECT_TRUE(lv.identity_ok);
      EXPECT_EQ(Rational(static_cast<std::int64_t>(lv.edges.size())),
                lv.lambda * Rational(lv.kappa_after - lv.kappa_before));
      EXPECT_TRUE(chain.partition(i).refines(chain.partition(i - 1)));
      if (i > 1) EXPECT_GT(lv.lambda, chain.level(i - 1).lambda);
    }
  }
}

TEST(Psp, PackingMatchesExactOnSmallGraphs) {
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    Graph g = gnp(8, 0.45, seed);
    PSPPolicy policy;
    policy.kind = PSPPolicy::Packing;
    PSPChain packed = loadsweep_psp(g, policy);
    PSPChain exact = loadsweep_psp(g, {});
    EXPECT_EQ(packed.source, PSPSource::Packing);
    EXPECT_EQ(packed.partitions, exact.partitions) << "seed " << seed;
  }
}

TEST(Psp, SelectLevelExamples) {
  Graph g = ex1();
  PSPChain chain = loadsweep_psp(g, {});
  LevelSelection s3 = select_level(chain, 3, g);
  EXPECT_EQ(s3.j, 2);
  EXPECT_EQ(s3.R, 1);
  EXPECT_EQ(s3.theta, Capacity(4));
  EXPECT_EQ(kernel_threshold(s3), 4);
  LevelSelection s2 = select_level(chain, 2, g);
  EXPECT_EQ(s2.j, 1);
  EXPECT_EQ(s2.R, 1);
  EXPECT_EQ(s2.theta, Capacity(1));

  Graph k4 = complete(4);
  LevelSelection s = select_level(loadsweep_psp(k4, {}), 4, k4);
  EXPECT_EQ(s.j, 1);
  EXPECT_EQ(s.R, 3);
  EXPECT_EQ(s.theta, Capacity(4));
  EXPECT_THROW(select_level(chain, 9, g), PreconditionError);
}

TEST(Psp, SelectLevelWithoutNontrivialCut) {
  Graph p3 = path(3);
  LevelSelection s = select_level(loadsweep_psp(p3, {}), 2, p3);
  EXPECT_FALSE(s.theta.has_value());
  EXPECT_EQ(kernel_threshold(s), 1);
}

TEST(Psp, UncrossOnRandomPairs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = gnp(10, 0.4, static_cast<std::uint64_t>(trial) + 1);
    std::vector<int> a(10), b(10);
    for (int v = 0; v < 10; ++v) {
      a[v] = static_cast<int>(rng() % 3);
      b[v] = static_cast<int>(rng() % 4);
    }
    Partition p = Partition::from_labels(a), q = Partition::from_labels(b);
    UncrossResult u = uncross_partitions(p, q, g);
    EXPECT_TRUE(u.holds);
    EXPECT_GE(u.lhs, u.rhs);
    EXPECT_TRUE(u.meet.refines(p) && u.meet.refines(q));
    EXPECT_TRUE(p.refines(u.join) && q.refines(u.join));
  }
}

TEST(Psp, LaminarizeCycleOfCliques) {
  Graph h = cycle_of_cliques(4, 4, 1);
  LaminarFamily lam = laminarize_min_borders(h, {range(0, 8), range(4, 12)});
  EXPECT_EQ(lam.theta, 2);
  EXPECT_TRUE(lam.refinements_preserved);
  for (const auto& s : lam.sets) EXPECT_EQ(cut(h, s).value, 2);
  for (std::size_t i = 0; i < lam.sets.size(); ++i)
    for (std::size_t j = i + 1; j < lam.sets.size(); ++j) {
      auto both = set_intersection(lam.sets[i], lam.sets[j]);
      bool nested = both.empty() || both == lam.sets[i] || both == lam.sets[j] ||
                    set_union(lam.sets[i], lam.sets[j]).size() == 16;
      EXPECT_TRUE(nested);
    }
}

TEST(Psp, LaminarizeOnCycleLosesRefinement) {
  // {0,1} and {1,2} cross, and every atom is trivial.
  LaminarFamily lam = laminarize_min_borders(cycle(4), {{0, 1}, {1, 2}});
  EXPECT_EQ(lam.sets.size(), 1u);
  EXPECT_FALSE(lam.refinements_preserved);
}

TEST(Psp, LaminarizeRejectsNonMinimumMembers) {
  EXPECT_THROW(laminarize_min_borders(ex1(), {range(0, 3)}), PreconditionError);
}
