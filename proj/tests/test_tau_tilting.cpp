#include <set>
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "relrigid/error.hpp"
#include "relrigid/invariants.hpp"
#include "relrigid/poset.hpp"
#include "relrigid/standard_modules.hpp"
#include "relrigid/tau_tilting.hpp"

using namespace relrigid;

namespace {

std::size_t find_label(const TauExchangeGraph& g, const std::string& label) {
  for (std::size_t k = 0; k < g.labels.size(); ++k) {
    if (g.labels[k] == label) return k;
  }
  return g.labels.size();
}

}  // namespace

TEST(TauTilting, A3HasTwelvePairs) {
  const auto lib = fixtures::a3();
  const TauExchangeGraph g = exchange_graph(lib.algebra);
  EXPECT_EQ(g.nodes.size(), 12u);
  EXPECT_EQ(g.edges.size(), 18u);
  EXPECT_EQ(brute_force_support_tau_tilting_count(lib.algebra, lib.modules()), 12u);
  std::set<std::string> labels(g.labels.begin(), g.labels.end());
  EXPECT_EQ(labels.size(), 12u);
}

TEST(TauTilting, OneVertex) {
  const BoundAlgebra a = load_algebra(fixtures::data("one_vertex.alg"));
  const TauExchangeGraph g = exchange_graph(a);
  ASSERT_EQ(g.nodes.size(), 2u);
  EXPECT_EQ(g.edges.size(), 1u);
  EXPECT_EQ(g.labels[0], "1");
  EXPECT_EQ(g.labels[1], "0 | P(1)");
  EXPECT_TRUE(g.leq[1][0]);
  EXPECT_FALSE(g.leq[0][1]);
}

TEST(TauTilting, HasseTopAndBottom) {
  const auto lib = fixtures::a3();
  const TauExchangeGraph g = exchange_graph(lib.algebra);
  const std::size_t top = find_label(g, "3 + 2/3 + 1/2");
  const std::size_t bottom = find_label(g, "0 | P(1,2,3)");
  ASSERT_LT(top, g.nodes.size());
  ASSERT_LT(bottom, g.nodes.size());
  for (std::size_t k = 0; k < g.nodes.size(); ++k) {
    EXPECT_TRUE(g.leq[k][top]);
    EXPECT_TRUE(g.leq[bottom][k]);
  }
  // Brute-force covers over the order table.
  std::set<std::pair<std::size_t, std::size_t>> brute;
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    for (std::size_t b = 0; b < g.nodes.size(); ++b) {
      if (a == b || !g.leq[a][b]) continue;
      bool between = false;
      for (std::size_t c = 0; c < g.nodes.size(); ++c) {
        between = between || (c != a && c != b && g.leq[a][c] && g.leq[c][b]);
      }
      if (!between) brute.insert({a, b});
    }
  }
  using Pairs = std::set<std::pair<std::size_t, std::size_t>>;
  const auto covers = covering_pairs(g.leq);
  EXPECT_EQ(Pairs(covers.begin(), covers.end()), brute);
  // For tau-tilting finite algebras the Hasse diagram is the exchange graph.
  EXPECT_EQ(covers.size(), g.edges.size());
}

TEST(TauTilting, MutationIsAnInvolution) {
  const auto lib = fixtures::a3();
  const TauExchangeGraph g = exchange_graph(lib.algebra);
  for (const auto& p : g.nodes) {
    for (std::size_t k = 0; k < p.size(); ++k) {
      const PairPosition pos = k < p.modules.size() ? PairPosition{false, k} : PairPosition{true, k - p.modules.size()};
      const PairMutation mu = mutate_pair(lib.algebra, p, pos);
      EXPECT_TRUE(is_support_tau_tilting(lib.algebra, mu.result));
      EXPECT_FALSE(same_pair(mu.result, p));
      const PairMutation back = mutate_pair(lib.algebra, mu.result, mu.introduced);
      EXPECT_TRUE(same_pair(back.result, p));
      EXPECT_NE(back.direction, mu.direction);
    }
  }
}

TEST(TauTilting, RigidityExamples) {
  const auto lib = fixtures::a3();
  EXPECT_TRUE(is_tau_rigid(lib["1/2"]));
  EXPECT_TRUE(is_tau_rigid(lib["1"]));
  // tau S1 = S2 and Hom(S2 + S1, S2) != 0
  EXPECT_FALSE(is_tau_rigid(direct_sum(lib.algebra, {lib["2"], lib["1"]}).sum));
  const TauPair bad = make_tau_pair(lib.algebra, lib["2"], {1});
  EXPECT_FALSE(is_tau_rigid_pair(lib.algebra, bad));
  const TauPair good = make_tau_pair(lib.algebra, lib["3"], {0, 1});
  EXPECT_TRUE(is_support_tau_tilting(lib.algebra, good));
  EXPECT_THROW(make_tau_pair(lib.algebra, direct_sum(lib.algebra, {lib["1"], lib["1"]}).sum, {}), InputError);
}

TEST(TauTilting, FacOrder) {
  const auto lib = fixtures::a3();
  const TauPair all = make_tau_pair(lib.algebra, regular_module(lib.algebra).sum, {});
  const TauPair none{{}, {0, 1, 2}};
  EXPECT_TRUE(fac_leq(lib.algebra, none, all));
  EXPECT_FALSE(fac_leq(lib.algebra, all, none));
}

TEST(TauTilting, Ex1Traversal) {
  const auto lib = fixtures::ex1();
  const TauExchangeGraph g = exchange_graph(lib.algebra);
  EXPECT_EQ(g.nodes.size(), brute_force_support_tau_tilting_count(lib.algebra, lib.modules()));
  EXPECT_TRUE(partial_order_violation(g.leq).empty());
}

TEST(TauTilting, SuiteOnFixtures) {
  const auto lib = fixtures::a3();
  const SuiteReport r = check_tau_tilting(lib.algebra, lib.modules());
  for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

TEST(TauTilting, BudgetExceeded) {
  const auto lib = fixtures::a3();
  EXPECT_THROW(exchange_graph(lib.algebra, 3), BudgetExceeded);
  EXPECT_THROW(exchange_graph(fixtures::ex1().algebra, 3), BudgetExceeded);
  EXPECT_NO_THROW(exchange_graph(lib.algebra, 12));
}

TEST(TauTilting, DotIsDeterministic) {
  const auto lib = fixtures::a3();
  const TauExchangeGraph g1 = exchange_graph(lib.algebra);
  const TauExchangeGraph g2 = exchange_graph(fixtures::a3().algebra);
  EXPECT_EQ(hasse_dot("h", g1.labels, g1.leq), hasse_dot("h", g2.labels, g2.leq));
  EXPECT_EQ(exchange_dot("x", g1.labels, g1.edges, g1.leq), exchange_dot("x", g2.labels, g2.edges, g2.leq));
  EXPECT_EQ(hasse_dot("empty", {}, {}), "digraph \"empty\" {\n}\n");
}

TEST(TauTilting, PrimeFieldRejected) {
  const auto lib = fixtures::load("a3_rad2.alg", "", Field::prime(3));
  EXPECT_THROW(exchange_graph(lib.algebra), FieldError);
}
