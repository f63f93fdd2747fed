#include <gtest/gtest.h>

#include "slr/constructions.hpp"
#include "support.hpp"

namespace slr {
namespace {

OrderedHypergraph graph_from_mask(Vertex n, std::uint32_t mask) {
  std::vector<Tuple> edges;
  const auto pairs = testing::all_tuples(n, 2);
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (mask >> i & 1u) edges.push_back(pairs[i]);
  return OrderedHypergraph::from_edges(n, 2, edges);
}

SemialgebraicDescription line_graph(std::vector<long> xs, const Rational& c) {
  SemialgebraicDescription g;
  g.d = 1;
  g.r = 2;
  for (long x : xs) g.points.push_back({Rational(x)});
  g.functions = {PolynomialFunction::from_linear(LinearFunction{{{Rational(1)}, {Rational(-1)}}, c})};
  g.phi = SignTable::from_function(1, [](std::span<const int> s) { return s[0] < 0; });
  return g;
}

TEST(Delta, Examples) {
  EXPECT_EQ(delta({0, 1, 1}, {0, 1, 0}), 3u);
  EXPECT_EQ(delta({0}, {1}), 1u);
  EXPECT_THROW(delta({0, 1}, {0, 1}), PreconditionError);
}

TEST(Delta, OrderProperties) {
  for (unsigned n = 1; n <= 4; ++n) {
    const Vertex count = Vertex{1} << n;
    for (const auto& t : testing::all_tuples(count, 3)) {
      const auto a = word_of(t[0], n), b = word_of(t[1], n), c = word_of(t[2], n);
      EXPECT_LT(a, b);
      EXPECT_LT(b, c);
      const auto ab = delta(a, b), bc = delta(b, c), ac = delta(a, c);
      EXPECT_NE(ab, bc);
      EXPECT_EQ(ac, std::min(ab, bc));
      // a has 0 and b has 1 at the first difference.
      EXPECT_EQ(a[ab - 1], 0);
      EXPECT_EQ(b[ab - 1], 1);
    }
  }
}

TEST(StepUp, SingleEdge) {
  const auto g = OrderedHypergraph::from_edges(2, 2, {{1, 2}});
  // 00, 01, 10, 11 are vertices 1..4.
  EXPECT_EQ(step_up(g).edges(), (std::vector<Tuple>{{1, 3, 4}, {2, 3, 4}}));
  EXPECT_TRUE(step_up(OrderedHypergraph(3, 2)).edges().empty());
}

TEST(StepUp, MatchesDefinition) {
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    const auto g = graph_from_mask(3, mask);
    const auto expected = testing::edges_by_rule(8, 3, [&](const Tuple& t) {
      const auto a = word_of(t[0], 3), b = word_of(t[1], 3), c = word_of(t[2], 3);
      const auto d1 = delta(a, b), d2 = delta(b, c);
      const Tuple pair{static_cast<Vertex>(d1), static_cast<Vertex>(d2)};
      return d1 < d2 && g.contains(pair);
    });
    EXPECT_EQ(step_up(g).edges(), expected);
  }
}

TEST(StepUp, BoundsOnSmallGraphs) {
  for (Vertex n = 2; n <= 3; ++n)
    for (std::uint32_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
      const auto g = graph_from_mask(n, mask);
      const auto h = step_up(g);
      const std::size_t wg = testing::naive_omega(g), ag = testing::naive_alpha(g);
      EXPECT_LE(testing::naive_omega(h), wg + 1);
      EXPECT_LE(Integer(static_cast<unsigned long>(testing::naive_alpha(h))), pow(Integer(n), ag) + 1);
    }
}

TEST(StepUp, SizeGuard) { EXPECT_THROW(step_up(OrderedHypergraph(17, 2)), PreconditionError); }

TEST(Robust, Detection) {
  EXPECT_TRUE(is_robust(line_graph({0, 1}, Rational::parse("1/3"))));
  EXPECT_FALSE(is_robust(line_graph({0, 1}, Rational(1))));
  Rational c;
  const auto r = robustify(line_graph({0, 1}, Rational(1)), &c);
  EXPECT_TRUE(is_robust(r));
  EXPECT_TRUE(same_edges(realize(r), realize(line_graph({0, 1}, Rational(1)))));
  EXPECT_GT(c, Rational(0));
}

TEST(StepUpWitness, RealizesStepUp) {
  const std::vector<std::pair<std::vector<long>, Rational>> cases = {
      {{0, 1}, Rational::parse("1/3")},
      {{0, 1, 2}, Rational::parse("1/3")},
      {{0, 1, 2}, Rational::parse("3/2")},
      {{0, 2, 3}, Rational::parse("3/2")},
      {{0, 1, 2}, Rational::parse("-1/2")},
  };
  for (const auto& [xs, c] : cases) {
    const auto g = line_graph(xs, c);
    const auto w = step_up_witness(g);
    EXPECT_EQ(step_up_sign_disagreements(g, w), 0u);
    EXPECT_EQ(w.points.size(), std::size_t{1} << xs.size());
    EXPECT_GT(w.epsilon, Rational(0));
    EXPECT_TRUE(same_edges(realize(w.description()), step_up(realize(g))));
  }
}

TEST(StepUpWitness, NoFunctions) {
  SemialgebraicDescription g;
  g.d = 1;
  g.r = 2;
  g.points = {{Rational(0)}, {Rational(1)}};
  g.phi = SignTable::constant(0, false);
  const auto w = step_up_witness(g);
  EXPECT_EQ(step_up_sign_disagreements(g, w), 0u);
  EXPECT_TRUE(realize(w.description()).edges().empty());
}

TEST(StepUpWitness, Preconditions) {
  EXPECT_THROW(step_up_witness(line_graph({0, 1}, Rational(1))), PreconditionError);
  EXPECT_NO_THROW(step_up_witness(line_graph({0, 1}, Rational(1)), true));
  // Decreasing pairs must be rejected by the sign table.
  auto g = line_graph({0, 1}, Rational::parse("1/3"));
  g.phi = SignTable::constant(1, true);
  EXPECT_THROW(step_up_witness(g), PreconditionError);
}

TEST(Incidence, SmallGrids) {
  const auto g1 = incidence_graph(1);
  EXPECT_EQ(g1.graph.n(), 1u);
  EXPECT_EQ(g1.lines, 1u);
  EXPECT_TRUE(g1.graph.edges().empty());
  const auto g2 = incidence_graph(2);
  EXPECT_EQ(g2.graph.n(), 16u);
  EXPECT_EQ(g2.lines, 8u);
  EXPECT_EQ(g2.points, 16u);
  EXPECT_EQ(g2.m, 16u);
  EXPECT_EQ(brute_omega(g2.graph).size, 2u);
  for (const auto& [p, l] : g2.incidences) EXPECT_EQ(p.second, l.first * p.first + l.second);
}

TEST(Incidence, TriangleFree) {
  for (unsigned k = 1; k <= 3; ++k) {
    const auto g = incidence_graph(k);
    EXPECT_EQ(g.incidences.size(), std::size_t{k} * k * k * k);
    for (const auto& e : g.graph.edges())
      for (Vertex c = 1; c <= g.graph.n(); ++c) {
        if (c == e[0] || c == e[1]) continue;
        Tuple ac{std::min(e[0], c), std::max(e[0], c)}, bc{std::min(e[1], c), std::max(e[1], c)};
        EXPECT_FALSE(g.graph.contains(ac) && g.graph.contains(bc));
      }
    if (k <= 2) {
      EXPECT_LE(brute_omega(g.graph).size, 2u);
      EXPECT_LE(brute_alpha(g.graph).size, 2 * g.m);
    }
  }
}

TEST(LowerBound, SingleVertexBase) {
  const auto c = lower_bound_3uniform(1);
  EXPECT_EQ(c.hypergraph.n(), 2u);
  EXPECT_TRUE(c.hypergraph.edges().empty());
  EXPECT_EQ(c.omega_bound, 2u);
  EXPECT_EQ(c.alpha_bound, 2);
  EXPECT_LE(brute_omega(c.hypergraph).size, 3u);
  EXPECT_LE(Integer(static_cast<unsigned long>(brute_alpha(c.hypergraph).size)), c.alpha_bound);
}

TEST(Shift3, FourVertices) {
  EXPECT_EQ(shift3_hypergraph(4).edges(), (std::vector<Tuple>{{1, 3, 4}}));
  EXPECT_TRUE(same_edges(realize(shift3_description(9)), shift3_hypergraph(9)));
}

TEST(Shift3, LogBound) {
  for (Vertex n : {8u, 16u, 32u, 64u}) {
    const auto h = shift3_hypergraph(n);
    EXPECT_LE(brute_alpha(h).size, shift3_bound(n));
    if (n <= 32) {
      EXPECT_LE(brute_omega(h).size, shift3_bound(n));
    }
  }
  EXPECT_EQ(shift3_bound(16), 5u);
  EXPECT_EQ(shift3_bound(17), 6u);
}

TEST(RandomDescription, SeedDetermines) {
  const auto a = random_description(2, 2, 3, 10, 10, 99);
  const auto b = random_description(2, 2, 3, 10, 10, 99);
  EXPECT_EQ(a.points, b.points);
  EXPECT_EQ(a.phi, b.phi);
  EXPECT_NO_THROW(a.validate());
}

TEST(Growth, EdgeExamples) {
  const auto h2 = growth_hypergraph(GrowthParams{{Rational(2)}}, 5);
  for (const Tuple& e : std::vector<Tuple>{{1, 2, 3, 4}, {1, 2, 3, 5}, {1, 3, 4, 5}, {2, 3, 4, 5}})
    EXPECT_TRUE(h2.contains(e));
  EXPECT_FALSE(growth_hypergraph(GrowthParams{{Rational(10)}}, 5).contains(Tuple{1, 2, 3, 4}));
  EXPECT_TRUE(same_edges(realize(growth_description(GrowthParams{{Rational(3)}}, 9)),
                         growth_hypergraph(GrowthParams{{Rational(3)}}, 9)));
}

// Edge rule: sum_i (-1)^i t_i (y_i - x_i) > 0 with t_0 = 1, t_i = s_i t_(i-1).
TEST(Growth, MatchesFormula) {
  const GrowthParams p{{Rational(5), Rational::parse("3/2")}};
  const auto h = growth_hypergraph(p, 9);
  for (const auto& e : testing::all_tuples(9, 6)) {
    const Rational t1(5), t2 = Rational(5) * Rational::parse("3/2");
    const Rational f = Rational(static_cast<long>(e[5]) - e[0]) - t1 * Rational(static_cast<long>(e[4]) - e[1]) +
                       t2 * Rational(static_cast<long>(e[3]) - e[2]);
    ASSERT_EQ(h.contains(e), f > Rational(0));
  }
}

TEST(Growth, CommonScalingOfT) {
  // Scaling every t_i by c is the same as multiplying f by c.
  const GrowthParams p{{Rational(7), Rational(3)}};
  auto d = growth_description(p, 10);
  auto scaled = d;
  scaled.functions[0] = scaled.functions[0].scaled(Rational::parse("5/3"));
  EXPECT_TRUE(same_edges(realize(d), realize(scaled)));
}

TEST(Growth, Validation) {
  EXPECT_THROW((GrowthParams{{Rational(2), Rational(3)}}.validate()), PreconditionError);
  EXPECT_THROW(GrowthParams{{Rational(0)}}.validate(), PreconditionError);
  EXPECT_THROW(growth_bounds(GrowthParams{{Rational(1)}}, 10), PreconditionError);
  EXPECT_FALSE(GrowthParams{{Rational(4)}}.proven_regime());
  EXPECT_TRUE(GrowthParams{{Rational(1000000)}}.proven_regime());
  EXPECT_TRUE(growth_standing_assumption(GrowthParams{{Rational(4)}}, 5));
  EXPECT_FALSE(growth_standing_assumption(GrowthParams{{Rational(4)}}, 4));
}

TEST(Growth, BoundsSingleParameter) {
  const auto b = growth_bounds(GrowthParams{{Rational(4)}}, 64);
  const Rational slack(Integer(10), pow(Integer(2), 32));
  EXPECT_GE(b.clique_bound, Rational(90));
  EXPECT_LE(b.clique_bound, Rational(90) + slack);
  EXPECT_EQ(b.independence_bound, Rational(60));
  EXPECT_FALSE(b.proven_regime);
  const auto b2 = growth_bounds(GrowthParams{{Rational(8)}}, 100);
  // log 100 / log 8 = 2.2146...
  EXPECT_GT(b2.clique_bound, Rational::parse("1221/10"));
  EXPECT_LT(b2.clique_bound, Rational::parse("1222/10"));
}

TEST(Growth, Schedule) {
  const auto small = growth_schedule(3, Integer(1) << 27);
  ASSERT_EQ(small.s.size(), 3u);
  EXPECT_EQ(small.s[0], Rational(512));  // 27^(2/3) = 9
  EXPECT_EQ(small.s[1], Rational(8));  // 27^(1/3) = 3
  EXPECT_EQ(small.s[2], Rational(1000000));
  EXPECT_THROW(small.validate(), PreconditionError);
  const auto big = growth_schedule(2, Integer(1) << 400);
  EXPECT_EQ(big.s[0], Rational(1 << 20));
  EXPECT_NO_THROW(big.validate());
  EXPECT_TRUE(big.proven_regime());
  // 2^ceil(sqrt(log2 1000)) with log2 1000 = 9.97 gives 2^4.
  EXPECT_EQ(growth_schedule(2, Integer(1000)).s[0], Rational(16));
}

}  // namespace
}  // namespace slr
