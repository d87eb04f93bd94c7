#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/commuting.hpp"
#include "sylowlab/covering.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/graph.hpp"
#include "sylowlab/group_expr.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {
namespace {

ExactRatio R(std::int64_t a, std::int64_t b) { return ExactRatio(BigInt(a), BigInt(b)); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(SimpleGraph, Edges) {
  SimpleGraph g(4);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.add_edge(2, 3);
  EXPECT_EQ(g.edge_count(), 2u);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_EQ(g.degree(1), 1u);
  EXPECT_EQ(code_of([&] { g.add_edge(2, 2); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([&] { g.add_edge(0, 4); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(SimpleGraph::complete(5).edge_count(), 10u);
  EXPECT_EQ(SimpleGraph::path(5).edge_count(), 4u);
}

TEST(MaxClique, Examples) {
  EXPECT_EQ(max_clique(SimpleGraph(0)).size(), 0u);
  EXPECT_EQ(max_clique(SimpleGraph(3)).size(), 1u);
  EXPECT_EQ(max_clique(SimpleGraph::complete(7)).size(), 7u);
  EXPECT_EQ(max_clique(SimpleGraph::path(6)).size(), 2u);
}

TEST(MaxCliqueProperty, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = rng() % 25;
    const double density = 0.1 + 0.8 * (rng() % 100) / 100.0;
    const auto g = oracle::random_graph(n, density, rng);
    const auto clique = max_clique(g);
    ASSERT_EQ(clique.size(), oracle::exhaustive_clique_number(g)) << trial;
    for (std::size_t i = 0; i < clique.size(); ++i) {
      for (std::size_t j = i + 1; j < clique.size(); ++j) {
        EXPECT_TRUE(g.adjacent(clique.vertices[i], clique.vertices[j]));
      }
    }
  }
}

TEST(Turan, CompleteGraphsAttainTheBound) {
  for (std::size_t n = 1; n <= 24; ++n) {
    const auto r = turan_bound_check(SimpleGraph::complete(n));
    EXPECT_EQ(r.clique_number, n);
    EXPECT_EQ(r.bound, R(static_cast<std::int64_t>(n * (n - 1)), 2));
    EXPECT_TRUE(r.holds);
  }
}

TEST(TuranProperty, RandomGraphsAndPaths) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = oracle::random_graph(1 + rng() % 24, 0.5, rng);
    const auto r = turan_bound_check(g);
    EXPECT_TRUE(r.holds);
    EXPECT_EQ(r.clique_number, oracle::exhaustive_clique_number(g));
  }
  for (std::size_t n = 1; n <= 24; ++n) EXPECT_TRUE(turan_bound_check(SimpleGraph::path(n)).holds);
}

TEST(EdgeList, RoundTripAndErrors) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_graph(rng() % 15, 0.4, rng);
    const auto back = parse_edge_list(to_edge_list(g));
    EXPECT_EQ(back.vertex_count(), g.vertex_count());
    EXPECT_EQ(back.edges(), g.edges());
  }
  const auto g = parse_edge_list("# a triangle\n\n1 2\n2 3 # comment\n3 1\n");
  EXPECT_EQ(g.vertex_count(), 3u);
  EXPECT_EQ(g.edge_count(), 3u);
  try {
    (void)parse_edge_list("1 2\n2 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(e.offset(), std::optional<std::size_t>(6));
  }
  EXPECT_EQ(code_of([] { (void)parse_edge_list("# vertices 2\n1 3\n"); }), ErrorCode::kOutOfRange);
  EXPECT_EQ(code_of([] { (void)parse_edge_list("1 1\n"); }), ErrorCode::kSyntaxError);
}

TEST(NoncommutingGraph, Examples) {
  const auto abelian = noncommuting_graph(construct("C2 x C4"), {2});
  EXPECT_EQ(abelian.graph.edge_count(), 0u);
  const auto s3 = noncommuting_graph(construct("S3"), {2});
  EXPECT_EQ(s3.vertices.size(), 4u);
  EXPECT_EQ(s3.graph.edge_count(), 3u);
  EXPECT_EQ(s3.graph.degree(0), 0u);
  EXPECT_TRUE(s3.vertices[0].is_identity());
  const auto all = noncommuting_graph(construct("S3"), {2, 3});
  EXPECT_EQ(all.vertices.size(), 6u);
  // The three transpositions are pairwise noncommuting, and each fails to
  // commute with both 3-cycles.
  EXPECT_EQ(all.graph.edge_count(), 3u + 6u);
  EXPECT_EQ(code_of([] { (void)noncommuting_graph(construct("S3"), {4}); }), ErrorCode::kInvalidArgument);
}

TEST(CliqueNumber, Examples) {
  EXPECT_EQ(n_pi(construct("S3"), {2}).size(), 3u);
  EXPECT_EQ(n_pi(construct("C3 x C3"), {3}).size(), 1u);
  EXPECT_EQ(n_pi(construct("A4"), {3}).size(), 4u);
}

TEST(CommutingProbability, Examples) {
  EXPECT_EQ(pr_pi(construct("C6"), {2, 3}), ExactRatio(1));
  EXPECT_EQ(pr_pi(construct("S3"), {2}), R(5, 8));
  EXPECT_EQ(pr_pi(construct("S3"), {3}), ExactRatio(1));
}

// Pr counts ordered pairs: |V|^2 Pr is an integer equal to |V| plus twice the
// commuting unordered pairs, and the noncommuting edges make up the rest.
TEST(CommutingProperty, PairCountsAndBounds) {
  for (const auto& entry : catalog_up_to(500)) {
    const auto g = entry.group();
    for (auto p : prime_divisors(g.order())) {
      const auto graph = noncommuting_graph(g, {p});
      const auto v = graph.vertices.size();
      std::size_t commuting = 0;
      for (std::size_t i = 0; i < v; ++i) {
        for (std::size_t j = 0; j < v; ++j) {
          if (commute(graph.vertices[i], graph.vertices[j])) ++commuting;
        }
      }
      const auto pr = pr_pi(graph);
      EXPECT_EQ(pr, ExactRatio(BigInt(commuting), BigInt(v * v))) << entry.name;
      EXPECT_EQ((pr * ExactRatio(BigInt(v * v), BigInt(1))).den(), 1);
      EXPECT_EQ(commuting + 2 * graph.graph.edge_count(), v * v) << entry.name;
      const auto clique = n_pi(graph);
      EXPECT_GE(pr * ExactRatio(static_cast<std::int64_t>(clique.size())), ExactRatio(1)) << entry.name;
      for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
          EXPECT_FALSE(commute(clique.elements[i], clique.elements[j]));
        }
      }
    }
  }
}

TEST(SigmaClique, Examples) {
  const auto s3 = sigma_le_clique_check(construct("S3"), 2);
  EXPECT_EQ(s3.sigma.size, 3u);
  EXPECT_EQ(s3.clique.size(), 3u);
  EXPECT_TRUE(s3.holds);
  EXPECT_TRUE(s3.centralizers_cover);
  const auto a4 = sigma_le_clique_check(construct("A4"), 3);
  EXPECT_EQ(a4.sigma.size, 4u);
  EXPECT_EQ(a4.clique.size(), 4u);
  EXPECT_TRUE(a4.holds);
  EXPECT_EQ(code_of([] { (void)sigma_le_clique_check(construct("C3 x C3"), 3); }),
            ErrorCode::kPreconditionFailed);
  EXPECT_EQ(code_of([] { (void)sigma_le_clique_check(construct("S4"), 3); }),
            ErrorCode::kPreconditionFailed);
}

TEST(Biclique, Examples) {
  const auto abelian = c_pi_membership(construct("C2 x C2 x C2"), {2}, 3, 3);
  EXPECT_TRUE(abelian.member);
  const auto s3 = c_pi_membership(construct("S3"), {2}, 1, 1);
  ASSERT_FALSE(s3.member);
  ASSERT_EQ(s3.left.size(), 1u);
  ASSERT_EQ(s3.right.size(), 1u);
  EXPECT_NE(s3.left[0], s3.right[0]);
  EXPECT_FALSE(commute(s3.left[0], s3.right[0]));
  EXPECT_TRUE(c_pi_membership(construct("S3"), {2}, 2, 2).member);
  EXPECT_EQ(code_of([] { (void)c_pi_membership(construct("S3"), {2}, 0, 1); }), ErrorCode::kInvalidArgument);
  EXPECT_EQ(code_of([] { (void)c_pi_membership(construct("S5"), {2, 3}, 1, 1); }), ErrorCode::kCapExceeded);
}

TEST(BicliqueProperty, WitnessesAndMonotonicity) {
  for (const char* name : {"S3", "D8", "D10", "A4", "Q8", "D12", "S3 x C2", "C3 wr C2", "SL(2,3)"}) {
    const auto* entry = find_catalog_entry(name);
    const auto g = entry ? entry->group() : construct(name);
    const auto graph = noncommuting_graph(g, {2, 3});
    if (graph.vertices.size() > 64) continue;
    for (std::size_t m = 1; m <= 3; ++m) {
      for (std::size_t n = 1; n <= 3; ++n) {
        const auto r = c_pi_membership(graph, m, n);
        if (!r.member) {
          ASSERT_EQ(r.left.size(), m);
          ASSERT_EQ(r.right.size(), n);
          for (const auto& a : r.left) {
            for (const auto& b : r.right) EXPECT_FALSE(commute(a, b)) << name;
          }
          for (std::size_t m2 = 1; m2 <= m; ++m2) {
            for (std::size_t n2 = 1; n2 <= n; ++n2) EXPECT_FALSE(c_pi_membership(graph, m2, n2).member);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace sylowlab
