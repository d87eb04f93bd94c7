#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/covering.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/group_expr.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/number_theory.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {
namespace {

Permutation P(const char* text, std::size_t degree = 0) { return parse_cycles(text, degree); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(SetCover, SmallInstances) {
  CoverInstance inst;
  inst.universe_size = 4;
  for (const char* bits : {"0011", "0110", "1100", "1000"}) inst.candidates.emplace_back(std::string(bits));
  const auto s = solve_set_cover(inst);
  EXPECT_TRUE(s.coverable);
  EXPECT_EQ(s.chosen.size(), 2u);

  CoverInstance hole;
  hole.universe_size = 3;
  hole.candidates.emplace_back(std::string("011"));
  EXPECT_FALSE(solve_set_cover(hole).coverable);
}

TEST(SetCoverProperty, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(424242);
  for (int trial = 0; trial < 400; ++trial) {
    CoverInstance inst;
    inst.universe_size = 1 + rng() % 24;
    const std::size_t m = 1 + rng() % 20;
    std::bernoulli_distribution bit(0.15 + 0.5 * (rng() % 100) / 100.0);
    for (std::size_t i = 0; i < m; ++i) {
      ElementSet s(inst.universe_size);
      for (std::size_t j = 0; j < inst.universe_size; ++j) s[j] = bit(rng);
      inst.candidates.push_back(s);
    }
    const auto solution = solve_set_cover(inst);
    const auto expected = oracle::exhaustive_cover(inst.universe_size, inst.candidates);
    ASSERT_EQ(solution.coverable, expected != 0) << trial;
    if (!solution.coverable) continue;
    EXPECT_EQ(solution.chosen.size(), expected) << trial;
    ElementSet covered(inst.universe_size);
    for (auto i : solution.chosen) covered |= inst.candidates[i];
    EXPECT_EQ(covered.count(), inst.universe_size);
  }
}

TEST(PElements, Examples) {
  const auto s3 = construct("S3");
  EXPECT_EQ(p_elements(s3, 2).size(), 4u);
  EXPECT_EQ(p_elements(s3, 3).size(), 3u);
  EXPECT_EQ(p_elements(construct("D8"), 2).size(), 8u);
}

TEST(Sigma, Examples) {
  EXPECT_EQ(sigma_p(construct("S3"), 2).size, 3u);
  EXPECT_EQ(sigma_p(construct("A4"), 3).size, 4u);
  EXPECT_EQ(sigma_p(construct("C3 x C3"), 3).size, 4u);
  EXPECT_EQ(sigma_p(construct("C2 x C2"), 2).size, 3u);
  EXPECT_EQ(sigma_p(construct("C5 x C5"), 5).size, 6u);
  EXPECT_EQ(sigma_p(construct("A5"), 2).size, 5u);
  EXPECT_EQ(sigma_p(construct("A5"), 3).size, 4u);
  EXPECT_EQ(sigma_p(construct("A5"), 5).size, 6u);
  EXPECT_FALSE(sigma_p(construct("C9"), 3).coverable);
  EXPECT_EQ(code_of([] { (void)sigma_p(construct("S4"), 3); }), ErrorCode::kPreconditionFailed);
}

TEST(Sigma, CertificateCoversThePElements) {
  const auto g = construct("S4");
  const auto r = sigma_p(g, 2);
  ASSERT_TRUE(r.coverable);
  EXPECT_EQ(r.cover.size(), r.size);
  for (const auto& x : p_elements(g, 2)) {
    bool inside = false;
    for (const auto& h : r.cover) inside = inside || h.contains(x);
    EXPECT_TRUE(inside) << x.to_cycle_string();
  }
  for (const auto& h : r.cover) EXPECT_TRUE(is_maximal_subgroup(h, g));
}

// Covering with every proper subgroup gives the same optimum as covering with
// maximal subgroups only.
TEST(SigmaProperty, MaximalCandidatesSuffice) {
  for (const auto& entry : catalog_up_to(200)) {
    const auto g = entry.group();
    const auto lattice = subgroup_lattice(g);
    for (auto p : prime_divisors(g.order())) {
      if (!is_generated_by_p_elements(g, p)) continue;
      const auto universe = p_elements(g, p);
      std::vector<ElementSet> all;
      for (std::size_t i = 0; i + 1 < lattice.size(); ++i) {
        ElementSet s(universe.size());
        const auto h = lattice.subgroup(i);
        for (std::size_t j = 0; j < universe.size(); ++j) s[j] = h.contains(universe[j]);
        all.push_back(s);
      }
      const auto full = solve_set_cover({universe.size(), all});
      const auto sigma = sigma_p(lattice, p);
      ASSERT_EQ(full.coverable, sigma.coverable) << entry.name;
      if (sigma.coverable) {
        EXPECT_EQ(full.chosen.size(), sigma.size) << entry.name << " p=" << p;
        EXPECT_GE(sigma.size, p + 1) << entry.name;
        EXPECT_GE(sigma.size, 3u);
      }
    }
  }
}

// sigma_p(G) <= sigma_p(G/N) whenever G/N is still generated by p-elements
// and not cyclic.
TEST(SigmaProperty, QuotientsDoNotDecrease) {
  std::size_t compared = 0;
  for (const auto& entry : catalog_up_to(200)) {
    const auto g = entry.group();
    const auto lattice = subgroup_lattice(g);
    for (auto p : prime_divisors(g.order())) {
      if (!is_generated_by_p_elements(g, p)) continue;
      const auto sigma = sigma_p(lattice, p);
      for (std::size_t i : lattice.normal_indices()) {
        if (i == 0 || i == lattice.top()) continue;
        const auto q = quotient_group(g, lattice.subgroup(i)).group();
        if (q.order() % p != 0) continue;
        const auto sq = sigma_p(q, p);
        if (!sq.coverable) continue;
        ASSERT_TRUE(sigma.coverable) << entry.name;
        EXPECT_LE(sigma.size, sq.size) << entry.name << " p=" << p;
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 10u);
}

TEST(ClassCover, Examples) {
  EXPECT_EQ(class_cover_number(construct("A4"), P("(1 2 3)", 4)).size, 4u);
  EXPECT_EQ(class_cover_number(construct("A5"), P("(1 2 3 4 5)")).size, 6u);
  const auto d8 = construct("D8");
  const auto centre = P("(1 3)(2 4)");
  ASSERT_TRUE(d8.contains(centre));
  EXPECT_EQ(class_cover_number(d8, centre).size, 1u);
  EXPECT_EQ(code_of([] { (void)class_cover_number(construct("C6"), P("(1 2 3 4 5 6)")); }),
            ErrorCode::kPreconditionFailed);
  EXPECT_EQ(code_of([] { (void)class_cover_number(construct("A4"), P("(1 2)", 4)); }),
            ErrorCode::kNotAMember);
}

TEST(SigmaBound, Examples) {
  const auto s3 = sigma_lower_bound_check(construct("S3"), 2);
  EXPECT_EQ(s3.sigma.size, 3u);
  EXPECT_TRUE(s3.holds);
  const auto a5 = sigma_lower_bound_check(construct("A5"), 2);
  EXPECT_GE(a5.sigma.size, 3u);
  EXPECT_TRUE(a5.holds);
  const auto c3c3 = sigma_lower_bound_check(construct("C3 x C3"), 3);
  EXPECT_EQ(c3c3.sigma.size, 4u);
  EXPECT_TRUE(c3c3.holds);
}

}  // namespace
}  // namespace sylowlab
