#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/group_expr.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/number_theory.hpp"
#include "sylowlab/sylow.hpp"

namespace sylowlab {
namespace {

ExactRatio R(std::int64_t a, std::int64_t b) { return ExactRatio(BigInt(a), BigInt(b)); }

PermGroup G(std::size_t degree, std::initializer_list<const char*> gens) {
  std::vector<Permutation> out;
  for (const char* g : gens) out.push_back(parse_cycles(g, degree));
  return PermGroup(degree, out);
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(Sylow, Subgroups) {
  EXPECT_TRUE(sylow_subgroup(construct("S3"), 5).is_trivial());
  EXPECT_EQ(sylow_subgroup(construct("S4"), 2).order(), 8);
  EXPECT_EQ(sylow_subgroup(construct("A5"), 5).order(), 5);
}

TEST(Sylow, Numbers) {
  EXPECT_EQ(nu_p(construct("A4"), 3), 4);
  EXPECT_EQ(nu_p(construct("A5"), 3), 10);
  EXPECT_EQ(nu_p(construct("SL(2,4)"), 2), 5);
  EXPECT_EQ(nu_p(construct("D10"), 2), 5);
  EXPECT_EQ(nu_p(construct("C3 wr C3"), 3), 1);
  EXPECT_EQ(nu_p(construct("SL(2,8)"), 7), 36);
  EXPECT_EQ(nu_p(construct("SL(2,8)"), 2), 9);
  EXPECT_EQ(nu_p(construct("A9"), 5), 756);
  EXPECT_EQ(nu_p(construct("A8"), 5), 336);
}

// Normalizer index against two independent counts: distinct conjugates of a
// greedily grown Sylow subgroup, and the lattice's subgroups of order |G|_p.
TEST(SylowProperty, NormalizerIndexMatchesCounting) {
  for (const auto& entry : catalog_up_to(2000)) {
    const auto g = entry.group();
    const auto closure = oracle::closure(g.degree(), g.generators());
    const auto lattice = subgroup_lattice(g);
    for (auto p : prime_divisors(g.order())) {
      const auto nu = nu_p(g, p);
      EXPECT_EQ(nu % p, 1) << entry.name;
      EXPECT_EQ(sylow_subgroup(g, p).order(), p_part(g.order(), p)) << entry.name;
      EXPECT_EQ(lattice_nu_p(lattice, lattice.top(), p), nu) << entry.name << " p=" << p;
      if (closure.size() <= 200) {
        EXPECT_EQ(oracle::sylow_count(closure, g.degree(), p), nu) << entry.name << " p=" << p;
      }
      EXPECT_EQ(sylow_subgroups(g, p).size(), nu) << entry.name;
    }
  }
}

TEST(NuMonotonicity, Cases) {
  const auto a5 = construct("A5");
  const auto r = nu_monotonicity_check(a5, a5, 3);
  EXPECT_EQ(r.nu_g, r.nu_h);
  EXPECT_TRUE(r.unique_containment);
  EXPECT_TRUE(r.product_covers);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(code_of([&] { (void)nu_monotonicity_check(a5, G(5, {"(1 2)"}), 2); }),
            ErrorCode::kNotASubgroup);
}

TEST(NuMonotonicityProperty, HoldsOnEveryLatticePair) {
  for (const auto& entry : catalog_up_to(200)) {
    const auto g = entry.group();
    const auto lattice = subgroup_lattice(g);
    for (auto p : prime_divisors(g.order())) {
      for (std::size_t i = 0; i < lattice.size(); ++i) {
        const auto r = nu_monotonicity_check(g, lattice.subgroup(i), p);
        EXPECT_TRUE(r.holds) << entry.name << " p=" << p << " H#" << i;
        EXPECT_LE(r.nu_h, r.nu_g);
        EXPECT_EQ(r.nu_h, lattice_nu_p(lattice, i, p));
      }
    }
  }
}

TEST(NuQuotient, Cases) {
  const auto s4 = construct("S4");
  const auto v4 = G(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
  const auto r = nu_quotient_identity_check(s4, v4, 3);
  EXPECT_EQ(r.nu_g, 4);
  EXPECT_EQ(r.nu_quotient, 1);
  EXPECT_EQ(r.nu_pn, 4);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(code_of([&] { (void)nu_quotient_identity_check(s4, G(4, {"(1 2)"}), 2); }),
            ErrorCode::kNotNormal);
}

TEST(NuFpr, Cases) {
  const auto a5_on_a4 = nu_fpr_identity_check(construct("A5"), G(5, {"(1 2 3)", "(2 3 4)"}), 3);
  EXPECT_EQ(a5_on_a4.nu_ratio, R(2, 5));
  EXPECT_EQ(a5_on_a4.fpr, R(2, 5));
  EXPECT_TRUE(a5_on_a4.holds);
  const auto s4_on_d8 = nu_fpr_identity_check(construct("S4"), G(4, {"(1 2 3 4)", "(1 3)"}), 2);
  EXPECT_EQ(s4_on_d8.nu_ratio, R(1, 3));
  EXPECT_EQ(s4_on_d8.fpr, R(1, 3));
  const auto s3 = nu_fpr_identity_check(construct("S3"), G(3, {"(1 2)"}), 2);
  EXPECT_EQ(s3.fpr, R(1, 3));
  EXPECT_TRUE(s3.holds);
  EXPECT_EQ(code_of([] { (void)nu_fpr_identity_check(construct("A5"), G(5, {"(1 2 3)"}), 3); }),
            ErrorCode::kNotMaximal);
  EXPECT_EQ(code_of([] {
              (void)nu_fpr_identity_check(construct("A5"), G(5, {"(1 2 3)", "(2 3 4)"}), 5);
            }),
            ErrorCode::kSylowNotContained);
  EXPECT_FALSE(is_maximal_subgroup(G(4, {"(1 2)(3 4)", "(1 3)(2 4)"}), construct("S4")));
  EXPECT_TRUE(is_maximal_subgroup(construct("A4"), construct("S4")));
}

TEST(SylowRatioBound, Cases) {
  const auto a5 = theorem_c_check(construct("A5"), G(5, {"(1 2 3)", "(2 3 4)"}), 3, false);
  EXPECT_EQ(a5.nu_g, 10);
  EXPECT_EQ(a5.nu_h, 4);
  EXPECT_EQ(a5.ratio, R(2, 5));
  EXPECT_TRUE(a5.main_bound_holds);
  EXPECT_TRUE(a5.holds);

  const auto s3 = theorem_c_check(construct("S3"), G(3, {"(1 2)"}), 2, false);
  EXPECT_EQ(s3.ratio, R(1, 3));
  EXPECT_TRUE(s3.holds);

  EXPECT_EQ(code_of([] { (void)theorem_c_check(construct("S4"), construct("A4"), 3, false); }),
            ErrorCode::kPreconditionFailed);
  EXPECT_EQ(code_of([] { (void)theorem_c_check(construct("A5"), G(5, {"(1 2 3)"}), 2, false); }),
            ErrorCode::kPreconditionFailed);
  EXPECT_EQ(code_of([] { (void)theorem_c_check(construct("A5"), construct("A5"), 3, false); }),
            ErrorCode::kPreconditionFailed);
}

TEST(PSolvable, Cases) {
  const auto r = p_solvable_divisibility_check(construct("S4"), 2);
  EXPECT_EQ(r.nu_g, 3u);
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(code_of([] { (void)p_solvable_divisibility_check(construct("A5"), 5); }),
            ErrorCode::kNotPSolvable);
  for (const auto& entry : catalog_up_to(500)) {
    const auto g = entry.group();
    for (auto p : prime_divisors(g.order())) {
      if (!is_p_solvable(g, p)) continue;
      EXPECT_TRUE(p_solvable_divisibility_check(g, p).holds) << entry.name << " p=" << p;
    }
  }
}

TEST(RatioThresholdScan, Scans) {
  const auto up_to_360 = named_groups(catalog_up_to(360));
  EXPECT_TRUE(conjecture_d_scan(up_to_360, 5, R(1, 2)).violations.empty());
  EXPECT_TRUE(conjecture_d_scan(up_to_360, 3, ExactRatio(1)).violations.empty());

  const auto sl28 = std::vector<NamedGroup>{{"SL(2,8)", construct("SL(2,8)")}};
  const auto scan = conjecture_d_scan(sl28, 2, R(1, 2));
  ASSERT_FALSE(scan.violations.empty());
  EXPECT_EQ(scan.violations.front().ratio, R(7, 9));
  EXPECT_EQ(scan.violations.front().nu_g, 9u);
  EXPECT_EQ(scan.violations.front().nu_h, 7u);
  for (std::size_t i = 1; i < scan.violations.size(); ++i) {
    EXPECT_GE(scan.violations[i - 1].ratio, scan.violations[i].ratio);
  }
}

TEST(RatioThresholdScan, SkipsGroupsBeyondTheCap) {
  const auto scan = conjecture_d_scan({{"A7", construct("A7")}, {"S3", construct("S3")}}, 3, R(1, 2));
  ASSERT_EQ(scan.notices.size(), 1u);
  EXPECT_NE(scan.notices.front().find("A7"), std::string::npos);
  EXPECT_EQ(scan.groups_scanned, 1u);
}

TEST(RatioThresholdScan, ThreadCountDoesNotChangeResult) {
  const auto groups = named_groups(catalog_up_to(120));
  const auto one = conjecture_d_scan(groups, 2, R(1, 2), default_caps(), 1);
  const auto four = conjecture_d_scan(groups, 2, R(1, 2), default_caps(), 4);
  ASSERT_EQ(one.violations.size(), four.violations.size());
  for (std::size_t i = 0; i < one.violations.size(); ++i) {
    EXPECT_EQ(one.violations[i].group, four.violations[i].group);
    EXPECT_EQ(one.violations[i].subgroup_generators, four.violations[i].subgroup_generators);
    EXPECT_EQ(one.violations[i].ratio, four.violations[i].ratio);
  }
  EXPECT_EQ(one.pairs_scanned, four.pairs_scanned);
}

}  // namespace
}  // namespace sylowlab
