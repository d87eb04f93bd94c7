#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "sylowlab/catalog.hpp"
#include "sylowlab/error.hpp"
#include "sylowlab/field.hpp"
#include "sylowlab/group_expr.hpp"

namespace sylowlab {
namespace {

using Kind = GroupExpr::Kind;

TEST(Field, SupportedOrders) {
  EXPECT_EQ(SmallField::supported_orders(), (std::vector<std::uint32_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 32}));
  try {
    SmallField f(6);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedField);
  }
  EXPECT_THROW(SmallField(27), Error);
  EXPECT_EQ(SmallField(8).modulus(), (std::vector<std::uint32_t>{1, 1, 0, 1}));
  EXPECT_THROW((void)SmallField(5).inv(0), Error);
}

// Field axioms, exhaustively, plus Frobenius and a cyclic unit group.
TEST(FieldProperty, AxiomsFrobeniusAndPrimitiveElement) {
  for (auto q : SmallField::supported_orders()) {
    const SmallField f(q);
    EXPECT_EQ(f.order(), q);
    std::uint32_t pk = 1;
    for (std::uint32_t i = 0; i < f.degree(); ++i) pk *= f.characteristic();
    EXPECT_EQ(pk, q);
    for (std::uint32_t a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
      for (std::uint32_t b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        if (a != 0 && b != 0) EXPECT_NE(f.mul(a, b), 0u);
        // Frobenius is additive and multiplicative.
        const auto p = f.characteristic();
        EXPECT_EQ(f.pow(f.add(a, b), p), f.add(f.pow(a, p), f.pow(b, p)));
        EXPECT_EQ(f.pow(f.mul(a, b), p), f.mul(f.pow(a, p), f.pow(b, p)));
        for (std::uint32_t c = 0; c < q; ++c) {
          EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    // Frobenius is injective.
    std::set<std::uint32_t> images;
    for (std::uint32_t a = 0; a < q; ++a) images.insert(f.pow(a, f.characteristic()));
    EXPECT_EQ(images.size(), q);
    // The primitive element has multiplicative order q - 1.
    const auto w = f.primitive_element();
    std::set<std::uint32_t> powers;
    for (std::uint32_t e = 0; e < q - 1; ++e) powers.insert(f.pow(w, e));
    EXPECT_EQ(powers.size(), q - 1);
    EXPECT_EQ(f.pow(w, q - 1), 1u);
  }
}

TEST(GroupExpr, Atoms) {
  const auto a5 = parse_group_expr("A5");
  EXPECT_EQ(a5.kind, Kind::kAlternating);
  EXPECT_EQ(a5.parameter, 5u);
  const auto sl = parse_group_expr("SL(2,8)");
  EXPECT_EQ(sl.kind, Kind::kSL2);
  EXPECT_EQ(sl.parameter, 8u);
  const auto prod = parse_group_expr("S3 x C2");
  EXPECT_EQ(prod.kind, Kind::kProduct);
  ASSERT_EQ(prod.children.size(), 2u);
  EXPECT_EQ(prod.children[1].kind, Kind::kCyclic);
  const auto wr = parse_group_expr("(C3 wr C3)");
  EXPECT_EQ(wr.kind, Kind::kWreath);
  const auto lit = parse_group_expr("<(1 2 3),(1 2)>");
  EXPECT_EQ(lit.kind, Kind::kLiteral);
  EXPECT_EQ(lit.degree, 3u);
  EXPECT_EQ(parse_group_expr("C2 × C3").kind, Kind::kProduct);
}

TEST(GroupExpr, SyntaxErrorsCarryOffsets) {
  const struct {
    const char* text;
    std::size_t offset;
  } cases[] = {{"", 0},       {"A", 1},          {"A5 x", 4},        {"Q8", 0},
               {"D7", 1},     {"SL(2,8", 6},     {"(A5", 3},         {"A5 A6", 3},
               {"<(1 2", 5},  {"S3 wr", 5},      {"<(1 2),(3 x)>", 10}};
  for (const auto& c : cases) {
    try {
      (void)parse_group_expr(c.text);
      ADD_FAILURE() << "accepted '" << c.text << "'";
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kSyntaxError) << c.text;
      EXPECT_EQ(e.offset(), std::optional<std::size_t>(c.offset)) << "'" << c.text << "': " << e.what();
    }
  }
}

TEST(GroupExpr, GeneratorListFiles) {
  const auto e = parse_generator_list("# A4 on four points\n(1 2 3)\n\n(2 3 4)  # second\n");
  EXPECT_EQ(e.kind, Kind::kLiteral);
  EXPECT_EQ(construct(e).order(), 12);
  try {
    (void)parse_generator_list("(1 2)\n(1 x)\n");
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(err.offset(), std::optional<std::size_t>(9));
  }
}

std::string random_expr(std::mt19937_64& rng, int depth) {
  static const char* atoms[] = {"S3", "A4", "C5", "D8", "SL(2,3)", "PSL(2,7)", "C2", "A5", "<(1 2 3),(1 2)>", "<()>"};
  const auto pick = rng() % (depth > 0 ? 13 : 10);
  if (pick < 10) return atoms[pick];
  const auto left = random_expr(rng, depth - 1);
  const auto right = random_expr(rng, depth - 1);
  if (pick == 10) return left + " x " + right;
  if (pick == 11) return "(" + left + ") wr (" + right + ")";
  return "(" + left + ")";
}

// Printing is canonical: parse(print(e)) == e and print is a fixed point.
TEST(GroupExprProperty, RoundTripCorpus) {
  std::mt19937_64 rng(2026);
  std::vector<std::string> corpus{"A5", "SL(2,8)", "S3 x C2", "C3 wr C3", "(C2 wr C2) wr C2",
                                  "C2 wr (C2 wr C2)", "(S3 x S3) wr C2", "S3 x (C2 x C2)",
                                  "PSL(2,11)", "<(1 2 5 6)(3 8 7 4),(1 3 5 7)(2 4 6 8)>"};
  while (corpus.size() < 100) corpus.push_back(random_expr(rng, 3));
  for (const auto& text : corpus) {
    const auto expr = parse_group_expr(text);
    const auto printed = to_string(expr);
    EXPECT_EQ(parse_group_expr(printed), expr) << text;
    EXPECT_EQ(to_string(parse_group_expr(printed)), printed) << text;
  }
}

TEST(Construct, DegreesAndOrders) {
  const struct {
    const char* text;
    std::size_t degree;
    std::uint64_t order;
  } cases[] = {{"SL(2,4)", 15, 60},       {"PSL(2,7)", 8, 168},   {"C3 wr C3", 9, 81},
               {"D10", 5, 10},            {"S3 x C2", 5, 12},     {"SL(2,8)", 63, 504},
               {"PSL(2,9)", 10, 360},     {"SL(2,3)", 8, 24},     {"SL(2,9)", 80, 720},
               {"SL(2,16)", 255, 4080},   {"PSL(2,32)", 33, 32736}, {"C2 wr C2 wr C2", 8, 128},
               {"S3 wr (C2 wr C2)", 12, 10368}, {"<(1 2)(3 4)>", 4, 2}};
  for (const auto& c : cases) {
    const auto g = construct(c.text);
    EXPECT_EQ(g.degree(), c.degree) << c.text;
    EXPECT_EQ(g.order(), c.order) << c.text;
  }
  EXPECT_FALSE(construct("C3 wr C3").is_abelian());
  try {
    (void)construct("SL(2,6)");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnsupportedField);
  }
  Caps tiny;
  tiny.elements = 10;
  try {
    (void)construct("S11", tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kCapExceeded);
  }
}

// SL(2,q) orders from the formula q(q^2 - 1), PSL(2,q) divided by gcd(2, q-1).
TEST(ConstructProperty, LinearGroupOrders) {
  for (auto q : SmallField::supported_orders()) {
    const std::uint64_t sl = static_cast<std::uint64_t>(q) * (q * q - 1);
    EXPECT_EQ(construct("SL(2," + std::to_string(q) + ")").order(), sl) << q;
    EXPECT_EQ(construct("PSL(2," + std::to_string(q) + ")").order(), sl / (q % 2 == 0 ? 1 : 2)) << q;
  }
}

TEST(Metadata, Flags) {
  const auto a5 = metadata(parse_group_expr("A5"));
  EXPECT_FALSE(a5.excludes_alternating(3));
  EXPECT_FALSE(a5.excludes_alternating_and_mersenne(3));
  EXPECT_TRUE(a5.excludes_alternating(5));
  const auto sl8 = metadata(parse_group_expr("SL(2,8)"));
  EXPECT_TRUE(sl8.excludes_alternating(7));
  EXPECT_FALSE(sl8.excludes_alternating_and_mersenne(7));
  EXPECT_TRUE(sl8.excludes_alternating_and_mersenne(3));
  const auto literal = metadata(parse_group_expr("<(1 2 3)>"));
  EXPECT_FALSE(literal.factors_known);
  EXPECT_FALSE(literal.excludes_alternating(3));
  EXPECT_TRUE(metadata(parse_group_expr("S4 x C3")).excludes_alternating_and_mersenne(3));
  EXPECT_FALSE(metadata(parse_group_expr("A7 wr C2")).excludes_alternating(5));
}

TEST(Catalog, EntriesAreConsistent) {
  const auto& all = catalog();
  EXPECT_GE(all.size(), 50u);
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto g = all[i].group();
    EXPECT_EQ(g.order(), all[i].order) << all[i].name;
    if (i > 0) {
      EXPECT_LE(all[i - 1].order, all[i].order);
    }
    EXPECT_EQ(find_catalog_entry(all[i].name), &all[i]);
  }
  const auto* q8 = find_catalog_entry("Q8");
  ASSERT_NE(q8, nullptr);
  const auto q8g = q8->group();
  EXPECT_EQ(q8g.order(), 8);
  // Exactly one involution.
  std::size_t involutions = 0;
  for (const auto& x : q8g.elements()) involutions += x.order() == 2;
  EXPECT_EQ(involutions, 1u);
  EXPECT_EQ(find_catalog_entry("nope"), nullptr);
  for (const auto& e : catalog_up_to(60)) EXPECT_LE(e.order, 60u);
}

}  // namespace
}  // namespace sylowlab
