#ifndef SYLOWLAB_GROUP_EXPR_HPP_
#define SYLOWLAB_GROUP_EXPR_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/perm_group.hpp"

namespace sylowlab {

// Group expression grammar:
//   expr    := term (('x' | '×') term)*
//   term    := atom ('wr' atom)*          (left associative)
//   atom    := 'S' n | 'A' n | 'C' n | 'D' 2n | 'SL(2,' q ')' | 'PSL(2,' q ')'
//            | '<' perm (',' perm)* '>' | '(' expr ')'
// where perm is cycle notation such as (1 2 3)(4 5) or ().
struct GroupExpr {
  enum class Kind { kSymmetric, kAlternating, kCyclic, kDihedral, kSL2, kPSL2, kLiteral, kProduct, kWreath };

  Kind kind = Kind::kCyclic;
  // n for S, A, C; the order 2n for D; q for SL and PSL.
  std::uint64_t parameter = 1;
  // Literal generators and their common degree.
  std::vector<Permutation> generators;
  std::size_t degree = 0;
  // Product factors (two or more) or wreath {base, top}.
  std::vector<GroupExpr> children;

  friend bool operator==(const GroupExpr&, const GroupExpr&) = default;
};

// Throws kSyntaxError with the byte offset of the offending input.
GroupExpr parse_group_expr(std::string_view text);

// Generator-list file: one cycle-notation permutation per line, '#' starts a
// comment. Returns a literal expression. Throws kSyntaxError with the byte
// offset within `contents`.
GroupExpr parse_generator_list(std::string_view contents);

// Canonical form: "S3", "D10", "SL(2,8)", "<(1 2 3),(1 2)>", factors joined
// by " x ", wreath as "A wr B"; parentheses only where needed.
std::string to_string(const GroupExpr& expr);

// Permutation representation:
//   S n, A n, C n      on n points
//   D 2n               on n points (n >= 3)
//   SL(2,q)            on the q^2 - 1 nonzero row vectors, v -> v M
//   PSL(2,q)           on the q + 1 points of the projective line
//   G x H              on disjoint point sets, G first
//   G wr H             imprimitive, deg G * deg H points in blocks of deg G
//   literal            on max moved point (at least 1) points
// Throws kUnsupportedField, kCapExceeded (degree above caps.elements).
PermGroup construct(const GroupExpr& expr, const Caps& caps = default_caps());
PermGroup construct(std::string_view text, const Caps& caps = default_caps());

// Nonabelian simple composition factors, as far as the expression determines
// them. A factor is described by the alternating degree m when it is
// isomorphic to A_m, and by q when it is isomorphic to SL(2,q) with q even.
struct SimpleFactor {
  std::string name;
  std::uint64_t alternating_degree = 0;
  std::uint64_t sl2_even_q = 0;
  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
};

struct GroupMetadata {
  // False when the factors are unknown (literals).
  bool factors_known = true;
  std::vector<SimpleFactor> nonabelian_factors;

  // No composition factor A_m with p+1 < m < p^2-p. Unknown factors count
  // as a failure so callers never assert a bound on a guess.
  bool excludes_alternating(std::uint64_t p) const;
  // excludes_alternating(p) and no factor SL(2,p+1) with p a Mersenne prime.
  bool excludes_alternating_and_mersenne(std::uint64_t p) const;
};

GroupMetadata metadata(const GroupExpr& expr);

}  // namespace sylowlab

#endif  // SYLOWLAB_GROUP_EXPR_HPP_
