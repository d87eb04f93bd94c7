#include "sylowlab/group_expr.hpp"

#include <algorithm>
#include <cctype>

#include "sylowlab/error.hpp"
#include "sylowlab/field.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

constexpr std::string_view kTimes = "\xC3\x97";  // U+00D7

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse() {
    GroupExpr expr = parse_expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected input");
    return expr;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw Error(ErrorCode::kSyntaxError, message + " at offset " + std::to_string(at), at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  bool accept(std::string_view token) {
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  // 'x' or 'wr' must not run into a following identifier character.
  bool accept_keyword(std::string_view word) {
    if (text_.substr(pos_, word.size()) != word) return false;
    const std::size_t after = pos_ + word.size();
    if (after < text_.size() && std::isalpha(static_cast<unsigned char>(text_[after])) &&
        !std::isupper(static_cast<unsigned char>(text_[after]))) {
      return false;
    }
    pos_ = after;
    return true;
  }

  std::uint64_t number() {
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (value > 1'000'000'000ULL) fail_at("number too large", start);
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return value;
  }

  GroupExpr parse_expr() {
    GroupExpr first = parse_term();
    std::vector<GroupExpr> factors;
    factors.push_back(std::move(first));
    for (;;) {
      skip_space();
      if (!accept(kTimes) && !accept_keyword("x")) break;
      factors.push_back(parse_term());
    }
    if (factors.size() == 1) return std::move(factors.front());
    GroupExpr product;
    product.kind = GroupExpr::Kind::kProduct;
    product.children = std::move(factors);
    return product;
  }

  GroupExpr parse_term() {
    GroupExpr left = parse_atom();
    for (;;) {
      skip_space();
      if (!accept_keyword("wr")) break;
      GroupExpr wreath;
      wreath.kind = GroupExpr::Kind::kWreath;
      wreath.children.push_back(std::move(left));
      wreath.children.push_back(parse_atom());
      left = std::move(wreath);
    }
    return left;
  }

  GroupExpr named(GroupExpr::Kind kind, std::uint64_t parameter) {
    GroupExpr expr;
    expr.kind = kind;
    expr.parameter = parameter;
    return expr;
  }

  GroupExpr parse_atom() {
    skip_space();
    if (at_end()) fail("expected a group");
    const std::size_t start = pos_;
    if (accept("(")) {
      GroupExpr inner = parse_expr();
      skip_space();
      expect(")");
      return inner;
    }
    if (peek() == '<') return parse_literal();
    if (accept("PSL(2,") || accept("SL(2,")) {
      const bool projective = text_[start] == 'P';
      skip_space();
      const std::uint64_t q = number();
      skip_space();
      expect(")");
      return named(projective ? GroupExpr::Kind::kPSL2 : GroupExpr::Kind::kSL2, q);
    }
    const char letter = peek();
    GroupExpr::Kind kind;
    switch (letter) {
      case 'S': kind = GroupExpr::Kind::kSymmetric; break;
      case 'A': kind = GroupExpr::Kind::kAlternating; break;
      case 'C': kind = GroupExpr::Kind::kCyclic; break;
      case 'D': kind = GroupExpr::Kind::kDihedral; break;
      default: fail("expected a group");
    }
    ++pos_;
    const std::size_t number_at = pos_;
    const std::uint64_t n = number();
    if (n == 0) fail_at("group parameter must be positive", number_at);
    if (kind == GroupExpr::Kind::kDihedral && (n % 2 != 0 || n < 6)) {
      fail_at("dihedral order must be even and at least 6", number_at);
    }
    return named(kind, n);
  }

  GroupExpr parse_literal() {
    expect("<");
    GroupExpr expr;
    expr.kind = GroupExpr::Kind::kLiteral;
    std::vector<std::pair<std::string_view, std::size_t>> pieces;
    skip_space();
    if (accept(">")) fail_at("empty generator list", pos_ - 1);
    for (;;) {
      skip_space();
      const std::size_t start = pos_;
      int depth = 0;
      while (!at_end()) {
        const char c = peek();
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (depth == 0 && (c == ',' || c == '>')) break;
        if (depth < 0) fail("unbalanced parenthesis");
        ++pos_;
      }
      if (at_end()) fail("unterminated generator list");
      pieces.emplace_back(text_.substr(start, pos_ - start), start);
      if (accept(">")) break;
      expect(",");
    }
    std::vector<Permutation> parsed;
    std::size_t degree = 1;
    for (const auto& [piece, offset] : pieces) {
      try {
        parsed.push_back(parse_cycles(piece));
      } catch (const Error& e) {
        fail_at("invalid permutation '" + std::string(piece) + "'",
                offset + e.offset().value_or(0));
      }
      for (const auto& cycle : parsed.back().cycles()) {
        for (Point x : cycle) degree = std::max<std::size_t>(degree, x);
      }
    }
    for (auto& g : parsed) {
      std::vector<Point> images(degree);
      for (Point x = 1; x <= degree; ++x) images[x - 1] = x <= g.degree() ? g.image(x) : x;
      expr.generators.push_back(Permutation::from_images(images));
    }
    expr.degree = degree;
    return expr;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

bool needs_parens_in_product(const GroupExpr& e) { return e.kind == GroupExpr::Kind::kProduct; }

std::string print_atomic(const GroupExpr& e, bool wrap_wreath) {
  const std::string s = to_string(e);
  if (e.kind == GroupExpr::Kind::kProduct || (wrap_wreath && e.kind == GroupExpr::Kind::kWreath)) {
    return "(" + s + ")";
  }
  return s;
}

// ---- construction ----

Permutation cycle_on(std::size_t degree, Point first, Point last) {
  std::vector<Point> cycle;
  for (Point x = first; x <= last; ++x) cycle.push_back(x);
  return Permutation::from_cycles(degree, {cycle});
}

PermGroup symmetric(std::size_t n) {
  if (n < 2) return PermGroup::trivial(1);
  return PermGroup(n, {Permutation::from_cycles(n, {{1, 2}}), cycle_on(n, 1, static_cast<Point>(n))});
}

PermGroup alternating(std::size_t n) {
  if (n < 3) return PermGroup::trivial(std::max<std::size_t>(n, 1));
  const Permutation three = Permutation::from_cycles(n, {{1, 2, 3}});
  const Point first = n % 2 == 1 ? 1 : 2;
  return PermGroup(n, {three, cycle_on(n, first, static_cast<Point>(n))});
}

PermGroup cyclic(std::size_t n) {
  if (n < 2) return PermGroup::trivial(1);
  return PermGroup(n, {cycle_on(n, 1, static_cast<Point>(n))});
}

PermGroup dihedral(std::size_t n) {
  std::vector<Point> reflection(n);
  for (Point x = 1; x <= n; ++x) reflection[x - 1] = static_cast<Point>(n + 1 - x);
  return PermGroup(n, {cycle_on(n, 1, static_cast<Point>(n)), Permutation::from_images(reflection)});
}

struct Matrix {
  SmallField::Element a, b, c, d;  // [[a, b], [c, d]]
};

std::vector<Matrix> sl2_generators(const SmallField& f) {
  const auto w = f.primitive_element();
  return {
      {1, 1, 0, 1},
      {0, 1, f.neg(1), 0},
      {w, 0, 0, f.inv(w)},
  };
}

PermGroup special_linear(std::uint32_t q) {
  const SmallField f(q);
  const std::size_t degree = static_cast<std::size_t>(q) * q - 1;
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f)) {
    std::vector<Point> images(degree);
    for (std::uint32_t x = 0; x < q; ++x) {
      for (std::uint32_t y = 0; y < q; ++y) {
        if (x == 0 && y == 0) continue;
        const auto nx = f.add(f.mul(x, m.a), f.mul(y, m.c));
        const auto ny = f.add(f.mul(x, m.b), f.mul(y, m.d));
        images[x * q + y - 1] = nx * q + ny;
      }
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup projective_special_linear(std::uint32_t q) {
  const SmallField f(q);
  const std::size_t degree = q + 1;
  // Point y + 1 is [1 : y]; point q + 1 is [0 : 1].
  auto index = [&](SmallField::Element x, SmallField::Element y) -> Point {
    if (x == 0) return q + 1;
    return f.mul(y, f.inv(x)) + 1;
  };
  std::vector<Permutation> gens;
  for (const auto& m : sl2_generators(f)) {
    std::vector<Point> images(degree);
    for (std::uint32_t y = 0; y <= q; ++y) {
      const SmallField::Element x0 = y < q ? 1 : 0;
      const SmallField::Element y0 = y < q ? y : 1;
      images[y] = index(f.add(f.mul(x0, m.a), f.mul(y0, m.c)), f.add(f.mul(x0, m.b), f.mul(y0, m.d)));
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(degree, std::move(gens));
}

Permutation shifted(const Permutation& g, std::size_t offset, std::size_t degree) {
  std::vector<Point> images(degree);
  for (Point x = 1; x <= degree; ++x) images[x - 1] = x;
  for (Point x = 1; x <= g.degree(); ++x) {
    images[offset + x - 1] = static_cast<Point>(offset + g.image(x));
  }
  return Permutation::from_images(images);
}

PermGroup direct_product(const std::vector<PermGroup>& factors) {
  std::size_t degree = 0;
  for (const auto& f : factors) degree += f.degree();
  std::vector<Permutation> gens;
  std::size_t offset = 0;
  for (const auto& f : factors) {
    for (const auto& g : f.generators()) gens.push_back(shifted(g, offset, degree));
    offset += f.degree();
  }
  return PermGroup(degree, std::move(gens));
}

PermGroup wreath_product(const PermGroup& base, const PermGroup& top) {
  const std::size_t d = base.degree();
  const std::size_t k = top.degree();
  const std::size_t degree = d * k;
  std::vector<Permutation> gens;
  // Base generators on the first block of each top orbit.
  for (const auto& orbit : top.orbits()) {
    const std::size_t block = orbit.front() - 1;
    for (const auto& g : base.generators()) gens.push_back(shifted(g, block * d, degree));
  }
  for (const auto& t : top.generators()) {
    std::vector<Point> images(degree);
    for (std::size_t block = 0; block < k; ++block) {
      const std::size_t target = t.image(static_cast<Point>(block + 1)) - 1;
      for (std::size_t j = 0; j < d; ++j) images[block * d + j] = static_cast<Point>(target * d + j + 1);
    }
    gens.push_back(Permutation::from_images(images));
  }
  return PermGroup(degree, std::move(gens));
}

std::size_t expr_degree(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::kSymmetric:
    case K::kAlternating:
    case K::kCyclic: return std::max<std::size_t>(e.parameter, 1);
    case K::kDihedral: return e.parameter / 2;
    case K::kSL2: return e.parameter * e.parameter - 1;
    case K::kPSL2: return e.parameter + 1;
    case K::kLiteral: return e.degree;
    case K::kProduct: {
      std::size_t total = 0;
      for (const auto& c : e.children) total += expr_degree(c);
      return total;
    }
    case K::kWreath: return expr_degree(e.children[0]) * expr_degree(e.children[1]);
  }
  return 0;
}

PermGroup build(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::kSymmetric: return symmetric(e.parameter);
    case K::kAlternating: return alternating(e.parameter);
    case K::kCyclic: return cyclic(e.parameter);
    case K::kDihedral: return dihedral(e.parameter / 2);
    case K::kSL2: return special_linear(static_cast<std::uint32_t>(e.parameter));
    case K::kPSL2: return projective_special_linear(static_cast<std::uint32_t>(e.parameter));
    case K::kLiteral: return PermGroup(e.degree, e.generators);
    case K::kProduct: {
      std::vector<PermGroup> factors;
      for (const auto& c : e.children) factors.push_back(build(c));
      return direct_product(factors);
    }
    case K::kWreath: return wreath_product(build(e.children[0]), build(e.children[1]));
  }
  throw InternalError("unknown expression kind");
}

std::vector<SimpleFactor> linear_factor(std::uint64_t q) {
  if (q <= 3) return {};
  if (q == 4 || q == 5) return {{"A5", 5, 4}};
  if (q == 9) return {{"A6", 6, 0}};
  if (q % 2 == 0) return {{"SL(2," + std::to_string(q) + ")", 0, q}};
  return {{"PSL(2," + std::to_string(q) + ")", 0, 0}};
}

}  // namespace

GroupExpr parse_group_expr(std::string_view text) { return Parser(text).parse(); }

GroupExpr parse_generator_list(std::string_view contents) {
  std::string literal = "<";
  std::vector<std::size_t> origin;  // literal offset -> contents offset
  origin.push_back(0);
  std::size_t line_start = 0;
  bool any = false;
  while (line_start < contents.size()) {
    std::size_t line_end = contents.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = contents.size();
    std::string_view line = contents.substr(line_start, line_end - line_start);
    line = line.substr(0, std::min(line.size(), line.find('#')));
    const auto first = line.find_first_not_of(" \t\r");
    if (first != std::string_view::npos) {
      const auto last = line.find_last_not_of(" \t\r");
      if (any) {
        literal += ',';
        origin.push_back(line_start + first);
      }
      for (std::size_t i = first; i <= last; ++i) {
        literal += line[i];
        origin.push_back(line_start + i);
      }
      any = true;
    }
    line_start = line_end + 1;
  }
  if (!any) throw Error(ErrorCode::kSyntaxError, "generator list is empty", 0);
  literal += '>';
  origin.push_back(contents.size());
  try {
    return parse_group_expr(literal);
  } catch (const Error& e) {
    const std::size_t at = origin[std::min(e.offset().value_or(0), origin.size() - 1)];
    throw Error(ErrorCode::kSyntaxError, "invalid generator list at offset " + std::to_string(at), at);
  }
}

std::string to_string(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  switch (e.kind) {
    case K::kSymmetric: return "S" + std::to_string(e.parameter);
    case K::kAlternating: return "A" + std::to_string(e.parameter);
    case K::kCyclic: return "C" + std::to_string(e.parameter);
    case K::kDihedral: return "D" + std::to_string(e.parameter);
    case K::kSL2: return "SL(2," + std::to_string(e.parameter) + ")";
    case K::kPSL2: return "PSL(2," + std::to_string(e.parameter) + ")";
    case K::kLiteral: {
      std::string s = "<";
      for (std::size_t i = 0; i < e.generators.size(); ++i) {
        if (i > 0) s += ",";
        s += e.generators[i].to_cycle_string();
      }
      return s + ">";
    }
    case K::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) s += " x ";
        s += needs_parens_in_product(e.children[i]) ? "(" + to_string(e.children[i]) + ")"
                                                    : to_string(e.children[i]);
      }
      return s;
    }
    case K::kWreath:
      return print_atomic(e.children[0], false) + " wr " + print_atomic(e.children[1], true);
  }
  return {};
}

PermGroup construct(const GroupExpr& expr, const Caps& caps) {
  const std::size_t degree = expr_degree(expr);
  if (degree > caps.elements) {
    throw Error(ErrorCode::kCapExceeded, "degree " + std::to_string(degree) + " exceeds cap " +
                                             std::to_string(caps.elements));
  }
  return build(expr);
}

PermGroup construct(std::string_view text, const Caps& caps) {
  return construct(parse_group_expr(text), caps);
}

bool GroupMetadata::excludes_alternating(std::uint64_t p) const {
  if (!factors_known) return false;
  return std::none_of(nonabelian_factors.begin(), nonabelian_factors.end(),
                      [&](const SimpleFactor& f) {
                        const auto m = f.alternating_degree;
                        return m != 0 && p + 1 < m && m < p * p - p;
                      });
}

bool GroupMetadata::excludes_alternating_and_mersenne(std::uint64_t p) const {
  if (!excludes_alternating(p)) return false;
  if (!is_mersenne_prime(p)) return true;
  return std::none_of(nonabelian_factors.begin(), nonabelian_factors.end(),
                      [&](const SimpleFactor& f) { return f.sl2_even_q == p + 1; });
}

GroupMetadata metadata(const GroupExpr& e) {
  using K = GroupExpr::Kind;
  GroupMetadata meta;
  switch (e.kind) {
    case K::kSymmetric:
    case K::kAlternating:
      if (e.parameter >= 5) {
        meta.nonabelian_factors.push_back(
            {"A" + std::to_string(e.parameter), e.parameter, e.parameter == 5 ? 4u : 0u});
      }
      break;
    case K::kCyclic:
    case K::kDihedral:
      break;
    case K::kSL2:
    case K::kPSL2:
      meta.nonabelian_factors = linear_factor(e.parameter);
      break;
    case K::kLiteral:
      meta.factors_known = false;
      break;
    case K::kProduct:
    case K::kWreath:
      for (const auto& c : e.children) {
        const GroupMetadata sub = metadata(c);
        meta.factors_known = meta.factors_known && sub.factors_known;
        for (const auto& f : sub.nonabelian_factors) {
          if (std::find(meta.nonabelian_factors.begin(), meta.nonabelian_factors.end(), f) ==
              meta.nonabelian_factors.end()) {
            meta.nonabelian_factors.push_back(f);
          }
        }
      }
      break;
  }
  return meta;
}

}  // namespace sylowlab
