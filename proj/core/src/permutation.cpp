#include "sylowlab/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "sylowlab/error.hpp"

namespace sylowlab {

namespace {

void check_bijection(const std::vector<Point>& images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v]) {
      throw Error(ErrorCode::kInvalidArgument, "image table is not a bijection");
    }
    seen[v] = true;
  }
}

}  // namespace

Permutation::Permutation(std::size_t degree) : images_(degree) {
  if (degree == 0) {
    throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  }
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation Permutation::from_images(std::span<const Point> one_based_images) {
  std::vector<Point> images;
  images.reserve(one_based_images.size());
  for (Point v : one_based_images) {
    if (v == 0) {
      throw Error(ErrorCode::kInvalidArgument, "image table is 1-based");
    }
    images.push_back(v - 1);
  }
  return from_raw_images(std::move(images));
}

Permutation Permutation::from_raw_images(std::vector<Point> zero_based_images) {
  if (zero_based_images.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "degree must be positive");
  }
  check_bijection(zero_based_images);
  return Permutation(std::move(zero_based_images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<Point>>& cycles) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point from = cycle[i];
      Point to = cycle[(i + 1) % cycle.size()];
      if (from == 0 || from > degree) {
        throw Error(ErrorCode::kOutOfRange,
                    "cycle point " + std::to_string(from) + " outside 1.." +
                        std::to_string(degree));
      }
      if (used[from - 1]) {
        throw Error(ErrorCode::kInvalidArgument,
                    "point " + std::to_string(from) + " repeated in cycles");
      }
      used[from - 1] = true;
      result.images_[from - 1] = to - 1;
    }
  }
  return result;
}

Point Permutation::image(Point point) const {
  if (point == 0 || point > images_.size()) {
    throw Error(ErrorCode::kOutOfRange,
                "point " + std::to_string(point) + " outside 1.." +
                    std::to_string(images_.size()));
  }
  return images_[point - 1] + 1;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<Point> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<Point>(i);
  }
  return Permutation(std::move(inv));
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) {
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  }
  return result;
}

bool Permutation::is_even() const {
  std::size_t transpositions = 0;
  for (std::size_t len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::size_t Permutation::fixed_point_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] == i) ++count;
  }
  return count;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    std::vector<Point> cycle;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      cycle.push_back(static_cast<Point>(j + 1));
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

Permutation Permutation::pow(std::int64_t exponent) const {
  Permutation base = exponent < 0 ? inverse() : *this;
  std::uint64_t e = exponent < 0 ? static_cast<std::uint64_t>(-exponent)
                                 : static_cast<std::uint64_t>(exponent);
  e %= order();
  Permutation result(degree());
  while (e > 0) {
    if (e & 1U) result = compose(result, base);
    base = compose(base, base);
    e >>= 1U;
  }
  return result;
}

std::string Permutation::to_cycle_string() const {
  auto cs = cycles();
  if (cs.empty()) return "()";
  std::string out;
  for (const auto& cycle : cs) {
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i > 0) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kDegreeMismatch,
                "cannot compose degree " + std::to_string(a.degree()) +
                    " with degree " + std::to_string(b.degree()));
  }
  const auto& ai = a.raw_images();
  const auto& bi = b.raw_images();
  std::vector<Point> out(ai.size());
  for (std::size_t i = 0; i < ai.size(); ++i) out[i] = bi[ai[i]];
  return Permutation(std::move(out));
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  // g^-1 x g maps g(i) to g(x(i)).
  if (x.degree() != g.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "conjugate: degree mismatch");
  }
  const auto& xi = x.raw_images();
  const auto& gi = g.raw_images();
  std::vector<Point> out(xi.size());
  for (std::size_t i = 0; i < xi.size(); ++i) out[gi[i]] = gi[xi[i]];
  return Permutation(std::move(out));
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::vector<std::size_t> point_offsets;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto fail = [&](const std::string& what, std::size_t at) -> Error {
    return Error(ErrorCode::kSyntaxError,
                 what + " at offset " + std::to_string(at), at);
  };

  skip_ws();
  if (pos == text.size()) throw fail("expected '('", pos);
  while (pos < text.size()) {
    if (text[pos] != '(') throw fail("expected '('", pos);
    ++pos;
    std::vector<Point> cycle;
    bool need_point = false;  // set after a comma
    while (true) {
      skip_ws();
      if (pos == text.size()) throw fail("unterminated cycle", pos);
      char c = text[pos];
      if (c == ')') {
        if (need_point) throw fail("expected point after ','", pos);
        ++pos;
        break;
      }
      if (c == ',') {
        if (cycle.empty() || need_point) throw fail("unexpected ','", pos);
        need_point = true;
        ++pos;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw fail(std::string("unexpected character '") + c + "'", pos);
      }
      std::size_t start = pos;
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        if (value > 1'000'000'000ULL) throw fail("point too large", start);
        ++pos;
      }
      if (value == 0) throw fail("points are 1-based", start);
      if (degree != 0 && value > degree) {
        throw fail("point " + std::to_string(value) + " exceeds degree " +
                       std::to_string(degree),
                   start);
      }
      cycle.push_back(static_cast<Point>(value));
      point_offsets.push_back(start);
      need_point = false;
    }
    cycles.push_back(std::move(cycle));
    skip_ws();
  }

  std::size_t max_point = 1;
  for (const auto& cycle : cycles) {
    for (Point p : cycle) max_point = std::max<std::size_t>(max_point, p);
  }
  std::size_t n = degree == 0 ? max_point : degree;
  std::vector<bool> used(n, false);
  std::size_t k = 0;
  for (const auto& cycle : cycles) {
    for (Point p : cycle) {
      if (used[p - 1]) throw fail("point " + std::to_string(p) + " repeated", point_offsets[k]);
      used[p - 1] = true;
      ++k;
    }
  }
  return Permutation::from_cycles(n, cycles);
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::uint64_t h = 1469598103934665603ULL;
  for (Point v : p.raw_images()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace sylowlab
