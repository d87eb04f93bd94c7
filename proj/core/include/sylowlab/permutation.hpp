#ifndef SYLOWLAB_PERMUTATION_HPP_
#define SYLOWLAB_PERMUTATION_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace sylowlab {

using Point = std::uint32_t;

// A bijection of {1..degree}.
//
// Conventions used throughout the library:
//   * points are 1-based in every public interface;
//   * composition applies the LEFT factor first: (a * b)(i) = b(a(i)).
//     With this convention (1 2) * (2 3) = (1 3 2).
//
// Internally the image table is stored 0-based; raw_images() exposes it for
// hot loops that want to avoid the index shift.
class Permutation {
 public:
  // Identity of degree 1.
  Permutation() : images_{0} {}
  explicit Permutation(std::size_t degree);
  // From a 1-based image table; throws kInvalidArgument if not a bijection.
  static Permutation from_images(std::span<const Point> one_based_images);
  // From a 0-based image table; throws kInvalidArgument if not a bijection.
  static Permutation from_raw_images(std::vector<Point> zero_based_images);
  // From disjoint cycles of 1-based points.
  static Permutation from_cycles(std::size_t degree,
                                 const std::vector<std::vector<Point>>& cycles);

  std::size_t degree() const { return images_.size(); }
  // Image of a 1-based point.
  Point image(Point point) const;
  Point operator()(Point point) const { return image(point); }

  const std::vector<Point>& raw_images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  // Order as an element (lcm of cycle lengths).
  std::uint64_t order() const;
  bool is_even() const;
  // Disjoint cycles (length >= 2), each starting at its smallest point,
  // ordered by that point. 1-based.
  std::vector<std::vector<Point>> cycles() const;
  // Sorted multiset of all cycle lengths including fixed points.
  std::vector<std::size_t> cycle_type() const;
  std::size_t fixed_point_count() const;
  Permutation pow(std::int64_t exponent) const;

  // Canonical cycle notation, e.g. "(1 2 3)(4 5)"; identity prints "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend std::strong_ordering operator<=>(const Permutation& a,
                                          const Permutation& b) {
    return a.images_ <=> b.images_;
  }

 private:
  explicit Permutation(std::vector<Point> images) : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& a, const Permutation& b);
  friend Permutation conjugate(const Permutation& x, const Permutation& g);

  std::vector<Point> images_;
};

// Apply a first, then b. Throws kDegreeMismatch.
Permutation compose(const Permutation& a, const Permutation& b);
inline Permutation operator*(const Permutation& a, const Permutation& b) {
  return compose(a, b);
}
// g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);
inline bool commute(const Permutation& a, const Permutation& b) {
  return compose(a, b) == compose(b, a);
}

// Parses cycle notation: "(1 2 3)(4 5)", "()", "(1,2)(3, 4)". Whitespace is
// ignored between tokens; points may be separated by spaces or commas.
// When degree is 0 the degree is the largest point mentioned (at least 1).
// Throws Error(kSyntaxError) with the byte offset of the problem.
Permutation parse_cycles(std::string_view text, std::size_t degree = 0);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace sylowlab

template <>
struct std::hash<sylowlab::Permutation> : sylowlab::PermutationHash {};

#endif  // SYLOWLAB_PERMUTATION_HPP_
