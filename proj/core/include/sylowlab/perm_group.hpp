#ifndef SYLOWLAB_PERM_GROUP_HPP_
#define SYLOWLAB_PERM_GROUP_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/permutation.hpp"
#include "sylowlab/ratio.hpp"
#include "sylowlab/schreier_sims.hpp"

namespace sylowlab {

namespace detail {
struct GroupCache;
}

// A permutation group given by generators. Immutable; the stabilizer chain
// and the element list are computed lazily, at most once, and are shared
// between copies. Concurrent const access is safe.
class PermGroup {
 public:
  // Trivial group of degree 1.
  PermGroup() : PermGroup(1, {}) {}
  // Identity generators are dropped. Throws kDegreeMismatch.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }

  const StabilizerChain& chain() const;
  const BigInt& order() const;
  // order() as a machine integer; throws kCapExceeded beyond 2^63.
  std::uint64_t order_u64() const;

  // Throws kDegreeMismatch.
  bool contains(const Permutation& x) const;
  // Sorted lexicographically by image table. Throws kCapExceeded when
  // order() > caps.elements.
  const std::vector<Permutation>& elements(const Caps& caps = default_caps()) const;

  Permutation identity() const { return Permutation(degree_); }
  bool is_trivial() const { return generators_.empty(); }
  bool is_abelian() const;

  // Throws kOutOfRange. Result sorted.
  std::vector<Point> orbit(Point point) const;
  std::vector<std::vector<Point>> orbits() const;
  bool is_transitive() const;
  // Point stabilizer via Schreier generators.
  PermGroup stabilizer(Point point) const;

  // "<(1 2),(1 2 3)>"; the trivial group prints "<>".
  std::string to_string() const;

 private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<detail::GroupCache> cache_;
};

}  // namespace sylowlab

#endif  // SYLOWLAB_PERM_GROUP_HPP_
