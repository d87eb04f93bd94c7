#ifndef SYLOWLAB_SCHREIER_SIMS_HPP_
#define SYLOWLAB_SCHREIER_SIMS_HPP_

#include <cstddef>
#include <vector>

#include "sylowlab/permutation.hpp"
#include "sylowlab/ratio.hpp"

namespace sylowlab {

// Base and strong generating set built by the deterministic Schreier-Sims
// algorithm. New base points are always the smallest point moved by the
// element that forces the extension, so the chain is a pure function of the
// generator list.
class StabilizerChain {
 public:
  StabilizerChain(std::size_t degree, const std::vector<Permutation>& generators);

  std::size_t degree() const { return degree_; }
  std::size_t depth() const { return levels_.size(); }
  // 1-based base points.
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_lengths() const;
  BigInt order() const;

  // Strong generators of the stabilizer of the first `level` base points.
  const std::vector<Permutation>& strong_generators(std::size_t level) const {
    return levels_[level].generators;
  }
  // Coset representatives u with base[level]^u = orbit point.
  const std::vector<Permutation>& transversal(std::size_t level) const {
    return levels_[level].transversal;
  }

  struct SiftResult {
    Permutation residue;
    std::size_t level;  // depth() when the sift ran through every level
  };
  SiftResult sift(const Permutation& g, std::size_t from_level = 0) const;
  bool contains(const Permutation& g) const;

  // Every element exactly once (unsorted): u_{k-1} * ... * u_0.
  std::vector<Permutation> enumerate() const;

 private:
  struct Level {
    Point base_point = 0;  // 0-based
    std::vector<Permutation> generators;
    std::vector<Point> orbit;            // 0-based points
    std::vector<std::int32_t> position;  // point -> index into orbit, or -1
    std::vector<Permutation> transversal;
    std::vector<Permutation> inverse_transversal;
  };

  void rebuild_orbit(Level& level) const;
  void add_level_for(const Permutation& moving);

  std::size_t degree_;
  std::vector<Level> levels_;
};

}  // namespace sylowlab

#endif  // SYLOWLAB_SCHREIER_SIMS_HPP_
