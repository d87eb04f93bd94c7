#ifndef SYLOWLAB_CAPS_HPP_
#define SYLOWLAB_CAPS_HPP_

#include <cstddef>

namespace sylowlab {

// Size limits for the brute-force operations. Every capped operation throws
// Error(kCapExceeded) instead of degrading.
struct Caps {
  // Maximum group order for which elements are enumerated.
  std::size_t elements = 1'000'000;
  // Maximum group order for which the full subgroup lattice is built.
  std::size_t lattice = 2000;
  // Maximum number of pi-elements for the biclique search.
  std::size_t biclique = 64;
};

inline const Caps& default_caps() {
  static const Caps caps{};
  return caps;
}

}  // namespace sylowlab

#endif  // SYLOWLAB_CAPS_HPP_
