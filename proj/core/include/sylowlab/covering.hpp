#ifndef SYLOWLAB_COVERING_HPP_
#define SYLOWLAB_COVERING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/perm_group.hpp"

namespace sylowlab {

// Universe of `universe_size` items and candidate sets over it.
struct CoverInstance {
  std::size_t universe_size = 0;
  std::vector<ElementSet> candidates;
};

struct CoverSolution {
  bool coverable = false;
  // Indices into CoverInstance::candidates, ascending.
  std::vector<std::size_t> chosen;
};

// Exact minimum set cover by branch and bound. Dominated candidates are
// dropped, a greedy cover seeds the incumbent and the lower bound counts
// items that no single candidate can cover two of.
CoverSolution solve_set_cover(const CoverInstance& instance);

// Elements of p-power order, identity included, in elements() order.
std::vector<Permutation> p_elements(const PermGroup& g, std::uint64_t p,
                                    const Caps& caps = default_caps());

struct CoverResult {
  // False when some item lies in no candidate (sigma is infinite).
  bool coverable = false;
  std::size_t size = 0;
  // Certificate: the covering subgroups.
  std::vector<PermGroup> cover;
  std::size_t universe_size = 0;
  std::size_t candidate_count = 0;
};

// Minimum number of maximal subgroups whose union contains G_p. Throws
// kPreconditionFailed when G is not generated by its p-elements,
// kCapExceeded.
CoverResult sigma_p(const PermGroup& g, std::uint64_t p, const Caps& caps = default_caps());
CoverResult sigma_p(const SubgroupLattice& lattice, std::uint64_t p);

// Minimum number of maximal subgroups covering the class x^G. Throws
// kNotAMember, kPreconditionFailed (x not of prime-power order),
// kClassNotCoverable, kCapExceeded.
CoverResult class_cover_number(const PermGroup& g, const Permutation& x,
                               const Caps& caps = default_caps());
CoverResult class_cover_number(const SubgroupLattice& lattice, const Permutation& x);

struct SigmaBoundReport {
  std::uint64_t p = 0;
  CoverResult sigma;
  // sigma >= p + 1 (an infinite sigma satisfies it).
  bool holds = false;
};

SigmaBoundReport sigma_lower_bound_check(const PermGroup& g, std::uint64_t p,
                                         const Caps& caps = default_caps());
SigmaBoundReport sigma_lower_bound_check(const SubgroupLattice& lattice, std::uint64_t p);

}  // namespace sylowlab

#endif  // SYLOWLAB_COVERING_HPP_
