#ifndef SYLOWLAB_COMMUTING_HPP_
#define SYLOWLAB_COMMUTING_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/covering.hpp"
#include "sylowlab/graph.hpp"
#include "sylowlab/perm_group.hpp"
#include "sylowlab/ratio.hpp"

namespace sylowlab {

// Noncommuting pi-graph: vertices are the pi-elements of G (identity
// included, in elements() order), edges join pairs that do not commute.
struct ElementGraph {
  std::vector<Permutation> vertices;
  SimpleGraph graph;
};

// Throws kCapExceeded, kInvalidArgument (empty or non-prime pi).
ElementGraph noncommuting_graph(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                                const Caps& caps = default_caps());

struct NoncommutingSet {
  std::vector<Permutation> elements;
  std::size_t size() const { return elements.size(); }
};

// Largest set of pairwise noncommuting pi-elements.
NoncommutingSet n_pi(const ElementGraph& graph);
NoncommutingSet n_pi(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                     const Caps& caps = default_caps());

// Proportion of commuting ordered pairs of pi-elements.
ExactRatio pr_pi(const ElementGraph& graph);
ExactRatio pr_pi(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                 const Caps& caps = default_caps());

struct PrCliqueReport {
  ExactRatio pr;
  std::size_t clique = 0;
  ExactRatio product;
  bool holds = false;
};

PrCliqueReport pr_times_clique_check(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                                     const Caps& caps = default_caps());

struct SigmaCliqueReport {
  std::uint64_t p = 0;
  CoverResult sigma;
  NoncommutingSet clique;
  // The centralizers of the clique elements cover G_p.
  bool centralizers_cover = false;
  bool holds = false;
};

// sigma_p(G) <= n_p(G). Needs G nonabelian and generated by p-elements;
// throws kPreconditionFailed otherwise.
SigmaCliqueReport sigma_le_clique_check(const PermGroup& g, std::uint64_t p,
                                        const Caps& caps = default_caps());
SigmaCliqueReport sigma_le_clique_check(const SubgroupLattice& lattice, std::uint64_t p,
                                        const Caps& caps = default_caps());

struct BicliqueResult {
  // True when G is in C_pi(m, n): no disjoint S1, S2 of sizes m, n with every
  // cross pair noncommuting.
  bool member = true;
  std::vector<Permutation> left;
  std::vector<Permutation> right;
};

// Throws kCapExceeded when |G_pi| > caps.biclique, kInvalidArgument unless
// 1 <= m, n <= 6.
BicliqueResult c_pi_membership(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                               std::size_t m, std::size_t n,
                               const Caps& caps = default_caps());
BicliqueResult c_pi_membership(const ElementGraph& graph, std::size_t m, std::size_t n,
                               const Caps& caps = default_caps());

}  // namespace sylowlab

#endif  // SYLOWLAB_COMMUTING_HPP_
