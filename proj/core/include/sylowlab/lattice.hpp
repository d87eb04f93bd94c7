#ifndef SYLOWLAB_LATTICE_HPP_
#define SYLOWLAB_LATTICE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sylowlab/caps.hpp"
#include "sylowlab/perm_group.hpp"

namespace sylowlab {

using ElementSet = boost::dynamic_bitset<std::uint64_t>;

// Cayley table of a small group. Element i is elements()[i] of the parent, so
// index 0 is always the identity.
class GroupTable {
 public:
  // Throws kCapExceeded when |G| > max_order.
  GroupTable(const PermGroup& g, std::size_t max_order);

  std::size_t size() const { return elements_.size(); }
  const Permutation& element(std::size_t i) const { return elements_[i]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::optional<std::size_t> find(const Permutation& x) const;
  std::size_t index_of(const Permutation& x) const;  // throws kNotAMember

  std::uint32_t mul(std::size_t a, std::size_t b) const {
    return product_[a * elements_.size() + b];
  }
  std::uint32_t inv(std::size_t a) const { return inverse_[a]; }
  std::uint64_t order_of(std::size_t a) const { return element_order_[a]; }

  // Subgroup generated by the given element indices, as a member set.
  ElementSet closure(const std::vector<std::uint32_t>& generators) const;
  // Member set of an arbitrary subgroup of the parent.
  ElementSet members_of(const PermGroup& h) const;

 private:
  std::vector<Permutation> elements_;
  std::unordered_map<Permutation, std::uint32_t, PermutationHash> index_;
  std::vector<std::uint32_t> product_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint64_t> element_order_;
};

struct LatticeSubgroup {
  ElementSet members;
  std::size_t order = 0;
  std::vector<std::uint32_t> generators;  // element indices
};

// Every subgroup of a small group.
//
// Built by join closure: start from the trivial group and the cyclic
// subgroups of prime-power order and repeatedly form H v <c> until no new
// subgroup appears. Since a group is generated by its elements of
// prime-power order this reaches every subgroup.
//
// Subgroups are sorted by (order, member bitset) so index 0 is the trivial
// group and the last index is the parent.
class SubgroupLattice {
 public:
  SubgroupLattice(PermGroup parent, std::shared_ptr<const GroupTable> table,
                  std::vector<LatticeSubgroup> subgroups);

  const PermGroup& parent() const { return parent_; }
  const GroupTable& table() const { return *table_; }
  std::shared_ptr<const GroupTable> shared_table() const { return table_; }

  std::size_t size() const { return subgroups_.size(); }
  const LatticeSubgroup& operator[](std::size_t i) const { return subgroups_[i]; }
  std::size_t top() const { return subgroups_.size() - 1; }

  PermGroup subgroup(std::size_t i) const;
  // True iff subgroup `inner` is contained in subgroup `outer`.
  bool includes(std::size_t outer, std::size_t inner) const;
  // Indices of the subgroups strictly containing subgroup i.
  const ElementSet& strict_supergroups(std::size_t i) const {
    return supergroups_[i];
  }
  const std::vector<std::size_t>& maximal_indices() const { return maximal_; }
  std::vector<std::size_t> normal_indices() const;
  bool is_normal(std::size_t i) const;
  std::optional<std::size_t> find(const ElementSet& members) const;
  std::optional<std::size_t> find(const PermGroup& h) const;
  // Smallest index of each conjugacy class of subgroups, ascending.
  std::vector<std::size_t> class_representatives() const;
  // Indices of subgroups of the given order.
  std::vector<std::size_t> of_order(std::size_t order) const;

 private:
  PermGroup parent_;
  std::shared_ptr<const GroupTable> table_;
  std::vector<LatticeSubgroup> subgroups_;
  std::vector<ElementSet> supergroups_;
  std::vector<std::size_t> maximal_;
};

// Throws kCapExceeded when |G| > caps.lattice.
SubgroupLattice subgroup_lattice(const PermGroup& g,
                                 const Caps& caps = default_caps());

// Upper p-series test on the normal subgroups of the lattice.
bool is_p_solvable(const PermGroup& g, std::uint64_t p,
                   const Caps& caps = default_caps());
bool is_p_solvable(const SubgroupLattice& lattice, std::uint64_t p);

}  // namespace sylowlab

#endif  // SYLOWLAB_LATTICE_HPP_
