#ifndef SYLOWLAB_GROUP_OPS_HPP_
#define SYLOWLAB_GROUP_OPS_HPP_

#include <cstdint>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/perm_group.hpp"

namespace sylowlab {

PermGroup generated_subgroup(std::size_t degree,
                             const std::vector<Permutation>& generators);

// Smallest generating subset of `elements` found greedily (an element is kept
// only when it is not already in the group generated so far).
PermGroup subgroup_from_elements(std::size_t degree,
                                 const std::vector<Permutation>& elements);

bool is_subgroup(const PermGroup& h, const PermGroup& g);
bool is_normal_subgroup(const PermGroup& n, const PermGroup& g);
bool same_group(const PermGroup& a, const PermGroup& b);

// Throws kNotASubgroup / kNotNormal.
void require_subgroup(const PermGroup& h, const PermGroup& g);
void require_normal(const PermGroup& n, const PermGroup& g);

// {g^-1 x g : g in G}, sorted. Computed by closing x under conjugation by the
// generators. Throws kNotAMember, kCapExceeded.
std::vector<Permutation> conjugacy_class(const PermGroup& g,
                                         const Permutation& x,
                                         const Caps& caps = default_caps());

// All conjugacy classes, each sorted, ordered by their smallest element.
std::vector<std::vector<Permutation>> conjugacy_classes(
    const PermGroup& g, const Caps& caps = default_caps());

// Brute scan over elements(G).
PermGroup centralizer(const PermGroup& g, const Permutation& x,
                      const Caps& caps = default_caps());
PermGroup normalizer(const PermGroup& g, const PermGroup& h,
                     const Caps& caps = default_caps());
PermGroup intersection(const PermGroup& a, const PermGroup& b,
                       const Caps& caps = default_caps());

// Elements whose order is a product of primes from `primes` (identity
// included), in elements() order.
std::vector<Permutation> pi_elements(const PermGroup& g,
                                     const std::vector<std::uint64_t>& primes,
                                     const Caps& caps = default_caps());

// O^{p'}(G): the subgroup generated by all elements of p-power order.
PermGroup p_residual(const PermGroup& g, std::uint64_t p,
                     const Caps& caps = default_caps());
bool is_generated_by_p_elements(const PermGroup& g, std::uint64_t p,
                                const Caps& caps = default_caps());

// Right cosets H g of a subgroup, numbered from 0 with coset 0 = H.
// Coset lookup is a linear scan (H r = H g iff g r^-1 in H); intended for
// desk-scale indices.
class RightCosets {
 public:
  // Throws kNotASubgroup, kCapExceeded (index > caps.elements).
  RightCosets(const PermGroup& g, const PermGroup& h,
              const Caps& caps = default_caps());

  std::size_t size() const { return representatives_.size(); }
  const std::vector<Permutation>& representatives() const {
    return representatives_;
  }
  const PermGroup& group() const { return group_; }
  const PermGroup& subgroup() const { return subgroup_; }

  std::size_t index_of(const Permutation& g) const;
  // Induced permutation on cosets (coset i is point i + 1).
  Permutation act(const Permutation& g) const;
  // Number of cosets H r with H r g = H r.
  std::size_t fixed_count(const Permutation& g) const;
  // Number of cosets fixed by every generator of p.
  std::size_t common_fixed_count(const PermGroup& p) const;

 private:
  PermGroup group_;
  PermGroup subgroup_;
  std::vector<Permutation> representatives_;
  std::vector<Permutation> inverse_representatives_;
};

// G/N realised as G acting on the right cosets of N.
class QuotientGroup {
 public:
  // Throws kNotNormal, kCapExceeded.
  QuotientGroup(const PermGroup& g, const PermGroup& n,
                const Caps& caps = default_caps());

  const PermGroup& group() const { return image_; }
  const PermGroup& parent() const { return cosets_.group(); }
  const PermGroup& kernel() const { return cosets_.subgroup(); }
  Permutation project(const Permutation& g) const { return cosets_.act(g); }

 private:
  RightCosets cosets_;
  PermGroup image_;
};

inline QuotientGroup quotient_group(const PermGroup& g, const PermGroup& n,
                                    const Caps& caps = default_caps()) {
  return QuotientGroup(g, n, caps);
}

}  // namespace sylowlab

#endif  // SYLOWLAB_GROUP_OPS_HPP_
