#ifndef SYLOWLAB_ACTIONS_HPP_
#define SYLOWLAB_ACTIONS_HPP_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/perm_group.hpp"
#include "sylowlab/ratio.hpp"

namespace sylowlab {

// n = sum digits[i] * prime^i with 0 <= digits[i] < prime, most significant
// digit nonzero. digits[0] is the units digit.
struct PadicProfile {
  std::uint64_t prime = 2;
  std::vector<std::uint64_t> digits;

  static PadicProfile of(std::uint64_t n, std::uint64_t prime);
  std::uint64_t value() const;
  // Index of the leading digit.
  std::size_t top() const { return digits.size() - 1; }
  std::uint64_t digit(std::size_t i) const { return i < digits.size() ? digits[i] : 0; }
};

// Transitive action of G on the right cosets of a proper subgroup H
// (equivalently on the conjugates of H when H is self-normalising). Point 1 is
// the coset H itself.
class CosetAction {
 public:
  // Throws kNotASubgroup, kNotProper, kCapExceeded.
  CosetAction(const PermGroup& g, const PermGroup& h, const Caps& caps = default_caps());

  const PermGroup& group() const { return cosets_.group(); }
  const PermGroup& point_stabilizer() const { return cosets_.subgroup(); }
  std::size_t degree() const { return cosets_.size(); }
  const PermGroup& action_image() const { return image_; }
  // Point i + 1 is the coset H r_i, i.e. the conjugate r_i^-1 H r_i.
  const std::vector<Permutation>& point_representatives() const {
    return cosets_.representatives();
  }
  const RightCosets& cosets() const { return cosets_; }

  Permutation image_of(const Permutation& g) const { return cosets_.act(g); }
  std::size_t fixed_points(const Permutation& g) const { return cosets_.fixed_count(g); }

 private:
  RightCosets cosets_;
  PermGroup image_;
};

inline CosetAction coset_action(const PermGroup& g, const PermGroup& h,
                                const Caps& caps = default_caps()) {
  return CosetAction(g, h, caps);
}

// The action of a transitive group on its own points, realised as the coset
// action on the stabiliser of point 1. Throws kPreconditionFailed if G is
// intransitive or trivial.
CosetAction natural_action(const PermGroup& g, const Caps& caps = default_caps());

// |C_Omega(x)| / |Omega|. When |G| is within the element cap the value is
// cross-checked against |x^G cap H| / |x^G| and InternalError is raised on
// disagreement. Throws kNotAMember.
ExactRatio fpr_element(const CosetAction& action, const Permutation& x,
                       const Caps& caps = default_caps());

// |x^G cap H| / |x^G| computed directly from the conjugacy class.
ExactRatio fpr_by_class(const CosetAction& action, const Permutation& x,
                        const Caps& caps = default_caps());

// Fraction of points fixed by every element of P. Throws kNotASubgroup.
ExactRatio fpr_subgroup(const CosetAction& action, const PermGroup& p);

// The p-element of A_n built from the p-adic digits of n: a_i cycles of
// length p^i (for p = 2 with an odd number of even-length cycles, one
// 2^f-cycle is split into two 2^(f-1)-cycles). Cycles sit on consecutive
// points from 1, longest first. Throws kNoPElement when n < p.
Permutation canonical_p_element(std::uint64_t n, std::uint64_t p);

// True when the p = 2 split is needed, i.e. p = 2 and sum_{i>=1} a_i is odd.
bool canonical_element_is_split(std::uint64_t n, std::uint64_t p);

// prod_i C(a_i, b_i) / C(n, k) where a, b are the p-adic digits of n, k: the
// fpr of canonical_p_element(n, p) on k-subsets. Valid for 1 <= k < n/2,
// p <= n, and not in the split case; throws kOutOfDomain otherwise.
ExactRatio subset_fpr_formula(std::uint64_t n, std::uint64_t k, std::uint64_t p);

// Number of k-subsets of {1..degree} mapped to themselves by x, counted from
// the cycle type (a fixed subset is a union of cycles).
BigInt fixed_subset_count(const Permutation& x, std::size_t k);

struct MinFprResult {
  Permutation element;
  ExactRatio ratio;
  std::uint64_t element_order = 1;
};

// Non-identity p-element of least fpr, scanning one representative per
// conjugacy class (the smallest class member). Ties: smaller element order,
// then smaller image table. Throws kPreconditionFailed if p does not divide
// |G|, kCapExceeded.
MinFprResult min_fpr_p_element(const CosetAction& action, std::uint64_t p,
                               const Caps& caps = default_caps());

struct OrbitBoundReport {
  std::uint64_t p = 0;
  std::size_t degree = 0;
  std::size_t orbit_count = 0;
  bool generated_by_p_elements = false;
  // orbit_count * (2p - 1) <= p * degree
  bool orbit_bound_holds = false;
  // Applies only when the alternating-quotient exclusion is known to hold.
  bool exclusion_holds = false;
  // orbit_count * (p + 1) <= 2 * degree
  bool strong_bound_holds = false;
  // All asserted bounds hold.
  bool holds = false;
};

// Counts orbits of a Sylow p-subgroup on the action's points and compares
// them with p/(2p-1) |Omega| and, when `exclusion_holds` (the p-residual of G
// has no alternating quotient A_m with p+1 < m < p^2-p), with 2/(p+1) |Omega|.
// Throws kPreconditionFailed for p = 2 or p not dividing |G|.
OrbitBoundReport sylow_orbit_bound_check(const CosetAction& action, std::uint64_t p,
                                         bool exclusion_holds,
                                         const Caps& caps = default_caps());

}  // namespace sylowlab

#endif  // SYLOWLAB_ACTIONS_HPP_
