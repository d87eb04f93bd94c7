#ifndef SYLOWLAB_SYLOW_HPP_
#define SYLOWLAB_SYLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "sylowlab/caps.hpp"
#include "sylowlab/lattice.hpp"
#include "sylowlab/perm_group.hpp"
#include "sylowlab/ratio.hpp"

namespace sylowlab {

// A Sylow p-subgroup, grown from the lexicographically first p-element of
// largest order by repeatedly adjoining the first p-element of N_G(P) \ P.
// Trivial when p does not divide |G|. Throws kCapExceeded.
PermGroup sylow_subgroup(const PermGroup& g, std::uint64_t p,
                         const Caps& caps = default_caps());

// |G : N_G(P)|. Raises InternalError if the result is not 1 mod p.
BigInt nu_p(const PermGroup& g, std::uint64_t p, const Caps& caps = default_caps());

// Number of subgroups of order |H|_p contained in lattice subgroup `index`.
std::uint64_t lattice_nu_p(const SubgroupLattice& lattice, std::size_t index,
                           std::uint64_t p);

// All Sylow p-subgroups of G, each as its sorted element list, in a
// deterministic order.
std::vector<std::vector<Permutation>> sylow_subgroups(const PermGroup& g,
                                                      std::uint64_t p,
                                                      const Caps& caps = default_caps());

struct NuMonotonicityReport {
  std::uint64_t p = 0;
  BigInt nu_g;
  BigInt nu_h;
  // Each Sylow p-subgroup of H lies in exactly one Sylow p-subgroup of G.
  bool unique_containment = false;
  // |H| |N_G(P)| / |H cap N_G(P)| = |G|.
  bool product_covers = false;
  // nu_h <= nu_g, and equality exactly when both conditions hold.
  bool holds = false;
};

// Throws kNotASubgroup, kCapExceeded.
NuMonotonicityReport nu_monotonicity_check(const PermGroup& g, const PermGroup& h,
                                           std::uint64_t p,
                                           const Caps& caps = default_caps());

struct NuQuotientReport {
  std::uint64_t p = 0;
  BigInt nu_g;
  BigInt nu_quotient;
  BigInt nu_pn;
  bool holds = false;
};

// nu_p(G) = nu_p(G/N) nu_p(PN). Throws kNotNormal, kCapExceeded.
NuQuotientReport nu_quotient_identity_check(const PermGroup& g, const PermGroup& n,
                                            std::uint64_t p,
                                            const Caps& caps = default_caps());

// True iff H < G and <H, r> = G for every coset representative r outside H.
bool is_maximal_subgroup(const PermGroup& h, const PermGroup& g,
                         const Caps& caps = default_caps());

struct NuFprReport {
  std::uint64_t p = 0;
  BigInt nu_g;
  BigInt nu_h;
  ExactRatio nu_ratio;
  ExactRatio fpr;
  bool holds = false;
};

// nu_p(H) / nu_p(G) = fpr(P, Omega) for H maximal containing a Sylow
// p-subgroup P. Throws kNotASubgroup, kNotMaximal, kSylowNotContained.
NuFprReport nu_fpr_identity_check(const PermGroup& g, const PermGroup& h,
                                  std::uint64_t p,
                                  const Caps& caps = default_caps());

struct TheoremCReport {
  std::uint64_t p = 0;
  BigInt nu_g;
  BigInt nu_h;
  ExactRatio ratio;
  // nu_h (2p - 1) <= nu_g (p - 1)
  bool main_bound_holds = false;
  bool exclusion_holds = false;
  // nu_h (p + 1) <= nu_g; asserted only when exclusion_holds.
  bool strong_bound_holds = false;
  bool holds = false;
};

// Throws kPreconditionFailed when G is not generated by p-elements, H is not
// proper, or H does not contain a Sylow p-subgroup of G.
TheoremCReport theorem_c_check(const PermGroup& g, const PermGroup& h, std::uint64_t p,
                               bool exclusion_holds,
                               const Caps& caps = default_caps());

struct PSolvableEntry {
  std::size_t subgroup_index = 0;
  std::size_t order = 0;
  std::uint64_t nu_h = 0;
  bool divides = false;
  bool gap_holds = false;
};

struct PSolvableReport {
  std::uint64_t p = 0;
  std::uint64_t nu_g = 0;
  std::size_t subgroups_checked = 0;
  // Subgroups where divisibility or the (p + 1) gap fails.
  std::vector<PSolvableEntry> failures;
  bool holds = false;
};

// Throws kNotPSolvable, kCapExceeded.
PSolvableReport p_solvable_divisibility_check(const PermGroup& g, std::uint64_t p,
                                              const Caps& caps = default_caps());

struct NamedGroup {
  std::string name;
  PermGroup group;
};

struct ConjectureDViolation {
  std::string group;
  std::string subgroup_generators;
  std::uint64_t p = 0;
  std::uint64_t nu_g = 0;
  std::uint64_t nu_h = 0;
  ExactRatio ratio;
};

struct ConjectureDScan {
  std::vector<ConjectureDViolation> violations;
  std::vector<std::string> notices;
  std::size_t groups_scanned = 0;
  std::size_t pairs_scanned = 0;
};

// Every (G, H) with nu_p(H) < nu_p(G) and nu_p(H) > f nu_p(G), sorted by
// descending ratio. Groups beyond the lattice cap are skipped with a notice.
// With `threads` > 1 the groups are scanned concurrently; the result does not
// depend on the thread count.
ConjectureDScan conjecture_d_scan(const std::vector<NamedGroup>& groups, std::uint64_t p,
                                  const ExactRatio& f,
                                  const Caps& caps = default_caps(),
                                  unsigned threads = 1);

}  // namespace sylowlab

#endif  // SYLOWLAB_SYLOW_HPP_
