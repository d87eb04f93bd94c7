#include "sylowlab/group_ops.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

#include "sylowlab/error.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

void require_within(const PermGroup& g, const Caps& caps) {
  if (g.order() > caps.elements) {
    throw Error(ErrorCode::kCapExceeded,
                "group order " + g.order().str() + " exceeds element cap " +
                    std::to_string(caps.elements));
  }
}

}  // namespace

PermGroup generated_subgroup(std::size_t degree,
                             const std::vector<Permutation>& generators) {
  return PermGroup(degree, generators);
}

PermGroup subgroup_from_elements(std::size_t degree,
                                 const std::vector<Permutation>& elements) {
  std::vector<Permutation> kept;
  PermGroup current = PermGroup::trivial(degree);
  for (const auto& e : elements) {
    if (current.order() == elements.size()) break;
    if (current.contains(e)) continue;
    kept.push_back(e);
    current = PermGroup(degree, kept);
  }
  return current;
}

bool is_subgroup(const PermGroup& h, const PermGroup& g) {
  if (h.degree() != g.degree()) return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation& x) { return g.contains(x); });
}

bool is_normal_subgroup(const PermGroup& n, const PermGroup& g) {
  if (!is_subgroup(n, g)) return false;
  for (const auto& x : g.generators()) {
    for (const auto& h : n.generators()) {
      if (!n.contains(conjugate(h, x))) return false;
    }
  }
  return true;
}

bool same_group(const PermGroup& a, const PermGroup& b) {
  return a.degree() == b.degree() && a.order() == b.order() && is_subgroup(a, b);
}

void require_subgroup(const PermGroup& h, const PermGroup& g) {
  if (!is_subgroup(h, g)) {
    throw Error(ErrorCode::kNotASubgroup, h.to_string() + " is not a subgroup of " + g.to_string());
  }
}

void require_normal(const PermGroup& n, const PermGroup& g) {
  require_subgroup(n, g);
  if (!is_normal_subgroup(n, g)) {
    throw Error(ErrorCode::kNotNormal, n.to_string() + " is not normal in " + g.to_string());
  }
}

std::vector<Permutation> conjugacy_class(const PermGroup& g, const Permutation& x,
                                         const Caps& caps) {
  if (!g.contains(x)) {
    throw Error(ErrorCode::kNotAMember, x.to_cycle_string() + " is not in " + g.to_string());
  }
  require_within(g, caps);
  std::unordered_set<Permutation, PermutationHash> seen{x};
  std::vector<Permutation> queue{x};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (const auto& s : g.generators()) {
      Permutation y = conjugate(queue[k], s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<std::vector<Permutation>> conjugacy_classes(const PermGroup& g,
                                                        const Caps& caps) {
  const auto& elements = g.elements(caps);
  std::unordered_set<Permutation, PermutationHash> assigned;
  std::vector<std::vector<Permutation>> classes;
  for (const auto& e : elements) {
    if (assigned.count(e) != 0) continue;
    auto cls = conjugacy_class(g, e, caps);
    assigned.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

PermGroup centralizer(const PermGroup& g, const Permutation& x, const Caps& caps) {
  if (!g.contains(x)) {
    throw Error(ErrorCode::kNotAMember, x.to_cycle_string() + " is not in " + g.to_string());
  }
  std::vector<Permutation> members;
  for (const auto& e : g.elements(caps)) {
    if (commute(e, x)) members.push_back(e);
  }
  return subgroup_from_elements(g.degree(), members);
}

PermGroup normalizer(const PermGroup& g, const PermGroup& h, const Caps& caps) {
  require_subgroup(h, g);
  std::vector<Permutation> members;
  for (const auto& e : g.elements(caps)) {
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](const Permutation& y) { return h.contains(conjugate(y, e)); });
    if (normalizes) members.push_back(e);
  }
  return subgroup_from_elements(g.degree(), members);
}

PermGroup intersection(const PermGroup& a, const PermGroup& b, const Caps& caps) {
  if (a.degree() != b.degree()) {
    throw Error(ErrorCode::kDegreeMismatch, "intersection of groups of different degree");
  }
  const PermGroup& small = a.order() <= b.order() ? a : b;
  const PermGroup& other = a.order() <= b.order() ? b : a;
  std::vector<Permutation> members;
  for (const auto& e : small.elements(caps)) {
    if (other.contains(e)) members.push_back(e);
  }
  return subgroup_from_elements(a.degree(), members);
}

std::vector<Permutation> pi_elements(const PermGroup& g,
                                     const std::vector<std::uint64_t>& primes,
                                     const Caps& caps) {
  std::vector<Permutation> out;
  for (const auto& e : g.elements(caps)) {
    if (is_pi_number(e.order(), primes)) out.push_back(e);
  }
  return out;
}

PermGroup p_residual(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  std::vector<Permutation> kept;
  PermGroup current = PermGroup::trivial(g.degree());
  for (const auto& e : pi_elements(g, {p}, caps)) {
    if (current.order() == g.order()) break;
    if (current.contains(e)) continue;
    kept.push_back(e);
    current = PermGroup(g.degree(), kept);
  }
  return current;
}

bool is_generated_by_p_elements(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  return p_residual(g, p, caps).order() == g.order();
}

RightCosets::RightCosets(const PermGroup& g, const PermGroup& h, const Caps& caps)
    : group_(g), subgroup_(h) {
  require_subgroup(h, g);
  BigInt index = g.order() / h.order();
  if (index > caps.elements) {
    throw Error(ErrorCode::kCapExceeded,
                "index " + index.str() + " exceeds cap " + std::to_string(caps.elements));
  }
  representatives_.push_back(g.identity());
  inverse_representatives_.push_back(g.identity());
  for (std::size_t k = 0; k < representatives_.size(); ++k) {
    for (const auto& s : g.generators()) {
      Permutation candidate = compose(representatives_[k], s);
      bool known = false;
      for (const auto& r_inv : inverse_representatives_) {
        if (h.contains(compose(candidate, r_inv))) {
          known = true;
          break;
        }
      }
      if (!known) {
        inverse_representatives_.push_back(candidate.inverse());
        representatives_.push_back(std::move(candidate));
      }
    }
  }
  if (index != representatives_.size()) {
    throw InternalError("coset enumeration found " + std::to_string(representatives_.size()) +
                        " cosets, expected " + index.str());
  }
}

std::size_t RightCosets::index_of(const Permutation& g) const {
  for (std::size_t i = 0; i < inverse_representatives_.size(); ++i) {
    if (subgroup_.contains(compose(g, inverse_representatives_[i]))) return i;
  }
  throw Error(ErrorCode::kNotAMember, g.to_cycle_string() + " lies in no coset");
}

Permutation RightCosets::act(const Permutation& g) const {
  std::vector<Point> images(size());
  for (std::size_t i = 0; i < size(); ++i) {
    images[i] = static_cast<Point>(index_of(compose(representatives_[i], g)));
  }
  return Permutation::from_raw_images(std::move(images));
}

std::size_t RightCosets::fixed_count(const Permutation& g) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (subgroup_.contains(compose(compose(representatives_[i], g), inverse_representatives_[i]))) {
      ++count;
    }
  }
  return count;
}

std::size_t RightCosets::common_fixed_count(const PermGroup& p) const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    bool fixed = std::all_of(p.generators().begin(), p.generators().end(), [&](const Permutation& x) {
      return subgroup_.contains(compose(compose(representatives_[i], x), inverse_representatives_[i]));
    });
    if (fixed) ++count;
  }
  return count;
}

namespace {

PermGroup induced_image(const RightCosets& cosets) {
  std::vector<Permutation> gens;
  for (const auto& s : cosets.group().generators()) gens.push_back(cosets.act(s));
  return PermGroup(cosets.size(), gens);
}

RightCosets normal_cosets(const PermGroup& g, const PermGroup& n, const Caps& caps) {
  require_normal(n, g);
  return RightCosets(g, n, caps);
}

}  // namespace

QuotientGroup::QuotientGroup(const PermGroup& g, const PermGroup& n, const Caps& caps)
    : cosets_(normal_cosets(g, n, caps)), image_(induced_image(cosets_)) {}

}  // namespace sylowlab
