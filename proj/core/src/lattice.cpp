#include "sylowlab/lattice.hpp"

#include <algorithm>
#include <numeric>

#include "sylowlab/error.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::vector<std::uint64_t> blocks;
    boost::to_block_range(s, std::back_inserter(blocks));
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (std::uint64_t b : blocks) {
      h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6U) + (h >> 2U);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace

GroupTable::GroupTable(const PermGroup& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw Error(ErrorCode::kCapExceeded,
                "group order " + g.order().str() + " exceeds table cap " + std::to_string(max_order));
  }
  Caps caps;
  caps.elements = max_order;
  elements_ = g.elements(caps);
  const std::size_t n = elements_.size();
  index_.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i], static_cast<std::uint32_t>(i));
  if (!elements_.front().is_identity()) throw InternalError("identity is not the first element");

  product_.resize(n * n);
  inverse_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      product_[a * n + b] = index_.at(compose(elements_[a], elements_[b]));
    }
  }
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = index_.at(elements_[a].inverse());
  element_order_.resize(n);
  for (std::size_t a = 0; a < n; ++a) element_order_[a] = elements_[a].order();
}

std::optional<std::size_t> GroupTable::find(const Permutation& x) const {
  auto it = index_.find(x);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t GroupTable::index_of(const Permutation& x) const {
  auto found = find(x);
  if (!found) throw Error(ErrorCode::kNotAMember, x.to_cycle_string() + " is not in the table");
  return *found;
}

ElementSet GroupTable::closure(const std::vector<std::uint32_t>& generators) const {
  ElementSet members(size());
  std::vector<std::uint32_t> list{0};
  members.set(0);
  for (std::size_t k = 0; k < list.size(); ++k) {
    for (std::uint32_t g : generators) {
      std::uint32_t m = mul(list[k], g);
      if (!members.test(m)) {
        members.set(m);
        list.push_back(m);
      }
    }
  }
  return members;
}

ElementSet GroupTable::members_of(const PermGroup& h) const {
  ElementSet members(size());
  for (const auto& x : h.elements()) members.set(index_of(x));
  return members;
}

SubgroupLattice::SubgroupLattice(PermGroup parent, std::shared_ptr<const GroupTable> table,
                                 std::vector<LatticeSubgroup> subgroups)
    : parent_(std::move(parent)), table_(std::move(table)), subgroups_(std::move(subgroups)) {
  const std::size_t s = subgroups_.size();
  supergroups_.assign(s, ElementSet(s));
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = i + 1; j < s; ++j) {
      const auto& a = subgroups_[i];
      const auto& b = subgroups_[j];
      if (b.order > a.order && b.order % a.order == 0 && a.members.is_subset_of(b.members)) {
        supergroups_[i].set(j);
      }
    }
  }
  for (std::size_t i = 0; i + 1 < s; ++i) {
    if (supergroups_[i].count() == 1) maximal_.push_back(i);
  }
}

PermGroup SubgroupLattice::subgroup(std::size_t i) const {
  std::vector<Permutation> gens;
  for (std::uint32_t e : subgroups_.at(i).generators) gens.push_back(table_->element(e));
  return PermGroup(parent_.degree(), gens);
}

bool SubgroupLattice::includes(std::size_t outer, std::size_t inner) const {
  return outer == inner || supergroups_.at(inner).test(outer);
}

bool SubgroupLattice::is_normal(std::size_t i) const {
  const auto& sub = subgroups_.at(i);
  for (const auto& g : parent_.generators()) {
    std::size_t gi = table_->index_of(g);
    std::size_t gi_inv = table_->inv(gi);
    for (std::uint32_t h : sub.generators) {
      if (!sub.members.test(table_->mul(table_->mul(gi_inv, h), gi))) return false;
    }
  }
  return true;
}

std::vector<std::size_t> SubgroupLattice::normal_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (is_normal(i)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> SubgroupLattice::class_representatives() const {
  std::vector<std::uint32_t> gens;
  for (const auto& g : parent_.generators()) gens.push_back(static_cast<std::uint32_t>(table_->index_of(g)));
  std::vector<bool> seen(size(), false);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < size(); ++i) {
    if (seen[i]) continue;
    reps.push_back(i);
    seen[i] = true;
    std::vector<std::size_t> queue{i};
    for (std::size_t k = 0; k < queue.size(); ++k) {
      const auto& members = subgroups_[queue[k]].members;
      for (std::uint32_t g : gens) {
        ElementSet image(members.size());
        const std::uint32_t g_inv = table_->inv(g);
        for (auto h = members.find_first(); h != ElementSet::npos; h = members.find_next(h)) {
          image.set(table_->mul(table_->mul(g_inv, static_cast<std::uint32_t>(h)), g));
        }
        const auto j = find(image);
        if (!j) throw InternalError("conjugate subgroup missing from lattice");
        if (!seen[*j]) {
          seen[*j] = true;
          queue.push_back(*j);
        }
      }
    }
  }
  return reps;
}

std::optional<std::size_t> SubgroupLattice::find(const ElementSet& members) const {
  std::size_t order = members.count();
  for (std::size_t i : of_order(order)) {
    if (subgroups_[i].members == members) return i;
  }
  return std::nullopt;
}

std::optional<std::size_t> SubgroupLattice::find(const PermGroup& h) const {
  if (h.degree() != parent_.degree()) return std::nullopt;
  for (const auto& g : h.generators()) {
    if (!table_->find(g)) return std::nullopt;
  }
  return find(table_->members_of(h));
}

std::vector<std::size_t> SubgroupLattice::of_order(std::size_t order) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < size(); ++i) {
    if (subgroups_[i].order == order) out.push_back(i);
  }
  return out;
}

SubgroupLattice subgroup_lattice(const PermGroup& g, const Caps& caps) {
  if (g.order() > caps.lattice) {
    throw Error(ErrorCode::kCapExceeded,
                "group order " + g.order().str() + " exceeds lattice cap " + std::to_string(caps.lattice));
  }
  auto table = std::make_shared<const GroupTable>(g, caps.lattice);
  const std::size_t n = table->size();

  std::vector<LatticeSubgroup> subgroups;
  std::unordered_map<ElementSet, std::size_t, ElementSetHash> seen;
  auto add = [&](ElementSet members, std::vector<std::uint32_t> gens) -> bool {
    auto [it, inserted] = seen.emplace(members, subgroups.size());
    if (!inserted) return false;
    LatticeSubgroup sub;
    sub.order = members.count();
    sub.members = std::move(members);
    sub.generators = std::move(gens);
    subgroups.push_back(std::move(sub));
    return true;
  };

  {
    ElementSet trivial(n);
    trivial.set(0);
    add(std::move(trivial), {});
  }
  std::vector<std::uint32_t> cyclic_generators;
  for (std::uint32_t e = 1; e < n; ++e) {
    std::uint64_t ord = table->order_of(e);
    if (prime_divisors(BigInt(ord)).size() != 1) continue;
    if (add(table->closure({e}), {e})) cyclic_generators.push_back(e);
  }

  // Join closure. A partial closure larger than |G|/2 can only be G.
  ElementSet whole(n);
  whole.set();
  for (std::size_t q = 1; q < subgroups.size(); ++q) {
    for (std::uint32_t c : cyclic_generators) {
      if (subgroups[q].members.test(c)) continue;
      ElementSet members = subgroups[q].members;
      std::vector<std::uint32_t> gens = subgroups[q].generators;
      gens.push_back(c);
      std::vector<std::uint32_t> list;
      list.reserve(n);
      for (std::size_t m = members.find_first(); m != ElementSet::npos; m = members.find_next(m)) {
        list.push_back(static_cast<std::uint32_t>(m));
      }
      bool is_whole = false;
      for (std::size_t k = 0; k < list.size() && !is_whole; ++k) {
        for (std::uint32_t s : gens) {
          std::uint32_t m = table->mul(list[k], s);
          if (members.test(m)) continue;
          members.set(m);
          list.push_back(m);
          if (2 * list.size() > n) {
            is_whole = true;
            break;
          }
        }
      }
      if (is_whole) members = whole;
      add(std::move(members), std::move(gens));
    }
  }

  std::vector<std::size_t> order_idx(subgroups.size());
  std::iota(order_idx.begin(), order_idx.end(), std::size_t{0});
  std::sort(order_idx.begin(), order_idx.end(), [&](std::size_t a, std::size_t b) {
    if (subgroups[a].order != subgroups[b].order) return subgroups[a].order < subgroups[b].order;
    return subgroups[a].members < subgroups[b].members;
  });
  std::vector<LatticeSubgroup> sorted;
  sorted.reserve(subgroups.size());
  for (std::size_t i : order_idx) sorted.push_back(std::move(subgroups[i]));
  return SubgroupLattice(g, std::move(table), std::move(sorted));
}

bool is_p_solvable(const SubgroupLattice& lattice, std::uint64_t p) {
  const auto normals = lattice.normal_indices();
  auto largest_above = [&](std::size_t base, bool want_p_power) {
    std::size_t best = base;
    const std::size_t base_order = lattice[base].order;
    for (std::size_t n : normals) {
      if (!lattice.includes(n, base)) continue;
      std::size_t index = lattice[n].order / base_order;
      bool ok = want_p_power ? is_power_of(index, p) : index % p != 0;
      if (ok && lattice[n].order > lattice[best].order) best = n;
    }
    return best;
  };
  std::size_t current = 0;
  while (current != lattice.top()) {
    std::size_t after_p_prime = largest_above(current, false);
    std::size_t after_p = largest_above(after_p_prime, true);
    if (after_p == current) return false;
    current = after_p;
  }
  return true;
}

bool is_p_solvable(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  return is_p_solvable(subgroup_lattice(g, caps), p);
}

}  // namespace sylowlab
