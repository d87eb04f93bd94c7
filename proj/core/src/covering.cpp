#include "sylowlab/covering.hpp"

#include <algorithm>
#include <numeric>

#include "sylowlab/error.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

class CoverSearch {
 public:
  CoverSearch(std::size_t universe_size, std::vector<ElementSet> candidates,
              std::vector<std::size_t> ids)
      : universe_size_(universe_size), candidates_(std::move(candidates)), ids_(std::move(ids)) {
    holders_.assign(universe_size_, ElementSet(candidates_.size()));
    for (std::size_t c = 0; c < candidates_.size(); ++c) {
      for (auto e = candidates_[c].find_first(); e != ElementSet::npos;
           e = candidates_[c].find_next(e)) {
        holders_[e].set(c);
      }
    }
    item_order_.resize(universe_size_);
    std::iota(item_order_.begin(), item_order_.end(), 0);
    std::stable_sort(item_order_.begin(), item_order_.end(), [&](std::size_t a, std::size_t b) {
      return holders_[a].count() < holders_[b].count();
    });
  }

  std::vector<std::size_t> solve() {
    ElementSet all(universe_size_);
    all.set();
    best_ = greedy(all);
    std::vector<std::size_t> chosen;
    search(all, chosen);
    std::vector<std::size_t> out;
    for (std::size_t c : best_) out.push_back(ids_[c]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<std::size_t> greedy(ElementSet uncovered) const {
    std::vector<std::size_t> chosen;
    while (uncovered.any()) {
      std::size_t best = 0, gain = 0;
      for (std::size_t c = 0; c < candidates_.size(); ++c) {
        const std::size_t g = (candidates_[c] & uncovered).count();
        if (g > gain) {
          gain = g;
          best = c;
        }
      }
      chosen.push_back(best);
      uncovered -= candidates_[best];
    }
    return chosen;
  }

  // The larger of two bounds: items pairwise lacking a common candidate each
  // need their own set, and no set covers more than the best single gain.
  std::size_t lower_bound(const ElementSet& uncovered) const {
    ElementSet blocked(candidates_.size());
    std::size_t independent = 0;
    for (std::size_t e : item_order_) {
      if (!uncovered.test(e) || holders_[e].intersects(blocked)) continue;
      ++independent;
      blocked |= holders_[e];
    }
    std::size_t widest = 0;
    for (const auto& c : candidates_) widest = std::max(widest, (c & uncovered).count());
    if (widest == 0) return independent;
    const std::size_t remaining = uncovered.count();
    return std::max(independent, (remaining + widest - 1) / widest);
  }

  void search(const ElementSet& uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered.none()) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    if (chosen.size() + lower_bound(uncovered) >= best_.size()) return;

    std::size_t pivot = universe_size_;
    for (std::size_t e : item_order_) {
      if (uncovered.test(e)) {
        pivot = e;
        break;
      }
    }
    std::vector<std::pair<std::size_t, std::size_t>> options;
    for (auto c = holders_[pivot].find_first(); c != ElementSet::npos;
         c = holders_[pivot].find_next(c)) {
      options.emplace_back((candidates_[c] & uncovered).count(), c);
    }
    std::stable_sort(options.begin(), options.end(),
                     [](const auto& a, const auto& b) { return a.first > b.first; });
    for (const auto& [gain, c] : options) {
      chosen.push_back(c);
      search(uncovered - candidates_[c], chosen);
      chosen.pop_back();
      if (chosen.size() + 1 >= best_.size()) return;
    }
  }

  std::size_t universe_size_;
  std::vector<ElementSet> candidates_;
  std::vector<std::size_t> ids_;
  std::vector<ElementSet> holders_;
  std::vector<std::size_t> item_order_;
  std::vector<std::size_t> best_;
};

CoverResult cover_with_maximals(const SubgroupLattice& lattice,
                                const std::vector<std::size_t>& universe) {
  CoverInstance instance;
  instance.universe_size = universe.size();
  const auto& maximals = lattice.maximal_indices();
  for (std::size_t m : maximals) {
    ElementSet set(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
      if (lattice[m].members.test(universe[i])) set.set(i);
    }
    instance.candidates.push_back(std::move(set));
  }
  const CoverSolution solution = solve_set_cover(instance);
  CoverResult result;
  result.universe_size = universe.size();
  result.candidate_count = maximals.size();
  result.coverable = solution.coverable;
  result.size = solution.chosen.size();
  for (std::size_t c : solution.chosen) result.cover.push_back(lattice.subgroup(maximals[c]));
  return result;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
}

}  // namespace

CoverSolution solve_set_cover(const CoverInstance& instance) {
  CoverSolution solution;
  ElementSet reachable(instance.universe_size);
  for (const auto& c : instance.candidates) {
    if (c.size() != instance.universe_size) {
      throw Error(ErrorCode::kInvalidArgument, "candidate size differs from universe");
    }
    reachable |= c;
  }
  if (reachable.count() != instance.universe_size) return solution;
  solution.coverable = true;
  if (instance.universe_size == 0) return solution;

  // Drop empty, duplicate and dominated candidates; keep the lowest index.
  std::vector<ElementSet> kept;
  std::vector<std::size_t> ids;
  for (std::size_t c = 0; c < instance.candidates.size(); ++c) {
    const auto& set = instance.candidates[c];
    if (set.none()) continue;
    bool dominated = false;
    for (std::size_t d = 0; d < instance.candidates.size() && !dominated; ++d) {
      if (d == c) continue;
      const auto& other = instance.candidates[d];
      if (set.is_subset_of(other) && (set != other || d < c)) dominated = true;
    }
    if (!dominated) {
      kept.push_back(set);
      ids.push_back(c);
    }
  }
  solution.chosen = CoverSearch(instance.universe_size, std::move(kept), std::move(ids)).solve();
  return solution;
}

std::vector<Permutation> p_elements(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  require_prime(p);
  return pi_elements(g, {p}, caps);
}

CoverResult sigma_p(const PermGroup& g, std::uint64_t p, const Caps& caps) {
  require_prime(p);
  if (!is_generated_by_p_elements(g, p, caps)) {
    throw Error(ErrorCode::kPreconditionFailed,
                g.to_string() + " is not generated by its " + std::to_string(p) + "-elements");
  }
  return sigma_p(subgroup_lattice(g, caps), p);
}

CoverResult sigma_p(const SubgroupLattice& lattice, std::uint64_t p) {
  require_prime(p);
  const GroupTable& table = lattice.table();
  std::vector<std::size_t> universe;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (is_power_of(table.order_of(i), p)) universe.push_back(i);
  }
  std::vector<std::uint32_t> gens(universe.begin(), universe.end());
  if (table.closure(gens).count() != table.size()) {
    throw Error(ErrorCode::kPreconditionFailed,
                "group is not generated by its " + std::to_string(p) + "-elements");
  }
  return cover_with_maximals(lattice, universe);
}

CoverResult class_cover_number(const PermGroup& g, const Permutation& x, const Caps& caps) {
  if (!g.contains(x)) {
    throw Error(ErrorCode::kNotAMember, x.to_cycle_string() + " is not in " + g.to_string());
  }
  return class_cover_number(subgroup_lattice(g, caps), x);
}

CoverResult class_cover_number(const SubgroupLattice& lattice, const Permutation& x) {
  const GroupTable& table = lattice.table();
  const std::size_t xi = table.index_of(x);
  const std::uint64_t ord = table.order_of(xi);
  if (ord == 1 || prime_divisors(BigInt(ord)).size() != 1) {
    throw Error(ErrorCode::kPreconditionFailed,
                x.to_cycle_string() + " is not a nontrivial element of prime-power order");
  }
  std::vector<std::size_t> universe;
  for (std::size_t g = 0; g < table.size(); ++g) {
    universe.push_back(table.mul(table.mul(table.inv(g), xi), g));
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  CoverResult result = cover_with_maximals(lattice, universe);
  if (!result.coverable) {
    throw Error(ErrorCode::kClassNotCoverable,
                "class of " + x.to_cycle_string() + " lies in no proper subgroup cover");
  }
  return result;
}

SigmaBoundReport sigma_lower_bound_check(const PermGroup& g, std::uint64_t p,
                                         const Caps& caps) {
  require_prime(p);
  if (!is_generated_by_p_elements(g, p, caps)) {
    throw Error(ErrorCode::kPreconditionFailed,
                g.to_string() + " is not generated by its " + std::to_string(p) + "-elements");
  }
  return sigma_lower_bound_check(subgroup_lattice(g, caps), p);
}

SigmaBoundReport sigma_lower_bound_check(const SubgroupLattice& lattice, std::uint64_t p) {
  SigmaBoundReport report;
  report.p = p;
  report.sigma = sigma_p(lattice, p);
  report.holds = !report.sigma.coverable || report.sigma.size >= p + 1;
  return report;
}

}  // namespace sylowlab
