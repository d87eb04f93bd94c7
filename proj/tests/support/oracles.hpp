// Independent reference computations for the test suites. Everything here
// works from first principles (closure under multiplication, exhaustive
// enumeration) and never calls the library routine it is checking.
#ifndef SYLOWLAB_TESTS_ORACLES_HPP_
#define SYLOWLAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "sylowlab/graph.hpp"
#include "sylowlab/permutation.hpp"

namespace oracle {

using sylowlab::Permutation;
using sylowlab::Point;
using ElementSet = std::set<Permutation>;

inline Permutation identity(std::size_t degree) { return Permutation(degree); }

// Closure of the generators under right multiplication.
inline ElementSet closure(std::size_t degree, const std::vector<Permutation>& gens) {
  ElementSet seen{identity(degree)};
  std::deque<Permutation> queue{identity(degree)};
  while (!queue.empty()) {
    const Permutation x = queue.front();
    queue.pop_front();
    for (const auto& s : gens) {
      Permutation y = x * s;
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  }
  return seen;
}

inline std::uint64_t element_order(const Permutation& x) {
  Permutation y = x;
  std::uint64_t k = 1;
  while (!y.is_identity()) {
    y = y * x;
    ++k;
  }
  return k;
}

inline bool is_power_of(std::uint64_t n, std::uint64_t p) {
  while (n % p == 0) n /= p;
  return n == 1;
}

inline std::uint64_t p_part(std::uint64_t n, std::uint64_t p) {
  std::uint64_t r = 1;
  while (n % p == 0) {
    n /= p;
    r *= p;
  }
  return r;
}

inline ElementSet conjugate_set(const ElementSet& h, const Permutation& g) {
  ElementSet out;
  for (const auto& x : h) out.insert(g.inverse() * x * g);
  return out;
}

// One Sylow p-subgroup, grown one p-element at a time. A p-subgroup that is
// not Sylow has a p-element of its normalizer outside it, so the greedy
// extension always reaches full p-part.
inline ElementSet sylow(const ElementSet& group, std::size_t degree, std::uint64_t p) {
  const std::uint64_t target = p_part(group.size(), p);
  std::vector<Permutation> gens;
  ElementSet current{identity(degree)};
  while (current.size() < target) {
    bool grown = false;
    for (const auto& x : group) {
      if (current.count(x) || !is_power_of(element_order(x), p)) continue;
      auto trial = gens;
      trial.push_back(x);
      ElementSet next = closure(degree, trial);
      if (is_power_of(next.size(), p)) {
        gens = std::move(trial);
        current = std::move(next);
        grown = true;
        break;
      }
    }
    if (!grown) break;
  }
  return current;
}

// Number of distinct conjugates of one Sylow p-subgroup.
inline std::size_t sylow_count(const ElementSet& group, std::size_t degree, std::uint64_t p) {
  const ElementSet p_sub = sylow(group, degree, p);
  std::set<ElementSet> conjugates;
  for (const auto& g : group) conjugates.insert(conjugate_set(p_sub, g));
  return conjugates.size();
}

// Every subgroup generated by at most `rank` elements.
inline std::set<ElementSet> subgroups_of_rank(const ElementSet& group, std::size_t degree,
                                              std::size_t rank) {
  const std::vector<Permutation> elems(group.begin(), group.end());
  std::set<ElementSet> out{ElementSet{identity(degree)}};
  std::vector<Permutation> gens;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (!gens.empty()) out.insert(closure(degree, gens));
    if (gens.size() == rank) return;
    for (std::size_t i = start; i < elems.size(); ++i) {
      gens.push_back(elems[i]);
      self(self, i + 1);
      gens.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Smallest number of candidate sets covering the universe, by trying every
// combination of increasing size. Returns 0 when no cover exists.
inline std::size_t exhaustive_cover(std::size_t universe,
                                    const std::vector<boost::dynamic_bitset<std::uint64_t>>& sets) {
  boost::dynamic_bitset<std::uint64_t> all(universe);
  for (const auto& s : sets) all |= s;
  if (all.count() != universe) return 0;
  if (universe == 0) return 0;
  const std::size_t m = sets.size();
  for (std::size_t size = 1; size <= m; ++size) {
    std::vector<std::size_t> pick(size);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      boost::dynamic_bitset<std::uint64_t> u(universe);
      for (auto i : pick) u |= sets[i];
      if (u.count() == universe) return size;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == m - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return 0;
}

// Clique number by enumerating every clique.
inline std::size_t exhaustive_clique_number(const sylowlab::SimpleGraph& graph) {
  const std::size_t n = graph.vertex_count();
  std::size_t best = 0;
  std::vector<std::size_t> current;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    best = std::max(best, current.size());
    for (std::size_t v = start; v < n; ++v) {
      if (std::all_of(current.begin(), current.end(),
                      [&](std::size_t u) { return graph.adjacent(u, v); })) {
        current.push_back(v);
        self(self, v + 1);
        current.pop_back();
      }
    }
  };
  rec(rec, 0);
  return best;
}

inline Permutation random_permutation(std::size_t degree, std::mt19937_64& rng) {
  std::vector<Point> images(degree);
  std::iota(images.begin(), images.end(), 1);
  std::shuffle(images.begin(), images.end(), rng);
  return Permutation::from_images(images);
}

inline sylowlab::SimpleGraph random_graph(std::size_t n, double density, std::mt19937_64& rng) {
  sylowlab::SimpleGraph g(n);
  std::bernoulli_distribution edge(density);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (edge(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle

#endif  // SYLOWLAB_TESTS_ORACLES_HPP_
