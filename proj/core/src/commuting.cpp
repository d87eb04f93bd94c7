#include "sylowlab/commuting.hpp"

#include <algorithm>

#include "sylowlab/error.hpp"
#include "sylowlab/group_ops.hpp"
#include "sylowlab/number_theory.hpp"

namespace sylowlab {

namespace {

void require_primes(const std::vector<std::uint64_t>& pi) {
  if (pi.empty()) throw Error(ErrorCode::kInvalidArgument, "empty set of primes");
  for (auto p : pi) {
    if (!is_prime(p)) throw Error(ErrorCode::kInvalidArgument, std::to_string(p) + " is not prime");
  }
}

class BicliqueSearch {
 public:
  BicliqueSearch(const SimpleGraph& graph, std::size_t m, std::size_t n)
      : graph_(graph), m_(m), n_(n) {}

  // Picks S1 in increasing vertex order while keeping the common
  // neighbourhood of S1 large enough to host S2. A vertex is never its own
  // neighbour, so S2 is automatically disjoint from S1.
  bool find(std::vector<std::size_t>& left, std::vector<std::size_t>& right) {
    ElementSet all(graph_.vertex_count());
    all.set();
    std::vector<std::size_t> chosen;
    if (!extend(0, all, chosen)) return false;
    left = chosen;
    right.clear();
    for (auto v = common_.find_first(); v != ElementSet::npos && right.size() < n_;
         v = common_.find_next(v)) {
      right.push_back(v);
    }
    return true;
  }

 private:
  bool extend(std::size_t from, const ElementSet& common, std::vector<std::size_t>& chosen) {
    if (chosen.size() == m_) {
      common_ = common;
      return true;
    }
    for (std::size_t v = from; v < graph_.vertex_count(); ++v) {
      if (graph_.degree(v) < n_) continue;
      ElementSet next = common & graph_.neighbors(v);
      if (next.count() < n_) continue;
      chosen.push_back(v);
      if (extend(v + 1, next, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const SimpleGraph& graph_;
  std::size_t m_;
  std::size_t n_;
  ElementSet common_;
};

}  // namespace

ElementGraph noncommuting_graph(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                                const Caps& caps) {
  require_primes(pi);
  ElementGraph out;
  out.vertices = pi_elements(g, pi, caps);
  out.graph = SimpleGraph(out.vertices.size());
  for (std::size_t u = 0; u < out.vertices.size(); ++u) {
    for (std::size_t v = u + 1; v < out.vertices.size(); ++v) {
      if (!commute(out.vertices[u], out.vertices[v])) out.graph.add_edge(u, v);
    }
  }
  return out;
}

NoncommutingSet n_pi(const ElementGraph& graph) {
  NoncommutingSet out;
  for (std::size_t v : max_clique(graph.graph).vertices) out.elements.push_back(graph.vertices[v]);
  return out;
}

NoncommutingSet n_pi(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                     const Caps& caps) {
  return n_pi(noncommuting_graph(g, pi, caps));
}

ExactRatio pr_pi(const ElementGraph& graph) {
  const BigInt n(graph.vertices.size());
  const BigInt noncommuting_pairs = 2 * BigInt(graph.graph.edge_count());
  return ExactRatio(n * n - noncommuting_pairs, n * n);
}

ExactRatio pr_pi(const PermGroup& g, const std::vector<std::uint64_t>& pi, const Caps& caps) {
  return pr_pi(noncommuting_graph(g, pi, caps));
}

PrCliqueReport pr_times_clique_check(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                                     const Caps& caps) {
  const ElementGraph graph = noncommuting_graph(g, pi, caps);
  PrCliqueReport report;
  report.pr = pr_pi(graph);
  report.clique = n_pi(graph).size();
  report.product = report.pr * ExactRatio(static_cast<std::int64_t>(report.clique));
  report.holds = report.product >= ExactRatio(1);
  return report;
}

SigmaCliqueReport sigma_le_clique_check(const PermGroup& g, std::uint64_t p,
                                        const Caps& caps) {
  if (g.is_abelian()) {
    throw Error(ErrorCode::kPreconditionFailed, g.to_string() + " is abelian");
  }
  if (!is_generated_by_p_elements(g, p, caps)) {
    throw Error(ErrorCode::kPreconditionFailed,
                g.to_string() + " is not generated by its " + std::to_string(p) + "-elements");
  }
  return sigma_le_clique_check(subgroup_lattice(g, caps), p, caps);
}

SigmaCliqueReport sigma_le_clique_check(const SubgroupLattice& lattice, std::uint64_t p,
                                        const Caps& caps) {
  const PermGroup& g = lattice.parent();
  if (g.is_abelian()) {
    throw Error(ErrorCode::kPreconditionFailed, g.to_string() + " is abelian");
  }
  SigmaCliqueReport report;
  report.p = p;
  report.sigma = sigma_p(lattice, p);
  const ElementGraph graph = noncommuting_graph(g, {p}, caps);
  report.clique = n_pi(graph);
  report.centralizers_cover =
      std::all_of(graph.vertices.begin(), graph.vertices.end(), [&](const Permutation& y) {
        return std::any_of(report.clique.elements.begin(), report.clique.elements.end(),
                           [&](const Permutation& x) { return commute(x, y); });
      });
  report.holds = report.sigma.coverable && report.centralizers_cover &&
                 report.sigma.size <= report.clique.size();
  return report;
}

BicliqueResult c_pi_membership(const PermGroup& g, const std::vector<std::uint64_t>& pi,
                               std::size_t m, std::size_t n, const Caps& caps) {
  require_primes(pi);
  const auto elements = pi_elements(g, pi, caps);
  if (elements.size() > caps.biclique) {
    throw Error(ErrorCode::kCapExceeded, std::to_string(elements.size()) +
                                             " pi-elements exceed the biclique cap " +
                                             std::to_string(caps.biclique));
  }
  return c_pi_membership(noncommuting_graph(g, pi, caps), m, n, caps);
}

BicliqueResult c_pi_membership(const ElementGraph& graph, std::size_t m, std::size_t n,
                               const Caps& caps) {
  if (m < 1 || n < 1 || m > 6 || n > 6) {
    throw Error(ErrorCode::kInvalidArgument, "part sizes must lie in 1..6");
  }
  if (graph.vertices.size() > caps.biclique) {
    throw Error(ErrorCode::kCapExceeded, std::to_string(graph.vertices.size()) +
                                             " vertices exceed the biclique cap " +
                                             std::to_string(caps.biclique));
  }
  BicliqueResult result;
  std::vector<std::size_t> left, right;
  if (BicliqueSearch(graph.graph, m, n).find(left, right)) {
    result.member = false;
    for (auto v : left) result.left.push_back(graph.vertices[v]);
    for (auto v : right) result.right.push_back(graph.vertices[v]);
  }
  return result;
}

}  // namespace sylowlab
