#ifndef SYLOWLAB_GRAPH_HPP_
#define SYLOWLAB_GRAPH_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sylowlab/lattice.hpp"
#include "sylowlab/ratio.hpp"

namespace sylowlab {

// Undirected loop-free graph on vertices 0..n-1 with bitset adjacency.
class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t vertex_count = 0);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_; }

  // Throws kInvalidArgument for loops, kOutOfRange for bad vertices. Adding
  // an existing edge is a no-op.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  const ElementSet& neighbors(std::size_t v) const { return adjacency_[v]; }
  std::size_t degree(std::size_t v) const { return adjacency_[v].count(); }

  // Edges (u, v) with u < v in lexicographic order.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  static SimpleGraph complete(std::size_t n);
  static SimpleGraph path(std::size_t n);

 private:
  std::vector<ElementSet> adjacency_;
  std::size_t edges_ = 0;
};

struct Clique {
  // Sorted vertex indices.
  std::vector<std::size_t> vertices;
  std::size_t size() const { return vertices.size(); }
};

// Maximum clique by branch and bound with a greedy colouring bound. The
// search order is fixed, so the returned clique is deterministic. A graph
// without vertices has clique number 0.
Clique max_clique(const SimpleGraph& graph);

struct TuranReport {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t clique_number = 0;
  // (1 - 1/omega) n^2 / 2
  ExactRatio bound;
  bool holds = false;
};

TuranReport turan_bound_check(const SimpleGraph& graph);

// "u v" per line with 1-based vertices, preceded by a "# vertices N" line.
std::string to_edge_list(const SimpleGraph& graph);
// Accepts blank lines and '#' comments. The vertex count is taken from a
// "# vertices N" comment when present, otherwise from the largest index.
// Throws kSyntaxError with the byte offset of the bad token.
SimpleGraph parse_edge_list(std::string_view text);

}  // namespace sylowlab

#endif  // SYLOWLAB_GRAPH_HPP_
