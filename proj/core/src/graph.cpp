#include "sylowlab/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "sylowlab/error.hpp"

namespace sylowlab {

SimpleGraph::SimpleGraph(std::size_t vertex_count)
    : adjacency_(vertex_count, ElementSet(vertex_count)) {}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw Error(ErrorCode::kOutOfRange, "edge endpoint outside the vertex range");
  }
  if (u == v) throw Error(ErrorCode::kInvalidArgument, "loops are not allowed");
  if (adjacency_[u].test(v)) return;
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edges_;
}

std::vector<std::pair<std::size_t, std::size_t>> SimpleGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < vertex_count(); ++u) {
    for (auto v = adjacency_[u].find_next(u); v != ElementSet::npos; v = adjacency_[u].find_next(v)) {
      out.emplace_back(u, v);
    }
  }
  return out;
}

SimpleGraph SimpleGraph::complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

SimpleGraph SimpleGraph::path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
  return g;
}

namespace {

// Drops every vertex u that has a non-neighbour v with N(u) inside N(v): a
// clique through u stays a clique when u is swapped for v. Of two vertices
// with equal neighbourhoods the later one goes.
std::vector<std::size_t> undominated_vertices(const SimpleGraph& graph) {
  const std::size_t n = graph.vertex_count();
  ElementSet alive(n);
  alive.set();
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t u = 0; u < n; ++u) {
      if (!alive.test(u)) continue;
      const ElementSet nu = graph.neighbors(u) & alive;
      for (std::size_t v = 0; v < n; ++v) {
        if (v == u || !alive.test(v) || graph.adjacent(u, v)) continue;
        const ElementSet nv = graph.neighbors(v) & alive;
        if (!nu.is_subset_of(nv)) continue;
        if (nu == nv && v > u) continue;
        alive.reset(u);
        changed = true;
        break;
      }
    }
  }
  std::vector<std::size_t> kept;
  for (auto v = alive.find_first(); v != ElementSet::npos; v = alive.find_next(v)) kept.push_back(v);
  return kept;
}

class CliqueSearch {
 public:
  explicit CliqueSearch(const SimpleGraph& graph) {
    // Search the reduced graph with vertices relabelled by decreasing degree,
    // so the greedy colouring sees the dense part first.
    vertices_ = undominated_vertices(graph);
    std::vector<std::size_t> degree(graph.vertex_count(), 0);
    for (auto v : vertices_) {
      for (auto w : vertices_) degree[v] += graph.adjacent(v, w);
    }
    std::stable_sort(vertices_.begin(), vertices_.end(),
                     [&](std::size_t a, std::size_t b) { return degree[a] > degree[b]; });
    const std::size_t m = vertices_.size();
    adjacency_.assign(m, ElementSet(m));
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        if (graph.adjacent(vertices_[i], vertices_[j])) adjacency_[i].set(j);
      }
    }
  }

  Clique run() {
    const std::size_t m = vertices_.size();
    if (m == 0) return {};
    ElementSet all(m);
    all.set();
    std::vector<std::size_t> current;
    expand(all, current);
    std::vector<std::size_t> out;
    for (auto i : best_) out.push_back(vertices_[i]);
    std::sort(out.begin(), out.end());
    return Clique{out};
  }

 private:
  // Greedy colouring of `candidates`; vertices come out in colour order and
  // colours[i] bounds the clique size reachable from order[0..i].
  void colour(ElementSet candidates, std::vector<std::size_t>& order,
              std::vector<std::size_t>& colours) const {
    std::size_t colour_count = 0;
    while (candidates.any()) {
      ++colour_count;
      ElementSet available = candidates;
      while (available.any()) {
        const std::size_t v = available.find_first();
        available.reset(v);
        available -= adjacency_[v];
        candidates.reset(v);
        order.push_back(v);
        colours.push_back(colour_count);
      }
    }
  }

  void expand(ElementSet candidates, std::vector<std::size_t>& current) {
    std::vector<std::size_t> order, colours;
    colour(candidates, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best_.size()) return;
      const std::size_t v = order[i];
      current.push_back(v);
      const ElementSet next = candidates & adjacency_[v];
      if (next.none()) {
        if (current.size() > best_.size()) best_ = current;
      } else {
        expand(next, current);
      }
      current.pop_back();
      candidates.reset(v);
    }
  }

  std::vector<std::size_t> vertices_;
  std::vector<ElementSet> adjacency_;
  std::vector<std::size_t> best_;
};

std::size_t parse_index(std::string_view text, std::size_t& pos, std::size_t base) {
  const std::size_t start = pos;
  std::size_t value = 0;
  auto [end, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
  if (ec != std::errc() || end == text.data() + pos) {
    throw Error(ErrorCode::kSyntaxError, "expected a vertex number", base + start);
  }
  pos = static_cast<std::size_t>(end - text.data());
  return value;
}

void skip_blanks(std::string_view line, std::size_t& pos) {
  while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t' || line[pos] == '\r')) ++pos;
}

}  // namespace

Clique max_clique(const SimpleGraph& graph) { return CliqueSearch(graph).run(); }

TuranReport turan_bound_check(const SimpleGraph& graph) {
  TuranReport report;
  report.vertices = graph.vertex_count();
  report.edges = graph.edge_count();
  report.clique_number = max_clique(graph).size();
  if (report.clique_number == 0) {
    report.bound = ExactRatio(0);
    report.holds = report.edges == 0;
    return report;
  }
  const BigInt n(report.vertices);
  const BigInt w(report.clique_number);
  report.bound = ExactRatio((w - 1) * n * n, 2 * w);
  report.holds = ExactRatio(BigInt(report.edges), BigInt(1)) <= report.bound;
  return report;
}

std::string to_edge_list(const SimpleGraph& graph) {
  std::ostringstream out;
  out << "# vertices " << graph.vertex_count() << '\n';
  for (const auto& [u, v] : graph.edges()) out << u + 1 << ' ' << v + 1 << '\n';
  return out.str();
}

SimpleGraph parse_edge_list(std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t declared = 0;
  bool has_declared = false;
  std::size_t largest = 0;
  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    const std::string_view line = text.substr(line_start, line_end - line_start);
    std::size_t pos = 0;
    skip_blanks(line, pos);
    if (pos < line.size() && line[pos] == '#') {
      constexpr std::string_view kHeader = "vertices";
      std::size_t p = pos + 1;
      skip_blanks(line, p);
      if (line.substr(p, kHeader.size()) == kHeader) {
        p += kHeader.size();
        skip_blanks(line, p);
        declared = parse_index(line, p, line_start);
        has_declared = true;
      }
    } else if (pos < line.size()) {
      const std::size_t u = parse_index(line, pos, line_start);
      skip_blanks(line, pos);
      const std::size_t v = parse_index(line, pos, line_start);
      skip_blanks(line, pos);
      if (pos != line.size() && line[pos] != '#') {
        throw Error(ErrorCode::kSyntaxError, "unexpected text after edge", line_start + pos);
      }
      if (u == 0 || v == 0) {
        throw Error(ErrorCode::kSyntaxError, "vertices are numbered from 1", line_start);
      }
      if (u == v) throw Error(ErrorCode::kSyntaxError, "loop edge", line_start);
      largest = std::max({largest, u, v});
      edges.emplace_back(u - 1, v - 1);
    }
    line_start = line_end + 1;
  }
  if (has_declared && largest > declared) {
    throw Error(ErrorCode::kOutOfRange, "edge endpoint exceeds declared vertex count");
  }
  SimpleGraph graph(has_declared ? declared : largest);
  for (const auto& [u, v] : edges) graph.add_edge(u, v);
  return graph;
}

}  // namespace sylowlab
