#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cubrep/errors.hpp"

namespace cubrep {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Immutable once built; surgeries produce new graphs.
class Graph {
 public:
  Graph() = default;

  explicit Graph(std::size_t n) : adjacency_(n) {}

  // Duplicate edges are merged. Self-loops and out-of-range ids throw.
  Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (auto [u, v] : edges) {
      detail::require(u < n && v < n, "edge endpoint out of range");
      detail::require(u != v, "self-loop on vertex " + std::to_string(u));
      adjacency_[u].push_back(v);
      adjacency_[v].push_back(u);
    }
    for (auto& adj : adjacency_) {
      std::sort(adj.begin(), adj.end());
      adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
      edge_count_ += adj.size();
    }
    edge_count_ /= 2;
  }

  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  // C(n,2) - m
  std::size_t non_edge_count() const noexcept {
    const std::size_t n = vertex_count();
    return n * (n - (n > 0 ? 1 : 0)) / 2 - edge_count_;
  }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }

  bool has_edge(Vertex u, Vertex v) const {
    const auto& adj = adjacency_.at(u);
    return std::binary_search(adj.begin(), adj.end(), v);
  }

  // Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u)
      for (Vertex v : adjacency_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  // Vertex u of this graph becomes new_id[u].
  Graph relabeled(std::span<const Vertex> new_id) const {
    detail::require(new_id.size() == vertex_count(), "relabel size mismatch");
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (auto [u, v] : edges()) out.emplace_back(new_id[u], new_id[v]);
    return Graph(vertex_count(), out);
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, e);
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  return Graph(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex u = 0; u + 1 < n; ++u) e.emplace_back(u, u + 1);
  if (n >= 3) e.emplace_back(static_cast<Vertex>(n - 1), 0);
  return Graph(n, e);
}

// K_{a,b}: vertices 0..a-1 on one side, a..a+b-1 on the other.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  std::vector<Edge> e;
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = 0; v < b; ++v) e.emplace_back(u, static_cast<Vertex>(a + v));
  return Graph(a + b, e);
}

// Induced subgraph on `keep` (in the given order); vertex keep[i] becomes i.
inline Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
  std::vector<std::int64_t> index(g.vertex_count(), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) {
    detail::require(keep[i] < g.vertex_count(), "induced vertex out of range");
    detail::require(index[keep[i]] < 0, "duplicate vertex in induced set");
    index[keep[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> e;
  for (auto [u, v] : g.edges())
    if (index[u] >= 0 && index[v] >= 0)
      e.emplace_back(static_cast<Vertex>(index[u]), static_cast<Vertex>(index[v]));
  return Graph(keep.size(), e);
}

// FNV-1a over the vertex count and canonical edge list.
inline std::uint64_t graph_digest(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t word) {
    for (int i = 0; i < 8; ++i) {
      h ^= (word >> (8 * i)) & 0xffU;
      h *= 0x100000001b3ULL;
    }
  };
  mix(g.vertex_count());
  for (auto [u, v] : g.edges()) {
    mix(u);
    mix(v);
  }
  return h;
}

// A vertex enumeration in which every vertex has at most k neighbors after it.
struct DegeneracyOrder {
  std::vector<Vertex> order;          // order[i] is the vertex at position i
  std::vector<std::size_t> position;  // inverse of order
  std::size_t k = 0;

  bool precedes(Vertex u, Vertex v) const { return position.at(u) < position.at(v); }

  // Palette parameter for the deterministic construction.
  std::size_t k_prime() const noexcept { return std::max<std::size_t>(k, 1); }

  static DegeneracyOrder identity(std::size_t n, std::size_t k) {
    DegeneracyOrder d;
    d.order.resize(n);
    d.position.resize(n);
    for (Vertex v = 0; v < n; ++v) {
      d.order[v] = v;
      d.position[v] = v;
    }
    d.k = k;
    return d;
  }
};

// Repeated minimum-degree removal over degree buckets. Ties go to the
// smallest vertex id, so the result is a pure function of the graph.
inline DegeneracyOrder degeneracy_order(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DegeneracyOrder d;
  d.order.reserve(n);
  d.position.assign(n, 0);
  if (n == 0) return d;

  std::vector<std::size_t> degree(n);
  std::size_t max_degree = 0;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    max_degree = std::max(max_degree, degree[v]);
  }
  std::vector<std::set<Vertex>> buckets(max_degree + 1);
  for (Vertex v = 0; v < n; ++v) buckets[degree[v]].insert(v);
  std::vector<bool> removed(n, false);

  std::size_t low = 0;
  for (std::size_t step = 0; step < n; ++step) {
    while (buckets[low].empty()) ++low;
    const Vertex v = *buckets[low].begin();
    buckets[low].erase(buckets[low].begin());
    removed[v] = true;
    d.k = std::max(d.k, low);
    d.position[v] = d.order.size();
    d.order.push_back(v);
    for (Vertex w : g.neighbors(v)) {
      if (removed[w]) continue;
      buckets[degree[w]].erase(w);
      --degree[w];
      buckets[degree[w]].insert(w);
    }
    low = low > 0 ? low - 1 : 0;
  }
  return d;
}

inline std::vector<Vertex> forward_neighbors(const Graph& g, const DegeneracyOrder& d,
                                             Vertex v) {
  detail::require(v < g.vertex_count(), "vertex out of range");
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (d.precedes(v, w)) out.push_back(w);
  return out;
}

inline std::vector<Vertex> backward_neighbors(const Graph& g, const DegeneracyOrder& d,
                                              Vertex v) {
  detail::require(v < g.vertex_count(), "vertex out of range");
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v))
    if (d.precedes(w, v)) out.push_back(w);
  return out;
}

enum class SupportKind { weak, strong };

// Support set of the non-edge (lower, upper), lower before upper in the order.
// weak:   forward neighbors of `lower` that come after `upper`, plus `upper`.
// strong: weak plus `lower`.
struct SupportSet {
  SupportKind kind = SupportKind::weak;
  std::vector<Vertex> members;  // sorted by vertex id
  Vertex lower = 0;
  Vertex upper = 0;

  friend bool operator==(const SupportSet&, const SupportSet&) = default;
};

inline SupportSet support_set(const Graph& g, const DegeneracyOrder& d, Vertex x, Vertex y,
                              SupportKind kind) {
  detail::require(x < g.vertex_count() && y < g.vertex_count(), "vertex out of range");
  detail::require(x != y, "support set needs two distinct vertices");
  detail::require(!g.has_edge(x, y), "support set is defined for non-edges only");
  detail::require(d.precedes(x, y), "support set anchor must satisfy x before y");
  SupportSet s;
  s.kind = kind;
  s.lower = x;
  s.upper = y;
  for (Vertex z : g.neighbors(x))
    if (d.precedes(y, z)) s.members.push_back(z);
  s.members.push_back(y);
  if (kind == SupportKind::strong) s.members.push_back(x);
  std::sort(s.members.begin(), s.members.end());
  return s;
}

// The source graph renumbered along its degeneracy order, so that vertex i of
// graph() sits at position i. Forward/backward neighbor lists are cached.
class OrderedGraph {
 public:
  explicit OrderedGraph(const Graph& source)
      : OrderedGraph(source, degeneracy_order(source)) {}

  OrderedGraph(const Graph& source, DegeneracyOrder order)
      : source_order_(std::move(order)) {
    const std::size_t n = source.vertex_count();
    detail::require(source_order_.order.size() == n, "order size mismatch");
    std::vector<Vertex> new_id(n);
    for (Vertex v = 0; v < n; ++v) new_id[v] = static_cast<Vertex>(source_order_.position[v]);
    graph_ = source.relabeled(new_id);
    forward_.resize(n);
    backward_.resize(n);
    std::size_t max_forward = 0;
    for (Vertex v = 0; v < n; ++v) {
      for (Vertex w : graph_.neighbors(v)) (w > v ? forward_ : backward_)[v].push_back(w);
      max_forward = std::max(max_forward, forward_[v].size());
    }
    detail::require(max_forward <= source_order_.k,
                    "order has more forward neighbors than its stated k");
    source_order_.k = max_forward;
  }

  const Graph& graph() const noexcept { return graph_; }
  std::size_t vertex_count() const noexcept { return graph_.vertex_count(); }
  std::size_t k() const noexcept { return source_order_.k; }
  std::size_t k_prime() const noexcept { return source_order_.k_prime(); }

  std::span<const Vertex> forward(Vertex v) const { return forward_.at(v); }
  std::span<const Vertex> backward(Vertex v) const { return backward_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return graph_.has_edge(u, v); }

  // Identity order over graph(), for the (g, d) style entry points.
  DegeneracyOrder order() const { return DegeneracyOrder::identity(vertex_count(), k()); }

  const DegeneracyOrder& source_order() const noexcept { return source_order_; }
  Vertex source_vertex(Vertex v) const { return source_order_.order.at(v); }

 private:
  DegeneracyOrder source_order_;
  Graph graph_;
  std::vector<std::vector<Vertex>> forward_;
  std::vector<std::vector<Vertex>> backward_;
};

}  // namespace cubrep
