#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lapdom {

using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Largest vertex count any constructor (products, powers) will produce.
inline constexpr std::size_t kDefaultVertexLimit = 1u << 20;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Instances are immutable once built; every mutation-like operation
/// (complement, products, edge insertion) returns a new graph.
class Graph {
 public:
  Graph() = default;

  /// Builds the graph, deduplicating parallel pairs. Throws GraphError on
  /// loops or out-of-range endpoints.
  Graph(std::size_t n, std::span<const Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  /// Copy with one extra edge. Throws GraphError if it is already present.
  Graph with_edge(Edge e) const;
  /// Copy without the edge. Throws GraphError if it is absent.
  Graph without_edge(Edge e) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

Graph make_graph(std::size_t n, std::span<const Edge> edges);
inline Graph make_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return make_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

Graph complement(const Graph& g);

/// Vertex (i, j) of G x H is labeled i * |H| + j.
Graph cartesian_product(const Graph& g, const Graph& h,
                        std::size_t vertex_limit = kDefaultVertexLimit);

/// Left-associated power ((G x G) x G) ...; power 1 returns G.
Graph cartesian_power(const Graph& g, unsigned k,
                      std::size_t vertex_limit = kDefaultVertexLimit);

struct GraphClass {
  bool connected = false;
  bool isolate_free = false;
  std::size_t components = 0;
  /// m - n + components.
  std::size_t cyclomatic = 0;
  bool is_tree = false;
  bool is_forest = false;
  std::size_t max_degree = 0;
};

GraphClass classify(const Graph& g);

std::size_t component_count(const Graph& g);

/// Component index of every vertex, numbered in order of lowest member.
std::vector<std::size_t> component_labels(const Graph& g);

/// Breadth-first distances from `source`; unreachable vertices get nullopt.
std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source);

/// Greatest shortest-path distance, or nullopt (infinite) when disconnected.
/// K_1 has diameter 0. The empty graph on zero vertices is reported as 0.
std::optional<std::size_t> diameter(const Graph& g);

std::string describe(const Graph& g);

}  // namespace lapdom
