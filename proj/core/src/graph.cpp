#include "lapdom/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace lapdom {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      std::ostringstream msg;
      msg << "edge (" << e.u << "," << e.v << ") has an endpoint outside 0.." << n;
      if (n > 0) msg << "-1";
      throw GraphError(msg.str());
    }
    if (e.u == e.v) {
      throw GraphError("loop at vertex " + std::to_string(e.u) + " is not allowed");
    }
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    edge_count_ += list.size();
  }
  edge_count_ /= 2;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return best;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

Graph Graph::with_edge(Edge e) const {
  if (adjacent(e.u, e.v)) {
    throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is already present");
  }
  auto list = edges();
  list.push_back(e);
  return Graph(order(), list);
}

Graph Graph::without_edge(Edge e) const {
  if (!adjacent(e.u, e.v)) {
    throw GraphError("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                     ") is not present");
  }
  auto list = edges();
  const Edge key{std::min(e.u, e.v), std::max(e.u, e.v)};
  list.erase(std::find(list.begin(), list.end(), key));
  return Graph(order(), list);
}

Graph make_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

Graph complement(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Edge> edges;
  edges.reserve(n * (n > 0 ? n - 1 : 0) / 2 - g.size());
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.adjacent(u, v)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

Graph cartesian_product(const Graph& g, const Graph& h, std::size_t vertex_limit) {
  const std::size_t ng = g.order();
  const std::size_t nh = h.order();
  if (nh != 0 && ng > vertex_limit / nh) {
    throw GraphError("cartesian product of order " + std::to_string(ng) + " x " +
                     std::to_string(nh) + " exceeds the vertex limit " +
                     std::to_string(vertex_limit));
  }
  std::vector<Edge> edges;
  edges.reserve(ng * h.size() + nh * g.size());
  const auto id = [nh](std::size_t i, std::size_t j) { return static_cast<Vertex>(i * nh + j); };
  for (std::size_t i = 0; i < ng; ++i) {
    for (const Edge& e : h.edges()) edges.push_back({id(i, e.u), id(i, e.v)});
  }
  for (const Edge& e : g.edges()) {
    for (std::size_t j = 0; j < nh; ++j) edges.push_back({id(e.u, j), id(e.v, j)});
  }
  return Graph(ng * nh, edges);
}

Graph cartesian_power(const Graph& g, unsigned k, std::size_t vertex_limit) {
  if (k == 0) throw GraphError("cartesian power requires k >= 1");
  Graph result = g;
  for (unsigned i = 1; i < k; ++i) result = cartesian_product(result, g, vertex_limit);
  return result;
}

std::vector<std::size_t> component_labels(const Graph& g) {
  constexpr auto kUnset = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(g.order(), kUnset);
  std::size_t next = 0;
  std::vector<Vertex> stack;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (label[s] != kUnset) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (label[w] == kUnset) {
          label[w] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return label;
}

std::size_t component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
}

GraphClass classify(const Graph& g) {
  GraphClass c;
  c.components = component_count(g);
  c.connected = c.components == 1;
  c.isolate_free = true;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) c.isolate_free = false;
  }
  c.cyclomatic = g.size() + c.components - g.order();
  c.is_forest = c.cyclomatic == 0;
  c.is_tree = c.connected && c.is_forest;
  c.max_degree = g.max_degree();
  return c;
}

std::vector<std::optional<std::size_t>> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(u)) {
      if (!dist[w]) {
        dist[w] = *dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> diameter(const Graph& g) {
  std::size_t best = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    for (const auto& d : bfs_distances(g, s)) {
      if (!d) return std::nullopt;
      best = std::max(best, *d);
    }
  }
  return best;
}

std::string describe(const Graph& g) {
  std::ostringstream out;
  out << "n=" << g.order() << " m=" << g.size() << " edges=[";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out << (first ? "" : " ") << e.u << "-" << e.v;
    first = false;
  }
  out << "]";
  return out.str();
}

}  // namespace lapdom
