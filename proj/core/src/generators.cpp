#include "lapdom/generators.hpp"

#include <queue>
#include <random>

namespace lapdom {

namespace {

constexpr std::size_t kFigure1Order = 65;

void require(bool ok, const std::string& message) {
  if (!ok) throw GraphError(message);
}

}  // namespace

Graph path_graph(std::size_t n) {
  require(n >= 1, "path requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph(n, edges);
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle requires n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph(n, edges);
}

Graph star_graph(std::size_t n) {
  require(n >= 2, "star requires n >= 2");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  return Graph(n, edges);
}

Graph complete_graph(std::size_t n) {
  require(n >= 1, "complete graph requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return Graph(n, edges);
}

Graph complete_bipartite_graph(std::size_t a, std::size_t b) {
  require(a >= 1 && b >= 1, "complete bipartite graph requires both parts nonempty");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < a; ++u) {
    for (std::size_t j = 0; j < b; ++j) edges.push_back({u, static_cast<Vertex>(a + j)});
  }
  return Graph(a + b, edges);
}

Graph empty_graph(std::size_t n) {
  require(n >= 1, "empty graph requires n >= 1");
  return Graph(n, {});
}

Graph generate(std::string_view family, std::span<const std::size_t> params) {
  const auto arity = [&](std::size_t want) {
    require(params.size() == want, std::string(family) + " takes " + std::to_string(want) +
                                       " parameter(s), got " + std::to_string(params.size()));
  };
  if (family == "complete_bipartite") {
    arity(2);
    return complete_bipartite_graph(params[0], params[1]);
  }
  arity(1);
  if (family == "path") return path_graph(params[0]);
  if (family == "cycle") return cycle_graph(params[0]);
  if (family == "star") return star_graph(params[0]);
  if (family == "complete") return complete_graph(params[0]);
  if (family == "empty") return empty_graph(params[0]);
  throw GraphError("unknown graph family '" + std::string(family) + "'");
}

Graph figure1_tree() {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (int branch = 0; branch < 4; ++branch) {
    const Vertex apex = next++;
    edges.push_back({0, apex});
    for (int c = 0; c < 3; ++c) {
      const Vertex mid = next++;
      edges.push_back({apex, mid});
      for (int d = 0; d < 2; ++d) {
        const Vertex inner = next++;
        const Vertex pendant = next++;
        edges.push_back({mid, inner});
        edges.push_back({inner, pendant});
      }
    }
  }
  return Graph(kFigure1Order, edges);
}

Vertex tk_attachment_label(TkAttachment attach) {
  // Preorder: apex 1, its first child 2, that child's first child 3, pendant 4.
  return attach == TkAttachment::pendant ? 4 : 0;
}

Graph tk_tree(std::size_t k, TkAttachment attach) {
  require(k >= 1, "T_k requires k >= 1");
  const Graph base = figure1_tree();
  const auto base_edges = base.edges();
  std::vector<Edge> edges;
  edges.reserve(k * (base_edges.size() + 1));
  for (std::size_t i = 0; i < k; ++i) {
    const auto offset = static_cast<Vertex>(1 + kFigure1Order * i);
    for (const Edge& e : base_edges) edges.push_back({e.u + offset, e.v + offset});
    edges.push_back({0, offset + tk_attachment_label(attach)});
  }
  return Graph(kFigure1Order * k + 1, edges);
}

Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence) {
  require(n >= 1, "tree requires n >= 1");
  if (n == 1) {
    require(sequence.empty(), "Pruefer sequence for n = 1 must be empty");
    return Graph(1, {});
  }
  require(sequence.size() == n - 2, "Pruefer sequence must have length n - 2");
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : sequence) {
    require(v < n, "Pruefer entry out of range");
    ++degree[v];
  }
  std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>> leaves;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : sequence) {
    const Vertex leaf = leaves.top();
    leaves.pop();
    edges.push_back({leaf, v});
    if (--degree[v] == 1) leaves.push(v);
  }
  const Vertex a = leaves.top();
  leaves.pop();
  edges.push_back({a, leaves.top()});
  return Graph(n, edges);
}

Graph random_tree(std::size_t n, std::uint64_t seed) {
  require(n >= 1, "tree requires n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> sequence(n >= 2 ? n - 2 : 0);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  for (auto& v : sequence) v = pick(rng);
  return tree_from_pruefer(n, sequence);
}

Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  require(p >= 0.0 && p <= 1.0, "edge probability must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.push_back({u, v});
    }
  }
  return Graph(n, edges);
}

std::uint64_t labeled_tree_count(std::size_t n) {
  if (n <= 2) return 1;
  std::uint64_t count = 1;
  for (std::size_t i = 0; i + 2 < n; ++i) count *= n;
  return count;
}

void enumerate_labeled_trees(std::size_t n, const std::function<bool(const Graph&)>& visit,
                             std::size_t cap) {
  require(n >= 1, "tree enumeration requires n >= 1");
  require(n <= cap, "tree enumeration n = " + std::to_string(n) + " exceeds the cap " +
                        std::to_string(cap));
  if (n <= 2) {
    visit(n == 1 ? Graph(1, {}) : path_graph(2));
    return;
  }
  std::vector<Vertex> sequence(n - 2, 0);
  while (true) {
    if (!visit(tree_from_pruefer(n, sequence))) return;
    // Odometer increment, last position fastest.
    std::size_t pos = sequence.size();
    while (pos > 0) {
      --pos;
      if (++sequence[pos] < n) break;
      sequence[pos] = 0;
      if (pos == 0) return;
    }
  }
}

}  // namespace lapdom
