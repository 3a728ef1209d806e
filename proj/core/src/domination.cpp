#include "lapdom/domination.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

namespace lapdom {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

Mask bit(std::size_t v) { return Mask{1} << v; }

std::vector<Vertex> members(Mask m) {
  std::vector<Vertex> out;
  while (m != 0) {
    out.push_back(static_cast<Vertex>(std::countr_zero(m)));
    m &= m - 1;
  }
  return out;
}

std::vector<Mask> closed_neighborhoods(const Graph& g) {
  std::vector<Mask> closed(g.order());
  for (Vertex v = 0; v < g.order(); ++v) {
    closed[v] = bit(v);
    for (Vertex w : g.neighbors(v)) closed[v] |= bit(w);
  }
  return closed;
}

Mask full_mask(std::size_t n) { return n == kMaskBits ? ~Mask{0} : bit(n) - 1; }

void require_search_size(const Graph& g, const DominationConfig& config) {
  const std::size_t cap = std::min(config.search_cap, kMaskBits);
  if (g.order() > cap) {
    throw CapExceeded("domination search on " + std::to_string(g.order()) + " vertices exceeds the cap " +
                      std::to_string(cap));
  }
}

/// Branch and bound over the set-cover formulation: branch on the lowest
/// undominated vertex, trying each member of its closed neighborhood.
class DominationSearch {
 public:
  explicit DominationSearch(const Graph& g) : closed_(closed_neighborhoods(g)), full_(full_mask(g.order())) {}

  /// Smallest dominating set with fewer than `limit` members, if any.
  std::optional<Mask> minimum(std::size_t limit) {
    best_size_ = limit;
    best_.reset();
    enumerate_ = false;
    descend(0, 0, 0);
    return best_;
  }

  void each_of_size(std::size_t size, const std::function<bool(std::span<const Vertex>)>& visit) {
    best_size_ = size + 1;
    enumerate_ = true;
    stopped_ = false;
    visit_ = &visit;
    descend(0, 0, 0);
    visit_ = nullptr;
  }

 private:
  std::size_t lower_bound(Mask dominated) const {
    const Mask open = full_ & ~dominated;
    const auto remaining = static_cast<std::size_t>(std::popcount(open));
    std::size_t cover = 1;
    for (Mask c : closed_) cover = std::max(cover, static_cast<std::size_t>(std::popcount(c & open)));
    return (remaining + cover - 1) / cover;
  }

  void descend(Mask chosen, std::size_t size, Mask dominated) {
    if (stopped_) return;
    if (dominated == full_) {
      if (enumerate_) {
        const auto set = members(chosen);
        if (!(*visit_)(set)) stopped_ = true;
      } else if (size < best_size_) {
        best_size_ = size;
        best_ = chosen;
      }
      return;
    }
    if (size + lower_bound(dominated) >= best_size_) return;
    const Mask open = full_ & ~dominated;
    const auto v = static_cast<std::size_t>(std::countr_zero(open));
    std::vector<Vertex> candidates = members(closed_[v]);
    std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
      return std::popcount(closed_[a] & open) > std::popcount(closed_[b] & open);
    });
    for (Vertex u : candidates) {
      descend(chosen | bit(u), size + 1, dominated | closed_[u]);
      if (stopped_) return;
    }
  }

  std::vector<Mask> closed_;
  Mask full_;
  std::size_t best_size_ = 0;
  std::optional<Mask> best_;
  bool enumerate_ = false;
  bool stopped_ = false;
  const std::function<bool(std::span<const Vertex>)>* visit_ = nullptr;
};

constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max() / 4;

std::size_t add(std::size_t a, std::size_t b) { return std::min(kInf, a + b); }

/// Rooted view of a forest: children lists and a parents-first order.
struct RootedForest {
  std::vector<Vertex> order;
  std::vector<std::optional<Vertex>> parent;
  std::vector<std::vector<Vertex>> children;
  std::vector<Vertex> roots;
};

RootedForest root_forest(const Graph& g) {
  const std::size_t n = g.order();
  if (g.size() + component_count(g) != n) throw GraphError("graph is not a forest");
  RootedForest f;
  f.parent.resize(n);
  f.children.resize(n);
  std::vector<char> seen(n, 0);
  for (Vertex r = 0; r < n; ++r) {
    if (seen[r]) continue;
    f.roots.push_back(r);
    seen[r] = 1;
    std::deque<Vertex> queue{r};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      f.order.push_back(u);
      for (Vertex w : g.neighbors(u)) {
        if (seen[w]) continue;
        seen[w] = 1;
        f.parent[w] = u;
        f.children[u].push_back(w);
        queue.push_back(w);
      }
    }
  }
  return f;
}

/// Three-state tree program:
///   in   - v is in the set;
///   dom  - v is out and dominated by a child;
///   need - v is out and must be dominated by its parent.
struct TreeTable {
  RootedForest forest;
  std::vector<std::size_t> in, dom, need;
};

TreeTable solve_tree(const Graph& g) {
  TreeTable t{root_forest(g), {}, {}, {}};
  const std::size_t n = g.order();
  t.in.assign(n, 0);
  t.dom.assign(n, 0);
  t.need.assign(n, 0);
  for (auto it = t.forest.order.rbegin(); it != t.forest.order.rend(); ++it) {
    const Vertex v = *it;
    const auto& kids = t.forest.children[v];
    std::size_t in = 1;
    std::size_t dom = 0;
    std::size_t need = 0;
    std::size_t penalty = kInf;
    for (Vertex c : kids) {
      in = add(in, std::min({t.in[c], t.dom[c], t.need[c]}));
      dom = add(dom, std::min(t.in[c], t.dom[c]));
      penalty = std::min(penalty, t.in[c] <= t.dom[c] ? 0 : t.in[c] - t.dom[c]);
      need = add(need, t.dom[c]);
    }
    t.in[v] = in;
    t.dom[v] = kids.empty() ? kInf : add(dom, penalty);
    t.need[v] = need;
  }
  return t;
}

enum class State { in, dom, need };

}  // namespace

bool is_dominating(const Graph& g, std::span<const Vertex> set) {
  std::vector<char> covered(g.order(), 0);
  for (Vertex u : set) {
    if (u >= g.order()) return false;
    covered[u] = 1;
    for (Vertex w : g.neighbors(u)) covered[w] = 1;
  }
  return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::optional<Vertex> external_private_neighbor(const Graph& g, std::span<const Vertex> set, Vertex u) {
  std::vector<char> in_set(g.order(), 0);
  for (Vertex s : set) in_set[s] = 1;
  for (Vertex v : g.neighbors(u)) {
    if (in_set[v]) continue;
    bool only_u = true;
    for (Vertex w : g.neighbors(v)) {
      if (w != u && in_set[w]) {
        only_u = false;
        break;
      }
    }
    if (only_u) return v;
  }
  return std::nullopt;
}

std::optional<std::string> validate_certificate(const Graph& g, const DominationCertificate& cert) {
  if (!std::is_sorted(cert.set.begin(), cert.set.end()) ||
      std::adjacent_find(cert.set.begin(), cert.set.end()) != cert.set.end()) {
    return "set is not sorted and duplicate-free";
  }
  if (!is_dominating(g, cert.set)) return "set does not dominate";
  if (!cert.epn) return std::nullopt;
  if (cert.epn->size() != cert.set.size()) return "epn map does not cover every member";
  std::vector<char> in_set(g.order(), 0);
  for (Vertex s : cert.set) in_set[s] = 1;
  for (const auto& [u, v] : *cert.epn) {
    if (u >= g.order() || !in_set[u]) return "epn key " + std::to_string(u) + " is not a member";
    if (v >= g.order() || in_set[v]) return "epn of " + std::to_string(u) + " lies inside the set";
    if (!g.adjacent(u, v)) return "epn of " + std::to_string(u) + " is not adjacent to it";
    for (Vertex w : g.neighbors(v)) {
      if (w != u && in_set[w]) {
        return "epn " + std::to_string(v) + " of " + std::to_string(u) + " also touches member " + std::to_string(w);
      }
    }
  }
  return std::nullopt;
}

std::size_t domination_number_tree(const Graph& forest) {
  const TreeTable t = solve_tree(forest);
  std::size_t total = 0;
  for (Vertex r : t.forest.roots) total += std::min(t.in[r], t.dom[r]);
  return total;
}

std::vector<Vertex> minimum_dominating_set_forest(const Graph& forest) {
  const TreeTable t = solve_tree(forest);
  std::vector<State> state(forest.order(), State::in);
  for (Vertex r : t.forest.roots) state[r] = t.in[r] <= t.dom[r] ? State::in : State::dom;
  std::vector<Vertex> set;
  for (Vertex v : t.forest.order) {
    const auto& kids = t.forest.children[v];
    switch (state[v]) {
      case State::in:
        set.push_back(v);
        for (Vertex c : kids) {
          const std::size_t best = std::min({t.in[c], t.dom[c], t.need[c]});
          state[c] = t.in[c] == best ? State::in : t.dom[c] == best ? State::dom : State::need;
        }
        break;
      case State::dom: {
        bool some_in = false;
        for (Vertex c : kids) {
          state[c] = t.in[c] <= t.dom[c] ? State::in : State::dom;
          some_in = some_in || state[c] == State::in;
        }
        if (!some_in) {
          Vertex pick = kids.front();
          for (Vertex c : kids) {
            if (t.in[c] - t.dom[c] < t.in[pick] - t.dom[pick]) pick = c;
          }
          state[pick] = State::in;
        }
        break;
      }
      case State::need:
        for (Vertex c : kids) state[c] = State::dom;
        break;
    }
  }
  std::sort(set.begin(), set.end());
  return set;
}

DominationCertificate greedy_domination(const Graph& g, std::span<const Vertex> ordering) {
  const std::size_t n = g.order();
  std::vector<Vertex> order(ordering.begin(), ordering.end());
  if (order.empty()) {
    order.resize(n);
    std::iota(order.begin(), order.end(), Vertex{0});
  }
  if (order.size() != n) throw GraphError("greedy ordering must be a permutation of the vertices");
  std::vector<char> dominated(n, 0);
  std::vector<char> chosen(n, 0);
  std::size_t remaining = n;
  DominationCertificate cert;
  while (remaining > 0) {
    std::size_t best_gain = 0;
    Vertex best = 0;
    for (Vertex v : order) {
      if (chosen[v]) continue;
      std::size_t gain = dominated[v] ? 0 : 1;
      for (Vertex w : g.neighbors(v)) gain += dominated[w] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    chosen[best] = 1;
    cert.set.push_back(best);
    for (Vertex w : g.neighbors(best)) {
      if (!dominated[w]) --remaining, dominated[w] = 1;
    }
    if (!dominated[best]) --remaining, dominated[best] = 1;
  }
  std::sort(cert.set.begin(), cert.set.end());
  return cert;
}

DominationCertificate domination_number(const Graph& g, const DominationConfig& config) {
  DominationCertificate cert;
  cert.optimal = true;
  if (g.size() + component_count(g) == g.order()) {
    cert.set = minimum_dominating_set_forest(g);
    return cert;
  }
  return domination_number_search(g, config);
}

DominationCertificate domination_number_search(const Graph& g, const DominationConfig& config) {
  require_search_size(g, config);
  DominationCertificate cert;
  cert.optimal = true;
  const DominationCertificate greedy = greedy_domination(g);
  DominationSearch search(g);
  if (const auto better = search.minimum(greedy.set.size())) {
    cert.set = members(*better);
  } else {
    cert.set = greedy.set;
  }
  return cert;
}

void for_each_dominating_set_of_size(const Graph& g, std::size_t size,
                                     const std::function<bool(std::span<const Vertex>)>& visit,
                                     const DominationConfig& config) {
  require_search_size(g, config);
  DominationSearch(g).each_of_size(size, visit);
}

namespace {

std::optional<std::vector<std::pair<Vertex, Vertex>>> epn_map(const Graph& g, std::span<const Vertex> set) {
  std::vector<std::pair<Vertex, Vertex>> map;
  for (Vertex u : set) {
    const auto v = external_private_neighbor(g, set, u);
    if (!v) return std::nullopt;
    map.emplace_back(u, *v);
  }
  return map;
}

void require_isolate_free(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) throw GraphError("vertex " + std::to_string(v) + " is isolated");
  }
}

}  // namespace

DominationCertificate repair_private_neighbors(const Graph& g, std::vector<Vertex> set) {
  require_isolate_free(g);
  std::vector<char> in_set(g.order(), 0);
  for (Vertex s : set) in_set[s] = 1;
  // Each swap raises the number of edges inside the set, so this ends.
  bool changed = true;
  while (changed) {
    changed = false;
    std::sort(set.begin(), set.end());
    for (Vertex& u : set) {
      if (external_private_neighbor(g, set, u)) continue;
      // In a minimum set, a member without one has no neighbor in the set.
      const auto nbrs = g.neighbors(u);
      const auto outside = std::find_if(nbrs.begin(), nbrs.end(), [&](Vertex w) { return !in_set[w]; });
      if (outside == nbrs.end()) throw std::logic_error("private-neighbor repair needs a minimum dominating set");
      const Vertex w = *outside;
      in_set[u] = 0;
      in_set[w] = 1;
      u = w;
      changed = true;
      break;
    }
  }
  std::sort(set.begin(), set.end());
  DominationCertificate cert;
  cert.epn = epn_map(g, set);
  cert.set = std::move(set);
  cert.optimal = true;
  return cert;
}

DominationCertificate min_dominating_set_with_epn(const Graph& g, const DominationConfig& config) {
  require_isolate_free(g);
  const std::size_t cap = std::min(config.search_cap, kMaskBits);
  if (g.order() > cap) {
    if (g.size() + component_count(g) != g.order()) {
      throw CapExceeded("epn certificate search on " + std::to_string(g.order()) + " vertices exceeds the cap " +
                        std::to_string(cap));
    }
    return repair_private_neighbors(g, minimum_dominating_set_forest(g));
  }
  const std::size_t gamma = domination_number(g, config).set.size();
  DominationCertificate cert;
  for_each_dominating_set_of_size(
      g, gamma,
      [&](std::span<const Vertex> set) {
        if (auto map = epn_map(g, set)) {
          cert.set.assign(set.begin(), set.end());
          cert.epn = std::move(map);
          return false;
        }
        return true;
      },
      config);
  if (!cert.epn) throw std::logic_error("no minimum dominating set with private neighbors was found");
  cert.optimal = true;
  return cert;
}

StarForest star_forest(const Graph& g, const DominationCertificate& cert) {
  if (!cert.epn) throw GraphError("star forest needs a certificate with an epn map");
  const std::size_t n = g.order();
  constexpr auto kNone = std::numeric_limits<Vertex>::max();
  StarForest forest;
  forest.center_of.assign(n, kNone);
  std::vector<std::size_t> index(n, 0);
  for (Vertex c : cert.set) {
    index[c] = forest.stars.size();
    forest.stars.push_back({c, {}});
    forest.center_of[c] = c;
  }
  for (const auto& [center, leaf] : *cert.epn) forest.center_of[leaf] = center;
  for (Vertex v = 0; v < n; ++v) {
    if (forest.center_of[v] != kNone) continue;
    for (Vertex w : g.neighbors(v)) {
      if (std::binary_search(cert.set.begin(), cert.set.end(), w)) {
        forest.center_of[v] = w;
        break;
      }
    }
    if (forest.center_of[v] == kNone) throw GraphError("certificate does not dominate vertex " + std::to_string(v));
  }
  for (Vertex v = 0; v < n; ++v) {
    if (forest.center_of[v] != v) forest.stars[index[forest.center_of[v]]].leaves.push_back(v);
  }
  return forest;
}

std::optional<std::string> validate_star_forest(const Graph& g, const DominationCertificate& cert,
                                                const StarForest& forest) {
  if (forest.stars.size() != cert.set.size()) return "star count differs from the certificate size";
  std::vector<int> hits(g.order(), 0);
  for (const Star& s : forest.stars) {
    if (!std::binary_search(cert.set.begin(), cert.set.end(), s.center)) {
      return "center " + std::to_string(s.center) + " is not a certificate member";
    }
    if (s.leaves.empty()) return "star at " + std::to_string(s.center) + " has order 1";
    ++hits[s.center];
    for (Vertex leaf : s.leaves) {
      if (!g.adjacent(s.center, leaf)) {
        return "leaf " + std::to_string(leaf) + " is not adjacent to center " + std::to_string(s.center);
      }
      ++hits[leaf];
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (hits[v] != 1) return "vertex " + std::to_string(v) + " lies in " + std::to_string(hits[v]) + " stars";
  }
  if (forest.center_of.size() != g.order()) return "center map has the wrong length";
  for (const Star& s : forest.stars) {
    if (forest.center_of[s.center] != s.center) return "center map misplaces center " + std::to_string(s.center);
    for (Vertex leaf : s.leaves) {
      if (forest.center_of[leaf] != s.center) return "center map misplaces leaf " + std::to_string(leaf);
    }
  }
  return std::nullopt;
}

namespace {

std::size_t forest_matching(const Graph& g) {
  const RootedForest f = root_forest(g);
  std::vector<char> matched(g.order(), 0);
  std::size_t size = 0;
  for (auto it = f.order.rbegin(); it != f.order.rend(); ++it) {
    const Vertex v = *it;
    const auto p = f.parent[v];
    if (p && !matched[v] && !matched[*p]) {
      matched[v] = matched[*p] = 1;
      ++size;
    }
  }
  return size;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const Graph& g) : adj_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) {
      for (Vertex w : g.neighbors(v)) adj_[v] |= bit(w);
    }
  }

  std::size_t run(Mask available, std::size_t lower) {
    best_ = lower;
    descend(available, 0);
    return best_;
  }

 private:
  void descend(Mask available, std::size_t size) {
    // Drop vertices with no available partner.
    Mask live = 0;
    for (Mask m = available; m != 0; m &= m - 1) {
      const auto v = static_cast<std::size_t>(std::countr_zero(m));
      if (adj_[v] & available) live |= bit(v);
    }
    if (size + static_cast<std::size_t>(std::popcount(live)) / 2 <= best_) return;
    if (live == 0) {
      best_ = std::max(best_, size);
      return;
    }
    const auto v = static_cast<std::size_t>(std::countr_zero(live));
    for (Mask m = adj_[v] & live; m != 0; m &= m - 1) {
      const auto u = static_cast<std::size_t>(std::countr_zero(m));
      descend(live & ~bit(v) & ~bit(u), size + 1);
    }
    descend(live & ~bit(v), size);
  }

  std::vector<Mask> adj_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t matching_number(const Graph& g, const MatchingConfig& config) {
  if (g.size() + component_count(g) == g.order()) return forest_matching(g);
  const std::size_t cap = std::min(config.search_cap, kMaskBits);
  if (g.order() > cap) {
    throw CapExceeded("matching search on " + std::to_string(g.order()) + " vertices exceeds the cap " +
                      std::to_string(cap));
  }
  // Greedy lower bound.
  std::vector<char> used(g.order(), 0);
  std::size_t greedy = 0;
  for (const Edge& e : g.edges()) {
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = 1;
      ++greedy;
    }
  }
  return MatchingSearch(g).run(full_mask(g.order()), greedy);
}

std::size_t pendant_spanning_epsilon(const Graph& g, const DominationConfig& config) {
  return g.order() - domination_number(g, config).set.size();
}

namespace {

class ForestEnumerator {
 public:
  explicit ForestEnumerator(const Graph& g) : edges_(g.edges()), degree_(g.order(), 0), label_(g.order()) {
    std::iota(label_.begin(), label_.end(), std::size_t{0});
  }

  std::size_t run() {
    descend(0);
    return best_;
  }

 private:
  std::size_t pendant_edges() const {
    std::size_t count = 0;
    for (std::size_t i : chosen_) {
      if (degree_[edges_[i].u] == 1 || degree_[edges_[i].v] == 1) ++count;
    }
    return count;
  }

  void descend(std::size_t i) {
    if (i == edges_.size()) {
      best_ = std::max(best_, pendant_edges());
      return;
    }
    descend(i + 1);
    const Edge e = edges_[i];
    const std::size_t a = label_[e.u];
    const std::size_t b = label_[e.v];
    if (a == b) return;
    // Merge components by relabeling b -> a; undone afterwards.
    std::vector<std::size_t> moved;
    for (std::size_t v = 0; v < label_.size(); ++v) {
      if (label_[v] == b) {
        label_[v] = a;
        moved.push_back(v);
      }
    }
    ++degree_[e.u];
    ++degree_[e.v];
    chosen_.push_back(i);
    descend(i + 1);
    chosen_.pop_back();
    --degree_[e.u];
    --degree_[e.v];
    for (std::size_t v : moved) label_[v] = b;
  }

  std::vector<Edge> edges_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> label_;
  std::vector<std::size_t> chosen_;
  std::size_t best_ = 0;
};

}  // namespace

std::size_t brute_force_epsilon(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw CapExceeded("spanning-forest enumeration on " + std::to_string(g.order()) + " vertices exceeds the cap " +
                      std::to_string(cap));
  }
  return ForestEnumerator(g).run();
}

}  // namespace lapdom
