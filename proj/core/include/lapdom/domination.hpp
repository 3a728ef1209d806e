#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/polynomial.hpp"

namespace lapdom {

struct DominationCertificate {
  /// Sorted ascending.
  std::vector<Vertex> set;
  /// (member, external private neighbor) for every member, when present.
  std::optional<std::vector<std::pair<Vertex, Vertex>>> epn;
  bool optimal = false;
};

struct Star {
  Vertex center;
  /// Sorted ascending, never empty.
  std::vector<Vertex> leaves;
};

/// Spanning partition of V into stars whose centers form the certificate set.
struct StarForest {
  std::vector<Star> stars;
  /// Center of the star containing each vertex (a center maps to itself).
  std::vector<Vertex> center_of;
};

inline constexpr std::size_t kDefaultDominationCap = 40;
inline constexpr std::size_t kDefaultMatchingCap = 24;
inline constexpr std::size_t kDefaultEpsilonBruteForceCap = 8;

struct DominationConfig {
  /// Largest non-forest graph handed to the exact search (at most 64).
  std::size_t search_cap = kDefaultDominationCap;
};

bool is_dominating(const Graph& g, std::span<const Vertex> set);

/// A vertex outside `set` whose only neighbor in `set` is u, lowest first.
std::optional<Vertex> external_private_neighbor(const Graph& g, std::span<const Vertex> set, Vertex u);

/// Empty when the certificate is consistent (dominates, valid epn map,
/// sorted unique members); otherwise a description of the first violation.
std::optional<std::string> validate_certificate(const Graph& g, const DominationCertificate& cert);

/// Optimal certificate. Forests of any size use the tree dynamic program;
/// other graphs use branch and bound over closed neighborhoods and throw
/// CapExceeded above DominationConfig::search_cap.
DominationCertificate domination_number(const Graph& g, const DominationConfig& config = {});

/// Branch and bound for any graph, forests included. Throws CapExceeded
/// above the search cap.
DominationCertificate domination_number_search(const Graph& g, const DominationConfig& config = {});

/// gamma of a forest in linear time; isolated vertices count 1 each.
/// Throws GraphError if the graph has a cycle.
std::size_t domination_number_tree(const Graph& forest);

/// A minimum dominating set of a forest, recovered from the same program.
std::vector<Vertex> minimum_dominating_set_forest(const Graph& forest);

/// Greedy maximum-coverage domination; ties go to the vertex appearing
/// first in `ordering` (identity when empty).
DominationCertificate greedy_domination(const Graph& g, std::span<const Vertex> ordering = {});

/// Calls `visit` with every dominating set of size `size` reachable by the
/// branch-and-bound search (each minimum dominating set at least once when
/// size = gamma). Returning false stops the enumeration.
void for_each_dominating_set_of_size(const Graph& g, std::size_t size,
                                     const std::function<bool(std::span<const Vertex>)>& visit,
                                     const DominationConfig& config = {});

/// Minimum dominating set in which every member has an external private
/// neighbor, with the epn map filled in. Graphs within the search cap are
/// enumerated; larger forests are repaired by private-neighbor exchanges
/// starting from the tree solution. Throws GraphError on isolated vertices.
DominationCertificate min_dominating_set_with_epn(const Graph& g, const DominationConfig& config = {});

/// Repeatedly swaps a member without an external private neighbor for one
/// of its neighbors until every member has one. `set` must be a minimum
/// dominating set of an isolate-free graph.
DominationCertificate repair_private_neighbors(const Graph& g, std::vector<Vertex> set);

/// Stars centered on the certificate members. Throws GraphError without an
/// epn map.
StarForest star_forest(const Graph& g, const DominationCertificate& cert);

/// Empty when `forest` is a spanning star partition of g centered on
/// `cert.set`; otherwise the first violation.
std::optional<std::string> validate_star_forest(const Graph& g, const DominationCertificate& cert,
                                                const StarForest& forest);

struct MatchingConfig {
  std::size_t search_cap = kDefaultMatchingCap;
};

/// Maximum matching size. Forests are solved exactly at any size by leaf
/// matching; other graphs use branch and bound up to the cap.
std::size_t matching_number(const Graph& g, const MatchingConfig& config = {});

/// Maximum number of pendant edges over spanning forests, as n - gamma.
std::size_t pendant_spanning_epsilon(const Graph& g, const DominationConfig& config = {});

/// Same quantity by enumerating every spanning forest. Throws CapExceeded
/// for n above `cap`.
std::size_t brute_force_epsilon(const Graph& g, std::size_t cap = kDefaultEpsilonBruteForceCap);

}  // namespace lapdom
