#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "lapdom/graph.hpp"

namespace lapdom {

Graph path_graph(std::size_t n);
/// Requires n >= 3.
Graph cycle_graph(std::size_t n);
/// S_n = K_{1,n-1} with center 0; requires n >= 2.
Graph star_graph(std::size_t n);
Graph complete_graph(std::size_t n);
/// Part sizes a and b; vertices 0..a-1 form the first part.
Graph complete_bipartite_graph(std::size_t a, std::size_t b);
Graph empty_graph(std::size_t n);

/// Builds a named family member: path, cycle, star, complete,
/// complete_bipartite (two parameters) or empty.
Graph generate(std::string_view family, std::span<const std::size_t> params);

/// The 65-vertex tree with m[0,1) = 24 and gamma = 25.
///
/// Vertex 0 is the root. It is adjacent to the apex of four identical
/// 16-vertex branches. An apex has three children, each of those has two
/// children, and each of those carries one pendant vertex. Labels are
/// assigned in preorder, so branch b occupies 1 + 16b .. 16 + 16b with its
/// apex first.
Graph figure1_tree();

/// Which vertex of each base-tree copy the new T_k root attaches to.
enum class TkAttachment {
  /// The first pendant vertex (label 4 of each copy in preorder).
  pendant,
  /// The copy's own root (label 0).
  copy_root,
};

/// k copies of figure1_tree() plus a new root (vertex 0) joined to one
/// vertex of every copy; copy i occupies 1 + 65i .. 65 + 65i.
Graph tk_tree(std::size_t k, TkAttachment attach = TkAttachment::pendant);

/// Label inside a base-tree copy that tk_tree() attaches to.
Vertex tk_attachment_label(TkAttachment attach);

/// Tree with the given Pruefer sequence (entries in 0..n-1, length n-2).
Graph tree_from_pruefer(std::size_t n, std::span<const Vertex> sequence);

/// Uniform labeled tree from a random Pruefer sequence.
Graph random_tree(std::size_t n, std::uint64_t seed);

/// G(n, p) with independent edges; deterministic given seed.
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);

inline constexpr std::size_t kDefaultTreeEnumerationCap = 8;

/// All n^(n-2) labeled trees on n vertices, in lexicographic Pruefer order.
/// Returning false from `visit` stops the enumeration.
void enumerate_labeled_trees(std::size_t n, const std::function<bool(const Graph&)>& visit,
                             std::size_t cap = kDefaultTreeEnumerationCap);

/// n^(n-2) for n >= 2, 1 for n = 1.
std::uint64_t labeled_tree_count(std::size_t n);

}  // namespace lapdom
