#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/interval.hpp"
#include "lapdom/polynomial.hpp"

namespace lapdom {

enum class MatrixVariant { laplacian, signless };
enum class CountMethod { sturm, tree_diag, composed };

std::string to_string(MatrixVariant v);
std::string to_string(CountMethod m);

/// D - A.
IntMatrix laplacian_matrix(const Graph& g);
/// D + A.
IntMatrix signless_laplacian_matrix(const Graph& g);
IntMatrix graph_matrix(const Graph& g, MatrixVariant v);

struct ExactCount {
  std::size_t count = 0;
  CountMethod method = CountMethod::sturm;
};

struct Inertia {
  std::size_t below = 0;
  std::size_t equal = 0;
  std::size_t above = 0;

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Congruence diagonalization of L - alpha*I on a rooted tree.
///
/// Every vertex starts at deg(v) - alpha and is processed after its
/// children. A vertex whose children are all nonzero subtracts 1/a(c) for
/// each attached child. If some child is zero, that child becomes 2, the
/// vertex becomes -1/2, and the vertex detaches from its own parent. The
/// signs of the final diagonal give the inertia of L - alpha*I.
class TreeDiagonalizer {
 public:
  /// Roots the tree at vertex 0. Throws GraphError if `tree` is not a tree.
  explicit TreeDiagonalizer(const Graph& tree);

  Inertia inertia(const Rational& alpha) const;
  /// Final diagonal values, indexed by vertex.
  std::vector<Rational> diagonal(const Rational& alpha) const;
  std::size_t order() const { return degree_.size(); }

 private:
  std::vector<Vertex> order_;  // parents before children
  std::vector<std::optional<Vertex>> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> degree_;
};

/// (eigenvalues < alpha, = alpha, > alpha) of L(T).
Inertia tree_inertia(const Graph& tree, const Rational& alpha);

struct ExactConfig {
  /// Largest matrix handed to the characteristic-polynomial path.
  std::size_t exact_cap = kDefaultExactCap;
  /// Use the polynomial path for trees too (for cross-checking).
  bool force_sturm = false;
};

/// Exact eigenvalue-location oracle for one graph matrix. Laplacians of
/// trees use TreeDiagonalizer at any size; everything else goes through
/// the characteristic polynomial, capped by ExactConfig::exact_cap.
class ExactSpectrum {
 public:
  /// Throws CapExceeded for non-tree inputs above the exact cap.
  explicit ExactSpectrum(const Graph& g, MatrixVariant variant = MatrixVariant::laplacian,
                         const ExactConfig& config = {});

  /// Eigenvalues strictly below t, with multiplicity.
  std::size_t below(const Rational& t) const;
  /// Multiplicity of t as an eigenvalue.
  std::size_t at(const Rational& t) const;
  ExactCount count(const Interval& interval) const;
  std::size_t count(const ResolvedInterval& interval) const;

  std::size_t order() const { return n_; }
  CountMethod method() const { return method_; }
  MatrixVariant variant() const { return variant_; }
  /// Characteristic polynomial when the Sturm path is used.
  const std::optional<IntPolynomial>& polynomial() const { return poly_; }

 private:
  std::size_t n_ = 0;
  MatrixVariant variant_;
  CountMethod method_ = CountMethod::sturm;
  std::optional<IntPolynomial> poly_;
  std::optional<RootCounter> roots_;
  std::optional<TreeDiagonalizer> tree_;
};

/// m_G(I) for the chosen matrix.
ExactCount count_interval_exact(const Graph& g, const Interval& interval,
                                MatrixVariant variant = MatrixVariant::laplacian,
                                const ExactConfig& config = {});

}  // namespace lapdom
