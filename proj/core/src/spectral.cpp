#include "lapdom/spectral.hpp"

#include <deque>

namespace lapdom {

std::string to_string(MatrixVariant v) { return v == MatrixVariant::laplacian ? "laplacian" : "signless"; }

std::string to_string(CountMethod m) {
  switch (m) {
    case CountMethod::sturm:
      return "sturm";
    case CountMethod::tree_diag:
      return "tree-diag";
    case CountMethod::composed:
      return "composed";
  }
  return "unknown";
}

IntMatrix graph_matrix(const Graph& g, MatrixVariant v) {
  const std::size_t n = g.order();
  const std::int64_t off = v == MatrixVariant::laplacian ? -1 : 1;
  IntMatrix m(n);
  for (Vertex u = 0; u < n; ++u) {
    m(u, u) = static_cast<std::int64_t>(g.degree(u));
    for (Vertex w : g.neighbors(u)) m(u, w) = off;
  }
  return m;
}

IntMatrix laplacian_matrix(const Graph& g) { return graph_matrix(g, MatrixVariant::laplacian); }
IntMatrix signless_laplacian_matrix(const Graph& g) { return graph_matrix(g, MatrixVariant::signless); }

TreeDiagonalizer::TreeDiagonalizer(const Graph& tree)
    : parent_(tree.order()), children_(tree.order()), degree_(tree.order()) {
  const std::size_t n = tree.order();
  if (n == 0 || tree.size() != n - 1) throw GraphError("tree diagonalization needs a tree");
  std::vector<char> seen(n, 0);
  std::deque<Vertex> queue{0};
  seen[0] = 1;
  while (!queue.empty()) {
    const Vertex u = queue.front();
    queue.pop_front();
    order_.push_back(u);
    degree_[u] = tree.degree(u);
    for (Vertex w : tree.neighbors(u)) {
      if (seen[w]) continue;
      seen[w] = 1;
      parent_[w] = u;
      children_[u].push_back(w);
      queue.push_back(w);
    }
  }
  if (order_.size() != n) throw GraphError("tree diagonalization needs a connected graph");
}

std::vector<Rational> TreeDiagonalizer::diagonal(const Rational& alpha) const {
  const std::size_t n = order();
  std::vector<Rational> a(n);
  std::vector<char> detached(n, 0);
  for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
    const Vertex v = *it;
    a[v] = Rational(static_cast<unsigned long>(degree_[v])) - alpha;
    std::optional<Vertex> zero_child;
    for (Vertex c : children_[v]) {
      if (!detached[c] && a[c] == 0) {
        zero_child = c;
        break;
      }
    }
    if (zero_child) {
      a[*zero_child] = 2;
      a[v] = Rational(-1, 2);
      if (parent_[v]) detached[v] = 1;
      continue;
    }
    for (Vertex c : children_[v]) {
      if (!detached[c]) a[v] -= 1 / a[c];
    }
  }
  return a;
}

Inertia TreeDiagonalizer::inertia(const Rational& alpha) const {
  Inertia result;
  for (const auto& value : diagonal(alpha)) {
    const int s = sgn(value);
    if (s < 0) {
      ++result.below;
    } else if (s == 0) {
      ++result.equal;
    } else {
      ++result.above;
    }
  }
  return result;
}

Inertia tree_inertia(const Graph& tree, const Rational& alpha) {
  return TreeDiagonalizer(tree).inertia(alpha);
}

ExactSpectrum::ExactSpectrum(const Graph& g, MatrixVariant variant, const ExactConfig& config)
    : n_(g.order()), variant_(variant) {
  const bool tree = n_ > 0 && g.size() == n_ - 1 && component_count(g) == 1;
  if (variant == MatrixVariant::laplacian && tree && !(config.force_sturm && n_ <= config.exact_cap)) {
    method_ = CountMethod::tree_diag;
    tree_.emplace(g);
    return;
  }
  method_ = CountMethod::sturm;
  if (n_ == 0) {
    poly_ = IntPolynomial::constant(1);
  } else {
    poly_ = char_poly(graph_matrix(g, variant), config.exact_cap);
  }
  roots_.emplace(*poly_);
}

std::size_t ExactSpectrum::below(const Rational& t) const {
  if (tree_) return tree_->inertia(t).below;
  return roots_->below(t);
}

std::size_t ExactSpectrum::at(const Rational& t) const {
  if (tree_) return tree_->inertia(t).equal;
  return roots_->at(t);
}

std::size_t ExactSpectrum::count(const ResolvedInterval& r) const {
  if (r.empty()) return 0;
  std::size_t lo_below = 0;
  std::size_t lo_at = 0;
  std::size_t hi_below = 0;
  std::size_t hi_at = 0;
  if (tree_) {
    const Inertia lo = tree_->inertia(r.lo);
    const Inertia hi = r.hi == r.lo ? lo : tree_->inertia(r.hi);
    lo_below = lo.below;
    lo_at = lo.equal;
    hi_below = hi.below;
    hi_at = hi.equal;
  } else {
    lo_below = roots_->below(r.lo);
    lo_at = roots_->at(r.lo);
    hi_below = roots_->below(r.hi);
    hi_at = roots_->at(r.hi);
  }
  const std::size_t upto_hi = r.hi_closed ? hi_below + hi_at : hi_below;
  const std::size_t before_lo = r.lo_closed ? lo_below : lo_below + lo_at;
  return upto_hi - before_lo;
}

ExactCount ExactSpectrum::count(const Interval& interval) const {
  return {count(interval.resolve(n_)), method_};
}

ExactCount count_interval_exact(const Graph& g, const Interval& interval, MatrixVariant variant,
                                const ExactConfig& config) {
  return ExactSpectrum(g, variant, config).count(interval);
}

}  // namespace lapdom
