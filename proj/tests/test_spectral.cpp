#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "lapdom/float_spectrum.hpp"
#include "lapdom/generators.hpp"
#include "lapdom/graph6.hpp"
#include "lapdom/spectral.hpp"

using namespace lapdom;

namespace {

// Counts over [0,1), [1,n], [2,n], [0,2), [1,2), (n-1,n], [1/2,3/2], (2,n],
// computed with networkx and sympy.
const std::vector<Interval>& table_intervals() {
  static const std::vector<Interval> v = {
      Interval::zero_one(),  Interval::one_n(), Interval::two_n(),          Interval::zero_two(),
      Interval::one_two(),   Interval::top(),   Interval::parse("[1/2,3/2]"), Interval::open_two_n(),
  };
  return v;
}

struct CountRow {
  std::string name;
  Graph graph;
  std::vector<std::size_t> laplacian;
  std::vector<std::size_t> signless;
};

std::vector<CountRow> count_rows() {
  return {
      {"petersen", parse_graph6("IheA@GUAo"), {1, 9, 9, 1, 0, 0, 0, 4}, {0, 10, 6, 4, 4, 0, 4, 6}},
      {"kbip23", complete_bipartite_graph(2, 3), {1, 4, 4, 1, 0, 1, 0, 2}, {1, 4, 4, 1, 0, 1, 0, 2}},
      {"cycle6", cycle_graph(6), {1, 5, 3, 3, 2, 0, 2, 3}, {1, 5, 3, 3, 2, 0, 2, 3}},
      {"wheel6", parse_graph6("Ehfw"), {1, 5, 5, 1, 0, 1, 0, 5}, {0, 5, 3, 2, 2, 0, 2, 3}},
      {"path5", path_graph(5), {2, 3, 2, 3, 1, 0, 1, 2}, {2, 3, 2, 3, 1, 0, 1, 2}},
      {"bull", parse_graph6("DyG"), {2, 3, 2, 3, 1, 1, 2, 2}, {2, 3, 2, 3, 1, 1, 1, 2}},
      {"figure1", figure1_tree(), {24, 41, 29, 36, 12, 0, 4, 29}, {24, 41, 29, 36, 12, 0, 4, 29}},
  };
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Matrices, LaplacianAndSignless) {
  const Graph g = path_graph(3);
  const IntMatrix l = laplacian_matrix(g);
  const IntMatrix s = signless_laplacian_matrix(g);
  EXPECT_EQ(l(1, 1), 2);
  EXPECT_EQ(l(0, 1), -1);
  EXPECT_EQ(l(0, 2), 0);
  EXPECT_EQ(s(0, 1), 1);
  EXPECT_EQ(s(2, 2), 1);
}

TEST(ExactCounts, MatchReferenceTables) {
  for (const CountRow& row : count_rows()) {
    const ExactSpectrum lap(row.graph, MatrixVariant::laplacian);
    const ExactSpectrum sig(row.graph, MatrixVariant::signless);
    for (std::size_t i = 0; i < table_intervals().size(); ++i) {
      EXPECT_EQ(lap.count(table_intervals()[i]).count, row.laplacian[i]) << row.name << " laplacian " << i;
      EXPECT_EQ(sig.count(table_intervals()[i]).count, row.signless[i]) << row.name << " signless " << i;
    }
  }
}

TEST(ExactCounts, MethodSelection) {
  EXPECT_EQ(ExactSpectrum(figure1_tree()).method(), CountMethod::tree_diag);
  EXPECT_EQ(ExactSpectrum(cycle_graph(5)).method(), CountMethod::sturm);
  ExactConfig forced;
  forced.force_sturm = true;
  EXPECT_EQ(ExactSpectrum(path_graph(6), MatrixVariant::laplacian, forced).method(), CountMethod::sturm);
  ExactConfig small;
  small.exact_cap = 10;
  EXPECT_THROW(ExactSpectrum(cycle_graph(11), MatrixVariant::laplacian, small), CapExceeded);
}

TEST(ExactCounts, StarSpectrum) {
  // L(K_{1,n-1}) has eigenvalues 0, 1 (n-2 times) and n.
  for (std::size_t n = 2; n <= 12; ++n) {
    const ExactSpectrum s(star_graph(n));
    EXPECT_EQ(s.at(q(0)), 1u);
    EXPECT_EQ(s.at(q(1)), n - 2);
    EXPECT_EQ(s.at(q(static_cast<long>(n))), 1u) << n;
    EXPECT_EQ(s.count(Interval::zero_one()).count, 1u);
  }
}

TEST(ExactCounts, CompleteGraphSpectrum) {
  for (std::size_t n = 1; n <= 9; ++n) {
    const ExactSpectrum s(complete_graph(n));
    EXPECT_EQ(s.at(q(static_cast<long>(n))), n - 1);
    EXPECT_EQ(s.below(q(static_cast<long>(n))), 1u);
  }
}

TEST(TreeDiagonalizer, AgreesWithSturmOnAllSmallTrees) {
  const std::vector<Rational> probes = {q(0), q(1, 2), q(1), q(3, 2), q(2), q(5, 2), q(3), q(4), q(5), q(6)};
  for (std::size_t n = 1; n <= 6; ++n) {
    std::size_t seen = 0;
    enumerate_labeled_trees(n, [&](const Graph& t) {
      ++seen;
      const TreeDiagonalizer diag(t);
      const RootCounter roots(char_poly(laplacian_matrix(t)));
      for (const Rational& a : probes) {
        const Inertia in = diag.inertia(a);
        EXPECT_EQ(in.below, roots.below(a));
        EXPECT_EQ(in.equal, roots.at(a));
        EXPECT_EQ(in.below + in.equal + in.above, n);
      }
      return true;
    });
    EXPECT_EQ(seen, labeled_tree_count(n));
  }
}

TEST(TreeDiagonalizer, HandlesZeroPivots) {
  // Pivots vanish at alpha = 1 for leaves; P_3 has eigenvalues 0, 1, 3.
  const Inertia in = tree_inertia(path_graph(3), q(1));
  EXPECT_EQ(in, (Inertia{1, 1, 1}));
  EXPECT_EQ(tree_inertia(star_graph(6), q(1)), (Inertia{1, 4, 1}));
  EXPECT_THROW(TreeDiagonalizer(cycle_graph(4)), GraphError);
}

TEST(ExactCounts, FigureOneTopAndBottom) {
  const Graph t = figure1_tree();
  EXPECT_EQ(count_interval_exact(t, Interval::parse("[0,1)")).count, 24u);
  EXPECT_EQ(count_interval_exact(t, Interval::parse("[2,n]")).count, 29u);
  ExactConfig forced;
  forced.force_sturm = true;
  EXPECT_EQ(count_interval_exact(t, Interval::parse("[2,n]"), MatrixVariant::laplacian, forced).count, 29u);
}

TEST(Jacobi, DiagonalizesKnownMatrices) {
  const FloatSpectrum s = float_spectrum(laplacian_matrix(complete_graph(5)));
  ASSERT_EQ(s.values.size(), 5u);
  EXPECT_NEAR(s.values[0], 0.0, 1e-10);
  for (std::size_t i = 1; i < 5; ++i) EXPECT_NEAR(s.values[i], 5.0, 1e-10);
  EXPECT_LT(s.residual_bound, 1e-9);

  // Path on n vertices: 2 - 2 cos(k pi / n).
  const std::size_t n = 9;
  const FloatSpectrum p = float_spectrum(laplacian_matrix(path_graph(n)));
  for (std::size_t k = 0; k < n; ++k) {
    EXPECT_NEAR(p.values[k], 2.0 - 2.0 * std::cos(M_PI * static_cast<double>(k) / n), 1e-9);
  }
  EXPECT_THROW(jacobi_eigenvalues({1.0, 2.0, 3.0}, 2), std::invalid_argument);
}

TEST(Jacobi, AgreesWithExactCountsOnRandomGraphs) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Graph g = erdos_renyi(12, 0.3, seed);
    const ExactSpectrum exact(g);
    const auto values = resolved_spectrum(g, exact);
    ASSERT_EQ(values.size(), 12u);
    std::size_t below_two = 0;
    for (const Eigenvalue& e : values) {
      if (e.exact ? *e.exact < 2 : e.approx < 2.0) ++below_two;
    }
    EXPECT_EQ(below_two, exact.below(q(2))) << seed;
  }
}

TEST(ComplementSpectrum, MatchesDirectComputation) {
  const Graph g = parse_graph6("DyG");
  const FloatSpectrum s = float_spectrum(laplacian_matrix(g));
  const auto c = complement_spectrum<double>(s.values, 5, 1e-9);
  const FloatSpectrum direct = float_spectrum(laplacian_matrix(complement(g)));
  for (std::size_t i = 0; i < 5; ++i) EXPECT_NEAR(c[i], direct.values[i], 1e-9);

  const std::vector<Rational> exact = {q(0), q(1), q(3)};
  EXPECT_EQ(complement_spectrum<Rational>(exact, 3), (std::vector<Rational>{q(0), q(0), q(2)}));
  const std::vector<double> bad = {0.5, 1.0};
  EXPECT_THROW(complement_spectrum<double>(bad, 2), std::invalid_argument);
  EXPECT_THROW(complement_spectrum<double>(bad, 3), std::invalid_argument);
}

TEST(ResolvedSpectrum, SnapsIntegerEigenvalues) {
  const auto values = resolved_spectrum(star_graph(5));
  ASSERT_EQ(values.size(), 5u);
  for (const Eigenvalue& e : values) ASSERT_TRUE(e.exact.has_value());
  EXPECT_EQ(*values.front().exact, 0);
  EXPECT_EQ(*values.back().exact, 5);

  const auto path = resolved_spectrum(path_graph(5));
  std::size_t snapped = 0;
  for (const Eigenvalue& e : path) snapped += e.exact.has_value();
  EXPECT_EQ(snapped, 1u);  // only 0; the others are irrational
}

TEST(ProductCount, CountsPairsWithExactAndFloatValues) {
  // L(K_2) = {0, 2}; K_2 x K_2 = C_4 with spectrum 0, 2, 2, 4.
  const auto k2 = resolved_spectrum(complete_graph(2));
  const ProductCount c = product_count(k2, k2, Interval::zero_one());
  EXPECT_EQ(c.count, 1u);
  EXPECT_EQ(c.borderline, 0u);
  EXPECT_EQ(product_count(k2, k2, Interval::top()).count, 1u);  // (3,4]
  EXPECT_EQ(product_count(k2, k2, Interval::closed(Endpoint::fixed(2), Endpoint::fixed(2))).count, 2u);
}

TEST(ProductCount, FlagsBorderlinePairs) {
  const std::vector<double> a = {0.5, 1.0 - 1e-9};
  const std::vector<double> b = {0.0};
  const ProductCount c = product_count(from_floats(a), from_floats(b), Interval::zero_one());
  EXPECT_EQ(c.count, 2u);
  EXPECT_EQ(c.borderline, 1u);
}

TEST(ProductCount, DirectAndComposedAgree) {
  const std::vector<Graph> graphs = {path_graph(4), cycle_graph(5), star_graph(4), parse_graph6("DyG")};
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      const auto composed = product_count(resolved_spectrum(g), resolved_spectrum(h), Interval::zero_one());
      const std::size_t direct = count_interval_exact(cartesian_product(g, h), Interval::zero_one()).count;
      if (composed.borderline == 0) {
        EXPECT_EQ(composed.count, direct);
      }
    }
  }
}
