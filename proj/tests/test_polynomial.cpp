#include <gtest/gtest.h>

#include "lapdom/generators.hpp"
#include "lapdom/graph6.hpp"
#include "lapdom/interval.hpp"
#include "lapdom/polynomial.hpp"
#include "lapdom/spectral.hpp"
#include "support.hpp"

using namespace lapdom;

namespace {

IntPolynomial poly(std::initializer_list<long> ascending) {
  std::vector<BigInt> c;
  for (long v : ascending) c.emplace_back(v);
  return IntPolynomial(std::move(c));
}

IntPolynomial power(const IntPolynomial& p, int k) {
  IntPolynomial out = IntPolynomial::constant(1);
  for (int i = 0; i < k; ++i) out = out * p;
  return out;
}

Rational q(long p, long d = 1) {
  Rational r(p, d);
  r.canonicalize();
  return r;
}

}  // namespace

TEST(Polynomial, ArithmeticAndTrim) {
  const IntPolynomial a = poly({1, 1});   // x + 1
  const IntPolynomial b = poly({-1, 1});  // x - 1
  EXPECT_EQ(a * b, poly({-1, 0, 1}));
  EXPECT_EQ((a - a).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(poly({0, 0, 0}).degree(), -1);
  EXPECT_EQ(poly({6, -4, 2}).content(), 2);
  EXPECT_EQ(poly({6, -4, -2}).primitive_part(), poly({-3, 2, 1}));
  EXPECT_EQ(poly({5, 3, 1}).derivative(), poly({3, 2}));
  EXPECT_EQ(IntPolynomial::linear_root(q(3, 2)), poly({-3, 2}));
}

TEST(Polynomial, SignsAndEvaluation) {
  const IntPolynomial p = poly({-2, 0, 1});  // x^2 - 2
  EXPECT_EQ(p.sign_at(q(3, 2)), 1);
  EXPECT_EQ(p.sign_at(q(7, 5)), -1);
  EXPECT_EQ(p.sign_at_negative_infinity(), 1);
  EXPECT_EQ(poly({0, 0, 0, 1}).sign_at_negative_infinity(), -1);
  EXPECT_EQ(p.evaluate(q(1, 2)), q(-7, 4));
  EXPECT_EQ(poly({-1, 2}).sign_at(q(1, 2)), 0);
}

TEST(Polynomial, ExactDivisionAndGcd) {
  const IntPolynomial f = poly({-1, 1}) * poly({2, 1}) * poly({-3, 2});
  EXPECT_EQ(exact_divide(f, poly({2, 1})), poly({-1, 1}) * poly({-3, 2}));
  EXPECT_THROW(exact_divide(f, poly({5, 1})), std::domain_error);
  const IntPolynomial g = poly({2, 1}) * poly({7, 0, 1});
  EXPECT_EQ(gcd(f, g), poly({2, 1}));
  EXPECT_EQ(gcd(poly({-1, 1}), poly({1, 1})), IntPolynomial::constant(1));
}

TEST(Polynomial, PseudoRemainderIsPositiveMultiple) {
  // x^3 + x + 1 mod 2x - 1: remainder value at 1/2 is 13/8 > 0.
  const IntPolynomial r = positive_pseudo_remainder(poly({1, 1, 0, 1}), poly({-1, 2}));
  ASSERT_EQ(r.degree(), 0);
  EXPECT_GT(r.leading(), 0);
}

TEST(Polynomial, SquareFreeDecomposition) {
  const IntPolynomial a = poly({-1, 1});
  const IntPolynomial b = poly({2, 1});
  const IntPolynomial c = poly({-2, 0, 1});
  const auto parts = square_free_decomposition(poly({3}) * a * power(b, 3) * power(c, 2));
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], a);
  EXPECT_EQ(parts[1], c);
  EXPECT_EQ(parts[2], b);
}

TEST(Polynomial, SturmCountsDistinctRoots) {
  // Roots -sqrt2, 1, sqrt2, 3.
  const IntPolynomial p = poly({-2, 0, 1}) * poly({-1, 1}) * poly({-3, 1});
  const SturmSequence s(p);
  EXPECT_EQ(s.distinct_real_roots(), 4u);
  EXPECT_EQ(s.roots_below(q(-2)), 0u);
  EXPECT_EQ(s.roots_below(q(0)), 1u);
  EXPECT_EQ(s.roots_below(q(1)), 1u);  // strict
  EXPECT_EQ(s.roots_below(q(141, 100)), 2u);
  EXPECT_EQ(s.roots_below(q(142, 100)), 3u);
  EXPECT_EQ(s.roots_below(q(4)), 4u);
  EXPECT_EQ(SturmSequence(poly({1, 0, 1})).distinct_real_roots(), 0u);
}

TEST(Polynomial, CountsWithMultiplicity) {
  const IntPolynomial p = power(poly({-1, 1}), 3) * power(poly({-1, -1, 1}), 2) * poly({0, 1});
  // Roots 0, 1 (x3), (1 +- sqrt5)/2 (x2 each): -0.618, 1.618.
  EXPECT_EQ(count_below(p, q(0)), 2u);
  EXPECT_EQ(count_below(p, q(1)), 3u);
  EXPECT_EQ(count_below(p, q(2)), 8u);
  EXPECT_EQ(multiplicity_at(p, q(1)), 3u);
  EXPECT_EQ(multiplicity_at(p, q(0)), 1u);
  EXPECT_EQ(multiplicity_at(p, q(1, 2)), 0u);
  const RootCounter rc(p);
  EXPECT_EQ(rc.degree(), 8u);
  EXPECT_EQ(rc.below(q(3, 2)), 6u);
  EXPECT_EQ(rc.at(q(1)), 3u);
  EXPECT_EQ(rc.at(q(2)), 0u);
}

TEST(CharPoly, MatchesReferenceCoefficients) {
  // Ascending coefficients of det(xI - L), computed with sympy.
  const std::vector<std::pair<std::string, std::vector<long>>> cases = {
      {"IheA@GUAo", {0, -20000, 66000, -94800, 77640, -39882, 13305, -2880, 390, -30, 1}},
      {"D]o", {0, 60, -92, 51, -12, 1}},
      {"Ehfw", {0, -726, 1045, -580, 155, -20, 1}},
      {"DyG", {0, 15, -40, 33, -10, 1}},
  };
  for (const auto& [g6, coeffs] : cases) {
    std::vector<BigInt> c;
    for (long v : coeffs) c.emplace_back(v);
    EXPECT_EQ(char_poly(laplacian_matrix(parse_graph6(g6))), IntPolynomial(c)) << g6;
  }
}

TEST(CharPoly, FigureOneTreeFactorization) {
  // sympy factorization of det(xI - L) for the 65-vertex tree.
  const IntPolynomial expected = poly({0, 1}) * power(poly({1, -3, 1}), 12) * power(poly({-1, 8, -6, 1}), 8) *
                                 poly({65, -116, 65, -14, 1}) * power(poly({1, -24, 29, -10, 1}), 3);
  EXPECT_EQ(char_poly(laplacian_matrix(figure1_tree())), expected);
}

TEST(CharPoly, AgreesWithInterpolatedDeterminants) {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Graph g = erdos_renyi(2 + seed % 8, 0.45, seed);
    for (const IntMatrix& m : {laplacian_matrix(g), signless_laplacian_matrix(g)}) {
      const auto reference = reference::interpolated_char_poly(m);
      const IntPolynomial p = char_poly(m);
      ASSERT_EQ(p.degree(), static_cast<int>(g.order()));
      for (std::size_t k = 0; k < reference.size(); ++k) {
        EXPECT_EQ(Rational(p.coefficient(k)), reference[k]) << seed << " coefficient " << k;
      }
    }
  }
}

TEST(CharPoly, EnforcesCap) {
  EXPECT_THROW(char_poly(laplacian_matrix(path_graph(10)), 9), CapExceeded);
  EXPECT_EQ(char_poly(IntMatrix(0)), IntPolynomial::constant(1));
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3"), q(3));
  EXPECT_EQ(parse_rational("-6/4"), q(-3, 2));
  EXPECT_EQ(parse_rational(" 1.25 "), q(5, 4));
  EXPECT_EQ(parse_rational("-0.5"), q(-1, 2));
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("abc"), std::invalid_argument);
  EXPECT_THROW(parse_rational(""), std::invalid_argument);
  EXPECT_EQ(to_string(q(25, 24)), "25/24");
  EXPECT_EQ(to_string(q(4, 2)), "2");
  EXPECT_EQ(fraction(30, 25), q(6, 5));
}

TEST(Intervals, ParseAndResolve) {
  const Interval top = Interval::parse("(n-1,n]");
  const ResolvedInterval r = top.resolve(5);
  EXPECT_EQ(r.lo, 4);
  EXPECT_EQ(r.hi, 5);
  EXPECT_FALSE(r.lo_closed);
  EXPECT_TRUE(r.hi_closed);
  EXPECT_FALSE(r.contains(q(4)));
  EXPECT_TRUE(r.contains(q(5)));
  EXPECT_EQ(top.to_string(), "(n-1,n]");

  const ResolvedInterval half = Interval::parse("[ 1/2 , 3/2 )").resolve(9);
  EXPECT_EQ(half.lo, q(1, 2));
  EXPECT_TRUE(half.contains(q(1, 2)));
  EXPECT_FALSE(half.contains(q(3, 2)));
  EXPECT_EQ(Interval::parse("[0,n+1/2]").resolve(3).hi, q(7, 2));
  EXPECT_EQ(Interval::zero_one().to_string(), "[0,1)");
  EXPECT_EQ(Interval::two_n().to_string(), "[2,n]");
}

TEST(Intervals, RejectsBadInput) {
  EXPECT_THROW(Interval::parse("[0,1"), std::invalid_argument);
  EXPECT_THROW(Interval::parse("0,1)"), std::invalid_argument);
  EXPECT_THROW(Interval::parse("[a,1)"), std::invalid_argument);
  EXPECT_THROW(Interval::two_n().resolve(1), std::invalid_argument);
  EXPECT_TRUE(Interval::parse("[1,1)").resolve(3).empty());
  EXPECT_FALSE(Interval::parse("[1,1]").resolve(3).empty());
}
