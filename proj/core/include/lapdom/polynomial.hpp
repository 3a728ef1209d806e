#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace lapdom {

using BigInt = mpz_class;
using Rational = mpq_class;

/// p / q in lowest terms.
inline Rational fraction(std::size_t p, std::size_t q) {
  Rational r(static_cast<unsigned long>(p), static_cast<unsigned long>(q));
  r.canonicalize();
  return r;
}

/// Polynomial over Z, coefficients in ascending degree. The zero polynomial
/// has no coefficients and degree -1.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<BigInt> ascending);

  static IntPolynomial constant(BigInt c);
  /// b*x - a, i.e. the primitive linear factor vanishing at a/b.
  static IntPolynomial linear_root(const Rational& root);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  const BigInt& coefficient(std::size_t i) const { return coeffs_[i]; }
  const BigInt& leading() const { return coeffs_.back(); }

  IntPolynomial derivative() const;
  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPolynomial primitive_part() const;

  /// Sign (-1, 0, 1) of the value at a rational point.
  int sign_at(const Rational& t) const;
  /// Sign as x -> -infinity.
  int sign_at_negative_infinity() const;
  Rational evaluate(const Rational& t) const;

  IntPolynomial operator-() const;
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// Quotient a / b when b divides a exactly over Q and the quotient is
/// integral (true whenever b is primitive). Throws std::domain_error otherwise.
IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b);

/// Positive multiple of the remainder of a modulo b (pseudo-division with
/// the sign of lc(b)^k corrected).
IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Primitive gcd with positive leading coefficient.
IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);

/// Square-free factors p_1, p_2, ... with p = c * prod p_i^i (Yun), each
/// primitive; empty entries (constant 1) mark multiplicities with no roots.
std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& p);

/// Sturm chain p, p', -rem, ... scaled by positive factors.
class SturmSequence {
 public:
  explicit SturmSequence(const IntPolynomial& square_free);

  /// Number of distinct real roots strictly below t.
  std::size_t roots_below(const Rational& t) const;
  std::size_t distinct_real_roots() const;

 private:
  std::size_t variations_at(const Rational& t) const;
  std::size_t variations_at_negative_infinity() const;
  std::size_t variations_at_positive_infinity() const;

  std::vector<IntPolynomial> chain_;
};

/// Real roots of p strictly below t, counted with multiplicity. p nonzero.
std::size_t count_below(const IntPolynomial& p, const Rational& t);

/// Multiplicity of t as a root of p (0 if p(t) != 0), by repeated deflation.
std::size_t multiplicity_at(const IntPolynomial& p, const Rational& t);

/// Reusable counter over one polynomial: the square-free decomposition and
/// the Sturm chains are built once.
class RootCounter {
 public:
  explicit RootCounter(const IntPolynomial& p);

  std::size_t below(const Rational& t) const;
  std::size_t at(const Rational& t) const;
  std::size_t degree() const { return degree_; }

 private:
  struct Factor {
    IntPolynomial poly;
    SturmSequence sturm;
    std::size_t multiplicity;
  };
  std::vector<Factor> factors_;
  std::size_t degree_ = 0;
};

/// Dense square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), data_(n * n, 0) {}

  std::size_t size() const { return n_; }
  std::int64_t& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  std::int64_t operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }
  bool symmetric() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::int64_t> data_;
};

class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultExactCap = 80;

/// det(xI - M) by Faddeev-LeVerrier over big integers. Every division by k
/// is exact. Throws CapExceeded when M is larger than `cap`.
IntPolynomial char_poly(const IntMatrix& m, std::size_t cap = kDefaultExactCap);

/// Parses "p", "p/q" or a decimal such as "1.5" into a rational.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

}  // namespace lapdom
