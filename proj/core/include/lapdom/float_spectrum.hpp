#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "lapdom/graph.hpp"
#include "lapdom/interval.hpp"
#include "lapdom/spectral.hpp"

namespace lapdom {

struct FloatSpectrum {
  /// Ascending.
  std::vector<double> values;
  /// Frobenius norm of the remaining off-diagonal part; every eigenvalue
  /// lies within this distance of the reported value (Weyl).
  double residual_bound = 0.0;
  std::size_t sweeps = 0;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultJacobiSweeps = 100;

/// Cyclic Jacobi eigenvalues of a symmetric row-major n x n matrix.
FloatSpectrum jacobi_eigenvalues(std::vector<double> matrix, std::size_t n,
                                 std::size_t max_sweeps = kDefaultJacobiSweeps);

FloatSpectrum float_spectrum(const IntMatrix& m, std::size_t max_sweeps = kDefaultJacobiSweeps);

/// Laplacian spectrum of the complement from an ascending Laplacian
/// spectrum of length n: {0} together with n - mu for every other mu.
/// Throws std::invalid_argument if the list cannot be a Laplacian spectrum.
template <typename T>
std::vector<T> complement_spectrum(std::span<const T> spectrum, std::size_t n, T zero_tolerance = T(0)) {
  if (spectrum.size() != n) throw std::invalid_argument("spectrum length differs from n");
  if (n == 0) return {};
  if (!std::is_sorted(spectrum.begin(), spectrum.end())) throw std::invalid_argument("spectrum must be ascending");
  const T& smallest = spectrum.front();
  if (smallest < -zero_tolerance || smallest > zero_tolerance) {
    throw std::invalid_argument("Laplacian spectrum must start at 0");
  }
  std::vector<T> out;
  out.reserve(n);
  out.push_back(T(0));
  const T order = T(static_cast<long>(n));
  for (std::size_t i = 1; i < n; ++i) out.push_back(order - spectrum[i]);
  std::sort(out.begin(), out.end());
  return out;
}

/// One eigenvalue: a float approximation, and the exact value when it is
/// known to be rational.
struct Eigenvalue {
  double approx = 0.0;
  std::optional<Rational> exact;
};

/// Float spectrum of the matrix with every integer eigenvalue replaced by
/// its exact value (rational eigenvalues of these integer matrices are
/// integers). Falls back to plain floats when no exact oracle is available.
std::vector<Eigenvalue> resolved_spectrum(const Graph& g, MatrixVariant variant = MatrixVariant::laplacian,
                                          const ExactConfig& config = {});
/// Same, snapping against an exact oracle built for g and `variant`.
std::vector<Eigenvalue> resolved_spectrum(const Graph& g, const ExactSpectrum& exact);

std::vector<Eigenvalue> from_floats(std::span<const double> values);
std::vector<Eigenvalue> from_exact(std::span<const Rational> values);

inline constexpr double kBorderlineMargin = 1e-7;

struct ProductCount {
  std::size_t count = 0;
  /// Pairs decided by floating point within the margin of an endpoint.
  std::size_t borderline = 0;
};

/// Number of pairs (i, j) with a_i + b_j in the interval, where "n"
/// resolves to |a| * |b|. Pairs of exact values are decided exactly.
ProductCount product_count(std::span<const Eigenvalue> a, std::span<const Eigenvalue> b,
                           const Interval& interval, double margin = kBorderlineMargin);

}  // namespace lapdom
