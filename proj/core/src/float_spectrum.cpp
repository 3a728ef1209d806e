#include "lapdom/float_spectrum.hpp"

#include <cmath>
#include <limits>

namespace lapdom {

namespace {

double off_diagonal_square(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) sum += 2.0 * a[i * n + j] * a[i * n + j];
  }
  return sum;
}

}  // namespace

FloatSpectrum jacobi_eigenvalues(std::vector<double> a, std::size_t n, std::size_t max_sweeps) {
  if (a.size() != n * n) throw std::invalid_argument("matrix storage does not match n");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a[i * n + j] != a[j * n + i]) throw std::invalid_argument("Jacobi eigensolver needs a symmetric matrix");
    }
  }
  double total = 0.0;
  for (double x : a) total += x * x;
  const double target = std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() *
                        std::max(total, std::numeric_limits<double>::min());

  FloatSpectrum out;
  double off = off_diagonal_square(a, n);
  while (off > target) {
    if (out.sweeps == max_sweeps) {
      throw ConvergenceError("Jacobi eigensolver did not converge in " + std::to_string(max_sweeps) + " sweeps");
    }
    ++out.sweeps;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        a[p * n + p] = app - t * apq;
        a[q * n + q] = aqq + t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
      }
    }
    off = off_diagonal_square(a, n);
  }
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = a[i * n + i];
  std::sort(out.values.begin(), out.values.end());
  out.residual_bound = std::sqrt(off);
  return out;
}

FloatSpectrum float_spectrum(const IntMatrix& m, std::size_t max_sweeps) {
  const std::size_t n = m.size();
  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<double>(m(i, j));
  }
  return jacobi_eigenvalues(std::move(a), n, max_sweeps);
}

std::vector<Eigenvalue> from_floats(std::span<const double> values) {
  std::vector<Eigenvalue> out;
  out.reserve(values.size());
  for (double v : values) out.push_back({v, std::nullopt});
  std::sort(out.begin(), out.end(), [](const Eigenvalue& x, const Eigenvalue& y) { return x.approx < y.approx; });
  return out;
}

std::vector<Eigenvalue> from_exact(std::span<const Rational> values) {
  std::vector<Eigenvalue> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back({v.get_d(), v});
  std::sort(out.begin(), out.end(), [](const Eigenvalue& x, const Eigenvalue& y) { return x.approx < y.approx; });
  return out;
}

std::vector<Eigenvalue> resolved_spectrum(const Graph& g, MatrixVariant variant, const ExactConfig& config) {
  std::optional<ExactSpectrum> exact;
  try {
    exact.emplace(g, variant, config);
  } catch (const CapExceeded&) {
    return from_floats(float_spectrum(graph_matrix(g, variant)).values);
  }
  return resolved_spectrum(g, *exact);
}

std::vector<Eigenvalue> resolved_spectrum(const Graph& g, const ExactSpectrum& exact) {
  const FloatSpectrum fs = float_spectrum(graph_matrix(g, exact.variant()));
  std::vector<Eigenvalue> out = from_floats(fs.values);
  // Eigenvalues lie in [0, 2 * max_degree].
  const std::size_t top = 2 * g.max_degree();
  std::vector<char> taken(out.size(), 0);
  for (std::size_t k = 0; k <= top; ++k) {
    std::size_t mult = exact.at(Rational(static_cast<unsigned long>(k)));
    const double target = static_cast<double>(k);
    while (mult-- > 0) {
      std::size_t best = out.size();
      for (std::size_t i = 0; i < out.size(); ++i) {
        if (taken[i]) continue;
        if (best == out.size() || std::abs(out[i].approx - target) < std::abs(out[best].approx - target)) best = i;
      }
      if (best == out.size() || std::abs(out[best].approx - target) > 1e-6 + fs.residual_bound) {
        throw std::logic_error("float spectrum disagrees with exact integer eigenvalue " + std::to_string(k));
      }
      taken[best] = 1;
      out[best].exact = Rational(static_cast<unsigned long>(k));
    }
  }
  return out;
}

ProductCount product_count(std::span<const Eigenvalue> a, std::span<const Eigenvalue> b,
                           const Interval& interval, double margin) {
  const ResolvedInterval r = interval.resolve(a.size() * b.size());
  ProductCount out;
  if (r.empty()) return out;
  const double lo = r.lo.get_d();
  const double hi = r.hi.get_d();

  std::vector<Eigenvalue> sorted_b(b.begin(), b.end());
  std::sort(sorted_b.begin(), sorted_b.end(),
            [](const Eigenvalue& x, const Eigenvalue& y) { return x.approx < y.approx; });
  std::vector<double> keys;
  keys.reserve(sorted_b.size());
  for (const auto& e : sorted_b) keys.push_back(e.approx);

  const auto float_contains = [&](double s) {
    const bool above = r.lo_closed ? s >= lo : s > lo;
    const bool below = r.hi_closed ? s <= hi : s < hi;
    return above && below;
  };
  const auto near_endpoint = [&](double s) { return std::abs(s - lo) <= margin || std::abs(s - hi) <= margin; };

  for (const Eigenvalue& x : a) {
    const auto first = std::lower_bound(keys.begin(), keys.end(), lo - x.approx - margin);
    const auto last = std::upper_bound(keys.begin(), keys.end(), hi - x.approx + margin);
    // Values strictly inside the margin-shrunk interval need no inspection.
    auto inner_first = last;
    auto inner_last = last;
    if (lo + margin < hi - margin) {
      inner_first = std::upper_bound(first, last, lo - x.approx + margin);
      inner_last = std::lower_bound(inner_first, last, hi - x.approx - margin);
      out.count += static_cast<std::size_t>(inner_last - inner_first);
    }
    for (auto it = first; it != last; ++it) {
      if (it >= inner_first && it < inner_last) continue;
      const Eigenvalue& y = sorted_b[static_cast<std::size_t>(it - keys.begin())];
      if (x.exact && y.exact) {
        if (r.contains(*x.exact + *y.exact)) ++out.count;
        continue;
      }
      const double s = x.approx + y.approx;
      if (near_endpoint(s)) ++out.borderline;
      if (float_contains(s)) ++out.count;
    }
  }
  return out;
}

}  // namespace lapdom
