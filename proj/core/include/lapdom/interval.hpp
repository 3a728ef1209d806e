#pragma once

#include <string>
#include <string_view>

#include "lapdom/polynomial.hpp"

namespace lapdom {

/// Interval endpoint, either a fixed rational or n + offset where n is the
/// order of the graph the interval is evaluated on.
struct Endpoint {
  Rational offset;
  bool relative_to_order = false;

  static Endpoint fixed(Rational value) { return {std::move(value), false}; }
  static Endpoint order(Rational offset = 0) { return {std::move(offset), true}; }

  Rational resolve(std::size_t n) const;
  std::string to_string() const;
};

/// Concrete interval, ready for comparisons.
struct ResolvedInterval {
  Rational lo;
  Rational hi;
  bool lo_closed = true;
  bool hi_closed = true;

  bool contains(const Rational& x) const;
  bool empty() const;
};

class Interval {
 public:
  Interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed);

  /// "[0,1)", "(n-1,n]", "[1/2, 3]", ...; the symbol n may carry a
  /// rational offset. Throws std::invalid_argument on bad syntax.
  static Interval parse(std::string_view text);

  static Interval closed(Endpoint lo, Endpoint hi) { return {std::move(lo), true, std::move(hi), true}; }
  static Interval closed_open(Endpoint lo, Endpoint hi) { return {std::move(lo), true, std::move(hi), false}; }
  static Interval open_closed(Endpoint lo, Endpoint hi) { return {std::move(lo), false, std::move(hi), true}; }
  static Interval open(Endpoint lo, Endpoint hi) { return {std::move(lo), false, std::move(hi), false}; }

  // The intervals the bound checks use.
  static Interval zero_one() { return closed_open(Endpoint::fixed(0), Endpoint::fixed(1)); }
  static Interval two_n() { return closed(Endpoint::fixed(2), Endpoint::order()); }
  static Interval one_n() { return closed(Endpoint::fixed(1), Endpoint::order()); }
  static Interval zero_two() { return closed_open(Endpoint::fixed(0), Endpoint::fixed(2)); }
  static Interval one_two() { return closed_open(Endpoint::fixed(1), Endpoint::fixed(2)); }
  static Interval top() { return open_closed(Endpoint::order(-1), Endpoint::order()); }
  static Interval open_two_n() { return open_closed(Endpoint::fixed(2), Endpoint::order()); }
  static Interval zero_n() { return closed(Endpoint::fixed(0), Endpoint::order()); }

  /// Throws std::invalid_argument when the resolved lo exceeds hi.
  ResolvedInterval resolve(std::size_t n) const;
  std::string to_string() const;

  const Endpoint& lo() const { return lo_; }
  const Endpoint& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }

 private:
  Endpoint lo_;
  Endpoint hi_;
  bool lo_closed_;
  bool hi_closed_;
};

}  // namespace lapdom
