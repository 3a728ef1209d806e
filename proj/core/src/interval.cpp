#include "lapdom/interval.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace lapdom {

Rational Endpoint::resolve(std::size_t n) const {
  Rational value = offset;
  if (relative_to_order) value += Rational(static_cast<unsigned long>(n));
  value.canonicalize();
  return value;
}

std::string Endpoint::to_string() const {
  if (!relative_to_order) return lapdom::to_string(offset);
  if (offset == 0) return "n";
  if (offset > 0) return "n+" + lapdom::to_string(offset);
  return "n-" + lapdom::to_string(-offset);
}

bool ResolvedInterval::contains(const Rational& x) const {
  const bool above_lo = lo_closed ? x >= lo : x > lo;
  const bool below_hi = hi_closed ? x <= hi : x < hi;
  return above_lo && below_hi;
}

bool ResolvedInterval::empty() const {
  if (lo > hi) return true;
  if (lo == hi) return !(lo_closed && hi_closed);
  return false;
}

Interval::Interval(Endpoint lo, bool lo_closed, Endpoint hi, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {}

namespace {

Endpoint parse_endpoint(std::string s, std::string_view whole) {
  if (s.empty()) throw std::invalid_argument("missing endpoint in interval '" + std::string(whole) + "'");
  if (s.front() == 'n') {
    const std::string rest = s.substr(1);
    if (rest.empty()) return Endpoint::order();
    if (rest.front() != '+' && rest.front() != '-') {
      throw std::invalid_argument("bad endpoint '" + s + "' in interval '" + std::string(whole) + "'");
    }
    Rational off = parse_rational(rest.substr(1));
    return Endpoint::order(rest.front() == '-' ? Rational(-off) : off);
  }
  try {
    return Endpoint::fixed(parse_rational(s));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad endpoint '" + s + "' in interval '" + std::string(whole) + "'");
  }
}

}  // namespace

Interval Interval::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.size() < 5 || (s.front() != '[' && s.front() != '(') || (s.back() != ']' && s.back() != ')')) {
    throw std::invalid_argument("interval '" + std::string(text) + "' must look like [a,b), (a,b], ...");
  }
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos) {
    throw std::invalid_argument("interval '" + std::string(text) + "' needs exactly one comma");
  }
  Endpoint lo = parse_endpoint(s.substr(1, comma - 1), text);
  Endpoint hi = parse_endpoint(s.substr(comma + 1, s.size() - comma - 2), text);
  return Interval(std::move(lo), s.front() == '[', std::move(hi), s.back() == ']');
}

ResolvedInterval Interval::resolve(std::size_t n) const {
  ResolvedInterval r{lo_.resolve(n), hi_.resolve(n), lo_closed_, hi_closed_};
  if (r.lo > r.hi) {
    throw std::invalid_argument("interval " + to_string() + " has lo > hi for n = " + std::to_string(n));
  }
  return r;
}

std::string Interval::to_string() const {
  return std::string(lo_closed_ ? "[" : "(") + lo_.to_string() + "," + hi_.to_string() +
         (hi_closed_ ? "]" : ")");
}

}  // namespace lapdom
