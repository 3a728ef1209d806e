#include "lapdom/polynomial.hpp"

#include <cctype>
#include <algorithm>
#include <sstream>

namespace lapdom {

namespace {

int sign_of(const BigInt& v) { return mpz_sgn(v.get_mpz_t()); }

/// Divides by the (positive) content without touching the sign.
IntPolynomial scale_down(const IntPolynomial& p) {
  if (p.is_zero()) return p;
  const BigInt c = p.content();
  if (c == 1) return p;
  std::vector<BigInt> out = p.coefficients();
  for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPolynomial(std::move(out));
}

}  // namespace

IntPolynomial::IntPolynomial(std::vector<BigInt> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

IntPolynomial IntPolynomial::constant(BigInt c) { return IntPolynomial({std::move(c)}); }

IntPolynomial IntPolynomial::linear_root(const Rational& root) {
  Rational r = root;
  r.canonicalize();
  return IntPolynomial({-BigInt(r.get_num()), BigInt(r.get_den())});
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<BigInt> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPolynomial(std::move(out));
}

BigInt IntPolynomial::content() const {
  BigInt g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  IntPolynomial out = scale_down(*this);
  return sign_of(out.leading()) < 0 ? -out : out;
}

int IntPolynomial::sign_at(const Rational& t) const {
  if (is_zero()) return 0;
  // Homogenized Horner: sum c_i a^i b^(d-i) has the sign of p(a/b) for b > 0.
  const BigInt& a = t.get_num();
  const BigInt& b = t.get_den();
  BigInt acc = coeffs_.back();
  BigInt power = 1;
  for (int i = degree() - 1; i >= 0; --i) {
    power *= b;
    acc *= a;
    mpz_addmul(acc.get_mpz_t(), coeffs_[i].get_mpz_t(), power.get_mpz_t());
  }
  return sign_of(acc);
}

int IntPolynomial::sign_at_negative_infinity() const {
  if (is_zero()) return 0;
  const int s = sign_of(leading());
  return degree() % 2 == 0 ? s : -s;
}

Rational IntPolynomial::evaluate(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + Rational(*it);
  return acc;
}

IntPolynomial IntPolynomial::operator-() const {
  std::vector<BigInt> out = coeffs_;
  for (auto& c : out) c = -c;
  return IntPolynomial(std::move(out));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPolynomial(std::move(out));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<BigInt> out(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(out));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    const bool negative = sign_of(c) < 0;
    const BigInt mag = abs(c);
    if (first) {
      if (negative) out << "-";
    } else {
      out << (negative ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial exact_divide(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) {
    if (a.is_zero()) return {};
    throw std::domain_error("polynomial division is not exact");
  }
  std::vector<BigInt> rem = a.coefficients();
  std::vector<BigInt> quot(a.degree() - b.degree() + 1);
  const auto& bc = b.coefficients();
  const BigInt& lead = b.leading();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigInt& top = rem[k + b.degree()];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("polynomial quotient is not integral");
    }
    BigInt q;
    mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
    for (std::size_t j = 0; j < bc.size(); ++j) {
      mpz_submul(rem[k + j].get_mpz_t(), q.get_mpz_t(), bc[j].get_mpz_t());
    }
    quot[k] = std::move(q);
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("polynomial division is not exact");
  }
  return IntPolynomial(std::move(quot));
}

IntPolynomial positive_pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("pseudo-remainder by zero");
  std::vector<BigInt> rem = a.coefficients();
  const auto& bc = b.coefficients();
  const BigInt& lead = b.leading();
  const int db = b.degree();
  std::size_t scalings = 0;
  int dr = static_cast<int>(rem.size()) - 1;
  while (dr >= db) {
    const BigInt top = rem[dr];
    // rem <- lead * rem - top * x^(dr - db) * b
    for (auto& r : rem) r *= lead;
    ++scalings;
    const int shift = dr - db;
    for (int j = 0; j <= db; ++j) mpz_submul(rem[shift + j].get_mpz_t(), top.get_mpz_t(), bc[j].get_mpz_t());
    while (dr >= 0 && rem[dr] == 0) --dr;
    rem.resize(dr + 1);
  }
  IntPolynomial out(std::move(rem));
  if (sign_of(lead) < 0 && scalings % 2 == 1) out = -out;
  return scale_down(out);
}

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
  IntPolynomial x = a.primitive_part();
  IntPolynomial y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    IntPolynomial r = positive_pseudo_remainder(x, y).primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  if (x.degree() == 0) return IntPolynomial::constant(1);
  return x;
}

std::vector<IntPolynomial> square_free_decomposition(const IntPolynomial& input) {
  if (input.is_zero()) throw std::invalid_argument("square-free decomposition of the zero polynomial");
  std::vector<IntPolynomial> factors;
  const IntPolynomial p = input.primitive_part();
  if (p.degree() <= 0) return factors;
  const IntPolynomial dp = p.derivative();
  const IntPolynomial a0 = gcd(p, dp);
  IntPolynomial b = exact_divide(p, a0);
  IntPolynomial c = exact_divide(dp, a0);
  IntPolynomial d = c - b.derivative();
  while (b.degree() > 0) {
    IntPolynomial a = gcd(b, d);
    b = exact_divide(b, a);
    c = exact_divide(d, a);
    d = c - b.derivative();
    factors.push_back(std::move(a));
  }
  return factors;
}

SturmSequence::SturmSequence(const IntPolynomial& square_free) {
  if (square_free.is_zero()) throw std::invalid_argument("Sturm sequence of the zero polynomial");
  chain_.push_back(scale_down(square_free));
  if (square_free.degree() == 0) return;
  chain_.push_back(scale_down(square_free.derivative()));
  while (chain_.back().degree() > 0) {
    IntPolynomial r = positive_pseudo_remainder(chain_[chain_.size() - 2], chain_.back());
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

std::size_t SturmSequence::variations_at(const Rational& t) const {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& s : chain_) {
    const int sign = s.sign_at(t);
    if (sign == 0) continue;
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

std::size_t SturmSequence::variations_at_negative_infinity() const {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& s : chain_) {
    const int sign = s.sign_at_negative_infinity();
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

std::size_t SturmSequence::variations_at_positive_infinity() const {
  std::size_t changes = 0;
  int previous = 0;
  for (const auto& s : chain_) {
    const int sign = sign_of(s.leading());
    if (previous != 0 && sign != previous) ++changes;
    previous = sign;
  }
  return changes;
}

std::size_t SturmSequence::roots_below(const Rational& t) const {
  // V(-inf) - V(t) counts the roots in (-inf, t].
  const std::size_t at_or_below = variations_at_negative_infinity() - variations_at(t);
  return chain_.front().sign_at(t) == 0 ? at_or_below - 1 : at_or_below;
}

std::size_t SturmSequence::distinct_real_roots() const {
  return variations_at_negative_infinity() - variations_at_positive_infinity();
}

RootCounter::RootCounter(const IntPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("root counting on the zero polynomial");
  degree_ = static_cast<std::size_t>(p.degree());
  std::size_t multiplicity = 0;
  for (auto& f : square_free_decomposition(p)) {
    ++multiplicity;
    if (f.degree() <= 0) continue;
    SturmSequence sturm(f);
    factors_.push_back({std::move(f), std::move(sturm), multiplicity});
  }
}

std::size_t RootCounter::below(const Rational& t) const {
  std::size_t total = 0;
  for (const auto& f : factors_) total += f.multiplicity * f.sturm.roots_below(t);
  return total;
}

std::size_t RootCounter::at(const Rational& t) const {
  // Square-free factors are pairwise coprime, so at most one vanishes at t.
  for (const auto& f : factors_) {
    if (f.poly.sign_at(t) == 0) return f.multiplicity;
  }
  return 0;
}

std::size_t count_below(const IntPolynomial& p, const Rational& t) { return RootCounter(p).below(t); }

std::size_t multiplicity_at(const IntPolynomial& p, const Rational& t) {
  if (p.is_zero()) throw std::invalid_argument("multiplicity in the zero polynomial");
  const IntPolynomial linear = IntPolynomial::linear_root(t);
  IntPolynomial rest = p;
  std::size_t count = 0;
  while (rest.degree() > 0 && rest.sign_at(t) == 0) {
    rest = exact_divide(rest, linear);
    ++count;
  }
  return count;
}

bool IntMatrix::symmetric() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

IntPolynomial char_poly(const IntMatrix& a, std::size_t cap) {
  const std::size_t n = a.size();
  if (n > cap) {
    throw CapExceeded("characteristic polynomial of order " + std::to_string(n) +
                      " exceeds the exact cap " + std::to_string(cap));
  }
  std::vector<std::vector<std::pair<std::size_t, long>>> rows(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (a(i, j) != 0) rows[i].emplace_back(j, static_cast<long>(a(i, j)));
    }
  }

  std::vector<BigInt> coeffs(n + 1);
  coeffs[n] = 1;
  std::vector<BigInt> m(n * n);
  std::vector<BigInt> next(n * n);
  BigInt trace;
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0.
    if (k > 1) {
      for (auto& x : next) x = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (const auto& [l, v] : rows[i]) {
          for (std::size_t j = 0; j < n; ++j) {
            mpz_ptr dst = next[i * n + j].get_mpz_t();
            mpz_srcptr src = m[l * n + j].get_mpz_t();
            if (v > 0) {
              mpz_addmul_ui(dst, src, static_cast<unsigned long>(v));
            } else {
              mpz_submul_ui(dst, src, static_cast<unsigned long>(-v));
            }
          }
        }
      }
      std::swap(m, next);
    }
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += coeffs[n - k + 1];

    // c_{n-k} = -tr(A M_k) / k
    trace = 0;
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto& [l, v] : rows[i]) {
        mpz_ptr dst = trace.get_mpz_t();
        mpz_srcptr src = m[l * n + i].get_mpz_t();
        if (v > 0) {
          mpz_addmul_ui(dst, src, static_cast<unsigned long>(v));
        } else {
          mpz_submul_ui(dst, src, static_cast<unsigned long>(-v));
        }
      }
    }
    BigInt& c = coeffs[n - k];
    mpz_divexact_ui(c.get_mpz_t(), trace.get_mpz_t(), static_cast<unsigned long>(k));
    c = -c;
  }
  return IntPolynomial(std::move(coeffs));
}

Rational parse_rational(const std::string& text) {
  std::string s = text;
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }), s.end());
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = s.find('.');
  Rational q;
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t scale = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") throw std::invalid_argument("bad rational literal '" + text + "'");
    if (digits.front() == '+') digits.erase(0, 1);
    BigInt num;
    if (num.set_str(digits, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
    BigInt den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, scale);
    q = Rational(num, den);
  } else {
    if (s.front() == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + text + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

}  // namespace lapdom
