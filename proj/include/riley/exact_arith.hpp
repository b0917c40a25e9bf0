#pragma once

// Dense univariate polynomials over arbitrary-precision integers.

#include <algorithm>
#include <complex>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace riley {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

/// Polynomial degree with an explicit minus-infinity for the zero polynomial.
class Degree {
 public:
  constexpr Degree() noexcept = default;
  constexpr explicit Degree(std::size_t d) noexcept : value_(d) {}

  static constexpr Degree minus_infinity() noexcept { return Degree(); }

  constexpr bool is_minus_infinity() const noexcept { return !value_.has_value(); }

  std::size_t value() const {
    if (!value_) throw std::logic_error("degree of the zero polynomial is minus infinity");
    return *value_;
  }

  friend constexpr bool operator==(const Degree&, const Degree&) noexcept = default;
  friend constexpr std::strong_ordering operator<=>(const Degree& a, const Degree& b) noexcept {
    if (!a.value_ || !b.value_) return a.value_.has_value() <=> b.value_.has_value();
    return *a.value_ <=> *b.value_;
  }

 private:
  std::optional<std::size_t> value_;
};

/// Element of Z[u]. Coefficients are stored in ascending degree order and
/// always normalized (no trailing zeros); the zero polynomial is empty.
class IntPoly {
 public:
  IntPoly() = default;

  explicit IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  IntPoly(std::initializer_list<long long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long long c : coeffs) coeffs_.emplace_back(c);
    trim();
  }

  static IntPoly constant(Integer c) { return IntPoly(std::vector<Integer>{std::move(c)}); }

  static IntPoly monomial(Integer c, std::size_t power) {
    std::vector<Integer> v(power + 1);
    v[power] = std::move(c);
    return IntPoly(std::move(v));
  }

  const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return coeffs_.empty(); }

  Degree degree() const noexcept {
    return coeffs_.empty() ? Degree::minus_infinity() : Degree(coeffs_.size() - 1);
  }

  /// Coefficient of u^k; zero beyond the degree.
  Integer coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }

  const Integer& leading() const {
    if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
    return coeffs_.back();
  }

  IntPoly operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
  }

  IntPoly& operator+=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    trim();
    return *this;
  }

  IntPoly& operator-=(const IntPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    trim();
    return *this;
  }

  IntPoly& operator*=(const IntPoly& rhs) { return *this = *this * rhs; }

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }

  friend IntPoly operator*(const IntPoly& f, const IntPoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Integer> out(f.coeffs_.size() + g.coeffs_.size() - 1);
    for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
      if (f.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < g.coeffs_.size(); ++j) out[i + j] += f.coeffs_[i] * g.coeffs_[j];
    }
    return IntPoly(std::move(out));
  }

  friend bool operator==(const IntPoly&, const IntPoly&) = default;

  /// Total order used for grouping: by degree, then coefficients from u^0 up.
  friend std::strong_ordering operator<=>(const IntPoly& a, const IntPoly& b) {
    if (auto c = a.coeffs_.size() <=> b.coeffs_.size(); c != 0) return c;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
      if (a.coeffs_[k] < b.coeffs_[k]) return std::strong_ordering::less;
      if (b.coeffs_[k] < a.coeffs_[k]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

inline IntPoly poly_add(const IntPoly& f, const IntPoly& g) { return f + g; }
inline IntPoly poly_mul(const IntPoly& f, const IntPoly& g) { return f * g; }

/// Exact Horner evaluation.
inline Integer eval(const IntPoly& f, const Integer& a) {
  Integer acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * a + *it;
  return acc;
}

/// Horner evaluation in double-precision complex arithmetic.
inline Complex eval(const IntPoly& f, Complex z) {
  Complex acc{0.0, 0.0};
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + Complex(it->convert_to<double>(), 0.0);
  return acc;
}

/// Sum of |c_k| |z|^k; the scale against which a complex evaluation's
/// rounding error is measured.
inline double eval_magnitude(const IntPoly& f, Complex z) {
  const double r = std::abs(z);
  double acc = 0.0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * r + std::abs(it->convert_to<double>());
  return acc;
}

inline IntPoly derivative(const IntPoly& f) {
  if (f.coeffs().size() <= 1) return {};
  std::vector<Integer> d(f.coeffs().size() - 1);
  for (std::size_t k = 1; k < f.coeffs().size(); ++k) d[k - 1] = f.coeffs()[k] * static_cast<unsigned>(k);
  return IntPoly(std::move(d));
}

/// gcd of the coefficients; zero for the zero polynomial.
inline Integer content(const IntPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) g = boost::multiprecision::gcd(g, c);
  return g;
}

struct Divisibility {
  bool divides = false;
  /// Quotient g / f over Q, present only when divisible.
  std::optional<std::vector<Rational>> rational_quotient;
  /// The same quotient when every coefficient is an integer.
  std::optional<IntPoly> quotient;
};

/// Decides whether f divides g in Q[u] by exact rational long division.
inline Divisibility poly_divides(const IntPoly& f, const IntPoly& g) {
  if (f.is_zero()) throw std::domain_error("division by the zero polynomial");
  Divisibility result;
  if (g.is_zero()) {
    result.divides = true;
    result.rational_quotient.emplace();
    result.quotient.emplace();
    return result;
  }
  const std::size_t df = f.coeffs().size() - 1;
  const std::size_t dg = g.coeffs().size() - 1;
  if (dg < df) return result;

  std::vector<Rational> rem(g.coeffs().begin(), g.coeffs().end());
  std::vector<Rational> q(dg - df + 1);
  const Rational lead(f.leading());
  for (std::size_t k = dg - df + 1; k-- > 0;) {
    const Rational t = rem[k + df] / lead;
    q[k] = t;
    if (t == 0) continue;
    for (std::size_t j = 0; j <= df; ++j) rem[k + j] -= t * Rational(f.coeffs()[j]);
  }
  for (std::size_t j = 0; j < df; ++j)
    if (rem[j] != 0) return result;

  result.divides = true;
  const bool integral = std::all_of(q.begin(), q.end(), [](const Rational& c) {
    return boost::multiprecision::denominator(c) == 1;
  });
  if (integral) {
    std::vector<Integer> qi;
    qi.reserve(q.size());
    for (const auto& c : q) qi.push_back(boost::multiprecision::numerator(c));
    result.quotient = IntPoly(std::move(qi));
  }
  result.rational_quotient = std::move(q);
  return result;
}

/// Renders in ascending powers, e.g. "1 - 2u + u^2 - u^3".
inline std::string to_string(const IntPoly& f, char var = 'u') {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < f.coeffs().size(); ++k) {
    const Integer& c = f.coeffs()[k];
    if (c.is_zero()) continue;
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const IntPoly& f) { return os << to_string(f); }

}  // namespace riley
