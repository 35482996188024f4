#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gyrolab {

/// Raised on inverse(0) or division by an exact zero.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised by Q2::parse on malformed text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Exact element a + b*sqrt(2) of the quadratic field Q(sqrt 2), with a and b
 * arbitrary-precision rationals kept in lowest terms.
 *
 * The representation is unique, so structural equality of (a, b) is value
 * equality. Ordering is the real-number order, decided by rational
 * comparisons only.
 */
class Q2 {
 public:
  Q2() = default;
  Q2(long v) : a_(v) {}  // NOLINT(google-explicit-constructor)
  Q2(int v) : a_(v) {}   // NOLINT(google-explicit-constructor)
  explicit Q2(mpq_class a, mpq_class b = 0);

  static Q2 sqrt2() { return Q2(0, 1); }
  /// num/den with den != 0.
  static Q2 rational(long num, long den);

  const mpq_class& rational_part() const { return a_; }
  const mpq_class& sqrt2_part() const { return b_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  /// -1, 0 or +1.
  int sign() const;

  Q2 conjugate() const { return Q2(a_, -b_); }
  /// Rational norm a^2 - 2 b^2; zero only for zero.
  mpq_class norm() const { return a_ * a_ - 2 * b_ * b_; }
  Q2 inverse() const;

  Q2 operator-() const { return Q2(-a_, -b_); }
  Q2& operator+=(const Q2& o);
  Q2& operator-=(const Q2& o);
  Q2& operator*=(const Q2& o);
  Q2& operator/=(const Q2& o) { return *this *= o.inverse(); }

  friend Q2 operator+(Q2 x, const Q2& y) { return x += y; }
  friend Q2 operator-(Q2 x, const Q2& y) { return x -= y; }
  friend Q2 operator*(Q2 x, const Q2& y) { return x *= y; }
  friend Q2 operator/(Q2 x, const Q2& y) { return x /= y; }

  friend bool operator==(const Q2& x, const Q2& y) {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend std::strong_ordering operator<=>(const Q2& x, const Q2& y);

  /// Double approximation. For output and tolerance-mode code only.
  double to_double() const;

  /// Canonical text, e.g. "3/2", "1+1*sqrt2", "-1/2*sqrt2", "0".
  std::string to_string() const;
  /// Accepts the canonical form plus shorthands such as "3", "sqrt2",
  /// "2*sqrt2", "1-sqrt2".
  static Q2 parse(std::string_view text);
  /// Exact rational from a decimal literal such as "50", "12.5", "-0.25".
  static Q2 from_decimal(std::string_view text);

 private:
  mpq_class a_{0};
  mpq_class b_{0};
};

inline Q2 abs(const Q2& x) { return x.sign() < 0 ? -x : x; }

std::ostream& operator<<(std::ostream& os, const Q2& x);

}  // namespace gyrolab
