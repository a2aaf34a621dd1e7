#pragma once

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include "phasestar/error.hpp"

namespace phasestar {

/// Arbitrary-precision rational in canonical form (gcd(num, den) = 1, den > 0).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class value);

  /// Parses "p", "-p", "p/q" or "-p/q". Throws ParseError.
  static Rational parse(std::string_view text);

  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);

  std::string numerator() const { return value_.get_num().get_str(); }
  std::string denominator() const { return value_.get_den().get_str(); }
  const mpq_class& raw() const noexcept { return value_; }

  bool is_zero() const noexcept { return sgn(value_) == 0; }
  int sign() const noexcept { return sgn(value_); }

  Rational pow(unsigned exponent) const;

  /// Nearest double. Throws OverflowError when the magnitude exceeds the double range.
  double to_double() const;

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-value_)); }
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws DivisionByZero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& lhs, const Rational& rhs) {
    return lhs.value_ == rhs.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

/// Complex number with exact rational parts; the coefficient field of the symbolic core.
class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(long re) : re_(re) {}                 // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  /// Parses "re", "im*i", "re+im*i" or "re-im*i" (also a bare "i" / "-i").
  static ExactComplex parse(std::string_view text);

  const Rational& re() const noexcept { return re_; }
  const Rational& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const noexcept { return im_.is_zero(); }

  ExactComplex conj() const { return {re_, -im_}; }
  ExactComplex pow(unsigned exponent) const;

  /// Throws OverflowError when either part exceeds the double range.
  std::complex<double> to_double() const { return {re_.to_double(), im_.to_double()}; }

  /// "re" when real, otherwise "re+im*i" / "re-im*i" (re omitted when zero).
  std::string to_string() const;

  ExactComplex operator-() const { return {-re_, -im_}; }
  ExactComplex& operator+=(const ExactComplex& rhs);
  ExactComplex& operator-=(const ExactComplex& rhs);
  ExactComplex& operator*=(const ExactComplex& rhs);
  /// Throws DivisionByZero.
  ExactComplex& operator/=(const ExactComplex& rhs);

  friend ExactComplex operator+(ExactComplex lhs, const ExactComplex& rhs) { return lhs += rhs; }
  friend ExactComplex operator-(ExactComplex lhs, const ExactComplex& rhs) { return lhs -= rhs; }
  friend ExactComplex operator*(ExactComplex lhs, const ExactComplex& rhs) { return lhs *= rhs; }
  friend ExactComplex operator/(ExactComplex lhs, const ExactComplex& rhs) { return lhs /= rhs; }

  friend bool operator==(const ExactComplex&, const ExactComplex&) = default;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const ExactComplex& z);

}  // namespace phasestar
