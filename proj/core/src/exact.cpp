#include "phasestar/exact.hpp"

#include <cctype>
#include <cmath>
#include <limits>

namespace phasestar {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

// Correctly rounded (nearest, ties-to-even) conversion of a positive rational.
double positive_to_double(const mpz_class& num, const mpz_class& den) {
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  long exp2 = nb - db - 55;
  mpz_class q, r;
  if (exp2 >= 0) {
    mpz_class d = den << static_cast<mp_bitcnt_t>(exp2);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), d.get_mpz_t());
  } else {
    mpz_class n = num << static_cast<mp_bitcnt_t>(-exp2);
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), den.get_mpz_t());
  }
  // q has 54 or 55 bits; keep 53.
  const long qb = static_cast<long>(mpz_sizeinbase(q.get_mpz_t(), 2));
  const long shift = qb - 53;
  mpz_class mant = q >> static_cast<mp_bitcnt_t>(shift);
  mpz_class dropped = q - (mant << static_cast<mp_bitcnt_t>(shift));
  const mpz_class half = mpz_class(1) << static_cast<mp_bitcnt_t>(shift - 1);
  const bool sticky = r != 0;
  if (dropped > half || (dropped == half && (sticky || mpz_odd_p(mant.get_mpz_t())))) {
    mant += 1;
  }
  exp2 += shift;
  return std::ldexp(mant.get_d(), static_cast<int>(exp2));
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", text.size() - body.size());
  }
  if (!all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'", text.size() - body.size() + slash + 1);
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw DivisionByZero();
  mpq_class q(negative ? mpz_class(-n) : n, d);
  return Rational(std::move(q));
}

Rational Rational::factorial(unsigned n) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return Rational(mpq_class(out));
}

Rational Rational::binomial(unsigned n, unsigned k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return Rational(mpq_class(out));
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
  return Rational(mpq_class(num, den));
}

double Rational::to_double() const {
  const int s = sgn(value_);
  if (s == 0) return 0.0;
  const mpz_class num = abs(value_.get_num());
  const double magnitude = positive_to_double(num, value_.get_den());
  if (!std::isfinite(magnitude)) {
    throw OverflowError("rational " + to_string() + " exceeds double range");
  }
  return s < 0 ? -magnitude : magnitude;
}

std::string Rational::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.to_string(); }

ExactComplex ExactComplex::parse(std::string_view text) {
  if (text.empty()) throw ParseError("empty complex literal", 0);
  // Imaginary part is the trailing "<rational>*i" or "i"; split at the last sign that is
  // not the leading one.
  if (text.back() != 'i') return {Rational::parse(text), Rational(0)};
  std::size_t split = std::string_view::npos;
  for (std::size_t k = text.size() - 1; k > 0; --k) {
    if (text[k] == '+' || text[k] == '-') {
      split = k;
      break;
    }
  }
  const std::string_view re_text = split == std::string_view::npos ? std::string_view{} : text.substr(0, split);
  std::string_view im_text = split == std::string_view::npos ? text : text.substr(split);
  im_text.remove_suffix(1);  // 'i'
  Rational im;
  if (im_text.empty() || im_text == "+") {
    im = Rational(1);
  } else if (im_text == "-") {
    im = Rational(-1);
  } else {
    if (im_text.back() != '*') {
      throw ParseError("expected '*i' in complex literal '" + std::string(text) + "'", text.size() - 1);
    }
    im_text.remove_suffix(1);
    im = Rational::parse(im_text);
  }
  Rational re = re_text.empty() ? Rational(0) : Rational::parse(re_text);
  return {std::move(re), std::move(im)};
}

ExactComplex ExactComplex::pow(unsigned exponent) const {
  ExactComplex result(1);
  ExactComplex base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

std::string ExactComplex::to_string() const {
  if (im_.is_zero()) return re_.to_string();
  std::string out;
  if (!re_.is_zero()) out = re_.to_string();
  const bool negative = im_.sign() < 0;
  const Rational mag = negative ? -im_ : im_;
  if (negative) {
    out += "-";
  } else if (!out.empty()) {
    out += "+";
  }
  if (mag != Rational(1)) out += mag.to_string() + "*";
  out += "i";
  return out;
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& rhs) {
  re_ += rhs.re_;
  im_ += rhs.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& rhs) {
  re_ -= rhs.re_;
  im_ -= rhs.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& rhs) {
  if (im_.is_zero() && rhs.im_.is_zero()) {
    re_ *= rhs.re_;
    return *this;
  }
  Rational re = re_ * rhs.re_ - im_ * rhs.im_;
  Rational im = re_ * rhs.im_ + im_ * rhs.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& rhs) {
  if (rhs.is_zero()) throw DivisionByZero();
  const Rational norm = rhs.re_ * rhs.re_ + rhs.im_ * rhs.im_;
  *this *= rhs.conj();
  re_ /= norm;
  im_ /= norm;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& z) { return os << z.to_string(); }

}  // namespace phasestar
