#include "ylab/rational.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "ylab/error.hpp"

namespace ylab {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::pole: return "pole";
    case ErrorKind::domain: return "domain";
    case ErrorKind::parse: return "parse";
    case ErrorKind::non_invertible: return "non-invertible";
    case ErrorKind::order_mismatch: return "order-mismatch";
    case ErrorKind::unknown_check: return "unknown-check";
    case ErrorKind::usage: return "usage";
  }
  return "internal";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

// Strips an optional sign; returns true when negative.
bool strip_sign(std::string_view& s) {
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (s.starts_with(kUnicodeMinus)) {
    s.remove_prefix(kUnicodeMinus.size());
    return true;
  }
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    const bool neg = s.front() == '-';
    s.remove_prefix(1);
    return neg;
  }
  return false;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorKind::domain, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  const bool negative = strip_sign(s);
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(ErrorKind::parse, "not a rational: '" + std::string(text) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error(ErrorKind::parse, "zero denominator: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  return Rational(n, d);
}

Rational Rational::parse_decimal(std::string_view text) {
  std::string_view s = trim(text);
  if (s.find('/') != std::string_view::npos || s.find('.') == std::string_view::npos) {
    return parse(text);
  }
  const bool negative = strip_sign(s);
  const auto dot = s.find('.');
  const std::string_view whole = s.substr(0, dot);
  const std::string_view frac = s.substr(dot + 1);
  if ((whole.empty() && frac.empty()) || (!whole.empty() && !all_digits(whole)) ||
      (!frac.empty() && !all_digits(frac))) {
    throw Error(ErrorKind::parse, "not a decimal: '" + std::string(text) + "'");
  }
  BigInt n(std::string(whole.empty() ? "0" : whole) + std::string(frac), 10);
  BigInt d;
  mpz_ui_pow_ui(d.get_mpz_t(), 10, frac.size());
  if (negative) n = -n;
  return Rational(n, d);
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::domain, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::pow(long exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorKind::domain, "zero to a negative power");
    return reciprocal().pow(-exponent);
  }
  BigInt n, d;
  mpz_pow_ui(n.get_mpz_t(), value_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), value_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r;
  r.value_ = mpq_class(n, d);  // already coprime
  return r;
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

Rational Rational::reciprocal() const {
  if (is_zero()) throw Error(ErrorKind::domain, "reciprocal of zero");
  Rational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

double Rational::to_double() const {
  if (is_zero()) return 0.0;
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, value_.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, value_.get_den_mpz_t());
  const long exp = num_exp - den_exp;
  if (exp > std::numeric_limits<int>::max()) {
    return sign() * std::numeric_limits<double>::infinity();
  }
  if (exp < std::numeric_limits<int>::min()) return 0.0;
  return std::ldexp(num_mant / den_mant, static_cast<int>(exp));
}

double Rational::log_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long num_exp = 0;
  long den_exp = 0;
  const double num_mant = mpz_get_d_2exp(&num_exp, value_.get_num_mpz_t());
  const double den_mant = mpz_get_d_2exp(&den_exp, value_.get_den_mpz_t());
  return std::log(std::fabs(num_mant / den_mant)) +
         static_cast<double>(num_exp - den_exp) * std::log(2.0);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace ylab
