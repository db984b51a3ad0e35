#include "ylab/polynomial.hpp"

#include <algorithm>

#include "ylab/error.hpp"

namespace ylab {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial::Polynomial(const Rational& constant) {
  if (!constant.is_zero()) coeffs_.push_back(constant);
}

Polynomial Polynomial::monomial(const Rational& coeff, long degree) {
  if (degree < 0) throw Error(ErrorKind::domain, "negative monomial degree");
  std::vector<Rational> c(static_cast<size_t>(degree) + 1);
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Polynomial Polynomial::linear_power(const Rational& root, long power) {
  if (power < 0) throw Error(ErrorKind::domain, "negative power");
  // Binomial expansion of (l - root)^power, built by repeated multiplication.
  Polynomial factor(std::vector<Rational>{-root, Rational(1)});
  Polynomial result(Rational(1));
  for (long i = 0; i < power; ++i) result *= factor;
  return result;
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational Polynomial::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Rational Polynomial::operator()(const Rational& at) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return {};
  return *this * leading().reciprocal();
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return {};
  BigInt lcm_den = 1;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  }
  BigInt content = 0;
  std::vector<BigInt> ints;
  ints.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    BigInt v = c.numerator() * (lcm_den / c.denominator());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (ints.back() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (auto& v : ints) out.emplace_back(BigInt(v / content));
  return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw Error(ErrorKind::domain, "polynomial division by zero");
  if (degree() < divisor.degree()) return {Polynomial(), *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quot(static_cast<size_t>(degree() - divisor.degree() + 1));
  const Rational inv_lead = divisor.leading().reciprocal();
  const long dd = divisor.degree();
  for (long i = degree(); i >= dd; --i) {
    const Rational q = rem[static_cast<size_t>(i)] * inv_lead;
    if (q.is_zero()) continue;
    quot[static_cast<size_t>(i - dd)] = q;
    for (long j = 0; j <= dd; ++j) {
      rem[static_cast<size_t>(i - dd + j)] -= q * divisor.coeffs_[static_cast<size_t>(j)];
    }
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (long d = degree(); d >= 0; --d) {
    const Rational& c = coeffs_[static_cast<size_t>(d)];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (d == 0 || !unit) out += mag.to_string();
    if (d > 0) {
      if (!unit) out += "*";
      out += var;
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = x.divmod(y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorKind::domain, "rational function with zero denominator");
  normalize();
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_.divmod(g).first;
    den_ = den_.divmod(g).first;
  }
  const Rational lead = den_.leading();
  if (lead != Rational(1)) {
    const Rational inv = lead.reciprocal();
    num_ *= inv;
    den_ *= inv;
  }
}

Rational RationalFunction::operator()(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) {
    throw Error(ErrorKind::pole, "rational function has a pole at " + at.to_string());
  }
  return num_(at) / d;
}

RationalFunction RationalFunction::derivative() const {
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
  *this = RationalFunction(num_ * rhs.num_, den_ * rhs.den_);
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
  if (rhs.is_zero()) throw Error(ErrorKind::domain, "rational function division by zero");
  *this = RationalFunction(num_ * rhs.den_, den_ * rhs.num_);
  return *this;
}

long RationalFunction::pure_linear_power(const Rational& root) const {
  const Polynomial factor(std::vector<Rational>{-root, Rational(1)});
  Polynomial rest = den_;
  long power = 0;
  while (rest.degree() > 0) {
    auto [q, r] = rest.divmod(factor);
    if (!r.is_zero()) return -1;
    rest = std::move(q);
    ++power;
  }
  return rest == Polynomial(Rational(1)) ? power : -1;
}

namespace {

std::string wrap(const Polynomial& p, const std::string& var) {
  const auto nonzero = std::count_if(p.coeffs().begin(), p.coeffs().end(),
                                     [](const Rational& c) { return !c.is_zero(); });
  return nonzero > 1 ? "(" + p.to_string(var) + ")" : p.to_string(var);
}

}  // namespace

std::string RationalFunction::to_string(const std::string& var) const {
  if (den_ == Polynomial(Rational(1))) return num_.to_string(var);
  return wrap(num_, var) + " / " + wrap(den_, var);
}

std::string RationalFunction::to_factored_string(const std::string& var) const {
  const long power = pure_linear_power(Rational(1));
  if (power <= 0) return to_string(var);
  std::string den = "(" + var + "-1)";
  if (power > 1) den += "^" + std::to_string(power);
  return wrap(num_, var) + " / " + den;
}

}  // namespace ylab
