#include "wallcross/rational.hpp"

#include <numeric>
#include <stdexcept>

namespace wc {

Rational parse_rational(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0) throw std::invalid_argument("not a rational number: '" + s + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational floor(const Rational& r) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

Rational ceil(const Rational& r) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return Rational(q);
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

Exponent::Exponent(std::int64_t n, std::int64_t d) {
  if (d == 0) throw std::invalid_argument("exponent with zero denominator");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  std::int64_t g = std::gcd(n, d);
  if (g == 0) g = 1;
  num_ = n / g;
  den_ = d / g;
}

Exponent::Exponent(const Rational& r) {
  if (!r.get_num().fits_slong_p() || !r.get_den().fits_slong_p())
    throw std::overflow_error("exponent out of range: " + r.get_str());
  num_ = r.get_num().get_si();
  den_ = r.get_den().get_si();
}

std::int64_t Exponent::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Exponent::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

Rational Exponent::to_rational() const { return Rational(static_cast<long>(num_), static_cast<unsigned long>(den_)); }

Exponent Exponent::operator-() const {
  Exponent e = *this;
  e.num_ = -e.num_;
  return e;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.den_ == 1 && b.den_ == 1) return Exponent(a.num_ + b.num_);
  std::int64_t l = std::lcm(a.den_, b.den_);
  return Exponent(a.num_ * (l / a.den_) + b.num_ * (l / b.den_), l);
}

Exponent operator-(const Exponent& a, const Exponent& b) { return a + (-b); }

Exponent operator*(const Exponent& a, const Exponent& b) {
  if (a.den_ == 1 && b.den_ == 1) return Exponent(a.num_ * b.num_);
  return Exponent(a.num_ * b.num_, a.den_ * b.den_);
}

Exponent operator/(const Exponent& a, const Exponent& b) {
  if (b.num_ == 0) throw std::domain_error("exponent division by zero");
  return Exponent(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Exponent& a, const Exponent& b) {
  if (a.den_ == b.den_) return a.num_ <=> b.num_;
  return a.num_ * b.den_ <=> b.num_ * a.den_;
}

std::string to_string(const Exponent& e) {
  if (e.den() == 1) return std::to_string(e.num());
  return std::to_string(e.num()) + "/" + std::to_string(e.den());
}

}  // namespace wc
