#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace wc {

using Rational = mpq_class;

Rational parse_rational(const std::string& s);
std::string to_string(const Rational& r);
Rational floor(const Rational& r);
Rational ceil(const Rational& r);
bool is_integer(const Rational& r);

// Exponent of a torus variable: a small fraction kept in lowest terms, den > 0.
class Exponent {
 public:
  constexpr Exponent() = default;
  constexpr Exponent(std::int64_t n) : num_(n) {}
  Exponent(std::int64_t n, std::int64_t d);
  explicit Exponent(const Rational& r);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_integer() const { return den_ == 1; }
  bool is_zero() const { return num_ == 0; }
  int sign() const { return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0); }
  std::int64_t floor() const;
  std::int64_t ceil() const;
  Rational to_rational() const;

  Exponent operator-() const;
  friend Exponent operator+(const Exponent& a, const Exponent& b);
  friend Exponent operator-(const Exponent& a, const Exponent& b);
  friend Exponent operator*(const Exponent& a, const Exponent& b);
  friend Exponent operator/(const Exponent& a, const Exponent& b);
  Exponent& operator+=(const Exponent& b) { return *this = *this + b; }
  Exponent& operator-=(const Exponent& b) { return *this = *this - b; }

  friend bool operator==(const Exponent& a, const Exponent& b) = default;
  friend std::strong_ordering operator<=>(const Exponent& a, const Exponent& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::string to_string(const Exponent& e);

}  // namespace wc
