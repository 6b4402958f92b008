#pragma once

#include "wallcross/laurent.hpp"

#include <string>

namespace wc {

// Coordinates on the two-dimensional torus: q1 = q t, q2 = q / t.
enum class Coords { Q1Q2, QT };

VarNames var_names(Coords c);

// Element of the fraction field Q(q^(1/oo), t^(1/oo)), kept as num/den with
// gcd(num, den) = 1 and the lowest term of den equal to 1.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(const Rational& c) : num_(c), den_(1) {}
  Scalar(long c) : Scalar(Rational(c)) {}
  Scalar(const LaurentPoly& p) : num_(p), den_(1) {}
  Scalar(const LaurentPoly& num, const LaurentPoly& den);

  static Scalar monomial(const Monomial& m, const Rational& c = 1) { return Scalar(LaurentPoly(m, c)); }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_laurent() const { return den_.is_one(); }
  bool is_constant() const { return den_.is_one() && num_.is_constant(); }

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
  Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
  Scalar inverse() const;
  Scalar pow(long k) const;
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

  // Apply a monomial map (a group homomorphism of exponents) to num and den.
  Scalar map_monomials(const std::function<Monomial(const Monomial&)>& f) const;

  // Canonical serialization: "<num>" or "(<num>)/(<den>)".
  std::string to_string(const VarNames& names = {}) const;

 private:
  static Scalar from_reduced(LaurentPoly num, LaurentPoly den);
  void normalize_unit();

  LaurentPoly num_;
  LaurentPoly den_;
};

Scalar change_coordinates(const Scalar& x, Coords from, Coords to);
LaurentPoly change_coordinates(const LaurentPoly& x, Coords from, Coords to);
Monomial change_coordinates(const Monomial& m, Coords from, Coords to);

enum class Var { First, Second, Both };
Scalar bar_substitute(const Scalar& x, Var v);
LaurentPoly bar_substitute(const LaurentPoly& x, Var v);

// Power series in the first variable with Laurent coefficients in the second:
// terms of first-variable degree at most (lowest degree + order).  The lowest
// first-variable part of the denominator must be a single monomial.
LaurentPoly series_expand(const Scalar& x, int order);

// Parses sums/products/quotients/powers of rationals and the two named
// variables; accepts the canonical serialization.
Scalar parse_scalar(const std::string& text, const VarNames& names = {});

}  // namespace wc
