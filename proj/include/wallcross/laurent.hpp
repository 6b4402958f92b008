#pragma once

#include "wallcross/rational.hpp"

#include <compare>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wc {

// q^a t^b.  Depending on the coordinate system the two variables are (q, t)
// or (q1, q2); the monomial itself does not know which.
struct Monomial {
  Exponent q;
  Exponent t;

  static Monomial one() { return {}; }
  bool is_one() const { return q.is_zero() && t.is_zero(); }
  bool is_integral() const { return q.is_integer() && t.is_integer(); }
  Monomial inverse() const { return {-q, -t}; }
  Monomial pow(const Exponent& k) const { return {q * k, t * k}; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) { return {a.q + b.q, a.t + b.t}; }
  friend Monomial operator/(const Monomial& a, const Monomial& b) { return {a.q - b.q, a.t - b.t}; }
  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.q <=> b.q; c != 0) return c;
    return a.t <=> b.t;
  }
};

struct Term {
  Monomial mono;
  Rational coeff;
};

struct VarNames {
  std::string first = "q";
  std::string second = "t";
};

// Finite sum of terms with rational coefficients, kept strictly descending by
// monomial with no zero coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Rational& c);
  LaurentPoly(long c) : LaurentPoly(Rational(c)) {}
  LaurentPoly(const Monomial& m, const Rational& c = 1);

  static LaurentPoly from_terms(std::vector<Term> terms);
  // Terms already strictly descending with nonzero coefficients.
  static LaurentPoly from_sorted(std::vector<Term> terms);
  static LaurentPoly var_q(const Exponent& e = 1) { return LaurentPoly(Monomial{e, 0}); }
  static LaurentPoly var_t(const Exponent& e = 1) { return LaurentPoly(Monomial{0, e}); }

  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool has_integral_exponents() const;
  bool has_integer_coefficients() const;
  const Term& leading() const { return terms_.front(); }
  const Term& trailing() const { return terms_.back(); }
  Rational coeff(const Monomial& m) const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator+=(const LaurentPoly& b);
  LaurentPoly& operator-=(const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& b) { return *this = *this * b; }
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly shifted(const Monomial& m) const;
  LaurentPoly pow(unsigned k) const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  // Apply an exponent map to every monomial and re-canonicalize.
  LaurentPoly map_monomials(const std::function<Monomial(const Monomial&)>& f) const;

  // Exact division; nullopt when `d` does not divide `*this`.
  std::optional<LaurentPoly> divide(const LaurentPoly& d) const;

  std::pair<Exponent, Exponent> q_degree_range() const;
  std::pair<Exponent, Exponent> t_degree_range() const;
  // Terms whose t-exponent equals `e`.
  LaurentPoly t_slice(const Exponent& e) const;

  Rational evaluate(const Rational& q, const Rational& t) const;

  std::string to_string(const VarNames& names = {}) const;

 private:
  std::vector<Term> terms_;
};

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace wc
