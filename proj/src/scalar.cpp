#include "wallcross/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace wc {

VarNames var_names(Coords c) {
  if (c == Coords::Q1Q2) return {"q1", "q2"};
  return {"q", "t"};
}

Scalar::Scalar(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw std::domain_error("zero denominator");
  if (num.is_zero()) {
    den_ = LaurentPoly(1);
    return;
  }
  num_ = num;
  den_ = den;
  if (!den_.is_monomial()) {
    LaurentPoly g = gcd(num_, den_);
    if (!g.is_monomial()) {
      num_ = *num_.divide(g);
      den_ = *den_.divide(g);
    }
  }
  normalize_unit();
}

void Scalar::normalize_unit() {
  const Term lt = den_.trailing();
  if (lt.mono.is_one() && lt.coeff == 1) return;
  Monomial inv = lt.mono.inverse();
  Rational c = 1 / lt.coeff;
  num_ = num_.shifted(inv).scaled(c);
  den_ = den_.shifted(inv).scaled(c);
}

Scalar Scalar::from_reduced(LaurentPoly num, LaurentPoly den) {
  Scalar s;
  if (num.is_zero()) return s;
  s.num_ = std::move(num);
  s.den_ = std::move(den);
  s.normalize_unit();
  return s;
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_laurent() && b.is_laurent()) return Scalar::from_reduced(a.num_ + b.num_, LaurentPoly(1));
  if (a.den_ == b.den_) return Scalar(a.num_ + b.num_, a.den_);
  if (a.is_laurent()) return Scalar::from_reduced(a.num_ * b.den_ + b.num_, b.den_);
  if (b.is_laurent()) return Scalar::from_reduced(a.num_ + b.num_ * a.den_, a.den_);
  LaurentPoly g = gcd(a.den_, b.den_);
  if (g.is_monomial()) return Scalar::from_reduced(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  LaurentPoly ad = *a.den_.divide(g), bd = *b.den_.divide(g);
  LaurentPoly num = a.num_ * bd + b.num_ * ad;
  if (num.is_zero()) return Scalar();
  LaurentPoly h = gcd(num, g);
  if (!h.is_monomial()) {
    num = *num.divide(h);
    g = *g.divide(h);
  }
  return Scalar::from_reduced(std::move(num), ad * bd * g);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (a.is_laurent() && b.is_laurent()) return Scalar::from_reduced(a.num_ * b.num_, LaurentPoly(1));
  LaurentPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
  if (!bd.is_monomial() && !an.is_monomial()) {
    LaurentPoly g = gcd(an, bd);
    if (!g.is_monomial()) {
      an = *an.divide(g);
      bd = *bd.divide(g);
    }
  }
  if (!ad.is_monomial() && !bn.is_monomial()) {
    LaurentPoly g = gcd(bn, ad);
    if (!g.is_monomial()) {
      bn = *bn.divide(g);
      ad = *ad.divide(g);
    }
  }
  return Scalar::from_reduced(an * bn, ad * bd);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return from_reduced(den_, num_);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar Scalar::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  Scalar r(1), base = *this;
  while (k) {
    if (k & 1) r *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return r;
}

Scalar Scalar::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
  return from_reduced(num_.map_monomials(f), den_.map_monomials(f));
}

std::string Scalar::to_string(const VarNames& names) const {
  if (is_laurent()) return num_.to_string(names);
  return "(" + num_.to_string(names) + ")/(" + den_.to_string(names) + ")";
}

Monomial change_coordinates(const Monomial& m, Coords from, Coords to) {
  if (from == to) return m;
  if (from == Coords::Q1Q2) return {m.q + m.t, m.q - m.t};
  Exponent half(1, 2);
  return {(m.q + m.t) * half, (m.q - m.t) * half};
}

LaurentPoly change_coordinates(const LaurentPoly& x, Coords from, Coords to) {
  if (from == to) return x;
  return x.map_monomials([&](const Monomial& m) { return change_coordinates(m, from, to); });
}

Scalar change_coordinates(const Scalar& x, Coords from, Coords to) {
  if (from == to) return x;
  return x.map_monomials([&](const Monomial& m) { return change_coordinates(m, from, to); });
}

static Monomial bar_mono(const Monomial& m, Var v) {
  switch (v) {
    case Var::First: return {-m.q, m.t};
    case Var::Second: return {m.q, -m.t};
    default: return m.inverse();
  }
}

Scalar bar_substitute(const Scalar& x, Var v) {
  return x.map_monomials([v](const Monomial& m) { return bar_mono(m, v); });
}

LaurentPoly bar_substitute(const LaurentPoly& x, Var v) {
  return x.map_monomials([v](const Monomial& m) { return bar_mono(m, v); });
}

static LaurentPoly truncate_q(const LaurentPoly& p, const Exponent& max_q) {
  std::vector<Term> out;
  for (const auto& t : p.terms())
    if (t.mono.q <= max_q) out.push_back(t);
  return LaurentPoly::from_sorted(std::move(out));
}

LaurentPoly series_expand(const Scalar& x, int order) {
  if (x.is_zero()) return {};
  const LaurentPoly& den = x.den();
  Exponent dlow = den.q_degree_range().first;
  LaurentPoly lowest;
  std::vector<Term> rest;
  for (const auto& t : den.terms()) {
    if (t.mono.q == dlow) lowest += LaurentPoly(t.mono, t.coeff);
    else rest.push_back(t);
  }
  if (!lowest.is_monomial())
    throw std::domain_error("denominator not expandable as a power series: lowest part " + lowest.to_string());
  Monomial inv = lowest.leading().mono.inverse();
  Rational cinv = 1 / lowest.leading().coeff;
  // den = L (1 + R), R has positive q-degree
  LaurentPoly R = LaurentPoly::from_terms(rest).shifted(inv).scaled(cinv);
  LaurentPoly num = x.num().shifted(inv).scaled(cinv);
  Exponent low = num.q_degree_range().first;
  Exponent max_q = low + Exponent(order);
  LaurentPoly result = truncate_q(num, max_q), power = num;
  if (R.is_zero()) return result;
  Exponent step = R.q_degree_range().first;
  for (Exponent reached = low + step; reached <= max_q; reached += step) {
    power = truncate_q(-(power * R), max_q);
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

namespace {

class Parser {
 public:
  Parser(const std::string& s, const VarNames& names) : s_(s), names_(names) {}

  Scalar parse() {
    Scalar r = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("cannot parse scalar '" + s_ + "': " + what + " at offset " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    skip();
    Scalar r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    r = term();
    if (neg) r = -r;
    while (true) {
      if (eat('+')) r += term();
      else if (eat('-')) r -= term();
      else return r;
    }
  }

  Scalar term() {
    Scalar r = factor();
    while (true) {
      if (eat('*')) r *= factor();
      else if (eat('/')) r /= factor();
      else return r;
    }
  }

  Scalar factor() {
    Scalar base = atom();
    if (!eat('^')) return base;
    Exponent e = exponent();
    if (e.is_integer()) return base.pow(e.num());
    if (base.is_laurent() && base.num().is_monomial() && base.num().leading().coeff == 1)
      return Scalar::monomial(base.num().leading().mono.pow(e));
    fail("fractional power of a non-monomial");
  }

  Exponent exponent() {
    skip();
    if (eat('(')) {
      bool neg = eat('-');
      std::int64_t n = integer();
      std::int64_t d = 1;
      if (eat('/')) d = integer();
      if (!eat(')')) fail("expected ')'");
      return Exponent(neg ? -n : n, d);
    }
    bool neg = eat('-');
    std::int64_t n = integer();
    return Exponent(neg ? -n : n);
  }

  std::int64_t integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    return std::stoll(s_.substr(start, pos_ - start));
  }

  bool match_name(const std::string& name) {
    if (s_.compare(pos_, name.size(), name) != 0) return false;
    std::size_t end = pos_ + name.size();
    if (end < s_.size() && std::isalnum(static_cast<unsigned char>(s_[end]))) return false;
    pos_ = end;
    return true;
  }

  Scalar atom() {
    skip();
    if (eat('(')) {
      Scalar r = expr();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Scalar(parse_rational(s_.substr(start, pos_ - start)));
    }
    // longer name first so that "q1" is not read as "q"
    const std::string& a = names_.first;
    const std::string& b = names_.second;
    bool a_first = a.size() >= b.size();
    for (int k = 0; k < 2; ++k) {
      bool use_a = (k == 0) == a_first;
      const std::string& name = use_a ? a : b;
      if (match_name(name)) return Scalar::monomial(use_a ? Monomial{1, 0} : Monomial{0, 1});
    }
    fail("expected number, variable or '('");
  }

  const std::string& s_;
  VarNames names_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text, const VarNames& names) { return Parser(text, names).parse(); }

}  // namespace wc
