#include "wallcross/laurent.hpp"

#include "polynomial.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wc {

namespace {

bool desc(const Term& a, const Term& b) { return a.mono > b.mono; }

void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), desc);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
    } else {
      if (!out.empty() && out.back().coeff == 0) out.pop_back();
      out.push_back(std::move(t));
    }
  }
  if (!out.empty() && out.back().coeff == 0) out.pop_back();
  terms = std::move(out);
}

// Clears exponent denominators of a set of polynomials so they can be handled
// as ordinary polynomials in x = q^(1/D), y = t^(1/D).
struct Lattice {
  std::int64_t den = 1;

  void absorb(const LaurentPoly& p) {
    for (const auto& t : p.terms()) den = std::lcm(den, std::lcm(t.mono.q.den(), t.mono.t.den()));
  }
  std::int64_t scale(const Exponent& e) const { return e.num() * (den / e.den()); }

  // Returns the polynomial and the (x, y) shift that was removed.
  detail::BiPoly to_poly(const LaurentPoly& p, std::int64_t& sx, std::int64_t& sy) const {
    sx = sy = 0;
    if (p.is_zero()) return {};
    bool first = true;
    for (const auto& t : p.terms()) {
      std::int64_t x = scale(t.mono.q), y = scale(t.mono.t);
      if (first || x < sx) sx = x;
      if (first || y < sy) sy = y;
      first = false;
    }
    detail::BiPoly r;
    for (const auto& t : p.terms()) {
      std::size_t x = scale(t.mono.q) - sx, y = scale(t.mono.t) - sy;
      if (r.size() <= y) r.resize(y + 1);
      if (r[y].size() <= x) r[y].resize(x + 1, Rational(0));
      r[y][x] = t.coeff;
    }
    detail::trim(r);
    return r;
  }

  LaurentPoly from_poly(const detail::BiPoly& p, std::int64_t sx, std::int64_t sy) const {
    std::vector<Term> terms;
    for (std::size_t y = 0; y < p.size(); ++y)
      for (std::size_t x = 0; x < p[y].size(); ++x)
        if (p[y][x] != 0)
          terms.push_back({Monomial{Exponent(static_cast<std::int64_t>(x) + sx, den),
                                    Exponent(static_cast<std::int64_t>(y) + sy, den)},
                           p[y][x]});
    return LaurentPoly::from_terms(std::move(terms));
  }
};

}  // namespace

LaurentPoly::LaurentPoly(const Rational& c) {
  if (c != 0) terms_.push_back({Monomial{}, c});
}

LaurentPoly::LaurentPoly(const Monomial& m, const Rational& c) {
  if (c != 0) terms_.push_back({m, c});
}

LaurentPoly LaurentPoly::from_sorted(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  return p;
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  canonicalize(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool LaurentPoly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

bool LaurentPoly::is_one() const { return terms_.size() == 1 && terms_[0].mono.is_one() && terms_[0].coeff == 1; }

bool LaurentPoly::has_integral_exponents() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.mono.is_integral(); });
}

bool LaurentPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const Term& t) { return t.coeff.get_den() == 1; });
}

Rational LaurentPoly::coeff(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const Monomial& x) { return t.mono > x; });
  if (it != terms_.end() && it->mono == m) return it->coeff;
  return 0;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

static LaurentPoly merge(const LaurentPoly& a, const LaurentPoly& b, bool subtract) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.terms().begin(), ie = a.terms().end();
  auto j = b.terms().begin(), je = b.terms().end();
  while (i != ie || j != je) {
    if (j == je || (i != ie && i->mono > j->mono)) {
      out.push_back(*i++);
    } else if (i == ie || j->mono > i->mono) {
      out.push_back({j->mono, subtract ? Rational(-j->coeff) : j->coeff});
      ++j;
    } else {
      Rational c = subtract ? Rational(i->coeff - j->coeff) : Rational(i->coeff + j->coeff);
      if (c != 0) out.push_back({i->mono, c});
      ++i;
      ++j;
    }
  }
  return LaurentPoly::from_sorted(std::move(out));
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, false); }
LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return merge(a, b, true); }
LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& b) { return *this = merge(*this, b, false); }
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& b) { return *this = merge(*this, b, true); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (b.is_monomial()) return a.shifted(b.leading().mono).scaled(b.leading().coeff);
  if (a.is_monomial()) return b.shifted(a.leading().mono).scaled(a.leading().coeff);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a.terms())
    for (const auto& y : b.terms()) out.push_back({x.mono * y.mono, x.coeff * y.coeff});
  return LaurentPoly::from_terms(std::move(out));
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  if (c == 0) return {};
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

LaurentPoly LaurentPoly::shifted(const Monomial& m) const {
  LaurentPoly r = *this;
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
  LaurentPoly r(1), b = *this;
  while (k) {
    if (k & 1) r = r * b;
    k >>= 1;
    if (k) b = b * b;
  }
  return r;
}

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  return true;
}

LaurentPoly LaurentPoly::map_monomials(const std::function<Monomial(const Monomial&)>& f) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({f(t.mono), t.coeff});
  return from_terms(std::move(out));
}

std::optional<LaurentPoly> LaurentPoly::divide(const LaurentPoly& d) const {
  if (d.is_zero()) throw std::domain_error("division by zero polynomial");
  if (is_zero()) return LaurentPoly{};
  if (d.is_monomial()) return shifted(d.leading().mono.inverse()).scaled(1 / d.leading().coeff);
  Lattice L;
  L.absorb(*this);
  L.absorb(d);
  std::int64_t ax, ay, bx, by;
  auto pa = L.to_poly(*this, ax, ay);
  auto pb = L.to_poly(d, bx, by);
  auto q = detail::exact_div(pa, pb);
  if (!q) return std::nullopt;
  return L.from_poly(*q, ax - bx, ay - by);
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_monomial() || b.is_monomial()) return LaurentPoly(1);
  Lattice L;
  L.absorb(a);
  L.absorb(b);
  std::int64_t ax, ay, bx, by;
  auto pa = L.to_poly(a, ax, ay);
  auto pb = L.to_poly(b, bx, by);
  auto g = detail::gcd(pa, pb);
  return L.from_poly(g, 0, 0);
}

std::pair<Exponent, Exponent> LaurentPoly::q_degree_range() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  // terms are sorted by q first
  return {terms_.back().mono.q, terms_.front().mono.q};
}

std::pair<Exponent, Exponent> LaurentPoly::t_degree_range() const {
  if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
  Exponent lo = terms_[0].mono.t, hi = lo;
  for (const auto& t : terms_) {
    lo = std::min(lo, t.mono.t);
    hi = std::max(hi, t.mono.t);
  }
  return {lo, hi};
}

LaurentPoly LaurentPoly::t_slice(const Exponent& e) const {
  std::vector<Term> out;
  for (const auto& t : terms_)
    if (t.mono.t == e) out.push_back(t);
  LaurentPoly r;
  r.terms_ = std::move(out);
  return r;
}

Rational LaurentPoly::evaluate(const Rational& q, const Rational& t) const {
  auto power = [](const Rational& x, std::int64_t k) {
    Rational r = 1;
    Rational b = k < 0 ? Rational(1 / x) : x;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) r *= b;
    return r;
  };
  Rational v = 0;
  for (const auto& term : terms_) {
    if (!term.mono.is_integral()) throw std::domain_error("cannot evaluate fractional exponents");
    v += term.coeff * power(q, term.mono.q.num()) * power(t, term.mono.t.num());
  }
  return v;
}

std::string LaurentPoly::to_string(const VarNames& names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c < 0) {
        os << "-";
        c = -c;
      }
    } else {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    os << c.get_str() << "*" << names.first << "^(" << wc::to_string(t.mono.q) << ")*" << names.second << "^("
       << wc::to_string(t.mono.t) << ")";
  }
  return os.str();
}

}  // namespace wc
