#include "wallcross/ribbon.hpp"
#include "wallcross/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

using namespace wc;
using namespace wc::sym;

namespace {

const VarNames n12{"q1", "q2"};
Scalar S(const std::string& s) { return parse_scalar(s, n12); }

// Direct evaluation of classical bases at a point, independent of the tables.
Rational eval_m(const Partition& l, const std::vector<Rational>& x) {
  std::vector<int> e(x.size(), 0);
  if (l.length() > static_cast<int>(x.size())) return 0;
  for (int i = 0; i < l.length(); ++i) e[i] = l.parts()[i];
  std::sort(e.begin(), e.end());
  Rational total = 0;
  do {
    Rational term = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= x[i];
    total += term;
  } while (std::next_permutation(e.begin(), e.end()));
  return total;
}

Rational power_sum(int k, const std::vector<Rational>& x) {
  Rational t = 0;
  for (auto& v : x) {
    Rational p = 1;
    for (int i = 0; i < k; ++i) p *= v;
    t += p;
  }
  return t;
}

Rational eval_p(const Partition& l, const std::vector<Rational>& x) {
  Rational r = 1;
  for (int k : l.parts()) r *= power_sum(k, x);
  return r;
}

Rational elementary(int k, const std::vector<Rational>& x) {
  std::vector<Rational> e(k + 1, Rational(0));
  e[0] = 1;
  for (auto& v : x)
    for (int j = k; j >= 1; --j) e[j] += e[j - 1] * v;
  return e[k];
}

Rational eval_e(const Partition& l, const std::vector<Rational>& x) {
  Rational r = 1;
  for (int k : l.parts()) r *= elementary(k, x);
  return r;
}

Rational det(Matrix<Rational> a) {
  std::size_t n = a.size();
  Rational d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      d = -d;
    }
    d *= a[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = a[r][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
    }
  }
  return d;
}

Rational eval_s(const Partition& l, const std::vector<Rational>& x) {
  std::size_t N = x.size();
  if (l.length() > static_cast<int>(N)) return 0;
  auto alt = [&](const std::vector<int>& e) {
    Matrix<Rational> a(N, std::vector<Rational>(N));
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j) {
        Rational p = 1;
        for (int k = 0; k < e[i]; ++k) p *= x[j];
        a[i][j] = p;
      }
    return det(a);
  };
  std::vector<int> num(N), den(N);
  for (std::size_t i = 0; i < N; ++i) {
    den[i] = static_cast<int>(N - 1 - i);
    num[i] = l.row(static_cast<int>(i)) + den[i];
  }
  return alt(num) / alt(den);
}

Rational eval_basis(Basis b, const Partition& l, const std::vector<Rational>& x) {
  switch (b) {
    case Basis::m: return eval_m(l, x);
    case Basis::p: return eval_p(l, x);
    case Basis::e: return eval_e(l, x);
    case Basis::s: return eval_s(l, x);
    default: throw std::logic_error("not a classical basis");
  }
}

Rational eval(const SymFunc& f, const std::vector<Rational>& x) {
  Rational total = 0;
  const auto& parts = tables(f.degree()).parts;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const Scalar& c = f.coeffs()[i];
    if (c.is_zero()) continue;
    REQUIRE(c.is_constant());
    total += c.num().leading().coeff * eval_basis(f.basis(), parts[i], x);
  }
  return total;
}

// Count of semistandard tableaux of shape l and content mu.
long kostka(const Partition& l, const Partition& mu) {
  std::function<long(const Partition&, int)> rec = [&](const Partition& shape, int letter) -> long {
    if (letter < 0) return shape.empty() ? 1 : 0;
    int k = mu.row(letter);
    // remove a horizontal strip of size k filled with the largest letter
    long total = 0;
    std::function<void(int, int, std::vector<int>&)> strip = [&](int y, int left, std::vector<int>& rows) {
      if (y == shape.length()) {
        if (left == 0) total += rec(Partition(rows), letter - 1);
        return;
      }
      int lo = std::max(shape.row(y + 1), shape.row(y) - left);
      for (int v = shape.row(y); v >= lo; --v) {
        rows.push_back(v);
        strip(y + 1, left - (shape.row(y) - v), rows);
        rows.pop_back();
      }
    };
    std::vector<int> rows;
    strip(0, k, rows);
    return total;
  };
  return rec(l, mu.length() - 1);
}

bool schur_positive_polynomial(const SymFunc& f) {
  SymFunc s = convert(f, Basis::s);
  for (const auto& c : s.coeffs()) {
    if (!c.is_laurent()) return false;
    for (const auto& t : c.num().terms())
      if (t.coeff < 0 || t.mono.q < Exponent(0) || t.mono.t < Exponent(0) || !t.mono.is_integral()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("classical bases agree with direct evaluation") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int n = 1; n <= 6; ++n) {
    std::vector<Rational> x;
    while (static_cast<int>(x.size()) < n) {
      Rational v(d(rng), 1 + (d(rng) + 4) % 3);
      v.canonicalize();
      if (std::find(x.begin(), x.end(), v) == x.end()) x.push_back(v);
    }
    for (Basis from : {Basis::m, Basis::e, Basis::p, Basis::s})
      for (const auto& l : partitions(n)) {
        SymFunc f = SymFunc::basis_element(from, l);
        for (Basis to : {Basis::m, Basis::e, Basis::p, Basis::s}) CHECK(eval(convert(f, to), x) == eval_basis(from, l, x));
      }
  }
}

TEST_CASE("Schur to monomial coefficients are Kostka numbers") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& l : partitions(n)) {
      SymFunc m = convert(SymFunc::basis_element(Basis::s, l), Basis::m);
      for (const auto& mu : partitions(n)) CHECK(m.coeff(mu) == Scalar(Rational(kostka(l, mu))));
    }
}

TEST_CASE("characters: column orthogonality") {
  for (int n = 1; n <= 7; ++n) {
    const auto& t = tables(n);
    for (std::size_t a = 0; a < t.parts.size(); ++a)
      for (std::size_t b = 0; b < t.parts.size(); ++b) {
        Rational s = 0;
        for (std::size_t l = 0; l < t.parts.size(); ++l) s += t.character[l][a] * t.character[l][b];
        CHECK(s == (a == b ? Rational(static_cast<long>(t.z[a])) : Rational(0)));
      }
  }
}

TEST_CASE("omega exchanges e and h, conjugates Schur") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& l : partitions(n)) {
      CHECK(omega(SymFunc::basis_element(Basis::s, l)) == SymFunc::basis_element(Basis::s, l.conjugate()));
      SymFunc e = SymFunc::basis_element(Basis::e, l);
      CHECK(omega(omega(e)) == e);
    }
}

TEST_CASE("horizontal ribbon strips expand the plethysm p_b[h_k]") {
  for (int b = 1; b <= 3; ++b)
    for (int k = 1; b * k <= 7; ++k) {
      SymFunc hk(k, Basis::p);
      for (const auto& rho : partitions(k)) hk.coeff(rho) = Scalar(Rational(1, static_cast<unsigned long>(z_factor(rho))));
      SymFunc expected = compose_power_sum(hk, b);
      SymFunc got(b * k, Basis::s);
      for (const auto& h : horizontal_strips_up(Partition{}, k, b)) got.coeff(h.outer) += Scalar(h.spin % 2 ? -1 : 1);
      CHECK(got == expected);
    }
}

TEST_CASE("modified Macdonald polynomials, small degrees") {
  auto H = [](std::initializer_list<int> l) { return convert(modified_macdonald(Partition(l)), Basis::s); };
  auto s = [](std::initializer_list<int> l, const Scalar& c) { return SymFunc::basis_element(Basis::s, Partition(l), c); };
  CHECK(H({1}) == s({1}, 1));
  CHECK(H({2}) == s({2}, 1) + s({1, 1}, S("q1")));
  CHECK(H({1, 1}) == s({2}, 1) + s({1, 1}, S("q2")));
  CHECK(H({3}) == s({3}, 1) + s({2, 1}, S("q1 + q1^2")) + s({1, 1, 1}, S("q1^3")));
  CHECK(H({2, 1}) == s({3}, 1) + s({2, 1}, S("q1 + q2")) + s({1, 1, 1}, S("q1*q2")));
  CHECK(H({1, 1, 1}) == s({3}, 1) + s({2, 1}, S("q2 + q2^2")) + s({1, 1, 1}, S("q2^3")));
  CHECK(H({2, 2}) == s({4}, 1) + s({3, 1}, S("q1 + q2 + q1*q2")) + s({2, 2}, S("q1^2 + q2^2")) +
                         s({2, 1, 1}, S("q1*q2 + q1^2*q2 + q1*q2^2")) + s({1, 1, 1, 1}, S("q1^2*q2^2")));
}

TEST_CASE("Macdonald P: unitriangular and orthogonal") {
  for (int n = 1; n <= 6; ++n) {
    auto ps = partitions(n);
    for (const auto& l : ps) {
      SymFunc m = convert(macdonald_P(l), Basis::m);
      CHECK(m.coeff(l) == Scalar(1));
      for (const auto& mu : ps)
        if (!dominates(l, mu)) CHECK(m.coeff(mu).is_zero());
      for (const auto& mu : ps)
        if (mu != l) CHECK(inner0(macdonald_P(l), macdonald_P(mu)).is_zero());
    }
  }
}

TEST_CASE("integral forms: integrality and Schur positivity") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions(n)) {
      auto f = integral_forms(l);
      SymFunc j = convert(f.Jtilde, Basis::m);
      for (const auto& c : j.coeffs()) {
        CHECK(c.is_laurent());
        CHECK(c.num().has_integer_coefficients());
      }
      CHECK(schur_positive_polynomial(f.Htilde));
      CHECK(convert(f.Htilde, Basis::s).coeff(Partition{n}) == Scalar(1));
    }
}

TEST_CASE("modified Macdonald: triangularity characterization and symmetry") {
  for (int n = 1; n <= 5; ++n) {
    auto ps = partitions(n);
    for (const auto& mu : ps) {
      SymFunc h = modified_macdonald(mu);
      SymFunc a = convert(plethystic_scale(h, [](int k) { return Scalar(1) - Scalar::monomial(Monomial{k, 0}); }), Basis::s);
      SymFunc b = convert(plethystic_scale(h, [](int k) { return Scalar(1) - Scalar::monomial(Monomial{0, k}); }), Basis::s);
      for (const auto& l : ps) {
        if (!dominates(l, mu)) CHECK(a.coeff(l).is_zero());
        if (!dominates(l, mu.conjugate())) CHECK(b.coeff(l).is_zero());
      }
      // H_mu(q1, q2) = H_mu'(q2, q1)
      SymFunc swapped = convert(modified_macdonald(mu.conjugate()), Basis::s);
      for (auto& c : swapped.coeffs()) c = c.map_monomials([](const Monomial& m) { return Monomial{m.t, m.q}; });
      CHECK(convert(h, Basis::s) == swapped);
    }
  }
}

TEST_CASE("pairings on modified Macdonald polynomials") {
  for (int n = 1; n <= 4; ++n) {
    auto ps = partitions(n);
    for (const auto& l : ps) {
      CHECK(modified_norm(l) == chi(l) * tangent_bracket(l));
      for (const auto& mu : ps)
        if (mu != l) CHECK(inner_mod(modified_macdonald(l), modified_macdonald(mu)).is_zero());
      CHECK(euler_form(modified_macdonald(l), modified_macdonald(l)) == tangent_bracket(l));
    }
  }
  CHECK(inner_mod(modified_macdonald(Partition{1}), modified_macdonald(Partition{1})) == S("-(q2-1)*(1-q1)"));
  CHECK(restrict(modified_macdonald(Partition{1}), Partition{1}) == S("(1-q1)*(1-q2)"));
}

TEST_CASE("nabla is adjoint between the two pairings") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> c(-2, 2);
  for (int n = 1; n <= 4; ++n)
    for (int trial = 0; trial < 3; ++trial) {
      SymFunc f(n, Basis::s), g(n, Basis::s);
      for (auto& x : f.coeffs()) x = Scalar(c(rng));
      for (auto& x : g.coeffs()) x = Scalar(c(rng));
      CHECK(inner_mod(f, g) == euler_form(nabla(f), g));
      CHECK(nabla(nabla(f), -1) == f);
    }
}

TEST_CASE("restrictions round trip") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& l : partitions(n)) {
      SymFunc s = SymFunc::basis_element(Basis::s, l);
      CHECK(from_restrictions(n, restrictions(s)) == s);
    }
}

TEST_CASE("omega on modified Macdonald inverts the torus weights") {
  for (int n = 1; n <= 5; ++n)
    for (const auto& mu : partitions(n)) {
      SymFunc lhs = convert(omega(modified_macdonald(mu)), Basis::s);
      SymFunc rhs = convert(modified_macdonald(mu), Basis::s);
      for (auto& c : rhs.coeffs()) c = bar_substitute(c, Var::Both) * chi(mu);
      CHECK(lhs == rhs);
    }
}
