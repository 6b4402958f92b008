#include "polynomial.hpp"

#include <algorithm>

namespace wc::detail {

void trim(UPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

void trim(BiPoly& a) {
  for (auto& c : a) trim(c);
  while (!a.empty() && a.back().empty()) a.pop_back();
}

int degree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly add(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
  UPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

static UPoly scale(const UPoly& a, const Rational& c) {
  UPoly r(a);
  for (auto& x : r) x *= c;
  trim(r);
  return r;
}

void divmod(const UPoly& a, const UPoly& b, UPoly& q, UPoly& r) {
  r = a;
  q.clear();
  int db = degree(b);
  if (degree(r) < db) return;
  q.assign(r.size() - b.size() + 1, Rational(0));
  Rational inv = 1 / b.back();
  for (int d = degree(r); d >= db; --d) {
    if (r[d] == 0) continue;
    Rational c = r[d] * inv;
    q[d - db] = c;
    for (int i = 0; i <= db; ++i) r[d - db + i] -= c * b[i];
  }
  trim(q);
  trim(r);
}

static void make_monic(UPoly& a) {
  if (a.empty() || a.back() == 1) return;
  Rational inv = 1 / a.back();
  for (auto& x : a) x *= inv;
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b, q, r;
  trim(x);
  trim(y);
  while (!y.empty()) {
    divmod(x, y, q, r);
    x = std::move(y);
    y = std::move(r);
    make_monic(y);
  }
  make_monic(x);
  return x;
}

std::optional<UPoly> exact_div(const UPoly& a, const UPoly& b) {
  UPoly q, r;
  divmod(a, b, q, r);
  if (!r.empty()) return std::nullopt;
  return q;
}

Rational eval(const UPoly& a, const Rational& x) {
  Rational v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
  return v;
}

namespace {

int deg_y(const BiPoly& a) { return static_cast<int>(a.size()) - 1; }

int deg_x(const BiPoly& a) {
  int d = -1;
  for (const auto& c : a) d = std::max(d, degree(c));
  return d;
}

UPoly eval_x(const BiPoly& a, const Rational& x) {
  UPoly r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = eval(a[j], x);
  trim(r);
  return r;
}

BiPoly swap_vars(const BiPoly& a) {
  int dx = deg_x(a);
  BiPoly r(dx + 1, UPoly(a.size()));
  for (std::size_t j = 0; j < a.size(); ++j)
    for (std::size_t i = 0; i < a[j].size(); ++i) r[i][j] = a[j][i];
  trim(r);
  return r;
}

UPoly content(const BiPoly& a) {
  UPoly g;
  for (const auto& c : a) {
    if (c.empty()) continue;
    g = g.empty() ? c : gcd(g, c);
    if (g.size() == 1) break;
  }
  make_monic(g);
  return g;
}

BiPoly divide_coeffs(const BiPoly& a, const UPoly& c) {
  BiPoly r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j)
    if (!a[j].empty()) r[j] = *exact_div(a[j], c);
  return r;
}

BiPoly mul_coeffs(const BiPoly& a, const UPoly& c) {
  BiPoly r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) r[j] = mul(a[j], c);
  trim(r);
  return r;
}

BiPoly primitive_part(const BiPoly& a) {
  UPoly c = content(a);
  if (c.size() == 1) {
    if (c[0] == 1) return a;
    BiPoly r(a);
    for (auto& u : r) u = scale(u, 1 / c[0]);
    return r;
  }
  return divide_coeffs(a, c);
}

// Pseudo-remainder of a by b as polynomials in y over Q[x].
BiPoly prem(BiPoly a, const BiPoly& b) {
  int db = deg_y(b);
  const UPoly& lb = b.back();
  while (deg_y(a) >= db) {
    int da = deg_y(a);
    UPoly la = a.back();
    BiPoly na(da);
    for (int j = 0; j < da; ++j) na[j] = mul(a[j], lb);
    for (int j = 0; j < db; ++j) {
      UPoly t = mul(la, b[j]);
      na[j + da - db] = sub(na[j + da - db], t);
    }
    trim(na);
    a = std::move(na);
  }
  return a;
}

// Cheap certificate that gcd(a, b) has degree 0 in y: specialize x.
bool y_coprime_certificate(const BiPoly& a, const BiPoly& b) {
  static const long points[] = {3, -5, 7};
  for (long p : points) {
    Rational x(p);
    if (eval(a.back(), x) == 0 || eval(b.back(), x) == 0) continue;
    UPoly g = gcd(eval_x(a, x), eval_x(b, x));
    return degree(g) == 0;
  }
  return false;
}


// Heuristic gcd over Z (evaluate at a large integer, take an integer gcd,
// read the result back in a balanced radix); each candidate is verified by
// exact division, so failures only cost time.
using ZPoly = std::vector<mpz_class>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

mpz_class max_norm(const ZPoly& a) {
  mpz_class m = 0;
  for (const auto& c : a) {
    mpz_class v = abs(c);
    if (v > m) m = v;
  }
  return m;
}

mpz_class zcontent(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

mpz_class zeval(const ZPoly& a, const mpz_class& x) {
  mpz_class v = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) v = v * x + *it;
  return v;
}

ZPoly balanced_digits(mpz_class v, const mpz_class& base) {
  ZPoly out;
  mpz_class half = base / 2;
  while (v != 0) {
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), base.get_mpz_t());
    if (r > half) r -= base;
    out.push_back(r);
    v = (v - r) / base;
  }
  return out;
}

// Exact division in Z[y]; false if not divisible.
bool zdivides(const ZPoly& d, ZPoly a) {
  ztrim(a);
  int dd = static_cast<int>(d.size()) - 1;
  while (static_cast<int>(a.size()) - 1 >= dd && !a.empty()) {
    int da = static_cast<int>(a.size()) - 1;
    if (!mpz_divisible_p(a.back().get_mpz_t(), d.back().get_mpz_t())) return false;
    mpz_class c = a.back() / d.back();
    for (int j = 0; j <= dd; ++j) a[da - dd + j] -= c * d[j];
    ztrim(a);
    if (!a.empty() && static_cast<int>(a.size()) - 1 >= da) return false;
  }
  return a.empty();
}

std::optional<ZPoly> gcdheu1(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  if (a.empty()) return b;
  if (b.empty()) return a;
  mpz_class ca = zcontent(a), cb = zcontent(b), c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  for (auto& x : a) x /= ca;
  for (auto& x : b) x /= cb;
  if (a.size() == 1 || b.size() == 1) return ZPoly{c};
  mpz_class na = max_norm(a), nb = max_norm(b);
  mpz_class zeta = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 6; ++attempt) {
    mpz_class g;
    mpz_class va = zeval(a, zeta), vb = zeval(b, zeta);
    mpz_gcd(g.get_mpz_t(), va.get_mpz_t(), vb.get_mpz_t());
    ZPoly h = balanced_digits(g, zeta);
    ztrim(h);
    if (!h.empty()) {
      mpz_class ch = zcontent(h);
      for (auto& x : h) x /= ch;
      if (h.back() < 0)
        for (auto& x : h) x = -x;
      if (zdivides(h, a) && zdivides(h, b)) {
        for (auto& x : h) x *= c;
        return h;
      }
    }
    zeta = zeta * 73794 / 27011;
  }
  return std::nullopt;
}

using ZBiPoly = std::vector<ZPoly>;  // index = degree in y

std::optional<ZBiPoly> to_integer(const BiPoly& a) {
  mpz_class l = 1;
  for (const auto& u : a)
    for (const auto& c : u) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  ZBiPoly r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    r[j].resize(a[j].size());
    for (std::size_t i = 0; i < a[j].size(); ++i) {
      mpq_class v = a[j][i] * l;
      r[j][i] = v.get_num();
    }
  }
  return r;
}

BiPoly to_rational(const ZBiPoly& a) {
  BiPoly r(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) {
    r[j].resize(a[j].size());
    for (std::size_t i = 0; i < a[j].size(); ++i) r[j][i] = mpq_class(a[j][i]);
  }
  trim(r);
  return r;
}

std::optional<BiPoly> gcdheu2(const BiPoly& qa, const BiPoly& qb) {
  ZBiPoly a = *to_integer(qa), b = *to_integer(qb);
  mpz_class na = 0, nb = 0;
  for (const auto& u : a) {
    mpz_class v = max_norm(u);
    if (v > na) na = v;
  }
  for (const auto& u : b) {
    mpz_class v = max_norm(u);
    if (v > nb) nb = v;
  }
  mpz_class xi = 2 * (na < nb ? na : nb) + 29;
  for (int attempt = 0; attempt < 5; ++attempt) {
    ZPoly ea(a.size()), eb(b.size());
    for (std::size_t j = 0; j < a.size(); ++j) ea[j] = zeval(a[j], xi);
    for (std::size_t j = 0; j < b.size(); ++j) eb[j] = zeval(b[j], xi);
    auto h = gcdheu1(ea, eb);
    if (h) {
      ZBiPoly g(h->size());
      for (std::size_t j = 0; j < h->size(); ++j) g[j] = balanced_digits((*h)[j], xi);
      mpz_class cg = 0;
      for (const auto& u : g) {
        mpz_class c = zcontent(u);
        mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), c.get_mpz_t());
      }
      if (cg != 0) {
        for (auto& u : g)
          for (auto& c : u) c /= cg;
        BiPoly cand = to_rational(g);
        if (!cand.empty() && exact_div(qa, cand) && exact_div(qb, cand)) return cand;
      }
    }
    xi = xi * 73794 / 27011;
  }
  return std::nullopt;
}

BiPoly gcd_impl(const BiPoly& a0, const BiPoly& b0) {
  BiPoly a = a0, b = b0;
  if (deg_y(a) < deg_y(b)) std::swap(a, b);
  UPoly ca = content(a), cb = content(b);
  UPoly cg = gcd(ca, cb);
  a = primitive_part(a);
  b = primitive_part(b);
  if (deg_y(b) == 0) return BiPoly{cg};
  if (y_coprime_certificate(a, b)) return BiPoly{cg};
  while (true) {
    BiPoly r = prem(a, b);
    if (r.empty()) break;
    if (deg_y(r) == 0) return BiPoly{cg};
    a = std::move(b);
    b = primitive_part(r);
  }
  return mul_coeffs(b, cg);
}

}  // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  // Both coprime after swapping roles: gcd is a constant.
  if (y_coprime_certificate(a, b) && y_coprime_certificate(swap_vars(a), swap_vars(b))) return BiPoly{UPoly{1}};
  if (auto h = gcdheu2(a, b)) return *h;
  if (deg_y(a) > deg_x(a) && deg_y(b) > deg_x(b)) return swap_vars(gcd_impl(swap_vars(a), swap_vars(b)));
  return gcd_impl(a, b);
}

std::optional<BiPoly> exact_div(const BiPoly& a, const BiPoly& b) {
  if (b.empty()) return std::nullopt;
  BiPoly r = a;
  trim(r);
  int db = deg_y(b);
  if (deg_y(r) < db) {
    if (r.empty()) return BiPoly{};
    return std::nullopt;
  }
  BiPoly q(deg_y(r) - db + 1);
  const UPoly& lb = b.back();
  while (!r.empty() && deg_y(r) >= db) {
    int dr = deg_y(r);
    auto c = exact_div(r.back(), lb);
    if (!c) return std::nullopt;
    q[dr - db] = *c;
    for (int j = 0; j <= db; ++j) r[dr - db + j] = sub(r[dr - db + j], mul(*c, b[j]));
    trim(r);
    if (!r.empty() && deg_y(r) >= dr) return std::nullopt;
  }
  if (!r.empty()) return std::nullopt;
  trim(q);
  return q;
}

}  // namespace wc::detail
