#include "wallcross/stable.hpp"

#include "wallcross/ribbon.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace wc::stable {

using sym::Basis;
using sym::SymFunc;

std::string SlopePoint::to_string() const { return wc::to_string(m) + (side > 0 ? "+" : "-"); }

SlopePoint parse_slope(const std::string& m, int side) {
  if (side != 1 && side != -1) throw std::invalid_argument("side must be + or -");
  return SlopePoint{parse_rational(m), side};
}

bool WallCrossing::is_identity() const { return b == identity_matrix<LaurentPoly>(order.size()); }

namespace {

LaurentPoly to_qt(const Scalar& x, const std::string& what) {
  Scalar y = change_coordinates(x, Coords::Q1Q2, Coords::QT);
  if (!y.is_laurent()) throw std::logic_error(what + " is not a Laurent polynomial: " + x.to_string());
  return y.num();
}

Monomial chi_qt(const Partition& p) {
  auto st = partition_stats(p);
  return change_coordinates(st.chi, Coords::Q1Q2, Coords::QT);
}

long content_sum(const Partition& p) { return partition_stats(p).content_sum; }

// Single-term polynomial -> (coefficient, monomial).
std::pair<Rational, Monomial> as_term(const LaurentPoly& p) {
  if (!p.is_monomial()) throw std::logic_error("expected a monomial");
  return {p.terms().front().coeff, p.terms().front().mono};
}

std::size_t index_in(const std::vector<Partition>& order, const Partition& p) {
  return static_cast<std::size_t>(std::find(order.begin(), order.end(), p) - order.begin());
}

Matrix<LaurentPoly> unitriangular_inverse(const Matrix<LaurentPoly>& m) {
  std::size_t n = m.size();
  Matrix<LaurentPoly> x = identity_matrix<LaurentPoly>(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i) {
      LaurentPoly s;
      for (std::size_t k = j; k < i; ++k)
        if (!m[i][k].is_zero() && !x[k][j].is_zero()) s += m[i][k] * x[k][j];
      x[i][j] = -s;
    }
  return x;
}

// new_lambda = old_lambda + sum_nu B[lambda][nu] old_nu; the crossing is the inverse.
Crossed assemble(const StableTable& table, const Rational& w, const Matrix<LaurentPoly>& bmat) {
  std::size_t dim = table.order.size();
  Crossed out;
  out.table.n = table.n;
  out.table.slope = SlopePoint{w, 1};
  out.table.order = table.order;
  out.table.gamma = table.gamma;
  Matrix<LaurentPoly> m = identity_matrix<LaurentPoly>(dim);
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t nu = 0; nu < dim; ++nu) {
      if (bmat[l][nu].is_zero()) continue;
      m[nu][l] = bmat[l][nu];
      for (std::size_t mu = 0; mu < dim; ++mu)
        if (!table.gamma[nu][mu].is_zero()) out.table.gamma[l][mu] += bmat[l][nu] * table.gamma[nu][mu];
    }
  out.crossing = WallCrossing{table.n, w, table.order, unitriangular_inverse(m)};
  return out;
}

void require_side(const StableTable& table, const Rational& w) {
  StableTable probe = table;
  probe.slope = SlopePoint{w, -1};
  auto bad = validate(probe);
  if (!bad.empty()) throw std::invalid_argument("table does not sit just below wall " + wc::to_string(w) + ": " + bad[0]);
}

}  // namespace

LaurentPoly diagonal(const Partition& lambda) {
  LaurentPoly r(1);
  for (const Box& b : lambda.boxes()) {
    LaurentPoly f = LaurentPoly(Monomial{0, lambda.leg(b)}) - LaurentPoly(Monomial{lambda.arm(b) + 1, 0});
    r *= f;
  }
  return change_coordinates(r, Coords::Q1Q2, Coords::QT);
}

std::pair<long, long> degree_window(const Partition& lambda, const Partition& mu, const SlopePoint& slope) {
  long dc = content_sum(mu) - content_sum(lambda);
  auto [d0, d1] = diagonal(mu).t_degree_range();
  Rational l = d0.to_rational() + slope.m * dc;
  Rational u = d1.to_rational() + slope.m * dc;
  long sdc = slope.side * dc;
  Rational lower = is_integer(l) ? (sdc > 0 ? Rational(l + 1) : l) : ceil(l);
  Rational upper = is_integer(u) ? (sdc < 0 ? Rational(u - 1) : u) : floor(u);
  return {lower.get_num().get_si(), upper.get_num().get_si()};
}

std::vector<std::string> validate(const StableTable& table) {
  std::vector<std::string> bad;
  const auto& order = table.order;
  for (std::size_t l = 0; l < order.size(); ++l)
    for (std::size_t mu = 0; mu < order.size(); ++mu) {
      const LaurentPoly& g = table.gamma[l][mu];
      std::string where = order[l].to_string() + "|" + order[mu].to_string();
      if (l == mu && !(g == diagonal(order[l]))) bad.push_back("diagonal mismatch at " + where);
      if (g.is_zero()) continue;
      if (!dominates(order[l], order[mu])) {
        bad.push_back("entry outside dominance support at " + where);
        continue;
      }
      if (!g.has_integral_exponents()) bad.push_back("fractional exponent at " + where);
      auto [lo, hi] = degree_window(order[l], order[mu], table.slope);
      auto [d0, d1] = g.t_degree_range();
      if (d0.to_rational() < lo || d1.to_rational() > hi) {
        std::ostringstream os;
        os << "t-degrees [" << to_string(d0) << "," << to_string(d1) << "] outside window [" << lo << "," << hi
           << "] at " << where;
        bad.push_back(os.str());
      }
    }
  return bad;
}

const SymFunc& fixed_point_class(const Partition& mu) {
  static std::mutex m;
  static std::map<Partition, std::unique_ptr<SymFunc>> cache;
  {
    std::lock_guard<std::mutex> lock(m);
    auto it = cache.find(mu);
    if (it != cache.end()) return *it->second;
  }
  Scalar c = (Scalar(1) - Scalar::monomial(Monomial{0, 1})) / (sym::chi(mu) * sym::tangent_bracket(mu));
  auto v = std::make_unique<SymFunc>(sym::convert(c * sym::omega(sym::modified_macdonald(mu)), Basis::s));
  std::lock_guard<std::mutex> lock(m);
  return *cache.try_emplace(mu, std::move(v)).first->second;
}

StableTable seed_slope0(int n) {
  StableTable t;
  t.n = n;
  t.slope = SlopePoint{0, 1};
  t.order = partitions(n);
  std::size_t dim = t.order.size();
  t.gamma.assign(dim, std::vector<LaurentPoly>(dim));
  Scalar one_minus_q2 = Scalar(1) - Scalar::monomial(Monomial{0, 1});
  std::vector<SymFunc> h;
  for (const auto& mu : t.order) h.push_back(sym::modified_macdonald(mu));
  for (std::size_t l = 0; l < dim; ++l) {
    SymFunc s = SymFunc::basis_element(Basis::s, t.order[l]);
    SymFunc f = one_minus_q2 * sym::plethystic_scale(s, [](int k) {
                  return Scalar(1) / (Scalar(1) - Scalar::monomial(Monomial{0, k}));
                });
    SymFunc wf = sym::omega(f);
    for (std::size_t mu = 0; mu < dim; ++mu) {
      Scalar r = sym::inner_mod(wf, h[mu]) / one_minus_q2;
      t.gamma[l][mu] = to_qt(r, "seed restriction " + t.order[l].to_string() + "|" + t.order[mu].to_string());
    }
  }
  auto bad = validate(t);
  if (!bad.empty()) throw std::logic_error("slope-0 seed fails the stable basis axioms: " + bad[0]);
  return t;
}

std::vector<Rational> candidate_walls(int n, const Rational& lo, const Rational& hi) {
  auto parts = partitions(n);
  std::set<long> diffs;
  for (const auto& a : parts)
    for (const auto& b : parts) {
      long d = content_sum(a) - content_sum(b);
      if (d > 0) diffs.insert(d);
    }
  std::set<long> dens;
  long bmax = static_cast<long>(n) * (n - 1);
  for (long b = 2; b <= bmax; ++b)
    for (long d : diffs)
      if (d % b == 0) dens.insert(b);
  std::set<Rational> out;
  for (long b : dens) {
    Rational start = floor(lo * b);
    for (mpz_class a = start.get_num(); Rational(a, b) < hi; ++a) {
      if (gcd(a, mpz_class(b)) != 1) continue;
      Rational w(a, b);
      w.canonicalize();
      if (w > lo && w < hi) out.insert(w);
    }
  }
  return {out.begin(), out.end()};
}

Crossed cross_wall(const StableTable& table, const Rational& w) {
  require_side(table, w);
  const auto& order = table.order;
  std::size_t dim = order.size();
  SlopePoint target{w, 1};
  std::vector<LaurentPoly> diag(dim);
  std::vector<std::pair<long, long>> drange(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    diag[i] = table.gamma[i][i];
    auto [d0, d1] = diag[i].t_degree_range();
    drange[i] = {d0.num(), d1.num()};
  }
  Matrix<LaurentPoly> bmat(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t l = 0; l < dim; ++l) {
    std::vector<LaurentPoly> row = table.gamma[l];
    for (std::size_t nu = l + 1; nu < dim; ++nu) {
      if (!dominates(order[l], order[nu])) continue;
      auto [lo, hi] = degree_window(order[l], order[nu], target);
      auto [d0, d1] = drange[nu];
      auto [c0, m0] = as_term(diag[nu].t_slice(Exponent(d0)));
      auto [c1, m1] = as_term(diag[nu].t_slice(Exponent(d1)));
      LaurentPoly k = row[nu], acc;
      for (int guard = 0; !k.is_zero(); ++guard) {
        if (guard > 10000) throw std::runtime_error("axioms unsatisfiable at " + order[l].to_string());
        auto [k0, k1] = k.t_degree_range();
        LaurentPoly fac;
        if (k1.num() > hi) fac = k.t_slice(k1).scaled(-1 / c1).shifted(m1.inverse());
        else if (k0.num() < lo) fac = k.t_slice(k0).scaled(-1 / c0).shifted(m0.inverse());
        else break;
        acc += fac;
        k += fac * diag[nu];
      }
      if (acc.is_zero()) continue;
      bmat[l][nu] = acc;
      for (std::size_t mu = nu; mu < dim; ++mu)
        if (!table.gamma[nu][mu].is_zero()) row[mu] += acc * table.gamma[nu][mu];
    }
  }
  return assemble(table, w, bmat);
}

namespace {

// Row-reduces [a | rhs]; returns nullopt when inconsistent, sets `unique`.
std::optional<std::vector<Rational>> solve_rational(Matrix<Rational> a, std::vector<Rational> rhs, std::size_t cols,
                                                    bool& unique) {
  std::size_t rows = a.size(), r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    std::swap(rhs[piv], rhs[r]);
    Rational inv = 1 / a[r][c];
    for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      Rational f = a[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (a[r][j] != 0) a[i][j] -= f * a[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  unique = pivots.size() == cols;
  std::vector<Rational> x(cols, Rational(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs[i];
  return x;
}

}  // namespace

Crossed cross_wall_linear(const StableTable& table, const Rational& w) {
  require_side(table, w);
  const auto& order = table.order;
  std::size_t dim = order.size();
  SlopePoint target{w, 1};
  long b = w.get_den().get_si();

  long tmin = 0, tmax = 0, qmin = 0, qmax = 0;
  bool first = true;
  for (std::size_t l = 0; l < dim; ++l)
    for (std::size_t mu = 0; mu < dim; ++mu) {
      const LaurentPoly& g = table.gamma[l][mu];
      if (g.is_zero()) continue;
      auto [a0, a1] = g.t_degree_range();
      auto [b0, b1] = g.q_degree_range();
      auto [lo, hi] = degree_window(order[l], order[mu], target);
      long lo2 = std::min<long>(a0.floor(), lo), hi2 = std::max<long>(a1.ceil(), hi);
      if (first) tmin = lo2, tmax = hi2, qmin = b0.floor(), qmax = b1.ceil(), first = false;
      tmin = std::min(tmin, lo2);
      tmax = std::max(tmax, hi2);
      qmin = std::min<long>(qmin, b0.floor());
      qmax = std::max<long>(qmax, b1.ceil());
    }

  Matrix<LaurentPoly> bmat(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t l = 0; l < dim; ++l) {
    std::vector<std::size_t> below;
    for (std::size_t nu = l + 1; nu < dim; ++nu)
      if (dominates(order[l], order[nu])) below.push_back(nu);
    if (below.empty()) continue;
    bool solved = false;
    for (int attempt = 0; attempt <= 3 && !solved; ++attempt) {
      long margin = 2 * b * (attempt + 1);
      // unknown (nu, i, j): coefficient of q^i t^j in B[l][nu]
      std::vector<std::tuple<std::size_t, long, long>> unknowns;
      for (std::size_t nu : below) {
        auto [d0, d1] = table.gamma[nu][nu].t_degree_range();
        for (long j = tmin - d1.num(); j <= tmax - d0.num(); ++j)
          for (long i = qmin - qmax - margin; i <= qmax - qmin + margin; ++i) unknowns.push_back({nu, i, j});
      }
      std::map<std::pair<std::size_t, Monomial>, std::map<std::size_t, Rational>> eqs;
      std::map<std::pair<std::size_t, Monomial>, Rational> consts;
      for (std::size_t mu : below) {
        auto [lo, hi] = degree_window(order[l], order[mu], target);
        auto outside = [&](const Monomial& m) { return m.t.to_rational() < lo || m.t.to_rational() > hi; };
        for (const auto& t : table.gamma[l][mu].terms())
          if (outside(t.mono)) consts[{mu, t.mono}] += t.coeff;
        for (std::size_t u = 0; u < unknowns.size(); ++u) {
          auto [nu, i, j] = unknowns[u];
          for (const auto& t : table.gamma[nu][mu].terms()) {
            Monomial m = t.mono * Monomial{i, j};
            if (outside(m)) eqs[{mu, m}][u] += t.coeff;
          }
        }
      }
      std::set<std::pair<std::size_t, Monomial>> keys;
      for (auto& [k, _] : eqs) keys.insert(k);
      for (auto& [k, _] : consts) keys.insert(k);
      Matrix<Rational> a;
      std::vector<Rational> rhs;
      for (const auto& k : keys) {
        std::vector<Rational> row(unknowns.size(), Rational(0));
        auto it = eqs.find(k);
        if (it != eqs.end())
          for (auto& [u, c] : it->second) row[u] = c;
        a.push_back(std::move(row));
        auto ct = consts.find(k);
        rhs.push_back(ct == consts.end() ? Rational(0) : Rational(-ct->second));
      }
      bool unique = false;
      auto x = solve_rational(std::move(a), std::move(rhs), unknowns.size(), unique);
      if (!x) continue;
      if (!unique) throw std::runtime_error("uniqueness failure at " + order[l].to_string());
      for (std::size_t u = 0; u < unknowns.size(); ++u) {
        if ((*x)[u] == 0) continue;
        auto [nu, i, j] = unknowns[u];
        bmat[l][nu] += LaurentPoly(Monomial{i, j}, (*x)[u]);
      }
      solved = true;
    }
    if (!solved) throw std::runtime_error("axioms unsatisfiable at " + order[l].to_string());
  }
  return assemble(table, w, bmat);
}

StableTable nabla_shift(const StableTable& table, int k) {
  StableTable out = table;
  out.slope.m += k;
  std::vector<Monomial> chi;
  for (const auto& p : table.order) chi.push_back(chi_qt(p).pow(Exponent(k)));
  for (std::size_t l = 0; l < table.order.size(); ++l)
    for (std::size_t mu = 0; mu < table.order.size(); ++mu)
      out.gamma[l][mu] = table.gamma[l][mu].shifted(chi[mu] / chi[l]);
  return out;
}

namespace {

struct Chambers {
  std::mutex mu;
  std::vector<Rational> walls;         // candidate walls in (0, 1)
  std::vector<StableTable> tables;     // tables[c]: c walls crossed
  std::vector<WallCrossing> crossings;  // crossings[c]: at walls[c]
};

Chambers& chambers(int n) {
  static std::mutex m;
  static std::map<int, std::unique_ptr<Chambers>> all;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = all[n];
  if (!slot) {
    slot = std::make_unique<Chambers>();
    slot->walls = candidate_walls(n, 0, 1);
  }
  return *slot;
}

// Table with `count` walls of [0, 1) crossed; the caller holds ch.mu.
const StableTable& chamber_table(int n, Chambers& ch, std::size_t count) {
  if (ch.tables.empty()) ch.tables.push_back(seed_slope0(n));
  while (ch.tables.size() <= count) {
    std::size_t c = ch.tables.size() - 1;
    Crossed x = cross_wall(ch.tables[c], ch.walls[c]);
    ch.tables.push_back(std::move(x.table));
    ch.crossings.push_back(std::move(x.crossing));
  }
  return ch.tables[count];
}

}  // namespace

StableTable stable_basis(int n, const SlopePoint& slope) {
  if (slope.side != 1 && slope.side != -1) throw std::invalid_argument("side must be +1 or -1");
  Rational k = floor(slope.m);
  Rational f = slope.m - k;
  if (f == 0 && slope.side < 0) {
    k -= 1;
    f = 1;
  }
  Chambers& ch = chambers(n);
  std::size_t count = 0;
  while (count < ch.walls.size() && (ch.walls[count] < f || (ch.walls[count] == f && slope.side > 0))) ++count;
  StableTable base;
  {
    std::lock_guard<std::mutex> lock(ch.mu);
    base = chamber_table(n, ch, count);
  }
  StableTable out = nabla_shift(base, static_cast<int>(k.get_num().get_si()));
  out.slope = slope;
  return out;
}

StableTable stable_basis_by_walls(int n, const SlopePoint& slope) {
  if (slope.m < 0) throw std::invalid_argument("wall-by-wall path needs a nonnegative slope");
  StableTable t = seed_slope0(n);
  Rational hi = slope.m + 1;
  for (const Rational& w : candidate_walls(n, 0, hi)) {
    if (w > slope.m || (w == slope.m && slope.side < 0)) break;
    t = cross_wall(t, w).table;
  }
  t.slope = slope;
  return t;
}

WallCrossing wall_crossing(int n, const Rational& w) {
  Rational k = floor(w);
  Rational f = w - k;
  if (f != 0) {
    Chambers& ch = chambers(n);
    auto it = std::find(ch.walls.begin(), ch.walls.end(), f);
    if (it != ch.walls.end()) {
      std::size_t c = static_cast<std::size_t>(it - ch.walls.begin());
      std::lock_guard<std::mutex> lock(ch.mu);
      chamber_table(n, ch, c + 1);
      WallCrossing out = ch.crossings[c];
      if (k == 0) return out;
      // s^{m+k} = nabla^k s^m / chi^k conjugates the crossing by chi
      int kk = static_cast<int>(k.get_num().get_si());
      std::vector<Monomial> chi;
      for (const auto& p : out.order) chi.push_back(chi_qt(p).pow(Exponent(kk)));
      for (std::size_t r = 0; r < out.order.size(); ++r)
        for (std::size_t c2 = 0; c2 < out.order.size(); ++c2) out.b[r][c2] = out.b[r][c2].shifted(chi[r] / chi[c2]);
      out.wall = w;
      return out;
    }
  }
  return cross_wall(stable_basis(n, SlopePoint{w, -1}), w).crossing;
}

Monomial renorm_factor(const Partition& lambda, const Rational& m) {
  Exponent em(m);
  Monomial o = chi_qt(lambda).pow(em);
  long b = m.get_den().get_si();
  if (b == 1) return o;
  std::optional<Exponent> q_exp;
  for (const auto& seq : ribbon_removal_sequences(lambda, static_cast<int>(b))) {
    Rational e = 0;
    for (const auto& r : seq)
      for (int j = 1; j < b; ++j) {
        Rational mj = m * j;
        e += r.step_is_right(j) ? Rational(mj - floor(mj)) : Rational(ceil(mj) - mj);
      }
    Exponent ex(e);
    if (q_exp && !(*q_exp == ex))
      throw std::logic_error("renormalization depends on the ribbon decomposition of " + lambda.to_string());
    q_exp = ex;
  }
  return o * Monomial{q_exp.value_or(Exponent(0)), 0};
}

Matrix<LaurentPoly> renormalize(const WallCrossing& w) {
  std::vector<Monomial> r;
  for (const auto& p : w.order) r.push_back(renorm_factor(p, w.wall));
  Matrix<LaurentPoly> out = w.b;
  for (std::size_t mu = 0; mu < w.order.size(); ++mu)
    for (std::size_t l = 0; l < w.order.size(); ++l) out[mu][l] = w.b[mu][l].shifted(r[l] / r[mu]);
  return out;
}

Matrix<Scalar> transition_matrix(int n, const SlopePoint& from, const SlopePoint& to, bool renormalized) {
  StableTable a = stable_basis(n, from), b = stable_basis(n, to);
  std::size_t dim = a.order.size();
  Matrix<Scalar> ga(dim, std::vector<Scalar>(dim)), gb(dim, std::vector<Scalar>(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      ga[i][j] = Scalar(a.gamma[i][j]);
      gb[i][j] = Scalar(b.gamma[i][j]);
    }
  // gamma_from = X^T gamma_to
  auto x = solve(transpose(gb), transpose(ga));
  if (!x) throw std::logic_error("stable table is singular");
  Matrix<Scalar> out = *x;
  if (renormalized) {
    std::vector<Monomial> r;
    for (const auto& p : a.order) r.push_back(renorm_factor(p, to.m));
    for (std::size_t mu = 0; mu < dim; ++mu)
      for (std::size_t l = 0; l < dim; ++l) out[mu][l] = out[mu][l] * Scalar::monomial(r[l] / r[mu]);
  }
  return out;
}

SymFunc stable_function(const StableTable& table, const Partition& lambda, bool renormalized) {
  std::size_t l = index_in(table.order, lambda);
  if (l == table.order.size()) throw std::invalid_argument("partition of the wrong size");
  SymFunc out(table.n, Basis::s);
  for (std::size_t mu = 0; mu < table.order.size(); ++mu) {
    const LaurentPoly& g = table.gamma[l][mu];
    if (g.is_zero()) continue;
    Scalar c(change_coordinates(g, Coords::QT, Coords::Q1Q2));
    out = out + c * fixed_point_class(table.order[mu]);
  }
  if (renormalized) {
    Monomial r = change_coordinates(renorm_factor(lambda, table.slope.m), Coords::QT, Coords::Q1Q2);
    out = Scalar::monomial(r) * out;
  }
  return out;
}

}  // namespace wc::stable
