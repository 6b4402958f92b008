#include "wallcross/symfunc.hpp"

#include "wallcross/ribbon.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace wc::sym {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::P: return "P";
    case Basis::Htilde: return "Htilde";
  }
  return "?";
}

Basis parse_basis(const std::string& name) {
  for (Basis b : {Basis::m, Basis::e, Basis::p, Basis::s, Basis::P, Basis::Htilde})
    if (basis_name(b) == name) return b;
  throw std::invalid_argument("unknown basis '" + name + "'");
}

SymFunc::SymFunc(int degree, Basis basis) : degree_(degree), basis_(basis) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  coeffs_.assign(tables(degree).parts.size(), Scalar());
}

SymFunc SymFunc::basis_element(Basis basis, const Partition& p, const Scalar& c) {
  SymFunc f(p.size(), basis);
  f.coeff(p) = c;
  return f;
}

std::size_t index_of(const Partition& p) {
  const auto& t = tables(p.size());
  return t.index.at(p);
}

const Scalar& SymFunc::coeff(const Partition& p) const {
  if (p.size() != degree_) throw std::invalid_argument("partition of wrong size");
  return coeffs_[index_of(p)];
}

Scalar& SymFunc::coeff(const Partition& p) {
  if (p.size() != degree_) throw std::invalid_argument("partition of wrong size");
  return coeffs_[index_of(p)];
}

bool SymFunc::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

SymFunc SymFunc::operator-() const {
  SymFunc r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

static void check_compatible(const SymFunc& a, const SymFunc& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch");
}

SymFunc operator+(const SymFunc& a, const SymFunc& b) {
  check_compatible(a, b);
  SymFunc bb = convert(b, a.basis());
  SymFunc r = a;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += bb.coeffs_[i];
  return r;
}

SymFunc operator-(const SymFunc& a, const SymFunc& b) { return a + (-b); }

SymFunc operator*(const Scalar& c, const SymFunc& f) {
  SymFunc r = f;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.degree() != b.degree()) return false;
  if (a.basis() == b.basis()) return a.coeffs_ == b.coeffs_;
  return convert(a, Basis::p).coeffs_ == convert(b, Basis::p).coeffs_;
}

// ---------------------------------------------------------------------------
// Rational tables

namespace {

long long p_to_m_count(const Partition& rho, const Partition& lambda) {
  std::map<std::pair<std::size_t, std::vector<int>>, long long> memo;
  std::function<long long(std::size_t, std::vector<int>&)> rec = [&](std::size_t i, std::vector<int>& cap) -> long long {
    if (i == static_cast<std::size_t>(rho.length())) return 1;
    auto key = std::make_pair(i, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    long long total = 0;
    int part = rho.parts()[i];
    for (auto& c : cap) {
      if (c < part) continue;
      c -= part;
      total += rec(i + 1, cap);
      c += part;
    }
    memo[key] = total;
    return total;
  };
  std::vector<int> cap = lambda.parts();
  return rec(0, cap);
}

std::mutex chi_mutex;
std::map<std::pair<Partition, Partition>, long long> chi_memo;

long long mn_rule(const Partition& lambda, const std::vector<int>& rho, std::size_t from) {
  if (from == rho.size()) return lambda.empty() ? 1 : 0;
  long long total = 0;
  for (const auto& m : removable_ribbons(lambda, rho[from])) {
    long long sign = (m.ribbon.height() % 2) ? -1 : 1;
    total += sign * mn_rule(m.shape, rho, from + 1);
  }
  return total;
}

std::shared_ptr<DegreeTables> build_tables(int n) {
  auto t = std::make_shared<DegreeTables>();
  t->parts = partitions(n);
  std::size_t N = t->parts.size();
  for (std::size_t i = 0; i < N; ++i) {
    t->index[t->parts[i]] = i;
    t->z.push_back(z_factor(t->parts[i]));
  }
  t->character.assign(N, std::vector<Rational>(N));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) t->character[i][j] = Rational(static_cast<long>(character_value(t->parts[i], t->parts[j])));

  // m: p_rho = sum_lambda count m_lambda
  Matrix<Rational> p_in_m(N, std::vector<Rational>(N));
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t l = 0; l < N; ++l) p_in_m[r][l] = Rational(static_cast<long>(p_to_m_count(t->parts[r], t->parts[l])));
  t->from_p[Basis::m] = p_in_m;
  t->to_p[Basis::m] = inverse(p_in_m);

  t->to_p[Basis::p] = identity_matrix<Rational>(N);
  t->from_p[Basis::p] = identity_matrix<Rational>(N);

  // s_lambda = sum_rho chi^lambda(rho) / z_rho p_rho
  Matrix<Rational> s_in_p(N, std::vector<Rational>(N));
  Matrix<Rational> p_in_s(N, std::vector<Rational>(N));
  for (std::size_t l = 0; l < N; ++l)
    for (std::size_t r = 0; r < N; ++r) {
      s_in_p[l][r] = t->character[l][r] / Rational(static_cast<long>(t->z[r]));
      p_in_s[r][l] = t->character[l][r];
    }
  t->to_p[Basis::s] = s_in_p;
  t->from_p[Basis::s] = p_in_s;

  // e_lambda = prod e_k, e_k = sum_rho eps_rho p_rho / z_rho
  Matrix<Rational> e_in_p(N, std::vector<Rational>(N));
  for (std::size_t l = 0; l < N; ++l) {
    std::map<Partition, Rational> acc{{Partition{}, Rational(1)}};
    for (int k : t->parts[l].parts()) {
      std::map<Partition, Rational> next;
      for (const auto& rho : partitions(k)) {
        Rational c = Rational((k - rho.length()) % 2 ? -1 : 1) / Rational(static_cast<long>(z_factor(rho)));
        for (const auto& [mu, a] : acc) {
          std::vector<int> parts = mu.parts();
          parts.insert(parts.end(), rho.parts().begin(), rho.parts().end());
          std::sort(parts.rbegin(), parts.rend());
          next[Partition(parts)] += a * c;
        }
      }
      acc = std::move(next);
    }
    for (const auto& [rho, c] : acc) e_in_p[l][t->index.at(rho)] = c;
  }
  t->to_p[Basis::e] = e_in_p;
  t->from_p[Basis::e] = inverse(e_in_p);
  return t;
}

std::mutex tables_mutex;
std::map<int, std::shared_ptr<DegreeTables>> tables_cache;

}  // namespace

long long character_value(const Partition& lambda, const Partition& rho) {
  if (lambda.size() != rho.size()) throw std::invalid_argument("character of mismatched sizes");
  {
    std::lock_guard lock(chi_mutex);
    if (auto it = chi_memo.find({lambda, rho}); it != chi_memo.end()) return it->second;
  }
  long long v = mn_rule(lambda, rho.parts(), 0);
  std::lock_guard lock(chi_mutex);
  chi_memo[{lambda, rho}] = v;
  return v;
}

const DegreeTables& tables(int n) {
  std::lock_guard lock(tables_mutex);
  auto& slot = tables_cache[n];
  if (!slot) slot = build_tables(n);
  return *slot;
}

// ---------------------------------------------------------------------------
// Macdonald data

namespace {

Scalar mono12(int a, int b) { return Scalar::monomial(Monomial{a, b}); }
Scalar one_minus(int a, int b) { return Scalar(1) - mono12(a, b); }

struct MacdonaldData {
  std::vector<std::vector<Scalar>> P;       // p-basis coefficients
  std::vector<Scalar> P_norm;
  std::vector<std::vector<Scalar>> H;       // p-basis coefficients
  std::vector<Scalar> H_norm;
};

std::vector<Scalar> weights0(int n) {
  const auto& t = tables(n);
  std::vector<Scalar> w;
  for (std::size_t r = 0; r < t.parts.size(); ++r) {
    Scalar x(Rational(static_cast<long>(t.z[r])));
    for (int k : t.parts[r].parts()) x *= one_minus(k, 0) / one_minus(0, -k);
    w.push_back(x);
  }
  return w;
}

std::vector<Scalar> weights_mod(int n) {
  const auto& t = tables(n);
  std::vector<Scalar> w;
  for (std::size_t r = 0; r < t.parts.size(); ++r) {
    Scalar x(Rational(static_cast<long>(t.z[r])));
    for (int k : t.parts[r].parts()) {
      x *= one_minus(k, 0) * one_minus(0, k);
      if (k % 2 == 0) x = -x;
    }
    w.push_back(x);
  }
  return w;
}

Scalar pair_p(const std::vector<Scalar>& a, const std::vector<Scalar>& b, const std::vector<Scalar>& w) {
  Scalar total;
  for (std::size_t r = 0; r < a.size(); ++r) {
    if (a[r].is_zero() || b[r].is_zero()) continue;
    total += a[r] * b[r] * w[r];
  }
  return total;
}

std::shared_ptr<MacdonaldData> build_macdonald(int n) {
  const auto& t = tables(n);
  std::size_t N = t.parts.size();
  auto d = std::make_shared<MacdonaldData>();
  d->P.resize(N);
  d->P_norm.resize(N);
  d->H.resize(N);
  d->H_norm.resize(N);
  auto w0 = weights0(n);
  auto wm = weights_mod(n);
  const auto& m_in_p = t.to_p.at(Basis::m);
  std::vector<std::vector<Scalar>> weighted(N);  // P_mu with the pairing weights folded in
  // Ascending order, so dominance-smaller partitions are done first.
  for (std::size_t li = N; li-- > 0;) {
    std::vector<Scalar> v(N);
    for (std::size_t r = 0; r < N; ++r) v[r] = Scalar(m_in_p[li][r]);
    for (std::size_t mi = li + 1; mi < N; ++mi) {
      if (!strictly_dominates(t.parts[li], t.parts[mi])) continue;
      Scalar pairing;
      for (std::size_t r = 0; r < N; ++r)
        if (m_in_p[li][r] != 0 && !weighted[mi][r].is_zero()) pairing += Scalar(m_in_p[li][r]) * weighted[mi][r];
      Scalar c = pairing / d->P_norm[mi];
      if (c.is_zero()) continue;
      for (std::size_t r = 0; r < N; ++r)
        if (!d->P[mi][r].is_zero()) v[r] -= c * d->P[mi][r];
    }
    weighted[li].resize(N);
    for (std::size_t r = 0; r < N; ++r) weighted[li][r] = v[r] * w0[r];
    // <P, P> = <m_lambda, P> since P - m_lambda is orthogonal to P
    Scalar norm;
    for (std::size_t r = 0; r < N; ++r)
      if (m_in_p[li][r] != 0) norm += Scalar(m_in_p[li][r]) * weighted[li][r];
    d->P[li] = v;
    d->P_norm[li] = norm;
  }
  for (std::size_t li = 0; li < N; ++li) {
    Scalar c = jtilde_scale(t.parts[li]);
    std::vector<Scalar> h(N);
    for (std::size_t r = 0; r < N; ++r) {
      Scalar x = c * d->P[li][r];
      for (int k : t.parts[r].parts()) x /= one_minus(0, -k);
      h[r] = x;
    }
    d->H[li] = h;
    d->H_norm[li] = pair_p(h, h, wm);
  }
  return d;
}

std::mutex mac_mutex;
std::map<int, std::shared_ptr<MacdonaldData>> mac_cache;

const MacdonaldData& macdonald(int n) {
  std::lock_guard lock(mac_mutex);
  auto& slot = mac_cache[n];
  if (!slot) slot = build_macdonald(n);
  return *slot;
}

std::vector<Scalar> to_p_coeffs(const SymFunc& f) {
  const auto& t = tables(f.degree());
  std::size_t N = t.parts.size();
  std::vector<Scalar> out(N);
  if (f.basis() == Basis::p) return f.coeffs();
  for (std::size_t l = 0; l < N; ++l) {
    const Scalar& c = f.coeffs()[l];
    if (c.is_zero()) continue;
    if (f.basis() == Basis::P || f.basis() == Basis::Htilde) {
      const auto& md = macdonald(f.degree());
      const auto& row = f.basis() == Basis::P ? md.P[l] : md.H[l];
      for (std::size_t r = 0; r < N; ++r)
        if (!row[r].is_zero()) out[r] += c * row[r];
    } else {
      const auto& row = t.to_p.at(f.basis())[l];
      for (std::size_t r = 0; r < N; ++r)
        if (row[r] != 0) out[r] += c * Scalar(row[r]);
    }
  }
  return out;
}

}  // namespace

SymFunc convert(const SymFunc& f, Basis target) {
  if (f.basis() == target) return f;
  int n = f.degree();
  const auto& t = tables(n);
  std::size_t N = t.parts.size();
  std::vector<Scalar> pc = to_p_coeffs(f);
  SymFunc out(n, target);
  if (target == Basis::p) {
    out.coeffs() = pc;
    return out;
  }
  if (target == Basis::P || target == Basis::Htilde) {
    const auto& md = macdonald(n);
    auto w = target == Basis::P ? weights0(n) : weights_mod(n);
    for (std::size_t l = 0; l < N; ++l) {
      const auto& row = target == Basis::P ? md.P[l] : md.H[l];
      const auto& norm = target == Basis::P ? md.P_norm[l] : md.H_norm[l];
      out.coeffs()[l] = pair_p(pc, row, w) / norm;
    }
    return out;
  }
  const auto& back = t.from_p.at(target);
  for (std::size_t r = 0; r < N; ++r) {
    if (pc[r].is_zero()) continue;
    for (std::size_t l = 0; l < N; ++l)
      if (back[r][l] != 0) out.coeffs()[l] += pc[r] * Scalar(back[r][l]);
  }
  return out;
}

SymFunc plethystic_scale(const SymFunc& f, const std::function<Scalar(int)>& multiplier) {
  SymFunc g = convert(f, Basis::p);
  const auto& t = tables(f.degree());
  for (std::size_t r = 0; r < t.parts.size(); ++r) {
    if (g.coeffs()[r].is_zero()) continue;
    Scalar x = g.coeffs()[r];
    for (int k : t.parts[r].parts()) x *= multiplier(k);
    g.coeffs()[r] = x;
  }
  return g;
}

SymFunc omega(const SymFunc& f) {
  if (f.basis() == Basis::s) {
    SymFunc out(f.degree(), Basis::s);
    for (const auto& p : tables(f.degree()).parts) out.coeff(p.conjugate()) = f.coeff(p);
    return out;
  }
  return convert(plethystic_scale(f, [](int k) { return Scalar(k % 2 ? 1 : -1); }), f.basis());
}

SymFunc product(const SymFunc& a, const SymFunc& b) {
  SymFunc pa = convert(a, Basis::p), pb = convert(b, Basis::p);
  SymFunc out(a.degree() + b.degree(), Basis::p);
  const auto& ta = tables(a.degree());
  const auto& tb = tables(b.degree());
  for (std::size_t i = 0; i < ta.parts.size(); ++i) {
    if (pa.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < tb.parts.size(); ++j) {
      if (pb.coeffs()[j].is_zero()) continue;
      std::vector<int> parts = ta.parts[i].parts();
      parts.insert(parts.end(), tb.parts[j].parts().begin(), tb.parts[j].parts().end());
      std::sort(parts.rbegin(), parts.rend());
      out.coeff(Partition(parts)) += pa.coeffs()[i] * pb.coeffs()[j];
    }
  }
  return out;
}

SymFunc compose_power_sum(const SymFunc& f, int b) {
  SymFunc pf = convert(f, Basis::p);
  SymFunc out(f.degree() * b, Basis::p);
  const auto& t = tables(f.degree());
  for (std::size_t i = 0; i < t.parts.size(); ++i) {
    if (pf.coeffs()[i].is_zero()) continue;
    std::vector<int> parts = t.parts[i].parts();
    for (int& x : parts) x *= b;
    out.coeff(Partition(parts)) += pf.coeffs()[i];
  }
  return out;
}

Scalar inner0(const SymFunc& f, const SymFunc& g) {
  check_compatible(f, g);
  return pair_p(to_p_coeffs(f), to_p_coeffs(g), weights0(f.degree()));
}

Scalar inner_mod(const SymFunc& f, const SymFunc& g) {
  check_compatible(f, g);
  return pair_p(to_p_coeffs(f), to_p_coeffs(g), weights_mod(f.degree()));
}

Scalar chi(const Partition& lambda) { return Scalar::monomial(partition_stats(lambda).chi); }

Scalar tangent_bracket(const Partition& lambda) { return bracket(tangent_character(lambda)); }

Scalar jtilde_scale(const Partition& lambda) {
  Scalar c = mono12(0, -lambda.size());
  for (const Box& b : lambda.boxes()) c *= mono12(0, lambda.leg(b) + 1) - mono12(lambda.arm(b), 0);
  return c;
}

SymFunc macdonald_P(const Partition& lambda) {
  SymFunc f(lambda.size(), Basis::p);
  f.coeffs() = macdonald(lambda.size()).P[index_of(lambda)];
  return f;
}

SymFunc modified_macdonald(const Partition& lambda) {
  SymFunc f(lambda.size(), Basis::p);
  f.coeffs() = macdonald(lambda.size()).H[index_of(lambda)];
  return f;
}

IntegralForms integral_forms(const Partition& lambda) {
  return {jtilde_scale(lambda) * macdonald_P(lambda), modified_macdonald(lambda)};
}

Scalar macdonald_norm(const Partition& lambda) { return macdonald(lambda.size()).P_norm[index_of(lambda)]; }
Scalar modified_norm(const Partition& lambda) { return macdonald(lambda.size()).H_norm[index_of(lambda)]; }

SymFunc nabla(const SymFunc& f, int power) {
  SymFunc h = convert(f, Basis::Htilde);
  const auto& t = tables(f.degree());
  for (std::size_t l = 0; l < t.parts.size(); ++l)
    if (!h.coeffs()[l].is_zero()) h.coeffs()[l] *= chi(t.parts[l]).pow(power);
  return convert(h, f.basis());
}

Scalar restrict(const SymFunc& f, const Partition& lambda) {
  if (lambda.size() != f.degree()) throw std::invalid_argument("restriction at a partition of the wrong size");
  return convert(f, Basis::Htilde).coeff(lambda) * tangent_bracket(lambda);
}

std::vector<Scalar> restrictions(const SymFunc& f) {
  SymFunc h = convert(f, Basis::Htilde);
  const auto& t = tables(f.degree());
  std::vector<Scalar> out;
  for (std::size_t l = 0; l < t.parts.size(); ++l) out.push_back(h.coeffs()[l] * tangent_bracket(t.parts[l]));
  return out;
}

SymFunc from_restrictions(int degree, const std::vector<Scalar>& values) {
  const auto& t = tables(degree);
  if (values.size() != t.parts.size()) throw std::invalid_argument("wrong number of restrictions");
  SymFunc h(degree, Basis::Htilde);
  for (std::size_t l = 0; l < t.parts.size(); ++l) h.coeffs()[l] = values[l] / tangent_bracket(t.parts[l]);
  return h;
}

Scalar euler_form(const SymFunc& f, const SymFunc& g) {
  check_compatible(f, g);
  auto a = restrictions(f), b = restrictions(g);
  const auto& t = tables(f.degree());
  Scalar total;
  for (std::size_t l = 0; l < t.parts.size(); ++l) total += a[l] * b[l] / tangent_bracket(t.parts[l]);
  return total;
}

}  // namespace wc::sym
