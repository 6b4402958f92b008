#include "wallcross/fock.hpp"

#include "wallcross/ribbon.hpp"
#include "wallcross/scalar.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace wc::fock {

FockVector FockVector::basis(const Partition& p, const LaurentPoly& c) {
  FockVector v;
  v.add(p, c);
  return v;
}

LaurentPoly FockVector::coeff(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void FockVector::add(const Partition& p, const LaurentPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

FockVector FockVector::operator-() const {
  FockVector r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, -c);
  return r;
}

FockVector operator+(const FockVector& a, const FockVector& b) {
  FockVector r = a;
  for (const auto& [p, c] : b.terms_) r.add(p, c);
  return r;
}

FockVector operator-(const FockVector& a, const FockVector& b) { return a + (-b); }

FockVector FockVector::scaled(const LaurentPoly& c) const {
  FockVector r;
  if (c.is_zero()) return r;
  for (const auto& [p, x] : terms_) r.terms_.emplace(p, x * c);
  return r;
}

FockVector FockVector::bar_coefficients() const {
  FockVector r;
  for (const auto& [p, c] : terms_) r.terms_.emplace(p, bar(c));
  return r;
}

std::string FockVector::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*|" << p.to_string() << ">";
  }
  return os.str();
}

LaurentPoly q_power(long k) { return LaurentPoly::var_q(Exponent(k)); }

LaurentPoly bar(const LaurentPoly& p) {
  return p.map_monomials([](const Monomial& m) { return Monomial{-m.q, m.t}; });
}

namespace {

Partition add_box(const Partition& p, const Box& b) {
  std::vector<int> parts = p.parts();
  if (b.y == p.length()) parts.push_back(1);
  else ++parts[b.y];
  return Partition(std::move(parts));
}

Partition remove_box(const Partition& p, const Box& b) {
  std::vector<int> parts = p.parts();
  if (--parts[b.y] == 0) parts.pop_back();
  return Partition(std::move(parts));
}

bool fits(const Partition& p, const Truncation& tr) { return !tr.max_size || p.size() <= *tr.max_size; }

void check_residue(int i, int b) {
  if (b < 2) throw std::invalid_argument("Chevalley generators need b >= 2");
  if (i < 0 || i >= b) throw std::invalid_argument("residue out of range");
}

LaurentPoly signed_power(int h, int sign) {
  // (-q)^(sign*h)
  LaurentPoly r = q_power(static_cast<long>(sign) * h);
  return h % 2 ? -r : r;
}

using StripKey = std::tuple<Partition, int, int, bool>;

const std::vector<HorizontalStrip>& strips(const Partition& p, int k, int b, bool up) {
  static std::mutex mu;
  static std::map<StripKey, std::vector<HorizontalStrip>> cache;
  StripKey key{p, k, b, up};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto value = up ? horizontal_strips_up(p, k, b) : horizontal_strips_down(p, k, b);
  std::lock_guard<std::mutex> lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

}  // namespace

FockVector apply_f(int i, const FockVector& v, int b, Frame frame, Truncation tr) {
  check_residue(i, b);
  FockVector r;
  for (const auto& [mu, c] : v.terms()) {
    for (const Box& node : mu.addable()) {
      if (residue(node, b) != i) continue;
      Partition lambda = add_box(mu, node);
      if (!fits(lambda, tr)) continue;
      int n = node_counts(mu, lambda, node, b).right();
      r.add(lambda, c * q_power(frame == Frame::Standard ? n : -n));
    }
  }
  return r;
}

FockVector apply_e(int i, const FockVector& v, int b) {
  check_residue(i, b);
  FockVector r;
  for (const auto& [lambda, c] : v.terms()) {
    for (const Box& node : lambda.removable()) {
      if (residue(node, b) != i) continue;
      Partition mu = remove_box(lambda, node);
      r.add(mu, c * q_power(-node_counts(mu, lambda, node, b).left()));
    }
  }
  return r;
}

FockVector apply_K(int i, const FockVector& v, int b) {
  check_residue(i, b);
  FockVector r;
  for (const auto& [p, c] : v.terms()) r.add(p, c * q_power(node_balance(p, i, b)));
  return r;
}

FockVector apply_D(const FockVector& v, int b) {
  FockVector r;
  for (const auto& [p, c] : v.terms()) r.add(p, c * q_power(-node_balance(p, 0, b)));
  return r;
}

FockVector apply_V(int k, const FockVector& v, int b, Frame frame, Truncation tr) {
  if (k == 0) return v;
  if (b < 1) throw std::invalid_argument("b must be positive");
  int sign = frame == Frame::Standard ? -1 : 1;
  FockVector r;
  for (const auto& [p, c] : v.terms()) {
    if (k > 0 && tr.max_size && p.size() + k * b > *tr.max_size) continue;
    for (const auto& s : strips(p, k > 0 ? k : -k, b, k > 0)) {
      const Partition& target = k > 0 ? s.outer : s.inner;
      r.add(target, c * signed_power(s.spin, sign));
    }
  }
  return r;
}

FockVector apply_B(int k, const FockVector& v, int b, Truncation tr) {
  if (k == 0) throw std::invalid_argument("B_0 is not defined");
  int m = k > 0 ? k : -k;
  int dir = k > 0 ? -1 : 1;  // B_{-m} pairs with V_m, B_m with V_{-m}
  FockVector r = apply_V(dir * m, v, b, Frame::Standard, tr).scaled(LaurentPoly(m));
  for (int i = 1; i < m; ++i) {
    FockVector w = apply_V(dir * (m - i), v, b, Frame::Standard, tr);
    r = r - apply_B(-dir * i, w, b, tr);
  }
  return r;
}

Matrix<LaurentPoly> operator_matrix(const std::function<FockVector(const FockVector&)>& op, int n, int m) {
  auto cols = partitions(n);
  auto rows = partitions(m);
  Matrix<LaurentPoly> out(rows.size(), std::vector<LaurentPoly>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    FockVector w = op(FockVector::basis(cols[j]));
    for (const auto& [p, c] : w.terms()) {
      auto it = std::find(rows.begin(), rows.end(), p);
      if (it == rows.end()) throw std::logic_error("operator left the target degree");
      out[it - rows.begin()][j] = c;
    }
  }
  return out;
}

const LaurentPoly& BarMatrix::entry(const Partition& lambda, const Partition& mu) const {
  auto col = std::find(order.begin(), order.end(), lambda) - order.begin();
  auto row = std::find(order.begin(), order.end(), mu) - order.begin();
  if (col == static_cast<long>(order.size()) || row == static_cast<long>(order.size()))
    throw std::out_of_range("partition not in matrix order");
  return a[row][col];
}

namespace {

// Incremental row echelon form over Q.
class EchelonQ {
 public:
  explicit EchelonQ(std::size_t dim) : dim_(dim) {}
  std::size_t rank() const { return rows_.size(); }

  bool insert(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      std::size_t p = pivots_[r];
      if (v[p] == 0) continue;
      Rational f = v[p];
      for (std::size_t j = p; j < dim_; ++j) v[j] -= f * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < dim_ && v[p] == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

 private:
  std::size_t dim_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

Scalar to_scalar(const LaurentPoly& p) { return Scalar(p); }

LaurentPoly to_laurent(const Scalar& s, const Partition& lambda, const Partition& mu) {
  if (!s.is_laurent())
    throw std::logic_error("bar matrix entry " + lambda.to_string() + "|" + mu.to_string() +
                           " is not a Laurent polynomial: " + s.to_string());
  return s.num();
}

struct Candidate {
  int op;  // 0..b-1: f_i on degree d-1; b + k - 1: V_k on degree d - k*b
  std::size_t source;
};

}  // namespace

BarMatrix bar_matrix(int n, int b, const BarOptions& opt) {
  if (n < 0 || b < 1) throw std::invalid_argument("bar_matrix needs n >= 0 and b >= 1");
  std::mt19937 rng(opt.shuffle_seed);
  std::vector<std::vector<FockVector>> span(n + 1);
  span[0].push_back(FockVector::vacuum());
  for (int d = 1; d <= n; ++d) {
    auto parts = partitions(d);
    std::map<Partition, std::size_t, CanonicalLess> index;
    for (std::size_t i = 0; i < parts.size(); ++i) index[parts[i]] = i;

    std::vector<Candidate> cands;
    if (b >= 2)
      for (std::size_t s = 0; s < span[d - 1].size(); ++s)
        for (int i = 0; i < b; ++i) cands.push_back({i, s});
    for (int k = 1; k * b <= d; ++k)
      for (std::size_t s = 0; s < span[d - k * b].size(); ++s) cands.push_back({b + k - 1, s});
    if (opt.shuffle_seed) std::shuffle(cands.begin(), cands.end(), rng);

    EchelonQ ech(parts.size());
    for (const auto& c : cands) {
      if (ech.rank() == parts.size()) break;
      FockVector w;
      if (c.op < b) w = apply_f(c.op, span[d - 1][c.source], b);
      else {
        int k = c.op - b + 1;
        w = apply_V(k, span[d - k * b][c.source], b);
      }
      if (w.is_zero()) continue;
      std::vector<Rational> row(parts.size(), Rational(0));
      for (const auto& [p, x] : w.terms()) row[index.at(p)] = x.evaluate(opt.probe, 1);
      if (ech.insert(std::move(row))) span[d].push_back(std::move(w));
    }
    if (ech.rank() != parts.size()) {
      std::ostringstream os;
      os << "spanning failure in degree " << d << " for b=" << b << ": rank " << ech.rank() << " of "
         << parts.size();
      throw std::runtime_error(os.str());
    }
  }

  BarMatrix out;
  out.n = n;
  out.b = b;
  out.order = partitions(n);
  std::size_t dim = out.order.size();
  out.a.assign(dim, std::vector<LaurentPoly>(dim));

  // Every generated vector lives in a single block of partitions sharing a b-core.
  std::map<Partition, std::vector<std::size_t>, CanonicalLess> blocks;
  for (std::size_t i = 0; i < dim; ++i) blocks[b_core(out.order[i], b)].push_back(i);
  std::map<Partition, std::vector<const FockVector*>, CanonicalLess> vectors;
  for (const auto& w : span[n]) vectors[b_core(w.terms().begin()->first, b)].push_back(&w);

  for (const auto& [core, members] : blocks) {
    const auto& vs = vectors[core];
    std::size_t m = members.size();
    if (vs.size() != m) throw std::logic_error("generated vector is not block homogeneous");
    // tq[r][j] = coordinate of vector j on member r
    Matrix<Scalar> tq(m, std::vector<Scalar>(m)), tbar(m, std::vector<Scalar>(m));
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t r = 0; r < m; ++r) {
        LaurentPoly x = vs[j]->coeff(out.order[members[r]]);
        tq[r][j] = to_scalar(x);
        tbar[r][j] = to_scalar(bar(x));
      }
    // A tbar = tq  <=>  tbar^T A^T = tq^T
    auto at = solve(transpose(tbar), transpose(tq));
    if (!at) throw std::logic_error("bar-invariant vectors are dependent");
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        const Scalar& s = (*at)[c][r];
        out.a[members[r]][members[c]] = to_laurent(s, out.order[members[c]], out.order[members[r]]);
      }
  }
  return out;
}

CanonicalMatrix canonical_basis(const BarMatrix& a, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
  std::size_t dim = a.order.size();
  CanonicalMatrix out{a.n, a.b, sign, a.order, Matrix<LaurentPoly>(dim, std::vector<LaurentPoly>(dim))};
  for (std::size_t col = 0; col < dim; ++col) {
    if (!a.a[col][col].is_one()) throw std::logic_error("bar matrix is not unitriangular");
    out.d[col][col] = 1;
    for (std::size_t row = col + 1; row < dim; ++row) {
      // d_row - bar(d_row) = sum over earlier rows mu of a[row][mu] bar(d_mu)
      LaurentPoly rhs;
      for (std::size_t mu = col; mu < row; ++mu)
        if (!a.a[row][mu].is_zero() && !out.d[mu][col].is_zero()) rhs += a.a[row][mu] * bar(out.d[mu][col]);
      if (rhs.is_zero()) continue;
      if (!(rhs + bar(rhs)).is_zero())
        throw std::logic_error("triangular recursion failed at " + a.order[row].to_string());
      std::vector<Term> keep;
      for (const auto& t : rhs.terms())
        if (t.mono.q.sign() == sign) keep.push_back(t);
      out.d[row][col] = LaurentPoly::from_sorted(std::move(keep));
    }
  }
  return out;
}

LtReport lt_property_check(const BarMatrix& a) {
  LtReport rep;
  std::size_t dim = a.order.size();
  auto index = [&](const Partition& p) {
    return static_cast<std::size_t>(std::find(a.order.begin(), a.order.end(), p) - a.order.begin());
  };
  std::vector<Partition> cores;
  for (const auto& p : a.order) cores.push_back(b_core(p, a.b));
  auto note = [&](bool& flag, const std::string& what, std::size_t r, std::size_t c) {
    flag = false;
    if (rep.violations.size() < 20)
      rep.violations.push_back(what + " at a_" + a.order[c].to_string() + "^" + a.order[r].to_string());
  };
  for (std::size_t c = 0; c < dim; ++c)
    for (std::size_t r = 0; r < dim; ++r) {
      const LaurentPoly& x = a.a[r][c];
      if (!x.is_zero() && (!x.has_integral_exponents() || !x.has_integer_coefficients() ||
                           !x.t_degree_range().first.is_zero() || !x.t_degree_range().second.is_zero()))
        note(rep.integral, "non-integral entry", r, c);
      if (!x.is_zero() && (!dominates(a.order[c], a.order[r]) || cores[r] != cores[c]))
        note(rep.support, "entry outside block support", r, c);
      if (r == c && !x.is_one()) note(rep.unit_diagonal, "diagonal entry not 1", r, c);
      // a_lambda^mu = a_{mu'}^{lambda'}
      std::size_t r2 = index(a.order[c].conjugate()), c2 = index(a.order[r].conjugate());
      if (!(a.a[r2][c2] == x)) note(rep.conjugate_symmetric, "conjugation symmetry fails", r, c);
    }
  Matrix<LaurentPoly> abar(dim, std::vector<LaurentPoly>(dim));
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) abar[r][c] = bar(a.a[r][c]);
  auto prod = multiply(a.a, abar);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      if (!(prod[r][c] == LaurentPoly(r == c ? 1 : 0))) note(rep.involution, "A(q)A(1/q) differs from identity", r, c);
  return rep;
}

}  // namespace wc::fock
