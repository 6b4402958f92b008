#include "wallcross/verify.hpp"

#include "wallcross/fock.hpp"

#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace wc::verify {

using stable::SlopePoint;
using sym::Basis;
using sym::SymFunc;

std::string status_name(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& f) {
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        f(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (int j = 0; j < jobs && static_cast<std::size_t>(j) < count; ++j) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

namespace {

const VarNames kQ12{"q1", "q2"};

Rational rat(long a, long b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Scalar q12(const std::string& s) { return parse_scalar(s, kQ12); }

Scalar qt_to_q12(const Scalar& x) { return change_coordinates(x, Coords::QT, Coords::Q1Q2); }

std::string show(const Scalar& x) { return x.to_string(kQ12); }

// Unit lower-triangular matrix with the listed off-diagonal entries.
struct Golden {
  int n;
  std::vector<std::tuple<int, int, std::string>> entries;

  Matrix<Scalar> matrix() const {
    std::size_t dim = partitions(n).size();
    Matrix<Scalar> m = identity_matrix<Scalar>(dim);
    for (const auto& [r, c, s] : entries) m[r][c] = q12(s);
    return m;
  }
};

Report compare(const std::string& check, std::map<std::string, std::string> params, const Matrix<Scalar>& expected,
               const Matrix<Scalar>& got, const std::vector<Partition>& order) {
  Report rep{check, std::move(params), Status::Match, {}, {}};
  for (std::size_t r = 0; r < expected.size(); ++r)
    for (std::size_t c = 0; c < expected.size(); ++c) {
      std::string e = show(expected[r][c]), g = show(got[r][c]);
      if (e != g) {
        rep.status = Status::Mismatch;
        rep.witness = "entry " + order[r].to_string() + "|" + order[c].to_string() + ": expected " + e + ", got " + g;
        return rep;
      }
    }
  return rep;
}

Report compare_scalar(const std::string& check, std::map<std::string, std::string> params, const Scalar& expected,
                      const Scalar& got, const std::string& where) {
  Report rep{check, std::move(params), Status::Match, {}, {}};
  if (show(expected) != show(got)) {
    rep.status = Status::Mismatch;
    rep.witness = where + ": expected " + show(expected) + ", got " + show(got);
  }
  return rep;
}

Matrix<Scalar> to_q12(const Matrix<Scalar>& m) {
  Matrix<Scalar> out = m;
  for (auto& row : out)
    for (auto& x : row) x = qt_to_q12(x);
  return out;
}

Matrix<Scalar> crossing_q12(int n, const Rational& w) {
  auto x = stable::wall_crossing(n, w);
  Matrix<Scalar> out(x.b.size(), std::vector<Scalar>(x.b.size()));
  for (std::size_t r = 0; r < x.b.size(); ++r)
    for (std::size_t c = 0; c < x.b.size(); ++c) out[r][c] = qt_to_q12(Scalar(x.b[r][c]));
  return out;
}

Matrix<Scalar> transition_q12(int n, const Rational& m) {
  return to_q12(stable::transition_matrix(n, SlopePoint{0, 1}, SlopePoint{m, 1}));
}

std::string slope_name(const Rational& m) { return to_string(m); }

}  // namespace

Report conjecture_check(int n, const Rational& wall) {
  long b = wall.get_den().get_si();
  Report rep{"conjecture", {{"n", std::to_string(n)}, {"wall", to_string(wall)}, {"b", std::to_string(b)}}, Status::Match, {}, {}};
  auto w = stable::wall_crossing(n, wall);
  rep.params["is_wall"] = w.is_identity() ? "no" : "yes";
  auto r = stable::renormalize(w);
  auto a = fock::bar_matrix(n, static_cast<int>(b));
  for (std::size_t row = 0; row < r.size(); ++row)
    for (std::size_t col = 0; col < r.size(); ++col) {
      if (r[row][col] == a.a[row][col]) continue;
      rep.status = Status::Mismatch;
      rep.witness = "a_" + a.order[col].to_string() + "^" + a.order[row].to_string() + ": fock " +
                    a.a[row][col].to_string() + ", stable " + r[row][col].to_string();
      return rep;
    }
  return rep;
}

std::vector<Report> conjecture_sweep(int n, int jobs) {
  auto walls = stable::candidate_walls(n, 0, 1);
  std::vector<Report> out(walls.size());
  parallel_for(walls.size(), jobs, [&](std::size_t i) { out[i] = conjecture_check(n, walls[i]); });
  return out;
}

std::vector<Report> appendix_items() {
  std::vector<Report> out;
  auto o2 = partitions(2), o3 = partitions(3);

  // size two: transitions from slope 0, wall factors, factorization
  Golden t12{2, {{1, 0, "q2 - 1/q1"}}};
  Golden t32{2, {{1, 0, "q2 - 1/q1 + q2^2/q1 - q2/q1^2"}}};
  Golden w12{2, {{1, 0, "q2 - 1/q1"}}};
  Golden w32{2, {{1, 0, "q2^2/q1 - q2/q1^2"}}};
  out.push_back(compare("appendix", {{"n", "2"}, {"item", "transition 0 -> 1/2"}}, t12.matrix(),
                        transition_q12(2, rat(1, 2)), o2));
  out.push_back(compare("appendix", {{"n", "2"}, {"item", "transition 0 -> 3/2"}}, t32.matrix(),
                        transition_q12(2, rat(3, 2)), o2));
  out.push_back(compare("appendix", {{"n", "2"}, {"item", "wall 1/2"}}, w12.matrix(), crossing_q12(2, rat(1, 2)), o2));
  out.push_back(compare("appendix", {{"n", "2"}, {"item", "wall 3/2"}}, w32.matrix(), crossing_q12(2, rat(3, 2)), o2));
  out.push_back(compare("appendix", {{"n", "2"}, {"item", "factorization 3/2 = (1/2)(3/2)"}}, t32.matrix(),
                        multiply(w12.matrix(), w32.matrix()), o2));

  // size two: Schur expansions, coefficients of s_2 and s_11
  struct Expansion {
    Rational m;
    Partition lambda;
    std::string s2, s11;
  };
  std::vector<Expansion> exps = {
      {0, Partition{2}, "1/(1 - q2^2)", "q2/(1 - q2^2)"},
      {0, Partition{1, 1}, "q2/(1 - q2^2)", "1/(1 - q2^2)"},
      {rat(1, 2), Partition{2}, "1 + q2/(q1*(1 - q2^2))", "1/(q1*(1 - q2^2))"},
      {rat(1, 2), Partition{1, 1}, "q2/(1 - q2^2)", "1/(1 - q2^2)"},
      {rat(3, 2), Partition{2}, "1 + q2/q1 + q2^2/(q1^2*(1 - q2^2))", "1/q1 + q2/(q1^2*(1 - q2^2))"},
      {rat(3, 2), Partition{1, 1}, "q2/(1 - q2^2)", "1/(1 - q2^2)"},
  };
  for (const auto& e : exps) {
    auto table = stable::stable_basis(2, SlopePoint{e.m, 1});
    SymFunc f = stable::stable_function(table, e.lambda);
    std::map<std::string, std::string> params{
        {"n", "2"}, {"item", "schur expansion s^" + slope_name(e.m) + "_" + e.lambda.to_string()}};
    Report r = compare_scalar("appendix", params, q12(e.s2), f.coeff(Partition{2}), "coefficient of s[2]");
    if (r.ok()) r = compare_scalar("appendix", params, q12(e.s11), f.coeff(Partition{1, 1}), "coefficient of s[1,1]");
    out.push_back(r);
  }

  // size two: the characters written in stable bases
  struct Combination {
    std::string name;
    Rational m;
    std::string c2, c11, s2, s11;  // c2 s^m_2 + c11 s^m_11 = s2 s_2 + s11 s_11
  };
  std::vector<Combination> combos = {
      {"ch L_1/2 in s^0", 0, "1", "-q2", "1", "0"},
      {"ch L_1/2 in s^1/2", rat(1, 2), "1", "-1/q1", "1", "0"},
      {"ch L_3/2 in s^1/2", rat(1, 2), "q1", "-q2^2", "q1 + q2", "1"},
      {"ch L_3/2 in s^3/2", rat(3, 2), "q1", "-q2/q1", "q1 + q2", "1"},
  };
  for (const auto& c : combos) {
    auto table = stable::stable_basis(2, SlopePoint{c.m, 1});
    SymFunc f = q12(c.c2) * stable::stable_function(table, Partition{2}) +
                q12(c.c11) * stable::stable_function(table, Partition{1, 1});
    std::map<std::string, std::string> params{{"n", "2"}, {"item", c.name}};
    Report r = compare_scalar("appendix", params, q12(c.s2), f.coeff(Partition{2}), "coefficient of s[2]");
    if (r.ok()) r = compare_scalar("appendix", params, q12(c.s11), f.coeff(Partition{1, 1}), "coefficient of s[1,1]");
    out.push_back(r);
  }

  // size three
  Golden t13{3, {{1, 0, "q2 - 1/q1"}, {2, 0, "1/q1^2 - q2/q1"}, {2, 1, "q2 - 1/q1"}}};
  Golden t123{3, {{1, 0, "q2 - 1/q1"}, {2, 0, "1/q1^2 - q2/q1^2 + q2^2/q1 - q2/q1"}, {2, 1, "q2 - 1/q1"}}};
  Golden t23{3,
             {{1, 0, "q2 - 1/q1 + q2/q1 - 1/q1^2"},
              {2, 0, "q2^3 - q2^2/q1 + q2/q1^3 - q2^2/q1^2 + 1/q1^2 - q2/q1"},
              {2, 1, "q2^2 - q2/q1 + q2 - 1/q1"}}};
  Golden w3_12{3, {{2, 0, "q2^2/q1 - q2/q1^2"}}};
  Golden w3_23{3, {{1, 0, "q2/q1 - 1/q1^2"}, {2, 0, "q2/q1^3 - q2^2/q1^2"}, {2, 1, "q2^2 - q2/q1"}}};
  const Golden& w3_13 = t13;
  out.push_back(compare("appendix", {{"n", "3"}, {"item", "transition 0 -> 1/3"}}, t13.matrix(),
                        transition_q12(3, rat(1, 3)), o3));
  out.push_back(compare("appendix", {{"n", "3"}, {"item", "transition 0 -> 1/2"}}, t123.matrix(),
                        transition_q12(3, rat(1, 2)), o3));
  out.push_back(compare("appendix", {{"n", "3"}, {"item", "transition 0 -> 2/3"}}, t23.matrix(),
                        transition_q12(3, rat(2, 3)), o3));
  out.push_back(
      compare("appendix", {{"n", "3"}, {"item", "wall 1/3"}}, w3_13.matrix(), crossing_q12(3, rat(1, 3)), o3));
  out.push_back(
      compare("appendix", {{"n", "3"}, {"item", "wall 1/2"}}, w3_12.matrix(), crossing_q12(3, rat(1, 2)), o3));
  out.push_back(
      compare("appendix", {{"n", "3"}, {"item", "wall 2/3"}}, w3_23.matrix(), crossing_q12(3, rat(2, 3)), o3));
  out.push_back(compare("appendix", {{"n", "3"}, {"item", "factorization 1/2 = (1/2)(1/3)"}}, t123.matrix(),
                        multiply(w3_12.matrix(), w3_13.matrix()), o3));
  out.push_back(compare("appendix", {{"n", "3"}, {"item", "factorization 2/3 = (2/3)(1/2)(1/3)"}}, t23.matrix(),
                        multiply(w3_23.matrix(), multiply(w3_12.matrix(), w3_13.matrix())), o3));
  return out;
}

Report appendix_check() {
  auto items = appendix_items();
  Report rep{"appendix", {{"items", std::to_string(items.size())}}, Status::Match, {}, {}};
  for (const auto& r : items)
    if (!r.ok()) {
      rep.status = Status::Mismatch;
      rep.witness = r.params.at("item") + ": " + r.witness;
      break;
    }
  return rep;
}

Report positivity_report(int n, const SlopePoint& slope, int order) {
  Report rep{"positivity", {{"n", std::to_string(n)}, {"slope", slope.to_string()}, {"order", std::to_string(order)}},
             Status::Match, {}, {}};
  auto table = stable::stable_basis(n, slope);
  for (const auto& lambda : table.order) {
    SymFunc f = stable::stable_function(table, lambda);
    for (const auto& mu : table.order) {
      Scalar c = f.coeff(mu).map_monomials([](const Monomial& m) { return Monomial{m.t, m.q}; });
      LaurentPoly s;
      try {
        s = series_expand(c, order);
      } catch (const std::domain_error& e) {
        rep.status = Status::Skipped;
        rep.witness = "coefficient of s" + mu.to_string() + " in " + lambda.to_string() + ": " + e.what();
        return rep;
      }
      for (const auto& t : s.terms())
        if (t.coeff < 0) {
          rep.status = Status::Mismatch;
          LaurentPoly term(Monomial{t.mono.t, t.mono.q}, t.coeff);
          rep.witness = "coefficient of s" + mu.to_string() + " in " + lambda.to_string() + " has term " +
                        term.to_string(kQ12);
          return rep;
        }
    }
  }
  return rep;
}

Character finite_dim_class(const Rational& m) {
  if (m <= 0) throw std::invalid_argument("slope must be positive");
  long b = m.get_den().get_si();
  auto table = stable::stable_basis(static_cast<int>(b), SlopePoint{m, 1});
  SymFunc raw(static_cast<int>(b), Basis::s);
  for (long k = 0; k < b; ++k) {
    std::vector<int> parts{static_cast<int>(b - k)};
    for (long i = 0; i < k; ++i) parts.push_back(1);
    // (-q)^(-k) with q = (q1 q2)^(1/2)
    Exponent half(rat(-k, 2));
    Scalar c = Scalar::monomial(Monomial{half, half}, k % 2 ? -1 : 1);
    raw = raw + c * stable::stable_function(table, Partition(parts), true);
  }
  Character out{raw, raw};
  std::optional<Exponent> m1, m2;
  for (const auto& c : raw.coeffs()) {
    if (c.is_zero()) continue;
    if (!c.is_laurent()) return out;
    auto [a0, a1] = c.num().q_degree_range();
    auto [b0, b1] = c.num().t_degree_range();
    if (!m1 || a0 < *m1) m1 = a0;
    if (!m2 || b0 < *m2) m2 = b0;
  }
  if (m1) out.normalized = Scalar::monomial(Monomial{-*m1, -*m2}) * raw;
  return out;
}

SymFunc verma_character(const Rational& m, const Partition& lambda) {
  long c = partition_stats(lambda).content_sum;
  Scalar t = Scalar::monomial(Monomial{1, 0});
  SymFunc s = SymFunc::basis_element(Basis::s, lambda);
  SymFunc f = sym::plethystic_scale(s, [](int k) { return Scalar(1) / (Scalar(1) - Scalar::monomial(Monomial{k, 0})); });
  Scalar pre = Scalar::monomial(Monomial{Exponent(Rational(-m * c)), 0}) * (Scalar(1) - t);
  return sym::convert(pre * f, Basis::s);
}

}  // namespace wc::verify
