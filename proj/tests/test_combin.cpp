#include "wallcross/ribbon.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

using namespace wc;

namespace {

// Abacus with b runners: position of each bead after padding to a multiple of b.
struct Abacus {
  int b;
  std::vector<std::vector<int>> runners;  // sorted bead levels per runner
  int beads;
};

Abacus abacus(const Partition& p, int b) {
  int l = p.length();
  int n = ((l + b - 1) / b) * b + b;
  Abacus a{b, std::vector<std::vector<int>>(b), n};
  for (int i = 0; i < n; ++i) {
    int beta = p.row(i) + n - 1 - i;
    a.runners[beta % b].push_back(beta / b);
  }
  for (auto& r : a.runners) std::sort(r.begin(), r.end());
  return a;
}

Partition from_betas(std::vector<int> betas) {
  std::sort(betas.rbegin(), betas.rend());
  int n = static_cast<int>(betas.size());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) parts.push_back(betas[i] - (n - 1 - i));
  return Partition(parts);
}

Partition abacus_core(const Partition& p, int b) {
  Abacus a = abacus(p, b);
  std::vector<int> betas;
  for (int r = 0; r < b; ++r)
    for (int k = 0; k < static_cast<int>(a.runners[r].size()); ++k) betas.push_back(k * b + r);
  return from_betas(betas);
}

std::vector<Partition> quotient(const Partition& p, int b) {
  Abacus a = abacus(p, b);
  std::vector<Partition> out;
  for (int r = 0; r < b; ++r) {
    auto& lv = a.runners[r];
    std::vector<int> parts;
    int m = static_cast<int>(lv.size());
    for (int k = m - 1; k >= 0; --k) parts.push_back(lv[k] - k);
    out.emplace_back(parts);
  }
  return out;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  if (!outer.contains(inner)) return false;
  for (int y = 0; y + 1 < outer.length(); ++y)
    if (outer.row(y + 1) > inner.row(y)) return false;
  return true;
}

std::vector<Partition> all_up_to(int n) {
  std::vector<Partition> out;
  for (int k = 0; k <= n; ++k)
    for (auto& p : partitions(k)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("partitions of n in canonical order") {
  auto ps = partitions(3);
  REQUIRE(ps.size() == 3);
  CHECK(ps[0] == Partition{3});
  CHECK(ps[1] == Partition{2, 1});
  CHECK(ps[2] == Partition{1, 1, 1});
  std::vector<std::size_t> counts = {1, 1, 2, 3, 5, 7, 11, 15, 22, 30};
  for (int n = 0; n < 10; ++n) CHECK(partitions(n).size() == counts[n]);
  // canonical order refines dominance
  for (int n = 1; n <= 7; ++n) {
    auto qs = partitions(n);
    for (std::size_t i = 0; i < qs.size(); ++i)
      for (std::size_t j = i + 1; j < qs.size(); ++j) CHECK_FALSE(strictly_dominates(qs[j], qs[i]));
  }
}

TEST_CASE("partition parsing and printing") {
  CHECK(Partition::parse("[4,3,1]") == Partition{4, 3, 1});
  CHECK(Partition::parse("[]").empty());
  CHECK(Partition{4, 3, 1}.to_string() == "[4,3,1]");
  CHECK_THROWS(Partition::parse("[1,2]"));
  CHECK_THROWS(Partition::parse("4,3"));
}

TEST_CASE("box statistics") {
  Partition p{4, 3, 1};
  auto s = box_stats(p, {1, 0});
  CHECK(s.arm == 2);
  CHECK(s.leg == 1);
  CHECK(s.content == 1);
  CHECK(s.weight == Monomial{1, 0});
  CHECK(p.conjugate() == Partition{3, 2, 2, 1});
  auto st = partition_stats(p);
  CHECK(st.n_lambda == 0 * 4 + 1 * 3 + 2 * 1);
  CHECK(st.n_conj == partition_stats(p.conjugate()).n_lambda);
  CHECK(st.content_sum == st.n_conj - st.n_lambda);
  CHECK_THROWS(box_stats(p, {3, 1}));
}

TEST_CASE("dominance order") {
  CHECK(dominates(Partition{3}, Partition{2, 1}));
  CHECK(dominates(Partition{2, 1}, Partition{1, 1, 1}));
  CHECK_FALSE(dominates(Partition{3, 1, 1, 1}, Partition{2, 2, 2}));
  CHECK_FALSE(dominates(Partition{2, 2, 2}, Partition{3, 1, 1, 1}));
  // conjugation reverses dominance
  for (int n = 1; n <= 7; ++n)
    for (auto& a : partitions(n))
      for (auto& b : partitions(n)) CHECK(dominates(a, b) == dominates(b.conjugate(), a.conjugate()));
}

TEST_CASE("z factors") {
  CHECK(z_factor(Partition{2, 1}) == 2);
  CHECK(z_factor(Partition{1, 1, 1}) == 6);
  CHECK(z_factor(Partition{2, 2, 1}) == 8);
}

TEST_CASE("b-cores agree with the abacus and do not depend on removal order") {
  CHECK(b_core(Partition{2}, 2).empty());
  CHECK(b_core(Partition{2, 1}, 2) == Partition{2, 1});
  CHECK(b_core(Partition{3, 1}, 2).size() == 0);
  for (int b = 1; b <= 4; ++b)
    for (auto& p : all_up_to(8)) {
      Partition c = b_core(p, b);
      CHECK(c == abacus_core(p, b));
      CHECK(removable_ribbons(c, b).empty());
      for (auto& seq : ribbon_removal_sequences(p, b)) {
        int total = 0;
        for (auto& r : seq) total += r.size();
        CHECK(total == p.size() - c.size());
      }
    }
}

TEST_CASE("ribbons removed by beta numbers are ribbons") {
  for (int b = 1; b <= 4; ++b)
    for (auto& p : all_up_to(8))
      for (auto& m : removable_ribbons(p, b)) {
        const Ribbon& r = m.ribbon;
        REQUIRE(r.size() == b);
        for (int j = 1; j < b; ++j) {
          CHECK(content(r.cells[j]) == content(r.cells[j - 1]) + 1);
          bool right = r.cells[j] == Box{r.cells[j - 1].x + 1, r.cells[j - 1].y};
          bool down = r.cells[j] == Box{r.cells[j - 1].x, r.cells[j - 1].y - 1};
          CHECK((right || down));
        }
        CHECK(p.contains(m.shape));
        bool found = false;
        for (auto& a : addable_ribbons(m.shape, b)) found |= a.shape == p;
        CHECK(found);
      }
}

TEST_CASE("horizontal strips over the empty partition") {
  auto s = horizontal_strips_up(Partition{}, 1, 2);
  REQUIRE(s.size() == 2);
  CHECK(s[0].outer == Partition{2});
  CHECK(s[0].spin == 0);
  CHECK(s[1].outer == Partition{1, 1});
  CHECK(s[1].spin == 1);
  auto t = horizontal_strips_up(Partition{}, 2, 2);
  std::set<Partition> outs;
  for (auto& h : t) outs.insert(h.outer);
  CHECK(outs == std::set<Partition>{Partition{4}, Partition{3, 1}, Partition{2, 2}});
}

TEST_CASE("horizontal ribbon strips are horizontal strips of the b-quotient") {
  for (int b = 2; b <= 3; ++b)
    for (auto& inner : all_up_to(5))
      for (int k = 1; k <= 2; ++k) {
        std::set<Partition> got;
        for (auto& h : horizontal_strips_up(inner, k, b)) got.insert(h.outer);
        std::set<Partition> expected;
        for (auto& outer : partitions(inner.size() + k * b)) {
          if (!outer.contains(inner) || b_core(outer, b) != b_core(inner, b)) continue;
          auto qi = quotient(inner, b), qo = quotient(outer, b);
          bool ok = true;
          for (int r = 0; r < b; ++r) ok &= is_horizontal_strip(qi[r], qo[r]);
          if (ok) expected.insert(outer);
        }
        CHECK(got == expected);
      }
}

TEST_CASE("strips up and down are the same relation") {
  for (int b = 1; b <= 3; ++b)
    for (auto& inner : all_up_to(4))
      for (int k = 1; k <= 2; ++k)
        for (auto& h : horizontal_strips_up(inner, k, b)) {
          bool found = false;
          for (auto& d : horizontal_strips_down(h.outer, k, b))
            if (d.inner == inner) {
              found = true;
              CHECK(d.spin == h.spin);
            }
          CHECK(found);
        }
}

TEST_CASE("addable minus removable nodes is one") {
  for (auto& p : all_up_to(8)) {
    CHECK(p.addable().size() == p.removable().size() + 1);
    for (int b = 2; b <= 4; ++b) {
      int total = 0;
      for (int i = 0; i < b; ++i) total += node_balance(p, i, b);
      CHECK(total == 1);
    }
  }
  // (1) + (0,1) = (1,1); the other residue-1 indent node (1,0) lies to the right
  auto c = node_counts(Partition{1}, Partition{1, 1}, Box{0, 1}, 2);
  CHECK(c.indent_right == 1);
  CHECK(c.indent_left == 0);
  CHECK(c.right() == 1);
  auto d = node_counts(Partition{1}, Partition{2}, Box{1, 0}, 2);
  CHECK(d.left() == 1);
}

TEST_CASE("tangent character and bracket") {
  auto w = tangent_character(Partition{1});
  REQUIRE(w.size() == 2);
  CHECK(w[0] == Monomial{0, -1});
  CHECK(w[1] == Monomial{-1, 0});
  VarNames n12{"q1", "q2"};
  CHECK(bracket(w) == parse_scalar("(1 - q1)*(1 - q2)", n12));
  auto w2 = tangent_character(Partition{2});
  CHECK(bracket(w2) == parse_scalar("(1 - q2/q1)*(1 - q1^2)*(1 - q2)*(1 - q1)", n12));
  for (auto& p : all_up_to(6)) CHECK(tangent_character(p).size() == static_cast<std::size_t>(2 * p.size()));
}
