#include "wallcross/ribbon.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace wc {

int Ribbon::height() const {
  if (cells.empty()) return 0;
  int lo = cells.front().y, hi = lo;
  for (const Box& c : cells) {
    lo = std::min(lo, c.y);
    hi = std::max(hi, c.y);
  }
  return hi - lo;
}

namespace {

Ribbon difference(const Partition& outer, const Partition& inner) {
  Ribbon r;
  for (int y = 0; y < outer.length(); ++y)
    for (int x = inner.row(y); x < outer.row(y); ++x) r.cells.push_back({x, y});
  std::sort(r.cells.begin(), r.cells.end(), [](const Box& a, const Box& b) { return content(a) < content(b); });
  return r;
}

void check_b(int b) {
  if (b < 1) throw std::invalid_argument("ribbon size must be positive");
}

}  // namespace

std::vector<RibbonMove> removable_ribbons(const Partition& p, int b) {
  check_b(b);
  std::vector<RibbonMove> out;
  int l = p.length();
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = p.row(i) + l - 1 - i;
  std::set<int> beads(beta.begin(), beta.end());
  for (int i = 0; i < l; ++i) {
    int nb = beta[i] - b;
    if (nb < 0 || beads.count(nb)) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> parts(l);
    for (int j = 0; j < l; ++j) parts[j] = nbeta[j] - (l - 1 - j);
    Partition q(parts);
    out.push_back({q, difference(p, q)});
  }
  return out;
}

std::vector<RibbonMove> addable_ribbons(const Partition& p, int b) {
  check_b(b);
  std::vector<RibbonMove> out;
  int l = p.length() + b;
  std::vector<int> beta(l);
  for (int i = 0; i < l; ++i) beta[i] = p.row(i) + l - 1 - i;
  std::set<int> beads(beta.begin(), beta.end());
  for (int i = 0; i < l; ++i) {
    int nb = beta[i] + b;
    if (beads.count(nb)) continue;
    std::vector<int> nbeta = beta;
    nbeta[i] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> parts(l);
    for (int j = 0; j < l; ++j) parts[j] = nbeta[j] - (l - 1 - j);
    Partition q(parts);
    out.push_back({q, difference(q, p)});
  }
  std::sort(out.begin(), out.end(), [](const RibbonMove& a, const RibbonMove& b) { return CanonicalLess{}(a.shape, b.shape); });
  return out;
}

Partition b_core(const Partition& p, int b) {
  Partition cur = p;
  while (true) {
    auto moves = removable_ribbons(cur, b);
    if (moves.empty()) return cur;
    cur = moves.front().shape;
  }
}

int b_weight(const Partition& p, int b) { return (p.size() - b_core(p, b).size()) / b; }

std::vector<std::vector<Ribbon>> ribbon_removal_sequences(const Partition& p, int b) {
  std::vector<std::vector<Ribbon>> out;
  std::vector<Ribbon> cur;
  std::function<void(const Partition&)> rec = [&](const Partition& q) {
    auto moves = removable_ribbons(q, b);
    if (moves.empty()) {
      out.push_back(cur);
      return;
    }
    for (const auto& m : moves) {
      cur.push_back(m.ribbon);
      rec(m.shape);
      cur.pop_back();
    }
  };
  rec(p);
  return out;
}

std::optional<HorizontalStrip> horizontal_strip(const Partition& inner, const Partition& outer, int b) {
  check_b(b);
  if (!outer.contains(inner) || (outer.size() - inner.size()) % b != 0) return std::nullopt;
  std::vector<Box> cells;
  for (int y = 0; y < outer.length(); ++y)
    for (int x = inner.row(y); x < outer.row(y); ++x) cells.push_back({x, y});
  std::set<Box> free(cells.begin(), cells.end());
  std::vector<Ribbon> current;
  std::vector<std::vector<Ribbon>> found;

  std::function<void()> rec = [&]() {
    if (found.size() > 1) return;
    if (free.empty()) {
      found.push_back(current);
      return;
    }
    // The cell of smallest content must be the north-west end of its ribbon.
    Box start = *std::min_element(free.begin(), free.end(), [](const Box& a, const Box& b) {
      return content(a) != content(b) ? content(a) < content(b) : a.y > b.y;
    });
    if (outer.contains(Box{start.x, start.y + 1})) return;
    std::function<void(Ribbon&)> extend = [&](Ribbon& r) {
      if (r.size() == b) {
        for (const Box& c : r.cells) free.erase(c);
        current.push_back(r);
        rec();
        current.pop_back();
        for (const Box& c : r.cells) free.insert(c);
        return;
      }
      const Box last = r.cells.back();
      for (Box next : {Box{last.x + 1, last.y}, Box{last.x, last.y - 1}}) {
        if (!free.count(next)) continue;
        r.cells.push_back(next);
        extend(r);
        r.cells.pop_back();
      }
    };
    Ribbon r;
    r.cells.push_back(start);
    extend(r);
  };
  rec();
  if (found.empty()) return std::nullopt;
  if (found.size() > 1) throw std::logic_error("non-unique horizontal ribbon strip " + outer.to_string() + "/" + inner.to_string());
  HorizontalStrip s{inner, outer, found.front(), 0};
  for (const Ribbon& r : s.ribbons) s.spin += r.height();
  return s;
}

namespace {

void grow(const Partition& inner, int y, int remaining, int cap, std::vector<int>& rows, std::vector<Partition>& out) {
  if (remaining == 0) {
    std::vector<int> parts = rows;
    for (int j = y; j < inner.length(); ++j) parts.push_back(inner.row(j));
    out.emplace_back(parts);
    return;
  }
  int lo = inner.row(y);
  int hi = std::min(cap, lo + remaining);
  for (int v = std::max(lo, 1); v <= hi; ++v) {
    rows.push_back(v);
    grow(inner, y + 1, remaining - (v - lo), v, rows, out);
    rows.pop_back();
  }
}

void shrink(const Partition& outer, int y, int remaining, std::vector<int>& rows, std::vector<Partition>& out) {
  if (y == outer.length()) {
    if (remaining == 0) out.emplace_back(rows);
    return;
  }
  int cap = y == 0 ? outer.row(0) : rows.back();
  int hi = std::min(outer.row(y), cap);
  int lo = std::max(0, outer.row(y) - remaining);
  for (int v = hi; v >= lo; --v) {
    rows.push_back(v);
    shrink(outer, y + 1, remaining - (outer.row(y) - v), rows, out);
    rows.pop_back();
  }
}

}  // namespace

std::vector<HorizontalStrip> horizontal_strips_up(const Partition& inner, int k, int b) {
  check_b(b);
  std::vector<Partition> shapes;
  std::vector<int> rows;
  grow(inner, 0, k * b, inner.row(0) + k * b, rows, shapes);
  std::sort(shapes.begin(), shapes.end(), CanonicalLess{});
  std::vector<HorizontalStrip> out;
  for (const auto& s : shapes)
    if (auto h = horizontal_strip(inner, s, b)) out.push_back(*h);
  return out;
}

std::vector<HorizontalStrip> horizontal_strips_down(const Partition& outer, int k, int b) {
  check_b(b);
  if (outer.size() < k * b) return {};
  std::vector<Partition> shapes;
  std::vector<int> rows;
  shrink(outer, 0, k * b, rows, shapes);
  std::sort(shapes.begin(), shapes.end(), CanonicalLess{});
  std::vector<HorizontalStrip> out;
  for (const auto& s : shapes)
    if (auto h = horizontal_strip(s, outer, b)) out.push_back(*h);
  return out;
}

NodeCounts node_counts(const Partition& smaller, const Partition& larger, const Box& node, int b) {
  NodeCounts c;
  int i = residue(node, b);
  for (const Box& a : smaller.addable()) {
    if (a == node || residue(a, b) != i) continue;
    (a.x < node.x ? c.indent_left : c.indent_right) += 1;
  }
  for (const Box& r : larger.removable()) {
    if (r == node || residue(r, b) != i) continue;
    (r.x < node.x ? c.removable_left : c.removable_right) += 1;
  }
  return c;
}

int node_balance(const Partition& p, int i, int b) {
  int n = 0;
  for (const Box& a : p.addable())
    if (residue(a, b) == i) ++n;
  for (const Box& r : p.removable())
    if (residue(r, b) == i) --n;
  return n;
}

std::vector<Monomial> tangent_character(const Partition& p) {
  std::vector<Monomial> out;
  for (const Box& b : p.boxes()) {
    int a = p.arm(b), l = p.leg(b);
    out.push_back(Monomial{a, -l - 1});
    out.push_back(Monomial{-a - 1, l});
  }
  return out;
}

Scalar bracket(const std::vector<Monomial>& weights) {
  Scalar r(1);
  for (const Monomial& w : weights) {
    if (w.is_one()) throw std::domain_error("trivial weight in bracket");
    r *= Scalar(LaurentPoly(1) - LaurentPoly(w.inverse()));
  }
  return r;
}

}  // namespace wc
