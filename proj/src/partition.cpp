#include "wallcross/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace wc {

Partition::Partition(std::vector<int> parts) {
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1]) throw std::invalid_argument("partition parts must be nonincreasing");
  }
  size_ = std::accumulate(parts.begin(), parts.end(), 0);
  parts_ = std::move(parts);
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') throw std::invalid_argument("partition must look like [4,3,1]: " + text);
  std::vector<int> parts;
  std::string body = s.substr(1, s.size() - 2);
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || !std::all_of(item.begin(), item.end(), ::isdigit))
      throw std::invalid_argument("bad partition part in " + text);
    parts.push_back(std::stoi(item));
  }
  return Partition(parts);
}

int Partition::column(int x) const {
  int c = 0;
  while (c < length() && parts_[c] > x) ++c;
  return c;
}

Partition Partition::conjugate() const {
  std::vector<int> c;
  for (int x = 0; x < row(0); ++x) c.push_back(column(x));
  return Partition(c);
}

bool Partition::contains(const Partition& other) const {
  if (other.length() > length()) return false;
  for (int i = 0; i < other.length(); ++i)
    if (other.parts_[i] > parts_[i]) return false;
  return true;
}

std::vector<Box> Partition::boxes() const {
  std::vector<Box> out;
  out.reserve(size_);
  for (int y = 0; y < length(); ++y)
    for (int x = 0; x < parts_[y]; ++x) out.push_back({x, y});
  return out;
}

std::vector<Box> Partition::addable() const {
  std::vector<Box> out;
  for (int y = 0; y <= length(); ++y)
    if (y == 0 || row(y - 1) > row(y)) out.push_back({row(y), y});
  return out;
}

std::vector<Box> Partition::removable() const {
  std::vector<Box> out;
  for (int y = 0; y < length(); ++y)
    if (row(y) > row(y + 1)) out.push_back({row(y) - 1, y});
  return out;
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (int i = 0; i < length(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

BoxStats box_stats(const Partition& p, const Box& b) {
  if (!p.contains(b)) throw std::invalid_argument("box outside partition");
  return {p.arm(b), p.leg(b), content(b), weight(b)};
}

PartitionStats partition_stats(const Partition& p) {
  PartitionStats s{0, Monomial{}, 0, 0, p.conjugate()};
  for (const Box& b : p.boxes()) {
    s.content_sum += content(b);
    s.n_lambda += b.y;
    s.n_conj += b.x;
  }
  s.chi = Monomial{Exponent(s.n_conj), Exponent(s.n_lambda)};
  return s;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dominance needs partitions of equal size");
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a.row(i);
    sb += b.row(i);
    if (sa < sb) return false;
  }
  return true;
}

static void generate(int n, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (n == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    cur.push_back(k);
    generate(n - k, k, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions(int n) {
  if (n < 0) throw std::invalid_argument("negative size");
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

long long z_factor(const Partition& p) {
  long long z = 1;
  int i = 0;
  while (i < p.length()) {
    int k = p.parts()[i], m = 0;
    while (i < p.length() && p.parts()[i] == k) {
      ++m;
      ++i;
      z *= k * m;
    }
  }
  return z;
}

}  // namespace wc
