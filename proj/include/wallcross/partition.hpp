#pragma once

#include "wallcross/laurent.hpp"

#include <compare>
#include <string>
#include <vector>

namespace wc {

// Box (x, y) of a Young diagram in French convention: x is the column, y the row.
struct Box {
  int x = 0;
  int y = 0;
  friend bool operator==(const Box&, const Box&) = default;
  friend auto operator<=>(const Box&, const Box&) = default;
};

inline int content(const Box& b) { return b.x - b.y; }
inline int residue(const Box& b, int modulus) { return ((content(b) % modulus) + modulus) % modulus; }
// q1^x q2^y
inline Monomial weight(const Box& b) { return Monomial{b.x, b.y}; }

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition parse(const std::string& text);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // Row length, zero past the end.
  int row(int y) const { return y < length() ? parts_[y] : 0; }
  int column(int x) const;

  Partition conjugate() const;
  bool contains(const Box& b) const { return b.x >= 0 && b.y >= 0 && b.x < row(b.y); }
  bool contains(const Partition& other) const;
  std::vector<Box> boxes() const;
  int arm(const Box& b) const { return row(b.y) - b.x - 1; }
  int leg(const Box& b) const { return column(b.x) - b.y - 1; }
  std::vector<Box> addable() const;
  std::vector<Box> removable() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct BoxStats {
  int arm;
  int leg;
  int content;
  Monomial weight;
};
BoxStats box_stats(const Partition& p, const Box& b);

struct PartitionStats {
  long content_sum;
  Monomial chi;     // product of box weights, q1^{n(l')} q2^{n(l)}
  long n_lambda;    // sum of y over boxes
  long n_conj;      // sum of x over boxes
  Partition conjugate;
};
PartitionStats partition_stats(const Partition& p);

// a dominates b (same size).
bool dominates(const Partition& a, const Partition& b);
inline bool strictly_dominates(const Partition& a, const Partition& b) { return a != b && dominates(a, b); }

// Canonical order: by size, then reverse lexicographic, e.g. (3), (2,1), (1,1,1).
struct CanonicalLess {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

std::vector<Partition> partitions(int n);
long long z_factor(const Partition& p);

}  // namespace wc
