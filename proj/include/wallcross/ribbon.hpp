#pragma once

#include "wallcross/partition.hpp"
#include "wallcross/scalar.hpp"

#include <optional>
#include <vector>

namespace wc {

// Connected skew shape without 2x2 squares, cells sorted by increasing content
// (from the north-west end to the south-east end).
struct Ribbon {
  std::vector<Box> cells;

  int size() const { return static_cast<int>(cells.size()); }
  // Number of rows minus one.
  int height() const;
  const Box& nw_end() const { return cells.front(); }
  // Step j (1-based) goes right when the next cell is in the same row, down otherwise.
  bool step_is_right(int j) const { return cells[j].y == cells[j - 1].y; }
};

struct RibbonMove {
  Partition shape;  // partition after the move
  Ribbon ribbon;
};

std::vector<RibbonMove> removable_ribbons(const Partition& p, int b);
std::vector<RibbonMove> addable_ribbons(const Partition& p, int b);

Partition b_core(const Partition& p, int b);
int b_weight(const Partition& p, int b);

// Every way to strip p down to its b-core one ribbon at a time; each entry
// lists the ribbons in removal order.
std::vector<std::vector<Ribbon>> ribbon_removal_sequences(const Partition& p, int b);

// outer / inner decomposed as a disjoint union of b-ribbons whose north-west
// ends have no box of outer directly above them.
struct HorizontalStrip {
  Partition inner;
  Partition outer;
  std::vector<Ribbon> ribbons;
  int spin = 0;
};

// All strips of k ribbons with the given inner shape.
std::vector<HorizontalStrip> horizontal_strips_up(const Partition& inner, int k, int b);
// All strips of k ribbons with the given outer shape.
std::vector<HorizontalStrip> horizontal_strips_down(const Partition& outer, int k, int b);
// The strip structure of outer / inner if it is a horizontal k-strip of b-ribbons.
std::optional<HorizontalStrip> horizontal_strip(const Partition& inner, const Partition& outer, int b);

// i-node counts for the pair smaller < larger = smaller + node, where i is the
// residue of node: indent nodes are counted on `smaller`, removable nodes on
// `larger`, node itself excluded; left/right compares columns.
struct NodeCounts {
  int indent_left = 0;
  int indent_right = 0;
  int removable_left = 0;
  int removable_right = 0;
  int left() const { return indent_left - removable_left; }
  int right() const { return indent_right - removable_right; }
};
NodeCounts node_counts(const Partition& smaller, const Partition& larger, const Box& node, int b);
// Indent minus removable i-nodes of p.
int node_balance(const Partition& p, int i, int b);

// Tangent weights at a fixed point: q1^a q2^(-l-1) and q1^(-a-1) q2^l per box.
std::vector<Monomial> tangent_character(const Partition& p);
// prod (1 - w^-1) over the weights; coordinates q1, q2.
Scalar bracket(const std::vector<Monomial>& weights);

}  // namespace wc
