#pragma once

#include <string>
#include <vector>

#include "qsc/composition.hpp"
#include "qsc/qsym.hpp"
#include "qsc/tableau.hpp"

namespace qsc {

enum class RWDirection { Forward, Dual };

std::string to_string(RWDirection d);

struct RWNode {
  // Bottom-up rows. Forward nodes are DIRTs; dual nodes are partial fillings
  // of the full diagram with 0 marking an empty cell.
  std::vector<std::vector<int>> rows;
  int depth = 0;
  bool leaf = false;
  std::vector<std::size_t> children;  // indices into RWTree::nodes
};

struct RWTree {
  RWDirection direction = RWDirection::Forward;
  Composition alpha;
  std::vector<RWNode> nodes;  // nodes[0] is the root; parents precede children

  std::vector<std::size_t> leaves() const;
};

struct RWResult {
  RWTree tree;
  BasisExpansion expansion;
};

// Builds the DIRTs of row strip shape reverse(alpha) one strip at a time.
// The expansion is in the YoungQS basis, indexed by leaf shape.
RWResult rw_forward(const Composition& alpha);

// Level i places the value i: first in column 1 of the i-th row from the top,
// then at most once per further column. The expansion is in the Immaculate
// basis; a leaf with c_i copies of i contributes to beta = (c_l, ..., c_1).
RWResult rw_dual(const Composition& alpha);

// Shape of a forward node or multiplicity vector (c_1, ..., c_l) of a dual leaf.
Composition leaf_label(const RWTree& tree, const RWNode& node);

// Graphviz rendering; nodes are labelled with their rows, top row first.
std::string to_dot(const RWTree& tree);

}  // namespace qsc
