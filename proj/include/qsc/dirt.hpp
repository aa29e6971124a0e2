#pragma once

#include <vector>

#include "qsc/composition.hpp"
#include "qsc/tableau.hpp"

namespace qsc {

// A maximal run start, start+1, ... of consecutive values whose columns
// strictly increase. Runs that revisit an earlier column only further left
// are split there; such fillings never arise from insertion.
struct RowStrip {
  int start = 1;
  std::vector<Cell> cells;  // cells[i] holds start + i
};

struct RowStripDecomposition {
  std::vector<RowStrip> strips;
  Composition strip_shape;
};

// Greedy from 1: a run ends when the next value is not strictly right of the
// previous one. Requires a standard filling (throws std::invalid_argument).
RowStripDecomposition row_strips(const Filling& q);
Composition row_strip_shape(const Filling& q);

// Dual immaculate recording tableau: standard, rows strictly increasing,
// every row strip starting in column 1, first column increasing top to
// bottom, and the recording triple rule.
bool is_dirt(const Filling& q);

// All DIRTs of the given shape whose row strip shape is `strip_shape`,
// ordered lexicographically by the rows (bottom-up index) holding 1, 2, ..., n.
std::vector<Filling> enumerate_dirts(const Composition& shape, const Composition& strip_shape);
std::size_t count_dirts(const Composition& shape, const Composition& strip_shape);

// The unique DIRT of partition shape lambda with row strip shape
// reverse(lambda). Throws std::invalid_argument for non-partitions.
Filling superstandard(const Composition& lambda);

}  // namespace qsc
