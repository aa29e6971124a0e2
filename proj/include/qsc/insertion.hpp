#pragma once

#include <span>
#include <string>
#include <vector>

#include "qsc/tableau.hpp"

namespace qsc {

enum class TraceAction {
  Pass,       // scanned cell left untouched
  Bump,       // insertion displaced the occupant
  Place,      // carried value placed on a sentinel; procedure ends
  NewRow,     // insertion opened a new first-column row; higher rows shift up
  Remove,     // rapture removed the starting entry
  RowClosed,  // rapture removed a one-cell row; higher rows shift down
  Keep,       // rapture candidate whose occupant is >= the carried value
  Evict,      // rapture displaced a smaller occupant
};

std::string to_string(TraceAction a);

// One step of an insertion or rapture. Cells are in the coordinates of the
// tableau at the moment of the step; NewRow and RowClosed mark renumbering.
struct TraceStep {
  TraceAction action;
  Cell cell;
  Entry carried;   // value being inserted / raptured when the cell was visited
  Entry occupant;  // entry in the augmented cell before the step
};

struct InsertionResult {
  Filling tableau;
  Cell new_cell;
  bool created_row = false;
  // Bumped cells then the new cell, in the coordinates of `tableau`.
  std::vector<Cell> bumping_path;
  std::vector<TraceStep> trace;
};

struct RaptureResult {
  Filling tableau;
  Entry output;
  // Starting cell then evicted cells, in the coordinates of the input tableau.
  std::vector<Cell> escape_route;
  std::vector<TraceStep> trace;
};

// k -> T. Requires is_ssyct(t) and k >= 1; throws std::invalid_argument.
InsertionResult insert(const Filling& t, int k);

// Throws std::invalid_argument if `cell` is not occupied.
bool is_virtuous(const Filling& t, Cell cell);

// Removes the virtuous entry at `cell`. Rejects unvirtuous cells.
RaptureResult rapture(const Filling& t, Cell cell);

struct RecordingPair {
  Filling p;  // insertion tableau
  Filling q;  // recording filling
  friend bool operator==(const RecordingPair&, const RecordingPair&) = default;
};

// Inserts a duplicate-free word left to right, recording each new cell.
// Q is a DIRT when the word is an immaculate reading word; for other words
// no guarantee is made about Q beyond being standard.
RecordingPair insert_word(std::span<const int> word);

// Inverse of insert_word on (SSYCT, DIRT) pairs of equal shape.
std::vector<int> uninsert(const Filling& p, const Filling& q);

}  // namespace qsc
