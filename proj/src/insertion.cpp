#include "qsc/insertion.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "qsc/dirt.hpp"

namespace qsc {

std::string to_string(TraceAction a) {
  switch (a) {
    case TraceAction::Pass: return "pass";
    case TraceAction::Bump: return "bump";
    case TraceAction::Place: return "place";
    case TraceAction::NewRow: return "new_row";
    case TraceAction::Remove: return "remove";
    case TraceAction::RowClosed: return "row_closed";
    case TraceAction::Keep: return "keep";
    case TraceAction::Evict: return "evict";
  }
  return "?";
}

InsertionResult insert(const Filling& t, int k) {
  if (k < 1) throw std::invalid_argument("insert: value must be positive");
  if (!is_ssyct(t)) throw std::invalid_argument("insert: input is not a Young composition tableau");

  InsertionResult res{t, Cell{}, false, {}, {}};
  Filling& p = res.tableau;
  const std::vector<Cell> order = AugmentedView(t).reading_order();
  Entry carried(k);

  for (Cell c : order) {
    // First-column cells are never bump targets; new rows come from the
    // terminal rule below.
    if (c.col == 1) continue;
    const Entry left = p.entry({c.col - 1, c.row});
    const Entry occupant = p.entry(c);
    if (!(left <= carried && carried < occupant)) {
      res.trace.push_back({TraceAction::Pass, c, carried, occupant});
      continue;
    }
    res.bumping_path.push_back(c);
    if (occupant.is_infinite()) {
      res.trace.push_back({TraceAction::Place, c, carried, occupant});
      p.append(c.row, carried.value());
      res.new_cell = c;
      return res;
    }
    res.trace.push_back({TraceAction::Bump, c, carried, occupant});
    p.set(c, carried.value());
    carried = occupant;
  }

  // No admissible cell: open a row in the first column above every smaller
  // first-column entry.
  const int v = carried.value();
  int row = 1;
  while (row <= static_cast<int>(p.num_rows()) && p.at({1, row}) < v) ++row;
  if (row <= static_cast<int>(p.num_rows()) && p.at({1, row}) == v) {
    throw std::invalid_argument("insert: value " + std::to_string(v) +
                                " duplicates a first-column entry");
  }
  p.insert_row(row, v);
  for (Cell& c : res.bumping_path) {
    if (c.row >= row) ++c.row;
  }
  res.new_cell = Cell{1, row};
  res.created_row = true;
  res.bumping_path.push_back(res.new_cell);
  res.trace.push_back({TraceAction::NewRow, res.new_cell, carried, Entry::infinity()});
  return res;
}

bool is_virtuous(const Filling& t, Cell cell) {
  if (!t.contains(cell)) {
    throw std::invalid_argument("is_virtuous: cell " + to_string(cell) + " is not occupied");
  }
  const int value = t.at(cell);
  for (int r = 1; r < cell.row; ++r) {
    if (t.contains({cell.col, r}) && t.at({cell.col, r}) >= value) return false;
  }
  if (t.row_length(cell.row) != cell.col) return false;
  for (int r = 1; r < cell.row; ++r) {
    if (t.row_length(r) == cell.col) return false;
  }
  return true;
}

RaptureResult rapture(const Filling& t, Cell cell) {
  if (!is_ssyct(t)) throw std::invalid_argument("rapture: input is not a Young composition tableau");
  if (!is_virtuous(t, cell)) {
    throw std::invalid_argument("rapture: entry at " + to_string(cell) +
                                " is not virtuous; removing it would not leave a Young "
                                "composition tableau");
  }

  RaptureResult res{t, Entry(t.at(cell)), {cell}, {}};
  Filling& p = res.tableau;

  // Cells preceding `cell` in the Young reading order of the input
  // augmentation, minus the sentinel that disappears with the removal.
  const std::vector<Cell> order = AugmentedView(t).reading_order();
  const auto start = std::find(order.begin(), order.end(), cell);
  const bool closes_row = cell.col == 1;
  std::vector<Cell> scan;
  for (auto it = order.begin(); it != start; ++it) {
    Cell c = *it;
    if (c.col == 1) continue;
    if (c.row == cell.row) continue;  // only the vanishing sentinel can be here
    if (closes_row && c.row > cell.row) --c.row;
    scan.push_back(c);
  }

  Entry carried(t.at(cell));
  res.trace.push_back({TraceAction::Remove, cell, carried, carried});
  p.pop_back(cell.row);
  if (closes_row) {
    res.trace.push_back({TraceAction::RowClosed, cell, carried, Entry::infinity()});
  }
  auto to_input_coords = [&](Cell c) {
    if (closes_row && c.row >= cell.row) ++c.row;
    return c;
  };

  for (auto it = scan.rbegin(); it != scan.rend(); ++it) {
    const Cell c = *it;
    const Entry left = p.entry({c.col - 1, c.row});
    const Entry right = p.entry({c.col + 1, c.row});
    const Entry occupant = p.entry(c);
    if (!(left <= carried && carried <= right)) {
      res.trace.push_back({TraceAction::Pass, c, carried, occupant});
      continue;
    }
    if (occupant.is_infinite()) {
      res.trace.push_back({TraceAction::Place, c, carried, occupant});
      p.append(c.row, carried.value());
      res.escape_route.push_back(to_input_coords(c));
      res.output = Entry::infinity();
      return res;
    }
    if (occupant >= carried) {
      res.trace.push_back({TraceAction::Keep, c, carried, occupant});
      continue;
    }
    res.trace.push_back({TraceAction::Evict, c, carried, occupant});
    p.set(c, carried.value());
    res.escape_route.push_back(to_input_coords(c));
    carried = occupant;
  }
  res.output = carried;
  return res;
}

RecordingPair insert_word(std::span<const int> word) {
  std::set<int> seen;
  for (int v : word) {
    if (!seen.insert(v).second) {
      throw std::invalid_argument("insert_word: repeated letter " + std::to_string(v));
    }
  }
  RecordingPair out;
  int step = 0;
  for (int v : word) {
    ++step;
    InsertionResult r = insert(out.p, v);
    out.p = std::move(r.tableau);
    if (r.created_row) {
      out.q.insert_row(r.new_cell.row, step);
    } else {
      out.q.append(r.new_cell.row, step);
    }
  }
  return out;
}

std::vector<int> uninsert(const Filling& p, const Filling& q) {
  if (p.shape() != q.shape()) {
    throw std::invalid_argument("uninsert: shapes differ (" + p.shape().to_string() + " vs " +
                                q.shape().to_string() + ")");
  }
  if (!is_ssyct(p)) throw std::invalid_argument("uninsert: P is not a Young composition tableau");
  if (!is_dirt(q)) throw std::invalid_argument("uninsert: Q is not a DIRT");

  Filling t = p;
  Filling rec = q;
  std::vector<int> word(static_cast<std::size_t>(p.size()));
  for (int m = q.size(); m >= 1; --m) {
    const Cell c = *rec.find(m);
    RaptureResult r = rapture(t, c);
    if (r.output.is_infinite()) {
      throw std::logic_error("uninsert: rapture produced an infinite output at " + to_string(c));
    }
    word[static_cast<std::size_t>(m - 1)] = r.output.value();
    t = std::move(r.tableau);
    rec.pop_back(c.row);
  }
  return word;
}

}  // namespace qsc
