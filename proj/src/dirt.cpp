#include "qsc/dirt.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace qsc {

RowStripDecomposition row_strips(const Filling& q) {
  if (!is_standard(q)) throw std::invalid_argument("row_strips: filling is not standard");
  const int n = q.size();
  std::vector<Cell> where(static_cast<std::size_t>(n) + 1);
  for (int v = 1; v <= n; ++v) where[v] = *q.find(v);

  RowStripDecomposition out;
  std::vector<int> lengths;
  int v = 1;
  while (v <= n) {
    RowStrip strip{v, {where[v]}};
    ++v;
    while (v <= n && where[v].col > strip.cells.back().col) {
      strip.cells.push_back(where[v]);
      ++v;
    }
    lengths.push_back(static_cast<int>(strip.cells.size()));
    out.strips.push_back(std::move(strip));
  }
  out.strip_shape = Composition(std::move(lengths));
  return out;
}

Composition row_strip_shape(const Filling& q) { return row_strips(q).strip_shape; }

bool is_dirt(const Filling& q) {
  if (!is_standard(q)) return false;
  const auto& rows = q.rows();
  for (const auto& row : rows) {
    if (std::adjacent_find(row.begin(), row.end(), std::greater_equal<>{}) != row.end()) return false;
  }
  for (const auto& strip : row_strips(q).strips) {
    if (strip.cells.front().col != 1) return false;
  }
  // rows[0] is the bottom row; the first column decreases going up.
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r - 1][0] <= rows[r][0]) return false;
  }
  // Recording triple rule: Q(i,j) > Q(i,g) with j above g forces
  // Q(i,j) > Q(i+1,g), absent cells reading as +infinity.
  const int len = static_cast<int>(rows.size());
  for (int g = 1; g <= len; ++g) {
    for (int j = g + 1; j <= len; ++j) {
      const int width = std::min(q.row_length(g), q.row_length(j));
      for (int i = 1; i <= width; ++i) {
        const int a = q.at({i, j});
        if (a > q.at({i, g}) && !(Entry(a) > q.entry({i + 1, g}))) return false;
      }
    }
  }
  return true;
}

namespace {

// Backtracking over the placement of 1..n. Each strip starts in the first
// column of its row (strip k owns the k-th row from the top); the remaining
// values of a strip go to row ends right of the previous value.
template <class Visit>
void for_each_dirt(const Composition& shape, const Composition& strip_shape, Visit&& visit) {
  const int len = static_cast<int>(shape.length());
  if (shape.size() != strip_shape.size() || static_cast<int>(strip_shape.length()) != len) return;
  const int n = shape.size();
  if (n == 0) {
    visit(Filling{});
    return;
  }

  std::vector<std::vector<int>> rows(static_cast<std::size_t>(len));
  std::vector<int> strip_of(static_cast<std::size_t>(n) + 1);
  std::vector<bool> is_start(static_cast<std::size_t>(n) + 1, false);
  {
    int v = 1;
    for (std::size_t k = 0; k < strip_shape.length(); ++k) {
      is_start[v] = true;
      for (int t = 0; t < strip_shape[k]; ++t) strip_of[v++] = static_cast<int>(k);
    }
  }
  int last_col = 0;

  // Placing a value at column c of row r (1-based) is forbidden when a lower
  // row ends exactly at column c.
  auto triple_ok = [&](int r, int c) {
    for (int g = 1; g < r; ++g) {
      if (static_cast<int>(rows[g - 1].size()) == c) return false;
    }
    return true;
  };

  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      visit(Filling(rows));
      return;
    }
    if (is_start[v]) {
      const int r = len - strip_of[v];
      if (!triple_ok(r, 1)) return;
      const int saved = last_col;
      last_col = 1;
      rows[r - 1].push_back(v);
      rec(v + 1);
      rows[r - 1].pop_back();
      last_col = saved;
      return;
    }
    for (int r = 1; r <= len; ++r) {
      auto& row = rows[r - 1];
      if (row.empty() || static_cast<int>(row.size()) >= shape[r - 1]) continue;
      const int c = static_cast<int>(row.size()) + 1;
      if (c <= last_col || !triple_ok(r, c)) continue;
      const int saved = last_col;
      last_col = c;
      row.push_back(v);
      rec(v + 1);
      row.pop_back();
      last_col = saved;
    }
  };
  rec(1);
}

}  // namespace

std::vector<Filling> enumerate_dirts(const Composition& shape, const Composition& strip_shape) {
  std::vector<Filling> out;
  for_each_dirt(shape, strip_shape, [&](Filling f) { out.push_back(std::move(f)); });
  return out;
}

std::size_t count_dirts(const Composition& shape, const Composition& strip_shape) {
  std::size_t count = 0;
  for_each_dirt(shape, strip_shape, [&](const Filling&) { ++count; });
  return count;
}

Filling superstandard(const Composition& lambda) {
  if (!is_partition(lambda)) {
    throw std::invalid_argument("superstandard: " + lambda.to_string() + " is not a partition");
  }
  const std::size_t len = lambda.length();
  std::vector<std::vector<int>> rows(len);
  int v = 1;
  for (std::size_t r = len; r-- > 0;) {
    for (int t = 0; t < lambda[r]; ++t) rows[r].push_back(v++);
  }
  return Filling(std::move(rows));
}

}  // namespace qsc
