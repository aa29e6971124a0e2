#include "qsc/tableau.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qsc {

std::string to_string(const Cell& c) {
  return "(" + std::to_string(c.col) + "," + std::to_string(c.row) + ")";
}

std::string Entry::to_string() const {
  return infinite_ ? std::string("inf") : std::to_string(value_);
}

Filling::Filling(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& row : rows_) {
    if (row.empty()) throw std::invalid_argument("filling rows must be nonempty");
    for (int v : row) {
      if (v < 1) throw std::invalid_argument("filling entries must be positive");
    }
  }
}

Composition Filling::shape() const {
  std::vector<int> parts;
  parts.reserve(rows_.size());
  for (const auto& row : rows_) parts.push_back(static_cast<int>(row.size()));
  return Composition(std::move(parts));
}

int Filling::size() const noexcept {
  int n = 0;
  for (const auto& row : rows_) n += static_cast<int>(row.size());
  return n;
}

int Filling::row_length(int r) const noexcept {
  if (r < 1 || r > static_cast<int>(rows_.size())) return 0;
  return static_cast<int>(rows_[r - 1].size());
}

int Filling::max_row_length() const noexcept {
  int m = 0;
  for (const auto& row : rows_) m = std::max(m, static_cast<int>(row.size()));
  return m;
}

bool Filling::contains(Cell c) const noexcept {
  return c.col >= 1 && c.col <= row_length(c.row);
}

Entry Filling::entry(Cell c) const noexcept {
  return contains(c) ? Entry(at(c)) : Entry::infinity();
}

std::optional<Cell> Filling::find(int value) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (rows_[r][c] == value) return Cell{static_cast<int>(c) + 1, static_cast<int>(r) + 1};
    }
  }
  return std::nullopt;
}

int Filling::max_entry() const noexcept {
  int m = 0;
  for (const auto& row : rows_) {
    for (int v : row) m = std::max(m, v);
  }
  return m;
}

void Filling::set(Cell c, int value) {
  if (!contains(c)) throw std::out_of_range("set: cell " + qsc::to_string(c) + " not in diagram");
  if (value < 1) throw std::invalid_argument("filling entries must be positive");
  rows_[c.row - 1][c.col - 1] = value;
}

void Filling::append(int row, int value) {
  if (row < 1 || row > static_cast<int>(rows_.size())) throw std::out_of_range("append: no such row");
  if (value < 1) throw std::invalid_argument("filling entries must be positive");
  rows_[row - 1].push_back(value);
}

void Filling::pop_back(int row) {
  if (row < 1 || row > static_cast<int>(rows_.size())) throw std::out_of_range("pop_back: no such row");
  rows_[row - 1].pop_back();
  if (rows_[row - 1].empty()) rows_.erase(rows_.begin() + (row - 1));
}

void Filling::insert_row(int row, int value) {
  if (row < 1 || row > static_cast<int>(rows_.size()) + 1) {
    throw std::out_of_range("insert_row: bad index");
  }
  if (value < 1) throw std::invalid_argument("filling entries must be positive");
  rows_.insert(rows_.begin() + (row - 1), std::vector<int>{value});
}

std::string Filling::to_text() const {
  std::string out;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) out += '/';
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      if (c) out += ',';
      out += std::to_string(rows_[r][c]);
    }
  }
  return out;
}

Filling Filling::parse_text(std::string_view text) {
  std::vector<std::vector<int>> rows;
  auto is_space = [](char ch) { return ch == ' ' || ch == '\t' || ch == '\n'; };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) return Filling{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t slash = text.find('/', pos);
    if (slash == std::string_view::npos) slash = text.size();
    std::string_view row_text = text.substr(pos, slash - pos);
    std::vector<int> row;
    std::size_t p = 0;
    while (p <= row_text.size()) {
      std::size_t comma = row_text.find(',', p);
      if (comma == std::string_view::npos) comma = row_text.size();
      std::string_view tok = row_text.substr(p, comma - p);
      while (!tok.empty() && is_space(tok.front())) tok.remove_prefix(1);
      while (!tok.empty() && is_space(tok.back())) tok.remove_suffix(1);
      int v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw std::invalid_argument("malformed tableau text: '" + std::string(text) + "'");
      }
      row.push_back(v);
      p = comma + 1;
    }
    rows.push_back(std::move(row));
    pos = slash + 1;
  }
  return Filling(std::move(rows));
}

std::string Filling::render() const {
  std::size_t width = 1;
  for (const auto& row : rows_) {
    for (int v : row) width = std::max(width, std::to_string(v).size());
  }
  std::ostringstream os;
  for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
    for (std::size_t c = 0; c < it->size(); ++c) {
      std::string s = std::to_string((*it)[c]);
      if (c) os << ' ';
      os << std::string(width - s.size(), ' ') << s;
    }
    os << '\n';
  }
  return os.str();
}

bool AugmentedView::contains(Cell c) const noexcept {
  return c.col >= 1 && c.col <= f_->row_length(c.row) + (f_->row_length(c.row) > 0 ? 1 : 0);
}

bool AugmentedView::is_sentinel(Cell c) const noexcept {
  return f_->row_length(c.row) > 0 && c.col == f_->row_length(c.row) + 1;
}

Composition AugmentedView::shape() const {
  std::vector<int> parts;
  for (const auto& row : f_->rows()) parts.push_back(static_cast<int>(row.size()) + 1);
  return Composition(std::move(parts));
}

std::vector<Cell> AugmentedView::reading_order() const {
  std::vector<Cell> out;
  const int rows = static_cast<int>(f_->num_rows());
  for (int col = f_->max_row_length() + 1; col >= 1; --col) {
    for (int row = rows; row >= 1; --row) {
      if (contains(Cell{col, row})) out.push_back(Cell{col, row});
    }
  }
  return out;
}

namespace {

bool rows_weakly_increase(const Filling& f) {
  for (const auto& row : f.rows()) {
    if (!std::is_sorted(row.begin(), row.end())) return false;
  }
  return true;
}

bool first_column_strictly_increases(const Filling& f) {
  const auto& rows = f.rows();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r - 1][0] >= rows[r][0]) return false;
  }
  return true;
}

bool young_triple_rule(const Filling& f) {
  const int len = static_cast<int>(f.num_rows());
  for (int j = 1; j <= len; ++j) {
    for (int k = j + 1; k <= len; ++k) {
      const int top = std::max(f.row_length(j), f.row_length(k));
      for (int i = 1; i < top; ++i) {
        const Entry b = f.entry({i, k});
        const Entry a = f.entry({i + 1, j});
        const Entry c = f.entry({i + 1, k});
        if (b <= a && !(c < a)) return false;
      }
    }
  }
  return true;
}

void require_standard(const Filling& f, const char* what) {
  if (!is_standard(f)) {
    throw std::invalid_argument(std::string(what) + " requires a standard filling");
  }
}

}  // namespace

bool is_ssyct(const Filling& f) {
  return rows_weakly_increase(f) && first_column_strictly_increases(f) && young_triple_rule(f);
}

bool is_immaculate(const Filling& f) {
  return rows_weakly_increase(f) && first_column_strictly_increases(f);
}

bool is_standard(const Filling& f) {
  const int n = f.size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (const auto& row : f.rows()) {
    for (int v : row) {
      if (v > n || seen[v]) return false;
      seen[v] = true;
    }
  }
  return true;
}

std::vector<Entry> young_reading_word(const Filling& f) {
  AugmentedView aug(f);
  std::vector<Entry> word;
  for (Cell c : aug.reading_order()) word.push_back(aug.at(c));
  return word;
}

std::vector<int> immaculate_reading_word(const Filling& f) {
  std::vector<int> word;
  for (auto it = f.rows().rbegin(); it != f.rows().rend(); ++it) {
    word.insert(word.end(), it->begin(), it->end());
  }
  return word;
}

std::vector<int> young_descent_set(const Filling& f) {
  require_standard(f, "young_descent_set");
  std::vector<int> out;
  for (int i = 1; i < f.size(); ++i) {
    if (f.find(i + 1)->col <= f.find(i)->col) out.push_back(i);
  }
  return out;
}

std::vector<int> immaculate_descent_set(const Filling& f) {
  require_standard(f, "immaculate_descent_set");
  std::vector<int> out;
  for (int i = 1; i < f.size(); ++i) {
    if (f.find(i + 1)->row > f.find(i)->row) out.push_back(i);
  }
  return out;
}

namespace {

// Cells in immaculate reading order: top row first, left to right.
std::vector<Cell> immaculate_order(const Composition& shape) {
  std::vector<Cell> cells;
  for (int r = static_cast<int>(shape.length()); r >= 1; --r) {
    for (int c = 1; c <= shape[r - 1]; ++c) cells.push_back(Cell{c, r});
  }
  return cells;
}

std::vector<std::vector<int>> blank_rows(const Composition& shape) {
  std::vector<std::vector<int>> rows;
  for (int p : shape) rows.emplace_back(static_cast<std::size_t>(p), 0);
  return rows;
}

}  // namespace

std::vector<Filling> enumerate_standard(const Composition& shape, StandardKind kind) {
  const int n = shape.size();
  const auto cells = immaculate_order(shape);
  auto rows = blank_rows(shape);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  std::vector<Filling> out;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      Filling f(rows);
      if (kind == StandardKind::Immaculate || is_ssyct(f)) out.push_back(std::move(f));
      return;
    }
    const Cell c = cells[idx];
    const bool has_above = c.col == 1 && c.row < static_cast<int>(shape.length());
    for (int v = 1; v <= n; ++v) {
      if (used[v]) continue;
      if (c.col > 1 && v <= rows[c.row - 1][c.col - 2]) continue;
      // The first column grows upward, so it shrinks as we fill downward.
      if (has_above && v >= rows[c.row][0]) break;
      used[v] = true;
      rows[c.row - 1][c.col - 1] = v;
      rec(idx + 1);
      used[v] = false;
    }
    rows[c.row - 1][c.col - 1] = 0;
  };
  if (n == 0) return {Filling{}};
  rec(0);
  return out;
}

std::vector<Filling> enumerate_semistandard(const Composition& shape, SemistandardKind kind,
                                            int max_entry) {
  if (max_entry < 1) throw std::invalid_argument("enumerate_semistandard: max_entry must be >= 1");
  const auto cells = immaculate_order(shape);
  auto rows = blank_rows(shape);
  std::vector<Filling> out;

  std::function<void(std::size_t)> rec = [&](std::size_t idx) {
    if (idx == cells.size()) {
      Filling f(rows);
      if (kind == SemistandardKind::Immaculate || is_ssyct(f)) out.push_back(std::move(f));
      return;
    }
    const Cell c = cells[idx];
    const bool has_above = c.col == 1 && c.row < static_cast<int>(shape.length());
    const int lo = c.col > 1 ? rows[c.row - 1][c.col - 2] : 1;
    for (int v = lo; v <= max_entry; ++v) {
      if (has_above && v >= rows[c.row][0]) break;
      rows[c.row - 1][c.col - 1] = v;
      rec(idx + 1);
    }
    rows[c.row - 1][c.col - 1] = 0;
  };
  if (shape.empty()) return {Filling{}};
  rec(0);
  return out;
}

std::vector<int> weight(const Filling& f) {
  std::vector<int> v(static_cast<std::size_t>(f.max_entry()), 0);
  for (const auto& row : f.rows()) {
    for (int e : row) ++v[e - 1];
  }
  return v;
}

}  // namespace qsc
