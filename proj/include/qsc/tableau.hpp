#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsc/composition.hpp"

namespace qsc {

// Cell address (column, row), both 1-based; rows are counted from the bottom
// (French convention).
struct Cell {
  int col = 1;
  int row = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

std::string to_string(const Cell& c);

// A tableau entry or the +infinity sentinel of an augmented row. The sentinel
// is strictly greater than every finite entry and equal only to itself.
class Entry {
 public:
  constexpr Entry() = default;
  constexpr explicit Entry(int value) : value_(value), infinite_(false) {}
  static constexpr Entry infinity() { return Entry{}; }

  constexpr bool is_infinite() const noexcept { return infinite_; }
  constexpr bool is_finite() const noexcept { return !infinite_; }
  // Precondition: is_finite().
  constexpr int value() const noexcept { return value_; }

  friend constexpr bool operator==(const Entry& a, const Entry& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Entry& a, const Entry& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator==(const Entry& a, int b) { return a == Entry(b); }
  friend constexpr std::strong_ordering operator<=>(const Entry& a, int b) {
    return a <=> Entry(b);
  }

  std::string to_string() const;

 private:
  int value_ = 0;
  bool infinite_ = true;
};

// A filling of a composition diagram. rows()[0] is the bottom row.
class Filling {
 public:
  Filling() = default;
  // Throws std::invalid_argument on empty rows or entries < 1.
  explicit Filling(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  Composition shape() const;
  std::size_t num_rows() const noexcept { return rows_.size(); }
  // Number of cells.
  int size() const noexcept;
  bool empty() const noexcept { return rows_.empty(); }

  // Length of row r (1-based from the bottom); 0 for rows outside the diagram.
  int row_length(int r) const noexcept;
  int max_row_length() const noexcept;
  bool contains(Cell c) const noexcept;
  // Precondition: contains(c).
  int at(Cell c) const { return rows_[c.row - 1][c.col - 1]; }
  // Entry at c, reading cells outside the diagram as +infinity.
  Entry entry(Cell c) const noexcept;

  std::optional<Cell> find(int value) const;
  int max_entry() const noexcept;

  // Mutators for the insertion-type algorithms. All keep rows nonempty.
  void set(Cell c, int value);
  void append(int row, int value);
  // Removes the last cell of a row; removes the row if it becomes empty.
  void pop_back(int row);
  // Inserts a new single-cell row so that it becomes row `row`.
  void insert_row(int row, int value);

  // Compact text form: rows bottom-up separated by '/', entries by ','.
  // The tableau of shape (1,3,2) with rows 2 / 3 4 7 / 6 8 is "2/3,4,7/6,8".
  std::string to_text() const;
  static Filling parse_text(std::string_view text);
  // Multi-line rendering, top row first.
  std::string render() const;

  friend bool operator==(const Filling&, const Filling&) = default;
  friend auto operator<=>(const Filling&, const Filling&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

// Read-only view of the augmentation: every row gains a trailing +infinity.
class AugmentedView {
 public:
  explicit AugmentedView(const Filling& f) : f_(&f) {}

  // True for cells of the diagram and for the sentinel cell of each row.
  bool contains(Cell c) const noexcept;
  // +infinity for sentinel cells and for cells outside the augmented diagram.
  Entry at(Cell c) const noexcept { return f_->entry(c); }
  bool is_sentinel(Cell c) const noexcept;
  Composition shape() const;
  // Cells in Young reading order: columns right to left, each top to bottom.
  std::vector<Cell> reading_order() const;

 private:
  const Filling* f_;
};

bool is_ssyct(const Filling& f);
bool is_immaculate(const Filling& f);
bool is_standard(const Filling& f);

std::vector<Entry> young_reading_word(const Filling& f);
std::vector<int> immaculate_reading_word(const Filling& f);

// Both require is_standard(f) and throw std::invalid_argument otherwise.
std::vector<int> young_descent_set(const Filling& f);
std::vector<int> immaculate_descent_set(const Filling& f);

enum class StandardKind { Immaculate, Syct };
enum class SemistandardKind { Immaculate, Ssyct };

// Lexicographic by immaculate reading word.
std::vector<Filling> enumerate_standard(const Composition& shape, StandardKind kind);
// Cells filled in immaculate reading order, smallest candidate first.
std::vector<Filling> enumerate_semistandard(const Composition& shape, SemistandardKind kind,
                                            int max_entry);

// v[i-1] = multiplicity of entry i, up to the largest entry. May contain zeros.
std::vector<int> weight(const Filling& f);

}  // namespace qsc
