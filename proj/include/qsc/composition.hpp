#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsc {

// A finite sequence of positive integers. The empty composition is the
// unique composition of 0.
class Composition {
 public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);
  Composition(std::initializer_list<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& as_vector() const noexcept { return parts_; }

  // |alpha|, the sum of the parts.
  int size() const noexcept { return n_; }
  // l(alpha), the number of parts.
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }

  int operator[](std::size_t i) const { return parts_[i]; }
  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  // Comma-joined parts ("1,2,1"); the empty composition is "".
  std::string to_string() const;
  // Accepts "1,2,1", "(1,2,1)", "" and "()". Throws std::invalid_argument.
  static Composition parse(std::string_view text);

  friend bool operator==(const Composition&, const Composition&) = default;
  // Plain lexicographic order on the parts.
  friend auto operator<=>(const Composition& a, const Composition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

// Canonical enumeration order: by size, then lexicographically decreasing
// within a size. For n = 4 this gives
// (4), (3,1), (2,2), (2,1,1), (1,3), (1,2,1), (1,1,2), (1,1,1,1).
struct GrevlexLess {
  bool operator()(const Composition& a, const Composition& b) const;
};

Composition reverse(const Composition& alpha);

// set(alpha): the l-1 proper partial sums, ascending.
std::vector<int> descent_composition_set(const Composition& alpha);
// Inverse of descent_composition_set for compositions of n. Requires the
// set to be a subset of {1..n-1}; order and duplicates are tolerated.
Composition composition_from_set(std::span<const int> set, int n);

// All refinements of alpha, alpha itself first, then in GrevlexLess order.
std::vector<Composition> refinements(const Composition& alpha);
bool is_refinement(const Composition& finer, const Composition& coarser);

// Prefix-sum dominance, missing parts read as 0. Throws on unequal sizes.
bool dominates(const Composition& alpha, const Composition& beta);

bool is_rearrangement(const Composition& alpha, const Composition& beta);
bool is_partition(const Composition& alpha);
Composition sorted_decreasing(const Composition& alpha);

// All compositions of n, optionally of a fixed length, in GrevlexLess order.
std::vector<Composition> compositions_of(int n, std::optional<std::size_t> length = std::nullopt);
// Partitions of n in GrevlexLess order.
std::vector<Composition> partitions_of(int n);

}  // namespace qsc
