#include "qsc/composition.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace qsc {

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) {
      throw std::invalid_argument("composition parts must be positive, got " +
                                  std::to_string(p));
    }
    n_ += p;
  }
}

Composition::Composition(std::initializer_list<int> parts)
    : Composition(std::vector<int>(parts)) {}

std::string Composition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Composition Composition::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.size() >= 2 && text.front() == '(' && text.back() == ')') {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (text.empty()) return Composition{};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = trim(text.substr(pos, comma - pos));
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw std::invalid_argument("malformed composition: '" + std::string(text) + "'");
    }
    parts.push_back(value);
    pos = comma + 1;
  }
  return Composition(std::move(parts));
}

bool GrevlexLess::operator()(const Composition& a, const Composition& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  return b < a;
}

Composition reverse(const Composition& alpha) {
  std::vector<int> parts(alpha.begin(), alpha.end());
  std::reverse(parts.begin(), parts.end());
  return Composition(std::move(parts));
}

std::vector<int> descent_composition_set(const Composition& alpha) {
  std::vector<int> out;
  int sum = 0;
  for (std::size_t i = 0; i + 1 < alpha.length(); ++i) {
    sum += alpha[i];
    out.push_back(sum);
  }
  return out;
}

Composition composition_from_set(std::span<const int> set, int n) {
  if (n < 0) throw std::invalid_argument("negative degree");
  if (n == 0) {
    if (!set.empty()) throw std::invalid_argument("nonempty set for n = 0");
    return Composition{};
  }
  std::vector<int> cuts(set.begin(), set.end());
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<int> parts;
  int prev = 0;
  for (int c : cuts) {
    if (c < 1 || c >= n) {
      throw std::invalid_argument("descent " + std::to_string(c) + " outside {1.." +
                                  std::to_string(n - 1) + "}");
    }
    parts.push_back(c - prev);
    prev = c;
  }
  parts.push_back(n - prev);
  return Composition(std::move(parts));
}

std::vector<Composition> refinements(const Composition& alpha) {
  // Each part a splits into one of the compositions of a.
  std::vector<std::vector<Composition>> per_part;
  per_part.reserve(alpha.length());
  for (int a : alpha) per_part.push_back(compositions_of(a));

  std::vector<Composition> out;
  std::vector<int> acc;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == per_part.size()) {
      out.emplace_back(acc);
      return;
    }
    for (const auto& piece : per_part[i]) {
      const std::size_t mark = acc.size();
      acc.insert(acc.end(), piece.begin(), piece.end());
      rec(i + 1);
      acc.resize(mark);
    }
  };
  rec(0);
  // compositions_of lists (a) first, so out.front() == alpha already.
  std::sort(out.begin() + 1, out.end(), GrevlexLess{});
  return out;
}

bool is_refinement(const Composition& finer, const Composition& coarser) {
  if (finer.size() != coarser.size()) return false;
  auto fs = descent_composition_set(finer);
  auto cs = descent_composition_set(coarser);
  return std::includes(fs.begin(), fs.end(), cs.begin(), cs.end());
}

bool dominates(const Composition& alpha, const Composition& beta) {
  if (alpha.size() != beta.size()) {
    throw std::invalid_argument("dominance needs compositions of equal size: " +
                                alpha.to_string() + " vs " + beta.to_string());
  }
  const std::size_t len = std::max(alpha.length(), beta.length());
  int sa = 0;
  int sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < alpha.length() ? alpha[i] : 0;
    sb += i < beta.length() ? beta[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

Composition sorted_decreasing(const Composition& alpha) {
  std::vector<int> parts(alpha.begin(), alpha.end());
  std::sort(parts.begin(), parts.end(), std::greater<>{});
  return Composition(std::move(parts));
}

bool is_rearrangement(const Composition& alpha, const Composition& beta) {
  return sorted_decreasing(alpha) == sorted_decreasing(beta);
}

bool is_partition(const Composition& alpha) {
  return std::is_sorted(alpha.begin(), alpha.end(), std::greater<>{});
}

std::vector<Composition> compositions_of(int n, std::optional<std::size_t> length) {
  if (n < 0) throw std::invalid_argument("compositions_of: negative n");
  std::vector<Composition> out;
  std::vector<int> acc;
  // First part descending, recursively, yields lexicographically decreasing order.
  std::function<void(int)> rec = [&](int rest) {
    if (rest == 0) {
      if (!length || acc.size() == *length) out.emplace_back(acc);
      return;
    }
    if (length && acc.size() >= *length) return;
    for (int p = rest; p >= 1; --p) {
      acc.push_back(p);
      rec(rest - p);
      acc.pop_back();
    }
  };
  rec(n);
  return out;
}

std::vector<Composition> partitions_of(int n) {
  std::vector<Composition> out;
  for (auto& c : compositions_of(n)) {
    if (is_partition(c)) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace qsc
