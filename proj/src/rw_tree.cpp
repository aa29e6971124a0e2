#include "qsc/rw_tree.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace qsc {

std::string to_string(RWDirection d) { return d == RWDirection::Forward ? "forward" : "dual"; }

std::vector<std::size_t> RWTree::leaves() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].leaf) out.push_back(i);
  }
  return out;
}

namespace {

using Rows = std::vector<std::vector<int>>;

int filled_length(const std::vector<int>& row) {
  return static_cast<int>(std::count_if(row.begin(), row.end(), [](int v) { return v != 0; }));
}

// A child together with the placements that produced it, for ordering.
struct Candidate {
  std::vector<std::pair<int, int>> placements;  // (col, row) in creation order
  Rows rows;
};

void sort_candidates(std::vector<Candidate>& cs) {
  std::stable_sort(cs.begin(), cs.end(), [](const Candidate& a, const Candidate& b) {
    return a.placements < b.placements;
  });
}

// Children of a forward node: the batch first, last places a new bottom row
// and then row ends strictly to the right of the previous placement.
std::vector<Candidate> forward_children(const Rows& rows, int first, int last) {
  std::vector<Candidate> out;
  Candidate cur;
  cur.rows = rows;
  cur.rows.insert(cur.rows.begin(), std::vector<int>{first});
  cur.placements.push_back({1, 1});

  std::function<void(int, int)> rec = [&](int v, int last_col) {
    if (v > last) {
      out.push_back(cur);
      return;
    }
    const int nrows = static_cast<int>(cur.rows.size());
    for (int r = 1; r <= nrows; ++r) {
      const int m = static_cast<int>(cur.rows[r - 1].size());
      if (m + 1 <= last_col) continue;
      bool blocked = false;
      for (int g = 1; g < r && !blocked; ++g) {
        blocked = static_cast<int>(cur.rows[g - 1].size()) == m + 1;
      }
      if (blocked) continue;
      cur.rows[r - 1].push_back(v);
      cur.placements.push_back({m + 1, r});
      rec(v + 1, m + 1);
      cur.placements.pop_back();
      cur.rows[r - 1].pop_back();
    }
  };
  rec(first + 1, 1);
  sort_candidates(out);
  return out;
}

// Children of a dual node at the given level. Row indices are converted from
// the top-down convention of the rules to bottom-up storage.
std::vector<Candidate> dual_children(const Rows& rows, const Composition& alpha, int level) {
  const int len = static_cast<int>(alpha.length());
  const int first_row = len - level + 1;  // bottom-up index of the level-th row from the top
  Candidate cur;
  cur.rows = rows;
  cur.rows[first_row - 1][0] = level;
  cur.placements.push_back({1, first_row});
  const int width = *std::max_element(alpha.begin(), alpha.end());

  std::vector<Candidate> out;
  std::function<void(int)> rec = [&](int col) {
    if (col > width) {
      out.push_back(cur);
      return;
    }
    rec(col + 1);  // no value in this column
    for (int r = 1; r <= len; ++r) {
      auto& row = cur.rows[r - 1];
      if (static_cast<int>(row.size()) < col) continue;    // outside the diagram
      if (row[col - 1] != 0 || row[col - 2] == 0) continue;  // occupied, or left neighbour empty
      bool blocked = false;
      for (int g = 1; g < r && !blocked; ++g) {
        blocked = filled_length(cur.rows[g - 1]) == col;
      }
      if (blocked) continue;
      row[col - 1] = level;
      cur.placements.push_back({col, r});
      rec(col + 1);
      cur.placements.pop_back();
      row[col - 1] = 0;
    }
  };
  rec(2);
  sort_candidates(out);
  return out;
}

bool is_full(const Rows& rows) {
  for (const auto& row : rows) {
    if (std::find(row.begin(), row.end(), 0) != row.end()) return false;
  }
  return true;
}

}  // namespace

Composition leaf_label(const RWTree& tree, const RWNode& node) {
  if (tree.direction == RWDirection::Forward) {
    std::vector<int> shape;
    for (const auto& row : node.rows) shape.push_back(static_cast<int>(row.size()));
    return Composition(std::move(shape));
  }
  std::vector<int> counts(static_cast<std::size_t>(node.depth), 0);
  for (const auto& row : node.rows) {
    for (int v : row) {
      if (v != 0) ++counts[static_cast<std::size_t>(v - 1)];
    }
  }
  std::erase(counts, 0);
  return Composition(std::move(counts));
}

RWResult rw_forward(const Composition& alpha) {
  RWResult res;
  res.tree.direction = RWDirection::Forward;
  res.tree.alpha = alpha;
  res.expansion = {Basis::YoungQS, alpha.size(), {}};
  const int len = static_cast<int>(alpha.length());
  if (len == 0) {
    res.tree.nodes.push_back({{}, 0, true, {}});
    res.expansion.add(Composition{}, 1);
    return res;
  }
  std::vector<int> root;
  for (int v = 1; v <= alpha[len - 1]; ++v) root.push_back(v);
  res.tree.nodes.push_back({{root}, 0, len == 1, {}});

  // Breadth-first so that node indices follow depth.
  int next_value = alpha[len - 1] + 1;
  std::vector<std::size_t> frontier{0};
  for (int k = 1; k < len; ++k) {
    const int batch = alpha[len - 1 - k];
    std::vector<std::size_t> next;
    for (std::size_t parent : frontier) {
      const Rows parent_rows = res.tree.nodes[parent].rows;
      for (auto& c : forward_children(parent_rows, next_value, next_value + batch - 1)) {
        res.tree.nodes.push_back({std::move(c.rows), k, k == len - 1, {}});
        res.tree.nodes[parent].children.push_back(res.tree.nodes.size() - 1);
        next.push_back(res.tree.nodes.size() - 1);
      }
    }
    frontier = std::move(next);
    next_value += batch;
  }
  for (std::size_t i : res.tree.leaves()) {
    res.expansion.add(leaf_label(res.tree, res.tree.nodes[i]), 1);
  }
  return res;
}

RWResult rw_dual(const Composition& alpha) {
  RWResult res;
  res.tree.direction = RWDirection::Dual;
  res.tree.alpha = alpha;
  res.expansion = {Basis::Immaculate, alpha.size(), {}};
  const int len = static_cast<int>(alpha.length());
  Rows empty;
  for (int p : alpha) empty.emplace_back(static_cast<std::size_t>(p), 0);
  res.tree.nodes.push_back({empty, 0, len == 0, {}});

  std::vector<std::size_t> frontier{0};
  for (int level = 1; level <= len; ++level) {
    std::vector<std::size_t> next;
    for (std::size_t parent : frontier) {
      const Rows parent_rows = res.tree.nodes[parent].rows;
      for (auto& c : dual_children(parent_rows, alpha, level)) {
        if (level == len && !is_full(c.rows)) continue;
        res.tree.nodes.push_back({std::move(c.rows), level, level == len, {}});
        res.tree.nodes[parent].children.push_back(res.tree.nodes.size() - 1);
        next.push_back(res.tree.nodes.size() - 1);
      }
    }
    frontier = std::move(next);
  }
  for (std::size_t i : res.tree.leaves()) {
    const Composition counts = leaf_label(res.tree, res.tree.nodes[i]);
    res.expansion.add(reverse(counts), 1);
  }
  return res;
}

std::string to_dot(const RWTree& tree) {
  std::ostringstream os;
  os << "digraph rw_" << to_string(tree.direction) << " {\n";
  os << "  label=\"" << to_string(tree.direction) << " (" << tree.alpha.to_string() << ")\";\n";
  os << "  node [shape=box, fontname=\"monospace\"];\n";
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    const RWNode& n = tree.nodes[i];
    std::string label;
    for (auto it = n.rows.rbegin(); it != n.rows.rend(); ++it) {
      for (std::size_t c = 0; c < it->size(); ++c) {
        if (c) label += ' ';
        label += (*it)[c] == 0 ? std::string(".") : std::to_string((*it)[c]);
      }
      label += "\\l";
    }
    if (n.leaf) label += "[" + leaf_label(tree, n).to_string() + "]\\l";
    os << "  n" << i << " [label=\"" << label << "\"" << (n.leaf ? ", peripheries=2" : "")
       << "];\n";
  }
  for (std::size_t i = 0; i < tree.nodes.size(); ++i) {
    for (std::size_t c : tree.nodes[i].children) os << "  n" << i << " -> n" << c << ";\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace qsc
