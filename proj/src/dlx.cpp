#include "dlx.hpp"

namespace heptad::detail {

namespace {

struct Links {
  std::vector<int> left, right, up, down, col, row;
  std::vector<int> count;  // per column header

  explicit Links(int ncols) {
    // node 0 is the root; 1..ncols are column headers
    left.resize(size_t(ncols) + 1);
    right.resize(size_t(ncols) + 1);
    up.resize(size_t(ncols) + 1);
    down.resize(size_t(ncols) + 1);
    col.resize(size_t(ncols) + 1);
    row.resize(size_t(ncols) + 1, -1);
    count.assign(size_t(ncols) + 1, 0);
    for (int c = 0; c <= ncols; ++c) {
      left[size_t(c)] = c == 0 ? ncols : c - 1;
      right[size_t(c)] = c == ncols ? 0 : c + 1;
      up[size_t(c)] = c;
      down[size_t(c)] = c;
      col[size_t(c)] = c;
    }
  }

  void add_row(int row_index, const std::vector<int>& cols) {
    int first = -1;
    for (int c : cols) {
      int header = c + 1;
      int node = int(left.size());
      left.push_back(node);
      right.push_back(node);
      up.push_back(up[size_t(header)]);
      down.push_back(header);
      col.push_back(header);
      row.push_back(row_index);
      down[size_t(up[size_t(header)])] = node;
      up[size_t(header)] = node;
      ++count[size_t(header)];
      if (first < 0) {
        first = node;
      } else {
        left[size_t(node)] = left[size_t(first)];
        right[size_t(node)] = first;
        right[size_t(left[size_t(first)])] = node;
        left[size_t(first)] = node;
      }
    }
  }

  void cover(int header) {
    left[size_t(right[size_t(header)])] = left[size_t(header)];
    right[size_t(left[size_t(header)])] = right[size_t(header)];
    for (int i = down[size_t(header)]; i != header; i = down[size_t(i)])
      for (int j = right[size_t(i)]; j != i; j = right[size_t(j)]) {
        up[size_t(down[size_t(j)])] = up[size_t(j)];
        down[size_t(up[size_t(j)])] = down[size_t(j)];
        --count[size_t(col[size_t(j)])];
      }
  }

  void uncover(int header) {
    for (int i = up[size_t(header)]; i != header; i = up[size_t(i)])
      for (int j = left[size_t(i)]; j != i; j = left[size_t(j)]) {
        ++count[size_t(col[size_t(j)])];
        up[size_t(down[size_t(j)])] = j;
        down[size_t(up[size_t(j)])] = j;
      }
    left[size_t(right[size_t(header)])] = header;
    right[size_t(left[size_t(header)])] = header;
  }
};

struct Solver {
  Links links;
  long nodes = 0;
  long limit;
  std::vector<int> chosen;
  CoverResult out;

  Solver(int ncols, long node_budget) : links(ncols), limit(node_budget) {}

  bool run() {
    if (links.right[0] == 0) {
      out.found = true;
      out.rows = chosen;
      return true;
    }
    int best = links.right[0];
    for (int c = links.right[0]; c != 0; c = links.right[size_t(c)])
      if (links.count[size_t(c)] < links.count[size_t(best)]) best = c;
    links.cover(best);
    for (int i = links.down[size_t(best)]; i != best;
         i = links.down[size_t(i)]) {
      if (++nodes > limit) {
        out.budget_hit = true;
        links.uncover(best);
        return true;  // stop the whole search
      }
      chosen.push_back(links.row[size_t(i)]);
      for (int j = links.right[size_t(i)]; j != i; j = links.right[size_t(j)])
        links.cover(links.col[size_t(j)]);
      if (run()) return true;
      for (int j = links.left[size_t(i)]; j != i; j = links.left[size_t(j)])
        links.uncover(links.col[size_t(j)]);
      chosen.pop_back();
    }
    links.uncover(best);
    return false;
  }
};

}  // namespace

CoverResult exact_cover(int ncols, const std::vector<std::vector<int>>& rows,
                        long node_budget) {
  Solver s(ncols, node_budget);
  for (int r = 0; r < int(rows.size()); ++r)
    s.links.add_row(r, rows[size_t(r)]);
  s.run();
  return s.out;
}

}  // namespace heptad::detail
