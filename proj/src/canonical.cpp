#include <algorithm>
#include <numeric>

#include "catpack/model.hpp"

namespace catpack {

namespace {

// A partial row ordering together with the column order that sorts the
// chosen rows lexicographically. Columns tied on every chosen row stay in
// index order, so `groups` marks where the tie classes start.
struct Branch {
  std::vector<int> rows;
  std::vector<int> cols;
  std::vector<int> group_start;  // 1 where cols[t] opens a new tie class
};

Branch extend(const DegreeMatrix& m, const Branch& b, int row) {
  Branch out;
  out.rows = b.rows;
  out.rows.push_back(row);
  out.cols.reserve(b.cols.size());
  out.group_start.reserve(b.cols.size());
  const std::size_t n = b.cols.size();
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && !b.group_start[hi]) ++hi;
    std::vector<int> block(b.cols.begin() + static_cast<std::ptrdiff_t>(lo),
                           b.cols.begin() + static_cast<std::ptrdiff_t>(hi));
    std::stable_sort(block.begin(), block.end(), [&](int x, int y) { return m(row, x) < m(row, y); });
    for (std::size_t t = 0; t < block.size(); ++t) {
      out.cols.push_back(block[t]);
      out.group_start.push_back(t == 0 || m(row, block[t]) != m(row, block[t - 1]) ? 1 : 0);
    }
    lo = hi;
  }
  return out;
}

std::vector<int> last_row(const DegreeMatrix& m, const Branch& b) {
  std::vector<int> out;
  out.reserve(b.cols.size());
  for (int c : b.cols) out.push_back(m(b.rows.back(), c));
  return out;
}

}  // namespace

// For a fixed row order the least column arrangement sorts columns as
// tuples, so the search only branches over row orders. At each depth every
// surviving branch is extended by every unused row; only extensions whose
// new row is lexicographically least survive. Identical rows are tried once.
CanonicalForm canonical_form(const DegreeMatrix& m) {
  const int k = m.k();
  const int n = m.n();
  Branch root;
  root.cols.resize(static_cast<std::size_t>(n));
  std::iota(root.cols.begin(), root.cols.end(), 0);
  root.group_start.assign(static_cast<std::size_t>(n), 0);
  if (n > 0) root.group_start[0] = 1;

  std::vector<Branch> frontier{root};
  for (int depth = 0; depth < k; ++depth) {
    std::vector<Branch> next;
    std::vector<int> best;
    for (const Branch& b : frontier) {
      std::vector<std::vector<int>> tried;
      for (int r = 0; r < k; ++r) {
        if (std::find(b.rows.begin(), b.rows.end(), r) != b.rows.end()) continue;
        auto content = m.row(r);
        if (std::find(tried.begin(), tried.end(), content) != tried.end()) continue;
        tried.push_back(std::move(content));
        Branch e = extend(m, b, r);
        auto row = last_row(m, e);
        if (next.empty() || row < best) {
          best = std::move(row);
          next.clear();
          next.push_back(std::move(e));
        } else if (row == best) {
          next.push_back(std::move(e));
        }
      }
    }
    frontier = std::move(next);
  }

  CanonicalForm out;
  const Branch& pick = frontier.front();
  out.row_order = pick.rows;
  out.col_order = pick.cols;
  out.matrix = m.permuted(out.row_order, out.col_order);
  return out;
}

}  // namespace catpack
