#include "catpack/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "catpack/error.hpp"

namespace catpack {

namespace {

class Backtracker {
 public:
  Backtracker(const DegreeMatrix& m, const SearchLimits& limits)
      : m_(m),
        n_(m.n()),
        k_(m.k()),
        limits_(limits),
        used_(static_cast<std::size_t>(n_ * n_), 0),
        free_deg_(static_cast<std::size_t>(n_), n_ - 1),
        deadline_(std::chrono::steady_clock::now() + limits.time_budget) {}

  // True when a realization was found; aborted() tells a budget stop apart.
  bool run() { return color(0); }
  bool aborted() const { return aborted_; }
  std::uint64_t nodes() const { return nodes_; }

  ColoredGraph graph() const {
    ColoredGraph g(n_);
    for (const auto& e : edges_) g.add_edge(e.u, e.v, e.color);
    return g;
  }

 private:
  bool tick() {
    ++nodes_;
    if (nodes_ > limits_.max_nodes) aborted_ = true;
    if ((nodes_ & 0xfff) == 0 && std::chrono::steady_clock::now() > deadline_) aborted_ = true;
    return !aborted_;
  }

  bool is_free(Vertex x, Vertex y) const { return !used_[static_cast<std::size_t>(x * n_ + y)]; }

  void push(Vertex x, Vertex y, Color c) {
    used_[static_cast<std::size_t>(x * n_ + y)] = used_[static_cast<std::size_t>(y * n_ + x)] = 1;
    --free_deg_[static_cast<std::size_t>(x)];
    --free_deg_[static_cast<std::size_t>(y)];
    edges_.push_back({std::min(x, y), std::max(x, y), c});
  }

  void pop() {
    const auto e = edges_.back();
    edges_.pop_back();
    used_[static_cast<std::size_t>(e.u * n_ + e.v)] = used_[static_cast<std::size_t>(e.v * n_ + e.u)] = 0;
    ++free_deg_[static_cast<std::size_t>(e.u)];
    ++free_deg_[static_cast<std::size_t>(e.v)];
  }

  // Each vertex must still have room for the degrees of the colors to come.
  bool capacity_ok(int row) const {
    for (Vertex x = 0; x < n_; ++x) {
      int need = 0;
      for (int r = row; r < k_; ++r) need += m_(r, x);
      if (need > free_deg_[static_cast<std::size_t>(x)]) return false;
    }
    return true;
  }

  bool color(int row) {
    if (row == k_) return true;
    if (!tick() || !capacity_ok(row)) return false;
    std::vector<Vertex> backbone;
    std::vector<Vertex> leaves;
    for (Vertex x = 0; x < n_; ++x) (m_(row, x) >= 2 ? backbone : leaves).push_back(x);
    const Color c = row + 1;

    if (backbone.empty()) {
      if (n_ != 2 || !is_free(0, 1)) return false;
      push(0, 1, c);
      if (color(row + 1)) return true;
      pop();
      return false;
    }
    if (backbone.size() == 1) {
      const Vertex center = backbone[0];
      std::size_t added = 0;
      bool ok = true;
      for (Vertex l : leaves) {
        if (!is_free(center, l)) {
          ok = false;
          break;
        }
        push(center, l, c);
        ++added;
      }
      if (ok && color(row + 1)) return true;
      for (; added > 0; --added) pop();
      return false;
    }

    std::vector<Vertex> order;
    std::vector<char> in_order(static_cast<std::size_t>(n_), 0);
    for (Vertex s : backbone) {
      order.push_back(s);
      in_order[static_cast<std::size_t>(s)] = 1;
      if (extend_backbone(row, backbone, leaves, order, in_order)) return true;
      in_order[static_cast<std::size_t>(s)] = 0;
      order.pop_back();
      if (aborted_) return false;
    }
    return false;
  }

  bool extend_backbone(int row, const std::vector<Vertex>& backbone, const std::vector<Vertex>& leaves,
                       std::vector<Vertex>& order, std::vector<char>& in_order) {
    if (!tick()) return false;
    const Color c = row + 1;
    if (order.size() == backbone.size()) {
      if (limits_.symmetry && order.front() > order.back()) return false;
      std::vector<int> cap(static_cast<std::size_t>(n_), 0);
      for (std::size_t t = 0; t < order.size(); ++t) {
        const bool end = t == 0 || t + 1 == order.size();
        cap[static_cast<std::size_t>(order[t])] = m_(row, order[t]) - (end ? 1 : 2);
      }
      return place_leaves(row, leaves, 0, cap);
    }
    const Vertex last = order.back();
    for (Vertex y : backbone) {
      if (in_order[static_cast<std::size_t>(y)] || !is_free(last, y)) continue;
      push(last, y, c);
      order.push_back(y);
      in_order[static_cast<std::size_t>(y)] = 1;
      if (extend_backbone(row, backbone, leaves, order, in_order)) return true;
      in_order[static_cast<std::size_t>(y)] = 0;
      order.pop_back();
      pop();
      if (aborted_) return false;
    }
    return false;
  }

  bool place_leaves(int row, const std::vector<Vertex>& leaves, std::size_t at, std::vector<int>& cap) {
    if (!tick()) return false;
    if (at == leaves.size()) return color(row + 1);
    const Vertex l = leaves[at];
    for (Vertex b = 0; b < n_; ++b) {
      if (cap[static_cast<std::size_t>(b)] <= 0 || !is_free(l, b)) continue;
      --cap[static_cast<std::size_t>(b)];
      push(l, b, row + 1);
      if (place_leaves(row, leaves, at + 1, cap)) return true;
      pop();
      ++cap[static_cast<std::size_t>(b)];
      if (aborted_) return false;
    }
    return false;
  }

  const DegreeMatrix& m_;
  const int n_;
  const int k_;
  const SearchLimits limits_;
  std::vector<char> used_;
  std::vector<int> free_deg_;
  std::vector<ColoredEdge> edges_;
  std::chrono::steady_clock::time_point deadline_;
  std::uint64_t nodes_ = 0;
  bool aborted_ = false;
};

}  // namespace

RealizationOutcome exhaustive_realize(const DegreeMatrix& m, const SearchLimits& limits) {
  for (int r = 0; r < m.k(); ++r)
    if (!m.is_tree_row(r)) return NotExists{"tree rows", "row " + std::to_string(r + 1) + " is not a tree degree sequence"};
  Backtracker bt(m, limits);
  if (bt.run()) {
    ConstructionTrace trace;
    trace.base = "oracle";
    trace.notes.push_back("nodes: " + std::to_string(bt.nodes()));
    return make_exists(bt.graph(), m, std::move(trace));
  }
  if (bt.aborted()) return Unknown{"search budget exhausted after " + std::to_string(bt.nodes()) + " nodes"};
  return NotExists{"exhaustive", "no caterpillar realization exists"};
}

namespace {

class Enumerator {
 public:
  Enumerator(int k, int n, bool no_common_leaves)
      : k_(k), n_(n), ncl_(no_common_leaves), remaining_(static_cast<std::size_t>(k), 2 * n - 2) {}

  std::vector<DegreeMatrix> run() {
    columns_.clear();
    place(n_);
    return {found_.begin(), found_.end()};
  }

 private:
  // Remaining row sums must be reachable with `left` more columns.
  bool feasible(int left) const {
    int forced_ones = 0;
    for (int r = 0; r < k_; ++r) {
      const int rem = remaining_[static_cast<std::size_t>(r)];
      if (rem < left || rem > left * (n_ - 1)) return false;
      forced_ones += std::max(0, 2 * left - rem);
    }
    return !ncl_ || forced_ones <= left;
  }

  void place(int left) {
    if (left == 0) {
      DegreeMatrix m(k_, n_);
      for (int c = 0; c < n_; ++c)
        for (int r = 0; r < k_; ++r) m(r, c) = columns_[static_cast<std::size_t>(c)][static_cast<std::size_t>(r)];
      found_.insert(canonical_form(m).matrix);
      return;
    }
    std::vector<int> col(static_cast<std::size_t>(k_), 0);
    // Copied: columns_ reallocates underneath the recursion.
    const std::vector<int> prev = columns_.empty() ? std::vector<int>{} : columns_.back();
    choose_entry(left, 0, col, prev.empty() ? nullptr : &prev, true);
  }

  // Fills col[r..] so the column stays <= the previous one lexicographically.
  void choose_entry(int left, int r, std::vector<int>& col, const std::vector<int>* prev, bool tight) {
    if (r == k_) {
      if (ncl_ && std::count(col.begin(), col.end(), 1) > 1) return;
      for (int t = 0; t < k_; ++t) remaining_[static_cast<std::size_t>(t)] -= col[static_cast<std::size_t>(t)];
      if (feasible(left - 1)) {
        columns_.push_back(col);
        place(left - 1);
        columns_.pop_back();
      }
      for (int t = 0; t < k_; ++t) remaining_[static_cast<std::size_t>(t)] += col[static_cast<std::size_t>(t)];
      return;
    }
    const int rem = remaining_[static_cast<std::size_t>(r)];
    int hi = std::min(n_ - 1, rem - (left - 1));
    if (tight && prev) hi = std::min(hi, (*prev)[static_cast<std::size_t>(r)]);
    for (int v = hi; v >= 1; --v) {
      col[static_cast<std::size_t>(r)] = v;
      const bool still_tight = tight && prev && v == (*prev)[static_cast<std::size_t>(r)];
      choose_entry(left, r + 1, col, prev, still_tight);
    }
  }

  const int k_;
  const int n_;
  const bool ncl_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> columns_;
  std::set<DegreeMatrix> found_;
};

}  // namespace

std::vector<DegreeMatrix> enumerate_matrices(int k, int n, bool require_no_common_leaves) {
  if (k < 1 || n < 2) throw PreconditionError("enumerate_matrices: needs k >= 1 and n >= 2");
  if (k * n > kEnumerationBudget)
    throw BudgetExceeded("enumerate_matrices: k * n = " + std::to_string(k * n) + " exceeds " + std::to_string(kEnumerationBudget));
  return Enumerator(k, n, require_no_common_leaves).run();
}

DegreeMatrix random_matrix(int k, int n, std::uint64_t seed, bool allow_common_leaves) {
  RandomMatrixOptions opt;
  opt.allow_common_leaves = allow_common_leaves;
  return random_matrix(k, n, seed, opt);
}

DegreeMatrix random_matrix(int k, int n, std::uint64_t seed, const RandomMatrixOptions& opt) {
  if (k < 1 || n < 2) throw PreconditionError("random_matrix: needs k >= 1 and n >= 2");
  const bool hub = opt.hub >= 0;
  if (hub && (opt.hub >= n || opt.allow_common_leaves)) throw PreconditionError("random_matrix: bad hub column");
  const int slots = n - (hub ? 1 : 0);  // columns that may hold leaves
  if (!opt.allow_common_leaves && slots < 2 * k) throw PreconditionError("random_matrix: needs n >= 2k without common leaves");
  if (hub && n < 3) throw PreconditionError("random_matrix: hub needs n >= 3");

  std::mt19937_64 rng(seed);
  auto uniform = [&rng](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  const int max_leaves = n == 2 ? 2 : n - 1;

  std::vector<int> leaves(static_cast<std::size_t>(k), 2);
  if (opt.allow_common_leaves) {
    for (int& l : leaves) l = uniform(2, max_leaves);
  } else {
    const int room = std::min(slots - 2 * k, k * (max_leaves - 2));
    int extra = hub ? room : uniform(0, room);
    while (extra > 0) {
      const int r = uniform(0, k - 1);
      if (leaves[static_cast<std::size_t>(r)] < max_leaves) {
        ++leaves[static_cast<std::size_t>(r)];
        --extra;
      }
    }
  }

  DegreeMatrix m(k, n);
  std::vector<int> cols;
  for (int j = 0; j < n; ++j)
    if (j != opt.hub) cols.push_back(j);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::size_t next = 0;
  for (int r = 0; r < k; ++r) {
    for (int j = 0; j < n; ++j) m(r, j) = 2;
    std::vector<int> mine;
    if (opt.allow_common_leaves) {
      std::vector<int> all(static_cast<std::size_t>(n));
      std::iota(all.begin(), all.end(), 0);
      std::shuffle(all.begin(), all.end(), rng);
      mine.assign(all.begin(), all.begin() + leaves[static_cast<std::size_t>(r)]);
    } else {
      mine.assign(cols.begin() + static_cast<std::ptrdiff_t>(next),
                  cols.begin() + static_cast<std::ptrdiff_t>(next) + leaves[static_cast<std::size_t>(r)]);
      next += static_cast<std::size_t>(leaves[static_cast<std::size_t>(r)]);
    }
    for (int j : mine) m(r, j) = 1;
    std::vector<int> inner;
    for (int j = 0; j < n; ++j)
      if (m(r, j) != 1) inner.push_back(j);
    std::bernoulli_distribution to_hub(hub ? opt.hub_weight : 0.0);
    for (int s = 0; s < leaves[static_cast<std::size_t>(r)] - 2; ++s) {
      const int j = hub && to_hub(rng) ? opt.hub : inner[static_cast<std::size_t>(uniform(0, static_cast<int>(inner.size()) - 1))];
      ++m(r, j);
    }
  }
  return m;
}

}  // namespace catpack
