#include "catpack/hamiltonian.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "catpack/error.hpp"

namespace catpack {

namespace {

constexpr int kRestarts = 24;

class Rotation {
 public:
  Rotation(const Adjacency& f, std::vector<int> seq, const std::vector<std::vector<int>>& forced_adj)
      : f_(f), seq_(std::move(seq)), forced_adj_(forced_adj) {}

  bool run() {
    for (;;) {
      const int m = static_cast<int>(seq_.size());
      bool any_gap = false;
      bool fixed = false;
      for (int p = 0; p + 1 < m && !fixed; ++p) {
        if (edge(p)) continue;
        any_gap = true;
        fixed = fix(p);
      }
      if (!any_gap) return true;
      if (!fixed) return false;
    }
  }

  const std::vector<int>& sequence() const { return seq_; }

 private:
  bool adj(int x, int y) const { return f_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] != 0; }
  bool edge(int p) const { return adj(at(p), at(p + 1)); }
  int at(int p) const { return seq_[static_cast<std::size_t>(p)]; }
  bool is_forced(int x, int y) const {
    const auto& fa = forced_adj_[static_cast<std::size_t>(x)];
    return std::find(fa.begin(), fa.end(), y) != fa.end();
  }

  // Removes the gap after position p; prefers a partner pair that is itself a gap.
  bool fix(int p) {
    const int m = static_cast<int>(seq_.size());
    const int u1 = at(p);
    const int u2 = at(p + 1);
    int best = -1;
    for (int q = 0; q + 1 < m; ++q) {
      if (q == p) continue;
      const int w1 = at(q);
      const int w2 = at(q + 1);
      if (is_forced(w1, w2)) continue;
      const bool ok = q > p ? adj(u1, w1) && adj(u2, w2) : adj(w1, u1) && adj(w2, u2);
      if (!ok) continue;
      if (best < 0) best = q;
      if (!adj(w1, w2)) {
        best = q;
        break;
      }
    }
    if (best < 0) return false;
    if (best > p)
      std::reverse(seq_.begin() + p + 1, seq_.begin() + best + 1);
    else
      std::reverse(seq_.begin() + best + 1, seq_.begin() + p + 1);
    return true;
  }

  const Adjacency& f_;
  std::vector<int> seq_;
  const std::vector<std::vector<int>>& forced_adj_;
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_path_with_forced(const Adjacency& f, int a, int b,
                                                             const std::vector<std::pair<int, int>>& forced) {
  const int m = static_cast<int>(f.size());
  if (a < 0 || b < 0 || a >= m || b >= m) throw PreconditionError("hamiltonian path endpoints out of range");
  if (m == 1) return a == b ? std::optional<std::vector<int>>(std::vector<int>{a}) : std::nullopt;
  if (a == b) return std::nullopt;

  std::vector<std::vector<int>> forced_adj(static_cast<std::size_t>(m));
  std::vector<int> parent(static_cast<std::size_t>(m));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };
  for (const auto& [x, y] : forced) {
    if (x < 0 || y < 0 || x >= m || y >= m || x == y) throw PreconditionError("forced edge out of range");
    if (!f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) throw PreconditionError("forced edge is not in the graph");
    auto& fx = forced_adj[static_cast<std::size_t>(x)];
    if (std::find(fx.begin(), fx.end(), y) != fx.end()) continue;
    if (find(x) == find(y)) return std::nullopt;  // cycle
    parent[static_cast<std::size_t>(find(x))] = find(y);
    fx.push_back(y);
    forced_adj[static_cast<std::size_t>(y)].push_back(x);
  }
  for (const auto& fa : forced_adj)
    if (fa.size() > 2) return std::nullopt;
  if (forced_adj[static_cast<std::size_t>(a)].size() > 1 || forced_adj[static_cast<std::size_t>(b)].size() > 1) return std::nullopt;

  // Forced components as vertex runs, each walked from its lower end.
  std::vector<std::vector<int>> runs;
  std::vector<char> seen(static_cast<std::size_t>(m), 0);
  auto walk = [&](int start) {
    std::vector<int> run{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int prev = -1;
    int cur = start;
    for (;;) {
      int next = -1;
      for (int y : forced_adj[static_cast<std::size_t>(cur)])
        if (y != prev) next = y;
      if (next < 0) break;
      prev = cur;
      cur = next;
      run.push_back(cur);
      seen[static_cast<std::size_t>(cur)] = 1;
    }
    return run;
  };
  std::vector<int> head;
  std::vector<int> tail;
  head = walk(a);
  if (std::find(head.begin(), head.end(), b) != head.end()) {
    if (static_cast<int>(head.size()) != m || head.back() != b) return std::nullopt;
  } else {
    tail = walk(b);
    std::reverse(tail.begin(), tail.end());
  }
  for (int x = 0; x < m; ++x)
    if (!seen[static_cast<std::size_t>(x)] && forced_adj[static_cast<std::size_t>(x)].size() <= 1) runs.push_back(walk(x));
  for (int x = 0; x < m; ++x)
    if (!seen[static_cast<std::size_t>(x)]) return std::nullopt;  // leftover cycle

  std::mt19937_64 rng(0x5eed);
  for (int attempt = 0; attempt <= kRestarts; ++attempt) {
    if (attempt > 0) {
      std::shuffle(runs.begin(), runs.end(), rng);
      for (auto& r : runs)
        if (rng() & 1) std::reverse(r.begin(), r.end());
    }
    std::vector<int> seq = head;
    for (const auto& r : runs) seq.insert(seq.end(), r.begin(), r.end());
    seq.insert(seq.end(), tail.begin(), tail.end());
    Rotation rot(f, std::move(seq), forced_adj);
    if (rot.run()) return rot.sequence();
  }
  return std::nullopt;
}

}  // namespace catpack
