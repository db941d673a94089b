#include "catpack/two_trees.hpp"

#include <algorithm>
#include <numeric>
#include <random>

#include "catpack/engine.hpp"
#include "catpack/error.hpp"
#include "catpack/hamiltonian.hpp"
#include "catpack/walecki.hpp"

namespace catpack {

std::string TwoTreeConditions::witness() const {
  if (!cond1) return "condition 1: a row is not a tree degree sequence";
  if (!cond2) {
    if (!column_sum_report.parity_ok) return "condition 2: column sums have odd total";
    return "condition 2: column sums are not graphical (s=" + std::to_string(column_sum_report.first_violation_s.value_or(0)) +
           ": " + std::to_string(column_sum_report.lhs) + " > " + std::to_string(column_sum_report.rhs) + ")";
  }
  if (!cond3)
    return "condition 3: d_max=" + std::to_string(d_max) + " > |S|+4=" + std::to_string(static_cast<int>(S.size()) + 4);
  return {};
}

TwoTreeConditions check_two_tree_conditions(const DegreeMatrix& m) {
  if (m.k() != 2) throw PreconditionError("check_two_tree_conditions: needs exactly two rows");
  TwoTreeConditions c;
  c.cond1 = m.is_tree_row(0) && m.is_tree_row(1);
  const auto sums = column_sums(m);
  c.column_sum_report = erdos_gallai(sums);
  c.cond2 = c.column_sum_report.graphical;
  for (int j = 0; j < m.n(); ++j) {
    c.d_max = std::max(c.d_max, sums[static_cast<std::size_t>(j)]);
    if (std::min(m(0, j), m(1, j)) == 1) c.S.push_back(j);
  }
  c.cond3 = c.d_max <= static_cast<int>(c.S.size()) + 4;
  return c;
}

namespace {

using VertexPair = std::pair<Vertex, Vertex>;

struct Leg {
  Vertex v;       // new vertex
  Vertex target;  // existing vertex
  Color color;
};

bool pair_free(const ColoredGraph& g, Vertex x, Vertex y) { return x != y && !g.has_edge(x, y); }

// Moves leaf x of color c next to backbone end e by trading places with a
// leaf z of e outside `keep`.
bool move_leaf_to_end(ColoredGraph& g, Color c, Vertex x, Vertex e, const std::vector<Vertex>& keep) {
  const auto xn = g.neighbors(x, c);
  if (xn.size() != 1) return false;
  const Vertex y = xn.front();
  if (y == e) return true;
  for (Vertex z : g.neighbors(e, c)) {
    if (g.degree(z, c) != 1 || std::find(keep.begin(), keep.end(), z) != keep.end()) continue;
    if (!pair_free(g, x, e) || !pair_free(g, z, y)) continue;
    g.remove_edge(x, y);
    g.remove_edge(z, e);
    g.add_edge(x, e, c);
    g.add_edge(z, y, c);
    return true;
  }
  return false;
}

// Makes every leaf target of color c hang off a distinct backbone end.
bool position_leaf_targets(ColoredGraph& g, Color c, const std::vector<Vertex>& leaf_targets) {
  if (leaf_targets.empty()) return true;
  const CaterpillarView view = caterpillar_view(g, c);
  if (view.backbone.size() <= 1) return leaf_targets.size() <= 2;
  if (leaf_targets.size() > 2) return false;
  const Vertex ends[2] = {view.backbone.front(), view.backbone.back()};
  for (int flip = 0; flip < 2; ++flip) {
    ColoredGraph trial = g;
    bool ok = true;
    for (std::size_t t = 0; t < leaf_targets.size() && ok; ++t)
      ok = move_leaf_to_end(trial, c, leaf_targets[t], ends[(t + static_cast<std::size_t>(flip)) % 2], leaf_targets);
    if (ok) {
      g = std::move(trial);
      return true;
    }
  }
  return false;
}

// Adds the legs of the new vertices after moving leaf targets to backbone ends.
bool attach_legs(ColoredGraph& g, const std::vector<Leg>& legs) {
  for (Color c = 1; c <= 2; ++c) {
    std::vector<Vertex> leaf_targets;
    for (const Leg& l : legs)
      if (l.color == c && g.degree(l.target, c) == 1 &&
          std::find(leaf_targets.begin(), leaf_targets.end(), l.target) == leaf_targets.end())
        leaf_targets.push_back(l.target);
    if (!position_leaf_targets(g, c, leaf_targets)) return false;
  }
  for (const Leg& l : legs) {
    if (!pair_free(g, l.v, l.target)) return false;
    g.add_edge(l.v, l.target, l.color);
  }
  return true;
}

// Copies a realization on the kept columns into a graph on all n vertices.
ColoredGraph lift(const ColoredGraph& reduced, int n, const std::vector<int>& removed) {
  std::vector<Vertex> kept;
  for (Vertex x = 0; x < n; ++x)
    if (std::find(removed.begin(), removed.end(), x) == removed.end()) kept.push_back(x);
  ColoredGraph g(n);
  for (const auto& e : reduced.edges())
    g.add_edge(kept[static_cast<std::size_t>(e.u)], kept[static_cast<std::size_t>(e.v)], e.color);
  return g;
}

DegreeMatrix remove_columns(const DegreeMatrix& m, std::vector<int> cols) {
  std::sort(cols.rbegin(), cols.rend());
  DegreeMatrix out = m;
  for (int c : cols) out = out.without_column(c);
  return out;
}

// Columns by decreasing sum, ties by (row a entry, row b entry) decreasing.
std::vector<int> sorted_columns(const DegreeMatrix& m, int ra, int rb) {
  std::vector<int> order(static_cast<std::size_t>(m.n()));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const int sx = m(ra, x) + m(rb, x);
    const int sy = m(ra, y) + m(rb, y);
    if (sx != sy) return sx > sy;
    if (m(ra, x) != m(ra, y)) return m(ra, x) > m(ra, y);
    return m(rb, x) > m(rb, y);
  });
  return order;
}

int first_double_leaf(const DegreeMatrix& m) {
  for (int j = 0; j < m.n(); ++j)
    if (m(0, j) == 1 && m(1, j) == 1) return j;
  return -1;
}

// The five one-path matrices on at most six vertices; row 0 is the non-path
// row, and the reduction lowers entry (0, 0) and entry (1, 1).
const std::vector<DegreeMatrix>& one_path_table() {
  static const std::vector<DegreeMatrix> table = {
      DegreeMatrix({{3, 2, 1, 1, 1}, {1, 2, 2, 2, 1}}),
      DegreeMatrix({{3, 2, 2, 1, 1, 1}, {1, 2, 2, 2, 2, 1}}),
      DegreeMatrix({{3, 2, 2, 1, 1, 1}, {2, 2, 1, 2, 2, 1}}),
      DegreeMatrix({{3, 2, 2, 1, 1, 1}, {2, 2, 2, 2, 1, 1}}),
      DegreeMatrix({{4, 2, 1, 1, 1, 1}, {1, 2, 2, 2, 2, 1}}),
  };
  return table;
}

// Column map sending table column c to a column of m with the same entries.
std::optional<std::vector<int>> match_columns(const DegreeMatrix& m, int ra, int rb, const DegreeMatrix& t) {
  if (t.n() != m.n()) return std::nullopt;
  std::vector<int> map;
  std::vector<char> used(static_cast<std::size_t>(m.n()), 0);
  for (int c = 0; c < t.n(); ++c) {
    int hit = -1;
    for (int j = 0; j < m.n() && hit < 0; ++j)
      if (!used[static_cast<std::size_t>(j)] && m(ra, j) == t(0, c) && m(rb, j) == t(1, c)) hit = j;
    if (hit < 0) return std::nullopt;
    used[static_cast<std::size_t>(hit)] = 1;
    map.push_back(hit);
  }
  return map;
}

ColoredGraph realize_valid(const DegreeMatrix& m);

// One vertex removed, two entries lowered, then a two-legged vertex re-added.
ColoredGraph single_step(const DegreeMatrix& m, int removed, int r1, int j1, int r2, int j2) {
  DegreeMatrix d = m;
  --d(r1, j1);
  --d(r2, j2);
  d = d.without_column(removed);
  ColoredGraph g = lift(realize_valid(d), m.n(), {removed});
  if (!attach_legs(g, {{removed, j1, r1 + 1}, {removed, j2, r2 + 1}}))
    throw LemmaViolation("two-row extension could not place the new vertex");
  return g;
}

ColoredGraph distinct_heavy_case(const DegreeMatrix& m) {
  int ra = 0;
  int rb = 1;
  auto order = sorted_columns(m, ra, rb);
  if (m(ra, order[0]) <= 2) {
    std::swap(ra, rb);
    order = sorted_columns(m, ra, rb);
  }
  if (m(ra, order[0]) <= 2) throw LemmaViolation("no heavy entry in the largest column");
  const int o0 = order[0];
  const int o1 = order[1];
  int j1 = -1;
  int j2 = -1;
  if (m(ra, o0) > 2 && m(rb, o1) > 2) {
    j1 = o0;
    j2 = o1;
  } else if (m(ra, o1) > 2 && m(rb, o0) > 2) {
    j1 = o1;
    j2 = o0;
  } else {
    j1 = o0;
    for (std::size_t t = 1; t < order.size() && j2 < 0; ++t)
      if (m(rb, order[t]) > 2) j2 = order[t];
    if (j2 < 0) {
      // Row b only exceeds 2 at the first column; move j1 instead.
      j2 = o0;
      j1 = -1;
      for (std::size_t t = 1; t < order.size() && j1 < 0; ++t)
        if (m(ra, order[t]) > 2) j1 = order[t];
    }
  }
  if (j1 < 0 || j2 < 0 || j1 == j2) throw LemmaViolation("no distinct heavy pair");
  return single_step(m, first_double_leaf(m), ra, j1, rb, j2);
}

ColoredGraph one_path_case(const DegreeMatrix& m) {
  const int rb = m.is_path_row(1) ? 1 : 0;  // the path row
  const int ra = 1 - rb;
  const int removed = first_double_leaf(m);
  if (m.n() <= 6) {
    for (const auto& t : one_path_table()) {
      if (auto map = match_columns(m, ra, rb, t)) {
        const auto& mp = *map;
        // The removed column must be a sum-2 column other than the two lowered ones.
        int rem = -1;
        for (int c = 0; c < t.n() && rem < 0; ++c)
          if (c > 1 && t(0, c) == 1 && t(1, c) == 1) rem = mp[static_cast<std::size_t>(c)];
        return single_step(m, rem < 0 ? removed : rem, ra, mp[0], rb, mp[1]);
      }
    }
  }
  const auto order = sorted_columns(m, ra, rb);
  const int o0 = order[0];
  const int o1 = order[1];
  if (m(rb, o1) == 1) return single_step(m, removed, rb, o0, ra, o1);
  return single_step(m, removed, ra, o0, rb, o1);
}

// Candidate realizations of a residual matrix without common leaves.
std::vector<ColoredGraph> residual_realizations(const DegreeMatrix& d) {
  std::vector<ColoredGraph> out;
  auto take = [&](const RealizationOutcome& o) { out.push_back(std::get<Exists>(o).graph); };
  take(realize_k_le_4(d));

  const DegreeMatrix swapped = d.swapped_rows(0, 1);
  ColoredGraph back(d.n());
  for (const auto& e : std::get<Exists>(realize_k_le_4(swapped)).graph.edges()) back.add_edge(e.u, e.v, 3 - e.color);
  out.push_back(std::move(back));

  std::vector<int> rows{0, 1};
  std::vector<int> rev(static_cast<std::size_t>(d.n()));
  std::iota(rev.rbegin(), rev.rend(), 0);
  const DegreeMatrix reversed = d.permuted(rows, rev);
  ColoredGraph unrev(d.n());
  for (const auto& e : std::get<Exists>(realize_k_le_4(reversed)).graph.edges())
    unrev.add_edge(rev[static_cast<std::size_t>(e.u)], rev[static_cast<std::size_t>(e.v)], e.color);
  out.push_back(std::move(unrev));
  return out;
}

// Exactly one column exceeds 2 in both rows. All double-leaf columns go at
// once; the lowered entries follow one of four patterns by their count t.
ColoredGraph single_heavy_case(const DegreeMatrix& m) {
  int hub = -1;
  for (int j = 0; j < m.n(); ++j)
    if (m(0, j) > 2 && m(1, j) > 2) hub = j;
  std::vector<int> doubles;
  std::vector<int> fours;
  for (int j = 0; j < m.n(); ++j) {
    if (m(0, j) == 1 && m(1, j) == 1) doubles.push_back(j);
    if (m(0, j) == 2 && m(1, j) == 2) fours.push_back(j);
  }
  const int t = static_cast<int>(doubles.size());
  if (hub < 0 || t < 1 || t > 4 || static_cast<int>(fours.size()) < t)
    throw LemmaViolation("single heavy column outside the four patterns");

  const int R = m(1, hub) > m(0, hub) ? 1 : 0;  // row lowered twice when t = 3
  const int Q = 1 - R;
  const Color cR = R + 1;
  const Color cQ = Q + 1;

  for (int variant = 0; variant < 2; ++variant) {
    std::vector<int> pick = fours;
    if (variant == 1) std::reverse(pick.begin(), pick.end());
    DegreeMatrix d = m;
    std::vector<Leg> legs;
    const auto& v = doubles;
    const int a = pick[0];
    switch (t) {
      case 1:
        --d(R, hub), --d(Q, a);
        legs = {{v[0], hub, cR}, {v[0], a, cQ}};
        break;
      case 2: {
        const int b = pick[1];
        --d(R, hub), --d(Q, hub), --d(Q, a), --d(R, b);
        legs = {{v[0], hub, cR}, {v[0], a, cQ}, {v[1], b, cR}, {v[1], hub, cQ}};
        break;
      }
      case 3: {
        const int b = pick[1];
        const int c = pick[2];
        d(R, hub) -= 2, --d(Q, hub), --d(Q, a), --d(Q, b), --d(R, c);
        legs = {{v[0], hub, cR}, {v[0], a, cQ}, {v[1], hub, cR}, {v[1], b, cQ}, {v[2], c, cR}, {v[2], hub, cQ}};
        break;
      }
      default: {
        const int b = pick[1];
        const int c = pick[2];
        const int e = pick[3];
        d(R, hub) -= 2, d(Q, hub) -= 2, --d(Q, a), --d(Q, b), --d(R, c), --d(R, e);
        legs = {{v[0], hub, cR}, {v[0], a, cQ}, {v[1], hub, cR}, {v[1], b, cQ},
                {v[2], c, cR},   {v[2], hub, cQ}, {v[3], e, cR}, {v[3], hub, cQ}};
        break;
      }
    }
    const DegreeMatrix residual = remove_columns(d, doubles);
    if (!residual.is_tree_matrix() || residual.has_common_leaves())
      throw LemmaViolation("single heavy residual is not a tree matrix without common leaves");
    for (const auto& base : residual_realizations(residual)) {
      ColoredGraph g = lift(base, m.n(), doubles);
      if (attach_legs(g, legs) && verify_realization(g, m)) return g;
    }
  }
  throw LemmaViolation("single heavy case could not attach the removed vertices");
}

ColoredGraph realize_valid(const DegreeMatrix& m) {
  const auto cond = check_two_tree_conditions(m);
  if (!cond.all()) throw LemmaViolation("reduced two-row matrix breaks " + cond.witness());
  if (!m.has_common_leaves()) return std::get<Exists>(realize_k_le_4(m)).graph;

  std::vector<int> heavy0;
  std::vector<int> heavy1;
  for (int j = 0; j < m.n(); ++j) {
    if (m(0, j) > 2) heavy0.push_back(j);
    if (m(1, j) > 2) heavy1.push_back(j);
  }
  const bool distinct_pair = !heavy0.empty() && !heavy1.empty() &&
                             !(heavy0.size() == 1 && heavy1.size() == 1 && heavy0[0] == heavy1[0]);
  ColoredGraph g;
  if (distinct_pair) {
    g = distinct_heavy_case(m);
  } else if (m.is_path_row(0) && m.is_path_row(1)) {
    auto ends = [&](int r) {
      VertexPair p{-1, -1};
      for (int j = 0; j < m.n(); ++j)
        if (m(r, j) == 1) (p.first < 0 ? p.first : p.second) = j;
      return p;
    };
    auto paths = two_hamiltonian_paths(m.n(), ends(0), ends(1));
    if (!paths) throw LemmaViolation("two Hamiltonian paths not found for a valid path matrix");
    g = std::move(*paths);
  } else if (m.is_path_row(0) || m.is_path_row(1)) {
    g = one_path_case(m);
  } else {
    g = single_heavy_case(m);
  }
  const auto check = verify_realization(g, m);
  if (!check) throw LemmaViolation("two-row construction produced an invalid realization: " + check.violation);
  return g;
}

bool hamiltonian_dfs(const Adjacency& f, std::vector<int>& path, std::vector<char>& used, int target, int n) {
  const int cur = path.back();
  if (static_cast<int>(path.size()) == n) return cur == target;
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)] || !f[static_cast<std::size_t>(cur)][static_cast<std::size_t>(y)]) continue;
    if (y == target && static_cast<int>(path.size()) + 1 < n) continue;
    used[static_cast<std::size_t>(y)] = 1;
    path.push_back(y);
    if (hamiltonian_dfs(f, path, used, target, n)) return true;
    path.pop_back();
    used[static_cast<std::size_t>(y)] = 0;
  }
  return false;
}

ColoredGraph from_paths(int n, const std::vector<int>& p1, const std::vector<int>& p2) {
  ColoredGraph g(n);
  for (std::size_t t = 0; t + 1 < p1.size(); ++t) g.add_edge(p1[t], p1[t + 1], 1);
  for (std::size_t t = 0; t + 1 < p2.size(); ++t) g.add_edge(p2[t], p2[t + 1], 2);
  return g;
}

Adjacency complement_of_path(int n, const std::vector<int>& p) {
  Adjacency f(static_cast<std::size_t>(n), std::vector<char>(static_cast<std::size_t>(n), 1));
  for (int x = 0; x < n; ++x) f[static_cast<std::size_t>(x)][static_cast<std::size_t>(x)] = 0;
  for (std::size_t t = 0; t + 1 < p.size(); ++t) {
    f[static_cast<std::size_t>(p[t])][static_cast<std::size_t>(p[t + 1])] = 0;
    f[static_cast<std::size_t>(p[t + 1])][static_cast<std::size_t>(p[t])] = 0;
  }
  return f;
}

// Every Hamiltonian a-b path in K_n, each tried against the complement.
bool exhaustive_pair(int n, VertexPair first, VertexPair second, std::vector<int>& p1, std::vector<char>& used,
                     std::vector<int>& p2_out) {
  if (static_cast<int>(p1.size()) == n) {
    if (p1.back() != first.second) return false;
    const Adjacency f = complement_of_path(n, p1);
    std::vector<int> p2{second.first};
    std::vector<char> used2(static_cast<std::size_t>(n), 0);
    used2[static_cast<std::size_t>(second.first)] = 1;
    if (!hamiltonian_dfs(f, p2, used2, second.second, n)) return false;
    p2_out = std::move(p2);
    return true;
  }
  for (int y = 0; y < n; ++y) {
    if (used[static_cast<std::size_t>(y)]) continue;
    if (y == first.second && static_cast<int>(p1.size()) + 1 < n) continue;
    used[static_cast<std::size_t>(y)] = 1;
    p1.push_back(y);
    if (exhaustive_pair(n, first, second, p1, used, p2_out)) return true;
    p1.pop_back();
    used[static_cast<std::size_t>(y)] = 0;
  }
  return false;
}

}  // namespace

std::optional<ColoredGraph> two_hamiltonian_paths(int n, VertexPair first, VertexPair second) {
  auto bad = [n](VertexPair p) { return p.first < 0 || p.second < 0 || p.first >= n || p.second >= n || p.first == p.second; };
  if (n < 2 || bad(first) || bad(second)) throw PreconditionError("two_hamiltonian_paths: bad endpoints");
  if (n == 2) return std::nullopt;

  const bool disjoint = first.first != second.first && first.first != second.second && first.second != second.first &&
                        first.second != second.second;
  if (disjoint) {
    DegreeMatrix m(2, n);
    for (int j = 0; j < n; ++j) m(0, j) = m(1, j) = 2;
    m(0, first.first) = m(0, first.second) = 1;
    m(1, second.first) = m(1, second.second) = 1;
    return walecki_pack(m);
  }

  std::vector<int> middle;
  for (int x = 0; x < n; ++x)
    if (x != first.first && x != first.second) middle.push_back(x);
  std::mt19937_64 rng(static_cast<std::uint64_t>(n) * 7919u);
  for (int attempt = 0; attempt < 32; ++attempt) {
    if (attempt > 0) std::shuffle(middle.begin(), middle.end(), rng);
    std::vector<int> p1{first.first};
    p1.insert(p1.end(), middle.begin(), middle.end());
    p1.push_back(first.second);
    const Adjacency f = complement_of_path(n, p1);
    if (auto p2 = hamiltonian_path_with_forced(f, second.first, second.second, {})) return from_paths(n, p1, *p2);
  }
  if (n > 12) return std::nullopt;

  std::vector<int> p1{first.first};
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  used[static_cast<std::size_t>(first.first)] = 1;
  std::vector<int> p2;
  if (exhaustive_pair(n, first, second, p1, used, p2)) return from_paths(n, p1, p2);
  return std::nullopt;
}

RealizationOutcome realize_two(const DegreeMatrix& m) {
  const auto cond = check_two_tree_conditions(m);
  if (!cond.all()) {
    const std::string w = cond.witness();
    return NotExists{w.substr(0, w.find(':')), w};
  }
  ConstructionTrace trace;
  trace.base = "two-row";
  return make_exists(realize_valid(m), m, std::move(trace));
}

}  // namespace catpack
