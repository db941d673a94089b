#include "catpack/large_n.hpp"

#include <algorithm>
#include <numeric>

#include "catpack/engine.hpp"
#include "catpack/error.hpp"
#include "catpack/rainbow.hpp"
#include "catpack/walecki.hpp"

namespace catpack {

HeavyVertexCensus heavy_vertex_census(const DegreeMatrix& m) {
  HeavyVertexCensus c;
  const int n = m.n();
  const int k = m.k();
  int best = -1;
  for (int j = 0; j < n; ++j) {
    const int s = m.column_sum(j);
    if (3 * s >= 2 * n) c.heavy.push_back(j);
    if (6 * s >= n) c.medium.push_back(j);
    if (s > best) {
      best = s;
      c.largest = j;
    }
  }
  c.heavy_bound_applies = n >= 6 * k - 5;
  c.medium_bound_applies = n >= 22 * k - 11;
  if (c.heavy_bound_applies && c.heavy.size() > 1)
    throw LemmaViolation("census: " + std::to_string(c.heavy.size()) + " vertices with column sum >= 2n/3");
  if (c.medium_bound_applies && c.medium.size() > 11)
    throw LemmaViolation("census: " + std::to_string(c.medium.size()) + " vertices with column sum >= n/6");
  return c;
}

bool large_n_applicable(const DegreeMatrix& m) {
  return m.k() >= 5 && m.n() >= std::max(22 * m.k() - 11, 396) && m.is_tree_matrix() && !m.has_common_leaves();
}

namespace {

bool is_leaf(const DegreeMatrix& m, Color c, Vertex x) { return m(c - 1, x) == 1; }

std::vector<std::pair<Vertex, Vertex>> capping_edges(const PhaseState& s, Color c) {
  std::vector<std::pair<Vertex, Vertex>> out;
  if (s.heavy < 0 || is_leaf(s.matrix, c, s.heavy)) return out;
  for (Vertex y : s.graph.neighbors(s.heavy, c))
    if (!is_leaf(s.matrix, c, y)) out.emplace_back(std::min(s.heavy, y), std::max(s.heavy, y));
  return out;
}

std::pair<Vertex, Vertex> end_pair(const PhaseState& s, Color c, const std::vector<int>& need) {
  std::pair<Vertex, Vertex> e{-1, -1};
  for (int x = 0; x < s.matrix.n(); ++x)
    if (s.matrix(c - 1, x) >= 2 && need[static_cast<std::size_t>(x)] == 1) (e.first < 0 ? e.first : e.second) = x;
  return e;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
  std::vector<int> parent;
};

}  // namespace

std::vector<int> remaining_degrees(const PhaseState& state, Color color) {
  const DegreeMatrix& m = state.matrix;
  std::vector<int> out(static_cast<std::size_t>(m.n()), 0);
  for (Vertex x = 0; x < m.n(); ++x) {
    if (m(color - 1, x) < 2) continue;
    int legs = 0;
    for (Vertex y : state.graph.neighbors(x, color))
      if (is_leaf(m, color, y)) ++legs;
    out[static_cast<std::size_t>(x)] = m(color - 1, x) - legs;
  }
  return out;
}

std::string check_phase_state(const PhaseState& s) {
  const DegreeMatrix& m = s.matrix;
  for (Color c : s.built) {
    auto view = inspect_caterpillar(s.graph, c);
    if (std::holds_alternative<CaterpillarFault>(view)) return "built color " + std::to_string(c) + " is not a caterpillar";
    for (Vertex x = 0; x < m.n(); ++x)
      if (s.graph.degree(x, c) != m(c - 1, x)) return "built color " + std::to_string(c) + " has a wrong degree";
  }
  for (Color c : s.pending) {
    const auto need = remaining_degrees(s, c);
    int ones = 0;
    for (Vertex x = 0; x < m.n(); ++x) {
      if (m(c - 1, x) == 1) {
        if (s.graph.degree(x, c) != 1) return "color " + std::to_string(c) + " leaf " + std::to_string(x) + " lacks its leg";
        continue;
      }
      const int nd = need[static_cast<std::size_t>(x)];
      if (nd == 1) ++ones;
      if (nd < 1 || nd > 2) return "color " + std::to_string(c) + " vertex " + std::to_string(x) + " needs backbone degree " + std::to_string(nd);
    }
    for (const auto& e : s.graph.edges_of_color(c))
      if (!is_leaf(m, c, e.u) && !is_leaf(m, c, e.v) && e.u != s.heavy && e.v != s.heavy)
        return "color " + std::to_string(c) + " has a backbone edge away from the heavy vertex";
    const auto expected = end_pair(s, c, need);
    if (ones != 2 || s.ends[static_cast<std::size_t>(c - 1)] != expected)
      return "color " + std::to_string(c) + " end vertices are off";
    if (s.capping[static_cast<std::size_t>(c - 1)] != capping_edges(s, c))
      return "color " + std::to_string(c) + " capping edges are stale";
  }
  return {};
}

PhaseState phase_one(const DegreeMatrix& m) {
  if (m.k() < 4 || !m.is_tree_matrix() || m.has_common_leaves())
    throw PreconditionError("phase_one: needs k >= 4 and a tree matrix without common leaves");
  const int n = m.n();
  const int k = m.k();
  PhaseState s;
  s.matrix = m;
  s.heavy = heavy_vertex_census(m).largest;

  // Reduction chain in original vertex ids; the heavy vertex stays if it can.
  struct Insertion {
    Vertex vertex;
    int row;
    Vertex target;
  };
  std::vector<Insertion> chain;
  DegreeMatrix cur = m;
  std::vector<Vertex> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  for (;;) {
    const auto it = std::find(ids.begin(), ids.end(), s.heavy);
    const int avoid = it == ids.end() ? -1 : static_cast<int>(it - ids.begin());
    auto step = find_reducible_column(cur, avoid);
    if (!step) break;
    s.trace.steps.push_back(*step);
    chain.push_back({ids[static_cast<std::size_t>(step->removed)], step->row, ids[static_cast<std::size_t>(step->target)]});
    cur = reduce(cur, *step);
    ids.erase(ids.begin() + step->removed);
  }

  std::vector<int> rows(static_cast<std::size_t>(k));
  std::iota(rows.begin(), rows.end(), 0);
  std::stable_sort(rows.begin(), rows.end(), [&](int a, int b) { return m.leaf_count(a) > m.leaf_count(b); });
  for (int t = 0; t < k; ++t) (t < 3 ? s.built : s.pending).push_back(rows[static_cast<std::size_t>(t)] + 1);
  std::sort(s.built.begin(), s.built.end());
  auto backbone_size = [&](Color c) { return m.n() - m.leaf_count(c - 1); };
  std::stable_sort(s.pending.begin(), s.pending.end(), [&](Color a, Color b) { return backbone_size(a) < backbone_size(b); });
  auto is_built = [&](Color c) { return std::find(s.built.begin(), s.built.end(), c) != s.built.end(); };

  s.graph = ColoredGraph(n);
  for (const auto& e : walecki_pack(cur).edges()) {
    const Vertex u = ids[static_cast<std::size_t>(e.u)];
    const Vertex w = ids[static_cast<std::size_t>(e.v)];
    const bool leg = cur(e.color - 1, e.u) == 1 || cur(e.color - 1, e.v) == 1;
    if (is_built(e.color) || leg || u == s.heavy || w == s.heavy) s.graph.add_edge(u, w, e.color);
  }
  s.trace.base = "walecki";

  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const Color leaf_color = it->row + 1;
    s.graph.add_edge(it->vertex, it->target, leaf_color);
    std::vector<Color> others;
    for (Color c : s.built)
      if (c != leaf_color) others.push_back(c);
    const auto spines = spines_of(s.graph, others);
    auto rm = find_rainbow_avoiding(spines, it->target, static_cast<int>(others.size()));
    if (!rm) throw LemmaViolation("phase one: no rainbow matching avoiding vertex " + std::to_string(it->target));
    if (!rm->by_greedy) ++s.trace.rainbow_fallbacks;
    for (const auto& e : rm->edges) {
      s.graph.remove_edge(e.u, e.v);
      s.graph.add_edge(it->vertex, e.u, e.color);
      s.graph.add_edge(it->vertex, e.v, e.color);
    }
  }

  s.capping.assign(static_cast<std::size_t>(k), {});
  s.ends.assign(static_cast<std::size_t>(k), {-1, -1});
  for (Color c : s.pending) {
    s.capping[static_cast<std::size_t>(c - 1)] = capping_edges(s, c);
    if (backbone_size(c) >= 2) s.ends[static_cast<std::size_t>(c - 1)] = end_pair(s, c, remaining_degrees(s, c));
  }
  s.trace.notes.push_back("phase one: " + std::to_string(chain.size()) + " insertions");
  return s;
}

ColoredGraph phase_two(PhaseState s) {
  const DegreeMatrix& m = s.matrix;
  const int n = m.n();
  const auto census = heavy_vertex_census(m);
  std::vector<char> medium(static_cast<std::size_t>(n), 0);
  for (Vertex x : census.medium) medium[static_cast<std::size_t>(x)] = 1;
  if (s.heavy >= 0) medium[static_cast<std::size_t>(s.heavy)] = 1;

  for (Color c : s.pending) {
    std::vector<Vertex> backbone;
    for (Vertex x = 0; x < n; ++x)
      if (m(c - 1, x) >= 2) backbone.push_back(x);
    if (backbone.size() < 2) continue;
    const int size = static_cast<int>(backbone.size());
    // Pending colors are fourth shortest or later.
    if (m.k() >= 5 && 4 * size <= 3 * n)
      throw LemmaViolation("phase two: color " + std::to_string(c) + " backbone has only " + std::to_string(size) + " vertices");
    std::vector<int> local(static_cast<std::size_t>(n), -1);
    for (int t = 0; t < size; ++t) local[static_cast<std::size_t>(backbone[static_cast<std::size_t>(t)])] = t;

    const auto need = remaining_degrees(s, c);
    const auto [a, b] = end_pair(s, c, need);
    if (a < 0 || b < 0) throw LemmaViolation("phase two: color " + std::to_string(c) + " lacks two end vertices");

    std::vector<std::pair<Vertex, Vertex>> forced = capping_edges(s, c);
    std::vector<int> forced_deg(static_cast<std::size_t>(n), 0);
    UnionFind uf(n);
    for (const auto& [x, y] : forced) {
      ++forced_deg[static_cast<std::size_t>(x)];
      ++forced_deg[static_cast<std::size_t>(y)];
      uf.unite(x, y);
    }

    // Cap medium vertices with ordinary neighbors that no forced edge touches yet.
    for (Vertex w : backbone) {
      if (!medium[static_cast<std::size_t>(w)]) continue;
      int want = need[static_cast<std::size_t>(w)] - forced_deg[static_cast<std::size_t>(w)];
      if (want < 0) throw LemmaViolation("phase two: too many forced edges at vertex " + std::to_string(w));
      int end_caps = 0;
      for (const auto& [x, y] : forced)
        if ((x == w && (y == a || y == b)) || (y == w && (x == a || x == b))) ++end_caps;
      for (Vertex u : backbone) {
        if (want == 0) break;
        if (u == w || medium[static_cast<std::size_t>(u)] || forced_deg[static_cast<std::size_t>(u)] != 0) continue;
        if (s.graph.has_edge(w, u)) continue;
        const bool endpoint = u == a || u == b;
        if (endpoint && end_caps >= 1) continue;
        const int rw = uf.find(w);
        const int ra = uf.find(a);
        const int rb = uf.find(b);
        if (endpoint && ((u == a && rw == rb) || (u == b && rw == ra))) continue;
        if ((rw == ra && uf.find(u) == rb) || (rw == rb && uf.find(u) == ra)) continue;
        forced.emplace_back(std::min(w, u), std::max(w, u));
        ++forced_deg[static_cast<std::size_t>(w)];
        ++forced_deg[static_cast<std::size_t>(u)];
        uf.unite(w, u);
        if (endpoint) ++end_caps;
        --want;
      }
      if (want > 0) throw LemmaViolation("phase two: no capping neighbor for vertex " + std::to_string(w));
    }

    Adjacency f(static_cast<std::size_t>(size), std::vector<char>(static_cast<std::size_t>(size), 0));
    for (int x = 0; x < size; ++x)
      for (int y = x + 1; y < size; ++y)
        if (!s.graph.has_edge(backbone[static_cast<std::size_t>(x)], backbone[static_cast<std::size_t>(y)]))
          f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = f[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = 1;
    std::vector<std::pair<int, int>> forced_local;
    for (const auto& [x, y] : forced) {
      const int lx = local[static_cast<std::size_t>(x)];
      const int ly = local[static_cast<std::size_t>(y)];
      f[static_cast<std::size_t>(lx)][static_cast<std::size_t>(ly)] = f[static_cast<std::size_t>(ly)][static_cast<std::size_t>(lx)] = 1;
      forced_local.emplace_back(lx, ly);
    }
    const auto path = hamiltonian_path_with_forced(f, local[static_cast<std::size_t>(a)], local[static_cast<std::size_t>(b)], forced_local);
    if (!path) throw LemmaViolation("phase two: no Hamiltonian backbone for color " + std::to_string(c));
    for (std::size_t t = 0; t + 1 < path->size(); ++t) {
      const Vertex x = backbone[static_cast<std::size_t>((*path)[t])];
      const Vertex y = backbone[static_cast<std::size_t>((*path)[t + 1])];
      if (s.graph.has_edge(x, y)) {
        if (s.graph.color_of(x, y) != c) throw LemmaViolation("phase two: path reuses an edge of another color");
        continue;
      }
      s.graph.add_edge(x, y, c);
    }
  }
  return s.graph;
}

RealizationOutcome realize_large(const DegreeMatrix& m) {
  const bool proven = large_n_applicable(m);
  try {
    PhaseState s = phase_one(m);
    ConstructionTrace trace = s.trace;
    trace.base = "large-n";
    ColoredGraph g = phase_two(std::move(s));
    return make_exists(std::move(g), m, std::move(trace));
  } catch (const LemmaViolation& e) {
    if (proven) throw;
    return Unknown{std::string("large-n construction outside its proven range failed: ") + e.what()};
  }
}

}  // namespace catpack
