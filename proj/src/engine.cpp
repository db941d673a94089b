#include "catpack/engine.hpp"

#include <algorithm>
#include <string>

#include "catpack/error.hpp"
#include "catpack/walecki.hpp"

namespace catpack {

namespace {

void require_tree_without_common_leaves(const DegreeMatrix& m, const char* who) {
  if (!m.is_tree_matrix()) throw PreconditionError(std::string(who) + ": not a tree degree matrix");
  if (m.has_common_leaves()) throw PreconditionError(std::string(who) + ": matrix has common leaves");
}

bool reducible_at(const DegreeMatrix& m, int l, int& row) {
  row = -1;
  for (int r = 0; r < m.k(); ++r) {
    const int d = m(r, l);
    if (d == 1) {
      if (row >= 0) return false;
      row = r;
    } else if (d != 2) {
      return false;
    }
  }
  return row >= 0 && !m.is_path_row(row);
}

std::vector<Color> colors_except(int k, Color skip) {
  std::vector<Color> out;
  for (Color c = 1; c <= k; ++c)
    if (c != skip) out.push_back(c);
  return out;
}

// Reduction chain from m towards a base; stops when `stop` holds.
template <class Stop>
DegreeMatrix run_chain(const DegreeMatrix& m, std::vector<ReductionStep>& steps, Stop stop) {
  DegreeMatrix cur = m;
  while (!stop(cur)) {
    auto step = find_reducible_column(cur);
    if (!step) break;
    steps.push_back(*step);
    cur = reduce(cur, *step);
  }
  return cur;
}

// Replays the chain backwards on a realization of its last matrix.
// Returns false when some rainbow matching does not exist.
bool replay(ColoredGraph& g, int k, const std::vector<ReductionStep>& steps, ConstructionTrace& trace) {
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    const ReductionStep& step = *it;
    const Vertex target = step.target - (step.target > step.removed ? 1 : 0);
    const auto colors = colors_except(k, step.row + 1);
    const auto spines = spines_of(g, colors);
    auto matching = find_rainbow_avoiding(spines, target, k - 1);
    if (!matching) return false;
    if (!matching->by_greedy) ++trace.rainbow_fallbacks;
    g = extend_realization(g, step, *matching);
  }
  return true;
}

}  // namespace

std::optional<ReductionStep> find_reducible_column(const DegreeMatrix& m, int avoid_column) {
  require_tree_without_common_leaves(m, "find_reducible_column");
  if (m.all_rows_are_paths()) return std::nullopt;
  int fallback = -1;
  int fallback_row = -1;
  for (int l = 0; l < m.n(); ++l) {
    int row = -1;
    if (!reducible_at(m, l, row)) continue;
    if (l == avoid_column) {
      fallback = l;
      fallback_row = row;
      continue;
    }
    fallback = l;
    fallback_row = row;
    break;
  }
  if (fallback < 0) throw LemmaViolation("no reducible column although some row is not a path");
  for (int j = 0; j < m.n(); ++j)
    if (m(fallback_row, j) > 2) return ReductionStep{fallback, fallback_row, j};
  throw LemmaViolation("non-path row without an entry above 2");
}

DegreeMatrix reduce(const DegreeMatrix& m, const ReductionStep& step) {
  if (step.row < 0 || step.row >= m.k() || step.removed < 0 || step.removed >= m.n() || step.target < 0 ||
      step.target >= m.n() || step.target == step.removed)
    throw PreconditionError("reduce: step out of range");
  for (int r = 0; r < m.k(); ++r)
    if (m(r, step.removed) != (r == step.row ? 1 : 2))
      throw PreconditionError("reduce: removed column is not all 2s with a single 1 in the step row");
  if (m(step.row, step.target) <= 2) throw PreconditionError("reduce: target entry is not above 2");
  DegreeMatrix out = m;
  --out(step.row, step.target);
  return out.without_column(step.removed);
}

ColoredGraph extend_realization(const ColoredGraph& reduced, const ReductionStep& step, const RainbowMatching& matching) {
  const int n = reduced.n();
  if (step.removed < 0 || step.removed > n || step.target < 0 || step.target > n || step.target == step.removed)
    throw PreconditionError("extend_realization: step does not fit the graph");
  const Color leaf_color = step.row + 1;
  const Vertex target = step.target - (step.target > step.removed ? 1 : 0);
  if (!is_rainbow_matching(matching)) throw PreconditionError("extend_realization: not a rainbow matching");
  for (const auto& e : matching.edges) {
    if (e.u == target || e.v == target) throw PreconditionError("extend_realization: matching touches the target");
    if (e.color == leaf_color) throw PreconditionError("extend_realization: matching uses the leaf color");
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n || reduced.color_of(e.u, e.v) != e.color)
      throw PreconditionError("extend_realization: matching edge missing from the graph");
  }

  const Vertex v = step.removed;
  auto lift = [v](Vertex x) { return x >= v ? x + 1 : x; };
  ColoredGraph g = reduced.with_vertex_inserted(v);
  g.add_edge(v, step.target, leaf_color);
  for (const auto& e : matching.edges) {
    const Vertex u = lift(e.u);
    const Vertex w = lift(e.v);
    g.remove_edge(u, w);
    g.add_edge(v, u, e.color);
    g.add_edge(v, w, e.color);
  }
  return g;
}

ColoredGraph realize_single_caterpillar(std::span<const int> row) {
  const int n = static_cast<int>(row.size());
  int sum = 0;
  for (int d : row) {
    if (d <= 0) throw PreconditionError("realize_single_caterpillar: not a tree row");
    sum += d;
  }
  if (n < 2 || sum != 2 * n - 2) throw PreconditionError("realize_single_caterpillar: not a tree row");

  ColoredGraph g(n);
  std::vector<Vertex> backbone;
  std::vector<Vertex> leaves;
  for (Vertex x = 0; x < n; ++x) (row[static_cast<std::size_t>(x)] >= 2 ? backbone : leaves).push_back(x);
  if (backbone.empty()) {
    g.add_edge(0, 1, 1);
    return g;
  }
  for (std::size_t t = 0; t + 1 < backbone.size(); ++t) g.add_edge(backbone[t], backbone[t + 1], 1);
  std::size_t next = 0;
  for (Vertex b : backbone) {
    const int legs = row[static_cast<std::size_t>(b)] - (g.degree(b, 1));
    for (int t = 0; t < legs; ++t) g.add_edge(b, leaves.at(next++), 1);
  }
  return g;
}

std::optional<ColoredGraph> fixture_lookup(const DegreeMatrix& m) {
  if (m.k() != 4 || m.n() < 8 || m.n() > 10) return std::nullopt;
  const CanonicalForm cf = canonical_form(m);
  for (const auto& f : tabulated_fixtures()) {
    if (f.canonical.matrix != cf.matrix) continue;
    // Fixture vertex f.col_order[c] plays m's vertex cf.col_order[c]; same for colors.
    std::vector<Vertex> vertex_map(static_cast<std::size_t>(m.n()));
    std::vector<Color> color_map(5);
    for (int c = 0; c < m.n(); ++c)
      vertex_map[static_cast<std::size_t>(f.canonical.col_order[static_cast<std::size_t>(c)])] =
          cf.col_order[static_cast<std::size_t>(c)];
    for (int r = 0; r < 4; ++r)
      color_map[static_cast<std::size_t>(f.canonical.row_order[static_cast<std::size_t>(r)] + 1)] =
          cf.row_order[static_cast<std::size_t>(r)] + 1;
    ColoredGraph g(m.n());
    for (const auto& e : f.realization.edges())
      g.add_edge(vertex_map[static_cast<std::size_t>(e.u)], vertex_map[static_cast<std::size_t>(e.v)],
                 color_map[static_cast<std::size_t>(e.color)]);
    return g;
  }
  return std::nullopt;
}

RealizationOutcome realize_k_le_4(const DegreeMatrix& m) {
  if (m.k() < 1 || m.k() > 4) throw PreconditionError("realize_k_le_4: needs 1 to 4 rows");
  require_tree_without_common_leaves(m, "realize_k_le_4");
  const int k = m.k();
  ConstructionTrace trace;

  if (k == 1) {
    trace.base = "single";
    return make_exists(realize_single_caterpillar(m.row(0)), m, std::move(trace));
  }

  // k = 4 stops at 10 vertices: below that only the tabulated matrices remain.
  const DegreeMatrix base = run_chain(m, trace.steps, [k](const DegreeMatrix& cur) {
    return cur.all_rows_are_paths() || (k == 4 && cur.n() <= 10);
  });

  ColoredGraph g;
  if (base.all_rows_are_paths()) {
    trace.base = "walecki";
    g = walecki_pack(base);
  } else {
    auto fx = fixture_lookup(base);
    if (!fx) throw LemmaViolation("4-row base matrix matches no tabulated case");
    trace.base = "fixture";
    g = std::move(*fx);
  }
  if (!replay(g, k, trace.steps, trace)) throw LemmaViolation("no rainbow matching during extension");
  return make_exists(std::move(g), m, std::move(trace));
}

RealizationOutcome realize_generic_conditional(const DegreeMatrix& m, const BaseProvider& base_provider) {
  require_tree_without_common_leaves(m, "realize_generic_conditional");
  const int k = m.k();
  ConstructionTrace trace;
  const DegreeMatrix base = run_chain(m, trace.steps, [k](const DegreeMatrix& cur) {
    return cur.all_rows_are_paths() || cur.n() <= 4 * k - 2;
  });

  ColoredGraph g;
  if (base.all_rows_are_paths()) {
    trace.base = "walecki";
    g = walecki_pack(base);
  } else {
    std::optional<ColoredGraph> provided;
    if (base_provider) provided = base_provider(base);
    if (!provided)
      return Unknown{"base matrix with " + std::to_string(base.n()) + " vertices is not all paths and no base realization is available"};
    if (!verify_realization(*provided, base)) throw PreconditionError("base provider returned an invalid realization");
    trace.base = "provided";
    g = std::move(*provided);
  }
  if (!replay(g, k, trace.steps, trace)) throw LemmaViolation("no rainbow matching during extension");
  return make_exists(std::move(g), m, std::move(trace));
}

}  // namespace catpack
