#include "catpack/model.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "catpack/error.hpp"

namespace catpack {

// ---------------------------------------------------------------------------
// DegreeMatrix

DegreeMatrix::DegreeMatrix(int k, int n) : k_(k), n_(n) {
  if (k < 0 || n < 0) throw PreconditionError("matrix dimensions must be non-negative");
  cells_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(n), 0);
}

DegreeMatrix::DegreeMatrix(const std::vector<std::vector<int>>& rows)
    : k_(static_cast<int>(rows.size())), n_(rows.empty() ? 0 : static_cast<int>(rows.front().size())) {
  cells_.reserve(static_cast<std::size_t>(k_) * static_cast<std::size_t>(n_));
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw PreconditionError("degree matrix rows differ in length");
    for (int d : r) {
      if (d < 0) throw PreconditionError("degree matrix entries must be non-negative");
      cells_.push_back(d);
    }
  }
}

std::vector<int> DegreeMatrix::row(int i) const {
  auto first = cells_.begin() + static_cast<std::ptrdiff_t>(index(i, 0));
  return {first, first + n_};
}

std::vector<int> DegreeMatrix::column(int j) const {
  std::vector<int> out(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) out[static_cast<std::size_t>(i)] = (*this)(i, j);
  return out;
}

std::vector<std::vector<int>> DegreeMatrix::rows() const {
  std::vector<std::vector<int>> out;
  out.reserve(static_cast<std::size_t>(k_));
  for (int i = 0; i < k_; ++i) out.push_back(row(i));
  return out;
}

int DegreeMatrix::row_sum(int i) const {
  int s = 0;
  for (int j = 0; j < n_; ++j) s += (*this)(i, j);
  return s;
}

int DegreeMatrix::column_sum(int j) const {
  int s = 0;
  for (int i = 0; i < k_; ++i) s += (*this)(i, j);
  return s;
}

int DegreeMatrix::leaf_count(int i) const {
  int c = 0;
  for (int j = 0; j < n_; ++j) c += (*this)(i, j) == 1 ? 1 : 0;
  return c;
}

bool DegreeMatrix::is_tree_row(int i) const {
  if (n_ < 2) return false;
  for (int j = 0; j < n_; ++j)
    if ((*this)(i, j) <= 0) return false;
  return row_sum(i) == 2 * n_ - 2;
}

bool DegreeMatrix::is_path_row(int i) const { return is_tree_row(i) && leaf_count(i) == 2; }

bool DegreeMatrix::is_tree_matrix() const {
  if (k_ == 0) return false;
  for (int i = 0; i < k_; ++i)
    if (!is_tree_row(i)) return false;
  return true;
}

bool DegreeMatrix::all_rows_are_paths() const {
  for (int i = 0; i < k_; ++i)
    if (!is_path_row(i)) return false;
  return true;
}

std::vector<int> DegreeMatrix::common_leaf_columns() const {
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    int ones = 0;
    for (int i = 0; i < k_; ++i) ones += (*this)(i, j) == 1 ? 1 : 0;
    if (ones >= 2) out.push_back(j);
  }
  return out;
}

DegreeMatrix DegreeMatrix::without_column(int j) const {
  if (j < 0 || j >= n_) throw PreconditionError("column index out of range");
  DegreeMatrix out(k_, n_ - 1);
  for (int i = 0; i < k_; ++i)
    for (int c = 0, t = 0; c < n_; ++c)
      if (c != j) out(i, t++) = (*this)(i, c);
  return out;
}

DegreeMatrix DegreeMatrix::swapped_rows(int a, int b) const {
  DegreeMatrix out = *this;
  for (int j = 0; j < n_; ++j) std::swap(out(a, j), out(b, j));
  return out;
}

DegreeMatrix DegreeMatrix::permuted(std::span<const int> row_order, std::span<const int> col_order) const {
  if (static_cast<int>(row_order.size()) != k_ || static_cast<int>(col_order.size()) != n_)
    throw PreconditionError("permutation size mismatch");
  DegreeMatrix out(k_, n_);
  for (int r = 0; r < k_; ++r)
    for (int c = 0; c < n_; ++c)
      out(r, c) = (*this)(row_order[static_cast<std::size_t>(r)], col_order[static_cast<std::size_t>(c)]);
  return out;
}

std::string DegreeMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < k_; ++i) {
    for (int j = 0; j < n_; ++j) os << (j ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// ColoredGraph

ColoredGraph::ColoredGraph(int n) : n_(n) {
  if (n < 0) throw PreconditionError("vertex count must be non-negative");
  colors_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  adjacency_.resize(static_cast<std::size_t>(n));
}

void ColoredGraph::check_vertex(Vertex u) const {
  if (u < 0 || u >= n_) throw PreconditionError("vertex " + std::to_string(u) + " out of range");
}

Color ColoredGraph::max_color() const {
  Color best = 0;
  for (Color c : colors_) best = std::max(best, c);
  return best;
}

void ColoredGraph::add_edge(Vertex u, Vertex v, Color color) {
  check_vertex(u);
  check_vertex(v);
  if (color < 1) throw PreconditionError("edge colors start at 1");
  if (u == v) throw ParallelEdge("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw ParallelEdge("pair (" + std::to_string(u) + "," + std::to_string(v) + ") already carries color " +
                       std::to_string(color_of(u, v)));
  colors_[index(u, v)] = color;
  colors_[index(v, u)] = color;
  adjacency_[static_cast<std::size_t>(u)].push_back(v);
  adjacency_[static_cast<std::size_t>(v)].push_back(u);
  ++edge_count_;
}

void ColoredGraph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (!has_edge(u, v))
    throw PreconditionError("no edge between " + std::to_string(u) + " and " + std::to_string(v));
  colors_[index(u, v)] = 0;
  colors_[index(v, u)] = 0;
  auto drop = [](std::vector<Vertex>& list, Vertex x) { list.erase(std::find(list.begin(), list.end(), x)); };
  drop(adjacency_[static_cast<std::size_t>(u)], v);
  drop(adjacency_[static_cast<std::size_t>(v)], u);
  --edge_count_;
}

std::vector<Vertex> ColoredGraph::neighbors(Vertex u, Color color) const {
  std::vector<Vertex> out;
  for (Vertex w : neighbors(u))
    if (color_of(u, w) == color) out.push_back(w);
  std::sort(out.begin(), out.end());
  return out;
}

int ColoredGraph::degree(Vertex u, Color color) const {
  int d = 0;
  for (Vertex w : neighbors(u)) d += color_of(u, w) == color ? 1 : 0;
  return d;
}

std::vector<ColoredEdge> ColoredGraph::edges() const {
  std::vector<ColoredEdge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.push_back({u, v, color_of(u, v)});
  std::sort(out.begin(), out.end(), [](const ColoredEdge& a, const ColoredEdge& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return out;
}

std::vector<ColoredEdge> ColoredGraph::edges_of_color(Color color) const {
  std::vector<ColoredEdge> out;
  for (const auto& e : edges())
    if (e.color == color) out.push_back(e);
  return out;
}

ColoredGraph ColoredGraph::with_vertex_inserted(Vertex pos) const {
  if (pos < 0 || pos > n_) throw PreconditionError("insert position out of range");
  ColoredGraph out(n_ + 1);
  auto shift = [pos](Vertex x) { return x >= pos ? x + 1 : x; };
  for (const auto& e : edges()) out.add_edge(shift(e.u), shift(e.v), e.color);
  return out;
}

std::vector<ColoredEdge> color_subgraph(const ColoredGraph& g, Color color, int k) {
  if (color < 1 || color > k) throw PreconditionError("color " + std::to_string(color) + " out of range");
  return g.edges_of_color(color);
}

// ---------------------------------------------------------------------------
// Caterpillars

const char* to_string(CaterpillarFault fault) {
  switch (fault) {
    case CaterpillarFault::EmptyClass: return "empty color class";
    case CaterpillarFault::NotATree: return "not a tree";
    case CaterpillarFault::NotACaterpillar: return "not a caterpillar";
  }
  return "unknown";
}

std::variant<CaterpillarView, CaterpillarFault> inspect_caterpillar(const ColoredGraph& g, Color color) {
  const int n = g.n();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  std::size_t edges = 0;
  for (Vertex u = 0; u < n; ++u) {
    adj[static_cast<std::size_t>(u)] = g.neighbors(u, color);
    edges += adj[static_cast<std::size_t>(u)].size();
  }
  edges /= 2;
  if (edges == 0) return CaterpillarFault::EmptyClass;

  std::vector<Vertex> touched;
  for (Vertex u = 0; u < n; ++u)
    if (!adj[static_cast<std::size_t>(u)].empty()) touched.push_back(u);
  if (edges + 1 != touched.size()) return CaterpillarFault::NotATree;

  // Connectivity by DFS from the first touched vertex.
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{touched.front()};
  seen[static_cast<std::size_t>(touched.front())] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : adj[static_cast<std::size_t>(u)])
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != touched.size()) return CaterpillarFault::NotATree;

  auto deg = [&](Vertex u) { return static_cast<int>(adj[static_cast<std::size_t>(u)].size()); };
  CaterpillarView view;
  view.color = color;

  if (touched.size() == 2) {
    view.spine = {touched[0], touched[1]};
    return view;
  }

  std::vector<Vertex> inner;
  for (Vertex u : touched)
    if (deg(u) >= 2) inner.push_back(u);

  auto inner_neighbors = [&](Vertex u) {
    std::vector<Vertex> out;
    for (Vertex w : adj[static_cast<std::size_t>(u)])
      if (deg(w) >= 2) out.push_back(w);
    return out;
  };

  // The non-leaves of a tree induce a subtree; it is a path iff no vertex
  // has three non-leaf neighbors.
  Vertex start = -1;
  for (Vertex u : inner) {
    auto nb = inner_neighbors(u);
    if (nb.size() > 2) return CaterpillarFault::NotACaterpillar;
    if (nb.size() <= 1 && start < 0) start = u;
  }

  Vertex prev = -1;
  for (Vertex cur = start; cur >= 0;) {
    view.backbone.push_back(cur);
    Vertex next = -1;
    for (Vertex w : inner_neighbors(cur))
      if (w != prev) next = w;
    prev = cur;
    cur = next;
  }

  for (Vertex b : view.backbone) {
    std::vector<Vertex> leaves;
    for (Vertex w : adj[static_cast<std::size_t>(b)])
      if (deg(w) == 1) leaves.push_back(w);
    view.legs.push_back(std::move(leaves));
  }

  const auto& head_legs = view.legs.front();
  const auto& tail_legs = view.legs.back();
  view.spine.push_back(head_legs.front());
  view.spine.insert(view.spine.end(), view.backbone.begin(), view.backbone.end());
  view.spine.push_back(view.backbone.size() == 1 ? tail_legs.at(1) : tail_legs.front());
  return view;
}

CaterpillarView caterpillar_view(const ColoredGraph& g, Color color) {
  auto r = inspect_caterpillar(g, color);
  if (auto* fault = std::get_if<CaterpillarFault>(&r))
    throw CaterpillarError(*fault, "color " + std::to_string(color) + ": " + to_string(*fault));
  return std::get<CaterpillarView>(std::move(r));
}

// ---------------------------------------------------------------------------
// Validation and verification

ValidationReport validate_matrix(const DegreeMatrix& m, bool require_no_common_leaves) {
  ValidationReport rep;
  for (int i = 0; i < m.k(); ++i) {
    RowStatus st;
    st.sum = m.row_sum(i);
    st.leaves = m.leaf_count(i);
    st.tree = m.is_tree_row(i);
    st.path = m.is_path_row(i);
    rep.rows.push_back(st);
  }
  rep.common_leaf_columns = m.common_leaf_columns();
  rep.tree_matrix = m.is_tree_matrix();
  rep.no_common_leaves = rep.common_leaf_columns.empty();
  const bool clean = rep.tree_matrix && rep.no_common_leaves;
  rep.eligible_single = rep.tree_matrix && m.k() == 1;
  rep.eligible_walecki = clean && m.all_rows_are_paths();
  rep.eligible_two_trees = rep.tree_matrix && m.k() == 2;
  rep.eligible_k_le_4 = clean && m.k() >= 1 && m.k() <= 4;
  rep.eligible_large_n = clean && m.k() >= 5 && m.n() >= std::max(22 * m.k() - 11, 396);
  rep.ok = rep.tree_matrix && (!require_no_common_leaves || rep.no_common_leaves);
  return rep;
}

VerifyResult verify_realization(const ColoredGraph& g, const DegreeMatrix& m) {
  if (g.n() != m.n())
    throw PreconditionError("graph has " + std::to_string(g.n()) + " vertices, matrix has " + std::to_string(m.n()));
  if (g.max_color() > m.k())
    throw PreconditionError("graph uses color " + std::to_string(g.max_color()) + " but matrix has " +
                            std::to_string(m.k()) + " rows");
  for (int i = 0; i < m.k(); ++i) {
    const Color c = i + 1;
    for (Vertex u = 0; u < m.n(); ++u) {
      const int d = g.degree(u, c);
      if (d != m(i, u))
        return {false, "color " + std::to_string(c) + ": vertex " + std::to_string(u) + " has degree " +
                           std::to_string(d) + ", row wants " + std::to_string(m(i, u))};
    }
    auto r = inspect_caterpillar(g, c);
    if (auto* fault = std::get_if<CaterpillarFault>(&r))
      return {false, "color " + std::to_string(c) + ": " + to_string(*fault)};
  }
  return {};
}

RealizationOutcome make_exists(ColoredGraph graph, const DegreeMatrix& m, ConstructionTrace trace) {
  if (auto v = verify_realization(graph, m); !v)
    throw LemmaViolation("constructed graph failed verification: " + v.violation);
  return Exists{std::move(graph), std::move(trace)};
}

}  // namespace catpack
