#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace catpack {

using Vertex = int;
/// Edge colors are 1-based; color c realizes matrix row c - 1.
using Color = int;

/// k x n matrix of vertex degrees: rows are color classes, columns vertices.
class DegreeMatrix {
 public:
  DegreeMatrix() = default;
  DegreeMatrix(int k, int n);
  /// Throws PreconditionError on ragged rows or negative entries.
  explicit DegreeMatrix(const std::vector<std::vector<int>>& rows);

  int k() const { return k_; }
  int n() const { return n_; }

  int operator()(int row, int col) const { return cells_[index(row, col)]; }
  int& operator()(int row, int col) { return cells_[index(row, col)]; }

  std::vector<int> row(int i) const;
  std::vector<int> column(int j) const;
  std::vector<std::vector<int>> rows() const;

  int row_sum(int i) const;
  int column_sum(int j) const;
  int leaf_count(int i) const;

  /// Every entry positive and the row sums to 2n - 2.
  bool is_tree_row(int i) const;
  /// A tree row with exactly two leaves.
  bool is_path_row(int i) const;
  bool is_tree_matrix() const;
  bool all_rows_are_paths() const;

  /// Columns holding a 1 in two or more rows.
  std::vector<int> common_leaf_columns() const;
  bool has_common_leaves() const { return !common_leaf_columns().empty(); }

  DegreeMatrix without_column(int j) const;
  DegreeMatrix swapped_rows(int a, int b) const;
  /// result(r, c) = (*this)(row_order[r], col_order[c]).
  DegreeMatrix permuted(std::span<const int> row_order, std::span<const int> col_order) const;

  std::string to_string() const;

  friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;
  friend auto operator<=>(const DegreeMatrix&, const DegreeMatrix&) = default;

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(col);
  }

  int k_ = 0;
  int n_ = 0;
  std::vector<int> cells_;
};

struct ColoredEdge {
  Vertex u;
  Vertex v;
  Color color;

  friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
  friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Simple graph on vertices 0..n-1 whose edges each carry one color >= 1.
/// Every unordered pair holds at most one edge across all colors; add_edge
/// throws ParallelEdge rather than break that.
class ColoredGraph {
 public:
  explicit ColoredGraph(int n = 0);

  int n() const { return n_; }
  std::size_t edge_count() const { return edge_count_; }
  Color max_color() const;

  void add_edge(Vertex u, Vertex v, Color color);
  void remove_edge(Vertex u, Vertex v);
  /// 0 when the pair is not an edge.
  Color color_of(Vertex u, Vertex v) const { return colors_[index(u, v)]; }
  bool has_edge(Vertex u, Vertex v) const { return color_of(u, v) != 0; }

  const std::vector<Vertex>& neighbors(Vertex u) const { return adjacency_[static_cast<std::size_t>(u)]; }
  std::vector<Vertex> neighbors(Vertex u, Color color) const;
  int degree(Vertex u) const { return static_cast<int>(neighbors(u).size()); }
  int degree(Vertex u, Color color) const;

  /// All edges with u < v, sorted by (u, v).
  std::vector<ColoredEdge> edges() const;
  std::vector<ColoredEdge> edges_of_color(Color color) const;

  /// Copy with a fresh isolated vertex at position pos; old vertices >= pos shift up by one.
  ColoredGraph with_vertex_inserted(Vertex pos) const;

  friend bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n_ == b.n_ && a.colors_ == b.colors_;
  }

 private:
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void check_vertex(Vertex u) const;

  int n_ = 0;
  std::size_t edge_count_ = 0;
  std::vector<Color> colors_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// Edge set of one color class, sorted.
std::vector<ColoredEdge> color_subgraph(const ColoredGraph& g, Color color, int k);

/// Decomposition of one caterpillar color class.
///
/// A single edge is treated as a caterpillar with an empty backbone and a
/// star as one with a single backbone vertex. The spine extends the backbone
/// by the lowest-index leaf at each end; for a single edge it is the edge.
struct CaterpillarView {
  Color color = 0;
  std::vector<Vertex> backbone;
  /// legs[t] lists the leaves hanging off backbone[t], ascending.
  std::vector<std::vector<Vertex>> legs;
  std::vector<Vertex> spine;

  int spine_length() const { return spine.empty() ? 0 : static_cast<int>(spine.size()) - 1; }
};

enum class CaterpillarFault { EmptyClass, NotATree, NotACaterpillar };

const char* to_string(CaterpillarFault fault);

class CaterpillarError : public std::runtime_error {
 public:
  CaterpillarError(CaterpillarFault fault, const std::string& what)
      : std::runtime_error(what), fault_(fault) {}
  CaterpillarFault fault() const { return fault_; }

 private:
  CaterpillarFault fault_;
};

std::variant<CaterpillarView, CaterpillarFault> inspect_caterpillar(const ColoredGraph& g, Color color);
/// Throws CaterpillarError when the class is empty, not a tree, or not a caterpillar.
CaterpillarView caterpillar_view(const ColoredGraph& g, Color color);

struct RowStatus {
  int sum = 0;
  int leaves = 0;
  bool tree = false;
  bool path = false;
};

struct ValidationReport {
  std::vector<RowStatus> rows;
  std::vector<int> common_leaf_columns;
  bool tree_matrix = false;
  bool no_common_leaves = false;
  /// Which constructors accept this matrix.
  bool eligible_single = false;
  bool eligible_walecki = false;
  bool eligible_two_trees = false;
  bool eligible_k_le_4 = false;
  bool eligible_large_n = false;
  /// True when require_no_common_leaves was requested and fails, or rows are not trees.
  bool ok = false;
};

ValidationReport validate_matrix(const DegreeMatrix& m, bool require_no_common_leaves);

struct VerifyResult {
  bool ok = true;
  std::string violation;
  explicit operator bool() const { return ok; }
};

/// Checks that every color class of g is a caterpillar realizing its row.
/// Throws PreconditionError when g.n() != m.n() or g uses a color above m.k().
VerifyResult verify_realization(const ColoredGraph& g, const DegreeMatrix& m);

/// Lexicographically least matrix over all row and column permutations.
struct CanonicalForm {
  DegreeMatrix matrix;
  /// matrix(r, c) == original(row_order[r], col_order[c]).
  std::vector<int> row_order;
  std::vector<int> col_order;
};

CanonicalForm canonical_form(const DegreeMatrix& m);

/// One inductive step: column `removed` (all 2s but a 1 in `row`) is deleted
/// and entry (row, target) is decremented. Indices refer to the matrix
/// before the step.
struct ReductionStep {
  int removed = -1;
  int row = -1;
  int target = -1;

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ConstructionTrace {
  std::string base;
  std::vector<ReductionStep> steps;
  /// Extensions where greedy rainbow search failed and exhaustive search ran.
  int rainbow_fallbacks = 0;
  std::vector<std::string> notes;
};

struct Exists {
  ColoredGraph graph;
  ConstructionTrace trace;
};

struct NotExists {
  std::string condition;
  std::string detail;
};

struct Unknown {
  std::string reason;
};

using RealizationOutcome = std::variant<Exists, NotExists, Unknown>;

/// Wraps a graph as Exists after verifying it against m; throws LemmaViolation otherwise.
RealizationOutcome make_exists(ColoredGraph graph, const DegreeMatrix& m, ConstructionTrace trace);

inline bool is_exists(const RealizationOutcome& o) { return std::holds_alternative<Exists>(o); }
inline bool is_not_exists(const RealizationOutcome& o) { return std::holds_alternative<NotExists>(o); }
inline bool is_unknown(const RealizationOutcome& o) { return std::holds_alternative<Unknown>(o); }

}  // namespace catpack
