#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "catpack/model.hpp"

namespace catpack {

/// A path (consecutive vertices are adjacent) carrying one color.
struct Spine {
  Color color = 0;
  std::vector<Vertex> vertices;

  int length() const { return vertices.empty() ? 0 : static_cast<int>(vertices.size()) - 1; }
};

struct RainbowEdge {
  Color color = 0;
  Vertex u = -1;
  Vertex v = -1;

  friend bool operator==(const RainbowEdge&, const RainbowEdge&) = default;
};

/// Pairwise vertex-disjoint edges of pairwise distinct colors, none touching `avoided`.
struct RainbowMatching {
  std::vector<RainbowEdge> edges;
  Vertex avoided = -1;
  /// False when the greedy pass failed and exhaustive search was needed.
  bool by_greedy = true;
};

/// Checks the RainbowMatching invariants.
bool is_rainbow_matching(const RainbowMatching& rm);

/// Spines of the given colors of g, in the order given.
std::vector<Spine> spines_of(const ColoredGraph& g, std::span<const Color> colors);

/// Picks `size` edges, at most one per spine, forming a rainbow matching
/// that avoids `avoid`. Spines are visited shortest first and each is
/// scanned from its lower-index end; the greedy pass takes the first usable
/// edge. If greedy falls short, a depth-first search over all choices runs.
/// Returns nullopt only when no such matching exists.
std::optional<RainbowMatching> find_rainbow_avoiding(std::span<const Spine> spines, Vertex avoid, int size);

/// Spine-length lower bounds for a caterpillar realization without common
/// leaves. Lengths count edges.
struct SpineBoundReport {
  std::vector<int> spine_lengths;  // per color, index = color - 1
  int every_spine_bound = 0;       // 2k - 1
  bool long_spine_applicable = false;
  int long_spine_bound = 0;        // 2k + 1 somewhere among any k - 1 colors
  int long_spine_witness = 0;      // longest among the k - 1 shortest
  std::vector<int> ordered_bounds; // l-th shortest >= floor((l-1)n/l) + 2, l = 1..k-1
  /// Count of l where the l-th shortest is below the real-valued (l-1)n/l + 2.
  int real_valued_shortfalls = 0;
  std::vector<std::string> binding;
};

/// Throws LemmaViolation if a bound fails, PreconditionError if g is not a
/// caterpillar realization of m or m has common leaves.
SpineBoundReport check_spine_bounds(const ColoredGraph& g, const DegreeMatrix& m);

}  // namespace catpack
