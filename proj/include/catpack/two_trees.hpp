#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "catpack/graphicality.hpp"
#include "catpack/model.hpp"

namespace catpack {

/// The three conditions characterizing 2-row matrices with edge-disjoint
/// caterpillar realizations.
struct TwoTreeConditions {
  bool cond1 = false;  // both rows are tree rows
  bool cond2 = false;  // column sums are graphical
  bool cond3 = false;  // d_max <= |S| + 4
  int d_max = 0;
  /// Columns whose smaller entry is 1.
  std::vector<int> S;
  EGReport column_sum_report;

  bool all() const { return cond1 && cond2 && cond3; }
  /// Names the first failing condition with its numbers, e.g.
  /// "condition 3: d_max=10 > |S|+4=9"; empty when all hold.
  std::string witness() const;
};

/// Throws PreconditionError unless m has exactly two rows.
TwoTreeConditions check_two_tree_conditions(const DegreeMatrix& m);

/// Realization for two rows, common leaves allowed. NotExists names the
/// first failing condition.
RealizationOutcome realize_two(const DegreeMatrix& m);

/// Two edge-disjoint Hamiltonian paths on n vertices, color 1 from `first`
/// to its partner and color 2 likewise. Returns nullopt when none is found,
/// which for n <= 12 means none exists.
std::optional<ColoredGraph> two_hamiltonian_paths(int n, std::pair<Vertex, Vertex> first, std::pair<Vertex, Vertex> second);

}  // namespace catpack
