#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "catpack/model.hpp"

namespace catpack {

struct SearchLimits {
  std::uint64_t max_nodes = 200'000'000;
  std::chrono::milliseconds time_budget{60'000};
  /// Enumerate each backbone in one orientation only. Both orientations
  /// give the same edge set, so this never changes the verdict.
  bool symmetry = true;
};

/// Exhaustive backtracking over caterpillar realizations, one color at a
/// time: a Hamiltonian order of the row's non-leaf vertices over unused
/// pairs, then every placement of its leaves. Exists and NotExists are
/// exact; running out of nodes or time gives Unknown.
RealizationOutcome exhaustive_realize(const DegreeMatrix& m, const SearchLimits& limits = {});

/// Largest k * n accepted by enumerate_matrices.
inline constexpr int kEnumerationBudget = 48;

/// Every k x n tree matrix up to row and column permutations, as canonical
/// forms in increasing order. Throws BudgetExceeded when k * n > 48.
std::vector<DegreeMatrix> enumerate_matrices(int k, int n, bool require_no_common_leaves);

struct RandomMatrixOptions {
  bool allow_common_leaves = false;
  /// Column kept a non-leaf in every row that receives each surplus unit
  /// with probability hub_weight; -1 for none. With a hub every row takes
  /// as many leaves as fit.
  int hub = -1;
  double hub_weight = 0.0;
};

/// Deterministic in seed. Each row gets L >= 2 leaves (in distinct columns
/// across rows unless common leaves are allowed), 2 elsewhere, and its
/// L - 2 surplus spread as +1 steps over its non-leaf entries. Throws
/// PreconditionError when the parameters admit no such matrix.
DegreeMatrix random_matrix(int k, int n, std::uint64_t seed, bool allow_common_leaves);
DegreeMatrix random_matrix(int k, int n, std::uint64_t seed, const RandomMatrixOptions& options);

}  // namespace catpack
