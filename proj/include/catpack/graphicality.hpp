#pragma once

#include <optional>
#include <span>
#include <vector>

#include "catpack/model.hpp"

namespace catpack {

/// Outcome of the Erdős–Gallai test.
struct EGReport {
  bool graphical = false;
  bool parity_ok = false;
  /// Smallest violated index s, 1-based; present only for even-sum failures.
  std::optional<int> first_violation_s;
  long long lhs = 0;
  long long rhs = 0;
};

/// Full Erdős–Gallai check over every s. The input is sorted internally.
EGReport erdos_gallai(std::span<const int> seq);

/// Checks only the inequalities with s < s_max. The caller guarantees an
/// even sum and that the remaining inequalities hold for structural reasons
/// (s_max = 2k for sums of k tree rows, s_max = 2 for a tree row plus a path
/// row on n >= 6 vertices).
bool eg_prefix_check(std::span<const int> seq, int s_max);

/// Havel–Hakimi reduction; independent of erdos_gallai and used as its oracle.
bool havel_hakimi(std::span<const int> seq);

std::vector<int> column_sums(const DegreeMatrix& m);

}  // namespace catpack
