#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace catpack {

/// Symmetric 0/1 adjacency on vertices 0..m-1.
using Adjacency = std::vector<std::vector<char>>;

/// Hamiltonian path in f from a to b that uses every forced edge.
///
/// Forced edges must lie in f and form a linear forest in which a and b
/// have forced degree at most 1. The vertices start in a sequence with each
/// forced component contiguous, a first and b last; gaps (consecutive
/// non-edges) are removed one at a time by reversing the arc between a gap
/// and a suitable consecutive pair, which never touches the two ends or a
/// forced pair. When that gets stuck a few reshuffled starts are tried.
/// Returns nullopt if no path is found.
std::optional<std::vector<int>> hamiltonian_path_with_forced(const Adjacency& f, int a, int b,
                                                             const std::vector<std::pair<int, int>>& forced);

}  // namespace catpack
