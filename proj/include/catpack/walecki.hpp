#pragma once

#include <vector>

#include "catpack/model.hpp"

namespace catpack {

/// Zigzag Hamiltonian path i on vertices 0..n-1: i, i+1, i-1, i+2, i-2, ...
/// (mod n). Its ends are i and i + ceil(n/2); paths 0..k-1 are pairwise
/// edge-disjoint whenever 2k <= n.
std::vector<Vertex> zigzag_path(int n, int i);

/// Edge-disjoint Hamiltonian paths for a matrix whose rows are all path
/// rows without common leaves. Color i+1 runs between the two 1-columns of
/// row i. Throws PreconditionError otherwise.
ColoredGraph walecki_pack(const DegreeMatrix& m);

}  // namespace catpack
