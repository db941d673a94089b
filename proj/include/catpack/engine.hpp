#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "catpack/model.hpp"
#include "catpack/rainbow.hpp"

namespace catpack {

/// Finds a column summing to 2k - 1 whose single 1 lies in a non-path row,
/// plus the lowest-index target column whose entry in that row exceeds 2.
/// Lowest-index column wins; `avoid_column`, when set, is only used if no
/// other column qualifies. Returns nullopt when every row is a path row.
/// Throws PreconditionError unless m is a tree matrix without common
/// leaves, LemmaViolation if a non-path row exists but no column qualifies.
std::optional<ReductionStep> find_reducible_column(const DegreeMatrix& m, int avoid_column = -1);

/// Deletes step.removed and decrements (step.row, step.target).
/// Throws PreconditionError when the step does not fit m.
DegreeMatrix reduce(const DegreeMatrix& m, const ReductionStep& step);

/// Undoes a reduction on a realization of the reduced matrix: a new vertex
/// takes position step.removed, hangs off the target as a leaf of color
/// step.row + 1, and is spliced into each matching edge of the other colors.
/// The matching is expressed in the reduced graph's indices and must avoid
/// the target. Throws PreconditionError on a bad matching.
ColoredGraph extend_realization(const ColoredGraph& reduced, const ReductionStep& step, const RainbowMatching& matching);

/// Caterpillar for one tree row: the degree >= 2 vertices form the backbone
/// in index order; leaves are handed out in index order.
ColoredGraph realize_single_caterpillar(std::span<const int> row);

/// Realization for 1 <= k <= 4 rows without common leaves.
/// Throws PreconditionError outside that domain.
RealizationOutcome realize_k_le_4(const DegreeMatrix& m);

/// Supplies realizations for base matrices the induction cannot reduce.
using BaseProvider = std::function<std::optional<ColoredGraph>(const DegreeMatrix&)>;

/// The induction for arbitrary k: reduces while n > 4k - 2 and some row is
/// not a path, realizes the base (path packing, or base_provider), and
/// extends back with greedy rainbow matchings. Unknown when the base is
/// not a path matrix and base_provider is empty or returns nullopt.
RealizationOutcome realize_generic_conditional(const DegreeMatrix& m, const BaseProvider& base_provider = {});

struct TabulatedFixture {
  int case_number = 0;
  DegreeMatrix matrix;
  ColoredGraph realization;
  CanonicalForm canonical;
};

/// The fourteen 4-row matrices on 8..10 vertices without common leaves,
/// each with its tabulated realization.
const std::vector<TabulatedFixture>& tabulated_fixtures();

/// Realization of m transported from the matching fixture, or nullopt.
std::optional<ColoredGraph> fixture_lookup(const DegreeMatrix& m);

}  // namespace catpack
