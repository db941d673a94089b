#pragma once

#include <string>
#include <utility>
#include <vector>

#include "catpack/hamiltonian.hpp"
#include "catpack/model.hpp"

namespace catpack {

/// Vertices with large column sums. Heavy means 3 * sum >= 2n, medium
/// means 6 * sum >= n (heavy vertices are medium too).
struct HeavyVertexCensus {
  std::vector<Vertex> heavy;
  std::vector<Vertex> medium;
  /// Vertex with the largest column sum, lowest index on ties.
  Vertex largest = -1;
  bool heavy_bound_applies = false;   // n >= 6k - 5
  bool medium_bound_applies = false;  // n >= 22k - 11
};

/// Throws LemmaViolation when more than one heavy vertex exists with
/// n >= 6k - 5, or more than eleven medium ones with n >= 22k - 11.
HeavyVertexCensus heavy_vertex_census(const DegreeMatrix& m);

/// Construction state between the two phases.
struct PhaseState {
  DegreeMatrix matrix;
  ColoredGraph graph;
  /// The vertex with the largest column sum.
  Vertex heavy = -1;
  /// Colors complete after phase one: the three rows with most leaves.
  std::vector<Color> built;
  /// Remaining colors, in the order phase two handles them (shortest backbone first).
  std::vector<Color> pending;
  /// Per color (index color - 1): the heavy vertex's backbone edges.
  std::vector<std::vector<std::pair<Vertex, Vertex>>> capping;
  /// Per color: the two backbone vertices still short one backbone edge;
  /// (-1, -1) for built colors and single-vertex backbones.
  std::vector<std::pair<Vertex, Vertex>> ends;
  ConstructionTrace trace;
};

/// Backbone degree each vertex needs in `color`: its entry minus the legs
/// of that color already present. Leaves get 0.
std::vector<int> remaining_degrees(const PhaseState& state, Color color);

/// Empty when the state is consistent: built colors are caterpillars
/// realizing their rows; in every pending color each backbone vertex needs
/// backbone degree 1 or 2, with 1 exactly at the two recorded ends, and the
/// only non-leg edges are the heavy vertex's capping edges.
std::string check_phase_state(const PhaseState& state);

/// Reduction chain to a path matrix, path packing, then forward replay that
/// keeps the three built colors complete and every pending color down to
/// its legs and the heavy vertex's edges. Throws PreconditionError unless m
/// is a tree matrix without common leaves with k >= 4; throws
/// LemmaViolation when a rainbow matching is missing.
PhaseState phase_one(const DegreeMatrix& m);

/// Builds each pending backbone as a Hamiltonian path between its ends in
/// the complement of the current graph, with the heavy vertex's capping
/// edges and caps on medium vertices forced. Throws LemmaViolation if a
/// path cannot be found.
ColoredGraph phase_two(PhaseState state);

/// phase_one then phase_two. Inside the proven range (k >= 5,
/// n >= max(22k - 11, 396)) failures are LemmaViolation; outside it they
/// come back as Unknown.
RealizationOutcome realize_large(const DegreeMatrix& m);

bool large_n_applicable(const DegreeMatrix& m);

}  // namespace catpack
