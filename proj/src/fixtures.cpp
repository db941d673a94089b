#include "catpack/engine.hpp"
#include "catpack/error.hpp"

namespace catpack {

namespace {

struct RawFixture {
  int case_number;
  std::vector<std::vector<int>> matrix;
  std::vector<std::vector<int>> adjacency;
};

// Degree matrices and adjacency realizations as tabulated; adjacency entry
// c > 0 marks an edge of color c.
const std::vector<RawFixture>& raw_fixtures() {
  static const std::vector<RawFixture> data = {
      {1,
       {{1, 2, 2, 2, 1, 2, 2, 2},
        {2, 1, 2, 2, 2, 1, 2, 2},
        {2, 2, 1, 2, 2, 2, 1, 2},
        {2, 2, 2, 1, 2, 2, 2, 1}},
       {{0, 1, 2, 2, 3, 3, 4, 4},
        {1, 0, 2, 3, 3, 4, 4, 1},
        {2, 2, 0, 3, 4, 4, 1, 1},
        {2, 3, 3, 0, 4, 1, 1, 2},
        {3, 3, 4, 4, 0, 1, 2, 2},
        {3, 4, 4, 1, 1, 0, 2, 3},
        {4, 4, 1, 1, 2, 2, 0, 3},
        {4, 1, 1, 2, 2, 3, 3, 0}}},
      {2,
       {{1, 2, 2, 2, 2, 1, 2, 2, 2},
        {2, 1, 2, 2, 2, 2, 1, 2, 2},
        {2, 2, 1, 2, 2, 2, 2, 1, 2},
        {2, 2, 2, 1, 2, 2, 2, 2, 1}},
       {{0, 1, 2, 2, 3, 3, 4, 4, 0},
        {1, 0, 2, 3, 3, 4, 4, 0, 1},
        {2, 2, 0, 3, 4, 4, 0, 1, 1},
        {2, 3, 3, 0, 4, 0, 1, 1, 2},
        {3, 3, 4, 4, 0, 1, 1, 2, 2},
        {3, 4, 4, 0, 1, 0, 2, 2, 3},
        {4, 4, 0, 1, 1, 2, 0, 3, 3},
        {4, 0, 1, 1, 2, 2, 3, 0, 4},
        {0, 1, 1, 2, 2, 3, 3, 4, 0}}},
      {3,
       {{1, 3, 2, 2, 1, 2, 2, 2, 1},
        {2, 1, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 1, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 1, 2}},
       {{0, 1, 0, 2, 3, 3, 4, 4, 2},
        {1, 0, 2, 3, 3, 4, 4, 1, 1},
        {0, 2, 0, 3, 4, 4, 1, 1, 2},
        {2, 3, 3, 0, 0, 1, 1, 2, 4},
        {3, 3, 4, 0, 0, 1, 2, 2, 4},
        {3, 4, 4, 1, 1, 0, 2, 0, 3},
        {4, 4, 1, 1, 2, 2, 0, 3, 0},
        {4, 1, 1, 2, 2, 0, 3, 0, 3},
        {2, 1, 2, 4, 4, 3, 0, 3, 0}}},
      {4,
       {{1, 2, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 1, 2, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 2, 1, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 2, 1, 2}},
       {{0, 1, 2, 2, 3, 3, 4, 4, 0, 0},
        {1, 0, 2, 3, 3, 4, 4, 0, 0, 1},
        {2, 2, 0, 3, 4, 4, 0, 0, 1, 1},
        {2, 3, 3, 0, 4, 0, 0, 1, 1, 2},
        {3, 3, 4, 4, 0, 0, 1, 1, 2, 2},
        {3, 4, 4, 0, 0, 0, 1, 2, 2, 3},
        {4, 4, 0, 0, 1, 1, 0, 2, 3, 3},
        {4, 0, 0, 1, 1, 2, 2, 0, 3, 4},
        {0, 0, 1, 1, 2, 2, 3, 3, 0, 4},
        {0, 1, 1, 2, 2, 3, 3, 4, 4, 0}}},
      {5,
       {{1, 3, 2, 2, 2, 1, 2, 2, 2, 1},
        {2, 1, 2, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 2, 1, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 2, 1, 2}},
       {{0, 1, 0, 2, 3, 3, 4, 4, 0, 2},
        {1, 0, 2, 3, 3, 4, 4, 0, 1, 1},
        {0, 2, 0, 3, 4, 4, 0, 1, 1, 2},
        {2, 3, 3, 0, 0, 0, 1, 1, 2, 4},
        {3, 3, 4, 0, 0, 1, 1, 2, 2, 4},
        {3, 4, 4, 0, 1, 0, 2, 2, 3, 0},
        {4, 4, 0, 1, 1, 2, 0, 0, 3, 3},
        {4, 0, 1, 1, 2, 2, 0, 0, 4, 3},
        {0, 1, 1, 2, 2, 3, 3, 4, 0, 0},
        {2, 1, 2, 4, 4, 0, 3, 3, 0, 0}}},
      {6,
       {{1, 2, 2, 2, 3, 1, 2, 2, 2, 1},
        {2, 1, 2, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 2, 1, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 2, 1, 2}},
       {{0, 1, 0, 2, 3, 3, 4, 4, 0, 2},
        {1, 0, 2, 0, 3, 4, 4, 0, 1, 3},
        {0, 2, 0, 3, 4, 4, 0, 1, 1, 2},
        {2, 0, 3, 0, 4, 0, 1, 1, 2, 3},
        {3, 3, 4, 4, 0, 1, 1, 2, 2, 1},
        {3, 4, 4, 0, 1, 0, 2, 2, 3, 0},
        {4, 4, 0, 1, 1, 2, 0, 3, 3, 0},
        {4, 0, 1, 1, 2, 2, 3, 0, 0, 4},
        {0, 1, 1, 2, 2, 3, 3, 0, 0, 4},
        {2, 3, 2, 3, 1, 0, 0, 4, 4, 0}}},
      {7,
       {{1, 4, 2, 2, 1, 2, 2, 2, 1, 1},
        {2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 1, 0, 0, 3, 3, 4, 4, 2, 2},
        {1, 0, 2, 3, 3, 4, 4, 1, 1, 1},
        {0, 2, 0, 3, 0, 4, 1, 1, 2, 4},
        {0, 3, 3, 0, 0, 1, 1, 2, 4, 2},
        {3, 3, 0, 0, 0, 1, 2, 2, 4, 4},
        {3, 4, 4, 1, 1, 0, 2, 0, 3, 0},
        {4, 4, 1, 1, 2, 2, 0, 0, 0, 3},
        {4, 1, 1, 2, 2, 0, 0, 0, 3, 3},
        {2, 1, 2, 4, 4, 3, 0, 3, 0, 0},
        {2, 1, 4, 2, 4, 0, 3, 3, 0, 0}}},
      {8,
       {{1, 3, 2, 2, 1, 3, 2, 2, 1, 1},
        {2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 1, 0, 2, 0, 3, 4, 4, 2, 3},
        {1, 0, 0, 3, 3, 4, 4, 1, 1, 2},
        {0, 0, 0, 3, 4, 4, 1, 1, 2, 2},
        {2, 3, 3, 0, 0, 1, 1, 2, 0, 4},
        {0, 3, 4, 0, 0, 1, 2, 2, 4, 3},
        {3, 4, 4, 1, 1, 0, 2, 0, 3, 1},
        {4, 4, 1, 1, 2, 2, 0, 3, 0, 0},
        {4, 1, 1, 2, 2, 0, 3, 0, 3, 0},
        {2, 1, 2, 0, 4, 3, 0, 3, 0, 4},
        {3, 2, 2, 4, 3, 1, 0, 0, 4, 0}}},
      {9,
       {{1, 3, 3, 2, 1, 2, 2, 2, 1, 1},
        {2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 2, 1, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 1, 0, 0, 3, 3, 4, 4, 2, 2},
        {1, 0, 2, 3, 3, 0, 4, 1, 1, 4},
        {0, 2, 0, 3, 4, 4, 1, 1, 2, 1},
        {0, 3, 3, 0, 0, 1, 1, 2, 4, 2},
        {3, 3, 4, 0, 0, 1, 2, 2, 4, 0},
        {3, 0, 4, 1, 1, 0, 2, 0, 3, 4},
        {4, 4, 1, 1, 2, 2, 0, 0, 0, 3},
        {4, 1, 1, 2, 2, 0, 0, 0, 3, 3},
        {2, 1, 2, 4, 4, 3, 0, 3, 0, 0},
        {2, 4, 1, 2, 0, 4, 3, 3, 0, 0}}},
      {10,
       {{1, 3, 2, 2, 1, 2, 2, 2, 1, 2},
        {2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 3, 1, 2, 2, 2, 1, 2, 2, 1},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 1, 0, 2, 3, 3, 4, 0, 2, 4},
        {1, 0, 2, 3, 3, 4, 4, 1, 1, 3},
        {0, 2, 0, 3, 4, 4, 1, 1, 2, 0},
        {2, 3, 3, 0, 0, 0, 1, 2, 4, 1},
        {3, 3, 4, 0, 0, 1, 0, 2, 4, 2},
        {3, 4, 4, 0, 1, 0, 2, 0, 3, 1},
        {4, 4, 1, 1, 0, 2, 0, 3, 0, 2},
        {0, 1, 1, 2, 2, 0, 3, 0, 3, 4},
        {2, 1, 2, 4, 4, 3, 0, 3, 0, 0},
        {4, 3, 0, 1, 2, 1, 2, 4, 0, 0}}},
      {11,
       {{1, 3, 2, 2, 1, 2, 2, 2, 1, 2},
        {3, 1, 2, 2, 2, 1, 2, 2, 2, 1},
        {2, 2, 1, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 1, 0, 2, 3, 3, 4, 4, 2, 2},
        {1, 0, 2, 3, 3, 4, 4, 1, 1, 0},
        {0, 2, 0, 3, 0, 4, 1, 1, 2, 4},
        {2, 3, 3, 0, 0, 0, 1, 2, 4, 1},
        {3, 3, 0, 0, 0, 1, 2, 2, 4, 4},
        {3, 4, 4, 0, 1, 0, 2, 0, 3, 1},
        {4, 4, 1, 1, 2, 2, 0, 0, 0, 3},
        {4, 1, 1, 2, 2, 0, 0, 0, 3, 3},
        {2, 1, 2, 4, 4, 3, 0, 3, 0, 0},
        {2, 0, 4, 1, 4, 1, 3, 3, 0, 0}}},
      {12,
       {{1, 3, 2, 2, 1, 2, 2, 2, 1, 2},
        {2, 1, 3, 2, 2, 1, 2, 2, 2, 1},
        {2, 2, 1, 2, 2, 2, 1, 2, 2, 2},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 0, 0, 2, 3, 3, 4, 4, 2, 1},
        {0, 0, 2, 3, 3, 4, 4, 1, 1, 1},
        {0, 2, 0, 3, 4, 4, 1, 1, 2, 2},
        {2, 3, 3, 0, 0, 1, 1, 2, 0, 4},
        {3, 3, 4, 0, 0, 1, 2, 2, 4, 0},
        {3, 4, 4, 1, 1, 0, 2, 0, 3, 0},
        {4, 4, 1, 1, 2, 2, 0, 0, 0, 3},
        {4, 1, 1, 2, 2, 0, 0, 0, 3, 3},
        {2, 1, 2, 0, 4, 3, 0, 3, 0, 4},
        {1, 1, 2, 4, 0, 0, 3, 3, 4, 0}}},
      {13,
       {{1, 3, 2, 2, 1, 2, 2, 2, 1, 2},
        {2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 2, 1, 2, 2, 3, 1, 2, 2, 1},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 0, 0, 2, 3, 3, 4, 4, 2, 1},
        {0, 0, 2, 3, 3, 4, 4, 1, 1, 1},
        {0, 2, 0, 3, 4, 4, 1, 1, 2, 0},
        {2, 3, 3, 0, 0, 1, 1, 2, 0, 4},
        {3, 3, 4, 0, 0, 1, 0, 2, 4, 2},
        {3, 4, 4, 1, 1, 0, 2, 0, 3, 3},
        {4, 4, 1, 1, 0, 2, 0, 3, 0, 2},
        {4, 1, 1, 2, 2, 0, 3, 0, 3, 0},
        {2, 1, 2, 0, 4, 3, 0, 3, 0, 4},
        {1, 1, 0, 4, 2, 3, 2, 0, 4, 0}}},
      {14,
       {{1, 3, 2, 2, 1, 2, 2, 2, 1, 2},
        {2, 1, 2, 2, 2, 1, 2, 2, 2, 2},
        {2, 2, 1, 3, 2, 2, 1, 2, 2, 1},
        {2, 2, 2, 1, 2, 2, 2, 1, 2, 2}},
       {{0, 0, 0, 2, 3, 3, 4, 4, 2, 1},
        {0, 0, 2, 3, 3, 4, 4, 1, 1, 1},
        {0, 2, 0, 3, 4, 0, 1, 1, 2, 4},
        {2, 3, 3, 0, 0, 1, 1, 2, 4, 3},
        {3, 3, 4, 0, 0, 1, 0, 2, 4, 2},
        {3, 4, 0, 1, 1, 0, 2, 0, 3, 4},
        {4, 4, 1, 1, 0, 2, 0, 3, 0, 2},
        {4, 1, 1, 2, 2, 0, 3, 0, 3, 0},
        {2, 1, 2, 4, 4, 3, 0, 3, 0, 0},
        {1, 1, 4, 3, 2, 4, 2, 0, 0, 0}}},
  };
  return data;
}

}  // namespace

const std::vector<TabulatedFixture>& tabulated_fixtures() {
  static const std::vector<TabulatedFixture> fixtures = [] {
    std::vector<TabulatedFixture> out;
    for (const auto& raw : raw_fixtures()) {
      const int n = static_cast<int>(raw.adjacency.size());
      TabulatedFixture f;
      f.case_number = raw.case_number;
      f.matrix = DegreeMatrix(raw.matrix);
      f.realization = ColoredGraph(n);
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          const int c = raw.adjacency[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
          if (c != raw.adjacency[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
            throw LemmaViolation("fixture adjacency is not symmetric");
          if (c > 0) f.realization.add_edge(u, v, c);
        }
      }
      f.canonical = canonical_form(f.matrix);
      out.push_back(std::move(f));
    }
    return out;
  }();
  return fixtures;
}

}  // namespace catpack
