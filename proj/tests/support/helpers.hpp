#pragma once

#include <algorithm>
#include <array>
#include <initializer_list>
#include <stdexcept>
#include <numeric>
#include <random>
#include <vector>

#include "catpack/engine.hpp"
#include "catpack/model.hpp"

namespace testing {

inline catpack::DegreeMatrix rows(std::vector<std::vector<int>> r) { return catpack::DegreeMatrix(r); }

inline const catpack::TabulatedFixture& fixture(int case_number) {
  for (const auto& f : catpack::tabulated_fixtures())
    if (f.case_number == case_number) return f;
  throw std::out_of_range("no fixture");
}

inline catpack::DegreeMatrix obstruction_2x11() {
  return rows({{5, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1}, {5, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1}});
}

/// Uniformly random row and column permutation of m.
inline catpack::DegreeMatrix shuffled(const catpack::DegreeMatrix& m, std::mt19937_64& rng) {
  std::vector<int> r(static_cast<std::size_t>(m.k()));
  std::vector<int> c(static_cast<std::size_t>(m.n()));
  std::iota(r.begin(), r.end(), 0);
  std::iota(c.begin(), c.end(), 0);
  std::shuffle(r.begin(), r.end(), rng);
  std::shuffle(c.begin(), c.end(), rng);
  return m.permuted(r, c);
}

/// Graph from 1-based (u, v, color) triples.
inline catpack::ColoredGraph graph(int n, std::initializer_list<std::array<int, 3>> edges) {
  catpack::ColoredGraph g(n);
  for (const auto& e : edges) g.add_edge(e[0] - 1, e[1] - 1, e[2]);
  return g;
}

}  // namespace testing
