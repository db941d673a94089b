#include <doctest.h>

#include <random>
#include <set>

#include "catpack/error.hpp"
#include "catpack/walecki.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace catpack;
using testing::rows;

namespace {

std::set<std::pair<int, int>> edge_set(const std::vector<Vertex>& path) {
  std::set<std::pair<int, int>> out;
  for (std::size_t t = 0; t + 1 < path.size(); ++t) out.emplace(std::min(path[t], path[t + 1]), std::max(path[t], path[t + 1]));
  return out;
}

}  // namespace

TEST_SUITE("walecki") {

TEST_CASE("zigzag ends and disjointness") {
  for (int n = 2; n <= 30; ++n) {
    std::vector<std::set<std::pair<int, int>>> sets;
    for (int i = 0; 2 * (i + 1) <= n; ++i) {
      const auto p = zigzag_path(n, i);
      REQUIRE(static_cast<int>(p.size()) == n);
      CHECK(std::set<int>(p.begin(), p.end()).size() == static_cast<std::size_t>(n));
      CHECK(p.front() == i);
      CHECK(p.back() == (i + (n + 1) / 2) % n);
      const auto e = edge_set(p);
      for (const auto& other : sets)
        for (const auto& x : e) CHECK(other.count(x) == 0);
      sets.push_back(e);
    }
  }
}

TEST_CASE("single edge") {
  const auto g = walecki_pack(rows({{1, 1}}));
  CHECK(g.edge_count() == 1);
  CHECK(g.has_edge(0, 1));
}

TEST_CASE("two colors on four vertices") {
  const auto m = rows({{1, 2, 1, 2}, {2, 1, 2, 1}});
  const auto g = walecki_pack(m);
  CHECK(oracle::check_caterpillar_realization(g, m).empty());
  // Paths 1-2-4-3 and 2-3-1-4.
  CHECK(g.color_of(0, 1) == 1);
  CHECK(g.color_of(1, 3) == 1);
  CHECK(g.color_of(3, 2) == 1);
  CHECK(g.color_of(1, 2) == 2);
  CHECK(g.color_of(2, 0) == 2);
  CHECK(g.color_of(0, 3) == 2);
}

TEST_CASE("path fixture") {
  const auto& f = testing::fixture(1);
  const auto g = walecki_pack(f.matrix);
  CHECK(verify_realization(g, f.matrix));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(walecki_pack(testing::fixture(3).matrix), PreconditionError);
  CHECK_THROWS_AS(walecki_pack(rows({{1, 2, 1}, {1, 2, 1}})), PreconditionError);
  CHECK_THROWS_AS(walecki_pack(rows({{1, 1, 2, 2}, {2, 2, 1, 1}, {2, 1, 2, 1}})), PreconditionError);
}

TEST_CASE("random leaf placements") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const int k = 1 + static_cast<int>(rng() % 6);
    const int n = 2 * k + static_cast<int>(rng() % 15);
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    DegreeMatrix m(k, n);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < n; ++j) m(i, j) = 2;
      m(i, cols[static_cast<std::size_t>(2 * i)]) = 1;
      m(i, cols[static_cast<std::size_t>(2 * i + 1)]) = 1;
    }
    const auto g = walecki_pack(m);
    CHECK(oracle::check_caterpillar_realization(g, m).empty());
  }
}

}  // TEST_SUITE
