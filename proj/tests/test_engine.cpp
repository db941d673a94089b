#include <doctest.h>

#include <random>

#include "catpack/engine.hpp"
#include "catpack/error.hpp"
#include "catpack/oracle.hpp"
#include "catpack/rainbow.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace catpack;
using testing::rows;

namespace {

const DegreeMatrix kSmall = rows({{3, 1, 2, 2, 1, 1}, {1, 2, 2, 1, 2, 2}});

int surplus(const DegreeMatrix& m) {
  int s = 0;
  for (int i = 0; i < m.k(); ++i)
    for (int j = 0; j < m.n(); ++j) s += std::max(m(i, j) - 2, 0);
  return s;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("reducible column") {
  const auto step = find_reducible_column(testing::fixture(3).matrix);
  REQUIRE(step);
  CHECK(*step == ReductionStep{0, 0, 1});

  const auto small = find_reducible_column(kSmall);
  REQUIRE(small);
  CHECK(*small == ReductionStep{1, 0, 0});

  CHECK_FALSE(find_reducible_column(testing::fixture(1).matrix));
}

TEST_CASE("reduce") {
  const auto r = reduce(kSmall, ReductionStep{4, 0, 0});
  CHECK(r == rows({{2, 1, 2, 2, 1}, {1, 2, 2, 1, 2}}));
  CHECK(r.all_rows_are_paths());

  const auto& f3 = testing::fixture(3).matrix;
  const auto r3 = reduce(f3, ReductionStep{0, 0, 1});
  CHECK(r3.k() == 4);
  CHECK(r3.n() == 8);
  CHECK(r3.is_tree_matrix());
  CHECK_FALSE(r3.has_common_leaves());

  CHECK_THROWS_AS(reduce(kSmall, ReductionStep{4, 0, 2}), PreconditionError);
}

TEST_CASE("extend by one vertex") {
  // Color 1: 2-4-1-3-5, color 2: 1-5-2-3-4 (1-based).
  const auto g = testing::graph(5, {{2, 4, 1}, {4, 1, 1}, {1, 3, 1}, {3, 5, 1}, {1, 5, 2}, {5, 2, 2}, {2, 3, 2}, {3, 4, 2}});
  const auto reduced = rows({{2, 1, 2, 2, 1}, {1, 2, 2, 1, 2}});
  REQUIRE(verify_realization(g, reduced));
  RainbowMatching rm;
  rm.avoided = 0;
  rm.edges = {{2, 1, 2}};
  const auto h = extend_realization(g, ReductionStep{5, 0, 0}, rm);
  CHECK(h.color_of(5, 0) == 1);
  CHECK(h.color_of(5, 1) == 2);
  CHECK(h.color_of(5, 2) == 2);
  CHECK_FALSE(h.has_edge(1, 2));
  CHECK(verify_realization(h, kSmall));

  rm.edges = {{2, 0, 4}};
  CHECK_THROWS_AS(extend_realization(g, ReductionStep{5, 0, 0}, rm), PreconditionError);
}

TEST_CASE("extend with an empty matching adds a leaf") {
  const auto g = testing::graph(2, {{1, 2, 1}});
  RainbowMatching rm;
  rm.avoided = 0;
  const auto h = extend_realization(g, ReductionStep{2, 0, 0}, rm);
  CHECK(h.color_of(0, 2) == 1);
  CHECK(verify_realization(h, rows({{2, 1, 1}})));
}

TEST_CASE("single caterpillar") {
  CHECK(realize_single_caterpillar(std::vector<int>{1, 1}).has_edge(0, 1));
  const auto star = realize_single_caterpillar(std::vector<int>{3, 1, 1, 1});
  CHECK(star.degree(0) == 3);
  const std::vector<int> row{1, 3, 2, 2, 1, 2, 2, 2, 1};
  const auto g = realize_single_caterpillar(row);
  CHECK(oracle::check_caterpillar_realization(g, DegreeMatrix({row})).empty());
  CHECK(caterpillar_view(g, 1).backbone.size() == 6);
  CHECK_THROWS_AS(realize_single_caterpillar(std::vector<int>{2, 2}), PreconditionError);
}

TEST_CASE("three and four rows") {
  const auto o7 = realize_k_le_4(testing::fixture(7).matrix);
  REQUIRE(is_exists(o7));
  CHECK(oracle::check_caterpillar_realization(std::get<Exists>(o7).graph, testing::fixture(7).matrix).empty());

  const auto o2 = realize_k_le_4(kSmall);
  REQUIRE(is_exists(o2));
  CHECK(std::get<Exists>(o2).trace.steps.size() == 1);

  const auto paths3 = rows({{1, 1, 2, 2, 2, 2}, {2, 2, 1, 1, 2, 2}, {2, 2, 2, 2, 1, 1}});
  const auto o3 = realize_k_le_4(paths3);
  REQUIRE(is_exists(o3));
  CHECK(std::get<Exists>(o3).trace.base == "walecki");
}

TEST_CASE("random small instances against the brute checker") {
  for (int k = 2; k <= 4; ++k)
    for (int n = 2 * k; n <= 2 * k + 8; ++n)
      for (std::uint64_t seed = 0; seed < 15; ++seed) {
        const auto m = random_matrix(k, n, seed * 131 + static_cast<std::uint64_t>(n), false);
        const auto o = realize_k_le_4(m);
        REQUIRE(is_exists(o));
        CHECK(oracle::check_caterpillar_realization(std::get<Exists>(o).graph, m).empty());
      }
}

TEST_CASE("reduction chains shrink") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    auto m = random_matrix(4, 30, seed, false);
    while (auto step = find_reducible_column(m)) {
      const auto next = reduce(m, *step);
      CHECK(next.n() == m.n() - 1);
      CHECK(surplus(next) <= surplus(m));
      CHECK(next.is_tree_matrix());
      CHECK_FALSE(next.has_common_leaves());
      m = next;
    }
    CHECK(m.all_rows_are_paths());
  }
}

TEST_CASE("fixture lookup under permutations") {
  std::mt19937_64 rng(14);
  for (const auto& f : tabulated_fixtures()) {
    for (int t = 0; t < 5; ++t) {
      const auto p = testing::shuffled(f.matrix, rng);
      const auto g = fixture_lookup(p);
      REQUIRE(g);
      CHECK(oracle::check_caterpillar_realization(*g, p).empty());
    }
  }
  const auto& f1 = testing::fixture(1);
  CHECK(*fixture_lookup(f1.matrix) == f1.realization);
  CHECK_FALSE(fixture_lookup(random_matrix(4, 11, 1, false)));
}

TEST_CASE("generic driver") {
  const auto m60 = random_matrix(5, 60, 8, false);
  const auto o = realize_generic_conditional(m60);
  if (is_exists(o)) CHECK(verify_realization(std::get<Exists>(o).graph, m60));
  else CHECK(is_unknown(o));

  DegreeMatrix paths(5, 10);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 10; ++j) paths(i, j) = (j == 2 * i || j == 2 * i + 1) ? 1 : 2;
  const auto op = realize_generic_conditional(paths);
  REQUIRE(is_exists(op));
  CHECK(std::get<Exists>(op).trace.base == "walecki");

  // n = 4k - 2 with a non-path row and nothing to fall back on.
  auto base = random_matrix(5, 18, 2, false);
  REQUIRE_FALSE(base.all_rows_are_paths());
  CHECK(is_unknown(realize_generic_conditional(base)));

  const auto provided = realize_generic_conditional(base, [](const DegreeMatrix& b) -> std::optional<ColoredGraph> {
    SearchLimits l;
    l.time_budget = std::chrono::milliseconds(20000);
    auto r = exhaustive_realize(b, l);
    if (is_exists(r)) return std::get<Exists>(r).graph;
    return std::nullopt;
  });
  if (is_exists(provided)) CHECK(verify_realization(std::get<Exists>(provided).graph, base));
}

}  // TEST_SUITE
