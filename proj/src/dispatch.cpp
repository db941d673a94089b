#include "catpack/dispatch.hpp"

#include "catpack/engine.hpp"
#include "catpack/error.hpp"
#include "catpack/large_n.hpp"
#include "catpack/oracle.hpp"
#include "catpack/two_trees.hpp"

namespace catpack {

namespace {

// Beyond this the oracle is not worth attempting on common-leaf inputs.
constexpr int kOracleMaxN = 12;

}  // namespace

std::string route(const DegreeMatrix& m, const DispatchOptions& options) {
  if (!m.is_tree_matrix()) return "reject";
  if (m.k() == 1) return "single";
  if (m.k() == 2) return "two-trees";
  if (options.force_large) return "large-n";
  if (m.has_common_leaves()) return m.n() <= kOracleMaxN ? "oracle" : "unsupported";
  if (m.k() <= 4) return "k<=4";
  if (large_n_applicable(m)) return "large-n";
  return "generic";
}

RealizationOutcome realize(const DegreeMatrix& m, const DispatchOptions& options) {
  const std::string r = route(m, options);
  if (r == "reject") {
    for (int i = 0; i < m.k(); ++i)
      if (!m.is_tree_row(i))
        return NotExists{"tree rows", "row " + std::to_string(i + 1) + " has a zero entry or does not sum to " +
                                          std::to_string(2 * m.n() - 2)};
  }
  if (r == "single") {
    const auto row = m.row(0);
    return make_exists(realize_single_caterpillar(row), m, ConstructionTrace{"single", {}, 0, {}});
  }
  if (r == "two-trees") return realize_two(m);
  if (r == "large-n") {
    if (m.has_common_leaves()) throw PreconditionError("the large-n construction needs rows without common leaves");
    return realize_large(m);
  }
  if (r == "oracle") return exhaustive_realize(m, options.limits);
  if (r == "unsupported") return Unknown{"common leaves with three or more rows and n > 12"};
  if (r == "k<=4") return realize_k_le_4(m);

  BaseProvider provider;
  if (options.oracle_base) {
    provider = [&options](const DegreeMatrix& base) -> std::optional<ColoredGraph> {
      auto o = exhaustive_realize(base, options.limits);
      if (auto* e = std::get_if<Exists>(&o)) return std::move(e->graph);
      return std::nullopt;
    };
  }
  return realize_generic_conditional(m, provider);
}

}  // namespace catpack
