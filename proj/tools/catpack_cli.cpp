#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "catpack/dispatch.hpp"
#include "catpack/error.hpp"
#include "catpack/graphicality.hpp"
#include "catpack/io.hpp"
#include "catpack/oracle.hpp"
#include "catpack/two_trees.hpp"

using namespace catpack;

namespace {

enum Exit { kOk = 0, kNotExists = 1, kUnknown = 2, kInputError = 3 };

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
}

int exit_for(const RealizationOutcome& o) {
  if (is_exists(o)) return kOk;
  return is_not_exists(o) ? kNotExists : kUnknown;
}

std::chrono::milliseconds default_budget() {
  if (const char* env = std::getenv("CATPACK_TIME_BUDGET_MS")) {
    try {
      return std::chrono::milliseconds(std::stoll(env));
    } catch (const std::exception&) {
      throw FormatError("CATPACK_TIME_BUDGET_MS is not an integer");
    }
  }
  return SearchLimits{}.time_budget;
}

struct LimitFlags {
  long long time_ms = -1;
  unsigned long long max_nodes = SearchLimits{}.max_nodes;

  SearchLimits resolve() const {
    SearchLimits l;
    l.max_nodes = max_nodes;
    l.time_budget = time_ms >= 0 ? std::chrono::milliseconds(time_ms) : default_budget();
    return l;
  }
};

void add_limit_flags(CLI::App* cmd, LimitFlags& f) {
  cmd->add_option("--time-ms", f.time_ms, "oracle time budget (default: $CATPACK_TIME_BUDGET_MS or 60000)");
  cmd->add_option("--max-nodes", f.max_nodes, "oracle node budget");
}

Json check_report(const DegreeMatrix& m) {
  const ValidationReport r = validate_matrix(m, true);
  Json rows = Json::array();
  for (const auto& s : r.rows) rows.push_back({{"sum", s.sum}, {"leaves", s.leaves}, {"tree", s.tree}, {"path", s.path}});
  const auto eg = erdos_gallai(column_sums(m));
  return Json{{"k", m.k()},
              {"n", m.n()},
              {"rows", rows},
              {"tree_matrix", r.tree_matrix},
              {"no_common_leaves", r.no_common_leaves},
              {"common_leaf_columns", r.common_leaf_columns},
              {"column_sums_graphical", eg.graphical},
              {"eligible",
               {{"single", r.eligible_single},
                {"walecki", r.eligible_walecki},
                {"two_trees", r.eligible_two_trees},
                {"k_le_4", r.eligible_k_le_4},
                {"large_n", r.eligible_large_n}}},
              {"route", route(m)}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge-disjoint caterpillar realizations of tree degree matrices"};
  app.require_subcommand(1);

  std::string input;
  std::string output;
  LimitFlags limits;

  auto* check = app.add_subcommand("check", "validate a matrix and report which constructors apply");
  check->add_option("input", input, "matrix file (JSON or text; '-' for stdin)");

  auto* check2 = app.add_subcommand("check2", "the three two-tree conditions with witnesses");
  check2->add_option("input", input, "matrix file");

  bool force_large = false;
  bool oracle_base = false;
  std::string dot_path;
  bool with_trace = false;
  auto* realize_cmd = app.add_subcommand("realize", "construct a realization");
  realize_cmd->add_option("input", input, "matrix file");
  realize_cmd->add_option("-o,--output", output, "result JSON path");
  realize_cmd->add_flag("--large", force_large, "use the large-n construction");
  realize_cmd->add_flag("--oracle-base", oracle_base, "let the exhaustive search realize unresolved bases");
  realize_cmd->add_option("--dot", dot_path, "also write the graph as DOT");
  realize_cmd->add_flag("--trace", with_trace, "include the construction trace");
  add_limit_flags(realize_cmd, limits);

  std::string graph_path;
  auto* verify = app.add_subcommand("verify", "check a graph against a matrix");
  verify->add_option("matrix", input, "matrix file")->required();
  verify->add_option("graph", graph_path, "graph file, or a realize result ('-' for stdin)")->required();

  auto* oracle = app.add_subcommand("oracle", "exhaustive search");
  oracle->add_option("input", input, "matrix file");
  oracle->add_option("-o,--output", output, "result JSON path");
  add_limit_flags(oracle, limits);

  int k = 0;
  int n = 0;
  bool allow_common = false;
  auto* enumerate = app.add_subcommand("enumerate", "canonical tree matrices, one JSON object per line");
  enumerate->add_option("-k", k, "rows")->required();
  enumerate->add_option("-n", n, "columns")->required();
  enumerate->add_flag("--allow-common-leaves", allow_common, "include matrices with common leaves");
  enumerate->add_option("-o,--output", output, "output path");

  std::uint64_t seed = 0;
  int hub = -1;
  double hub_weight = 0.0;
  auto* gen = app.add_subcommand("gen", "random tree matrix");
  gen->add_option("-k", k, "rows")->required();
  gen->add_option("-n", n, "columns")->required();
  gen->add_option("--seed", seed, "RNG seed");
  gen->add_flag("--allow-common-leaves", allow_common, "leaves may share columns");
  gen->add_option("--hub", hub, "column that attracts surplus degree");
  gen->add_option("--hub-weight", hub_weight, "probability a surplus unit goes to the hub")->check(CLI::Range(0.0, 1.0));
  gen->add_option("-o,--output", output, "output path");

  auto* dot = app.add_subcommand("export-dot", "graph (or realize result) to DOT");
  dot->add_option("input", input, "graph file");
  dot->add_option("-o,--output", output, "output path");

  auto* graphical = app.add_subcommand("check-graphical", "Erdős–Gallai on a JSON list of degrees");
  graphical->add_option("input", input, "JSON array file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*check) {
      const auto m = parse_matrix(read_input(input));
      const Json r = check_report(m);
      std::cout << r.dump(2) << '\n';
      return r["tree_matrix"].get<bool>() ? kOk : kNotExists;
    }
    if (*check2) {
      const auto m = parse_matrix(read_input(input));
      if (m.k() != 2) throw FormatError("check2 needs exactly two rows");
      const auto c = check_two_tree_conditions(m);
      Json r{{"condition1", c.cond1},
             {"condition2", c.cond2},
             {"condition3", c.cond3},
             {"d_max", c.d_max},
             {"S", c.S},
             {"all", c.all()}};
      if (!c.all()) r["witness"] = c.witness();
      std::cout << r.dump(2) << '\n';
      if (!c.all()) std::cerr << c.witness() << '\n';
      return c.all() ? kOk : kNotExists;
    }
    if (*realize_cmd) {
      const auto m = parse_matrix(read_input(input));
      DispatchOptions opts;
      opts.force_large = force_large;
      opts.oracle_base = oracle_base;
      opts.limits = limits.resolve();
      if (force_large && (m.k() < 4 || m.has_common_leaves()))
        throw FormatError("--large needs k >= 4 and rows without common leaves");
      const auto o = realize(m, opts);
      if (const auto* e = std::get_if<Exists>(&o)) {
        const auto v = verify_realization(e->graph, m);
        if (!v) throw LemmaViolation("constructed graph failed verification: " + v.violation);
        if (!dot_path.empty()) write_output(dot_path, to_dot(e->graph));
      }
      write_output(output, outcome_to_json(o, with_trace).dump(2) + "\n");
      return exit_for(o);
    }
    if (*verify) {
      const auto m = parse_matrix(read_input(input));
      const std::string text = read_input(graph_path);
      ColoredGraph g;
      const auto p = text.find_first_not_of(" \t\r\n");
      if (p != std::string::npos && text[p] == '{') {
        Json j;
        try {
          j = Json::parse(text);
        } catch (const Json::exception& e) {
          throw FormatError(std::string("malformed JSON: ") + e.what());
        }
        if (j.contains("status")) {
          if (j["status"] != "exists") throw FormatError("result holds no graph (status " + j["status"].dump() + ")");
          g = graph_from_json(j.at("graph"));
        } else {
          g = graph_from_json(j);
        }
      } else {
        g = parse_graph(text);
      }
      const auto v = verify_realization(g, m);
      std::cout << Json{{"ok", v.ok}, {"violation", v.violation}}.dump(2) << '\n';
      return v ? kOk : kNotExists;
    }
    if (*oracle) {
      const auto m = parse_matrix(read_input(input));
      const auto o = exhaustive_realize(m, limits.resolve());
      write_output(output, outcome_to_json(o, false).dump(2) + "\n");
      return exit_for(o);
    }
    if (*enumerate) {
      std::string out;
      for (const auto& m : enumerate_matrices(k, n, !allow_common)) out += matrix_to_json(m).dump() + "\n";
      write_output(output, out);
      return kOk;
    }
    if (*gen) {
      RandomMatrixOptions o;
      o.allow_common_leaves = allow_common;
      o.hub = hub;
      o.hub_weight = hub_weight;
      write_output(output, matrix_to_json(random_matrix(k, n, seed, o)).dump() + "\n");
      return kOk;
    }
    if (*dot) {
      const std::string text = read_input(input);
      ColoredGraph g;
      const auto p = text.find_first_not_of(" \t\r\n");
      if (p != std::string::npos && text[p] == '{') {
        const Json j = Json::parse(text, nullptr, false);
        if (j.is_discarded()) throw FormatError("malformed JSON");
        g = graph_from_json(j.contains("graph") ? j["graph"] : j);
      } else {
        g = parse_graph(text);
      }
      write_output(output, to_dot(g));
      return kOk;
    }
    if (*graphical) {
      const Json j = Json::parse(read_input(input), nullptr, false);
      if (j.is_discarded() || !j.is_array()) throw FormatError("expected a JSON array of integers");
      std::vector<int> seq;
      try {
        seq = j.get<std::vector<int>>();
      } catch (const Json::exception& e) {
        throw FormatError(e.what());
      }
      for (int d : seq)
        if (d < 0) throw FormatError("negative degree");
      const auto r = erdos_gallai(seq);
      Json out{{"graphical", r.graphical}, {"parity_ok", r.parity_ok}};
      if (r.first_violation_s) out["first_violation"] = {{"s", *r.first_violation_s}, {"lhs", r.lhs}, {"rhs", r.rhs}};
      std::cout << out.dump(2) << '\n';
      return r.graphical ? kOk : kNotExists;
    }
  } catch (const FormatError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
