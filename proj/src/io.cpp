#include "catpack/io.hpp"

#include <array>
#include <sstream>

#include "catpack/error.hpp"

namespace catpack {

namespace {

std::vector<std::vector<int>> parse_int_rows(const std::string& text) {
  std::vector<std::vector<int>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream in(line);
    std::vector<int> row;
    std::string tok;
    while (in >> tok) {
      std::size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw FormatError("not an integer: '" + tok + "'");
      }
      if (used != tok.size()) throw FormatError("not an integer: '" + tok + "'");
      row.push_back(v);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  if (rows.empty()) throw FormatError("empty input");
  return rows;
}

bool looks_like_json(const std::string& s) {
  const auto p = s.find_first_not_of(" \t\r\n");
  return p != std::string::npos && (s[p] == '{' || s[p] == '[');
}

Json parse_json(const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

// Colorblind-safe qualitative palette; colors past its end wrap around.
constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

}  // namespace

Json matrix_to_json(const DegreeMatrix& m) {
  Json j;
  j["rows"] = m.rows();
  return j;
}

DegreeMatrix matrix_from_json(const Json& j) {
  try {
    const Json& rows = j.is_object() ? j.at("rows") : j;
    if (!rows.is_array() || rows.empty()) throw FormatError("matrix needs a non-empty array of rows");
    auto data = rows.get<std::vector<std::vector<int>>>();
    return DegreeMatrix(data);
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad matrix JSON: ") + e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

Json graph_to_json(const ColoredGraph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({{"u", e.u}, {"v", e.v}, {"color", e.color}});
  j["edges"] = std::move(edges);
  return j;
}

ColoredGraph graph_from_json(const Json& j) {
  try {
    const int n = j.at("n").get<int>();
    if (n < 0) throw FormatError("negative vertex count");
    ColoredGraph g(n);
    for (const auto& e : j.at("edges")) {
      const int u = e.at("u").get<int>();
      const int v = e.at("v").get<int>();
      const int c = e.at("color").get<int>();
      if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge endpoint out of range");
      g.add_edge(u, v, c);
    }
    return g;
  } catch (const Json::exception& e) {
    throw FormatError(std::string("bad graph JSON: ") + e.what());
  } catch (const ParallelEdge& e) {
    throw FormatError(e.what());
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

DegreeMatrix matrix_from_text(const std::string& text) {
  try {
    return DegreeMatrix(parse_int_rows(text));
  } catch (const PreconditionError& e) {
    throw FormatError(e.what());
  }
}

ColoredGraph graph_from_adjacency_text(const std::string& text) {
  const auto rows = parse_int_rows(text);
  const int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw FormatError("adjacency table is not square");
  ColoredGraph g(n);
  for (int u = 0; u < n; ++u) {
    if (rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(u)] != 0) throw FormatError("nonzero diagonal");
    for (int v = u + 1; v < n; ++v) {
      const int c = rows[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
      if (c != rows[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)]) throw FormatError("adjacency table is not symmetric");
      if (c < 0) throw FormatError("negative color");
      if (c > 0) g.add_edge(u, v, c);
    }
  }
  return g;
}

std::string adjacency_text(const ColoredGraph& g) {
  std::string out;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (v > 0) out += ' ';
      out += std::to_string(g.color_of(u, v));
    }
    out += '\n';
  }
  return out;
}

DegreeMatrix parse_matrix(const std::string& input) {
  return looks_like_json(input) ? matrix_from_json(parse_json(input)) : matrix_from_text(input);
}

ColoredGraph parse_graph(const std::string& input) {
  return looks_like_json(input) ? graph_from_json(parse_json(input)) : graph_from_adjacency_text(input);
}

Json trace_to_json(const ConstructionTrace& t) {
  Json j;
  j["base"] = t.base;
  Json steps = Json::array();
  for (const auto& s : t.steps) steps.push_back({{"removed", s.removed}, {"row", s.row}, {"target", s.target}});
  j["steps"] = std::move(steps);
  j["rainbow_fallbacks"] = t.rainbow_fallbacks;
  j["notes"] = t.notes;
  return j;
}

Json outcome_to_json(const RealizationOutcome& o, bool with_trace) {
  Json j;
  if (const auto* e = std::get_if<Exists>(&o)) {
    j["status"] = "exists";
    j["graph"] = graph_to_json(e->graph);
    if (with_trace) j["trace"] = trace_to_json(e->trace);
  } else if (const auto* ne = std::get_if<NotExists>(&o)) {
    j["status"] = "not_exists";
    j["condition"] = ne->condition;
    j["detail"] = ne->detail;
  } else {
    j["status"] = "unknown";
    j["reason"] = std::get<Unknown>(o).reason;
  }
  return j;
}

std::string to_dot(const ColoredGraph& g) {
  std::ostringstream out;
  out << "graph realization {\n";
  out << "  node [shape=circle];\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << " [label=\"" << v + 1 << "\"];\n";
  for (const auto& e : g.edges()) {
    const char* hue = kPalette[static_cast<std::size_t>(e.color - 1) % kPalette.size()];
    out << "  " << e.u << " -- " << e.v << " [color=\"" << hue << "\", label=\"" << e.color << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace catpack
