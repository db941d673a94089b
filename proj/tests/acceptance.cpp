// One line per acceptance criterion. Exit status is 0 when every criterion
// passes except those listed in kKnownUnattainable, which must fail.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "catpack/dispatch.hpp"
#include "catpack/engine.hpp"
#include "catpack/error.hpp"
#include "catpack/graphicality.hpp"
#include "catpack/large_n.hpp"
#include "catpack/oracle.hpp"
#include "catpack/rainbow.hpp"
#include "catpack/two_trees.hpp"
#include "catpack/walecki.hpp"
#include "support/oracles.hpp"

using namespace catpack;
using Clock = std::chrono::steady_clock;

namespace {

// Criteria expected to fail, with the reason printed alongside.
const std::set<int> kKnownUnattainable = {9};

struct Verdict {
  bool pass = true;
  std::string detail;
};

/// Realizations of matrices without common leaves, for the spine checks.
struct Corpus {
  std::vector<std::pair<DegreeMatrix, ColoredGraph>> items;
  void add(const DegreeMatrix& m, const ColoredGraph& g) {
    if (!m.has_common_leaves()) items.emplace_back(m, g);
  }
};

struct Criterion {
  int id;
  const char* title;
  std::chrono::milliseconds budget;
  std::function<Verdict(Corpus&)> run;
};

std::string str(const DegreeMatrix& m) {
  std::ostringstream out;
  out << m.k() << "x" << m.n() << " [";
  for (int i = 0; i < m.k(); ++i) {
    if (i) out << " / ";
    for (int j = 0; j < m.n(); ++j) out << (j ? "," : "") << m(i, j);
  }
  out << "]";
  return out.str();
}

// Fails unless both the library verifier and the independent checker accept g.
bool sound(const ColoredGraph& g, const DegreeMatrix& m, std::string& why) {
  const auto v = verify_realization(g, m);
  const auto o = oracle::check_caterpillar_realization(g, m);
  if (v && o.empty()) return true;
  why = str(m) + ": " + (v ? o : v.violation);
  return false;
}

// ---------------------------------------------------------------------------

Verdict enumeration_counts(Corpus&) {
  const int expected[] = {1, 2, 11};
  std::set<DegreeMatrix> classes;
  std::ostringstream d;
  bool ok = true;
  for (int n = 8; n <= 10; ++n) {
    const auto got = enumerate_matrices(4, n, true);
    d << "n=" << n << ":" << got.size() << " ";
    ok = ok && static_cast<int>(got.size()) == expected[n - 8];
    classes.insert(got.begin(), got.end());
  }
  std::set<DegreeMatrix> tabulated;
  for (const auto& f : tabulated_fixtures()) tabulated.insert(canonical_form(f.matrix).matrix);
  d << "total " << classes.size() << ", tabulated classes " << (classes == tabulated ? "identical" : "DIFFER");
  return {ok && classes.size() == 14 && classes == tabulated, d.str()};
}

Verdict fixtures_verify(Corpus& corpus) {
  int good = 0;
  std::string why;
  for (const auto& f : tabulated_fixtures()) {
    if (sound(f.realization, f.matrix, why)) ++good;
    corpus.add(f.matrix, f.realization);
  }
  return {good == 14 && tabulated_fixtures().size() == 14, std::to_string(good) + "/14 verify" + (why.empty() ? "" : "; " + why)};
}

Verdict two_row_equivalence(Corpus&) {
  int total = 0;
  int mismatches = 0;
  int unknown = 0;
  int realizable = 0;
  std::string first;
  for (int n = 2; n <= 7; ++n) {
    for (const auto& m : enumerate_matrices(2, n, false)) {
      ++total;
      const bool predicted = check_two_tree_conditions(m).all();
      const auto truth = exhaustive_realize(m);
      if (is_unknown(truth)) {
        ++unknown;
        continue;
      }
      const auto built = realize_two(m);
      std::string why;
      const bool built_ok = is_exists(built) ? sound(std::get<Exists>(built).graph, m, why) : is_not_exists(built);
      realizable += is_exists(truth) ? 1 : 0;
      if (predicted != is_exists(truth) || is_exists(built) != predicted || !built_ok) {
        if (first.empty()) first = "; first mismatch " + str(m) + (why.empty() ? "" : " " + why);
        ++mismatches;
      }
    }
  }
  return {mismatches == 0 && unknown == 0,
          std::to_string(total) + " classes, " + std::to_string(realizable) + " realizable, " + std::to_string(mismatches) +
              " mismatches, " + std::to_string(unknown) + " unknown" + first};
}

Verdict obstruction(Corpus&) {
  const DegreeMatrix m({{5, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1}, {5, 2, 2, 2, 2, 2, 1, 1, 1, 1, 1}});
  const auto c = check_two_tree_conditions(m);
  const bool conds = c.cond1 && c.cond2 && !c.cond3 && c.d_max == 10 && c.S.size() == 5;
  const auto built = realize_two(m);
  SearchLimits generous;
  generous.time_budget = std::chrono::minutes(10);
  generous.max_nodes = 20'000'000'000ULL;
  const auto truth = exhaustive_realize(m, generous);
  std::ostringstream d;
  d << "cond1=" << c.cond1 << " cond2=" << c.cond2 << " cond3=" << c.cond3 << " (" << c.witness() << "); constructor "
    << (is_not_exists(built) ? "NotExists" : "OTHER") << "; exhaustive " << (is_not_exists(truth) ? "NotExists" : is_exists(truth) ? "Exists" : "Unknown");
  return {conds && is_not_exists(built) && is_not_exists(truth), d.str()};
}

Verdict constructor_soundness(Corpus& corpus) {
  constexpr int kPerK = 500;
  constexpr int kMaxN = 100;
  int exists = 0;
  int fallbacks = 0;
  int total = 0;
  std::string why;
  for (int k = 2; k <= 4; ++k) {
    std::mt19937_64 rng(0xacce55 + static_cast<std::uint64_t>(k));
    for (int t = 0; t < kPerK; ++t) {
      ++total;
      const int n = std::uniform_int_distribution<int>(2 * k + 1, kMaxN)(rng);
      RandomMatrixOptions opt;
      if (t % 2 == 1) {
        opt.hub = std::uniform_int_distribution<int>(0, n - 1)(rng);
        opt.hub_weight = std::uniform_real_distribution<double>(0.3, 1.0)(rng);
      }
      const auto m = random_matrix(k, n, rng(), opt);
      try {
        const auto o = realize(m);
        if (!is_exists(o)) {
          if (why.empty()) why = str(m) + " not realized";
          continue;
        }
        const auto& e = std::get<Exists>(o);
        fallbacks += e.trace.rainbow_fallbacks;
        if (sound(e.graph, m, why)) ++exists;
        corpus.add(m, e.graph);
      } catch (const LemmaViolation& err) {
        if (why.empty()) why = str(m) + ": " + err.what();
      }
    }
  }
  return {exists == total, std::to_string(exists) + "/" + std::to_string(total) + " verified; rainbow searches beyond greedy " + std::to_string(fallbacks) +
                               (why.empty() ? "" : "; " + why)};
}

Verdict walecki_sweep(Corpus& corpus) {
  int total = 0;
  int good = 0;
  std::string why;
  auto run = [&](const DegreeMatrix& m, bool keep) {
    ++total;
    const auto g = walecki_pack(m);
    if (sound(g, m, why)) ++good;
    if (keep) corpus.add(m, g);
  };
  for (int k = 1; k <= 8; ++k)
    for (int n = 2 * k; n <= 40; ++n) {
      // Adjacent pairs, and ends half a turn apart.
      DegreeMatrix a(k, n);
      DegreeMatrix z(k, n);
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < n; ++j) {
          a(i, j) = (j == 2 * i || j == 2 * i + 1) ? 1 : 2;
          z(i, j) = (j == i || j == (i + (n + 1) / 2) % n) ? 1 : 2;
        }
      run(a, true);
      run(z, false);
    }
  std::mt19937_64 rng(0x3a1ec);
  for (int t = 0; t < 1000; ++t) {
    const int k = std::uniform_int_distribution<int>(1, 8)(rng);
    const int n = std::uniform_int_distribution<int>(2 * k, 40)(rng);
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    DegreeMatrix m(k, n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = 2;
    for (int i = 0; i < k; ++i) {
      m(i, cols[static_cast<std::size_t>(2 * i)]) = 1;
      m(i, cols[static_cast<std::size_t>(2 * i + 1)]) = 1;
    }
    run(m, t % 10 == 0);
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " verified" + (why.empty() ? "" : "; " + why)};
}

Verdict large_n(Corpus& corpus) {
  int good = 0;
  int total = 0;
  std::size_t max_heavy = 0;
  std::size_t max_medium = 0;
  std::string why;
  const std::pair<int, int> shapes[] = {{5, 400}, {6, 450}};
  for (const auto& [k, n] : shapes) {
    for (int t = 0; t < 10; ++t) {
      ++total;
      RandomMatrixOptions opt;
      if (t % 3 != 0) {
        opt.hub = (37 * t) % n;
        opt.hub_weight = t % 3 == 1 ? 0.6 : 1.0;
      }
      const auto m = random_matrix(k, n, 0x1a46e + static_cast<std::uint64_t>(100 * k + t), opt);
      try {
        const auto census = heavy_vertex_census(m);
        max_heavy = std::max(max_heavy, census.heavy.size());
        max_medium = std::max(max_medium, census.medium.size());
        if (census.heavy.size() > 1 || census.medium.size() > 11) {
          if (why.empty()) why = "census bound exceeded on " + std::to_string(k) + "x" + std::to_string(n);
          continue;
        }
        auto state = phase_one(m);
        if (const auto bad = check_phase_state(state); !bad.empty()) {
          if (why.empty()) why = "phase state: " + bad;
          continue;
        }
        const auto g = phase_two(std::move(state));
        if (sound(g, m, why)) ++good;
        corpus.add(m, g);
      } catch (const LemmaViolation& e) {
        if (why.empty()) why = std::to_string(k) + "x" + std::to_string(n) + ": " + e.what();
      }
    }
  }
  return {good == total, std::to_string(good) + "/" + std::to_string(total) + " verified; max heavy " + std::to_string(max_heavy) +
                             " (<= 1), max medium " + std::to_string(max_medium) + " (<= 11)" + (why.empty() ? "" : "; " + why)};
}

/// Random tree degree sequence from a Prüfer code; `skew` biases entries toward low indices.
std::vector<int> random_tree_row(int n, double skew, std::mt19937_64& rng) {
  std::vector<int> d(static_cast<std::size_t>(n), 1);
  std::uniform_int_distribution<int> any(0, n - 1);
  std::bernoulli_distribution biased(skew);
  for (int t = 0; t + 2 < n; ++t) {
    const int v = biased(rng) ? std::uniform_int_distribution<int>(0, std::min(n - 1, 2))(rng) : any(rng);
    ++d[static_cast<std::size_t>(v)];
  }
  std::shuffle(d.begin(), d.end(), rng);
  return d;
}

Verdict graphicality(Corpus&) {
  // Exhaustive agreement.
  long long sequences = 0;
  long long disagreements = 0;
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> s(static_cast<std::size_t>(n));
    std::function<void(int, int)> go = [&](int i, int cap) {
      if (i == n) {
        ++sequences;
        if (erdos_gallai(s).graphical != havel_hakimi(s)) ++disagreements;
        return;
      }
      for (int v = 0; v <= cap; ++v) {
        s[static_cast<std::size_t>(i)] = v;
        go(i + 1, v);
      }
    };
    go(0, 8);
  }

  std::mt19937_64 rng(0x9a1);
  int k_tree_bad = 0;
  int k_tree_nongraphical = 0;
  for (int t = 0; t < 10'000; ++t) {
    const int k = std::uniform_int_distribution<int>(1, 6)(rng);
    const int n = std::uniform_int_distribution<int>(2, 24)(rng);
    const double skew = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    std::vector<int> f(static_cast<std::size_t>(n), 0);
    for (int r = 0; r < k; ++r) {
      const auto row = random_tree_row(n, skew, rng);
      for (int j = 0; j < n; ++j) f[static_cast<std::size_t>(j)] += row[static_cast<std::size_t>(j)];
    }
    const auto full = erdos_gallai(f);
    if (!full.graphical) ++k_tree_nongraphical;
    const bool prefix_ok = eg_prefix_check(f, 2 * k) == full.graphical;
    const bool index_ok = full.graphical || (full.first_violation_s && *full.first_violation_s < 2 * k);
    if (!prefix_ok || !index_ok) ++k_tree_bad;
  }

  int path_bad = 0;
  int path_nongraphical = 0;
  for (int t = 0; t < 10'000; ++t) {
    const int n = std::uniform_int_distribution<int>(6, 24)(rng);
    const double skew = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
    auto f = random_tree_row(n, skew, rng);
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    std::shuffle(cols.begin(), cols.end(), rng);
    for (int j = 0; j < n; ++j) f[static_cast<std::size_t>(j)] += (j == cols[0] || j == cols[1]) ? 1 : 2;
    const auto full = erdos_gallai(f);
    if (!full.graphical) ++path_nongraphical;
    if (eg_prefix_check(f, 2) != full.graphical) ++path_bad;
  }
  std::ostringstream d;
  d << sequences << " sequences, " << disagreements << " disagreements; k-tree prefix: " << k_tree_bad << " failures ("
    << k_tree_nongraphical << " non-graphical samples); tree+path prefix: " << path_bad << " failures (" << path_nongraphical
    << " non-graphical samples)";
  return {disagreements == 0 && k_tree_bad == 0 && path_bad == 0, d.str()};
}

Verdict spine_bounds(Corpus& corpus) {
  // A 4x11 matrix the rainbow-length statement must also cover.
  const DegreeMatrix witness({{1, 1, 1, 2, 2, 2, 2, 2, 2, 3, 4},
                              {2, 2, 2, 1, 1, 1, 2, 2, 2, 4, 3},
                              {2, 2, 2, 2, 2, 2, 1, 1, 1, 3, 4},
                              {3, 2, 2, 2, 2, 2, 2, 2, 2, 1, 1}});
  if (const auto o = realize(witness); is_exists(o)) corpus.add(witness, std::get<Exists>(o).graph);

  int every = 0;
  int long_spine = 0;
  int integer_form = 0;
  int literal = 0;
  int literal_items = 0;
  int disagreements = 0;
  std::string first_literal;
  for (const auto& [m, g] : corpus.items) {
    const int k = m.k();
    const int n = m.n();
    auto lengths = oracle::spine_lengths(g, k);
    try {
      const auto rep = check_spine_bounds(g, m);
      if (rep.spine_lengths != lengths) ++disagreements;
    } catch (const LemmaViolation&) {
      // Counted below from the independent lengths.
    }
    std::sort(lengths.begin(), lengths.end());
    if (lengths.front() < 2 * k - 1) ++every;
    if (k >= 4 && n >= 2 * k + 2 && lengths[static_cast<std::size_t>(k - 2)] < 2 * k + 1) ++long_spine;
    bool short_here = false;
    for (int l = 1; l <= k - 1; ++l) {
      const int have = lengths[static_cast<std::size_t>(l - 1)];
      if (have < (l - 1) * n / l + 2) ++integer_form;
      // have >= (l-1)n/l + 2, exactly.
      if (static_cast<long long>(have) * l < static_cast<long long>(l - 1) * n + 2LL * l) {
        ++literal;
        short_here = true;
        if (first_literal.empty())
          first_literal = str(m) + " spine #" + std::to_string(l) + " = " + std::to_string(have) + " < " +
                          std::to_string((l - 1) * n) + "/" + std::to_string(l) + " + 2";
      }
    }
    literal_items += short_here ? 1 : 0;
  }
  std::ostringstream d;
  d << corpus.items.size() << " realizations; >=2k-1: " << every << " violations; >=2k+1 among k-1: " << long_spine
    << " violations; floor((l-1)n/l)+2: " << integer_form << " violations; literal ((l-1)/l)n+2: " << literal
    << " violations in " << literal_items << " realizations";
  if (!first_literal.empty()) d << " (e.g. " << first_literal << "; the real-valued bound is false, the integer form holds)";
  if (disagreements) d << "; " << disagreements << " spine-length disagreements with the independent count";
  return {every == 0 && long_spine == 0 && integer_form == 0 && literal == 0 && disagreements == 0, d.str()};
}

Verdict three_rows(Corpus& corpus) {
  int total = 0;
  int both = 0;
  std::string why;
  for (int n = 6; n <= 7; ++n)
    for (const auto& m : enumerate_matrices(3, n, true)) {
      ++total;
      const auto built = realize_k_le_4(m);
      const auto truth = exhaustive_realize(m);
      if (is_exists(built) && is_exists(truth) && sound(std::get<Exists>(built).graph, m, why) &&
          sound(std::get<Exists>(truth).graph, m, why))
        ++both;
      if (is_exists(built)) corpus.add(m, std::get<Exists>(built).graph);
    }
  return {both == total && total > 0,
          std::to_string(both) + "/" + std::to_string(total) + " canonical classes realized by both" + (why.empty() ? "" : "; " + why)};
}

}  // namespace

int main() {
  using std::chrono::milliseconds;
  using std::chrono::minutes;
  using std::chrono::seconds;
  const std::vector<Criterion> criteria = {
      {1, "4-row class counts 1/2/11", minutes(5), enumeration_counts},
      {2, "14 tabulated realizations verify", seconds(1), fixtures_verify},
      {3, "two-row conditions match exhaustive search, n<=7", minutes(10), two_row_equivalence},
      {4, "2x11 obstruction rejected", minutes(10), obstruction},
      {5, "random k=2,3,4 instances realize", minutes(2), constructor_soundness},
      {6, "path packing sweep k<=8, n<=40", minutes(1), walecki_sweep},
      {7, "large-n construction at (5,400), (6,450)", minutes(5), large_n},
      {8, "graphicality tests and prefix properties", minutes(2), graphicality},
      {9, "spine-length bounds on all realizations", minutes(1), spine_bounds},
      {10, "3x6 and 3x7 classes by constructor and oracle", minutes(10), three_rows},
  };

  Corpus corpus;
  bool as_expected = true;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Verdict v;
    try {
      v = c.run(corpus);
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const auto took = std::chrono::duration_cast<milliseconds>(Clock::now() - start);
    if (took > c.budget) {
      v.pass = false;
      v.detail += "; over time budget";
    }
    const bool known = kKnownUnattainable.count(c.id) > 0;
    as_expected = as_expected && (v.pass != known);
    std::printf("criterion %2d: %s  %s | %s | %.2fs of %llds%s\n", c.id, v.pass ? "PASS" : "FAIL", c.title, v.detail.c_str(),
                static_cast<double>(took.count()) / 1000.0,
                static_cast<long long>(std::chrono::duration_cast<seconds>(c.budget).count()),
                known ? " | known unattainable as stated" : "");
    std::fflush(stdout);
  }
  std::printf("acceptance: %s\n", as_expected ? "all criteria as expected" : "UNEXPECTED RESULT");
  return as_expected ? 0 : 1;
}
