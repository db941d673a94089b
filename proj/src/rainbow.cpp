#include "catpack/rainbow.hpp"

#include <algorithm>
#include <numeric>

#include "catpack/error.hpp"

namespace catpack {

bool is_rainbow_matching(const RainbowMatching& rm) {
  std::vector<Vertex> used;
  std::vector<Color> colors;
  for (const auto& e : rm.edges) {
    if (e.u == e.v || e.u == rm.avoided || e.v == rm.avoided) return false;
    used.push_back(e.u);
    used.push_back(e.v);
    colors.push_back(e.color);
  }
  std::sort(used.begin(), used.end());
  std::sort(colors.begin(), colors.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end() &&
         std::adjacent_find(colors.begin(), colors.end()) == colors.end();
}

std::vector<Spine> spines_of(const ColoredGraph& g, std::span<const Color> colors) {
  std::vector<Spine> out;
  out.reserve(colors.size());
  for (Color c : colors) out.push_back({c, caterpillar_view(g, c).spine});
  return out;
}

namespace {

struct Candidate {
  Color color;
  std::vector<std::pair<Vertex, Vertex>> edges;  // usable edges in scan order
};

std::vector<Candidate> prepare(std::span<const Spine> spines, Vertex avoid) {
  std::vector<std::size_t> order(spines.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return spines[a].length() < spines[b].length(); });
  std::vector<Candidate> out;
  for (std::size_t idx : order) {
    auto verts = spines[idx].vertices;
    if (verts.size() >= 2 && verts.front() > verts.back()) std::reverse(verts.begin(), verts.end());
    Candidate c{spines[idx].color, {}};
    for (std::size_t t = 0; t + 1 < verts.size(); ++t)
      if (verts[t] != avoid && verts[t + 1] != avoid) c.edges.emplace_back(verts[t], verts[t + 1]);
    out.push_back(std::move(c));
  }
  return out;
}

class Search {
 public:
  Search(const std::vector<Candidate>& cands, int size) : cands_(cands), size_(size) {}

  bool run(std::size_t at) {
    if (static_cast<int>(picked_.size()) == size_) return true;
    if (at >= cands_.size()) return false;
    if (static_cast<int>(cands_.size() - at) < size_ - static_cast<int>(picked_.size())) return false;
    for (const auto& [u, v] : cands_[at].edges) {
      if (blocked(u) || blocked(v)) continue;
      picked_.push_back({cands_[at].color, u, v});
      if (run(at + 1)) return true;
      picked_.pop_back();
    }
    return run(at + 1);
  }

  const std::vector<RainbowEdge>& picked() const { return picked_; }

 private:
  bool blocked(Vertex x) const {
    return std::any_of(picked_.begin(), picked_.end(), [x](const RainbowEdge& e) { return e.u == x || e.v == x; });
  }

  const std::vector<Candidate>& cands_;
  int size_;
  std::vector<RainbowEdge> picked_;
};

}  // namespace

std::optional<RainbowMatching> find_rainbow_avoiding(std::span<const Spine> spines, Vertex avoid, int size) {
  if (size < 0) throw PreconditionError("matching size must be non-negative");
  RainbowMatching out;
  out.avoided = avoid;
  if (size == 0) return out;
  if (static_cast<int>(spines.size()) < size) throw PreconditionError("fewer spines than requested matching size");

  const auto cands = prepare(spines, avoid);

  std::vector<Vertex> used;
  for (const auto& c : cands) {
    if (static_cast<int>(out.edges.size()) == size) break;
    for (const auto& [u, v] : c.edges) {
      if (std::find(used.begin(), used.end(), u) != used.end() ||
          std::find(used.begin(), used.end(), v) != used.end())
        continue;
      out.edges.push_back({c.color, u, v});
      used.push_back(u);
      used.push_back(v);
      break;
    }
  }
  if (static_cast<int>(out.edges.size()) == size) return out;

  Search search(cands, size);
  if (!search.run(0)) return std::nullopt;
  out.edges = search.picked();
  out.by_greedy = false;
  return out;
}

SpineBoundReport check_spine_bounds(const ColoredGraph& g, const DegreeMatrix& m) {
  if (m.has_common_leaves()) throw PreconditionError("spine bounds need a matrix without common leaves");
  if (auto v = verify_realization(g, m); !v) throw PreconditionError("not a caterpillar realization: " + v.violation);

  const int k = m.k();
  const int n = m.n();
  SpineBoundReport rep;
  for (Color c = 1; c <= k; ++c) rep.spine_lengths.push_back(caterpillar_view(g, c).spine_length());

  auto sorted = rep.spine_lengths;
  std::sort(sorted.begin(), sorted.end());

  rep.every_spine_bound = 2 * k - 1;
  if (sorted.front() < rep.every_spine_bound)
    throw LemmaViolation("shortest spine has " + std::to_string(sorted.front()) + " edges, below 2k-1 = " +
                         std::to_string(rep.every_spine_bound));
  if (sorted.front() == rep.every_spine_bound) rep.binding.push_back("every-spine");

  rep.long_spine_applicable = k >= 4 && n >= 2 * k + 2;
  if (rep.long_spine_applicable) {
    rep.long_spine_bound = 2 * k + 1;
    rep.long_spine_witness = sorted[static_cast<std::size_t>(k - 2)];
    if (rep.long_spine_witness < rep.long_spine_bound)
      throw LemmaViolation("the k-1 shortest spines all stay below 2k+1 edges");
    if (rep.long_spine_witness == rep.long_spine_bound) rep.binding.push_back("long-spine");
  }

  for (int l = 1; l <= k - 1; ++l) {
    const int bound = (l - 1) * n / l + 2;
    const int have = sorted[static_cast<std::size_t>(l - 1)];
    rep.ordered_bounds.push_back(bound);
    if (have < bound)
      throw LemmaViolation("spine #" + std::to_string(l) + " in increasing order has " + std::to_string(have) +
                           " edges, below " + std::to_string(bound));
    if (have == bound) rep.binding.push_back("ordered-" + std::to_string(l));
    if (static_cast<long long>(have) * l < static_cast<long long>(l - 1) * n + 2LL * l) ++rep.real_valued_shortfalls;
  }
  return rep;
}

}  // namespace catpack
