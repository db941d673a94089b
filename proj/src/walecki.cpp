#include "catpack/walecki.hpp"

#include "catpack/error.hpp"

namespace catpack {

std::vector<Vertex> zigzag_path(int n, int i) {
  std::vector<Vertex> seq;
  seq.reserve(static_cast<std::size_t>(n));
  auto at = [n, i](int offset) { return ((i + offset) % n + n) % n; };
  seq.push_back(at(0));
  for (int step = 1; static_cast<int>(seq.size()) < n; ++step) {
    seq.push_back(at(step));
    if (static_cast<int>(seq.size()) < n) seq.push_back(at(-step));
  }
  return seq;
}

ColoredGraph walecki_pack(const DegreeMatrix& m) {
  const int k = m.k();
  const int n = m.n();
  for (int i = 0; i < k; ++i)
    if (!m.is_path_row(i)) throw PreconditionError("row " + std::to_string(i) + " is not a path degree sequence");
  if (m.has_common_leaves()) throw PreconditionError("path matrix has common leaves");
  if (n < 2 * k) throw PreconditionError("path packing needs n >= 2k");

  // Relabel: row i's leaves go to slots i and i + ceil(n/2); the remaining
  // columns fill the free slots in index order.
  const int half = (n + 1) / 2;
  std::vector<int> slot_to_column(static_cast<std::size_t>(n), -1);
  std::vector<char> placed(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < k; ++i) {
    std::vector<int> leaves;
    for (int j = 0; j < n; ++j)
      if (m(i, j) == 1) leaves.push_back(j);
    slot_to_column[static_cast<std::size_t>(i)] = leaves[0];
    slot_to_column[static_cast<std::size_t>(i + half)] = leaves[1];
    placed[static_cast<std::size_t>(leaves[0])] = 1;
    placed[static_cast<std::size_t>(leaves[1])] = 1;
  }
  int next_free = 0;
  for (int j = 0; j < n; ++j) {
    if (placed[static_cast<std::size_t>(j)]) continue;
    while (slot_to_column[static_cast<std::size_t>(next_free)] >= 0) ++next_free;
    slot_to_column[static_cast<std::size_t>(next_free)] = j;
  }

  ColoredGraph g(n);
  for (int i = 0; i < k; ++i) {
    auto path = zigzag_path(n, i);
    for (std::size_t t = 0; t + 1 < path.size(); ++t)
      g.add_edge(slot_to_column[static_cast<std::size_t>(path[t])],
                 slot_to_column[static_cast<std::size_t>(path[t + 1])], i + 1);
  }
  return g;
}

}  // namespace catpack
