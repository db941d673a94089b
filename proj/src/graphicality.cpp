#include "catpack/graphicality.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace catpack {

namespace {

std::vector<long long> sorted_desc(std::span<const int> seq) {
  std::vector<long long> f(seq.begin(), seq.end());
  std::sort(f.begin(), f.end(), std::greater<>());
  return f;
}

// Evaluates inequality s (1-based) on a nonincreasing sequence.
std::pair<long long, long long> eg_sides(const std::vector<long long>& f, int s) {
  long long lhs = 0;
  for (int i = 0; i < s; ++i) lhs += f[static_cast<std::size_t>(i)];
  long long rhs = static_cast<long long>(s) * (s - 1);
  for (std::size_t j = static_cast<std::size_t>(s); j < f.size(); ++j) rhs += std::min<long long>(s, f[j]);
  return {lhs, rhs};
}

}  // namespace

EGReport erdos_gallai(std::span<const int> seq) {
  EGReport rep;
  auto f = sorted_desc(seq);
  const long long total = std::accumulate(f.begin(), f.end(), 0LL);
  rep.parity_ok = total % 2 == 0;
  if (!rep.parity_ok) return rep;
  if (!f.empty() && f.back() < 0) return rep;

  // Running form: prefix sums plus a pointer to the tail where f_j < s.
  const int n = static_cast<int>(f.size());
  std::vector<long long> prefix(f.size() + 1, 0);
  for (int i = 0; i < n; ++i) prefix[static_cast<std::size_t>(i) + 1] = prefix[static_cast<std::size_t>(i)] + f[static_cast<std::size_t>(i)];
  int tail = n;  // first index with f < s
  for (int s = 1; s <= n; ++s) {
    while (tail > 0 && f[static_cast<std::size_t>(tail) - 1] < s) --tail;
    const int split = std::max(tail, s);
    const long long lhs = prefix[static_cast<std::size_t>(s)];
    const long long big = static_cast<long long>(split - s) * s;
    const long long small = prefix[static_cast<std::size_t>(n)] - prefix[static_cast<std::size_t>(split)];
    const long long rhs = static_cast<long long>(s) * (s - 1) + big + small;
    if (lhs > rhs) {
      rep.first_violation_s = s;
      rep.lhs = lhs;
      rep.rhs = rhs;
      return rep;
    }
  }
  rep.graphical = true;
  return rep;
}

bool eg_prefix_check(std::span<const int> seq, int s_max) {
  auto f = sorted_desc(seq);
  const int n = static_cast<int>(f.size());
  for (int s = 1; s < s_max && s <= n; ++s) {
    auto [lhs, rhs] = eg_sides(f, s);
    if (lhs > rhs) return false;
  }
  return true;
}

bool havel_hakimi(std::span<const int> seq) {
  std::vector<int> d(seq.begin(), seq.end());
  for (;;) {
    std::sort(d.begin(), d.end(), std::greater<>());
    while (!d.empty() && d.back() == 0) d.pop_back();
    if (d.empty()) return true;
    if (d.back() < 0) return false;
    const int top = d.front();
    d.erase(d.begin());
    if (top > static_cast<int>(d.size())) return false;
    for (int i = 0; i < top; ++i) {
      if (--d[static_cast<std::size_t>(i)] < 0) return false;
    }
  }
}

std::vector<int> column_sums(const DegreeMatrix& m) {
  std::vector<int> out(static_cast<std::size_t>(m.n()));
  for (int j = 0; j < m.n(); ++j) out[static_cast<std::size_t>(j)] = m.column_sum(j);
  return out;
}

}  // namespace catpack
