#pragma once

#include <functional>
#include <optional>
#include <set>
#include <vector>

#include "tropical/lattice.hpp"

namespace tropical::testing {

// Cofactor expansion; independent of the Bareiss/SNF code paths.
inline Integer cofactor_det(const std::vector<IntegerVector>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Integer total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    std::vector<IntegerVector> minor;
    for (std::size_t r = 1; r < n; ++r) {
      IntegerVector row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(row);
    }
    Integer term = m[0][c] * cofactor_det(minor);
    total += (c % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// Order of Z^n / L by counting the subgroup generated by L inside (Z/D)^n,
// where D is a nonzero maximal minor (so D Z^n is contained in L).
inline std::optional<Integer> brute_force_index(const std::vector<IntegerVector>& gens, std::size_t n, long budget) {
  std::vector<std::size_t> pick(n);
  long best = 0;
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t start, std::size_t depth) {
    if (depth == n) {
      std::vector<IntegerVector> m;
      for (auto i : pick) m.push_back(gens[i]);
      Integer d = abs(cofactor_det(m));
      if (d != 0 && (best == 0 || d < best)) best = d.get_si();
      return;
    }
    for (std::size_t i = start; i < gens.size(); ++i) {
      pick[depth] = i;
      rec(i + 1, depth + 1);
    }
  };
  rec(0, 0);
  if (best == 0) return std::nullopt;
  long box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= best;
  if (box > budget) return Integer(-1);
  auto reduce = [&](std::vector<long> v) {
    for (auto& x : v) x = ((x % best) + best) % best;
    return v;
  };
  std::set<std::vector<long>> group{std::vector<long>(n, 0)};
  std::vector<std::vector<long>> queue{std::vector<long>(n, 0)};
  while (!queue.empty()) {
    auto cur = queue.back();
    queue.pop_back();
    for (const auto& g : gens) {
      std::vector<long> nxt(n);
      for (std::size_t i = 0; i < n; ++i) nxt[i] = cur[i] + g[i].get_si();
      nxt = reduce(nxt);
      if (group.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return Integer(box / static_cast<long>(group.size()));
}

}  // namespace tropical::testing
