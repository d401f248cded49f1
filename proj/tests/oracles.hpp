#pragma once

// Test-only reference computations. None of these call into the code paths
// they are used to check.

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "trichain/chain_model.hpp"

namespace trichain::oracle {

/// All turn-step subsets of [4, n] with gaps >= 2, by plain bitmask sweep.
inline std::vector<std::vector<int>> gap_two_subsets(int n) {
  std::vector<std::vector<int>> out;
  const int width = n - 3;
  for (std::uint32_t mask = 0; mask < (1u << width); ++mask) {
    if (mask & (mask >> 1)) continue;  // adjacent steps
    std::vector<int> steps;
    for (int b = 0; b < width; ++b) {
      if (mask & (1u << b)) steps.push_back(4 + b);
    }
    out.push_back(std::move(steps));
  }
  return out;
}

/// Number of chains with n triangles up to reversal, counted with Burnside's
/// lemma over the reflection k -> n + 4 - k of turn steps.
inline std::size_t count_chains_up_to_reversal(int n) {
  std::size_t total = 0;
  std::size_t symmetric = 0;
  for (const auto& steps : gap_two_subsets(n)) {
    ++total;
    std::set<int> mirrored;
    for (int k : steps) mirrored.insert(n + 4 - k);
    if (mirrored == std::set<int>(steps.begin(), steps.end())) ++symmetric;
  }
  return (total + symmetric) / 2;
}

/// sum_{k != j} x_{j,k} + 2 x_{j,j} == j * n_j for j = 2..5.
inline bool degree_sum_system_holds(const EdgeTypeVector& e) {
  for (int j = 2; j <= 5; ++j) {
    int lhs = 0;
    for (int k = 2; k <= 5; ++k) lhs += (k == j ? 2 : 1) * e.at(j, k);
    if (lhs != j * e.vertices.at(j)) return false;
  }
  return true;
}

/// Degree-pair census rebuilt from the triangle list alone.
inline std::map<std::pair<int, int>, int> census_from_triangles(const ChainGraph& g) {
  std::set<std::pair<int, int>> edges;
  for (const auto& t : g.triangles()) {
    for (int i = 0; i < 3; ++i) {
      const int a = t[static_cast<std::size_t>(i)];
      const int b = t[static_cast<std::size_t>((i + 1) % 3)];
      edges.insert({std::min(a, b), std::max(a, b)});
    }
  }
  std::map<int, int> degree;
  for (const auto& [a, b] : edges) {
    ++degree[a];
    ++degree[b];
  }
  std::map<std::pair<int, int>, int> census;
  for (const auto& [a, b] : edges) {
    const int da = degree[a];
    const int db = degree[b];
    ++census[{std::min(da, db), std::max(da, db)}];
  }
  return census;
}

/// Visits every sequence of positive integers with sum(l) - 2(s - 1) == n and
/// at most n/2 + 1 parts. Valid vectors never exceed n/2 parts (s = n/2 is
/// the zigzag), so one extra part covers every near miss.
template <typename Visit>
void for_each_raw_composition(int n, Visit&& visit) {
  std::vector<int> current;
  const auto rec = [&](auto&& self, int remaining, int parts_left) -> void {
    if (parts_left == 0) {
      if (remaining == 0) visit(current);
      return;
    }
    for (int v = 1; v <= remaining - (parts_left - 1); ++v) {
      current.push_back(v);
      self(self, remaining - v, parts_left - 1);
      current.pop_back();
    }
  };
  for (int s = 1; s <= n / 2 + 1; ++s) rec(rec, n + 2 * (s - 1), s);
}

}  // namespace trichain::oracle
