#pragma once

#include <random>
#include <string>
#include <vector>

#include "globcat/glob.hpp"
#include "globcat/tree.hpp"

namespace fx {

using namespace globcat;

// One vertex with one loop.
inline GlobSet loop_graph() { return GlobSetBuilder(1).cell("v").cell("l", "v", "v").build(); }

// v; loops l, m; 2-cells a: l => m and b: l => l. Five cells.
inline GlobSet five_cells() {
  return GlobSetBuilder(2)
      .cell("v")
      .cell("l", "v", "v")
      .cell("m", "v", "v")
      .cell("a", "l", "m")
      .cell("b", "l", "l")
      .build();
}

inline GlobSet glob21() { return glob_of_tree(level2_tree({2, 1})); }

// Random globular set of truncation 2 with at most max_cells cells.
inline GlobSet random_globset(std::mt19937& rng, int max_cells) {
  std::uniform_int_distribution<int> pick(0, 1 << 20);
  int budget = max_cells;
  const int n0 = 1 + pick(rng) % 3;
  budget -= n0;
  std::vector<std::vector<std::string>> ids(3);
  std::vector<std::vector<int>> src(3), tgt(3);
  for (int i = 0; i < n0; ++i) ids[0].push_back("x" + std::to_string(i));
  const int n1 = budget > 0 ? pick(rng) % (budget + 1) : 0;
  budget -= n1;
  for (int i = 0; i < n1; ++i) {
    ids[1].push_back("f" + std::to_string(i));
    src[1].push_back(pick(rng) % n0);
    tgt[1].push_back(pick(rng) % n0);
  }
  for (int i = 0, made = 0; budget > 0 && n1 > 0 && i < 4 * max_cells; ++i) {
    int s = pick(rng) % n1, t = pick(rng) % n1;
    if (src[1][s] != src[1][t] || tgt[1][s] != tgt[1][t]) continue;
    ids[2].push_back("a" + std::to_string(made++));
    src[2].push_back(s);
    tgt[2].push_back(t);
    --budget;
  }
  return GlobSet(2, ids, src, tgt);
}

}  // namespace fx
