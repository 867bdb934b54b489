#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace globcat;

TEST_CASE("glob of trees") {
  for (int n = 0; n <= 4; ++n) {
    auto c = cell_counts(globe_tree(n));
    GlobSet g = glob_of_tree(globe_tree(n));
    for (int k = 0; k <= n; ++k) {
      CHECK(g.count(k) == (k < n ? 2 : 1));
      CHECK(c[k] == g.count(k));
    }
  }
  GlobSet p3 = glob_of_tree(path_tree(3));
  CHECK(p3.count(0) == 4);
  CHECK(p3.count(1) == 3);
  for (int i = 0; i < 3; ++i) {
    CHECK(p3.src(1, i) == i);
    CHECK(p3.tgt(1, i) == i + 1);
  }
  Tree t21 = level2_tree({2, 1});
  GlobSet g21 = glob_of_tree(t21);
  CHECK(oracle::seq_counts(t21) == std::vector<int>{3, 5, 3});
  CHECK(std::vector<int>{g21.count(0), g21.count(1), g21.count(2)} == std::vector<int>{3, 5, 3});
}

TEST_CASE("boundary") {
  for (int k = 0; k < 5; ++k) CHECK(boundary(path_tree(k)) == point_tree());
  CHECK(boundary(level2_tree({2, 1})) == path_tree(2));
  for (int n = 0; n < 4; ++n) CHECK(boundary(globe_tree(n + 1)) == globe_tree(n));
  CHECK_THROWS_AS(boundary(point_tree()), InputError);
}

TEST_CASE("source and target maps") {
  auto s = sigma_map(path_tree(3)), t = tau_map(path_tree(3));
  CHECK(s[0] == std::vector<int>{0});
  CHECK(t[0] == std::vector<int>{3});
  Tree g2 = globe_tree(2);
  GlobSet gg = glob_of_tree(g2);
  auto s2 = sigma_map(g2), t2 = tau_map(g2);
  CHECK(s2[1][0] != t2[1][0]);
  CHECK(gg.src(2, 0) == s2[1][0]);
  CHECK(gg.tgt(2, 0) == t2[1][0]);
  CHECK_THROWS_AS(sigma_map(point_tree()), InputError);
}

TEST_CASE("globe trees") {
  CHECK(globe_tree(1) == path_tree(1));
  for (int n = 0; n < 6; ++n) CHECK(globe_tree(n).size() == n + 1);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_trees(0, 1).size() == 1);
  CHECK(enumerate_trees(0, 9).size() == 1);
  auto d1 = enumerate_trees(1, 4);
  REQUIRE(d1.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(d1[k] == path_tree(k));
  // Frozen from the composition-counting oracle.
  CHECK(oracle::dim2_trees(4) == 8);
  CHECK(enumerate_trees(2, 4).size() == 8);
  for (int s = 1; s <= 7; ++s)
    CHECK(static_cast<long>(enumerate_trees(2, s).size()) == oracle::dim2_trees(s));
}

TEST_CASE("rigidity examples") {
  auto r = rigidity_check(globe_tree(2), globe_tree(2));
  CHECK(r.isos == 1);
  CHECK(r.non_identity == 0);
  CHECK(rigidity_check(path_tree(2), path_tree(3)).isos == 0);
  auto r21 = rigidity_check(level2_tree({2, 1}), level2_tree({2, 1}));
  CHECK(r21.isos == 1);
  CHECK(r21.tight);
}

TEST_CASE("text form") {
  CHECK(to_text(path_tree(3)) == "3");
  CHECK(to_text(level2_tree({2, 1})) == "[2,1]");
  CHECK(tree_from_text("[2, 1]", 2) == level2_tree({2, 1}));
  CHECK(tree_from_text("[[1],[]]", 3).size() == 5);
  CHECK_THROWS_AS(tree_from_text("[2", 2), InputError);
}

TEST_CASE("property: boundary, source and target structure up to dim 3 size 6") {
  for (int dim = 1; dim <= 3; ++dim) {
    auto trees = enumerate_trees(dim, 6);
    std::set<Tree> listed(trees.begin(), trees.end());
    CHECK(listed.size() == trees.size());
    auto lower = enumerate_trees(dim - 1, 6);
    std::set<Tree> lower_set(lower.begin(), lower.end());
    for (const auto& p : trees) {
      Tree b = boundary(p);
      CHECK(b.dim == p.dim - 1);
      CHECK(lower_set.count(b) == 1);
      GlobSet gp = glob_of_tree(p), gb = glob_of_tree(b);
      Label s = sigma_map(p), t = tau_map(p);
      CHECK(is_map(gb, gp, s));
      CHECK(is_map(gb, gp, t));
      if (dim >= 2) {
        Label ss = compose(s, sigma_map(b)), ts = compose(t, sigma_map(b));
        Label st = compose(s, tau_map(b)), tt = compose(t, tau_map(b));
        CHECK(ss == ts);
        CHECK(tt == st);
      }
    }
  }
}
