#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "globcat/freecat.hpp"
#include "oracles.hpp"

using namespace globcat;

namespace {

// A path of loops l^k over the loop graph.
FreeCell loop_path(int k) {
  return {path_tree(k), Label{std::vector<int>(k + 1, 0), std::vector<int>(k, 0)}};
}

// glob(path m) -> T(loop graph) sending the i-th edge to l^{ks[i]}.
FreeOverFree path_of_paths(const std::vector<int>& ks) {
  FreeOverFree f{path_tree(static_cast<int>(ks.size())), {{}, {}}};
  for (std::size_t i = 0; i <= ks.size(); ++i) f.cells[0].push_back(FreeCell{Tree(), Label{{0}}});
  for (int k : ks) f.cells[1].push_back(loop_path(k));
  return f;
}

}  // namespace

TEST_CASE("free cells") {
  GlobSet pt = GlobSetBuilder(2).cell("v").cell("e", "v", "v").cell("t", "e", "e").build();
  for (int d = 0; d <= 2; ++d)
    CHECK(free_cells(pt, d, 5).size() == enumerate_trees(d, 5).size());
  auto paths = free_cells(fx::loop_graph(), 1, 4);
  REQUIRE(paths.size() == 4);
  for (int k = 0; k < 4; ++k) CHECK(paths[k] == loop_path(k));
  CHECK_THROWS_AS(free_cells(fx::loop_graph(), 2, 3), InputError);
}

TEST_CASE("free cells over glob([2,1]) match the naive labelling counter") {
  GlobSet x = fx::glob21();
  long naive = 0;
  for (const auto& p : enumerate_trees(2, 4)) naive += oracle::count_maps(glob_of_tree(p), x);
  // Frozen from the naive counter.
  CHECK(naive == 25);
  CHECK(static_cast<long>(free_cells(x, 2, 4).size()) == naive);
}

TEST_CASE("cell boundaries and units") {
  FreeCell ll = loop_path(2);
  CHECK(cell_src(ll) == unit(fx::loop_graph(), {0, 0}));
  GlobSet x = fx::five_cells();
  for (int d = 1; d <= 2; ++d)
    for (int i = 0; i < x.count(d); ++i) {
      FreeCell u = unit(x, {d, i});
      CHECK(cell_src(u) == unit(x, {d - 1, x.src(d, i)}));
      CHECK(cell_tgt(u) == unit(x, {d - 1, x.tgt(d, i)}));
    }
  std::set<FreeCell> seen;
  for (int d = 0; d <= 2; ++d)
    for (int i = 0; i < x.count(d); ++i) seen.insert(unit(x, {d, i}));
  CHECK(static_cast<int>(seen.size()) == x.total());
  FreeCell u0 = unit(x, {0, 0});
  CHECK(u0.tree == point_tree());
  CHECK_THROWS_AS(unit(x, {1, 9}), InputError);
  CHECK_THROWS_AS(cell_src(u0), InputError);
}

TEST_CASE("hom components") {
  FreeOverFree one = path_of_paths({1});
  auto h1 = hom_components(one);
  REQUIRE(h1.comps.size() == 1);
  CHECK(h1.comps[0].size() == 1);
  CHECK(from_hom_components(one.tree, h1) == one);

  FreeOverFree f = path_of_paths({2, 0, 1});
  auto h = hom_components(f);
  CHECK(h.comps[0].size() == 2);
  CHECK(h.comps[1].size() == 0);
  CHECK(h.comps[2].size() == 1);
  CHECK(from_hom_components(f.tree, h) == f);

  // Over a 3-object carrier: kids of [2,1] labelled by composable paths.
  GlobSet x = GlobSetBuilder(2)
                  .cell("a").cell("b").cell("c")
                  .cell("f", "a", "b").cell("g", "b", "c").cell("g2", "b", "c")
                  .cell("u", "g", "g2")
                  .build();
  Tree p = level2_tree({2, 1});
  int tested = 0;
  for (const auto& l : labellings(p, materialize_free(x, 4).set)) {
    FreeOverFree ff = decode(materialize_free(x, 4), FreeCell{p, l});
    auto hc = hom_components(ff);
    std::size_t total = 0;
    for (const auto& row : hc.comps) total += row.size();
    std::size_t direct = 0;
    auto off = kid_offsets(p);
    for (int i = 0; i < p.width(); ++i) direct += ff.cells[1][off[i][0]].tree.width();
    CHECK(total == direct);
    CHECK(from_hom_components(p, hc) == ff);
    if (++tested == 60) break;
  }
  CHECK(tested > 0);
}

TEST_CASE("mu on the free category is concatenation") {
  MuResult r = mu_factor(path_of_paths({2, 1}));
  CHECK(r.cell == loop_path(3));
  CHECK(apply_map(r.cell.label, r.g) == path_of_paths({2, 1}));
}

TEST_CASE("mu of an outer unit returns the labelling") {
  GlobSet x = fx::five_cells();
  for (const auto& c : free_cells(x, 2, 4)) CHECK(mu(outer_unit(x, c.tree, c.label)) == c);
}

TEST_CASE("mu reconstructs on [2,1] with globe labels") {
  GlobSet x = fx::glob21();
  Tree p = level2_tree({2, 1});
  FreeOverFree f = outer_unit(x, p, identity_map(x));
  MuResult r = mu_factor(f);
  CHECK(r.cell.tree == p);
  CHECK(r.cell.label == identity_map(x));
  CHECK(apply_map(r.cell.label, r.g) == f);
}

TEST_CASE("hom decomposition") {
  GlobSet x1 = fx::loop_graph(), x2 = fx::five_cells();
  GlobSet x1_2 = GlobSetBuilder(1).cell("p").cell("q").cell("e", "p", "q").build();
  GlobSet s = seq({desuspend(suspend(x1_2)), hom(x2, 0, 0)});
  // Cells of {TS}(0,2) correspond to pairs of cells over the two homs.
  int dim = 1, size = 4;
  long pairs = 0, over = 0;
  for (const auto& c : free_cells(s, dim + 1, size + 1)) {
    if (c.label[0].front() != 0 || c.label[0].back() != 2) continue;
    auto d = hom_decompose(s, 0, 2, c);
    CHECK(d.m == 2);
    CHECK(d.seq == std::vector<int>{0, 1, 2});
    CHECK(hom_reconstruct(s, d) == c);
    ++over;
  }
  for (const auto& a : free_cells(hom(s, 0, 1), dim, size))
    for (const auto& b : free_cells(hom(s, 1, 2), dim, size))
      if (a.tree.size() + b.tree.size() + 1 <= size + 1) ++pairs;
  CHECK(over == pairs);
  // Nothing runs backwards in a sequence carrier.
  for (const auto& c : free_cells(s, 1, 4)) CHECK_FALSE((c.label[0].front() == 2 && c.label[0].back() == 0));
}

TEST_CASE("generic factorisation") {
  GlobSet x = fx::five_cells();
  FreeCell u = unit(x, {2, 0});
  GenericFactor g = generic_factor(u);
  CHECK(g.shape == globe_tree(2));
  CHECK(g.free_part == u.label);
  for (const auto& c : free_cells(x, 2, 4)) {
    GenericFactor gf = generic_factor(c);
    CHECK(apply_map(gf.free_part, gf.generic) == c);
    CHECK(mu(outer_unit(glob_of_tree(gf.shape), gf.shape, gf.generic.label)) == gf.generic);
  }
}

TEST_CASE("pasting evaluation in a category") {
  // Monoid Z/3 as a one-object category.
  CompositionTables m = category_tables(
      {"*"}, {{"0", "*", "*"}, {"1", "*", "*"}, {"2", "*", "*"}}, {{"*", "0"}},
      [] {
        std::map<std::pair<std::string, std::string>, std::string> c;
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) c[{std::to_string(a), std::to_string(b)}] = std::to_string((a + b) % 3);
        return c;
      }());
  CHECK(check_strict(m).ok());
  FreeCell w{path_tree(3), Label{{0, 0, 0, 0}, {1, 2, 2}}};
  CHECK(m.cells.id(1, eval_pasting(m, w)) == "2");
  CHECK(eval_pasting(m, unit(m.cells, {1, 1})) == 1);
  FreeCell empty{path_tree(0), Label{{0}, {}}};
  CHECK(m.cells.id(1, eval_pasting(m, empty)) == "0");
}

TEST_CASE("strictness check rejects a broken table") {
  CompositionTables m = category_tables(
      {"*"}, {{"e", "*", "*"}, {"f", "*", "*"}}, {{"*", "e"}},
      {{{"e", "e"}, "e"}, {{"e", "f"}, "f"}, {{"f", "e"}, "e"}, {{"f", "f"}, "f"}});
  CHECK_FALSE(check_strict(m).ok());
}

TEST_CASE("property: mu is natural in the carrier") {
  GlobSet x = GlobSetBuilder(1).cell("a").cell("b").cell("f", "a", "b").cell("g", "b", "a").build();
  Report r = check_mu_naturality(x, fx::loop_graph(), 1, 4);
  CHECK(r.ok());
  Report r2 = check_mu_naturality(hom(fx::five_cells(), 0, 0), fx::glob21(), 1, 3);
  CHECK(r2.ok());
}

TEST_CASE("property: the factorisation witness is unique") {
  GlobSet x = fx::five_cells();
  FreeMaterialization w = materialize_free(x, 3);
  int checked = 0;
  for (int d = 1; d <= 2; ++d)
    for (const auto& p : enumerate_trees(d, 3))
      for (const auto& l : labellings(p, w.set)) {
        FreeOverFree f = decode(w, FreeCell{p, l});
        MuResult r = mu_factor(f);
        auto all = factorisations(f, r.cell);
        REQUIRE(all.size() == 1);
        CHECK(all.front() == r.g);
        ++checked;
      }
  CHECK(checked > 50);
}

TEST_CASE("property: decompose then reconstruct on random carriers") {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 8; ++trial) {
    GlobSet x = fx::random_globset(rng, 6);
    for (int d = 1; d <= 2; ++d)
      for (const auto& c : free_cells(x, d, 4)) {
        auto dec = hom_decompose(x, c.label[0].front(), c.label[0].back(), c);
        CHECK(is_connected(x, dec.seq));
        CHECK(hom_reconstruct(x, dec) == c);
      }
  }
}

TEST_CASE("monad laws at small bounds") {
  MonadBounds b;
  b.max_size = 4;
  b.inner_size = 2;
  b.outer_size = 2;
  Report r = check_monad(fx::five_cells(), b);
  CHECK(r.ok());
  for (const auto& l : r.laws) CHECK(l.checked > 0);
}
