// Acceptance run: one PASS/FAIL line per criterion with its tolerance and
// runtime. Usage: acceptance [criterion numbers...] (default: all).

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "globcat/enrich.hpp"
#include "globcat/freecat.hpp"
#include "globcat/multitensor.hpp"
#include "globcat/operad.hpp"
#include "globcat/samples.hpp"
#include "globcat/setmt.hpp"
#include "globcat/suites.hpp"
#include "globcat/tree.hpp"

using namespace globcat;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int number;
  std::string name;
  std::string tolerance;
  double time_limit;  // seconds; 0 = none
  std::function<Outcome()> run;
};

long total_checked(const Report& r) {
  long n = 0;
  for (const auto& l : r.laws) n += l.checked;
  return n;
}

std::string summary(const Report& r) {
  std::ostringstream s;
  s << total_checked(r) << " instances, " << r.failures() << " failures";
  for (const auto& l : r.laws)
    if (l.failed) s << "; " << l.law << ": " << (l.counterexamples.empty() ? "" : l.counterexamples[0]);
  return s.str();
}

bool every_law_exercised(const Report& r) {
  for (const auto& l : r.laws)
    if (l.checked == 0) return false;
  return true;
}

Outcome monad_laws() {
  MonadBounds b;
  b.max_dim = 2;
  b.max_size = 5;
  b.inner_size = 4;
  b.outer_size = 2;
  Report r = check_monad(fx::five_cells(), b);
  return {r.ok() && every_law_exercised(r), summary(r)};
}

Outcome tightness() {
  Report r = check_tight(3, 6);
  return {r.ok() && total_checked(r) > 0, summary(r)};
}

Outcome free_category_oracle() {
  GlobSet loop = fx::loop_graph();
  long mismatches = 0, compared = 0;
  for (int k = 0; k <= 6; ++k) {
    std::set<int> lengths;
    auto cells = free_cells(loop, 1, k + 1);
    mismatches += static_cast<int>(cells.size()) != k + 1;
    for (const auto& c : cells) {
      lengths.insert(c.tree.width());
      // Every vertex and edge of a path goes to the single vertex and loop.
      for (const auto& row : c.label)
        for (int v : row) mismatches += v != 0;
    }
    std::set<int> want;
    for (int j = 0; j <= k; ++j) want.insert(j);
    mismatches += lengths != want;
    ++compared;
  }
  auto path = [&](int n) { return FreeCell{path_tree(n), {std::vector<int>(n + 1, 0), std::vector<int>(n, 0)}}; };
  for (int a = 0; a <= 6; ++a)
    for (int b = 0; a + b <= 6; ++b) {
      FreeCell pt = unit(loop, {0, 0});
      FreeOverFree f{path_tree(2), {{pt, pt, pt}, {path(a), path(b)}}};
      mismatches += mu(f) != path(a + b);
      ++compared;
    }
  return {mismatches == 0, std::to_string(compared) + " comparisons, " + std::to_string(mismatches) + " mismatches"};
}

Outcome hom_decomposition() {
  std::mt19937 rng(20240611);
  long cells = 0, bad = 0;
  for (int trial = 0; trial < 5; ++trial) {
    GlobSet x = fx::random_globset(rng, 6);
    for (int d = 1; d <= 2; ++d)
      for (const auto& c : free_cells(x, d, 4)) {
        auto dec = hom_decompose(x, c.label[0].front(), c.label[0].back(), c);
        bad += !(is_connected(x, dec.seq) && hom_reconstruct(x, dec) == c);
        ++cells;
      }
  }
  return {bad == 0 && cells > 0, std::to_string(cells) + " cells over 5 carriers, " + std::to_string(bad) + " mismatches"};
}

Outcome pentagon() {
  const int bound = 4;
  std::vector<SetOperad> panel{unit_operad(bound), terminal_operad(bound), terminal_operad(bound, false),
                               parity_operad(bound)};
  Report r = check_pentagon_panel(panel, bound, 2);
  return {r.ok() && every_law_exercised(r), "256 quadruples, 16 pairs; " + summary(r)};
}

Outcome gamma_free_monoid() {
  SetOperad t = terminal_operad(3);
  auto e = mt_operad(std::make_shared<const SetOperad>(t));
  std::vector<Val> x{leaf("a"), leaf("b")};
  auto word = [](const Val& g) { return g.kids.at(0).kids; };
  auto cells = gamma_elements(*e, x, 3);
  std::set<std::vector<Val>> words;
  for (const auto& c : cells) words.insert(word(c));
  long bad = 0;
  bad += cells.size() != 15 || words.size() != 15;
  // Multiplication is concatenation wherever the result stays within length 3.
  long mults = 0;
  for (const auto& outer : gamma_elements(*e, cells, 3)) {
    std::vector<Val> cat;
    for (const auto& w : word(outer)) {
      auto part = word(w);
      cat.insert(cat.end(), part.begin(), part.end());
    }
    auto m = gamma_mult(t, outer);
    if (cat.size() > 3) {
      bad += m.has_value();
      continue;
    }
    bad += !m || word(*m) != cat;
    ++mults;
  }
  bad += !check_gamma_monad(t, x, 3).ok();
  // Monoids on two elements against algebras.
  std::vector<Val> c{leaf("0"), leaf("1")};
  std::vector<EMonoid> panel{monoid_from_binary(t, c, {{0, 1}, {1, 0}}, 0),   // Z/2
                             monoid_from_binary(t, c, {{0, 0}, {0, 1}}, 1),   // and
                             monoid_from_binary(t, c, {{0, 1}, {1, 1}}, 0)};  // or
  std::set<std::map<Val, int>> images;
  for (const auto& m : panel) {
    GammaAlgebra a = monoid_to_algebra(t, m);
    bad += !check_emonoid(t, m).ok() || !check_gamma_algebra(t, a).ok();
    bad += algebra_to_monoid(t, a).act != m.act;
    bad += monoid_to_algebra(t, algebra_to_monoid(t, a)).structure != a.structure;
    images.insert(a.structure);
  }
  bad += images.size() != panel.size();
  return {bad == 0, std::to_string(cells.size()) + " cells, " + std::to_string(mults) + " products compared, 3 monoids, " +
                        std::to_string(bad) + " mismatches"};
}

Outcome distributive_law() {
  GlobSet loop = fx::loop_graph();
  GlobSet two = GlobSetBuilder(1).cell("v").cell("l", "v", "v").cell("m", "v", "v").build();
  Report r = check_distributive_law(loop, {loop, two}, DistBounds{2, 3, 2});
  return {r.ok() && every_law_exercised(r), summary(r)};
}

Outcome bar_correspondence() {
  const ECatBounds b{3, 3};
  std::vector<std::pair<std::string, CompositionTables>> panel{
      {"arrow", arrow_category()}, {"cyclic3", cyclic_monoid(3)}, {"z2-two-category", z2_two_category()},
      {"z2-two-group", z2_two_group()}};
  Report all;
  std::string sizes;
  for (const auto& [name, ct] : panel) {
    if (ct.cells.total() > 8) return {false, name + " has more than 8 cells"};
    all.merge(check_bar_roundtrip(ct, b));
    sizes += " " + name + "(" + std::to_string(ct.cells.total()) + ")";
  }
  return {all.ok() && every_law_exercised(all), "carriers" + sizes + "; " + summary(all)};
}

Outcome equivalence_roundtrips() {
  long bad = 0, trips = 0;
  MTTable two{"two", 0, {{"u/1", 0, {Tree()}, "", ""}, {"m/2", 0, {Tree(), Tree()}, "", ""}}, {"u/1"}, {}};
  std::vector<std::pair<MTTable, int>> presentations{
      {two, 0},
      {tabulate(*embed_set_operad(std::make_shared<const SetOperad>(terminal_operad(3))), 3, 1), 4},
      {tabulate(*tcross(1), 2, 3), 3}};
  for (const auto& [t, support] : presentations) {
    Collection c = collection_from_mt_ops(t.name, t.trunc, t.ops);
    bad += bar_operations(c) != t.ops;
    bad += collection_from_mt_ops(c.name, c.trunc - 1, bar_operations(c)) != c;
    trips += 2;
    if (t.subst.empty()) continue;
    Operad a = from_mt_operad(t, support);
    bad += to_mt_operad(a) != t;
    bad += from_mt_operad(to_mt_operad(a), a.support) != a;
    trips += 2;
  }
  for (const Operad& a : {identity_operad(1, 4), identity_operad(2, 4), operad_from_set_operad(parity_operad(3))}) {
    MTTable t = to_mt_operad(a);
    bad += from_mt_operad(t, a.support) != a;
    bad += to_mt_operad(from_mt_operad(t, a.support)) != t;
    trips += 2;
  }
  return {bad == 0, std::to_string(trips) + " round trips, " + std::to_string(bad) + " mismatches"};
}

Outcome tower() {
  const ECatBounds b{3, 3};
  Report r;
  CompositionTables chain = chain_category(), par = parallel_two_category();
  r.merge(check_psi(chain, b));
  r.merge(check_psi(par, b));
  long bad = 0;
  bad += chain.cells.count(0) != 3 || chain.cells.trunc() != 1;
  bad += par.cells.count(0) != 2 || par.cells.trunc() != 2;
  for (int a = 0; a < par.cells.count(0); ++a)
    for (int c = 0; c < par.cells.count(0); ++c) {
      GlobSet h = hom(par.cells, a, c);
      for (int d = 0; d <= h.trunc(); ++d) bad += h.count(d) > 3;
    }
  int squares = 0;
  for (const auto& l : r.laws)
    if (l.law == "truncation-square-phi" || l.law == "truncation-square-psi") squares += l.checked > 0;
  return {r.ok() && bad == 0 && squares == 2, "3-object category and 2-object 2-category; " + summary(r)};
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<Criterion> all{
      {1, "monad laws, dim <= 2, size <= 5, 5-cell carrier", "exact, 0 failures", 60, monad_laws},
      {2, "tightness, dim <= 3, size <= 6", "exact, 0 failures", 120, tightness},
      {3, "free category on one loop", "exact equality", 0, free_category_oracle},
      {4, "hom decomposition on 5 random carriers", "exact equality", 0, hom_decomposition},
      {5, "triangle and pentagon, |E_n| <= 2, grade <= 4", "exact, 0 failures", 0, pentagon},
      {6, "gamma of the terminal operad", "exact equality", 0, gamma_free_monoid},
      {7, "distributive law on the loop graph", "exact, 0 failures", 0, distributive_law},
      {8, "algebras and enriched categories, identity operad", "exact equality", 0, bar_correspondence},
      {9, "collection and operad round trips", "exact equality", 0, equivalence_roundtrips},
      {10, "iterated enrichment levels 1 and 2", "exact equality", 60, tower},
  };
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failures = 0;
  for (const auto& c : all) {
    if (!only.empty() && !only.count(c.number)) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool in_time = c.time_limit <= 0 || secs < c.time_limit;
    bool pass = o.pass && in_time;
    failures += !pass;
    std::ostringstream limit;
    if (c.time_limit > 0) limit << ", limit " << c.time_limit << " s";
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.name << " [" << c.tolerance
              << "] runtime " << secs << " s" << limit.str() << " | " << o.detail << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
