#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "globcat/multitensor.hpp"

using namespace globcat;

namespace {

GlobSet two_loops() { return GlobSetBuilder(1).cell("v").cell("l", "v", "v").cell("m", "v", "v").build(); }

GlobSet finite_set(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
  return GlobSet(0, {ids}, {{}}, {{}});
}

MTOperadPtr embedded(SetOperad o) { return embed_set_operad(std::make_shared<const SetOperad>(std::move(o))); }

bool passes(const Report& r) {
  for (const auto& l : r.laws)
    if (l.failed > 0) return false;
  return true;
}

}  // namespace

TEST_CASE("tree ids round trip") {
  for (int d = 0; d <= 3; ++d)
    for (const auto& t : enumerate_trees(d, 5)) CHECK(tree_from_id(tree_id(t)) == t);
  CHECK(tree_id(level2_tree({2, 0})) == "2:[2,0]");
  CHECK_THROWS_AS(tree_from_id("x:3"), InputError);
}

TEST_CASE("tcross cells are tuples of free cells") {
  auto e = tcross(1);
  GlobSet x = two_loops();
  for (int d = 0; d <= 1; ++d) {
    auto ones = free_cells(x, d, 3);
    auto pairs = multi_cells(*e, {x, x}, d, 3);
    CHECK(pairs.size() == ones.size() * ones.size());
    std::set<std::pair<FreeCell, FreeCell>> seen;
    for (const auto& c : pairs) {
      auto op = e->find(c.op);
      REQUIRE(op);
      seen.insert({FreeCell{op->arity[0], c.labels[0]}, FreeCell{op->arity[1], c.labels[1]}});
    }
    CHECK(seen.size() == pairs.size());
  }
  // Empty product: one cell per dimension.
  auto m0 = materialize(*e, {}, 3);
  CHECK(m0.set.count(0) == 1);
  CHECK(m0.set.count(1) == 1);
  CHECK_THROWS_AS(materialize(*e, {x, finite_set(2)}, 3), InputError);
}

TEST_CASE("tcross substitution concatenates componentwise") {
  auto e = tcross(1);
  GlobSet x = two_loops();
  MultiSet w = materialize(*e, {x, x}, 3);
  auto path_op = e->ops(1, 1, 3);
  const MTOp* two = nullptr;
  for (const auto& op : path_op)
    if (op.arity[0] == path_tree(2)) two = &op;
  REQUIRE(two != nullptr);
  int checked = 0;
  for (int a = 0; a < w.set.count(1); ++a)
    for (int b = 0; b < w.set.count(1); ++b) {
      MultiCell outer{two->id, {Label{{0, 0, 0}, {a, b}}}};
      auto s = substitute(*e, {&w}, outer);
      REQUIRE(s.cell);
      CHECK(s.arity_ok);
      for (int j = 0; j < 2; ++j) {
        std::vector<int> edges = w.cells[1][a].labels[j][1];
        const auto& more = w.cells[1][b].labels[j][1];
        edges.insert(edges.end(), more.begin(), more.end());
        CHECK(s.cell->labels[j][1] == edges);
      }
      ++checked;
    }
  CHECK(checked == 49 * 49);
}

TEST_CASE("set operad multitensors") {
  GlobSet a = finite_set(2), b = finite_set(3);
  auto term = embedded(terminal_operad(3));
  CHECK(multi_cells(*term, {a, b}, 0, 1).size() == 6);
  auto unit = embedded(unit_operad(3));
  CHECK(multi_cells(*unit, {}, 0, 1).empty());
  CHECK(multi_cells(*unit, {a}, 0, 1).size() == 2);
  CHECK(multi_cells(*unit, {a, b}, 0, 1).empty());
  auto par = embedded(parity_operad(3));
  CHECK(multi_cells(*par, {a, b}, 0, 1).size() == 12);
}

TEST_CASE("multitensor laws") {
  SUBCASE("tcross(1) on a four-cell carrier") {
    GlobSet x = GlobSetBuilder(1).cell("p").cell("q").cell("f", "p", "q").cell("g", "q", "q").build();
    auto r = check_multitensor(*tcross(1), x, MTBounds{2, 3, 2, 1});
    CHECK(passes(r));
    CHECK(r.laws[2].checked > 100);
  }
  SUBCASE("tcross(2) on the five-cell carrier, micro bounds") {
    auto r = check_multitensor(*tcross(2), fx::five_cells(), MTBounds{1, 3, 2, 2});
    CHECK(passes(r));
    CHECK(r.laws[2].checked > 0);
  }
  SUBCASE("set operads") {
    for (auto o : {terminal_operad(3), unit_operad(3), parity_operad(3)})
      CHECK(passes(check_multitensor(*embedded(o), finite_set(2), MTBounds{3, 1, 1, 0})));
  }
  SUBCASE("a corrupted substitution fails associativity") {
    MTTable t = tabulate(*embedded(parity_operad(3)), 3, 1);
    // Flip every composite of arity 3 built from a binary outer operation.
    int flipped = 0;
    for (auto& s : t.subst)
      if (s.outer == "1/2" && s.result.back() == '3') {
        s.result = (s.result[0] == '0' ? "1" : "0") + s.result.substr(1);
        ++flipped;
      }
    REQUIRE(flipped > 0);
    auto r = check_multitensor(*table_operad(t), finite_set(2), MTBounds{3, 1, 1, 0});
    CHECK(r.laws[2].failed > 0);
  }
}

TEST_CASE("tabulated tcross agrees with the on-the-fly presentation") {
  auto e = tcross(1);
  auto t = table_operad(tabulate(*e, 2, 3));
  GlobSet x = fx::loop_graph();
  for (int k = 0; k <= 2; ++k) {
    std::vector<GlobSet> xs(k, x);
    auto a = materialize(*e, xs, 3), b = materialize(*t, xs, 3);
    CHECK(a.set == b.set);
  }
  CHECK(passes(check_multitensor(*t, x, MTBounds{2, 3, 2, 1})));
}

TEST_CASE("free monoid words") {
  auto w = materialize_words(fx::loop_graph(), 2);
  CHECK(w.set.count(0) == 3);
  CHECK(w.set.count(1) == 3);
  CHECK(w.find(1, {0, 0}) >= 0);
  CHECK(w.find(1, {0, 0, 0}) == -1);
}

TEST_CASE("distributive law of T over the free monoid monad") {
  GlobSet x = fx::loop_graph();
  auto r = check_distributive_law(x, {x, two_loops()}, DistBounds{});
  CHECK(passes(r));
  for (const auto& l : r.laws) CHECK(l.checked > 0);

  SUBCASE("point: lambda is a bijection on each graded piece of positive length") {
    // The length-0 piece collapses T(1) onto the empty word.
    GlobSet pt = GlobSetBuilder(1).cell("v").build();
    auto mx = materialize_words(pt, 2);
    auto tmx = materialize_free(mx.set, 3);
    auto tx = materialize_free(pt, 3);
    auto mtx = materialize_words(tx.set, 2);
    for (int d = 0; d <= 1; ++d)
      for (std::size_t n = 1; n <= 2; ++n) {
        std::set<int> image;
        long source = 0, target = 0;
        for (const auto& c : tmx.cells[d])
          if (mx.words[0][c.label[0][0]].size() == n) {
            ++source;
            image.insert(distributive_lambda(mx, tx, mtx, c));
          }
        for (const auto& w : mtx.words[d]) target += w.size() == n;
        CHECK(static_cast<long>(image.size()) == source);
        CHECK(source == target);
        CHECK(image.count(-1) == 0);
      }
  }

  SUBCASE("lambda components re-decompose under the hom decomposition") {
    auto mx = materialize_words(x, 2);
    auto tmx = materialize_free(mx.set, 3);
    auto tx = materialize_free(x, 3);
    auto mtx = materialize_words(tx.set, 2);
    int checked = 0;
    for (const auto& c : tmx.cells[1]) {
      int out = distributive_lambda(mx, tx, mtx, c);
      REQUIRE(out >= 0);
      for (int t : mtx.words[1][out]) {
        const FreeCell& part = tx.cells[1][t];
        auto h = hom_decompose(x, 0, 0, part);
        CHECK(hom_reconstruct(x, h) == part);
        ++checked;
      }
    }
    CHECK(checked > 0);
  }
}
