#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace globcat;

TEST_CASE("hom of a loop has the loop as its only 0-cell") {
  GlobSet h = hom(fx::loop_graph(), "v", "v");
  CHECK(h.trunc() == 0);
  CHECK(h.ids(0) == std::vector<std::string>{"l"});
}

TEST_CASE("hom between unrelated 0-cells is empty") {
  GlobSet x = GlobSetBuilder(1).cell("a").cell("b").build();
  CHECK(hom(x, "a", "b").total() == 0);
}

TEST_CASE("hom inside glob([2,1])") {
  GlobSet h = hom(fx::glob21(), 0, 1);
  CHECK(h.count(0) == 3);
  CHECK(h.count(1) == 2);
}

TEST_CASE("hom rejects unknown 0-cells") {
  CHECK_THROWS_AS(hom(fx::loop_graph(), "v", "nope"), InputError);
  CHECK_THROWS_AS(hom(fx::loop_graph(), "l", "v"), InputError);
}

TEST_CASE("seq constructions") {
  GlobSet pt(0, {{"0"}}, {{}}, {{}});
  GlobSet s0 = seq({}, 0);
  CHECK(s0.count(0) == 1);
  CHECK(s0.total() == 1);
  GlobSet s2 = seq({pt, pt});
  CHECK(s2.count(0) == 3);
  CHECK(s2.count(1) == 2);
  CHECK(s2.src(1, 1) == 1);
  CHECK(s2.tgt(1, 1) == 2);
  GlobSet x = fx::five_cells();
  GlobSet sx = seq({x});
  CHECK(sx.count(0) == 2);
  CHECK(isomorphic(hom(sx, 0, 1), x));
  CHECK_THROWS_AS(seq({pt, fx::loop_graph()}), InputError);
}

TEST_CASE("star pullback") {
  GlobSet x = fx::glob21();
  auto p0 = star_pullback(x, {1});
  CHECK(p0.set.total() == 1);
  CHECK(p0.bar[0] == std::vector<int>{1});
  auto p1 = star_pullback(x, {0, 1});
  CHECK(is_map(p1.set, x, p1.bar));
  CHECK(isomorphic(hom(p1.set, 0, 1), hom(x, 0, 1)));
  auto p2 = star_pullback(x, {0, 1, 2});
  CHECK(oracle::is_iso(p2.set, x, p2.bar));
  CHECK_THROWS_AS(star_pullback(x, {0, 7}), InputError);
}

TEST_CASE("connected sequences") {
  GlobSet x = fx::glob21();
  CHECK(is_connected(x, {2}));
  CHECK(is_connected(x, {0, 1, 2}));
  CHECK_FALSE(is_connected(x, {0, 2}));
  CHECK_FALSE(is_connected(x, {1, 0}));
}

TEST_CASE("coproduct and pullback basics") {
  Coproduct c = coproduct({}, 1);
  CHECK(c.set.total() == 0);
  GlobSet x = fx::five_cells();
  Pullback p = pullback(x, identity_map(x), x, identity_map(x), x);
  CHECK(oracle::is_iso(p.set, x, p.left));
  GlobSet two(0, {{"a", "b"}}, {{}}, {{}});
  GlobSet pt(0, {{"*"}}, {{}}, {{}});
  Label to_pt{{0, 0}};
  Pullback prod = pullback(two, to_pt, two, to_pt, pt);
  CHECK(prod.set.total() == 4);
  CHECK(prod.set.id(0, 1) == "(a,b)");
  CHECK_THROWS_AS(coproduct({two, x}), InputError);
}

TEST_CASE("suspension") {
  GlobSet empty(1, {}, {}, {});
  GlobSet se = suspend(empty);
  CHECK(se.total() == 1);
  GlobSet y = fx::five_cells();
  CHECK(isomorphic(desuspend(seq({y})), y));
  CHECK_THROWS_AS(desuspend(GlobSet()), InputError);
}

TEST_CASE("property: desuspend after suspend is the identity up to renaming") {
  std::mt19937 rng(20261016);
  for (int trial = 0; trial < 40; ++trial) {
    GlobSet x = fx::random_globset(rng, 20);
    GlobSet back = desuspend(suspend(x));
    CHECK(back.trunc() == x.trunc());
    for (int d = 0; d <= x.trunc(); ++d) {
      REQUIRE(back.count(d) == x.count(d));
      for (int i = 0; i < x.count(d); ++i) {
        CHECK(back.id(d, i) == "s/" + x.id(d, i));
        if (d > 0) {
          CHECK(back.src(d, i) == x.src(d, i));
          CHECK(back.tgt(d, i) == x.tgt(d, i));
        }
      }
    }
  }
}

TEST_CASE("property: all_maps agrees with the naive map counter") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 25; ++trial) {
    GlobSet a = fx::random_globset(rng, 5);
    GlobSet b = fx::random_globset(rng, 7);
    CHECK(static_cast<long>(all_maps(a, b).size()) == oracle::count_maps(a, b));
  }
}

namespace {

long matching(const std::vector<Label>& maps, const std::function<bool(const Label&)>& ok) {
  long n = 0;
  for (const auto& m : maps) n += ok(m);
  return n;
}

}  // namespace

TEST_CASE("property: coproduct universal property") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    GlobSet a = fx::random_globset(rng, 4);
    GlobSet b = fx::random_globset(rng, 4);
    GlobSet z = fx::random_globset(rng, 4);
    Coproduct c = coproduct({a, b});
    REQUIRE(c.set.total() == a.total() + b.total());
    auto into = all_maps(c.set, z);
    for (const auto& fa : all_maps(a, z))
      for (const auto& fb : all_maps(b, z)) {
        long n = matching(into, [&](const Label& u) {
          return compose(u, c.injections[0]) == fa && compose(u, c.injections[1]) == fb;
        });
        CHECK(n == 1);
      }
  }
}

TEST_CASE("property: pullback universal property") {
  std::mt19937 rng(13);
  int tested = 0;
  for (int trial = 0; trial < 40 && tested < 12; ++trial) {
    GlobSet base = fx::random_globset(rng, 4);
    GlobSet a = fx::random_globset(rng, 4);
    GlobSet b = fx::random_globset(rng, 4);
    auto fs = all_maps(a, base), gs = all_maps(b, base);
    if (fs.empty() || gs.empty()) continue;
    ++tested;
    const Label& f = fs[trial % fs.size()];
    const Label& g = gs[(trial * 7) % gs.size()];
    Pullback p = pullback(a, f, b, g, base);
    CHECK(compose(f, p.left) == compose(g, p.right));
    GlobSet w = fx::random_globset(rng, 3);
    auto into = all_maps(w, p.set);
    for (const auto& l : all_maps(w, a))
      for (const auto& r : all_maps(w, b)) {
        if (compose(f, l) != compose(g, r)) continue;
        long n = matching(into, [&](const Label& u) {
          return compose(p.left, u) == l && compose(p.right, u) == r;
        });
        CHECK(n == 1);
      }
  }
  CHECK(tested > 0);
}
