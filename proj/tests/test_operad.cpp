#include <random>
#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "globcat/operad.hpp"
#include "oracles.hpp"

using namespace globcat;

namespace {

GlobSet finite_set(int n) {
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("e" + std::to_string(i));
  return GlobSet(0, {ids}, {{}}, {{}});
}

// 0 -> 1 -> 2 -> 3
GlobSet path_graph(int n) {
  GlobSetBuilder b(1);
  for (int i = 0; i <= n; ++i) b.cell("p" + std::to_string(i));
  for (int i = 0; i < n; ++i) b.cell("s" + std::to_string(i), "p" + std::to_string(i), "p" + std::to_string(i + 1));
  return b.build();
}

bool passes(const Report& r) { return r.ok(); }

long checked(const Report& r, const std::string& law) {
  for (const auto& l : r.laws)
    if (l.law == law) return l.checked;
  return -1;
}

long failed(const Report& r, const std::string& law) {
  for (const auto& l : r.laws)
    if (l.law == law) return l.failed;
  return -1;
}

std::set<MultiCell> as_set(const std::vector<MultiCell>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("apply of the identity collection is the free construction") {
  Collection id = identity_collection(2, 4);
  GlobSet x = fx::five_cells();
  for (int d = 0; d <= 2; ++d) {
    std::set<FreeCell> a, t;
    for (const auto& c : apply(id, x, d, 4)) {
      REQUIRE((d == 0 ? c.op == trivial_op() : tree_from_id(c.op) == arity_of(id, c.op)));
      a.insert({arity_of(id, c.op), c.label});
    }
    for (const auto& c : free_cells(x, d, 4)) t.insert(c);
    CHECK(a == t);
  }
}

TEST_CASE("a single binary operation picks out paths of length two") {
  Collection bin{"binary", 1, {{"m", 1, path_tree(2), "", ""}}};
  GlobSet p = path_graph(4);
  auto cells = apply(bin, p, 1, 5);
  CHECK(cells.size() == 3);
  for (const auto& c : cells) CHECK(c.label[0][2] == c.label[0][0] + 2);
}

TEST_CASE("apply counts match brute-force map counting") {
  std::mt19937 rng(41);
  Collection id = identity_collection(2, 4);
  for (int trial = 0; trial < 5; ++trial) {
    GlobSet x = fx::random_globset(rng, 6);
    for (int d = 1; d <= 2; ++d) {
      long expect = 0;
      for (const TOp* op : id.of_dim(d, 4)) expect += oracle::count_maps(glob_of_tree(op->arity), x);
      CHECK(static_cast<long>(apply(id, x, d, 4).size()) == expect);
    }
  }
}

TEST_CASE("materialized AX is closed under boundaries") {
  auto m = materialize_apply(identity_collection(2, 4), fx::five_cells(), 4);
  CHECK(m.set.count(0) == 1);
  for (int d = 1; d <= 2; ++d)
    for (int i = 0; i < m.set.count(d); ++i) {
      CHECK(m.cells[d - 1][m.set.src(d, i)] == acell_src(identity_collection(2, 4), m.cells[d][i]));
    }
}

TEST_CASE("bar construction") {
  SUBCASE("identity collection: pairs of free cells, matching the product multitensor") {
    Collection id = identity_collection(2, 7);
    GlobSet x = fx::loop_graph();
    auto e = tcross(1);
    for (int k = 0; k <= 2; ++k) {
      std::vector<GlobSet> xs(k, x);
      for (int d = 0; d <= 1; ++d) CHECK(as_set(bar(id, xs, d, 3)) == as_set(multi_cells(*e, xs, d, 3)));
    }
    CHECK(bar(id, {x, x}, 1, 3).size() == free_cells(x, 1, 3).size() * free_cells(x, 1, 3).size());
  }
  SUBCASE("k = 1 is T on the single argument") {
    Collection id = identity_collection(2, 5);
    GlobSet x = path_graph(3);
    CHECK(bar(id, {x}, 1, 4).size() == free_cells(x, 1, 4).size());
  }
  SUBCASE("k = 0 is one cell per dimension") {
    Collection id = identity_collection(3, 4);
    for (int d = 0; d <= 2; ++d) CHECK(bar(id, {}, d, 3).size() == 1);
  }
  SUBCASE("split and join are inverse") {
    Collection id = identity_collection(2, 7);
    std::vector<GlobSet> xs{fx::loop_graph(), path_graph(2)};
    GlobSet s = seq(xs, 1);
    for (int d = 0; d <= 1; ++d)
      for (const auto& c : bar(id, xs, d, 3)) {
        ACell joined = join_bar_cell(id, xs, s, c);
        CHECK(split_bar_cell(id, xs, s, joined) == c);
        CHECK(is_free_cell(FreeCell{arity_of(id, c.op), joined.label}, s));
      }
  }
  SUBCASE("a set operad and its embedded multitensor agree") {
    Operad par = operad_from_set_operad(parity_operad(3));
    auto e = embed_set_operad(std::make_shared<const SetOperad>(parity_operad(3)));
    for (int k = 0; k <= 3; ++k) {
      std::vector<GlobSet> xs(k, finite_set(2));
      CHECK(as_set(bar(par.coll, xs, 0, 1)) == as_set(multi_cells(*e, xs, 0, 1)));
    }
  }
}

TEST_CASE("hom decomposition of AX round-trips") {
  std::mt19937 rng(7);
  Collection id = identity_collection(2, 4);
  for (int trial = 0; trial < 5; ++trial) {
    GlobSet x = fx::random_globset(rng, 6);
    for (int d = 1; d <= 2; ++d)
      for (const auto& c : apply(id, x, d, 4)) {
        auto h = hom_decompose_a(id, x, c);
        CHECK(h.seq == c.label[0]);
        CHECK(hom_reconstruct_a(id, x, h) == c);
      }
  }
  SUBCASE("sequence carrier: homs shift to start at 0") {
    GlobSet x = path_graph(4);
    Operad bin = operad_from_set_operad(terminal_operad(3));
    for (int a = 0; a <= 4; ++a)
      for (int b = 0; b <= 4; ++b) {
        long here = 0;
        for (const auto& c : apply(bin.coll, x, 1, 4)) here += c.label[0].front() == a && c.label[0].back() == b;
        std::vector<int> zs;
        for (int i = a; i <= b; ++i) zs.push_back(i);
        long shifted = 0;
        if (a <= b) {
          auto sp = star_pullback(x, zs);
          for (const auto& c : apply(bin.coll, sp.set, 1, 4)) shifted += c.label[0].front() == 0 && c.label[0].back() == b - a;
        }
        CHECK(here == shifted);
        if (a > b) CHECK(here == 0);
      }
  }
}

TEST_CASE("operad laws") {
  SUBCASE("identity operads pass") {
    for (int n : {1, 2}) {
      auto r = check_operad(identity_operad(n, 4));
      CHECK(passes(r));
      CHECK(checked(r, "associativity") > 0);
      CHECK(checked(r, "totality") > 0);
      if (n == 2) CHECK(checked(r, "subst-boundary") > 0);
    }
  }
  SUBCASE("set operads embedded over a point pass") {
    for (auto o : {terminal_operad(3), unit_operad(3), parity_operad(3)}) {
      auto r = check_operad(operad_from_set_operad(o));
      CHECK(passes(r));
    }
  }
  SUBCASE("a composite with the wrong arity fails mu-compatibility") {
    Operad o = identity_operad(1, 4);
    int changed = 0;
    for (auto& s : o.subst)
      if (s.result == tree_id(path_tree(2)) && changed == 0) {
        s.result = tree_id(path_tree(3));
        ++changed;
      }
    o.reindex();
    auto r = check_operad(o);
    CHECK(failed(r, "subst-arity-mu") == 1);
  }
  SUBCASE("a corrupted operation arity fails") {
    Operad o = operad_from_set_operad(parity_operad(3));
    for (auto& op : o.coll.ops)
      if (op.id == "1/2") op.arity = path_tree(3);
    CHECK(failed(check_operad(o), "subst-arity-mu") > 0);
  }
  SUBCASE("a missing composite fails totality") {
    Operad o = identity_operad(1, 3);
    o.subst.pop_back();
    o.reindex();
    CHECK(failed(check_operad(o), "totality") == 1);
  }
  SUBCASE("a non-associative table fails associativity") {
    // Flip one binary composite in the parity operad.
    Operad o = operad_from_set_operad(parity_operad(3));
    for (auto& s : o.subst)
      if (s.outer == "0/2" && s.labelling[1] == std::vector<std::string>{"0/1", "1/2"})
        s.result = s.result[0] == '0' ? "1/3" : "0/3";
    o.reindex();
    CHECK(failed(check_operad(o), "associativity") > 0);
  }
}

TEST_CASE("operads and their multitensor view") {
  SUBCASE("round trips are exact") {
    for (const Operad& a : {identity_operad(1, 4), identity_operad(2, 4), operad_from_set_operad(parity_operad(3))}) {
      MTTable t = to_mt_operad(a);
      CHECK(t.trunc == a.coll.trunc - 1);
      for (int d = 0; d <= t.trunc; ++d) {
        long before = 0, after = 0;
        for (const auto& op : a.coll.ops) before += op.dim == d + 1;
        for (const auto& op : t.ops) after += op.dim == d;
        CHECK(before == after);
      }
      CHECK(from_mt_operad(t, a.support) == a);
      CHECK(to_mt_operad(from_mt_operad(t, a.support)) == t);
    }
  }
  SUBCASE("identity operad gives the product multitensor") {
    MTTable t = to_mt_operad(identity_operad(2, 4));
    auto e = tcross(1);
    for (const auto& op : t.ops) {
      auto f = e->find(op.id);
      REQUIRE(f);
      CHECK(*f == op);
    }
    auto view = table_operad(t);
    for (int k = 0; k <= 2; ++k)
      for (int d = 0; d <= 1; ++d) {
        std::vector<GlobSet> xs(k, fx::loop_graph());
        CHECK(as_set(multi_cells(*view, xs, d, 1)) == as_set(multi_cells(*e, xs, d, 1)));
      }
  }
  SUBCASE("bar of an operad satisfies the multitensor laws") {
    auto view = table_operad(to_mt_operad(operad_from_set_operad(parity_operad(3))));
    CHECK(check_multitensor(*view, finite_set(2), MTBounds{3, 1, 1, 0}).ok());
    auto idview = table_operad(to_mt_operad(identity_operad(2, 5)));
    auto r = check_multitensor(*idview, fx::loop_graph(), MTBounds{2, 2, 2, 1});
    CHECK(r.ok());
    CHECK(checked(r, "associativity") > 0);
  }
}

TEST_CASE("collections and multitensors") {
  SUBCASE("the product multitensor gives the identity collection") {
    Collection c = collection_from_multitensor(*tcross(1), 2, 3);
    for (const auto& op : c.ops) CHECK(tree_from_id(op.id) == op.arity);
    Collection id = identity_collection(2, 7);
    for (const auto& op : c.ops) CHECK(id.find(op.id) != nullptr);
  }
  SUBCASE("collection, bar, collection") {
    Collection id = identity_collection(2, 4);
    CHECK(collection_from_mt_ops(id.name, 1, bar_operations(id)) == id);
  }
  SUBCASE("multitensor, collection, bar on a two-operation example") {
    MTTable t{"two", 0, {{"u/1", 0, {Tree()}, "", ""}, {"m/2", 0, {Tree(), Tree()}, "", ""}}, {"u/1"}, {}};
    auto e = table_operad(t);
    Collection c = collection_from_multitensor(*e, 3, 1);
    for (int k = 0; k <= 3; ++k) {
      std::vector<GlobSet> xs(k, finite_set(3));
      CHECK(as_set(bar(c, xs, 0, 1)) == as_set(multi_cells(*e, xs, 0, 1)));
    }
    CHECK(bar_operations(c) == t.ops);
  }
}

TEST_CASE("collections are cartesian over T") {
  GlobSet x = fx::loop_graph();
  GlobSet y = GlobSetBuilder(1).cell("v").cell("l", "v", "v").cell("m", "v", "v").build();
  for (const Collection& a : {identity_collection(1, 4), operad_from_set_operad(parity_operad(3)).coll}) {
    auto r = check_cartesian(a, x, y, 4);
    CHECK(r.ok());
    CHECK(r.laws[0].checked == 2 * 2);
    CHECK(check_cartesian(a, y, x, 4).ok());
  }
}
