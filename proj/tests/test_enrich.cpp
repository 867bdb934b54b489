#include "doctest.h"
#include "globcat/enrich.hpp"
#include "globcat/samples.hpp"

using namespace globcat;

namespace {

long failed(const Report& r, const std::string& law) {
  for (const auto& l : r.laws)
    if (l.law == law) return l.failed;
  return -1;
}

long checked(const Report& r, const std::string& law) {
  for (const auto& l : r.laws)
    if (l.law == law) return l.checked;
  return -1;
}

// One object; 1-cells are the elements of a 3-element magma with unit m0.
ECat magma_ecat(const std::function<int(int, int)>& mul) {
  GlobSet x = GlobSetBuilder(1).cell("o").cell("m0", "o", "o").cell("m1", "o", "o").cell("m2", "o", "o").build();
  auto e = embed_set_operad(std::make_shared<const SetOperad>(terminal_operad(3)));
  return make_ecat(e, x, {3, 1}, [&](const std::vector<int>&, const std::vector<GlobSet>&, const MultiCell& c) {
    int acc = 0;
    for (const auto& l : c.labels) acc = mul(acc, l[0][0]);
    return std::optional<int>(acc);
  });
}

// Left fold of composition along a tuple of arrows; identity when empty.
int fold(const CompositionTables& ct, int object, const std::vector<int>& arrows) {
  if (arrows.empty()) return ct.identity[0][object];
  int acc = arrows[0];
  for (std::size_t i = 1; i < arrows.size(); ++i) acc = ct.compose(1, 0, acc, arrows[i]);
  return acc;
}

const std::vector<CompositionTables>& small_samples() {
  static const std::vector<CompositionTables> s{arrow_category(), cyclic_monoid(3), z2_two_category(), z2_two_group(),
                                                loop_two_category()};
  return s;
}

}  // namespace

TEST_CASE("sample categories are strict") {
  for (const auto& ct : small_samples()) CHECK(check_strict(ct).ok());
  CHECK(check_strict(chain_category()).ok());
  CHECK(check_strict(parallel_two_category()).ok());
}

TEST_CASE("one-object categories over the terminal operad are monoids") {
  auto mod3 = [](int a, int b) { return (a + b) % 3; };
  auto r = check_ecat(magma_ecat(mod3));
  CHECK(r.ok());
  CHECK(checked(r, "associativity") > 0);
  // Unital but not associative: 1*1 = 2*2 = ... see the table below.
  auto bad = [](int a, int b) {
    if (a == 0) return b;
    if (b == 0) return a;
    return a == 1 && b == 1 ? 2 : (a == 2 && b == 2 ? 1 : 2);
  };
  auto rb = check_ecat(magma_ecat(bad));
  CHECK(failed(rb, "associativity") > 0);
  CHECK(failed(rb, "unit") == 0);
}

TEST_CASE("over the unit multitensor, identity compositions pass") {
  GlobSet x = GlobSetBuilder(1).cell("a").cell("b").cell("f", "a", "b").cell("g", "a", "b").cell("h", "b", "a").build();
  auto e = embed_set_operad(std::make_shared<const SetOperad>(unit_operad(3)));
  ECat c = make_ecat(e, x, {3, 1}, [](const std::vector<int>&, const std::vector<GlobSet>&, const MultiCell& m) {
    return std::optional<int>(m.labels.at(0)[0][0]);
  });
  auto r = check_ecat(c);
  CHECK(r.ok());
  CHECK(checked(r, "unit") == 3);
}

TEST_CASE("algebras of the identity operad and categories over the product multitensor") {
  const ECatBounds b{3, 3};
  for (const auto& ct : small_samples()) {
    const int n = ct.cells.trunc();
    auto view = tcross(n - 1);
    AlgebraTable alg = algebra_from_tables(*view, ct, b);
    ECat c = algebra_to_ecat(view, alg, b);
    auto r = check_ecat(c);
    CHECK(r.ok());
    CHECK(checked(r, "associativity") > 0);
    CHECK(checked(r, "E1-algebra-map") > 0);
    CHECK(ecat_to_algebra(c) == alg);
    CHECK(algebra_to_ecat(view, ecat_to_algebra(c), b) == c);
    CHECK(tables_from_algebra(alg) == ct);
    CHECK(c.carrier.count(0) == ct.cells.count(0));
  }
}

TEST_CASE("categories: compositions are evaluations of arrow tuples") {
  CompositionTables ct = chain_category();
  auto view = tcross(0);
  ECat c = algebra_to_ecat(view, algebra_from_tables(*view, ct, {3, 1}), {3, 1});
  long compared = 0;
  for (const auto& [seq, table] : c.kappa) {
    GlobSet target = hom(ct.cells, seq.front(), seq.back());
    auto hs = seq_homs(ct.cells, seq);
    for (const auto& [cell, v] : table) {
      std::vector<int> arrows;
      for (std::size_t i = 0; i < hs.size(); ++i) arrows.push_back(hom_to_parent(ct.cells, hs[i], {0, cell.labels[i][0][0]}).idx);
      CHECK(hom_to_parent(ct.cells, target, {0, v}).idx == fold(ct, seq[0], arrows));
      ++compared;
    }
  }
  CHECK(compared > 20);
}

TEST_CASE("a broken composite shows up in the reassembled algebra") {
  auto view = tcross(0);
  AlgebraTable alg = algebra_from_tables(*view, cyclic_monoid(3), {3, 1});
  ECat c = algebra_to_ecat(view, alg, {3, 1});
  // r1 r1 now composes to r0 instead of r2.
  int changed = 0;
  for (auto& [cell, v] : c.kappa.at({0, 0, 0}))
    if (cell.labels[0][0][0] == 1 && cell.labels[1][0][0] == 1) {
      v = (v + 1) % 3;
      ++changed;
    }
  REQUIRE(changed == 1);
  auto r = check_ecat(c);
  CHECK(failed(r, "associativity") > 0);
  CHECK(failed(r, "unit") == 0);
  AlgebraTable back = ecat_to_algebra(c);
  long differ = 0;
  for (const auto& [cell, v] : alg.act) differ += back.act.at(cell) != v;
  CHECK(differ == 1);
  CHECK_FALSE(check_strict(tables_from_algebra(back)).ok());
}

TEST_CASE("product-enriched and algebra-enriched presentations") {
  const ECatBounds b{3, 3};
  for (const auto& ct : {chain_category(), cyclic_monoid(3), z2_two_group(), loop_two_category()}) {
    auto view = tcross(ct.cells.trunc() - 1);
    ECat c = algebra_to_ecat(view, algebra_from_tables(*view, ct, b), b);
    AlgCat d = tcross_to_algcat(c);
    auto r = check_algcat(d);
    CHECK(r.ok());
    CHECK(checked(r, "comp-assoc") > 0);
    CHECK(checked(r, "comp-algebra-map") > 0);
    CHECK(checked(r, "hom-assoc") > 0);
    CHECK(algcat_to_tcross(d) == c);
    CHECK(tcross_to_algcat(algcat_to_tcross(d)) == d);
    CHECK(d.carrier.ids(0) == ct.cells.ids(0));
  }
  SUBCASE("a broken hom algebra fails") {
    auto view = tcross(1);
    ECat c = algebra_to_ecat(view, algebra_from_tables(*view, z2_two_group(), b), b);
    AlgCat d = tcross_to_algcat(c);
    // Send the vertical composite s;s in hom(o, o) to s instead of ie.
    auto& alg = d.hom_alg.at({0, 0});
    GlobSet h = hom(d.carrier, 0, 0);
    const int s = h.at("s").idx;
    int changed = 0;
    for (auto& [f, v] : alg)
      if (f.tree == path_tree(2) && f.dim() == 1 && f.label[1] == std::vector<int>{s, s}) {
        v = s;
        ++changed;
      }
    REQUIRE(changed == 1);
    CHECK_FALSE(check_algcat(d).ok());
  }
}

TEST_CASE("iterated enrichment") {
  const ECatBounds b{3, 3};
  SUBCASE("level 0 is the identity on sets") {
    GlobSet s(0, {{"p", "q"}}, {{}}, {{}});
    CompositionTables ct{s, {}, {}};
    EnrichedCat e = psi(ct, b);
    CHECK(e.level == 0);
    CHECK(e.objects == s.ids(0));
    CHECK(psi_inverse(e, b) == ct);
  }
  SUBCASE("level 1: a three-object category") {
    CompositionTables ct = chain_category();
    EnrichedCat e = psi(ct, b);
    CHECK(e.level == 1);
    CHECK(e.objects == std::vector<std::string>{"a", "b", "c"});
    CHECK(e.hom(0, 2).objects == std::vector<std::string>{"gf"});
    const auto& ab = e.hom(0, 1).objects;
    const auto& bc = e.hom(1, 2).objects;
    CHECK(ab == std::vector<std::string>{"f"});
    CHECK(bc == std::vector<std::string>{"g"});
    CHECK(e.comp.at({0, 1, 2}).objects.at({0, 0}) == 0);
    CHECK(canonical(psi_inverse(e, b)) == canonical(ct));
    CHECK(psi(psi_inverse(e, b), b) == e);
  }
  SUBCASE("level 2: strict 2-categories") {
    for (const auto& ct : {z2_two_group(), parallel_two_category()}) {
      EnrichedCat e = psi(ct, b);
      CHECK(e.level == 2);
      CHECK(e.objects == ct.cells.ids(0));
      CompositionTables back = psi_inverse(e, b);
      CHECK(check_strict(back).ok());
      CHECK(canonical(back) == canonical(ct));
      CHECK(psi(back, b) == e);
    }
  }
  SUBCASE("truncation commutes with the passage to enrichment") {
    for (const auto& ct : {z2_two_group(), parallel_two_category()}) {
      CHECK(truncate_homs(phi(ct, b), 0) == phi(truncate(ct, 1), b));
      CHECK(truncate(psi(ct, b), 1) == psi(truncate(ct, 1), b));
    }
  }
}
