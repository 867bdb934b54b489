#include "doctest.h"
#include "fixtures.hpp"
#include "globcat/json_io.hpp"
#include "globcat/samples.hpp"

using namespace globcat;

TEST_CASE("globular sets and maps round-trip through JSON") {
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) {
    GlobSet x = fx::random_globset(rng, 8);
    Json j = to_json(x);
    CHECK(globset_from_json(j) == x);
    CHECK(to_json(globset_from_json(j)).dump() == j.dump());
  }
  GlobSet g = fx::glob21(), x = fx::five_cells();
  for (const auto& f : all_maps(g, x)) {
    Json j = map_to_json(g, x, f);
    CHECK(map_from_json(j, g, x) == f);
  }
}

TEST_CASE("malformed globular sets are input errors") {
  CHECK_THROWS_AS(globset_from_json(parse_json(R"({"trunc": 1, "cells": {"0": ["a"], "1": ["f"]}, "src": {}, "tgt": {}})")),
                  InputError);
  CHECK_THROWS_AS(globset_from_json(parse_json(
                      R"({"trunc": 2, "cells": {"0": ["a","b"], "1": ["f","g"], "2": ["al"]},
                          "src": {"f": "a", "g": "b", "al": "f"}, "tgt": {"f": "b", "g": "a", "al": "g"}})")),
                  InputError);
  CHECK_THROWS_AS(parse_json("{"), InputError);
  CHECK_THROWS_AS(globset_from_json(parse_json(R"({"cells": {}})")), InputError);
}

TEST_CASE("trees and free cells round-trip through JSON") {
  for (int d = 0; d <= 3; ++d)
    for (const auto& t : enumerate_trees(d, 5)) CHECK(tree_from_json(to_json(t)) == t);
  CHECK(to_json(point_tree()).dump() == R"({"dim":0})");
  CHECK_THROWS_AS(tree_from_json(parse_json(R"({"dim": 2, "kids": [{"dim": 0}]})")), InputError);
  GlobSet x = fx::five_cells();
  for (const auto& c : free_cells(x, 2, 4)) CHECK(freecell_from_json(to_json(x, c), x) == c);
}

TEST_CASE("composition tables round-trip through JSON") {
  for (const auto& ct : {arrow_category(), chain_category(), z2_two_group(), parallel_two_category()}) {
    Json j = to_json(ct);
    CHECK(tables_from_json(j) == ct);
  }
}

TEST_CASE("operads round-trip through JSON") {
  for (const auto& o : {terminal_operad(3), parity_operad(3), unit_operad(2)}) {
    SetOperad back = set_operad_from_json(to_json(o));
    CHECK(back.ops == o.ops);
    CHECK(back.unit == o.unit);
    CHECK(back.subst == o.subst);
  }
  for (const auto& a : {identity_operad(1, 3), identity_operad(2, 3), operad_from_set_operad(parity_operad(3))}) {
    Json j = to_json(a);
    Operad back = operad_from_json(j);
    CHECK(back == a);
    CHECK(to_json(back).dump() == j.dump());
  }
  MTTable t = to_mt_operad(identity_operad(2, 3));
  CHECK(mt_table_from_json(to_json(t)) == t);
}

TEST_CASE("enriched categories and algebras round-trip through JSON") {
  const ECatBounds b{2, 3};
  for (const auto& ct : {chain_category(), z2_two_group()}) {
    auto view = tcross(ct.cells.trunc() - 1);
    AlgebraTable alg = algebra_from_tables(*view, ct, b);
    ViewedAlgebra va = algebra_from_json(to_json(*view, alg, b));
    CHECK(va.alg == alg);
    CHECK(va.bounds == b);
    ECat c = algebra_to_ecat(view, alg, b);
    CHECK(ecat_from_json(to_json(c)) == c);
    AlgCat d = tcross_to_algcat(c);
    CHECK(algcat_from_json(to_json(d)) == d);
  }
  auto e = embed_set_operad(std::make_shared<const SetOperad>(terminal_operad(3)));
  GlobSet x = GlobSetBuilder(1).cell("o").cell("m0", "o", "o").cell("m1", "o", "o").build();
  ECat c = make_ecat(e, x, {3, 1}, [](const std::vector<int>&, const std::vector<GlobSet>&, const MultiCell& m) {
    int acc = 0;
    for (const auto& l : m.labels) acc ^= l[0][0];
    return std::optional<int>(acc);
  });
  ECat back = ecat_from_json(to_json(c));
  CHECK(back.kappa == c.kappa);
  CHECK(check_ecat(back).ok());
}
