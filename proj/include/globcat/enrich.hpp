#pragma once

// Categories enriched in a multitensor, categories enriched in algebras over
// plain products, the passage from algebras of an operad to categories
// enriched in its bar multitensor, and the tower of iterated enrichment.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "globcat/freecat.hpp"
#include "globcat/glob.hpp"
#include "globcat/multitensor.hpp"
#include "globcat/operad.hpp"
#include "globcat/report.hpp"

namespace globcat {

struct ECatBounds {
  int max_len = 3;   // compositions stored for object sequences with <= max_len homs
  int max_size = 3;  // every arity tree of an enumerated cell
  friend bool operator==(const ECatBounds&, const ECatBounds&) = default;
};

// Object sequences x_0..x_k with k <= max_len.
std::vector<std::vector<int>> object_sequences(int objects, int max_len);
std::vector<GlobSet> seq_homs(const GlobSet& x, const std::vector<int>& seq);

struct ECat {
  MTOperadPtr e;
  GlobSet carrier;  // objects are the 0-cells, X(a,b) = hom(carrier, a, b)
  ECatBounds bounds;
  // kappa[x_0..x_k][c] indexes a cell of X(x_0,x_k) of the dimension of c.
  std::map<std::vector<int>, std::map<MultiCell, int>> kappa;
  friend bool operator==(const ECat& a, const ECat& b) {
    return a.e->name() == b.e->name() && a.carrier == b.carrier && a.bounds == b.bounds && a.kappa == b.kappa;
  }
};

// nullopt leaves the entry out.
using KappaFn = std::function<std::optional<int>(const std::vector<int>& seq,
                                                 const std::vector<GlobSet>& homs, const MultiCell& c)>;
ECat make_ecat(MTOperadPtr e, GlobSet carrier, const ECatBounds& b, const KappaFn& f);

struct ECatCheckBounds {
  int outer_size = 2;  // arity trees of the outer cell in associativity
  long max_instances = 500000;
};
// Totality and globularity of kappa, the unit law, associativity against
// substitution, and its unary instances: homs are E_1-algebras and every
// kappa is an E_1-algebra map.
Report check_ecat(const ECat& c, const ECatCheckBounds& b = {});

// Structure map of an algebra on the cells of AX, keyed by the operations of
// the bar multitensor.
struct AlgebraTable {
  GlobSet carrier;
  std::map<ACell, int> act;  // cells of dimension >= 1, same dimension out
  friend bool operator==(const AlgebraTable&, const AlgebraTable&) = default;
};
// Strict n-category seen as an algebra over the bar view; the action is the
// pasting evaluation of the operation's arity.
AlgebraTable algebra_from_tables(const MTOperad& view, const CompositionTables& ct, const ECatBounds& b);
// Identities and binary composites read back from an action of the identity
// operad, i.e. on pasting shapes.
CompositionTables tables_from_action(const GlobSet& x, const std::function<std::optional<int>(const FreeCell&)>& act);
CompositionTables tables_from_algebra(const AlgebraTable& a);

// view is the bar multitensor of the operad (tcross for the identity operad).
ECat algebra_to_ecat(MTOperadPtr view, const AlgebraTable& alg, const ECatBounds& b);
AlgebraTable ecat_to_algebra(const ECat& c);

// Category enriched in T_{<=n}-algebras over cartesian product.
struct AlgCat {
  GlobSet carrier;  // truncation n + 1
  ECatBounds bounds;
  std::map<std::pair<int, int>, std::map<FreeCell, int>> hom_alg;  // T X(a,b) -> X(a,b)
  // comp[x_0..x_k][{d, c_1..c_k}]: composite of a tuple of d-cells.
  std::map<std::vector<int>, std::map<std::vector<int>, int>> comp;
  friend bool operator==(const AlgCat&, const AlgCat&) = default;
};
AlgCat tcross_to_algcat(const ECat& c);
ECat algcat_to_tcross(const AlgCat& d);
Report check_algcat(const AlgCat& d, int outer_size = 2);

// Tower of iterated enrichment: level 0 is a set, level n+1 a category
// enriched in level n over cartesian product.
struct ProductMap {  // a functor out of a finite product, level by level
  std::map<std::vector<int>, int> objects;
  std::vector<ProductMap> homs;
  std::map<std::pair<std::vector<int>, std::vector<int>>, int> hom_index;
  friend bool operator==(const ProductMap&, const ProductMap&) = default;
};
struct EnrichedCat {
  int level = 0;
  std::vector<std::string> objects;
  std::vector<EnrichedCat> homs;  // homs[a * objects + b], level - 1
  std::map<std::vector<int>, ProductMap> comp;
  const EnrichedCat& hom(int a, int b) const { return homs.at(a * objects.size() + b); }
  friend bool operator==(const EnrichedCat&, const EnrichedCat&) = default;
};

AlgCat phi(const CompositionTables& ct, const ECatBounds& b);
CompositionTables phi_inverse(const AlgCat& d);
EnrichedCat psi(const CompositionTables& ct, const ECatBounds& b);
CompositionTables psi_inverse(const EnrichedCat& e, const ECatBounds& b);

CompositionTables truncate(const CompositionTables& ct, int n);
AlgCat truncate_homs(const AlgCat& d, int n);  // Enr of truncation to T_{<=n}
EnrichedCat truncate(const EnrichedCat& e, int level);
// Cells sorted by id within each dimension.
CompositionTables canonical(const CompositionTables& ct);

}  // namespace globcat
