#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "globcat/glob.hpp"
#include "globcat/report.hpp"
#include "globcat/tree.hpp"

namespace globcat {

// A cell of TX: a tree with a labelling glob(tree) -> X.
struct FreeCell {
  Tree tree;
  Label label;

  int dim() const { return tree.dim; }
  friend bool operator==(const FreeCell&, const FreeCell&) = default;
  friend auto operator<=>(const FreeCell& a, const FreeCell& b) {
    if (auto c = a.tree <=> b.tree; c != 0) return c;
    return a.label <=> b.label;
  }
};

// A map glob(tree) -> TX given cell by cell: cells[d][i] is the free cell
// assigned to the i-th d-cell of glob(tree).
struct FreeOverFree {
  Tree tree;
  std::vector<std::vector<FreeCell>> cells;
  friend bool operator==(const FreeOverFree&, const FreeOverFree&) = default;
  friend auto operator<=>(const FreeOverFree&, const FreeOverFree&) = default;
};

std::vector<Label> labellings(const Tree& p, const GlobSet& x);
bool is_free_cell(const FreeCell& c, const GlobSet& x);
std::vector<FreeCell> free_cells(const GlobSet& x, int dim, int max_size);

FreeCell cell_src(const FreeCell& c);
FreeCell cell_tgt(const FreeCell& c);
FreeCell unit(const GlobSet& x, CellIx c);
FreeCell apply_map(const Label& h, const FreeCell& c);  // T(h)
FreeOverFree apply_map(const Label& h, const FreeOverFree& f);

// Structural validity of f : glob(tree) -> TX.
bool is_free_over_free(const FreeOverFree& f, const GlobSet& x);
// eta after a labelling f : glob(p) -> X.
FreeOverFree outer_unit(const GlobSet& x, const Tree& p, const Label& f);
// The map glob(globe_tree(n)) -> TX picking out the n-cell c.
FreeOverFree as_globe_map(const FreeCell& c);
// T(eta) applied to c, viewed as glob(c.tree) -> TX.
FreeOverFree inner_unit(const GlobSet& x, const FreeCell& c);

struct HomComponents {
  CellIx start;                              // x_0 (dimension = shift)
  std::vector<std::vector<int>> zero_cells;  // per kid i: x_{i0} .. x_{i m_i}
  // comps[i][j] : glob(kid i) -> T(hom); labels index the carrier one
  // dimension above the input.
  std::vector<std::vector<FreeOverFree>> comps;
};
HomComponents hom_components(const FreeOverFree& f);
FreeOverFree from_hom_components(const Tree& p, const HomComponents& h);

struct MuResult {
  FreeCell cell;     // (q_f, h_f)
  FreeOverFree g;    // glob(p) -> T(glob(q_f)) with f = T(h_f) g
};
MuResult mu_factor(const FreeOverFree& f);
FreeCell mu(const FreeOverFree& f);
// All g : glob(p) -> T(glob(q)) with T(h) g = f and mu(g) = (q, id).
std::vector<FreeOverFree> factorisations(const FreeOverFree& f, const FreeCell& qh);

struct HomDecomposition {
  int m = 0;
  int dim = 1;                     // dimension of the decomposed cell
  std::vector<int> seq;            // connected 0-cell sequence x_0..x_m
  std::vector<GlobSet> homs;       // X(x_{i-1}, x_i)
  std::vector<FreeCell> parts;     // free cells over homs[i]
};
HomDecomposition hom_decompose(const GlobSet& x, int a, int b, const FreeCell& c);
FreeCell hom_reconstruct(const GlobSet& x, const HomDecomposition& d);

struct GenericFactor {
  Tree shape;
  FreeCell generic;  // (p, identity) in T(glob p)
  Label free_part;   // glob(p) -> X
};
GenericFactor generic_factor(const FreeCell& c);

// Identifier for a free cell, built from the tree text and label ids.
std::string cell_text(const GlobSet& x, const FreeCell& c);

// TX restricted to trees of size <= max_size, as a finite globular set.
// Boundaries never increase size, so the result is closed.
struct FreeMaterialization {
  GlobSet set;
  std::vector<std::vector<FreeCell>> cells;  // cells[d][i] names set's (d,i)
  std::map<FreeCell, int> index;

  int find(const FreeCell& c) const;  // -1 when outside the bound
};
FreeMaterialization materialize_free(const GlobSet& x, int max_size);
// Reads a labelling into m.set as a map glob(tree) -> TX.
FreeOverFree decode(const FreeMaterialization& m, const FreeCell& c);

struct MonadBounds {
  int max_dim = 2;
  int max_size = 5;
  int inner_size = 3;  // TX bound for the associativity law
  int outer_size = 2;  // T(TX) bound for the associativity law
};
// Unit and associativity laws of (T, eta, mu) over x.
Report check_monad(const GlobSet& x, const MonadBounds& b);
// Naturality of mu along every map x -> y.
Report check_mu_naturality(const GlobSet& x, const GlobSet& y, int max_dim, int max_size);

// Finite strict n-category: cells plus identities and binary compositions.
// comp[{d,k,a,b}] is the composite of d-cells a then b along k-cells.
struct CompositionTables {
  GlobSet cells;
  std::vector<std::vector<int>> identity;  // identity[d][i] is a (d+1)-cell
  std::map<std::array<int, 4>, int> comp;

  int compose(int d, int k, int a, int b) const;  // throws when missing
  int identity_at(int d, int i, int to_dim) const;
  friend bool operator==(const CompositionTables&, const CompositionTables&) = default;
};

Report check_strict(const CompositionTables& c);
int eval_pasting(const CompositionTables& c, const FreeCell& cell);

// Tables for a category given by objects, arrows (id, src, tgt), identity
// arrows and composition (a then b).
CompositionTables category_tables(
    const std::vector<std::string>& objects,
    const std::vector<std::array<std::string, 3>>& arrows,
    const std::map<std::string, std::string>& identities,
    const std::map<std::pair<std::string, std::string>, std::string>& composites);

}  // namespace globcat
