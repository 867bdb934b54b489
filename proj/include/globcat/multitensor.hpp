#pragma once

// Multitensors over the product-of-free-cells multitensor: each is presented
// by operations whose arity is a sequence of trees, so that a cell of
// E_k(X_1..X_k) is an operation together with one labelling per argument.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "globcat/freecat.hpp"
#include "globcat/glob.hpp"
#include "globcat/report.hpp"
#include "globcat/setmt.hpp"
#include "globcat/tree.hpp"

namespace globcat {

// "d:text" for a tree of dimension d.
std::string tree_id(const Tree& t);
Tree tree_from_id(const std::string& id);

struct MTOp {
  std::string id;
  int dim = 0;
  std::vector<Tree> arity;  // trees of dimension dim
  std::string src, tgt;     // operations of dimension dim-1; empty at dim 0

  friend bool operator==(const MTOp&, const MTOp&) = default;
};

// Operation ids per cell of glob(p): ids[d][j].
using OpLabel = std::vector<std::vector<std::string>>;

class MTOperad {
 public:
  virtual ~MTOperad() = default;
  virtual std::string name() const = 0;
  virtual int trunc() const = 0;
  // Operations of dimension d with k arguments, every arity tree of size <= max_size.
  virtual std::vector<MTOp> ops(int d, int k, int max_size) const = 0;
  virtual std::optional<MTOp> find(const std::string& id) const = 0;
  virtual std::string unit(int d) const = 0;  // arity (globe_tree(d))
  // Substitution of inner[i] (labelling glob(arity_i)) into outer; nullopt
  // outside the stored support.
  virtual std::optional<std::string> subst(const std::string& outer,
                                           const std::vector<OpLabel>& inner) const = 0;
};
using MTOperadPtr = std::shared_ptr<const MTOperad>;

// The identity: operations are all tree sequences, ids are tree_id of the
// tree whose kids are the arity. Gives E_k(X_i) = product of the T(X_i).
MTOperadPtr tcross(int trunc);
// A Set operad at truncation 0; ids are "op/arity".
MTOperadPtr embed_set_operad(std::shared_ptr<const SetOperad> o);

struct MTSubst {
  std::string outer;
  std::vector<OpLabel> inner;
  std::string result;
  friend bool operator==(const MTSubst&, const MTSubst&) = default;
};

// Finite table presentation.
struct MTTable {
  std::string name;
  int trunc = 0;
  std::vector<MTOp> ops;
  std::vector<std::string> units;  // units[d]
  std::vector<MTSubst> subst;
  friend bool operator==(const MTTable&, const MTTable&) = default;
};
std::string subst_key(const std::string& outer, const std::vector<OpLabel>& inner);
MTOperadPtr table_operad(MTTable t);
// Tabulates every operation and substitution within the bounds; the
// substitution table keeps results whose arity trees stay within max_size.
MTTable tabulate(const MTOperad& e, int max_arity, int max_size);

// Tree of mu applied to glob(p) -> T(terminal) given by a tree per cell.
Tree mu_tree(const Tree& p, const std::vector<std::vector<Tree>>& cell_trees);

struct MultiCell {
  std::string op;
  std::vector<Label> labels;  // labels[i] : glob(arity_i) -> X_i

  friend bool operator==(const MultiCell&, const MultiCell&) = default;
  friend auto operator<=>(const MultiCell&, const MultiCell&) = default;
};

std::vector<MultiCell> multi_cells(const MTOperad& e, const std::vector<GlobSet>& xs, int d,
                                   int max_size);
MultiCell multi_src(const MTOperad& e, const MultiCell& c);
MultiCell multi_tgt(const MTOperad& e, const MultiCell& c);
std::string multi_text(const MTOperad& e, const std::vector<GlobSet>& xs, const MultiCell& c);

// E_k(X_1..X_k) with arity trees of size <= max_size, as a globular set.
struct MultiSet {
  GlobSet set;
  std::vector<std::vector<MultiCell>> cells;
  std::map<MultiCell, int> index;
  int find(const MultiCell& c) const;  // -1 when outside the bound
};
MultiSet materialize(const MTOperad& e, const std::vector<GlobSet>& xs, int max_size);

// u_X applied to a cell of x.
MultiCell multi_unit(const MTOperad& e, const GlobSet& x, CellIx c);

struct SubstResult {
  std::optional<MultiCell> cell;  // nullopt outside the support
  bool arity_ok = true;           // arities of the result agree with mu
};
// sigma on an element of E_k(W_1..W_k), W_i = E_{n_i}(block i); the result
// lives over the concatenated blocks.
SubstResult substitute(const MTOperad& e, const std::vector<const MultiSet*>& ws,
                       const MultiCell& outer);

struct MTBounds {
  int max_arity = 2;   // k and every n_i
  int max_size = 3;    // arity trees of inner cells
  int outer_size = 2;  // arity trees of outer cells
  int max_dim = 1;
};
// Unit laws, associativity of sigma, and the derived facts: (E_1,u,sigma) is
// a monad, E_1 acts on each E_n, sigma is an E_1-algebra map.
Report check_multitensor(const MTOperad& e, const GlobSet& x, const MTBounds& b);

// Free monoid monad on globular sets, words of length <= max_len.
struct WordSet {
  GlobSet set;
  std::vector<std::vector<std::vector<int>>> words;  // words[d][i]
  std::map<std::pair<int, std::vector<int>>, int> index;
  int find(int d, const std::vector<int>& w) const;  // -1 when too long
};
WordSet materialize_words(const GlobSet& x, int max_len);

// lambda : T M X -> M T X on a cell of T(mx.set); the result indexes mtx.
int distributive_lambda(const WordSet& mx, const FreeMaterialization& tx, const WordSet& mtx,
                        const FreeCell& c);

struct DistBounds {
  int max_len = 2;   // word length
  int max_size = 3;  // tree size
  int outer_size = 2;
};
// Unit axioms, naturality along every map x -> y, and both multiplication
// axioms of lambda as a distributive law.
Report check_distributive_law(const GlobSet& x, const std::vector<GlobSet>& targets,
                              const DistBounds& b);

}  // namespace globcat
