#pragma once

// Normalised collections and operads over T given by finite tables, their
// action on globular sets, the bar construction, and the regradings between
// T-operads and operads over the multitensor view.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "globcat/freecat.hpp"
#include "globcat/glob.hpp"
#include "globcat/multitensor.hpp"
#include "globcat/report.hpp"
#include "globcat/setmt.hpp"
#include "globcat/tree.hpp"

namespace globcat {

// Operation of dimension >= 1; dimension 0 is the single trivial operation.
struct TOp {
  std::string id;
  int dim = 1;
  Tree arity;
  std::string src, tgt;  // empty for dimension 1
  friend bool operator==(const TOp&, const TOp&) = default;
};

inline const std::string& trivial_op() {
  static const std::string s = "*";
  return s;
}

struct Collection {
  std::string name;
  int trunc = 1;
  std::vector<TOp> ops;

  const TOp* find(const std::string& id) const;
  std::vector<const TOp*> of_dim(int d, int max_size) const;
  friend bool operator==(const Collection& a, const Collection& b) {
    return a.name == b.name && a.trunc == b.trunc && a.ops == b.ops;
  }
};

// Labelling of glob(p) by operations: ids[d][j], with "*" on 0-cells.
struct TSubst {
  std::string outer;
  OpLabel labelling;
  std::string result;
  friend bool operator==(const TSubst&, const TSubst&) = default;
};

struct Operad {
  Collection coll;
  std::vector<std::string> units;  // units[d] for 1 <= d <= trunc; units[0] = "*"
  int support = 0;                 // composites with arity size <= support are stored
  std::vector<TSubst> subst;

  std::optional<std::string> compose(const std::string& outer, const OpLabel& l) const;
  void reindex();  // call after editing subst
  friend bool operator==(const Operad& a, const Operad& b) {
    return a.coll == b.coll && a.units == b.units && a.support == b.support && a.subst == b.subst;
  }

 private:
  std::map<std::string, std::string> table_;
};

// Identity operad: operations are the trees of size <= max_size.
Operad identity_operad(int trunc, int max_size);
Collection identity_collection(int trunc, int max_size);

// Operations as a globular set ("*" in dimension 0), for labellings.
GlobSet op_globset(const Collection& a);

// A cell of AX: an operation and a labelling of its arity.
struct ACell {
  std::string op;
  Label label;
  friend bool operator==(const ACell&, const ACell&) = default;
  friend auto operator<=>(const ACell&, const ACell&) = default;
};
std::vector<ACell> apply(const Collection& a, const GlobSet& x, int dim, int max_size);
ACell acell_src(const Collection& a, const ACell& c);
ACell acell_tgt(const Collection& a, const ACell& c);
Tree arity_of(const Collection& a, const std::string& op);  // point tree for "*"

// AX with arities of size <= max_size, as a finite globular set.
struct AMaterialization {
  GlobSet set;
  std::vector<std::vector<ACell>> cells;
  std::map<ACell, int> index;
  int find(const ACell& c) const;  // -1 when outside the bound
};
AMaterialization materialize_apply(const Collection& a, const GlobSet& x, int max_size);

// Set operad as a truncation-1 operad: an n-ary operation has arity the
// path of length n. Ids are "op/n".
Operad operad_from_set_operad(const SetOperad& o);

// Cells of the bar construction in dimension dim: cells of A(seq xs) in
// dimension dim+1 from 0 to k, split into one labelling per argument.
std::vector<MultiCell> bar(const Collection& a, const std::vector<GlobSet>& xs, int dim,
                           int max_size);
// The splitting used by bar, and back.
MultiCell split_bar_cell(const Collection& a, const std::vector<GlobSet>& xs, const GlobSet& s,
                         const ACell& c);
ACell join_bar_cell(const Collection& a, const std::vector<GlobSet>& xs, const GlobSet& s,
                    const MultiCell& c);

struct AHomDecomposition {
  int m = 0;
  std::vector<int> seq;         // connected 0-cells x_0..x_m
  std::vector<GlobSet> homs;    // X(x_{i-1}, x_i)
  MultiCell cell;               // over homs
};
AHomDecomposition hom_decompose_a(const Collection& a, const GlobSet& x, const ACell& c);
ACell hom_reconstruct_a(const Collection& a, const GlobSet& x, const AHomDecomposition& d);

// Regradings: a dimension-(d+1) operation with arity q becomes a dimension-d
// operation with arity the kids of q. Ids are kept.
MTTable to_mt_operad(const Operad& a);
Operad from_mt_operad(const MTTable& t, int support);
Collection collection_from_multitensor(const MTOperad& e, int max_arity, int max_size);
Collection collection_from_mt_ops(const std::string& name, int mt_trunc, const std::vector<MTOp>& ops);
std::vector<MTOp> bar_operations(const Collection& a);

struct OperadBounds {
  int max_size = 3;       // arity size of outer operations in associativity
  long max_instances = 200000;
};
// Boundary coherence, arity compatibility with mu, totality within the
// support, unit laws and associativity on the stored table.
Report check_operad(const Operad& a, const OperadBounds& b = {});

// The map (b, f) -> (arity b, f) has pullback naturality squares along g.
Report check_cartesian(const Collection& a, const GlobSet& x, const GlobSet& y, int max_size);

}  // namespace globcat
