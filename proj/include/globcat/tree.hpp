#pragma once

#include <compare>
#include <string>
#include <vector>

#include "globcat/glob.hpp"

namespace globcat {

// Batanin tree: dimension 0 is the point; a tree of dimension n+1 is a
// finite sequence of trees of dimension n.
struct Tree {
  int dim = 0;
  std::vector<Tree> kids;

  Tree() = default;
  Tree(int d, std::vector<Tree> ks);  // validates kid dimensions

  int size() const;  // node count
  int width() const { return static_cast<int>(kids.size()); }

  friend bool operator==(const Tree& a, const Tree& b) {
    return a.dim == b.dim && a.kids == b.kids;
  }
  // Canonical order: dimension, then size, then lexicographic on kids.
  friend std::strong_ordering operator<=>(const Tree& a, const Tree& b);
};

Tree point_tree();
Tree path_tree(int k);                  // dimension 1 with k point kids
Tree level2_tree(const std::vector<int>& ks);  // e.g. {2,1}
Tree globe_tree(int n);

// Cell counts of glob(p) per dimension 0..p.dim.
std::vector<int> cell_counts(const Tree& p);
// offsets[i][d]: first index of the i-th kid's d-cells among the (d+1)-cells of glob(p).
std::vector<std::vector<int>> kid_offsets(const Tree& p);

GlobSet glob_of_tree(const Tree& p);
Tree boundary(const Tree& p);
Label sigma_map(const Tree& p);  // glob(boundary p) -> glob(p)
Label tau_map(const Tree& p);

std::vector<Tree> enumerate_trees(int dim, int max_size);

struct RigidityReport {
  int isos = 0;
  int non_identity = 0;
  bool order_preserving = true;
  bool tight = true;  // iso exists implies p == q and iso is the identity
};
RigidityReport rigidity_check(const Tree& p, const Tree& q);

// "3", "[2,1]" for dims 1 and 2; nested brackets otherwise; "0" for dim 0
// only when the dimension is known from context.
std::string to_text(const Tree& p);
Tree tree_from_text(const std::string& s, int dim);

}  // namespace globcat
