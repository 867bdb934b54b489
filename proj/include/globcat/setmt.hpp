#pragma once

// Multitensors on finite sets: operads in Set, the unit, the substitution
// product with its coherence maps, and the monad construction on them.

#include <compare>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "globcat/glob.hpp"
#include "globcat/report.hpp"

namespace globcat {

// Symbolic element: a head symbol applied to arguments. Plain elements of an
// input set are leaves.
struct Val {
  std::string head;
  std::vector<Val> kids;

  friend bool operator==(const Val&, const Val&) = default;
  friend std::strong_ordering operator<=>(const Val& a, const Val& b) {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return std::lexicographical_compare_three_way(a.kids.begin(), a.kids.end(), b.kids.begin(),
                                                  b.kids.end());
  }
};
std::string to_string(const Val& v);
Val leaf(const std::string& s);

// Non-symmetric operad in Set, stored up to max_arity.
struct SetOperad {
  std::string name;
  int max_arity = 0;
  std::vector<std::vector<std::string>> ops;  // ops[n]
  std::string unit;                           // element of ops[1]
  // key: {k, outer, n_1, i_1, ..., n_k, i_k}; value: index into ops[sum n].
  std::map<std::vector<int>, int> subst;

  int arity_count(int n) const { return n <= max_arity ? static_cast<int>(ops[n].size()) : 0; }
  int index(int n, const std::string& op) const;  // -1 when absent
  // nullopt when the result arity exceeds max_arity.
  std::optional<int> compose(int outer, const std::vector<std::pair<int, int>>& inner) const;
};

using ComposeFn = std::function<int(int k, int outer, const std::vector<std::pair<int, int>>&)>;
SetOperad make_set_operad(std::string name, int max_arity,
                          std::vector<std::vector<std::string>> ops, std::string unit,
                          const ComposeFn& fn);
SetOperad terminal_operad(int max_arity, bool nullary = true);
SetOperad unit_operad(int max_arity);
SetOperad parity_operad(int max_arity);  // two ops per arity, labels add mod 2
Report check_set_operad(const SetOperad& o);

// A multitensor on Set built from operads by the substitution product.
struct SetMT;
using SetMTPtr = std::shared_ptr<const SetMT>;
struct SetMT {
  enum class Kind { unit, operad, product };
  Kind kind = Kind::unit;
  std::shared_ptr<const SetOperad> op;
  SetMTPtr left, right;  // product: left o right
};
SetMTPtr mt_unit();
SetMTPtr mt_operad(std::shared_ptr<const SetOperad> o);
SetMTPtr mt_product(SetMTPtr a, SetMTPtr b);
std::string describe(const SetMT& e);

std::string summand_tag(const std::vector<int>& ns);  // "c(1,2)"
std::vector<int> summand_parts(const std::string& tag);

// Elements of E_k(X_1..X_k) within bound: a summand c(n_1..n_j) of a
// substitution product is kept when the sum of max(1, n_i) is at most bound,
// so every intermediate arity is bounded and nullary pieces cannot pile up.
std::vector<Val> elements(const SetMT& e, const std::vector<std::vector<Val>>& xs, int bound);
void for_each_element(const SetMT& e, const std::vector<std::vector<Val>>& xs, int bound,
                      const std::function<void(Val&&)>& emit);
// Membership test for E_k(X_1..X_k) without enumerating it; member(i, x)
// decides x in X_i.
bool is_element(const SetMT& e, const Val& v, int k,
                const std::function<bool(int, const Val&)>& member);
// Functorial action in every argument: f(position, argument).
Val fmap(const SetMT& e, const Val& v, const std::function<Val(int, const Val&)>& f);
// Arguments of an element in order.
std::vector<Val> arguments(const SetMT& e, const Val& v);
Val mt_unit_map(const SetMT& e, const Val& x);  // u_X : X -> E_1 X

// Coherence isomorphisms, by re-tagging.
// ((E o F) o G)_n -> (E o (F o G))_n; e is the leftmost factor E.
Val assoc_map(const SetMT& e, Val v);
Val left_unitor(const Val& v);                 // (I o F)_n -> F_n
Val right_unitor(const Val& v);                // (E o I)_n -> E_n
Val whisker_right(Val v, const std::function<Val(Val)>& f);  // phi o 1
Val whisker_left(const SetMT& e, Val v, const std::function<Val(Val)>& f);

// Pentagon for (e,f,g,h) and triangle for (e,f) over distinct singleton
// inputs, for all grades n <= bound. Injectivity of the associator is
// tracked up to injective_grade only, since it keeps every image in memory.
Report check_pentagon(const SetMTPtr& e, const SetMTPtr& f, const SetMTPtr& g,
                      const SetMTPtr& h, int bound, int injective_grade = 3);
Report check_triangle(const SetMTPtr& e, const SetMTPtr& f, int bound);
// Each E_n preserves coproducts in each variable.
Report check_distributive(const SetMTPtr& e, int bound);

// The monad Gamma(E)X = coproduct over n of E_n(X,..,X), tagged "G<n>".
std::string gamma_tag(int n);
std::vector<Val> gamma_elements(const SetMT& e, const std::vector<Val>& x, int bound);
// Same, over weighted inputs, keeping total weight <= budget. An output
// weighs the sum of its inputs, and at least 1.
std::vector<std::pair<Val, int>> gamma_weighted(const SetMT& e,
                                                const std::vector<std::pair<Val, int>>& x,
                                                int bound, int budget);
Val gamma_map(const SetMT& e, const Val& v, const std::function<Val(const Val&)>& f);
Val gamma_unit(const SetMT& e, const Val& x);
// Multiplication for an operad-derived E; nullopt beyond max_arity.
std::optional<Val> gamma_mult(const SetOperad& o, const Val& v);
Val gamma0(const Val& x);                         // X -> Gamma(I)X
Val gamma2(const SetMT& e, const Val& v);          // Gamma(E)Gamma(F)X -> Gamma(E o F)X
Report check_gamma_monoidal(const SetMTPtr& e, const SetMTPtr& f, const SetMTPtr& g,
                            const std::vector<Val>& x, int bound);
Report check_gamma_monad(const SetOperad& o, const std::vector<Val>& x, int bound);

// E-monoid for an operad-derived E: an action table per op.
struct EMonoid {
  std::vector<Val> carrier;
  // act[{op arity, op index, argument indices...}] = result index
  std::map<std::vector<int>, int> act;
};
// Gamma(E)-algebra: structure map on Gamma(E)X within bounds.
struct GammaAlgebra {
  std::vector<Val> carrier;
  std::map<Val, int> structure;
};
EMonoid monoid_from_binary(const SetOperad& o, const std::vector<Val>& carrier,
                           const std::vector<std::vector<int>>& mult, int unit);
Report check_emonoid(const SetOperad& o, const EMonoid& m);
Report check_gamma_algebra(const SetOperad& o, const GammaAlgebra& a);
GammaAlgebra monoid_to_algebra(const SetOperad& o, const EMonoid& m);
EMonoid algebra_to_monoid(const SetOperad& o, const GammaAlgebra& a);

}  // namespace globcat
