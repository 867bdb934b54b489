#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace globcat {

// Raised for malformed input or violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CellIx {
  int dim = 0;
  int idx = 0;
  friend bool operator==(const CellIx&, const CellIx&) = default;
  friend auto operator<=>(const CellIx&, const CellIx&) = default;
};

// label[d][i] is the image of the i-th d-cell.
using Label = std::vector<std::vector<int>>;

// Finite globular set truncated at level trunc. Cells are indexed per
// dimension; identifiers are unique across all dimensions.
class GlobSet {
 public:
  GlobSet() : GlobSet(0, {{}}, {{}}, {{}}) {}

  // src[d][i] / tgt[d][i] give indices into dimension d-1; src[0], tgt[0]
  // must be empty. Throws InputError when the data is not globular.
  GlobSet(int trunc, std::vector<std::vector<std::string>> ids,
          std::vector<std::vector<int>> src, std::vector<std::vector<int>> tgt);

  int trunc() const { return trunc_; }
  int count(int d) const {
    return d >= 0 && d <= trunc_ ? static_cast<int>(ids_[d].size()) : 0;
  }
  int total() const;
  const std::string& id(int d, int i) const { return ids_[d][i]; }
  const std::vector<std::string>& ids(int d) const { return ids_[d]; }
  int src(int d, int i) const { return src_[d][i]; }
  int tgt(int d, int i) const { return tgt_[d][i]; }
  const std::vector<int>& srcs(int d) const { return src_[d]; }
  const std::vector<int>& tgts(int d) const { return tgt_[d]; }

  std::optional<CellIx> find(const std::string& id) const;
  CellIx at(const std::string& id) const;  // throws InputError

  // d-cells with the given source and target (d >= 1).
  const std::vector<int>& between(int d, int s, int t) const;

  // Iterated source / target down to dimension k.
  int src_at(int d, int i, int k) const;
  int tgt_at(int d, int i, int k) const;

  friend bool operator==(const GlobSet& a, const GlobSet& b) {
    return a.trunc_ == b.trunc_ && a.ids_ == b.ids_ && a.src_ == b.src_ &&
           a.tgt_ == b.tgt_;
  }

 private:
  static std::uint64_t key(int s, int t) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(s)) << 32) |
           static_cast<std::uint32_t>(t);
  }
  int trunc_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::vector<int>> src_, tgt_;
  std::unordered_map<std::string, CellIx> index_;
  std::vector<std::unordered_map<std::uint64_t, std::vector<int>>> by_bdry_;
};

// Builder keyed by identifiers; convenient for hand-written instances.
class GlobSetBuilder {
 public:
  explicit GlobSetBuilder(int trunc);
  GlobSetBuilder& cell(const std::string& id);  // 0-cell
  GlobSetBuilder& cell(const std::string& id, const std::string& src,
                       const std::string& tgt);
  GlobSet build() const;

 private:
  int trunc_;
  std::vector<std::vector<std::string>> ids_;
  std::vector<std::vector<std::pair<std::string, std::string>>> bdry_;
  std::unordered_map<std::string, int> dim_of_;
};

bool is_map(const GlobSet& from, const GlobSet& to, const Label& f);
void check_map(const GlobSet& from, const GlobSet& to, const Label& f);
Label identity_map(const GlobSet& x);
Label compose(const Label& g, const Label& f);  // g after f
CellIx apply(const Label& f, CellIx c);

GlobSet hom(const GlobSet& x, int a, int b);
GlobSet hom(const GlobSet& x, const std::string& a, const std::string& b);
// Index of a hom cell inside x, and back (nullopt when not in the hom).
CellIx hom_to_parent(const GlobSet& x, const GlobSet& h, CellIx c);
std::optional<CellIx> parent_to_hom(const GlobSet& h, const GlobSet& x, CellIx c);

GlobSet seq(const std::vector<GlobSet>& parts);
GlobSet seq(const std::vector<GlobSet>& parts, int trunc);  // allows empty input
std::string seq_tag(int i);  // prefix of cells coming from the i-th part (1-based)

struct StarPullback {
  GlobSet set;
  Label bar;  // x*X -> X
};
StarPullback star_pullback(const GlobSet& x, const std::vector<int>& zero_seq);
bool is_connected(const GlobSet& x, const std::vector<int>& zero_seq);

struct Coproduct {
  GlobSet set;
  std::vector<Label> injections;
};
Coproduct coproduct(const std::vector<GlobSet>& parts, int trunc = 0);

struct Pullback {
  GlobSet set;
  Label left, right;
};
Pullback pullback(const GlobSet& a, const Label& f, const GlobSet& b, const Label& g,
                  const GlobSet& base);

GlobSet desuspend(const GlobSet& x);
GlobSet suspend(const GlobSet& x);

// All maps from -> to, optionally with prescribed 0-cell images (-1 = free).
std::vector<Label> all_maps(const GlobSet& from, const GlobSet& to,
                            const std::vector<int>& fixed0 = {});
std::vector<Label> isomorphisms(const GlobSet& a, const GlobSet& b);
bool isomorphic(const GlobSet& a, const GlobSet& b);

}  // namespace globcat
