#include "globcat/tree.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace globcat {

Tree::Tree(int d, std::vector<Tree> ks) : dim(d), kids(std::move(ks)) {
  if (d < 0) throw InputError("negative tree dimension");
  if (d == 0 && !kids.empty()) throw InputError("a dimension-0 tree has no kids");
  for (const auto& k : kids)
    if (k.dim != d - 1) throw InputError("kid dimension mismatch");
}

int Tree::size() const {
  int n = 1;
  for (const auto& k : kids) n += k.size();
  return n;
}

std::strong_ordering operator<=>(const Tree& a, const Tree& b) {
  if (auto c = a.dim <=> b.dim; c != 0) return c;
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.kids.begin(), a.kids.end(), b.kids.begin(),
                                                b.kids.end());
}

Tree point_tree() { return Tree(); }

Tree path_tree(int k) {
  if (k < 0) throw InputError("negative path length");
  return Tree(1, std::vector<Tree>(k));
}

Tree level2_tree(const std::vector<int>& ks) {
  std::vector<Tree> kids;
  for (int k : ks) kids.push_back(path_tree(k));
  return Tree(2, std::move(kids));
}

Tree globe_tree(int n) {
  Tree t;
  for (int d = 1; d <= n; ++d) t = Tree(d, {t});
  return t;
}

std::vector<int> cell_counts(const Tree& p) {
  std::vector<int> c(p.dim + 1, 0);
  if (p.dim == 0) {
    c[0] = 1;
    return c;
  }
  c[0] = p.width() + 1;
  for (const auto& k : p.kids) {
    auto kc = cell_counts(k);
    for (int d = 0; d < p.dim; ++d) c[d + 1] += kc[d];
  }
  return c;
}

std::vector<std::vector<int>> kid_offsets(const Tree& p) {
  std::vector<std::vector<int>> off;
  std::vector<int> cur(std::max(p.dim, 1), 0);
  for (const auto& k : p.kids) {
    off.push_back(cur);
    auto kc = cell_counts(k);
    for (int d = 0; d < p.dim; ++d) cur[d] += kc[d];
  }
  off.push_back(cur);  // totals, handy as an end marker
  return off;
}

GlobSet glob_of_tree(const Tree& p) {
  if (p.dim == 0) return GlobSet(0, {{"0"}}, {{}}, {{}});
  std::vector<GlobSet> parts;
  for (const auto& k : p.kids) parts.push_back(glob_of_tree(k));
  return seq(parts, p.dim - 1);
}

Tree boundary(const Tree& p) {
  if (p.dim == 0) throw InputError("boundary of a dimension-0 tree");
  if (p.dim == 1) return Tree();
  std::vector<Tree> kids;
  for (const auto& k : p.kids) kids.push_back(boundary(k));
  return Tree(p.dim - 1, std::move(kids));
}

namespace {

Label side_map(const Tree& p, bool source) {
  if (p.dim == 0) throw InputError("source/target map of a dimension-0 tree");
  if (p.dim == 1) return Label{{source ? 0 : p.width()}};
  Label f(p.dim);
  for (int i = 0; i <= p.width(); ++i) f[0].push_back(i);
  auto off = kid_offsets(p);
  for (int i = 0; i < p.width(); ++i) {
    Label g = side_map(p.kids[i], source);
    for (int d = 0; d < static_cast<int>(g.size()); ++d)
      for (int y : g[d]) f[d + 1].push_back(off[i][d] + y);
  }
  return f;
}

void trees_rec(int dim, int budget, std::map<std::pair<int, int>, std::vector<Tree>>& memo,
               std::vector<Tree>& out);

const std::vector<Tree>& trees_upto(int dim, int max_size,
                                    std::map<std::pair<int, int>, std::vector<Tree>>& memo) {
  auto key = std::make_pair(dim, max_size);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<Tree> out;
  trees_rec(dim, max_size, memo, out);
  std::sort(out.begin(), out.end());
  return memo[key] = std::move(out);
}

void trees_rec(int dim, int budget, std::map<std::pair<int, int>, std::vector<Tree>>& memo,
               std::vector<Tree>& out) {
  if (budget < 1) return;
  if (dim == 0) {
    out.push_back(Tree());
    return;
  }
  // Kid sequences with total size <= budget - 1.
  const auto& smaller = trees_upto(dim - 1, budget - 1, memo);
  std::vector<Tree> cur;
  auto go = [&](int left, auto& self) -> void {
    out.push_back(Tree(dim, cur));
    for (const auto& k : smaller) {
      int s = k.size();
      if (s > left) continue;
      cur.push_back(k);
      self(left - s, self);
      cur.pop_back();
    }
  };
  go(budget - 1, go);
}

}  // namespace

Label sigma_map(const Tree& p) { return side_map(p, true); }
Label tau_map(const Tree& p) { return side_map(p, false); }

std::vector<Tree> enumerate_trees(int dim, int max_size) {
  if (dim < 0) throw InputError("negative dimension");
  std::map<std::pair<int, int>, std::vector<Tree>> memo;
  return trees_upto(dim, max_size, memo);
}

RigidityReport rigidity_check(const Tree& p, const Tree& q) {
  if (p.dim != q.dim) throw InputError("rigidity check needs equal dimensions");
  RigidityReport r;
  GlobSet a = glob_of_tree(p), b = glob_of_tree(q);
  for (const auto& f : isomorphisms(a, b)) {
    ++r.isos;
    bool id = (p == q) && f == identity_map(a);
    if (!id) ++r.non_identity;
    for (std::size_t i = 1; i < f[0].size(); ++i)
      if (f[0][i] < f[0][i - 1]) r.order_preserving = false;
  }
  r.tight = r.isos == 0 || (p == q && r.non_identity == 0 && r.isos == 1);
  return r;
}

std::string to_text(const Tree& p) {
  if (p.dim == 0) return "*";
  if (p.dim == 1) return std::to_string(p.width());
  std::string s = "[";
  for (int i = 0; i < p.width(); ++i) {
    if (i) s += ",";
    s += to_text(p.kids[i]);
  }
  return s + "]";
}

namespace {

Tree parse_tree(const std::string& s, std::size_t& pos, int dim) {
  auto fail = [&]() -> Tree { throw InputError("malformed tree text '" + s + "'"); };
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (dim == 0) {
    if (pos < s.size() && s[pos] == '*') {
      ++pos;
      return Tree();
    }
    return fail();
  }
  if (dim == 1) {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos || pos - start > 6) return fail();
    return path_tree(std::stoi(s.substr(start, pos - start)));
  }
  if (pos >= s.size() || s[pos] != '[') return fail();
  ++pos;
  std::vector<Tree> kids;
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos < s.size() && s[pos] == ']') {
    ++pos;
    return Tree(dim, {});
  }
  for (;;) {
    kids.push_back(parse_tree(s, pos, dim - 1));
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos < s.size() && s[pos] == ',') {
      ++pos;
      continue;
    }
    if (pos < s.size() && s[pos] == ']') {
      ++pos;
      break;
    }
    return fail();
  }
  return Tree(dim, std::move(kids));
}

}  // namespace

Tree tree_from_text(const std::string& s, int dim) {
  std::size_t pos = 0;
  Tree t = parse_tree(s, pos, dim);
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  if (pos != s.size()) throw InputError("trailing characters in tree text '" + s + "'");
  return t;
}

}  // namespace globcat
