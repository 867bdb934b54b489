#include "globcat/glob.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace globcat {

GlobSet::GlobSet(int trunc, std::vector<std::vector<std::string>> ids,
                 std::vector<std::vector<int>> src, std::vector<std::vector<int>> tgt)
    : trunc_(trunc), ids_(std::move(ids)), src_(std::move(src)), tgt_(std::move(tgt)) {
  if (trunc_ < 0) throw InputError("negative truncation");
  const auto n = static_cast<std::size_t>(trunc_) + 1;
  ids_.resize(n);
  src_.resize(n);
  tgt_.resize(n);
  if (!src_[0].empty() || !tgt_[0].empty()) throw InputError("0-cells have no boundary");
  by_bdry_.resize(n);
  for (int d = 0; d <= trunc_; ++d) {
    for (int i = 0; i < count(d); ++i) {
      if (!index_.emplace(ids_[d][i], CellIx{d, i}).second)
        throw InputError("duplicate cell id '" + ids_[d][i] + "'");
    }
    if (d == 0) continue;
    if (src_[d].size() != ids_[d].size() || tgt_[d].size() != ids_[d].size())
      throw InputError("boundary missing in dimension " + std::to_string(d));
    for (int i = 0; i < count(d); ++i) {
      int s = src_[d][i], t = tgt_[d][i];
      if (s < 0 || s >= count(d - 1) || t < 0 || t >= count(d - 1))
        throw InputError("boundary out of range for '" + ids_[d][i] + "'");
      if (d >= 2 && (src_[d - 1][s] != src_[d - 1][t] || tgt_[d - 1][s] != tgt_[d - 1][t]))
        throw InputError("globularity fails at '" + ids_[d][i] + "'");
      by_bdry_[d][key(s, t)].push_back(i);
    }
  }
}

int GlobSet::total() const {
  int n = 0;
  for (int d = 0; d <= trunc_; ++d) n += count(d);
  return n;
}

std::optional<CellIx> GlobSet::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

CellIx GlobSet::at(const std::string& id) const {
  auto c = find(id);
  if (!c) throw InputError("unknown cell '" + id + "'");
  return *c;
}

const std::vector<int>& GlobSet::between(int d, int s, int t) const {
  static const std::vector<int> none;
  if (d < 1 || d > trunc_) return none;
  auto it = by_bdry_[d].find(key(s, t));
  return it == by_bdry_[d].end() ? none : it->second;
}

int GlobSet::src_at(int d, int i, int k) const {
  for (; d > k; --d) i = src_[d][i];
  return i;
}

int GlobSet::tgt_at(int d, int i, int k) const {
  for (; d > k; --d) i = tgt_[d][i];
  return i;
}

GlobSetBuilder::GlobSetBuilder(int trunc) : trunc_(trunc), ids_(trunc + 1), bdry_(trunc + 1) {}

GlobSetBuilder& GlobSetBuilder::cell(const std::string& id) {
  ids_[0].push_back(id);
  bdry_[0].emplace_back();
  dim_of_[id] = 0;
  return *this;
}

GlobSetBuilder& GlobSetBuilder::cell(const std::string& id, const std::string& src,
                                     const std::string& tgt) {
  auto s = dim_of_.find(src), t = dim_of_.find(tgt);
  if (s == dim_of_.end() || t == dim_of_.end() || s->second != t->second)
    throw InputError("bad boundary for '" + id + "'");
  int d = s->second + 1;
  if (d > trunc_) throw InputError("cell '" + id + "' exceeds truncation");
  ids_[d].push_back(id);
  bdry_[d].emplace_back(src, tgt);
  dim_of_[id] = d;
  return *this;
}

GlobSet GlobSetBuilder::build() const {
  std::vector<std::unordered_map<std::string, int>> pos(trunc_ + 1);
  for (int d = 0; d <= trunc_; ++d)
    for (int i = 0; i < static_cast<int>(ids_[d].size()); ++i) pos[d][ids_[d][i]] = i;
  std::vector<std::vector<int>> src(trunc_ + 1), tgt(trunc_ + 1);
  for (int d = 1; d <= trunc_; ++d)
    for (const auto& [s, t] : bdry_[d]) {
      src[d].push_back(pos[d - 1].at(s));
      tgt[d].push_back(pos[d - 1].at(t));
    }
  return GlobSet(trunc_, ids_, src, tgt);
}

bool is_map(const GlobSet& from, const GlobSet& to, const Label& f) {
  if (static_cast<int>(f.size()) != from.trunc() + 1 || from.trunc() > to.trunc()) return false;
  for (int d = 0; d <= from.trunc(); ++d) {
    if (static_cast<int>(f[d].size()) != from.count(d)) return false;
    for (int i = 0; i < from.count(d); ++i) {
      int y = f[d][i];
      if (y < 0 || y >= to.count(d)) return false;
      if (d > 0 && (to.src(d, y) != f[d - 1][from.src(d, i)] ||
                    to.tgt(d, y) != f[d - 1][from.tgt(d, i)]))
        return false;
    }
  }
  return true;
}

void check_map(const GlobSet& from, const GlobSet& to, const Label& f) {
  if (!is_map(from, to, f)) throw InputError("not a map of globular sets");
}

Label identity_map(const GlobSet& x) {
  Label f(x.trunc() + 1);
  for (int d = 0; d <= x.trunc(); ++d) {
    f[d].resize(x.count(d));
    std::iota(f[d].begin(), f[d].end(), 0);
  }
  return f;
}

Label compose(const Label& g, const Label& f) {
  Label h(f.size());
  for (std::size_t d = 0; d < f.size(); ++d) {
    h[d].reserve(f[d].size());
    for (int y : f[d]) h[d].push_back(g[d][y]);
  }
  return h;
}

CellIx apply(const Label& f, CellIx c) { return {c.dim, f[c.dim][c.idx]}; }

GlobSet hom(const GlobSet& x, int a, int b) {
  if (x.trunc() < 1) throw InputError("hom needs truncation >= 1");
  if (a < 0 || a >= x.count(0) || b < 0 || b >= x.count(0))
    throw InputError("hom endpoints are not 0-cells");
  const int n = x.trunc() - 1;
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1), pos(n + 1);
  for (int k = 0; k <= n; ++k) {
    pos[k].assign(x.count(k + 1), -1);
    for (int i = 0; i < x.count(k + 1); ++i) {
      if (x.src_at(k + 1, i, 0) != a || x.tgt_at(k + 1, i, 0) != b) continue;
      pos[k][i] = static_cast<int>(ids[k].size());
      ids[k].push_back(x.id(k + 1, i));
      if (k > 0) {
        src[k].push_back(pos[k - 1][x.src(k + 1, i)]);
        tgt[k].push_back(pos[k - 1][x.tgt(k + 1, i)]);
      }
    }
  }
  return GlobSet(n, ids, src, tgt);
}

GlobSet hom(const GlobSet& x, const std::string& a, const std::string& b) {
  auto ca = x.at(a), cb = x.at(b);
  if (ca.dim != 0 || cb.dim != 0) throw InputError("hom endpoints are not 0-cells");
  return hom(x, ca.idx, cb.idx);
}

CellIx hom_to_parent(const GlobSet& x, const GlobSet& h, CellIx c) {
  return {c.dim + 1, x.at(h.id(c.dim, c.idx)).idx};
}

std::optional<CellIx> parent_to_hom(const GlobSet& h, const GlobSet& x, CellIx c) {
  if (c.dim == 0) return std::nullopt;
  auto r = h.find(x.id(c.dim, c.idx));
  if (!r || r->dim != c.dim - 1) return std::nullopt;
  return r;
}

std::string seq_tag(int i) { return "hom" + std::to_string(i - 1) + "_" + std::to_string(i) + "/"; }

GlobSet seq(const std::vector<GlobSet>& parts, int trunc) {
  const int n = trunc;
  for (const auto& p : parts)
    if (p.trunc() != n) throw InputError("seq: mismatched truncations");
  const int k = static_cast<int>(parts.size());
  std::vector<std::vector<std::string>> ids(n + 2);
  std::vector<std::vector<int>> src(n + 2), tgt(n + 2);
  for (int i = 0; i <= k; ++i) ids[0].push_back(std::to_string(i));
  std::vector<int> offset(n + 1, 0);
  for (int i = 1; i <= k; ++i) {
    const auto& p = parts[i - 1];
    const std::string tag = seq_tag(i);
    for (int d = 0; d <= n; ++d) {
      for (int c = 0; c < p.count(d); ++c) {
        ids[d + 1].push_back(tag + p.id(d, c));
        if (d == 0) {
          src[1].push_back(i - 1);
          tgt[1].push_back(i);
        } else {
          src[d + 1].push_back(offset[d - 1] + p.src(d, c));
          tgt[d + 1].push_back(offset[d - 1] + p.tgt(d, c));
        }
      }
    }
    for (int d = 0; d <= n; ++d) offset[d] += p.count(d);
  }
  return GlobSet(n + 1, ids, src, tgt);
}

GlobSet seq(const std::vector<GlobSet>& parts) {
  if (parts.empty()) throw InputError("seq of no parts needs an explicit truncation");
  return seq(parts, parts.front().trunc());
}

StarPullback star_pullback(const GlobSet& x, const std::vector<int>& zs) {
  if (zs.empty()) throw InputError("a 0-cell sequence has at least one entry");
  for (int z : zs)
    if (z < 0 || z >= x.count(0)) throw InputError("sequence entry is not a 0-cell");
  if (x.trunc() == 0) {
    if (zs.size() > 1) throw InputError("truncation 0 carrier has no homs");
    GlobSet pt(0, {{"0"}}, {{}}, {{}});
    return {pt, Label{{zs[0]}}};
  }
  std::vector<GlobSet> homs;
  for (std::size_t i = 1; i < zs.size(); ++i) homs.push_back(hom(x, zs[i - 1], zs[i]));
  GlobSet s = seq(homs, x.trunc() - 1);
  Label bar(s.trunc() + 1);
  bar[0] = zs;
  for (int d = 1; d <= s.trunc(); ++d)
    for (int i = 0; i < s.count(d); ++i) {
      const auto& id = s.id(d, i);
      bar[d].push_back(x.at(id.substr(id.find('/') + 1)).idx);
    }
  return {std::move(s), std::move(bar)};
}

bool is_connected(const GlobSet& x, const std::vector<int>& zs) {
  for (std::size_t i = 1; i < zs.size(); ++i)
    if (x.between(1, zs[i - 1], zs[i]).empty()) return false;
  return true;
}

Coproduct coproduct(const std::vector<GlobSet>& parts, int trunc) {
  const int n = parts.empty() ? trunc : parts.front().trunc();
  for (const auto& p : parts)
    if (p.trunc() != n) throw InputError("coproduct: mismatched truncations");
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  std::vector<Label> inj;
  std::vector<int> offset(n + 1, 0);
  for (std::size_t j = 0; j < parts.size(); ++j) {
    const auto& p = parts[j];
    const std::string tag = "in" + std::to_string(j) + "/";
    Label f(n + 1);
    for (int d = 0; d <= n; ++d)
      for (int c = 0; c < p.count(d); ++c) {
        f[d].push_back(offset[d] + c);
        ids[d].push_back(tag + p.id(d, c));
        if (d > 0) {
          src[d].push_back(offset[d - 1] + p.src(d, c));
          tgt[d].push_back(offset[d - 1] + p.tgt(d, c));
        }
      }
    for (int d = 0; d <= n; ++d) offset[d] += p.count(d);
    inj.push_back(std::move(f));
  }
  return {GlobSet(n, ids, src, tgt), std::move(inj)};
}

Pullback pullback(const GlobSet& a, const Label& f, const GlobSet& b, const Label& g,
                  const GlobSet& base) {
  check_map(a, base, f);
  check_map(b, base, g);
  if (a.trunc() != b.trunc()) throw InputError("pullback: mismatched truncations");
  const int n = a.trunc();
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  Label l(n + 1), r(n + 1);
  std::vector<std::unordered_map<std::uint64_t, int>> pos(n + 1);
  auto key = [](int i, int j) {
    return (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
  };
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < a.count(d); ++i)
      for (int j = 0; j < b.count(d); ++j) {
        if (f[d][i] != g[d][j]) continue;
        pos[d][key(i, j)] = static_cast<int>(ids[d].size());
        ids[d].push_back("(" + a.id(d, i) + "," + b.id(d, j) + ")");
        l[d].push_back(i);
        r[d].push_back(j);
        if (d > 0) {
          src[d].push_back(pos[d - 1].at(key(a.src(d, i), b.src(d, j))));
          tgt[d].push_back(pos[d - 1].at(key(a.tgt(d, i), b.tgt(d, j))));
        }
      }
  return {GlobSet(n, ids, src, tgt), std::move(l), std::move(r)};
}

GlobSet desuspend(const GlobSet& x) {
  if (x.trunc() < 1) throw InputError("desuspend needs truncation >= 1");
  const int n = x.trunc() - 1;
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  for (int d = 0; d <= n; ++d) {
    ids[d] = x.ids(d + 1);
    if (d > 0) {
      src[d] = x.srcs(d + 1);
      tgt[d] = x.tgts(d + 1);
    }
  }
  return GlobSet(n, ids, src, tgt);
}

GlobSet suspend(const GlobSet& x) {
  const int n = x.trunc() + 1;
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  ids[0] = {"*"};
  for (int d = 0; d < n; ++d) {
    for (const auto& id : x.ids(d)) ids[d + 1].push_back("s/" + id);
    if (d == 0) {
      src[1].assign(x.count(0), 0);
      tgt[1].assign(x.count(0), 0);
    } else {
      src[d + 1] = x.srcs(d);
      tgt[d + 1] = x.tgts(d);
    }
  }
  return GlobSet(n, ids, src, tgt);
}

namespace {

std::vector<Label> search_maps(const GlobSet& from, const GlobSet& to,
                               const std::vector<int>& fixed0, bool injective) {
  std::vector<Label> out;
  if (from.trunc() > to.trunc()) return out;
  Label cur(from.trunc() + 1);
  for (int d = 0; d <= from.trunc(); ++d) cur[d].assign(from.count(d), -1);
  // Cells in dimension order; each choice only depends on lower dimensions.
  std::vector<CellIx> order;
  for (int d = 0; d <= from.trunc(); ++d)
    for (int i = 0; i < from.count(d); ++i) order.push_back({d, i});
  std::vector<int> all0(to.count(0));
  std::iota(all0.begin(), all0.end(), 0);
  std::vector<std::vector<char>> used(to.trunc() + 1);
  for (int d = 0; d <= to.trunc(); ++d) used[d].assign(to.count(d), 0);
  auto take = [&](int d, int i, int y, std::size_t k, auto& self) -> void {
    if (injective && used[d][y]) return;
    used[d][y] = 1;
    cur[d][i] = y;
    self(k + 1);
    used[d][y] = 0;
  };
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      out.push_back(cur);
      return;
    }
    auto [d, i] = order[k];
    if (d == 0) {
      if (i < static_cast<int>(fixed0.size()) && fixed0[i] >= 0) {
        take(0, i, fixed0[i], k, go);
        return;
      }
      for (int y : all0) take(0, i, y, k, go);
      return;
    }
    for (int y : to.between(d, cur[d - 1][from.src(d, i)], cur[d - 1][from.tgt(d, i)]))
      take(d, i, y, k, go);
  };
  go(0);
  return out;
}

}  // namespace

std::vector<Label> all_maps(const GlobSet& from, const GlobSet& to,
                            const std::vector<int>& fixed0) {
  return search_maps(from, to, fixed0, false);
}

std::vector<Label> isomorphisms(const GlobSet& a, const GlobSet& b) {
  std::vector<Label> out;
  if (a.trunc() != b.trunc()) return out;
  for (int d = 0; d <= a.trunc(); ++d)
    if (a.count(d) != b.count(d)) return out;
  return search_maps(a, b, {}, true);
}

bool isomorphic(const GlobSet& a, const GlobSet& b) { return !isomorphisms(a, b).empty(); }

}  // namespace globcat
