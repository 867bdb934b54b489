#include "globcat/freecat.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace globcat {

std::vector<Label> labellings(const Tree& p, const GlobSet& x) {
  if (p.dim > x.trunc()) return {};
  return all_maps(glob_of_tree(p), x);
}

bool is_free_cell(const FreeCell& c, const GlobSet& x) {
  if (c.tree.dim > x.trunc()) return false;
  return is_map(glob_of_tree(c.tree), x, c.label);
}

std::vector<FreeCell> free_cells(const GlobSet& x, int dim, int max_size) {
  if (dim > x.trunc()) throw InputError("free cell dimension exceeds truncation");
  std::vector<FreeCell> out;
  for (const auto& p : enumerate_trees(dim, max_size)) {
    auto ls = labellings(p, x);
    std::sort(ls.begin(), ls.end());
    for (auto& l : ls) out.push_back({p, std::move(l)});
  }
  return out;
}

FreeCell cell_src(const FreeCell& c) {
  return {boundary(c.tree), compose(c.label, sigma_map(c.tree))};
}

FreeCell cell_tgt(const FreeCell& c) {
  return {boundary(c.tree), compose(c.label, tau_map(c.tree))};
}

FreeCell unit(const GlobSet& x, CellIx c) {
  if (c.dim < 0 || c.dim > x.trunc() || c.idx < 0 || c.idx >= x.count(c.dim))
    throw InputError("unit of an unknown cell");
  Label l(c.dim + 1);
  for (int k = 0; k < c.dim; ++k)
    l[k] = {x.src_at(c.dim, c.idx, k), x.tgt_at(c.dim, c.idx, k)};
  l[c.dim] = {c.idx};
  return {globe_tree(c.dim), l};
}

FreeCell apply_map(const Label& h, const FreeCell& c) { return {c.tree, compose(h, c.label)}; }

FreeOverFree apply_map(const Label& h, const FreeOverFree& f) {
  FreeOverFree g{f.tree, f.cells};
  for (auto& row : g.cells)
    for (auto& c : row) c = apply_map(h, c);
  return g;
}

bool is_free_over_free(const FreeOverFree& f, const GlobSet& x) {
  GlobSet gp = glob_of_tree(f.tree);
  if (static_cast<int>(f.cells.size()) != gp.trunc() + 1) return false;
  for (int d = 0; d <= gp.trunc(); ++d) {
    if (static_cast<int>(f.cells[d].size()) != gp.count(d)) return false;
    for (int i = 0; i < gp.count(d); ++i) {
      const auto& c = f.cells[d][i];
      if (c.dim() != d || !is_free_cell(c, x)) return false;
      if (d > 0 && (cell_src(c) != f.cells[d - 1][gp.src(d, i)] ||
                    cell_tgt(c) != f.cells[d - 1][gp.tgt(d, i)]))
        return false;
    }
  }
  return true;
}

FreeOverFree outer_unit(const GlobSet& x, const Tree& p, const Label& f) {
  FreeOverFree g{p, {}};
  g.cells.resize(f.size());
  for (std::size_t d = 0; d < f.size(); ++d)
    for (int y : f[d]) g.cells[d].push_back(unit(x, {static_cast<int>(d), y}));
  return g;
}

FreeOverFree as_globe_map(const FreeCell& c) {
  const int n = c.dim();
  FreeOverFree g{globe_tree(n), std::vector<std::vector<FreeCell>>(n + 1)};
  g.cells[n] = {c};
  FreeCell s = c, t = c;
  for (int k = n - 1; k >= 0; --k) {
    s = cell_src(s);
    t = cell_tgt(t);
    g.cells[k] = {s, t};
  }
  return g;
}

FreeOverFree inner_unit(const GlobSet& x, const FreeCell& c) {
  return outer_unit(x, c.tree, c.label);
}

namespace {

// Component j of a free cell of dimension >= 1: the kid tree with the
// labelling of its block (indices stay absolute, one dimension up).
FreeCell kid_part(const FreeCell& c, int j, const std::vector<std::vector<int>>& off) {
  const Tree& r = c.tree.kids[j];
  FreeCell out{r, Label(r.dim + 1)};
  const auto next = off[j + 1];
  for (int e = 0; e <= r.dim; ++e)
    out.label[e].assign(c.label[e + 1].begin() + off[j][e], c.label[e + 1].begin() + next[e]);
  return out;
}

FreeCell assemble(int dim, const std::vector<int>& zeros, const std::vector<FreeCell>& parts) {
  std::vector<Tree> kids;
  for (const auto& p : parts) kids.push_back(p.tree);
  FreeCell out{Tree(dim, std::move(kids)), Label(dim + 1)};
  out.label[0] = zeros;
  for (const auto& p : parts)
    for (int e = 0; e < static_cast<int>(p.label.size()); ++e)
      out.label[e + 1].insert(out.label[e + 1].end(), p.label[e].begin(), p.label[e].end());
  return out;
}

HomComponents components(const FreeOverFree& f) {
  const Tree& p = f.tree;
  if (p.dim == 0) throw InputError("hom components need a tree of dimension >= 1");
  HomComponents h;
  h.start = {0, f.cells[0][0].label[0][0]};
  auto off = kid_offsets(p);
  for (int i = 0; i < p.width(); ++i) {
    const Tree& pi = p.kids[i];
    auto counts = cell_counts(pi);
    const FreeCell& first = f.cells[1][off[i][0]];
    const int m = first.tree.width();
    const auto& zeros = first.label[0];
    if (zeros.front() != f.cells[0][i].label[0][0] || zeros.back() != f.cells[0][i + 1].label[0][0])
      throw InputError("hom component endpoints disagree with 0-cells");
    h.zero_cells.push_back(zeros);
    std::vector<FreeOverFree> comps(m, FreeOverFree{pi, std::vector<std::vector<FreeCell>>(pi.dim + 1)});
    for (int e = 0; e <= pi.dim; ++e)
      for (int c = 0; c < counts[e]; ++c) {
        const FreeCell& fc = f.cells[e + 1][off[i][e] + c];
        if (fc.tree.width() != m || fc.label[0] != zeros)
          throw InputError("labelling is not constant on 0-cells along a connected kid");
        auto roff = kid_offsets(fc.tree);
        for (int j = 0; j < m; ++j) comps[j].cells[e].push_back(kid_part(fc, j, roff));
      }
    h.comps.push_back(std::move(comps));
  }
  return h;
}

MuResult mu_rec(const FreeOverFree& f) {
  const Tree& p = f.tree;
  if (p.dim == 0) {
    const FreeCell& c = f.cells[0][0];
    if (c.dim() != 0) throw InputError("0-cell labelled by a higher cell");
    FreeOverFree g{p, {{FreeCell{Tree(), Label{{0}}}}}};
    return {c, g};
  }
  HomComponents hc = components(f);
  std::vector<std::vector<MuResult>> sub(p.width());
  std::vector<Tree> qkids;
  std::vector<int> zeros{hc.start.idx};
  for (int i = 0; i < p.width(); ++i) {
    for (std::size_t j = 0; j < hc.comps[i].size(); ++j) {
      sub[i].push_back(mu_rec(hc.comps[i][j]));
      qkids.push_back(sub[i].back().cell.tree);
      zeros.push_back(hc.zero_cells[i][j + 1]);
    }
  }
  Tree q(p.dim, qkids);
  std::vector<FreeCell> hparts;
  for (auto& row : sub)
    for (auto& r : row) hparts.push_back(r.cell);
  FreeCell h = assemble(p.dim, zeros, hparts);

  // g : glob(p) -> T(glob q); the 0-cell i goes to the last vertex of block i.
  auto poff = kid_offsets(p);
  auto qoff = kid_offsets(q);
  std::vector<int> start_of(p.width() + 1, 0);
  for (int i = 0; i < p.width(); ++i)
    start_of[i + 1] = start_of[i] + static_cast<int>(hc.comps[i].size());
  FreeOverFree g{p, std::vector<std::vector<FreeCell>>(p.dim + 1)};
  for (int i = 0; i <= p.width(); ++i) g.cells[0].push_back(FreeCell{Tree(), Label{{start_of[i]}}});
  for (int i = 0; i < p.width(); ++i) {
    const Tree& pi = p.kids[i];
    auto counts = cell_counts(pi);
    const int m = static_cast<int>(hc.comps[i].size());
    std::vector<int> gz(m + 1);
    std::iota(gz.begin(), gz.end(), start_of[i]);
    for (int e = 0; e <= pi.dim; ++e)
      for (int c = 0; c < counts[e]; ++c) {
        std::vector<FreeCell> parts;
        for (int j = 0; j < m; ++j) {
          FreeCell part = sub[i][j].g.cells[e][c];
          const auto& o = qoff[start_of[i] + j];
          for (int e2 = 0; e2 < static_cast<int>(part.label.size()); ++e2)
            for (int& y : part.label[e2]) y += o[e2];
          parts.push_back(std::move(part));
        }
        g.cells[e + 1].push_back(assemble(e + 1, gz, parts));
      }
  }
  (void)poff;
  return {h, g};
}

}  // namespace

HomComponents hom_components(const FreeOverFree& f) { return components(f); }

FreeOverFree from_hom_components(const Tree& p, const HomComponents& h) {
  if (p.dim == 0 || static_cast<int>(h.comps.size()) != p.width())
    throw InputError("components do not match the tree");
  FreeOverFree f{p, std::vector<std::vector<FreeCell>>(p.dim + 1)};
  f.cells[0].push_back(FreeCell{Tree(), Label{{h.start.idx}}});
  for (const auto& z : h.zero_cells) f.cells[0].push_back(FreeCell{Tree(), Label{{z.back()}}});
  for (int i = 0; i < p.width(); ++i) {
    auto counts = cell_counts(p.kids[i]);
    for (int e = 0; e <= p.kids[i].dim; ++e)
      for (int c = 0; c < counts[e]; ++c) {
        std::vector<FreeCell> parts;
        for (const auto& comp : h.comps[i]) parts.push_back(comp.cells[e][c]);
        f.cells[e + 1].push_back(assemble(e + 1, h.zero_cells[i], parts));
      }
  }
  return f;
}

MuResult mu_factor(const FreeOverFree& f) { return mu_rec(f); }

FreeCell mu(const FreeOverFree& f) { return mu_rec(f).cell; }

std::vector<FreeOverFree> factorisations(const FreeOverFree& f, const FreeCell& qh) {
  GlobSet gq = glob_of_tree(qh.tree);
  GlobSet gp = glob_of_tree(f.tree);
  // Candidate free cells over glob(q) per cell of glob(p).
  std::vector<std::vector<std::vector<FreeCell>>> cand(gp.trunc() + 1);
  for (int d = 0; d <= gp.trunc(); ++d)
    for (int i = 0; i < gp.count(d); ++i) {
      const FreeCell& target = f.cells[d][i];
      std::vector<FreeCell> cs;
      for (auto& l : labellings(target.tree, gq))
        if (compose(qh.label, l) == target.label) cs.push_back({target.tree, l});
      cand[d].push_back(std::move(cs));
    }
  std::vector<FreeOverFree> out;
  FreeOverFree cur{f.tree, std::vector<std::vector<FreeCell>>(gp.trunc() + 1)};
  for (int d = 0; d <= gp.trunc(); ++d) cur.cells[d].resize(gp.count(d));
  std::vector<CellIx> order;
  for (int d = 0; d <= gp.trunc(); ++d)
    for (int i = 0; i < gp.count(d); ++i) order.push_back({d, i});
  const FreeCell id{qh.tree, identity_map(gq)};
  std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) {
      if (mu(cur) == id) out.push_back(cur);
      return;
    }
    auto [d, i] = order[k];
    for (const auto& c : cand[d][i]) {
      if (d > 0 && (cell_src(c) != cur.cells[d - 1][gp.src(d, i)] ||
                    cell_tgt(c) != cur.cells[d - 1][gp.tgt(d, i)]))
        continue;
      cur.cells[d][i] = c;
      go(k + 1);
    }
  };
  go(0);
  return out;
}

HomDecomposition hom_decompose(const GlobSet& x, int a, int b, const FreeCell& c) {
  if (c.dim() < 1) throw InputError("hom decomposition needs a cell of dimension >= 1");
  const auto& zeros = c.label[0];
  if (zeros.front() != a || zeros.back() != b)
    throw InputError("cell does not lie in the requested hom");
  HomDecomposition d;
  d.m = c.tree.width();
  d.dim = c.dim();
  d.seq = zeros;
  auto off = kid_offsets(c.tree);
  for (int j = 0; j < d.m; ++j) {
    d.homs.push_back(hom(x, zeros[j], zeros[j + 1]));
    const GlobSet& h = d.homs.back();
    FreeCell part = kid_part(c, j, off);
    for (int e = 0; e < static_cast<int>(part.label.size()); ++e)
      for (int& y : part.label[e]) y = h.at(x.id(e + 1, y)).idx;
    d.parts.push_back(std::move(part));
  }
  return d;
}

FreeCell hom_reconstruct(const GlobSet& x, const HomDecomposition& d) {
  StarPullback sp = star_pullback(x, d.seq);
  // Over x*X the 0-cells are 0..m and hom j occupies the j-th block.
  std::vector<int> zeros(d.m + 1);
  std::iota(zeros.begin(), zeros.end(), 0);
  std::vector<FreeCell> parts;
  std::vector<int> offset(x.trunc(), 0);
  for (int j = 0; j < d.m; ++j) {
    FreeCell part = d.parts[j];
    for (int e = 0; e < static_cast<int>(part.label.size()); ++e)
      for (int& y : part.label[e]) y += offset[e];
    for (int e = 0; e < d.homs[j].trunc() + 1; ++e) offset[e] += d.homs[j].count(e);
    parts.push_back(std::move(part));
  }
  FreeCell over_seq = assemble(d.dim, zeros, parts);
  return apply_map(sp.bar, over_seq);
}

GenericFactor generic_factor(const FreeCell& c) {
  GlobSet gp = glob_of_tree(c.tree);
  return {c.tree, FreeCell{c.tree, identity_map(gp)}, c.label};
}

int CompositionTables::compose(int d, int k, int a, int b) const {
  auto it = comp.find({d, k, a, b});
  if (it == comp.end())
    throw InputError("missing composite of " + cells.id(d, a) + " and " + cells.id(d, b) +
                     " along dimension " + std::to_string(k));
  return it->second;
}

int CompositionTables::identity_at(int d, int i, int to_dim) const {
  for (; d < to_dim; ++d) i = identity[d][i];
  return i;
}

namespace {

int eval_rec(const CompositionTables& ct, const FreeCell& c, int shift) {
  if (c.dim() == 0) return c.label[0][0];
  const int top = c.dim() + shift;
  auto off = kid_offsets(c.tree);
  if (c.tree.width() == 0) return ct.identity_at(shift, c.label[0][0], top);
  int acc = -1;
  for (int j = 0; j < c.tree.width(); ++j) {
    int part = eval_rec(ct, kid_part(c, j, off), shift + 1);
    acc = acc < 0 ? part : ct.compose(top, shift, acc, part);
  }
  return acc;
}

}  // namespace

int eval_pasting(const CompositionTables& ct, const FreeCell& cell) {
  return eval_rec(ct, cell, 0);
}

Report check_strict(const CompositionTables& ct) {
  Report r;
  r.suite = "strict";
  const GlobSet& x = ct.cells;
  const int n = x.trunc();
  auto name = [&](int d, int i) { return x.id(d, i); };
  auto& closed = r.law("closed");
  auto& bdry = r.law("composite-boundary");
  auto& ids = r.law("identity-boundary");
  auto& unit = r.law("unit");
  auto& assoc = r.law("associativity");
  auto& inter = r.law("interchange");
  auto& idcomp = r.law("identity-composite");
  auto get = [&](int d, int k, int a, int b) {
    auto it = ct.comp.find({d, k, a, b});
    return it == ct.comp.end() ? -1 : it->second;
  };
  auto composable = [&](int d, int k, int a, int b) {
    return x.tgt_at(d, a, k) == x.src_at(d, b, k);
  };
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < x.count(d); ++i) {
      int u = ct.identity[d][i];
      ids.record(x.src(d + 1, u) == i && x.tgt(d + 1, u) == i, name(d, i));
    }
  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < x.count(d); ++a)
        for (int b = 0; b < x.count(d); ++b) {
          if (!composable(d, k, a, b)) continue;
          int ab = get(d, k, a, b);
          closed.record(ab >= 0, name(d, a) + ";" + std::to_string(k) + name(d, b));
          if (ab < 0) continue;
          bool ok;
          if (k == d - 1) {
            ok = x.src(d, ab) == x.src(d, a) && x.tgt(d, ab) == x.tgt(d, b);
          } else {
            int s = get(d - 1, k, x.src(d, a), x.src(d, b));
            int t = get(d - 1, k, x.tgt(d, a), x.tgt(d, b));
            ok = s >= 0 && t >= 0 && x.src(d, ab) == s && x.tgt(d, ab) == t;
          }
          bdry.record(ok, name(d, a) + ";" + std::to_string(k) + name(d, b));
        }
  if (r.failures()) return r;
  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < x.count(d); ++a) {
        int l = ct.identity_at(k, x.src_at(d, a, k), d);
        int rr = ct.identity_at(k, x.tgt_at(d, a, k), d);
        unit.record(get(d, k, l, a) == a && get(d, k, a, rr) == a, name(d, a));
      }
  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < x.count(d); ++a)
        for (int b = 0; b < x.count(d); ++b) {
          if (!composable(d, k, a, b)) continue;
          int ab = get(d, k, a, b);
          for (int c = 0; c < x.count(d); ++c) {
            if (!composable(d, k, b, c)) continue;
            assoc.record(get(d, k, ab, c) == get(d, k, a, get(d, k, b, c)),
                         name(d, a) + "," + name(d, b) + "," + name(d, c));
          }
        }
  // (a ;j b) ;k (c ;j e) = (a ;k c) ;j (b ;k e) for k < j < d.
  for (int d = 2; d <= n; ++d)
    for (int j = 1; j < d; ++j)
      for (int k = 0; k < j; ++k)
        for (int a = 0; a < x.count(d); ++a)
          for (int b = 0; b < x.count(d); ++b) {
            if (!composable(d, j, a, b)) continue;
            for (int c = 0; c < x.count(d); ++c) {
              if (!composable(d, k, a, c)) continue;
              for (int e = 0; e < x.count(d); ++e) {
                if (!composable(d, j, c, e) || !composable(d, k, b, e)) continue;
                int lhs = get(d, k, get(d, j, a, b), get(d, j, c, e));
                int rhs = get(d, j, get(d, k, a, c), get(d, k, b, e));
                inter.record(lhs == rhs && lhs >= 0, name(d, a) + "," + name(d, b) + "," +
                                                        name(d, c) + "," + name(d, e));
              }
            }
          }
  for (int d = 1; d < n; ++d)
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < x.count(d); ++a)
        for (int b = 0; b < x.count(d); ++b) {
          if (!composable(d, k, a, b)) continue;
          int lhs = get(d + 1, k, ct.identity[d][a], ct.identity[d][b]);
          idcomp.record(lhs == ct.identity[d][get(d, k, a, b)], name(d, a) + "," + name(d, b));
        }
  return r;
}

CompositionTables category_tables(
    const std::vector<std::string>& objects, const std::vector<std::array<std::string, 3>>& arrows,
    const std::map<std::string, std::string>& identities,
    const std::map<std::pair<std::string, std::string>, std::string>& composites) {
  GlobSetBuilder b(1);
  for (const auto& o : objects) b.cell(o);
  for (const auto& a : arrows) b.cell(a[0], a[1], a[2]);
  CompositionTables ct{b.build(), {}, {}};
  ct.identity.resize(1);
  for (const auto& o : objects) ct.identity[0].push_back(ct.cells.at(identities.at(o)).idx);
  for (const auto& [ab, c] : composites)
    ct.comp[{1, 0, ct.cells.at(ab.first).idx, ct.cells.at(ab.second).idx}] = ct.cells.at(c).idx;
  return ct;
}

}  // namespace globcat

namespace globcat {

std::string cell_text(const GlobSet& x, const FreeCell& c) {
  std::string s = to_text(c.tree) + "{";
  for (std::size_t d = 0; d < c.label.size(); ++d) {
    if (d) s += ";";
    for (int y : c.label[d]) s += "(" + x.id(static_cast<int>(d), y) + ")";
  }
  return s + "}";
}

int FreeMaterialization::find(const FreeCell& c) const {
  auto it = index.find(c);
  return it == index.end() ? -1 : it->second;
}

FreeMaterialization materialize_free(const GlobSet& x, int max_size) {
  const int n = x.trunc();
  FreeMaterialization m;
  m.cells.resize(n + 1);
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  for (int d = 0; d <= n; ++d) {
    m.cells[d] = free_cells(x, d, max_size);
    for (int i = 0; i < static_cast<int>(m.cells[d].size()); ++i) {
      const FreeCell& c = m.cells[d][i];
      m.index.emplace(c, i);
      ids[d].push_back(cell_text(x, c));
      if (d > 0) {
        src[d].push_back(m.index.at(cell_src(c)));
        tgt[d].push_back(m.index.at(cell_tgt(c)));
      }
    }
  }
  m.set = GlobSet(n, ids, src, tgt);
  return m;
}

FreeOverFree decode(const FreeMaterialization& m, const FreeCell& c) {
  FreeOverFree f{c.tree, std::vector<std::vector<FreeCell>>(c.label.size())};
  for (std::size_t d = 0; d < c.label.size(); ++d)
    for (int y : c.label[d]) f.cells[d].push_back(m.cells[d][y]);
  return f;
}

Report check_monad(const GlobSet& x, const MonadBounds& b) {
  Report r;
  r.suite = "monad";
  auto& outer = r.law("outer-unit");
  auto& inner = r.law("inner-unit");
  auto& assoc = r.law("associativity");
  auto& fact = r.law("factorisation");
  const int top = std::min(b.max_dim, x.trunc());
  for (int d = 0; d <= top; ++d)
    for (const auto& c : free_cells(x, d, b.max_size)) {
      FreeOverFree e = outer_unit(x, c.tree, c.label);
      MuResult mr = mu_factor(e);
      outer.record(mr.cell == c, cell_text(x, c));
      fact.record(apply_map(mr.cell.label, mr.g) == e, cell_text(x, c));
      inner.record(mu(as_globe_map(c)) == c, cell_text(x, c));
    }
  FreeMaterialization w = materialize_free(x, b.inner_size);
  FreeMaterialization v = materialize_free(w.set, b.outer_size);
  for (int d = 0; d <= top; ++d)
    for (const auto& p : enumerate_trees(d, b.max_size))
      for (const auto& l : labellings(p, v.set)) {
        FreeOverFree f = decode(v, FreeCell{p, l});  // glob(p) -> T(W)
        FreeCell lhs = mu(decode(w, mu(f)));
        FreeOverFree pointwise{p, std::vector<std::vector<FreeCell>>(f.cells.size())};
        for (std::size_t e = 0; e < f.cells.size(); ++e)
          for (const auto& c : f.cells[e]) pointwise.cells[e].push_back(mu(decode(w, c)));
        FreeCell rhs = mu(pointwise);
        assoc.record(lhs == rhs, cell_text(v.set, FreeCell{p, l}));
      }
  return r;
}

Report check_mu_naturality(const GlobSet& x, const GlobSet& y, int max_dim, int max_size) {
  Report r;
  r.suite = "mu-naturality";
  auto& nat = r.law("naturality");
  auto maps = all_maps(x, y);
  FreeMaterialization w = materialize_free(x, max_size);
  const int top = std::min(max_dim, x.trunc());
  for (int d = 0; d <= top; ++d)
    for (const auto& p : enumerate_trees(d, max_size))
      for (const auto& l : labellings(p, w.set)) {
        FreeOverFree f = decode(w, FreeCell{p, l});
        FreeCell base = mu(f);
        for (const auto& h : maps) {
          FreeCell moved = mu(apply_map(h, f));
          nat.record(moved == apply_map(h, base), cell_text(w.set, FreeCell{p, l}));
        }
      }
  return r;
}

}  // namespace globcat
