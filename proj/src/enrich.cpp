#include "globcat/enrich.hpp"

#include <algorithm>
#include <numeric>

namespace globcat {

namespace {

// Calls f on every tuple t with 0 <= t[i] < sizes[i].
void for_each_tuple(const std::vector<int>& sizes, const std::function<void(const std::vector<int>&)>& f) {
  for (int s : sizes)
    if (s <= 0) return;
  std::vector<int> t(sizes.size(), 0);
  while (true) {
    f(t);
    std::size_t i = 0;
    for (; i < t.size(); ++i) {
      if (++t[i] < sizes[i]) break;
      t[i] = 0;
    }
    if (i == t.size()) return;
  }
}

// Compositions of total into k non-negative parts.
void for_each_composition(int total, int k, const std::function<void(const std::vector<int>&)>& f) {
  std::vector<int> parts;
  std::function<void(int)> rec = [&](int left) {
    if (static_cast<int>(parts.size()) == k - 1) {
      parts.push_back(left);
      f(parts);
      parts.pop_back();
      return;
    }
    for (int p = 0; p <= left; ++p) {
      parts.push_back(p);
      rec(left - p);
      parts.pop_back();
    }
  };
  if (k == 0) {
    if (total == 0) f(parts);
    return;
  }
  rec(total);
}

class HomCache {
 public:
  explicit HomCache(const GlobSet& x) : x_(x) {}
  const GlobSet& operator()(int a, int b) {
    auto it = homs_.find({a, b});
    if (it == homs_.end()) it = homs_.emplace(std::make_pair(a, b), hom(x_, a, b)).first;
    return it->second;
  }

 private:
  const GlobSet& x_;
  std::map<std::pair<int, int>, GlobSet> homs_;
};

Tree identity_shape(int d) { return d == 0 ? Tree(1, {}) : Tree(d + 1, {identity_shape(d - 1)}); }

// Two d-globes glued along k-cells.
Tree binary_shape(int d, int k) {
  if (k == 0) return Tree(d, {globe_tree(d - 1), globe_tree(d - 1)});
  return Tree(d, {binary_shape(d - 1, k - 1)});
}

Tree view_arity(const MTOperad& e, const std::string& op) {
  auto o = e.find(op);
  if (!o) throw InputError("unknown operation '" + op + "'");
  return Tree(o->dim + 1, o->arity);
}

// The cell of X assembled from a hom decomposition along seq.
FreeCell reconstruct(const GlobSet& x, const std::vector<int>& seq, const std::vector<GlobSet>& homs,
                     const Tree& q, const MultiCell& c) {
  HomDecomposition h{static_cast<int>(seq.size()) - 1, q.dim, seq, homs, {}};
  for (int i = 0; i < h.m; ++i) h.parts.push_back({q.kids[i], c.labels[i]});
  return hom_reconstruct(x, h);
}

std::vector<int> tuple_key(int d, const std::vector<int>& cells) {
  std::vector<int> k{d};
  k.insert(k.end(), cells.begin(), cells.end());
  return k;
}

std::vector<int> counts_at(const std::vector<GlobSet>& hs, int d) {
  std::vector<int> s;
  for (const auto& h : hs) s.push_back(h.count(d));
  return s;
}

ProductMap product_map(const std::vector<GlobSet>& hs, const GlobSet& h,
                       const std::function<int(int, const std::vector<int>&)>& f) {
  ProductMap pm;
  std::vector<std::vector<int>> zeros;
  for_each_tuple(counts_at(hs, 0), [&](const std::vector<int>& t) {
    pm.objects[t] = f(0, t);
    zeros.push_back(t);
  });
  if (h.trunc() < 1) return pm;
  for (const auto& s : zeros)
    for (const auto& t : zeros) {
      std::vector<GlobSet> subs;
      for (std::size_t i = 0; i < hs.size(); ++i) subs.push_back(hom(hs[i], s[i], t[i]));
      GlobSet subh = hom(h, pm.objects.at(s), pm.objects.at(t));
      auto subf = [&](int d, const std::vector<int>& cells) {
        std::vector<int> parents;
        for (std::size_t i = 0; i < hs.size(); ++i) parents.push_back(hom_to_parent(hs[i], subs[i], {d, cells[i]}).idx);
        auto r = parent_to_hom(subh, h, {d + 1, f(d + 1, parents)});
        if (!r) throw InputError("composite leaves the expected hom");
        return r->idx;
      };
      pm.hom_index[{s, t}] = static_cast<int>(pm.homs.size());
      pm.homs.push_back(product_map(subs, subh, subf));
    }
  return pm;
}

int eval_product_map(const ProductMap& pm, const std::vector<GlobSet>& hs, const GlobSet& h, int d,
                     const std::vector<int>& cells) {
  if (d == 0) return pm.objects.at(cells);
  std::vector<int> s, t, subcells;
  std::vector<GlobSet> subs;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    s.push_back(hs[i].src_at(d, cells[i], 0));
    t.push_back(hs[i].tgt_at(d, cells[i], 0));
    subs.push_back(hom(hs[i], s[i], t[i]));
    subcells.push_back(parent_to_hom(subs[i], hs[i], {d, cells[i]})->idx);
  }
  const ProductMap& sub = pm.homs.at(pm.hom_index.at({s, t}));
  GlobSet subh = hom(h, pm.objects.at(s), pm.objects.at(t));
  int r = eval_product_map(sub, subs, subh, d - 1, subcells);
  return hom_to_parent(h, subh, {d - 1, r}).idx;
}

ProductMap truncate_map(const ProductMap& pm, int depth) {
  ProductMap out;
  out.objects = pm.objects;
  if (depth > 0) {
    out.hom_index = pm.hom_index;
    for (const auto& h : pm.homs) out.homs.push_back(truncate_map(h, depth - 1));
  }
  return out;
}

GlobSet truncate_set(const GlobSet& x, int n) {
  std::vector<std::vector<std::string>> ids;
  std::vector<std::vector<int>> src, tgt;
  for (int d = 0; d <= n; ++d) {
    ids.push_back(x.ids(d));
    src.push_back(x.srcs(d));
    tgt.push_back(x.tgts(d));
  }
  return GlobSet(n, ids, src, tgt);
}

}  // namespace

std::vector<std::vector<int>> object_sequences(int objects, int max_len) {
  std::vector<std::vector<int>> out;
  for (int k = 0; k <= max_len; ++k)
    for_each_tuple(std::vector<int>(k + 1, objects), [&](const std::vector<int>& t) { out.push_back(t); });
  return out;
}

std::vector<GlobSet> seq_homs(const GlobSet& x, const std::vector<int>& seq) {
  std::vector<GlobSet> out;
  for (std::size_t i = 1; i < seq.size(); ++i) out.push_back(hom(x, seq[i - 1], seq[i]));
  return out;
}

ECat make_ecat(MTOperadPtr e, GlobSet carrier, const ECatBounds& b, const KappaFn& f) {
  if (e->trunc() != carrier.trunc() - 1) throw InputError("carrier truncation must be one above the multitensor's");
  ECat c{std::move(e), std::move(carrier), b, {}};
  HomCache homs(c.carrier);
  for (const auto& seq : object_sequences(c.carrier.count(0), b.max_len)) {
    std::vector<GlobSet> hs;
    for (std::size_t i = 1; i < seq.size(); ++i) hs.push_back(homs(seq[i - 1], seq[i]));
    auto& k = c.kappa[seq];
    for (int d = 0; d <= c.e->trunc(); ++d)
      for (const auto& cell : multi_cells(*c.e, hs, d, b.max_size))
        if (auto v = f(seq, hs, cell)) k.emplace(cell, *v);
  }
  return c;
}

Report check_ecat(const ECat& c, const ECatCheckBounds& b) {
  Report r;
  r.suite = "ecat";
  auto& total = r.law("kappa-total");
  auto& glob = r.law("kappa-globular");
  auto& unit = r.law("unit");
  auto& assoc = r.law("associativity");
  auto& e1alg = r.law("hom-E1-algebra");
  auto& e1map = r.law("E1-algebra-map");
  const MTOperad& e = *c.e;
  const int n = e.trunc();
  HomCache homs(c.carrier);
  auto hs_of = [&](const std::vector<int>& seq) {
    std::vector<GlobSet> hs;
    for (std::size_t i = 1; i < seq.size(); ++i) hs.push_back(homs(seq[i - 1], seq[i]));
    return hs;
  };
  auto lookup = [&](const std::vector<int>& seq, const MultiCell& m) -> std::optional<int> {
    auto it = c.kappa.find(seq);
    if (it == c.kappa.end()) return std::nullopt;
    auto jt = it->second.find(m);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  };

  const auto seqs = object_sequences(c.carrier.count(0), c.bounds.max_len);
  for (const auto& seq : seqs) {
    auto hs = hs_of(seq);
    const GlobSet& target = homs(seq.front(), seq.back());
    for (int d = 0; d <= n; ++d)
      for (const auto& cell : multi_cells(e, hs, d, c.bounds.max_size)) {
        auto v = lookup(seq, cell);
        bool ok = v && *v >= 0 && *v < target.count(d);
        total.record(ok, "no composite for " + multi_text(e, hs, cell));
        if (!ok || d == 0) continue;
        auto s = lookup(seq, multi_src(e, cell)), t = lookup(seq, multi_tgt(e, cell));
        glob.record(s && t && target.src(d, *v) == *s && target.tgt(d, *v) == *t,
                    "boundary of the composite of " + multi_text(e, hs, cell));
      }
  }

  for (int a = 0; a < c.carrier.count(0); ++a)
    for (int bb = 0; bb < c.carrier.count(0); ++bb) {
      const GlobSet& h = homs(a, bb);
      for (int d = 0; d <= n; ++d)
        for (int i = 0; i < h.count(d); ++i) {
          auto v = lookup({a, bb}, multi_unit(e, h, {d, i}));
          unit.record(v && *v == i, "unit at " + h.id(d, i));
        }
    }

  std::map<std::vector<int>, MultiSet> blocks;
  auto block = [&](const std::vector<int>& seq) -> const MultiSet& {
    auto it = blocks.find(seq);
    if (it == blocks.end()) it = blocks.emplace(seq, materialize(e, hs_of(seq), c.bounds.max_size)).first;
    return it->second;
  };
  long budget = b.max_instances;
  for (const auto& x : seqs) {
    const int total_len = static_cast<int>(x.size()) - 1;
    for (int k = 1; k <= c.bounds.max_len; ++k)
      for_each_composition(total_len, k, [&](const std::vector<int>& ns) {
        std::vector<std::vector<int>> parts;
        std::vector<int> ends{x[0]};
        int pos = 0;
        for (int len : ns) {
          parts.emplace_back(x.begin() + pos, x.begin() + pos + len + 1);
          pos += len;
          ends.push_back(x[pos]);
        }
        std::vector<const MultiSet*> ws;
        std::vector<GlobSet> wsets;
        for (const auto& p : parts) {
          ws.push_back(&block(p));
          wsets.push_back(ws.back()->set);
        }
        for (int d = 0; d <= n && budget > 0; ++d)
          for (const auto& outer : multi_cells(e, wsets, d, b.outer_size)) {
            if (budget-- <= 0) break;
            auto s = substitute(e, ws, outer);
            std::optional<int> lhs;
            if (s.cell) lhs = lookup(x, *s.cell);
            MultiCell inner{outer.op, outer.labels};
            bool inside = lhs.has_value();
            for (std::size_t i = 0; inside && i < parts.size(); ++i)
              for (std::size_t dd = 0; inside && dd < inner.labels[i].size(); ++dd)
                for (int& y : inner.labels[i][dd]) {
                  auto v = lookup(parts[i], ws[i]->cells[dd][y]);
                  if (!v) {
                    inside = false;
                    break;
                  }
                  y = *v;
                }
            std::optional<int> rhs;
            if (inside) rhs = lookup(ends, inner);
            if (!rhs) {
              ++assoc.skipped;
              continue;
            }
            const bool ok = *lhs == *rhs;
            std::string w = ok ? "" : "substituting into " + outer.op + " over a sequence of length " + std::to_string(total_len);
            assoc.record(ok, w);
            if (k == 1) e1map.record(ok, w);
            if (k == 1 && total_len == 1) e1alg.record(ok, w);
          }
      });
  }
  return r;
}

AlgebraTable algebra_from_tables(const MTOperad& view, const CompositionTables& ct, const ECatBounds& b) {
  const GlobSet& x = ct.cells;
  if (view.trunc() != x.trunc() - 1) throw InputError("view truncation must be one below the carrier's");
  AlgebraTable a{x, {}};
  for (int d = 1; d <= x.trunc(); ++d)
    for (int k = 0; k <= b.max_len; ++k)
      for (const auto& op : view.ops(d - 1, k, b.max_size)) {
        Tree q(d, op.arity);
        for (auto& l : labellings(q, x)) {
          int v = eval_pasting(ct, FreeCell{q, l});
          a.act.emplace(ACell{op.id, std::move(l)}, v);
        }
      }
  return a;
}

CompositionTables tables_from_action(const GlobSet& x,
                                     const std::function<std::optional<int>(const FreeCell&)>& act) {
  const int n = x.trunc();
  CompositionTables ct{x, std::vector<std::vector<int>>(n), {}};
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < x.count(d); ++i) {
      Label l = unit(x, {d, i}).label;
      l.emplace_back();  // no cells in the top dimension
      auto v = act(FreeCell{identity_shape(d), l});
      if (!v) throw InputError("action does not cover the identity on " + x.id(d, i));
      ct.identity[d].push_back(*v);
    }
  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k) {
      Tree q = binary_shape(d, k);
      for (const auto& l : labellings(q, x)) {
        auto v = act(FreeCell{q, l});
        if (!v) throw InputError("action does not cover a binary composite");
        ct.comp[{d, k, l[d][0], l[d][1]}] = *v;
      }
    }
  return ct;
}

CompositionTables tables_from_algebra(const AlgebraTable& a) {
  return tables_from_action(a.carrier, [&](const FreeCell& c) -> std::optional<int> {
    auto it = a.act.find(ACell{tree_id(c.tree), c.label});
    if (it == a.act.end()) return std::nullopt;
    return it->second;
  });
}

ECat algebra_to_ecat(MTOperadPtr view, const AlgebraTable& alg, const ECatBounds& b) {
  const GlobSet& x = alg.carrier;
  HomCache homs(x);
  const MTOperad& v = *view;
  return make_ecat(view, x, b, [&](const std::vector<int>& seq, const std::vector<GlobSet>& hs, const MultiCell& c) {
    Tree q = view_arity(v, c.op);
    FreeCell f = reconstruct(x, seq, hs, q, c);
    auto it = alg.act.find(ACell{c.op, f.label});
    if (it == alg.act.end()) throw InputError("algebra table does not cover " + cell_text(x, f));
    auto p = parent_to_hom(homs(seq.front(), seq.back()), x, {q.dim, it->second});
    if (!p) throw InputError("structure map leaves the hom of " + cell_text(x, f));
    return std::optional<int>(p->idx);
  });
}

AlgebraTable ecat_to_algebra(const ECat& c) {
  const GlobSet& x = c.carrier;
  AlgebraTable a{x, {}};
  HomCache homs(x);
  for (const auto& [seq, table] : c.kappa) {
    std::vector<GlobSet> hs;
    for (std::size_t i = 1; i < seq.size(); ++i) hs.push_back(homs(seq[i - 1], seq[i]));
    const GlobSet& target = homs(seq.front(), seq.back());
    for (const auto& [cell, v] : table) {
      Tree q = view_arity(*c.e, cell.op);
      FreeCell f = reconstruct(x, seq, hs, q, cell);
      a.act.emplace(ACell{cell.op, f.label}, hom_to_parent(x, target, {q.dim - 1, v}).idx);
    }
  }
  return a;
}

AlgCat tcross_to_algcat(const ECat& c) {
  const int n = c.e->trunc();
  AlgCat d{c.carrier, c.bounds, {}, {}};
  HomCache homs(c.carrier);
  for (const auto& [seq, table] : c.kappa) {
    const int k = static_cast<int>(seq.size()) - 1;
    if (k == 1) {
      auto& alg = d.hom_alg[{seq[0], seq[1]}];
      for (const auto& [cell, v] : table) alg.emplace(FreeCell{view_arity(*c.e, cell.op).kids[0], cell.labels[0]}, v);
    }
    std::vector<GlobSet> hs;
    for (int i = 1; i <= k; ++i) hs.push_back(homs(seq[i - 1], seq[i]));
    auto& comp = d.comp[seq];
    for (int dd = 0; dd <= n; ++dd) {
      const std::string op = tree_id(Tree(dd + 1, std::vector<Tree>(k, globe_tree(dd))));
      for_each_tuple(counts_at(hs, dd), [&](const std::vector<int>& cells) {
        MultiCell m{op, {}};
        for (int i = 0; i < k; ++i) m.labels.push_back(unit(hs[i], {dd, cells[i]}).label);
        auto it = table.find(m);
        if (it != table.end()) comp[tuple_key(dd, cells)] = it->second;
      });
    }
  }
  return d;
}

ECat algcat_to_tcross(const AlgCat& d) {
  auto e = tcross(d.carrier.trunc() - 1);
  return make_ecat(e, d.carrier, d.bounds, [&](const std::vector<int>& seq, const std::vector<GlobSet>&, const MultiCell& c) -> std::optional<int> {
    Tree q = view_arity(*e, c.op);
    std::vector<int> cells;
    for (std::size_t i = 0; i < c.labels.size(); ++i) {
      auto a = d.hom_alg.find({seq[i], seq[i + 1]});
      if (a == d.hom_alg.end()) return std::nullopt;
      auto v = a->second.find(FreeCell{q.kids[i], c.labels[i]});
      if (v == a->second.end()) return std::nullopt;
      cells.push_back(v->second);
    }
    auto cm = d.comp.find(seq);
    if (cm == d.comp.end()) return std::nullopt;
    auto v = cm->second.find(tuple_key(q.dim - 1, cells));
    if (v == cm->second.end()) return std::nullopt;
    return v->second;
  });
}

Report check_algcat(const AlgCat& d, int outer_size) {
  Report r;
  r.suite = "algcat";
  auto& hunit = r.law("hom-unit");
  auto& hassoc = r.law("hom-assoc");
  auto& unary = r.law("comp-unary");
  auto& glob = r.law("comp-globular");
  auto& cassoc = r.law("comp-assoc");
  auto& amap = r.law("comp-algebra-map");
  const int n = d.carrier.trunc() - 1;
  const int objs = d.carrier.count(0);
  HomCache homs(d.carrier);
  auto alg = [&](int a, int b, const FreeCell& c) -> std::optional<int> {
    auto it = d.hom_alg.find({a, b});
    if (it == d.hom_alg.end()) return std::nullopt;
    auto jt = it->second.find(c);
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  };
  auto comp = [&](const std::vector<int>& seq, int dd, const std::vector<int>& cells) -> std::optional<int> {
    auto it = d.comp.find(seq);
    if (it == d.comp.end()) return std::nullopt;
    auto jt = it->second.find(tuple_key(dd, cells));
    if (jt == it->second.end()) return std::nullopt;
    return jt->second;
  };

  for (int a = 0; a < objs; ++a)
    for (int b = 0; b < objs; ++b) {
      const GlobSet& h = homs(a, b);
      for (int dd = 0; dd <= n; ++dd)
        for (int i = 0; i < h.count(dd); ++i) {
          auto v = alg(a, b, unit(h, {dd, i}));
          hunit.record(v && *v == i, "unit at " + h.id(dd, i));
          auto u = comp({a, b}, dd, {i});
          unary.record(u && *u == i, "unary composite of " + h.id(dd, i));
        }
      FreeMaterialization m = materialize_free(h, d.bounds.max_size);
      for (int dd = 0; dd <= n; ++dd)
        for (const auto& p : enumerate_trees(dd, outer_size))
          for (const auto& l : labellings(p, m.set)) {
            FreeOverFree f{p, std::vector<std::vector<FreeCell>>(l.size())};
            FreeCell inner{p, Label(l.size())};
            bool inside = true;
            for (std::size_t e = 0; e < l.size(); ++e)
              for (int y : l[e]) {
                f.cells[e].push_back(m.cells[e][y]);
                auto v = alg(a, b, m.cells[e][y]);
                inside &= v.has_value();
                inner.label[e].push_back(v.value_or(0));
              }
            auto lhs = alg(a, b, mu(f));
            auto rhs = inside ? alg(a, b, inner) : std::nullopt;
            if (!lhs || !rhs) {
              ++hassoc.skipped;
              continue;
            }
            hassoc.record(*lhs == *rhs, "hom algebra of (" + d.carrier.id(0, a) + "," + d.carrier.id(0, b) + ")");
          }
    }

  const auto seqs = object_sequences(objs, d.bounds.max_len);
  for (const auto& x : seqs) {
    std::vector<GlobSet> hs;
    for (std::size_t i = 1; i < x.size(); ++i) hs.push_back(homs(x[i - 1], x[i]));
    const GlobSet& target = homs(x.front(), x.back());
    const int len = static_cast<int>(x.size()) - 1;
    for (int dd = 0; dd <= n; ++dd) {
      for_each_tuple(counts_at(hs, dd), [&](const std::vector<int>& cells) {
        auto v = comp(x, dd, cells);
        if (!v) {
          glob.record(false, "missing composite");
          return;
        }
        if (dd > 0) {
          std::vector<int> s, t;
          for (std::size_t i = 0; i < cells.size(); ++i) {
            s.push_back(hs[i].src(dd, cells[i]));
            t.push_back(hs[i].tgt(dd, cells[i]));
          }
          auto cs = comp(x, dd - 1, s), ct = comp(x, dd - 1, t);
          glob.record(cs && ct && *cs == target.src(dd, *v) && *ct == target.tgt(dd, *v), "boundary of a composite");
        }
        for (int k = 1; k <= d.bounds.max_len; ++k)
          for_each_composition(len, k, [&](const std::vector<int>& ns) {
            std::vector<int> ends{x[0]}, outer;
            int pos = 0;
            bool inside = true;
            for (int m : ns) {
              std::vector<int> part(x.begin() + pos, x.begin() + pos + m + 1);
              std::vector<int> pc(cells.begin() + pos, cells.begin() + pos + m);
              auto pv = comp(part, dd, pc);
              inside &= pv.has_value();
              outer.push_back(pv.value_or(0));
              pos += m;
              ends.push_back(x[pos]);
            }
            auto rhs = inside ? comp(ends, dd, outer) : std::nullopt;
            if (!rhs) {
              ++cassoc.skipped;
              return;
            }
            cassoc.record(*rhs == *v, "nested composite over a sequence of length " + std::to_string(len));
          });
      });
      // comp is an algebra map out of the product algebra.
      for (const auto& p : enumerate_trees(dd, d.bounds.max_size)) {
        std::vector<std::vector<Label>> ls;
        std::vector<int> sizes;
        for (const auto& h : hs) {
          ls.push_back(labellings(p, h));
          sizes.push_back(static_cast<int>(ls.back().size()));
        }
        for_each_tuple(sizes, [&](const std::vector<int>& pick) {
          std::vector<int> acted;
          bool inside = true;
          for (std::size_t i = 0; i < pick.size(); ++i) {
            auto v = alg(x[i], x[i + 1], FreeCell{p, ls[i][pick[i]]});
            inside &= v.has_value();
            acted.push_back(v.value_or(0));
          }
          auto lhs = inside ? comp(x, dd, acted) : std::nullopt;
          FreeCell image{p, Label(cell_counts(p).size())};
          for (std::size_t e = 0; inside && e < image.label.size(); ++e)
            for (int j = 0; j < cell_counts(p)[e]; ++j) {
              std::vector<int> cs;
              for (std::size_t i = 0; i < pick.size(); ++i) cs.push_back(ls[i][pick[i]][e][j]);
              auto v = comp(x, static_cast<int>(e), cs);
              inside &= v.has_value();
              image.label[e].push_back(v.value_or(0));
            }
          auto rhs = inside ? alg(x.front(), x.back(), image) : std::nullopt;
          if (!lhs || !rhs) {
            ++amap.skipped;
            return;
          }
          amap.record(*lhs == *rhs, "composition over a sequence of length " + std::to_string(len) + " at shape " + to_text(p));
        });
      }
    }
  }
  return r;
}

AlgCat phi(const CompositionTables& ct, const ECatBounds& b) {
  const int n = ct.cells.trunc();
  if (n < 1) throw InputError("phi needs truncation >= 1");
  auto view = tcross(n - 1);
  return tcross_to_algcat(algebra_to_ecat(view, algebra_from_tables(*view, ct, b), b));
}

CompositionTables phi_inverse(const AlgCat& d) { return tables_from_algebra(ecat_to_algebra(algcat_to_tcross(d))); }

EnrichedCat psi(const CompositionTables& ct, const ECatBounds& b) {
  const GlobSet& x = ct.cells;
  const int n = x.trunc();
  EnrichedCat out{n, x.ids(0), {}, {}};
  if (n == 0) return out;
  AlgCat d = phi(ct, b);
  const int objs = x.count(0);
  HomCache homs(x);
  for (int a = 0; a < objs; ++a)
    for (int c = 0; c < objs; ++c) {
      const auto& alg = d.hom_alg.at({a, c});
      CompositionTables h = tables_from_action(homs(a, c), [&](const FreeCell& f) -> std::optional<int> {
        auto it = alg.find(f);
        if (it == alg.end()) return std::nullopt;
        return it->second;
      });
      out.homs.push_back(psi(h, b));
    }
  for (const auto& [seq, table] : d.comp) {
    std::vector<GlobSet> hs;
    for (std::size_t i = 1; i < seq.size(); ++i) hs.push_back(homs(seq[i - 1], seq[i]));
    out.comp[seq] = product_map(hs, homs(seq.front(), seq.back()),
                                [&](int dd, const std::vector<int>& cells) { return table.at(tuple_key(dd, cells)); });
  }
  return out;
}

CompositionTables psi_inverse(const EnrichedCat& e, const ECatBounds& b) {
  const int n = e.level;
  const int objs = static_cast<int>(e.objects.size());
  if (n == 0) return {GlobSet(0, {e.objects}, {{}}, {{}}), {}, {}};
  std::vector<CompositionTables> parts;
  for (const auto& h : e.homs) parts.push_back(psi_inverse(h, b));
  if (static_cast<int>(parts.size()) != objs * objs) throw InputError("enriched category is missing homs");
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  ids[0] = e.objects;
  std::vector<int> offset(n, 0);
  for (int a = 0; a < objs; ++a)
    for (int c = 0; c < objs; ++c) {
      const GlobSet& h = parts[a * objs + c].cells;
      for (int d = 0; d < n; ++d)
        for (int i = 0; i < h.count(d); ++i) {
          ids[d + 1].push_back(h.id(d, i));
          src[d + 1].push_back(d == 0 ? a : offset[d - 1] + h.src(d, i));
          tgt[d + 1].push_back(d == 0 ? c : offset[d - 1] + h.tgt(d, i));
        }
      for (int d = 0; d < n; ++d) offset[d] += h.count(d);
    }
  AlgCat d{GlobSet(n, ids, src, tgt), b, {}, {}};
  HomCache homs(d.carrier);
  for (int a = 0; a < objs; ++a)
    for (int c = 0; c < objs; ++c) {
      const GlobSet& h = homs(a, c);
      auto& alg = d.hom_alg[{a, c}];
      for (int dd = 0; dd < n; ++dd)
        for (const auto& f : free_cells(h, dd, b.max_size)) alg.emplace(f, eval_pasting(parts[a * objs + c], f));
    }
  for (const auto& seq : object_sequences(objs, b.max_len)) {
    std::vector<GlobSet> hs;
    for (std::size_t i = 1; i < seq.size(); ++i) hs.push_back(homs(seq[i - 1], seq[i]));
    const GlobSet& target = homs(seq.front(), seq.back());
    const ProductMap& pm = e.comp.at(seq);
    auto& comp = d.comp[seq];
    for (int dd = 0; dd < n; ++dd)
      for_each_tuple(counts_at(hs, dd), [&](const std::vector<int>& cells) {
        comp[tuple_key(dd, cells)] = eval_product_map(pm, hs, target, dd, cells);
      });
  }
  return phi_inverse(d);
}

CompositionTables truncate(const CompositionTables& ct, int n) {
  if (n > ct.cells.trunc()) throw InputError("cannot truncate upwards");
  CompositionTables out{truncate_set(ct.cells, n), {}, {}};
  out.identity.assign(ct.identity.begin(), ct.identity.begin() + n);
  for (const auto& [key, v] : ct.comp)
    if (key[0] <= n) out.comp[key] = v;
  return out;
}

AlgCat truncate_homs(const AlgCat& d, int n) {
  AlgCat out{truncate_set(d.carrier, n + 1), d.bounds, {}, {}};
  for (const auto& [ab, alg] : d.hom_alg) {
    auto& o = out.hom_alg[ab];
    for (const auto& [f, v] : alg)
      if (f.dim() <= n) o.emplace(f, v);
  }
  for (const auto& [seq, table] : d.comp) {
    auto& o = out.comp[seq];
    for (const auto& [key, v] : table)
      if (key[0] <= n) o.emplace(key, v);
  }
  return out;
}

EnrichedCat truncate(const EnrichedCat& e, int level) {
  if (level > e.level) throw InputError("cannot truncate upwards");
  EnrichedCat out{level, e.objects, {}, {}};
  if (level == 0) return out;
  for (const auto& h : e.homs) out.homs.push_back(truncate(h, level - 1));
  for (const auto& [seq, pm] : e.comp) out.comp[seq] = truncate_map(pm, level - 1);
  return out;
}

CompositionTables canonical(const CompositionTables& ct) {
  const GlobSet& x = ct.cells;
  const int n = x.trunc();
  std::vector<std::vector<int>> order(n + 1), pos(n + 1);
  for (int d = 0; d <= n; ++d) {
    order[d].resize(x.count(d));
    std::iota(order[d].begin(), order[d].end(), 0);
    std::sort(order[d].begin(), order[d].end(), [&](int a, int b) { return x.id(d, a) < x.id(d, b); });
    pos[d].resize(x.count(d));
    for (int i = 0; i < x.count(d); ++i) pos[d][order[d][i]] = i;
  }
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  for (int d = 0; d <= n; ++d)
    for (int i : order[d]) {
      ids[d].push_back(x.id(d, i));
      if (d > 0) {
        src[d].push_back(pos[d - 1][x.src(d, i)]);
        tgt[d].push_back(pos[d - 1][x.tgt(d, i)]);
      }
    }
  CompositionTables out{GlobSet(n, ids, src, tgt), std::vector<std::vector<int>>(ct.identity.size()), {}};
  for (std::size_t d = 0; d < ct.identity.size(); ++d)
    for (int i : order[d]) out.identity[d].push_back(pos[d + 1][ct.identity[d][i]]);
  for (const auto& [key, v] : ct.comp)
    out.comp[{key[0], key[1], pos[key[0]][key[2]], pos[key[0]][key[3]]}] = pos[key[0]][v];
  return out;
}

}  // namespace globcat
