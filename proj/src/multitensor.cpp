#include "globcat/multitensor.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace globcat {

std::string tree_id(const Tree& t) { return std::to_string(t.dim) + ":" + to_text(t); }

Tree tree_from_id(const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos || colon == 0) throw InputError("bad tree id '" + id + "'");
  int d = 0;
  for (std::size_t i = 0; i < colon; ++i) {
    if (id[i] < '0' || id[i] > '9') throw InputError("bad tree id '" + id + "'");
    d = d * 10 + (id[i] - '0');
  }
  return tree_from_text(id.substr(colon + 1), d);
}

Tree mu_tree(const Tree& p, const std::vector<std::vector<Tree>>& cell_trees) {
  FreeOverFree f{p, std::vector<std::vector<FreeCell>>(cell_trees.size())};
  for (std::size_t d = 0; d < cell_trees.size(); ++d)
    for (const auto& t : cell_trees[d]) {
      Label zero;
      for (int c : cell_counts(t)) zero.emplace_back(c, 0);
      f.cells[d].push_back({t, std::move(zero)});
    }
  return mu(f).tree;
}

namespace {

std::vector<std::vector<Tree>> tuples(const std::vector<Tree>& trees, int k) {
  std::vector<std::vector<Tree>> out{{}};
  for (int i = 0; i < k; ++i) {
    std::vector<std::vector<Tree>> next;
    for (const auto& t : out)
      for (const auto& p : trees) {
        next.push_back(t);
        next.back().push_back(p);
      }
    out = std::move(next);
  }
  return out;
}

MTOp op_of_tree(const Tree& q) {
  MTOp op{tree_id(q), q.dim - 1, q.kids, "", ""};
  if (op.dim > 0) op.src = op.tgt = tree_id(boundary(q));
  return op;
}

class IdentityMT : public MTOperad {
 public:
  explicit IdentityMT(int trunc) : trunc_(trunc) {}
  std::string name() const override { return "tcross"; }
  int trunc() const override { return trunc_; }

  std::vector<MTOp> ops(int d, int k, int max_size) const override {
    std::vector<MTOp> out;
    if (d < 0 || d > trunc_) return out;
    for (auto& ts : tuples(enumerate_trees(d, max_size), k)) out.push_back(op_of_tree(Tree(d + 1, ts)));
    return out;
  }

  std::optional<MTOp> find(const std::string& id) const override {
    Tree q;
    try {
      q = tree_from_id(id);
    } catch (const InputError&) {
      return std::nullopt;
    }
    if (q.dim < 1 || q.dim - 1 > trunc_) return std::nullopt;
    return op_of_tree(q);
  }

  std::string unit(int d) const override { return tree_id(Tree(d + 1, {globe_tree(d)})); }

  std::optional<std::string> subst(const std::string& outer,
                                   const std::vector<OpLabel>& inner) const override {
    auto o = find(outer);
    if (!o || inner.size() != o->arity.size()) throw InputError("tcross: malformed substitution");
    std::vector<Tree> kids;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      const Tree& p = o->arity[i];
      const auto counts = cell_counts(p);
      std::vector<std::vector<MTOp>> cell_ops(counts.size());
      std::size_t n = 0;
      for (std::size_t d = 0; d < counts.size(); ++d) {
        if (inner[i].size() <= d || static_cast<int>(inner[i][d].size()) != counts[d])
          throw InputError("tcross: labelling does not fit its arity");
        for (const auto& id : inner[i][d]) {
          auto op = find(id);
          if (!op || op->dim != static_cast<int>(d)) throw InputError("tcross: bad inner operation");
          cell_ops[d].push_back(*op);
        }
      }
      n = cell_ops[0][0].arity.size();
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::vector<Tree>> trees(counts.size());
        for (std::size_t d = 0; d < counts.size(); ++d)
          for (const auto& op : cell_ops[d]) {
            if (op.arity.size() != n) throw InputError("tcross: inner arities differ");
            trees[d].push_back(op.arity[j]);
          }
        kids.push_back(mu_tree(p, trees));
      }
    }
    return tree_id(Tree(o->dim + 1, std::move(kids)));
  }

 private:
  int trunc_;
};

std::pair<std::string, int> split_set_id(const std::string& id) {
  auto slash = id.rfind('/');
  if (slash == std::string::npos) throw InputError("bad operation id '" + id + "'");
  return {id.substr(0, slash), std::stoi(id.substr(slash + 1))};
}

class SetOperadMT : public MTOperad {
 public:
  explicit SetOperadMT(std::shared_ptr<const SetOperad> o) : o_(std::move(o)) {}
  std::string name() const override { return o_->name; }
  int trunc() const override { return 0; }

  std::vector<MTOp> ops(int d, int k, int) const override {
    std::vector<MTOp> out;
    if (d != 0 || k > o_->max_arity) return out;
    for (const auto& op : o_->ops[k]) out.push_back(make(op, k));
    return out;
  }

  std::optional<MTOp> find(const std::string& id) const override {
    auto slash = id.rfind('/');
    if (slash == std::string::npos) return std::nullopt;
    auto [op, k] = split_set_id(id);
    if (o_->index(k, op) < 0) return std::nullopt;
    return make(op, k);
  }

  std::string unit(int d) const override {
    if (d != 0) throw InputError("set operad has only dimension 0");
    return o_->unit + "/1";
  }

  std::optional<std::string> subst(const std::string& outer,
                                   const std::vector<OpLabel>& inner) const override {
    auto [op, k] = split_set_id(outer);
    if (static_cast<int>(inner.size()) != k) throw InputError("set operad: malformed substitution");
    std::vector<std::pair<int, int>> in;
    int total = 0;
    for (const auto& l : inner) {
      auto [iop, n] = split_set_id(l.at(0).at(0));
      in.emplace_back(n, o_->index(n, iop));
      total += n;
    }
    auto r = o_->compose(o_->index(k, op), in);
    if (!r) return std::nullopt;
    return o_->ops[total][*r] + "/" + std::to_string(total);
  }

 private:
  static MTOp make(const std::string& op, int k) {
    return {op + "/" + std::to_string(k), 0, std::vector<Tree>(k, Tree()), "", ""};
  }
  std::shared_ptr<const SetOperad> o_;
};

class TableMT : public MTOperad {
 public:
  explicit TableMT(MTTable t) : t_(std::move(t)) {
    for (std::size_t i = 0; i < t_.ops.size(); ++i) {
      const auto& op = t_.ops[i];
      if (op.dim < 0 || op.dim > t_.trunc) throw InputError("operation '" + op.id + "' out of range");
      for (const auto& p : op.arity)
        if (p.dim != op.dim) throw InputError("operation '" + op.id + "' has a mis-dimensioned arity");
      if (!by_id_.emplace(op.id, i).second) throw InputError("duplicate operation '" + op.id + "'");
    }
    for (const auto& e : t_.subst)
      if (!subst_.emplace(subst_key(e.outer, e.inner), e.result).second)
        throw InputError("duplicate substitution for '" + e.outer + "'");
  }
  std::string name() const override { return t_.name; }
  int trunc() const override { return t_.trunc; }

  std::vector<MTOp> ops(int d, int k, int max_size) const override {
    std::vector<MTOp> out;
    for (const auto& op : t_.ops) {
      if (op.dim != d || static_cast<int>(op.arity.size()) != k) continue;
      bool fits = true;
      for (const auto& p : op.arity) fits &= p.size() <= max_size;
      if (fits) out.push_back(op);
    }
    return out;
  }

  std::optional<MTOp> find(const std::string& id) const override {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return std::nullopt;
    return t_.ops[it->second];
  }

  std::string unit(int d) const override {
    if (d < 0 || d >= static_cast<int>(t_.units.size())) throw InputError("no unit in dimension " + std::to_string(d));
    return t_.units[d];
  }

  std::optional<std::string> subst(const std::string& outer,
                                   const std::vector<OpLabel>& inner) const override {
    auto it = subst_.find(subst_key(outer, inner));
    if (it == subst_.end()) return std::nullopt;
    return it->second;
  }

 private:
  MTTable t_;
  std::map<std::string, std::size_t> by_id_;
  std::map<std::string, std::string> subst_;
};

// Operations with k arguments as a globular set, for enumerating labellings.
struct OpGlob {
  GlobSet set;
  std::vector<std::vector<MTOp>> ops;
};

OpGlob op_glob(const MTOperad& e, int k, int max_size) {
  const int n = e.trunc();
  OpGlob g;
  g.ops.resize(n + 1);
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  std::map<std::string, int> pos;
  for (int d = 0; d <= n; ++d)
    for (auto& op : e.ops(d, k, max_size)) {
      if (d > 0) {
        auto s = pos.find(op.src), t = pos.find(op.tgt);
        if (s == pos.end() || t == pos.end()) continue;
        src[d].push_back(s->second);
        tgt[d].push_back(t->second);
      }
      pos[op.id] = static_cast<int>(ids[d].size());
      ids[d].push_back(op.id);
      g.ops[d].push_back(std::move(op));
    }
  g.set = GlobSet(n, ids, src, tgt);
  return g;
}

}  // namespace

MTOperadPtr tcross(int trunc) {
  if (trunc < 0) throw InputError("negative truncation");
  return std::make_shared<IdentityMT>(trunc);
}

MTOperadPtr embed_set_operad(std::shared_ptr<const SetOperad> o) {
  return std::make_shared<SetOperadMT>(std::move(o));
}

std::string subst_key(const std::string& outer, const std::vector<OpLabel>& inner) {
  std::string s = outer + "<";
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (i) s += "|";
    for (std::size_t d = 0; d < inner[i].size(); ++d) {
      if (d) s += ";";
      for (std::size_t j = 0; j < inner[i][d].size(); ++j) {
        if (j) s += ",";
        s += inner[i][d][j];
      }
    }
  }
  return s + ">";
}

MTOperadPtr table_operad(MTTable t) { return std::make_shared<TableMT>(std::move(t)); }

MTTable tabulate(const MTOperad& e, int max_arity, int max_size) {
  MTTable t;
  t.name = e.name();
  t.trunc = e.trunc();
  std::vector<OpGlob> globs;
  for (int k = 0; k <= max_arity; ++k) globs.push_back(op_glob(e, k, max_size));
  for (int d = 0; d <= t.trunc; ++d) {
    t.units.push_back(e.unit(d));
    for (int k = 0; k <= max_arity; ++k)
      for (const auto& op : globs[k].ops[d]) t.ops.push_back(op);
  }
  std::set<std::string> known;
  for (const auto& op : t.ops) known.insert(op.id);
  for (int d = 0; d <= t.trunc; ++d)
    for (int k = 0; k <= max_arity; ++k)
      for (const auto& outer : globs[k].ops[d]) {
        // Per argument: every labelling of glob(p_i) by operations of any arity.
        std::vector<std::vector<OpLabel>> choices(k);
        for (int i = 0; i < k; ++i)
          for (int n = 0; n <= max_arity; ++n)
            for (const auto& l : labellings(outer.arity[i], globs[n].set)) {
              OpLabel ol(l.size());
              for (std::size_t dd = 0; dd < l.size(); ++dd)
                for (int y : l[dd]) ol[dd].push_back(globs[n].set.id(static_cast<int>(dd), y));
              choices[i].push_back(std::move(ol));
            }
        std::vector<OpLabel> cur;
        std::function<void(int)> go = [&](int i) {
          if (i == k) {
            auto r = e.subst(outer.id, cur);
            if (r && known.count(*r)) t.subst.push_back({outer.id, cur, *r});
            return;
          }
          for (const auto& c : choices[i]) {
            cur.push_back(c);
            go(i + 1);
            cur.pop_back();
          }
        };
        go(0);
      }
  return t;
}

std::vector<MultiCell> multi_cells(const MTOperad& e, const std::vector<GlobSet>& xs, int d,
                                   int max_size) {
  std::vector<MultiCell> out;
  const int k = static_cast<int>(xs.size());
  for (const auto& op : e.ops(d, k, max_size)) {
    std::vector<std::vector<Label>> per(k);
    bool empty = false;
    for (int i = 0; i < k && !empty; ++i) {
      per[i] = labellings(op.arity[i], xs[i]);
      std::sort(per[i].begin(), per[i].end());
      empty = per[i].empty();
    }
    if (empty) continue;
    MultiCell cur{op.id, {}};
    std::function<void(int)> go = [&](int i) {
      if (i == k) {
        out.push_back(cur);
        return;
      }
      for (const auto& l : per[i]) {
        cur.labels.push_back(l);
        go(i + 1);
        cur.labels.pop_back();
      }
    };
    go(0);
  }
  return out;
}

namespace {

MultiCell multi_face(const MTOperad& e, const MultiCell& c, bool source) {
  auto op = e.find(c.op);
  if (!op) throw InputError("unknown operation '" + c.op + "'");
  if (op->dim == 0) throw InputError("boundary of a dimension-0 cell");
  MultiCell out{source ? op->src : op->tgt, {}};
  for (std::size_t i = 0; i < op->arity.size(); ++i)
    out.labels.push_back(
        compose(c.labels[i], source ? sigma_map(op->arity[i]) : tau_map(op->arity[i])));
  return out;
}

}  // namespace

MultiCell multi_src(const MTOperad& e, const MultiCell& c) { return multi_face(e, c, true); }
MultiCell multi_tgt(const MTOperad& e, const MultiCell& c) { return multi_face(e, c, false); }

std::string multi_text(const MTOperad&, const std::vector<GlobSet>& xs, const MultiCell& c) {
  std::string s = c.op + "{";
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    if (i) s += "|";
    for (std::size_t d = 0; d < c.labels[i].size(); ++d) {
      if (d) s += ";";
      for (int y : c.labels[i][d]) s += "(" + xs[i].id(static_cast<int>(d), y) + ")";
    }
  }
  return s + "}";
}

int MultiSet::find(const MultiCell& c) const {
  auto it = index.find(c);
  return it == index.end() ? -1 : it->second;
}

namespace {

// Globular set on an explicit list of cells closed under boundaries.
MultiSet multiset_of(const MTOperad& e, const std::vector<GlobSet>& xs,
                     std::vector<std::vector<MultiCell>> cells) {
  const int n = e.trunc();
  MultiSet m;
  m.cells = std::move(cells);
  m.cells.resize(n + 1);
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < static_cast<int>(m.cells[d].size()); ++i) {
      const MultiCell& c = m.cells[d][i];
      m.index.emplace(c, i);
      ids[d].push_back(multi_text(e, xs, c));
      if (d > 0) {
        int s = m.find(multi_src(e, c)), t = m.find(multi_tgt(e, c));
        if (s < 0 || t < 0) throw InputError("multitensor cells are not closed under boundaries");
        src[d].push_back(s);
        tgt[d].push_back(t);
      }
    }
  m.set = GlobSet(n, ids, src, tgt);
  return m;
}

}  // namespace

MultiSet materialize(const MTOperad& e, const std::vector<GlobSet>& xs, int max_size) {
  for (const auto& x : xs)
    if (x.trunc() != e.trunc()) throw InputError("mixed truncations");
  std::vector<std::vector<MultiCell>> cells(e.trunc() + 1);
  for (int d = 0; d <= e.trunc(); ++d) cells[d] = multi_cells(e, xs, d, max_size);
  return multiset_of(e, xs, std::move(cells));
}

MultiCell multi_unit(const MTOperad& e, const GlobSet& x, CellIx c) {
  return {e.unit(c.dim), {unit(x, c).label}};
}

SubstResult substitute(const MTOperad& e, const std::vector<const MultiSet*>& ws,
                       const MultiCell& outer) {
  auto o = e.find(outer.op);
  if (!o) throw InputError("unknown operation '" + outer.op + "'");
  const std::size_t k = o->arity.size();
  if (ws.size() != k || outer.labels.size() != k) throw InputError("substitution arity mismatch");
  std::map<std::string, MTOp> seen;
  auto lookup = [&](const std::string& id) -> const MTOp& {
    auto it = seen.find(id);
    if (it != seen.end()) return it->second;
    auto op = e.find(id);
    if (!op) throw InputError("unknown operation '" + id + "'");
    return seen.emplace(id, *op).first->second;
  };
  std::vector<OpLabel> inner(k);
  for (std::size_t i = 0; i < k; ++i) {
    inner[i].resize(outer.labels[i].size());
    for (std::size_t d = 0; d < outer.labels[i].size(); ++d)
      for (int y : outer.labels[i][d]) inner[i][d].push_back(ws[i]->cells[d][y].op);
  }
  auto rid = e.subst(outer.op, inner);
  SubstResult res;
  if (!rid) return res;
  const MTOp& r = lookup(*rid);
  MultiCell out{*rid, {}};
  std::size_t idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const Tree& p = o->arity[i];
    const auto& l = outer.labels[i];
    const std::size_t n = ws[i]->cells[0][l[0][0]].labels.size();
    for (std::size_t j = 0; j < n; ++j, ++idx) {
      FreeOverFree f{p, std::vector<std::vector<FreeCell>>(l.size())};
      for (std::size_t d = 0; d < l.size(); ++d)
        for (int y : l[d]) {
          const MultiCell& w = ws[i]->cells[d][y];
          f.cells[d].push_back({lookup(w.op).arity.at(j), w.labels.at(j)});
        }
      FreeCell c = mu(f);
      if (idx >= r.arity.size() || !(c.tree == r.arity[idx])) res.arity_ok = false;
      out.labels.push_back(std::move(c.label));
    }
  }
  if (idx != r.arity.size()) res.arity_ok = false;
  res.cell = std::move(out);
  return res;
}

namespace {

// All vectors of length k with entries in [0, cap] and sum <= total.
void bounded_tuples(int k, int cap, int total, std::vector<int>& cur,
                    const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == k) {
    emit(cur);
    return;
  }
  for (int a = 0; a <= std::min(cap, total); ++a) {
    cur.push_back(a);
    bounded_tuples(k, cap, total - a, cur, emit);
    cur.pop_back();
  }
}

std::string seq_text(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

}  // namespace

Report check_multitensor(const MTOperad& e, const GlobSet& x, const MTBounds& b) {
  Report r;
  r.suite = "multitensor";
  auto& lu = r.law("unit-left");
  auto& ru = r.law("unit-right");
  auto& as = r.law("associativity");
  auto& monad = r.law("E1-monad");
  auto& action = r.law("E1-action");
  auto& alg = r.law("sigma-E1-algebra-map");
  auto& ar = r.law("arity-mu");
  const int top = std::min(b.max_dim, e.trunc());

  std::map<int, MultiSet> w_cache;
  auto w_of = [&](int n) -> const MultiSet& {
    auto it = w_cache.find(n);
    if (it != w_cache.end()) return it->second;
    return w_cache.emplace(n, materialize(e, std::vector<GlobSet>(n, x), b.max_size)).first->second;
  };

  for (int n = 0; n <= b.max_arity; ++n) {
    const MultiSet& w = w_of(n);
    for (int d = 0; d <= top; ++d)
      for (int i = 0; i < static_cast<int>(w.cells[d].size()); ++i) {
        auto s = substitute(e, {&w}, multi_unit(e, w.set, {d, i}));
        if (!s.cell) {
          ++lu.skipped;
          continue;
        }
        ar.record(s.arity_ok, "unit-left " + w.set.id(d, i));
        lu.record(*s.cell == w.cells[d][i], w.set.id(d, i));
      }
  }

  const MultiSet& u = w_of(1);
  Label ux(x.trunc() + 1);
  for (int d = 0; d <= x.trunc(); ++d)
    for (int c = 0; c < x.count(d); ++c) ux[d].push_back(u.find(multi_unit(e, x, {d, c})));
  for (int k = 0; k <= b.max_arity; ++k) {
    const MultiSet& v = w_of(k);
    std::vector<const MultiSet*> ws(k, &u);
    for (int d = 0; d <= top; ++d)
      for (int i = 0; i < static_cast<int>(v.cells[d].size()); ++i) {
        const MultiCell& c = v.cells[d][i];
        MultiCell outer{c.op, {}};
        for (const auto& l : c.labels) outer.labels.push_back(compose(ux, l));
        auto s = substitute(e, ws, outer);
        if (!s.cell) {
          ++ru.skipped;
          continue;
        }
        ar.record(s.arity_ok, "unit-right");
        ru.record(*s.cell == c, v.set.id(d, i));
      }
  }

  // Three-level instances: outer arity k, middle arities ms, inner arities ns.
  std::map<std::vector<int>, MultiSet> v_cache;
  for (int k = 0; k <= b.max_arity; ++k) {
    std::vector<int> mcur;
    bounded_tuples(k, b.max_arity, b.max_arity, mcur, [&](const std::vector<int>& ms) {
      int msum = 0;
      for (int m : ms) msum += m;
      std::vector<int> ncur;
      bounded_tuples(msum, b.max_arity, b.max_arity, ncur, [&](const std::vector<int>& ns) {
        // Middle level V_i = E_{m_i}(W_i1..W_im_i), and its image under sigma.
        std::vector<const MultiSet*> vs, us, wflat;
        std::vector<MultiSet> images;
        std::vector<Label> to_image;
        images.reserve(k);
        std::vector<int> nsums;
        std::size_t off = 0;
        for (int i = 0; i < k; ++i) {
          std::vector<int> block(ns.begin() + off, ns.begin() + off + ms[i]);
          std::vector<const MultiSet*> wi;
          std::vector<GlobSet> wsets;
          int nsum = 0;
          for (int n : block) {
            wi.push_back(&w_of(n));
            wflat.push_back(&w_of(n));
            wsets.push_back(w_of(n).set);
            nsum += n;
          }
          nsums.push_back(nsum);
          off += ms[i];
          auto it = v_cache.find(block);
          if (it == v_cache.end())
            it = v_cache.emplace(block, materialize(e, wsets, b.outer_size)).first;
          const MultiSet& vi = it->second;
          vs.push_back(&vi);
          std::vector<std::vector<MultiCell>> img(e.trunc() + 1);
          std::vector<std::set<MultiCell>> seen(e.trunc() + 1);
          Label lab(e.trunc() + 1);
          bool complete = true;
          for (int d = 0; d <= e.trunc(); ++d)
            for (const auto& c : vi.cells[d]) {
              auto s = substitute(e, wi, c);
              if (!s.cell) {
                complete = false;
                lab[d].push_back(-1);
                continue;
              }
              ar.record(s.arity_ok, "middle " + vi.set.id(d, static_cast<int>(lab[d].size())));
              if (seen[d].insert(*s.cell).second) img[d].push_back(*s.cell);
              lab[d].push_back(0);
            }
          if (!complete) {
            ++as.skipped;
            return;
          }
          images.push_back(multiset_of(e, std::vector<GlobSet>(nsum, x), std::move(img)));
          Label fixed(e.trunc() + 1);
          for (int d = 0; d <= e.trunc(); ++d)
            for (std::size_t c = 0; c < vi.cells[d].size(); ++c)
              fixed[d].push_back(images.back().find(*substitute(e, wi, vi.cells[d][c]).cell));
          to_image.push_back(std::move(fixed));
          us.push_back(&images.back());
        }
        std::vector<GlobSet> vsets;
        for (auto* v : vs) vsets.push_back(v->set);
        for (int d = 0; d <= top; ++d)
          for (const auto& z : multi_cells(e, vsets, d, b.outer_size)) {
            MultiCell zi{z.op, {}};
            for (int i = 0; i < k; ++i) zi.labels.push_back(compose(to_image[i], z.labels[i]));
            auto a = substitute(e, us, zi);
            auto y = substitute(e, vs, z);
            if (!a.cell || !y.cell) {
              ++as.skipped;
              continue;
            }
            auto c = substitute(e, wflat, *y.cell);
            if (!c.cell) {
              ++as.skipped;
              continue;
            }
            ar.record(a.arity_ok && y.arity_ok && c.arity_ok, "associativity");
            const bool ok = *a.cell == *c.cell;
            const std::string w = "k=" + std::to_string(k) + " m=" + seq_text(ms) + " n=" + seq_text(ns);
            as.record(ok, w);
            if (k == 1) {
              alg.record(ok, w);
              if (ms[0] == 1) action.record(ok, w);
              if (ms[0] == 1 && ns[0] == 1) monad.record(ok, w);
            }
          }
      });
    });
  }
  return r;
}

int WordSet::find(int d, const std::vector<int>& w) const {
  auto it = index.find({d, w});
  return it == index.end() ? -1 : it->second;
}

WordSet materialize_words(const GlobSet& x, int max_len) {
  const int n = x.trunc();
  WordSet m;
  m.words.resize(n + 1);
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  for (int d = 0; d <= n; ++d) {
    std::vector<std::vector<int>> layer{{}};
    for (int len = 0; len <= max_len; ++len) {
      for (const auto& w : layer) {
        const int i = static_cast<int>(m.words[d].size());
        m.words[d].push_back(w);
        m.index.emplace(std::make_pair(d, w), i);
        std::string id = std::to_string(d) + "<";
        for (std::size_t j = 0; j < w.size(); ++j) id += (j ? "," : "") + x.id(d, w[j]);
        ids[d].push_back(id + ">");
        if (d > 0) {
          std::vector<int> s, t;
          for (int c : w) {
            s.push_back(x.src(d, c));
            t.push_back(x.tgt(d, c));
          }
          src[d].push_back(m.index.at({d - 1, s}));
          tgt[d].push_back(m.index.at({d - 1, t}));
        }
      }
      std::vector<std::vector<int>> next;
      for (const auto& w : layer)
        for (int c = 0; c < x.count(d); ++c) {
          next.push_back(w);
          next.back().push_back(c);
        }
      layer = std::move(next);
    }
  }
  m.set = GlobSet(n, ids, src, tgt);
  return m;
}

int distributive_lambda(const WordSet& mx, const FreeMaterialization& tx, const WordSet& mtx,
                        const FreeCell& c) {
  const std::size_t n = mx.words[0][c.label[0][0]].size();
  std::vector<int> word;
  for (std::size_t i = 0; i < n; ++i) {
    Label li(c.label.size());
    for (std::size_t d = 0; d < c.label.size(); ++d)
      for (int y : c.label[d]) {
        const auto& w = mx.words[d][y];
        if (w.size() != n) throw InputError("labelling leaves a single word length");
        li[d].push_back(w[i]);
      }
    int t = tx.find({c.tree, std::move(li)});
    if (t < 0) return -1;
    word.push_back(t);
  }
  return mtx.find(c.dim(), word);
}

namespace {

// Word-length-preserving action of a map on words.
Label word_map(const WordSet& from, const WordSet& to, const Label& g) {
  Label out(from.words.size());
  for (std::size_t d = 0; d < from.words.size(); ++d)
    for (const auto& w : from.words[d]) {
      std::vector<int> v;
      for (int c : w) v.push_back(g[d][c]);
      out[d].push_back(to.find(static_cast<int>(d), v));
    }
  return out;
}

// Action of T on a map, read back into the target materialization.
Label free_map(const FreeMaterialization& from, const FreeMaterialization& to, const Label& g) {
  Label out(from.cells.size());
  for (std::size_t d = 0; d < from.cells.size(); ++d)
    for (const auto& c : from.cells[d]) out[d].push_back(to.find(apply_map(g, c)));
  return out;
}

bool defined(const Label& l, const FreeCell& c) {
  for (std::size_t d = 0; d < c.label.size(); ++d)
    for (int y : c.label[d])
      if (l[d][y] < 0) return false;
  return true;
}

struct DistSide {
  WordSet mx;
  FreeMaterialization tmx, tx;
  WordSet mtx;
};

DistSide dist_side(const GlobSet& x, const DistBounds& b) {
  DistSide s;
  s.mx = materialize_words(x, b.max_len);
  s.tmx = materialize_free(s.mx.set, b.max_size);
  s.tx = materialize_free(x, b.max_size);
  s.mtx = materialize_words(s.tx.set, b.max_len);
  return s;
}

}  // namespace

Report check_distributive_law(const GlobSet& x, const std::vector<GlobSet>& targets,
                              const DistBounds& b) {
  Report r;
  r.suite = "distlaw";
  auto& unit_t = r.law("unit-T");
  auto& unit_m = r.law("unit-M");
  auto& nat = r.law("naturality");
  auto& mult_m = r.law("mult-M");
  auto& mult_t = r.law("mult-T");
  const DistSide s = dist_side(x, b);
  const int n = x.trunc();
  auto lam = [&](const DistSide& side, const FreeCell& c) {
    return distributive_lambda(side.mx, side.tx, side.mtx, c);
  };

  // lambda . eta_M = M eta
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < s.mx.set.count(d); ++i) {
      std::vector<int> expect;
      for (int c : s.mx.words[d][i]) expect.push_back(s.tx.find(unit(x, {d, c})));
      unit_t.record(lam(s, unit(s.mx.set, {d, i})) == s.mtx.find(d, expect), s.mx.set.id(d, i));
    }
  // lambda . T(eta) = eta_T
  Label eta_m(n + 1);
  for (int d = 0; d <= n; ++d)
    for (int c = 0; c < x.count(d); ++c) eta_m[d].push_back(s.mx.find(d, {c}));
  for (int d = 0; d <= n; ++d)
    for (int i = 0; i < static_cast<int>(s.tx.cells[d].size()); ++i)
      unit_m.record(lam(s, apply_map(eta_m, s.tx.cells[d][i])) == s.mtx.find(d, {i}),
                    s.tx.set.id(d, i));

  for (const auto& y : targets) {
    const DistSide t = dist_side(y, b);
    for (const auto& g : all_maps(x, y)) {
      const Label mg = word_map(s.mx, t.mx, g);
      const Label tg = free_map(s.tx, t.tx, g);
      const Label mtg = word_map(s.mtx, t.mtx, tg);
      for (int d = 0; d <= n; ++d)
        for (const auto& c : s.tmx.cells[d]) {
          const int left = lam(s, c);
          if (left < 0 || mtg[d][left] < 0) {
            ++nat.skipped;
            continue;
          }
          nat.record(lam(t, apply_map(mg, c)) == mtg[d][left], cell_text(s.mx.set, c));
        }
    }
  }

  // lambda . T(mu_M) = mu_M . M(lambda) . lambda_M
  {
    const WordSet mmx = materialize_words(s.mx.set, b.max_len);
    const FreeMaterialization tmmx = materialize_free(mmx.set, b.outer_size);
    const WordSet mtmx = materialize_words(s.tmx.set, b.max_len);
    Label concat(n + 1);
    for (int d = 0; d <= n; ++d)
      for (const auto& ww : mmx.words[d]) {
        std::vector<int> flat;
        for (int w : ww)
          for (int c : s.mx.words[d][w]) flat.push_back(c);
        concat[d].push_back(s.mx.find(d, flat));
      }
    for (int d = 0; d <= n; ++d)
      for (const auto& c : tmmx.cells[d]) {
        if (!defined(concat, c)) {
          ++mult_m.skipped;
          continue;
        }
        const int left = lam(s, apply_map(concat, c));
        const int outer = distributive_lambda(mmx, s.tmx, mtmx, c);
        if (left < 0 || outer < 0) {
          ++mult_m.skipped;
          continue;
        }
        std::vector<int> flat;
        bool ok = true;
        for (int t : mtmx.words[d][outer]) {
          int inner = lam(s, s.tmx.cells[d][t]);
          if (inner < 0) {
            ok = false;
            break;
          }
          for (int z : s.mtx.words[d][inner]) flat.push_back(z);
        }
        const int right = ok ? s.mtx.find(d, flat) : -1;
        if (right < 0) {
          ++mult_m.skipped;
          continue;
        }
        mult_m.record(left == right, cell_text(mmx.set, c));
      }
  }

  // lambda . mu_T = M(mu_T) . lambda_T . T(lambda)
  {
    const FreeMaterialization ttmx = materialize_free(s.tmx.set, b.outer_size);
    const FreeMaterialization ttx = materialize_free(s.tx.set, b.max_size);
    const WordSet mttx = materialize_words(ttx.set, b.max_len);
    Label lam_label(n + 1);
    for (int d = 0; d <= n; ++d)
      for (const auto& c : s.tmx.cells[d]) lam_label[d].push_back(lam(s, c));
    for (int d = 0; d <= n; ++d)
      for (const auto& c : ttmx.cells[d]) {
        const int flat = s.tmx.find(mu(decode(s.tmx, c)));
        if (flat < 0 || !defined(lam_label, c)) {
          ++mult_t.skipped;
          continue;
        }
        const int left = lam(s, s.tmx.cells[d][flat]);
        const int mid = distributive_lambda(s.mtx, ttx, mttx, apply_map(lam_label, c));
        if (left < 0 || mid < 0) {
          ++mult_t.skipped;
          continue;
        }
        std::vector<int> word;
        bool ok = true;
        for (int t : mttx.words[d][mid]) {
          int m = s.tx.find(mu(decode(s.tx, ttx.cells[d][t])));
          if (m < 0) {
            ok = false;
            break;
          }
          word.push_back(m);
        }
        const int right = ok ? s.mtx.find(d, word) : -1;
        if (right < 0) {
          ++mult_t.skipped;
          continue;
        }
        mult_t.record(left == right, cell_text(s.tmx.set, c));
      }
  }
  return r;
}

}  // namespace globcat
