#include "globcat/operad.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace globcat {

namespace {

using OpIndex = std::unordered_map<std::string, const TOp*>;

OpIndex index_ops(const Collection& a) {
  OpIndex ix;
  for (const auto& op : a.ops) ix.emplace(op.id, &op);
  return ix;
}

const TOp& need(const Collection& a, const std::string& id) {
  const TOp* op = a.find(id);
  if (!op) throw InputError("unknown operation '" + id + "'");
  return *op;
}

std::string label_key(const std::string& outer, const OpLabel& l) {
  std::string s = outer;
  s += '\x1f';
  for (std::size_t d = 0; d < l.size(); ++d) {
    if (d) s += '\x1e';
    for (std::size_t j = 0; j < l[d].size(); ++j) {
      if (j) s += '\x1d';
      s += l[d][j];
    }
  }
  return s;
}

OpLabel to_op_label(const GlobSet& ops, const Label& l) {
  OpLabel out(l.size());
  for (std::size_t d = 0; d < l.size(); ++d)
    for (int i : l[d]) out[d].push_back(ops.id(static_cast<int>(d), i));
  return out;
}

std::optional<Label> from_op_label(const GlobSet& ops, const OpLabel& l) {
  Label out(l.size());
  for (std::size_t d = 0; d < l.size(); ++d)
    for (const auto& id : l[d]) {
      auto c = ops.find(id);
      if (!c || c->dim != static_cast<int>(d)) return std::nullopt;
      out[d].push_back(c->idx);
    }
  return out;
}

// Arity trees of the operations labelling each cell.
std::vector<std::vector<Tree>> label_arities(const OpIndex& ix, const OpLabel& l) {
  std::vector<std::vector<Tree>> out(l.size());
  for (std::size_t d = 0; d < l.size(); ++d)
    for (const auto& id : l[d]) out[d].push_back(d == 0 ? point_tree() : ix.at(id)->arity);
  return out;
}

// Labelling of glob(globe_tree(d)) by b and its iterated boundaries.
OpLabel globe_labelling(const OpIndex& ix, const TOp& b) {
  GlobSet g = glob_of_tree(globe_tree(b.dim));
  OpLabel l(b.dim + 1);
  for (int d = 0; d <= b.dim; ++d) l[d].assign(g.count(d), trivial_op());
  l[b.dim][0] = b.id;
  for (int d = b.dim; d >= 2; --d)
    for (int c = 0; c < g.count(d); ++c) {
      const TOp* op = ix.at(l[d][c]);
      l[d - 1][g.src(d, c)] = op->src;
      l[d - 1][g.tgt(d, c)] = op->tgt;
    }
  return l;
}

OpLabel unit_labelling(const Operad& a, const Tree& q) {
  auto counts = cell_counts(q);
  OpLabel l(counts.size());
  for (std::size_t d = 0; d < counts.size(); ++d) l[d].assign(counts[d], a.units[d]);
  return l;
}

std::vector<std::vector<int>> block_offsets(const std::vector<GlobSet>& xs, int n) {
  std::vector<std::vector<int>> off(xs.size(), std::vector<int>(n + 1, 0));
  for (std::size_t i = 1; i < xs.size(); ++i)
    for (int d = 0; d <= n; ++d) off[i][d] = off[i - 1][d] + xs[i - 1].count(d);
  return off;
}

std::string op_src(const TOp& op) { return op.dim == 1 ? trivial_op() : op.src; }
std::string op_tgt(const TOp& op) { return op.dim == 1 ? trivial_op() : op.tgt; }

}  // namespace

const TOp* Collection::find(const std::string& id) const {
  for (const auto& op : ops)
    if (op.id == id) return &op;
  return nullptr;
}

std::vector<const TOp*> Collection::of_dim(int d, int max_size) const {
  std::vector<const TOp*> out;
  for (const auto& op : ops)
    if (op.dim == d && op.arity.size() <= max_size) out.push_back(&op);
  return out;
}

std::optional<std::string> Operad::compose(const std::string& outer, const OpLabel& l) const {
  auto it = table_.find(label_key(outer, l));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

void Operad::reindex() {
  table_.clear();
  for (const auto& s : subst)
    if (!table_.emplace(label_key(s.outer, s.labelling), s.result).second)
      throw InputError("duplicate substitution into '" + s.outer + "'");
}

Tree arity_of(const Collection& a, const std::string& op) {
  if (op == trivial_op()) return point_tree();
  return need(a, op).arity;
}

Collection identity_collection(int trunc, int max_size) {
  if (trunc < 1) throw InputError("an operad has truncation >= 1");
  Collection c{"identity", trunc, {}};
  for (int d = 1; d <= trunc; ++d)
    for (const auto& t : enumerate_trees(d, max_size)) {
      TOp op{tree_id(t), d, t, "", ""};
      if (d >= 2) op.src = op.tgt = tree_id(boundary(t));
      c.ops.push_back(std::move(op));
    }
  return c;
}

GlobSet op_globset(const Collection& a) {
  std::vector<std::vector<std::string>> ids(a.trunc + 1);
  std::vector<std::vector<int>> src(a.trunc + 1), tgt(a.trunc + 1);
  ids[0].push_back(trivial_op());
  std::vector<std::unordered_map<std::string, int>> pos(a.trunc + 1);
  pos[0][trivial_op()] = 0;
  for (int d = 1; d <= a.trunc; ++d)
    for (const auto& op : a.ops) {
      if (op.dim != d) continue;
      auto s = pos[d - 1].find(op_src(op)), t = pos[d - 1].find(op_tgt(op));
      if (s == pos[d - 1].end() || t == pos[d - 1].end())
        throw InputError("operation '" + op.id + "' has an unknown boundary");
      pos[d][op.id] = static_cast<int>(ids[d].size());
      ids[d].push_back(op.id);
      src[d].push_back(s->second);
      tgt[d].push_back(t->second);
    }
  return GlobSet(a.trunc, ids, src, tgt);
}

Operad identity_operad(int trunc, int max_size) {
  if (max_size < trunc + 1) throw InputError("size bound too small for the unit operations");
  Operad o;
  o.coll = identity_collection(trunc, max_size);
  o.support = max_size;
  o.units.push_back(trivial_op());
  for (int d = 1; d <= trunc; ++d) o.units.push_back(tree_id(globe_tree(d)));
  GlobSet ops = op_globset(o.coll);
  OpIndex ix = index_ops(o.coll);
  for (const auto& b : o.coll.ops)
    for (const auto& l : all_maps(glob_of_tree(b.arity), ops)) {
      OpLabel ol = to_op_label(ops, l);
      Tree r = mu_tree(b.arity, label_arities(ix, ol));
      if (r.size() <= max_size) o.subst.push_back({b.id, std::move(ol), tree_id(r)});
    }
  o.reindex();
  return o;
}

Operad operad_from_set_operad(const SetOperad& so) {
  Operad o;
  o.coll = Collection{so.name, 1, {}};
  auto id = [](const std::string& op, int n) { return op + "/" + std::to_string(n); };
  for (int n = 0; n <= so.max_arity; ++n)
    for (const auto& op : so.ops[n]) o.coll.ops.push_back({id(op, n), 1, path_tree(n), "", ""});
  o.units = {trivial_op(), id(so.unit, 1)};
  o.support = so.max_arity + 1;
  for (int n = 0; n <= so.max_arity; ++n)
    for (int outer = 0; outer < so.arity_count(n); ++outer) {
      std::vector<std::pair<int, int>> inner;
      std::function<void(int)> rec = [&](int total) {
        if (static_cast<int>(inner.size()) == n) {
          auto r = so.compose(outer, inner);
          if (!r) return;
          OpLabel l{std::vector<std::string>(n + 1, trivial_op()), {}};
          for (auto [m, i] : inner) l[1].push_back(id(so.ops[m][i], m));
          o.subst.push_back({id(so.ops[n][outer], n), std::move(l), id(so.ops[total][*r], total)});
          return;
        }
        for (int m = 0; total + m <= so.max_arity; ++m)
          for (int i = 0; i < so.arity_count(m); ++i) {
            inner.emplace_back(m, i);
            rec(total + m);
            inner.pop_back();
          }
      };
      rec(0);
    }
  o.reindex();
  return o;
}

std::vector<ACell> apply(const Collection& a, const GlobSet& x, int dim, int max_size) {
  if (dim < 0 || dim > std::min(a.trunc, x.trunc())) throw InputError("dimension out of range");
  std::vector<ACell> out;
  if (dim == 0) {
    for (int i = 0; i < x.count(0); ++i) out.push_back({trivial_op(), Label{{i}}});
    return out;
  }
  for (const TOp* op : a.of_dim(dim, max_size))
    for (auto& l : labellings(op->arity, x)) out.push_back({op->id, std::move(l)});
  return out;
}

ACell acell_src(const Collection& a, const ACell& c) {
  const TOp& op = need(a, c.op);
  return {op_src(op), cell_src(FreeCell{op.arity, c.label}).label};
}

ACell acell_tgt(const Collection& a, const ACell& c) {
  const TOp& op = need(a, c.op);
  return {op_tgt(op), cell_tgt(FreeCell{op.arity, c.label}).label};
}

int AMaterialization::find(const ACell& c) const {
  auto it = index.find(c);
  return it == index.end() ? -1 : it->second;
}

AMaterialization materialize_apply(const Collection& a, const GlobSet& x, int max_size) {
  const int n = std::min(a.trunc, x.trunc());
  AMaterialization m;
  std::vector<std::vector<std::string>> ids(n + 1);
  std::vector<std::vector<int>> src(n + 1), tgt(n + 1);
  m.cells.resize(n + 1);
  for (int d = 0; d <= n; ++d)
    for (auto& c : apply(a, x, d, max_size)) {
      ids[d].push_back(c.op + "@" + cell_text(x, FreeCell{arity_of(a, c.op), c.label}));
      if (d > 0) {
        src[d].push_back(m.index.at(acell_src(a, c)));
        tgt[d].push_back(m.index.at(acell_tgt(a, c)));
      }
      m.index.emplace(c, static_cast<int>(m.cells[d].size()));
      m.cells[d].push_back(std::move(c));
    }
  m.set = GlobSet(n, ids, src, tgt);
  return m;
}

MultiCell split_bar_cell(const Collection& a, const std::vector<GlobSet>& xs, const GlobSet& s,
                         const ACell& c) {
  const Tree q = arity_of(a, c.op);
  if (q.width() != static_cast<int>(xs.size())) throw InputError("cell does not run from 0 to k");
  auto off = kid_offsets(q);
  auto boff = block_offsets(xs, s.trunc() - 1);
  MultiCell m{c.op, {}};
  for (int i = 0; i < q.width(); ++i) {
    auto counts = cell_counts(q.kids[i]);
    Label l(counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j)
      for (int e = 0; e < counts[j]; ++e) l[j].push_back(c.label[j + 1][off[i][j] + e] - boff[i][j]);
    m.labels.push_back(std::move(l));
  }
  return m;
}

ACell join_bar_cell(const Collection& a, const std::vector<GlobSet>& xs, const GlobSet& s,
                    const MultiCell& c) {
  const Tree q = arity_of(a, c.op);
  if (q.width() != static_cast<int>(c.labels.size())) throw InputError("argument count mismatch");
  auto off = kid_offsets(q);
  auto boff = block_offsets(xs, s.trunc() - 1);
  auto counts = cell_counts(q);
  Label l(counts.size());
  for (std::size_t d = 0; d < counts.size(); ++d) l[d].assign(counts[d], 0);
  std::iota(l[0].begin(), l[0].end(), 0);
  for (int i = 0; i < q.width(); ++i)
    for (std::size_t j = 0; j < c.labels[i].size(); ++j)
      for (std::size_t e = 0; e < c.labels[i][j].size(); ++e)
        l[j + 1][off[i][j] + e] = c.labels[i][j][e] + boff[i][j];
  return {c.op, std::move(l)};
}

std::vector<MultiCell> bar(const Collection& a, const std::vector<GlobSet>& xs, int dim,
                           int max_size) {
  const int n = a.trunc - 1;
  if (dim < 0 || dim > n) throw InputError("dimension out of range");
  for (const auto& x : xs)
    if (x.trunc() != n) throw InputError("bar: argument truncation must be one below the operad's");
  const int k = static_cast<int>(xs.size());
  GlobSet s = seq(xs, n);
  std::vector<MultiCell> out;
  for (const auto& op : a.ops) {
    if (op.dim != dim + 1 || op.arity.width() != k) continue;
    bool fits = true;
    for (const auto& kid : op.arity.kids) fits &= kid.size() <= max_size;
    if (!fits) continue;
    for (auto& l : labellings(op.arity, s))
      if (l[0].front() == 0 && l[0].back() == k) out.push_back(split_bar_cell(a, xs, s, {op.id, std::move(l)}));
  }
  return out;
}

AHomDecomposition hom_decompose_a(const Collection& a, const GlobSet& x, const ACell& c) {
  const Tree q = arity_of(a, c.op);
  if (q.dim < 1) throw InputError("hom decomposition needs a cell of dimension >= 1");
  auto h = hom_decompose(x, c.label[0].front(), c.label[0].back(), FreeCell{q, c.label});
  AHomDecomposition d{h.m, h.seq, h.homs, MultiCell{c.op, {}}};
  for (auto& p : h.parts) d.cell.labels.push_back(std::move(p.label));
  return d;
}

ACell hom_reconstruct_a(const Collection& a, const GlobSet& x, const AHomDecomposition& d) {
  const Tree q = arity_of(a, d.cell.op);
  if (q.width() != d.m || static_cast<int>(d.cell.labels.size()) != d.m)
    throw InputError("decomposition does not match the operation's arity");
  HomDecomposition h{d.m, q.dim, d.seq, d.homs, {}};
  for (int i = 0; i < d.m; ++i) h.parts.push_back({q.kids[i], d.cell.labels[i]});
  return {d.cell.op, hom_reconstruct(x, h).label};
}

std::vector<MTOp> bar_operations(const Collection& a) {
  std::vector<MTOp> out;
  for (const auto& op : a.ops) out.push_back({op.id, op.dim - 1, op.arity.kids, op.src, op.tgt});
  return out;
}

Collection collection_from_mt_ops(const std::string& name, int mt_trunc, const std::vector<MTOp>& ops) {
  Collection c{name, mt_trunc + 1, {}};
  for (const auto& op : ops) c.ops.push_back({op.id, op.dim + 1, Tree(op.dim + 1, op.arity), op.src, op.tgt});
  return c;
}

Collection collection_from_multitensor(const MTOperad& e, int max_arity, int max_size) {
  std::vector<MTOp> ops;
  for (int d = 0; d <= e.trunc(); ++d)
    for (int k = 0; k <= max_arity; ++k)
      for (auto& op : e.ops(d, k, max_size)) ops.push_back(std::move(op));
  return collection_from_mt_ops(e.name(), e.trunc(), ops);
}

MTTable to_mt_operad(const Operad& a) {
  MTTable t{a.coll.name, a.coll.trunc - 1, bar_operations(a.coll), {}, {}};
  t.units.assign(a.units.begin() + std::min<std::size_t>(1, a.units.size()), a.units.end());
  for (const auto& s : a.subst) {
    const Tree q = arity_of(a.coll, s.outer);
    auto off = kid_offsets(q);
    MTSubst m{s.outer, {}, s.result};
    for (int i = 0; i < q.width(); ++i) {
      auto counts = cell_counts(q.kids[i]);
      OpLabel l(counts.size());
      for (std::size_t j = 0; j < counts.size(); ++j)
        for (int e = 0; e < counts[j]; ++e) l[j].push_back(s.labelling.at(j + 1).at(off[i][j] + e));
      m.inner.push_back(std::move(l));
    }
    t.subst.push_back(std::move(m));
  }
  return t;
}

Operad from_mt_operad(const MTTable& t, int support) {
  Operad a;
  a.coll = collection_from_mt_ops(t.name, t.trunc, t.ops);
  a.support = support;
  a.units.push_back(trivial_op());
  a.units.insert(a.units.end(), t.units.begin(), t.units.end());
  for (const auto& m : t.subst) {
    const Tree q = arity_of(a.coll, m.outer);
    if (static_cast<int>(m.inner.size()) != q.width()) throw InputError("substitution into '" + m.outer + "' has the wrong argument count");
    auto off = kid_offsets(q);
    auto counts = cell_counts(q);
    OpLabel l(counts.size());
    l[0].assign(counts[0], trivial_op());
    for (std::size_t d = 1; d < counts.size(); ++d) l[d].assign(counts[d], "");
    for (int i = 0; i < q.width(); ++i)
      for (std::size_t j = 0; j < m.inner[i].size(); ++j)
        for (std::size_t e = 0; e < m.inner[i][j].size(); ++e) l.at(j + 1).at(off[i][j] + e) = m.inner[i][j][e];
    a.subst.push_back({m.outer, std::move(l), m.result});
  }
  a.reindex();
  return a;
}

Report check_operad(const Operad& a, const OperadBounds& b) {
  Report r;
  r.suite = "operad";
  auto& coh = r.law("src-tgt-coherence");
  auto& ari = r.law("arity-boundary");
  auto& uni = r.law("units");
  auto& wf = r.law("subst-wellformed");
  auto& amu = r.law("subst-arity-mu");
  auto& sb = r.law("subst-boundary");
  auto& tot = r.law("totality");
  auto& ul = r.law("unit-left");
  auto& ur = r.law("unit-right");
  auto& as = r.law("associativity");

  OpIndex ix;
  for (const auto& op : a.coll.ops) {
    bool ok = op.id != trivial_op() && op.dim >= 1 && op.dim <= a.coll.trunc && op.arity.dim == op.dim;
    ok &= ix.emplace(op.id, &op).second;
    coh.record(ok, "malformed or duplicate operation '" + op.id + "'");
  }
  for (const auto& op : a.coll.ops) {
    if (op.dim == 1) {
      coh.record(op.src.empty() && op.tgt.empty(), op.id + " has boundary operations in dimension 1");
      continue;
    }
    auto s = ix.find(op.src), t = ix.find(op.tgt);
    bool ok = s != ix.end() && t != ix.end() && s->second->dim == op.dim - 1 && t->second->dim == op.dim - 1;
    if (ok && op.dim >= 3)
      ok = s->second->src == t->second->src && s->second->tgt == t->second->tgt;
    coh.record(ok, op.id + ": boundary operations are not globular");
    if (!ok) continue;
    Tree bd = boundary(op.arity);
    ari.record(s->second->arity == bd && t->second->arity == bd, op.id + ": boundary arities differ from the arity's boundary");
  }
  bool units_ok = static_cast<int>(a.units.size()) == a.coll.trunc + 1 && a.units[0] == trivial_op();
  uni.record(units_ok, "unit list has the wrong length");
  if (units_ok)
    for (int d = 1; d <= a.coll.trunc; ++d) {
      auto u = ix.find(a.units[d]);
      bool ok = u != ix.end() && u->second->dim == d && u->second->arity == globe_tree(d);
      if (ok && d >= 2) ok = u->second->src == a.units[d - 1] && u->second->tgt == a.units[d - 1];
      uni.record(ok, "unit in dimension " + std::to_string(d) + " is not a globe operation");
      units_ok &= ok;
    }
  if (coh.failed > 0) return r;
  GlobSet ops = op_globset(a.coll);

  auto arity = [&](const std::string& id) { return id == trivial_op() ? point_tree() : ix.at(id)->arity; };
  auto fits = [&](const std::string& id) { return arity(id).size() <= a.support; };

  for (const auto& s : a.subst) {
    auto o = ix.find(s.outer);
    auto res = ix.find(s.result);
    bool ok = o != ix.end() && res != ix.end() && res->second->dim == o->second->dim;
    std::optional<Label> l;
    if (ok) {
      auto counts = cell_counts(o->second->arity);
      ok = s.labelling.size() == counts.size();
      for (std::size_t d = 0; ok && d < counts.size(); ++d) ok = static_cast<int>(s.labelling[d].size()) == counts[d];
      if (ok) l = from_op_label(ops, s.labelling);
      ok = ok && l && is_map(glob_of_tree(o->second->arity), ops, *l);
    }
    wf.record(ok, "malformed substitution into '" + s.outer + "'");
    if (!ok) continue;
    const TOp& outer = *o->second;
    Tree expect = mu_tree(outer.arity, label_arities(ix, s.labelling));
    amu.record(res->second->arity == expect,
               s.outer + " with result " + s.result + ": arity " + to_text(res->second->arity) +
                   " but mu gives " + to_text(expect));
    if (outer.dim < 2) continue;
    const Tree q = outer.arity;
    for (int side = 0; side < 2; ++side) {
      Label along = side == 0 ? sigma_map(q) : tau_map(q);
      OpLabel bl = to_op_label(ops, compose(*l, along));
      auto got = a.compose(side == 0 ? outer.src : outer.tgt, bl);
      if (!got) {
        ++sb.skipped;
        continue;
      }
      const std::string& want = side == 0 ? res->second->src : res->second->tgt;
      sb.record(*got == want, s.outer + ": boundary of the composite is " + want + ", composite of the boundary is " + *got);
    }
  }

  long budget = b.max_instances;
  for (const auto& op : a.coll.ops) {
    if (!fits(op.id)) continue;
    for (const auto& l : all_maps(glob_of_tree(op.arity), ops)) {
      if (budget-- <= 0) break;
      OpLabel ol = to_op_label(ops, l);
      bool inner_fit = true;
      for (const auto& lv : ol)
        for (const auto& id : lv) inner_fit &= fits(id);
      if (!inner_fit) continue;
      if (mu_tree(op.arity, label_arities(ix, ol)).size() > a.support) continue;
      tot.record(a.compose(op.id, ol).has_value(), "missing composite into " + op.id);
    }
  }

  if (units_ok)
    for (const auto& op : a.coll.ops) {
      auto left = a.compose(a.units[op.dim], globe_labelling(ix, op));
      if (left) ul.record(*left == op.id, "unit then " + op.id + " gives " + *left);
      else ++ul.skipped;
      auto right = a.compose(op.id, unit_labelling(a, op.arity));
      if (right) ur.record(*right == op.id, op.id + " then units gives " + *right);
      else ++ur.skipped;
    }

  // (outer, L : glob(q) -> A(ops)): compose inner first, or outer first and
  // then the flattened labelling.
  AMaterialization aa = materialize_apply(a.coll, ops, a.support);
  long left = b.max_instances;
  for (const auto& op : a.coll.ops) {
    if (op.arity.size() > b.max_size) continue;
    GlobSet gq = glob_of_tree(op.arity);
    for (const auto& l : all_maps(gq, aa.set)) {
      if (left-- <= 0) break;
      OpLabel composed(l.size()), outer_ops(l.size());
      FreeOverFree flat{op.arity, std::vector<std::vector<FreeCell>>(l.size())};
      bool inside = true;
      for (std::size_t d = 0; inside && d < l.size(); ++d)
        for (int c : l[d]) {
          const ACell& cell = aa.cells[d][c];
          outer_ops[d].push_back(cell.op);
          flat.cells[d].push_back({arity(cell.op), cell.label});
          if (d == 0) {
            composed[d].push_back(trivial_op());
            continue;
          }
          auto v = a.compose(cell.op, to_op_label(ops, cell.label));
          if (!v) {
            inside = false;
            break;
          }
          composed[d].push_back(*v);
        }
      std::optional<std::string> one, two;
      if (inside) one = a.compose(op.id, composed);
      auto mid = a.compose(op.id, outer_ops);
      if (one && mid) {
        FreeCell m = mu(flat);
        if (m.tree == arity(*mid)) two = a.compose(*mid, to_op_label(ops, m.label));
      }
      if (!one || !two) {
        ++as.skipped;
        continue;
      }
      as.record(*one == *two, op.id + ": inner-first gives " + *one + ", outer-first gives " + *two);
    }
  }
  return r;
}

Report check_cartesian(const Collection& a, const GlobSet& x, const GlobSet& y, int max_size) {
  Report r;
  r.suite = "cartesian";
  auto& law = r.law("pullback-square");
  AMaterialization ax = materialize_apply(a, x, max_size), ay = materialize_apply(a, y, max_size);
  const int n = ax.set.trunc();
  for (const auto& g : all_maps(x, y)) {
    for (int d = 0; d <= n; ++d) {
      // Pairs (cell of AY, cell of TX) over the same cell of TY.
      std::map<FreeCell, long> over;
      for (const auto& c : ay.cells[d]) ++over[FreeCell{arity_of(a, c.op), c.label}];
      long pairs = 0;
      for (const auto& t : free_cells(x, d, max_size)) {
        auto it = over.find(apply_map(g, t));
        if (it != over.end()) pairs += it->second;
      }
      std::set<std::pair<int, FreeCell>> images;
      for (const auto& c : ax.cells[d]) {
        ACell moved{c.op, apply_map(g, FreeCell{arity_of(a, c.op), c.label}).label};
        images.insert({ay.find(moved), FreeCell{arity_of(a, c.op), c.label}});
      }
      law.record(static_cast<long>(images.size()) == pairs && images.size() == ax.cells[d].size(),
                 "dimension " + std::to_string(d) + ": " + std::to_string(ax.cells[d].size()) +
                     " cells of AX against " + std::to_string(pairs) + " pullback cells");
    }
  }
  return r;
}

}  // namespace globcat
