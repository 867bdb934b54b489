#include "globcat/json_io.hpp"

#include <fstream>
#include <sstream>

namespace globcat {

namespace {

// Runs a reader, turning library errors from the JSON layer into InputError.
template <class F>
auto guarded(const char* what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

std::string dkey(int d) { return std::to_string(d); }

int parse_int(const std::string& s) {
  std::size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw InputError("expected an integer key, got '" + s + "'");
  }
  if (used != s.size()) throw InputError("expected an integer key, got '" + s + "'");
  return v;
}

CellIx cell_in(const GlobSet& x, const std::string& id, int d) {
  CellIx c = x.at(id);
  if (c.dim != d) throw InputError("cell '" + id + "' has dimension " + std::to_string(c.dim) + ", expected " + std::to_string(d));
  return c;
}

Json label_body(const GlobSet& from, const GlobSet& to, const Label& f) {
  Json m = Json::object();
  for (int d = 0; d <= from.trunc(); ++d) {
    Json md = Json::object();
    for (int i = 0; i < from.count(d); ++i) md[from.id(d, i)] = to.id(d, f[d][i]);
    m[dkey(d)] = md;
  }
  return m;
}

Label label_from_body(const Json& m, const GlobSet& from, const GlobSet& to) {
  Label f(from.trunc() + 1);
  for (int d = 0; d <= from.trunc(); ++d) {
    f[d].assign(from.count(d), -1);
    if (from.count(d) == 0) continue;
    const Json& md = m.at(dkey(d));
    for (auto it = md.begin(); it != md.end(); ++it)
      f[d][cell_in(from, it.key(), d).idx] = cell_in(to, it.value().get<std::string>(), d).idx;
    for (int i = 0; i < from.count(d); ++i)
      if (f[d][i] < 0) throw InputError("map leaves '" + from.id(d, i) + "' unassigned");
  }
  check_map(from, to, f);
  return f;
}

Json op_label_json(const GlobSet& g, const OpLabel& l, int from_dim) {
  Json m = Json::object();
  for (int d = from_dim; d < static_cast<int>(l.size()); ++d)
    for (std::size_t i = 0; i < l[d].size(); ++i) m[g.id(d, static_cast<int>(i))] = l[d][i];
  return m;
}

OpLabel op_label_from_json(const Json& m, const GlobSet& g, int from_dim, const std::string& below) {
  OpLabel l(g.trunc() + 1);
  for (int d = 0; d <= g.trunc(); ++d) l[d].assign(g.count(d), d < from_dim ? below : std::string());
  for (auto it = m.begin(); it != m.end(); ++it) {
    CellIx c = g.at(it.key());
    if (c.dim < from_dim) continue;
    l[c.dim][c.idx] = it.value().get<std::string>();
  }
  for (int d = from_dim; d <= g.trunc(); ++d)
    for (int i = 0; i < g.count(d); ++i)
      if (l[d][i].empty()) throw InputError("labelling leaves '" + g.id(d, i) + "' unassigned");
  return l;
}

Json top_ops_json(const std::vector<TOp>& ops) {
  Json j = Json::object();
  for (const auto& o : ops) {
    Json e{{"id", o.id}, {"arity", to_json(o.arity)}};
    if (o.dim > 1) {
      e["src"] = o.src;
      e["tgt"] = o.tgt;
    }
    j[dkey(o.dim)].push_back(e);
  }
  return j;
}

std::vector<TOp> top_ops_from_json(const Json& j, int trunc) {
  std::vector<TOp> ops;
  for (int d = 1; d <= trunc; ++d) {
    if (!j.contains(dkey(d))) continue;
    for (const auto& e : j.at(dkey(d))) {
      TOp o{e.at("id").get<std::string>(), d, tree_from_json(e.at("arity")), "", ""};
      if (o.arity.dim != d) throw InputError("operation '" + o.id + "' has an arity of the wrong dimension");
      if (d > 1) {
        o.src = e.at("src").get<std::string>();
        o.tgt = e.at("tgt").get<std::string>();
      }
      ops.push_back(std::move(o));
    }
  }
  for (auto it = j.begin(); it != j.end(); ++it) {
    int d = parse_int(it.key());
    if (d < 1 || d > trunc) throw InputError("operations listed in dimension " + it.key());
  }
  return ops;
}

Json report_law(const LawResult& l) {
  return Json{{"law", l.law}, {"checked", l.checked}, {"failed", l.failed}, {"skipped", l.skipped},
              {"counterexamples", l.counterexamples}};
}

Json bounds_json(const ECatBounds& b) { return Json{{"max_len", b.max_len}, {"max_size", b.max_size}}; }
ECatBounds bounds_from_json(const Json& j) {
  return ECatBounds{j.at("max_len").get<int>(), j.at("max_size").get<int>()};
}

std::vector<std::string> seq_ids(const GlobSet& x, const std::vector<int>& seq) {
  std::vector<std::string> out;
  for (int i : seq) out.push_back(x.id(0, i));
  return out;
}

std::vector<int> seq_from_ids(const GlobSet& x, const Json& j) {
  std::vector<int> out;
  for (const auto& s : j) out.push_back(cell_in(x, s.get<std::string>(), 0).idx);
  return out;
}

}  // namespace

Json parse_json(const std::string& text) {
  return guarded("invalid JSON", [&] { return Json::parse(text); });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json to_json(const GlobSet& x) {
  Json cells = Json::object(), src = Json::object(), tgt = Json::object();
  for (int d = 0; d <= x.trunc(); ++d) {
    cells[dkey(d)] = x.ids(d);
    if (d == 0) continue;
    for (int i = 0; i < x.count(d); ++i) {
      src[x.id(d, i)] = x.id(d - 1, x.src(d, i));
      tgt[x.id(d, i)] = x.id(d - 1, x.tgt(d, i));
    }
  }
  return Json{{"trunc", x.trunc()}, {"cells", cells}, {"src", src}, {"tgt", tgt}};
}

GlobSet globset_from_json(const Json& j) {
  return guarded("globular set", [&] {
    const int n = j.at("trunc").get<int>();
    if (n < 0) throw InputError("negative truncation");
    const Json& cells = j.at("cells");
    for (auto it = cells.begin(); it != cells.end(); ++it) {
      int d = parse_int(it.key());
      if (d < 0 || d > n) throw InputError("cells listed in dimension " + it.key());
    }
    GlobSetBuilder b(n);
    const Json empty = Json::object();
    const Json& src = j.contains("src") ? j.at("src") : empty;
    const Json& tgt = j.contains("tgt") ? j.at("tgt") : empty;
    for (int d = 0; d <= n; ++d) {
      if (!cells.contains(dkey(d))) continue;
      for (const auto& c : cells.at(dkey(d))) {
        const auto id = c.get<std::string>();
        if (d == 0)
          b.cell(id);
        else
          b.cell(id, src.at(id).get<std::string>(), tgt.at(id).get<std::string>());
      }
    }
    GlobSet x = b.build();
    for (int d = 0; d <= n; ++d)
      for (int i = 0; i < x.count(d); ++i)
        if (x.at(x.id(d, i)).dim != d) throw InputError("cell '" + x.id(d, i) + "' listed twice");
    return x;
  });
}

Json map_to_json(const GlobSet& from, const GlobSet& to, const Label& f, const std::string& from_ref,
                 const std::string& to_ref) {
  return Json{{"from", from_ref}, {"to", to_ref}, {"map", label_body(from, to, f)}};
}

Label map_from_json(const Json& j, const GlobSet& from, const GlobSet& to) {
  return guarded("globular map", [&] { return label_from_body(j.at("map"), from, to); });
}

Json to_json(const Tree& t) {
  Json j{{"dim", t.dim}};
  if (t.dim == 0) return j;
  Json kids = Json::array();
  for (const auto& k : t.kids) kids.push_back(to_json(k));
  j["kids"] = kids;
  return j;
}

Tree tree_from_json(const Json& j) {
  return guarded("tree", [&] {
    const int d = j.at("dim").get<int>();
    if (d < 0) throw InputError("negative tree dimension");
    if (d == 0) {
      if (j.contains("kids")) throw InputError("a dimension-0 tree has no kids");
      return Tree();
    }
    std::vector<Tree> kids;
    for (const auto& k : j.at("kids")) kids.push_back(tree_from_json(k));
    return Tree(d, std::move(kids));
  });
}

Json to_json(const GlobSet& x, const FreeCell& c) {
  return Json{{"tree", to_json(c.tree)}, {"label", map_to_json(glob_of_tree(c.tree), x, c.label, "glob", "X")}};
}

FreeCell freecell_from_json(const Json& j, const GlobSet& x) {
  return guarded("free cell", [&] {
    Tree t = tree_from_json(j.at("tree"));
    return FreeCell{t, map_from_json(j.at("label"), glob_of_tree(t), x)};
  });
}

Json to_json(const GlobSet& x, const FreeOverFree& f) {
  GlobSet g = glob_of_tree(f.tree);
  Json cells = Json::object();
  for (int d = 0; d <= g.trunc(); ++d)
    for (int i = 0; i < g.count(d); ++i) cells[g.id(d, i)] = to_json(x, f.cells[d][i]);
  return Json{{"tree", to_json(f.tree)}, {"cells", cells}};
}

FreeOverFree free_over_free_from_json(const Json& j, const GlobSet& x) {
  return guarded("map into free cells", [&] {
    FreeOverFree f{tree_from_json(j.at("tree")), {}};
    GlobSet g = glob_of_tree(f.tree);
    const Json& cells = j.at("cells");
    for (int d = 0; d <= g.trunc(); ++d) {
      f.cells.emplace_back();
      for (int i = 0; i < g.count(d); ++i) f.cells[d].push_back(freecell_from_json(cells.at(g.id(d, i)), x));
    }
    if (!is_free_over_free(f, x)) throw InputError("cells do not form a map glob(tree) -> TX");
    return f;
  });
}

Json to_json(const CompositionTables& ct) {
  const GlobSet& x = ct.cells;
  Json ids = Json::object(), comp = Json::object();
  for (std::size_t d = 0; d < ct.identity.size(); ++d)
    for (std::size_t i = 0; i < ct.identity[d].size(); ++i)
      ids[x.id(static_cast<int>(d), static_cast<int>(i))] = x.id(static_cast<int>(d) + 1, ct.identity[d][i]);
  for (const auto& [key, v] : ct.comp) {
    const auto [d, k, a, b] = key;
    comp[std::to_string(d) + "," + std::to_string(k)].push_back({x.id(d, a), x.id(d, b), x.id(d, v)});
  }
  return Json{{"cells", to_json(x)}, {"identities", ids}, {"composites", comp}};
}

CompositionTables tables_from_json(const Json& j) {
  return guarded("composition tables", [&] {
    CompositionTables ct;
    ct.cells = globset_from_json(j.at("cells"));
    const GlobSet& x = ct.cells;
    const int n = x.trunc();
    ct.identity.resize(n);
    for (int d = 0; d < n; ++d) ct.identity[d].assign(x.count(d), -1);
    const Json& ids = j.at("identities");
    for (auto it = ids.begin(); it != ids.end(); ++it) {
      CellIx c = x.at(it.key());
      if (c.dim >= n) throw InputError("identity on a top cell '" + it.key() + "'");
      ct.identity[c.dim][c.idx] = cell_in(x, it.value().get<std::string>(), c.dim + 1).idx;
    }
    for (int d = 0; d < n; ++d)
      for (int i = 0; i < x.count(d); ++i)
        if (ct.identity[d][i] < 0) throw InputError("no identity on '" + x.id(d, i) + "'");
    const Json& comp = j.at("composites");
    for (auto it = comp.begin(); it != comp.end(); ++it) {
      const auto& key = it.key();
      auto comma = key.find(',');
      if (comma == std::string::npos) throw InputError("composite key '" + key + "' is not 'd,k'");
      const int d = parse_int(key.substr(0, comma)), k = parse_int(key.substr(comma + 1));
      if (d < 1 || d > n || k < 0 || k >= d) throw InputError("composite key '" + key + "' out of range");
      for (const auto& t : it.value()) {
        if (t.size() != 3) throw InputError("composite entries are [a, b, composite]");
        int a = cell_in(x, t[0].get<std::string>(), d).idx, b = cell_in(x, t[1].get<std::string>(), d).idx;
        ct.comp[{d, k, a, b}] = cell_in(x, t[2].get<std::string>(), d).idx;
      }
    }
    return ct;
  });
}

Json to_json(const SetOperad& o) {
  Json ops = Json::object(), subst = Json::object();
  for (int n = 0; n <= o.max_arity; ++n) ops[dkey(n)] = o.ops[n];
  auto check_id = [](const std::string& s) {
    if (s.find(',') != std::string::npos) throw InputError("operation id '" + s + "' contains a comma");
  };
  for (const auto& [key, v] : o.subst) {
    const int k = key[0];
    std::string shape = "(" + std::to_string(k) + ";", tuple = o.ops[k][key[1]];
    check_id(tuple);
    int total = 0;
    for (int i = 0; i < k; ++i) {
      const int n = key[2 + 2 * i], idx = key[3 + 2 * i];
      shape += (i ? "," : "") + std::to_string(n);
      check_id(o.ops[n][idx]);
      tuple += "," + o.ops[n][idx];
      total += n;
    }
    subst[shape + ")"][tuple] = o.ops[total][v];
  }
  return Json{{"name", o.name}, {"ops", ops}, {"unit", o.unit}, {"subst", subst}};
}

SetOperad set_operad_from_json(const Json& j) {
  return guarded("set operad", [&] {
    SetOperad o;
    o.name = j.value("name", std::string("operad"));
    const Json& ops = j.at("ops");
    int max_n = -1;
    for (auto it = ops.begin(); it != ops.end(); ++it) max_n = std::max(max_n, parse_int(it.key()));
    if (max_n < 1) throw InputError("a set operad needs operations up to arity at least 1");
    o.max_arity = max_n;
    o.ops.resize(max_n + 1);
    for (auto it = ops.begin(); it != ops.end(); ++it) {
      int n = parse_int(it.key());
      if (n < 0) throw InputError("negative arity");
      o.ops[n] = it.value().get<std::vector<std::string>>();
    }
    o.unit = j.at("unit").get<std::string>();
    if (o.index(1, o.unit) < 0) throw InputError("unit '" + o.unit + "' is not a unary operation");
    auto split = [](const std::string& s) {
      std::vector<std::string> out;
      std::stringstream ss(s);
      std::string part;
      while (std::getline(ss, part, ',')) out.push_back(part);
      return out;
    };
    auto find = [&](int n, const std::string& id) {
      int i = o.index(n, id);
      if (i < 0) throw InputError("no operation '" + id + "' of arity " + std::to_string(n));
      return i;
    };
    const Json& subst = j.at("subst");
    for (auto it = subst.begin(); it != subst.end(); ++it) {
      const std::string& shape = it.key();
      if (shape.size() < 3 || shape.front() != '(' || shape.back() != ')' || shape.find(';') == std::string::npos)
        throw InputError("substitution key '" + shape + "' is not (k;n1,..,nk)");
      const auto semi = shape.find(';');
      const int k = parse_int(shape.substr(1, semi - 1));
      std::vector<int> ns;
      for (const auto& s : split(shape.substr(semi + 1, shape.size() - semi - 2))) ns.push_back(parse_int(s));
      if (static_cast<int>(ns.size()) != k) throw InputError("substitution key '" + shape + "' has the wrong length");
      int total = 0;
      for (int n : ns) total += n;
      if (k > o.max_arity || total > o.max_arity) throw InputError("substitution key '" + shape + "' beyond the stored arities");
      for (auto jt = it.value().begin(); jt != it.value().end(); ++jt) {
        auto parts = split(jt.key());
        if (static_cast<int>(parts.size()) != k + 1) throw InputError("tuple '" + jt.key() + "' does not match '" + shape + "'");
        std::vector<int> key{k, find(k, parts[0])};
        for (int i = 0; i < k; ++i) {
          key.push_back(ns[i]);
          key.push_back(find(ns[i], parts[i + 1]));
        }
        o.subst[key] = find(total, jt.value().get<std::string>());
      }
    }
    return o;
  });
}

Json to_json(const Collection& c) {
  return Json{{"name", c.name}, {"trunc", c.trunc}, {"ops", top_ops_json(c.ops)}};
}

Collection collection_from_json(const Json& j) {
  return guarded("collection", [&] {
    Collection c;
    c.name = j.value("name", std::string("collection"));
    c.trunc = j.at("trunc").get<int>();
    if (c.trunc < 1) throw InputError("collections have truncation >= 1");
    c.ops = top_ops_from_json(j.at("ops"), c.trunc);
    return c;
  });
}

Json to_json(const Operad& a) {
  Json j = to_json(a.coll);
  Json units = Json::object();
  for (std::size_t d = 1; d < a.units.size(); ++d) units[dkey(static_cast<int>(d))] = a.units[d];
  Json subst = Json::array();
  for (const auto& s : a.subst)
    subst.push_back({{"outer", s.outer},
                     {"labelling", op_label_json(glob_of_tree(arity_of(a.coll, s.outer)), s.labelling, 1)},
                     {"result", s.result}});
  j["units"] = units;
  j["support"] = a.support;
  j["subst"] = subst;
  return j;
}

Operad operad_from_json(const Json& j) {
  return guarded("operad", [&] {
    Operad a;
    a.coll = collection_from_json(j);
    a.units.assign(a.coll.trunc + 1, trivial_op());
    const Json& units = j.at("units");
    for (int d = 1; d <= a.coll.trunc; ++d) {
      a.units[d] = units.at(dkey(d)).get<std::string>();
      const TOp* u = a.coll.find(a.units[d]);
      if (!u || u->dim != d) throw InputError("unit '" + a.units[d] + "' is not an operation of dimension " + dkey(d));
    }
    a.support = j.at("support").get<int>();
    for (const auto& s : j.at("subst")) {
      TSubst t;
      t.outer = s.at("outer").get<std::string>();
      if (!a.coll.find(t.outer)) throw InputError("unknown operation '" + t.outer + "'");
      t.labelling = op_label_from_json(s.at("labelling"), glob_of_tree(arity_of(a.coll, t.outer)), 1, trivial_op());
      t.result = s.at("result").get<std::string>();
      a.subst.push_back(std::move(t));
    }
    a.reindex();
    return a;
  });
}

Json to_json(const MTTable& t) {
  Json ops = Json::object(), units = Json::object(), subst = Json::array();
  std::map<std::string, const MTOp*> by_id;
  for (const auto& o : t.ops) {
    by_id[o.id] = &o;
    Json ar = Json::array();
    for (const auto& q : o.arity) ar.push_back(to_json(q));
    Json e{{"id", o.id}, {"arity", ar}};
    if (o.dim > 0) {
      e["src"] = o.src;
      e["tgt"] = o.tgt;
    }
    ops[dkey(o.dim)].push_back(e);
  }
  for (std::size_t d = 0; d < t.units.size(); ++d) units[dkey(static_cast<int>(d))] = t.units[d];
  for (const auto& s : t.subst) {
    auto it = by_id.find(s.outer);
    if (it == by_id.end()) throw InputError("substitution over unknown operation '" + s.outer + "'");
    Json inner = Json::array();
    for (std::size_t i = 0; i < s.inner.size(); ++i)
      inner.push_back(op_label_json(glob_of_tree(it->second->arity.at(i)), s.inner[i], 0));
    subst.push_back({{"outer", s.outer}, {"inner", inner}, {"result", s.result}});
  }
  return Json{{"name", t.name}, {"trunc", t.trunc}, {"ops", ops}, {"units", units}, {"subst", subst}};
}

MTTable mt_table_from_json(const Json& j) {
  return guarded("multitensor table", [&] {
    MTTable t;
    t.name = j.value("name", std::string("table"));
    t.trunc = j.at("trunc").get<int>();
    if (t.trunc < 0) throw InputError("negative truncation");
    const Json& ops = j.at("ops");
    for (auto it = ops.begin(); it != ops.end(); ++it) {
      int d = parse_int(it.key());
      if (d < 0 || d > t.trunc) throw InputError("operations listed in dimension " + it.key());
    }
    std::map<std::string, const MTOp*> by_id;
    for (int d = 0; d <= t.trunc; ++d) {
      if (!ops.contains(dkey(d))) continue;
      for (const auto& e : ops.at(dkey(d))) {
        MTOp o{e.at("id").get<std::string>(), d, {}, "", ""};
        for (const auto& q : e.at("arity")) {
          o.arity.push_back(tree_from_json(q));
          if (o.arity.back().dim != d) throw InputError("operation '" + o.id + "' has an arity of the wrong dimension");
        }
        if (d > 0) {
          o.src = e.at("src").get<std::string>();
          o.tgt = e.at("tgt").get<std::string>();
        }
        t.ops.push_back(std::move(o));
      }
    }
    for (const auto& o : t.ops)
      if (!by_id.emplace(o.id, &o).second) throw InputError("operation '" + o.id + "' listed twice");
    if (j.contains("units") && !j.at("units").empty()) {
      const Json& units = j.at("units");
      for (int d = 0; d <= t.trunc; ++d) t.units.push_back(units.at(dkey(d)).get<std::string>());
    }
    if (j.contains("subst"))
      for (const auto& s : j.at("subst")) {
        MTSubst m;
        m.outer = s.at("outer").get<std::string>();
        auto it = by_id.find(m.outer);
        if (it == by_id.end()) throw InputError("unknown operation '" + m.outer + "'");
        const Json& inner = s.at("inner");
        if (inner.size() != it->second->arity.size()) throw InputError("substitution into '" + m.outer + "' has the wrong arity");
        for (std::size_t i = 0; i < inner.size(); ++i)
          m.inner.push_back(op_label_from_json(inner[i], glob_of_tree(it->second->arity[i]), 0, ""));
        m.result = s.at("result").get<std::string>();
        t.subst.push_back(std::move(m));
      }
    return t;
  });
}

Json multitensor_to_json(const MTOperad& e, int max_arity, int max_size) {
  if (e.name() == "tcross") return Json{{"kind", "tcross"}, {"trunc", e.trunc()}};
  Json j = to_json(tabulate(e, max_arity, max_size));
  j["kind"] = "table";
  return j;
}

MTOperadPtr multitensor_from_json(const Json& j) {
  return guarded("multitensor", [&] {
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "tcross") {
      int n = j.at("trunc").get<int>();
      if (n < 0) throw InputError("negative truncation");
      return tcross(n);
    }
    if (kind == "table") return table_operad(mt_table_from_json(j));
    throw InputError("unknown multitensor kind '" + kind + "'");
  });
}

Json to_json(const ECat& c) {
  const GlobSet& x = c.carrier;
  Json kappa = Json::array();
  for (const auto& [seq, table] : c.kappa) {
    auto hs = seq_homs(x, seq);
    GlobSet target = hom(x, seq.front(), seq.back());
    Json cells = Json::array();
    for (const auto& [m, v] : table) {
      auto op = c.e->find(m.op);
      if (!op) throw InputError("unknown operation '" + m.op + "'");
      Json labels = Json::array();
      for (std::size_t i = 0; i < m.labels.size(); ++i)
        labels.push_back(label_body(glob_of_tree(op->arity[i]), hs[i], m.labels[i]));
      cells.push_back({{"op", m.op}, {"labels", labels}, {"value", target.id(op->dim, v)}});
    }
    kappa.push_back({{"seq", seq_ids(x, seq)}, {"cells", cells}});
  }
  return Json{{"multitensor", multitensor_to_json(*c.e, c.bounds.max_len, c.bounds.max_size)},
              {"bounds", bounds_json(c.bounds)},
              {"objects", x.ids(0)},
              {"carrier", to_json(x)},
              {"kappa", kappa}};
}

ECat ecat_from_json(const Json& j) {
  return guarded("enriched category", [&] {
    ECat c{multitensor_from_json(j.at("multitensor")), globset_from_json(j.at("carrier")),
           bounds_from_json(j.at("bounds")), {}};
    if (c.e->trunc() != c.carrier.trunc() - 1) throw InputError("carrier truncation must be one above the multitensor's");
    for (const auto& entry : j.at("kappa")) {
      auto seq = seq_from_ids(c.carrier, entry.at("seq"));
      if (seq.empty()) throw InputError("empty object sequence");
      auto hs = seq_homs(c.carrier, seq);
      GlobSet target = hom(c.carrier, seq.front(), seq.back());
      auto& table = c.kappa[seq];
      for (const auto& e : entry.at("cells")) {
        MultiCell m{e.at("op").get<std::string>(), {}};
        auto op = c.e->find(m.op);
        if (!op) throw InputError("unknown operation '" + m.op + "'");
        const Json& labels = e.at("labels");
        if (labels.size() != hs.size() || op->arity.size() != hs.size())
          throw InputError("operation '" + m.op + "' does not match the object sequence");
        for (std::size_t i = 0; i < hs.size(); ++i)
          m.labels.push_back(label_from_body(labels[i], glob_of_tree(op->arity[i]), hs[i]));
        table[m] = cell_in(target, e.at("value").get<std::string>(), op->dim).idx;
      }
    }
    return c;
  });
}

Json to_json(const MTOperad& view, const AlgebraTable& a, const ECatBounds& b) {
  Json act = Json::array();
  for (const auto& [cell, v] : a.act) {
    auto op = view.find(cell.op);
    if (!op) throw InputError("unknown operation '" + cell.op + "'");
    Tree q(op->dim + 1, op->arity);
    act.push_back({{"op", cell.op}, {"label", label_body(glob_of_tree(q), a.carrier, cell.label)},
                   {"value", a.carrier.id(q.dim, v)}});
  }
  return Json{{"view", multitensor_to_json(view, b.max_len, b.max_size)}, {"bounds", bounds_json(b)},
              {"carrier", to_json(a.carrier)}, {"act", act}};
}

ViewedAlgebra algebra_from_json(const Json& j) {
  return guarded("algebra", [&] {
    ViewedAlgebra r{multitensor_from_json(j.at("view")), bounds_from_json(j.at("bounds")), {}};
    r.alg.carrier = globset_from_json(j.at("carrier"));
    for (const auto& e : j.at("act")) {
      ACell c{e.at("op").get<std::string>(), {}};
      auto op = r.view->find(c.op);
      if (!op) throw InputError("unknown operation '" + c.op + "'");
      Tree q(op->dim + 1, op->arity);
      c.label = label_from_body(e.at("label"), glob_of_tree(q), r.alg.carrier);
      r.alg.act[c] = cell_in(r.alg.carrier, e.at("value").get<std::string>(), q.dim).idx;
    }
    return r;
  });
}

Json to_json(const AlgCat& d) {
  const GlobSet& x = d.carrier;
  Json homs = Json::array(), comp = Json::array();
  for (const auto& [ab, alg] : d.hom_alg) {
    GlobSet h = hom(x, ab.first, ab.second);
    Json act = Json::array();
    for (const auto& [cell, v] : alg) act.push_back({{"cell", to_json(h, cell)}, {"value", h.id(cell.dim(), v)}});
    homs.push_back({{"from", x.id(0, ab.first)}, {"to", x.id(0, ab.second)}, {"act", act}});
  }
  for (const auto& [seq, table] : d.comp) {
    auto hs = seq_homs(x, seq);
    GlobSet target = hom(x, seq.front(), seq.back());
    Json entries = Json::array();
    for (const auto& [key, v] : table) {
      const int dd = key[0];
      std::vector<std::string> cells;
      for (std::size_t i = 1; i < key.size(); ++i) cells.push_back(hs[i - 1].id(dd, key[i]));
      entries.push_back({{"dim", dd}, {"cells", cells}, {"value", target.id(dd, v)}});
    }
    comp.push_back({{"seq", seq_ids(x, seq)}, {"entries", entries}});
  }
  return Json{{"bounds", bounds_json(d.bounds)}, {"carrier", to_json(x)}, {"hom_algebras", homs}, {"composition", comp}};
}

AlgCat algcat_from_json(const Json& j) {
  return guarded("algebra-enriched category", [&] {
    AlgCat d{globset_from_json(j.at("carrier")), bounds_from_json(j.at("bounds")), {}, {}};
    const GlobSet& x = d.carrier;
    for (const auto& e : j.at("hom_algebras")) {
      int a = cell_in(x, e.at("from").get<std::string>(), 0).idx, b = cell_in(x, e.at("to").get<std::string>(), 0).idx;
      GlobSet h = hom(x, a, b);
      auto& alg = d.hom_alg[{a, b}];
      for (const auto& p : e.at("act")) {
        FreeCell c = freecell_from_json(p.at("cell"), h);
        alg[c] = cell_in(h, p.at("value").get<std::string>(), c.dim()).idx;
      }
    }
    for (const auto& e : j.at("composition")) {
      auto seq = seq_from_ids(x, e.at("seq"));
      if (seq.empty()) throw InputError("empty object sequence");
      auto hs = seq_homs(x, seq);
      GlobSet target = hom(x, seq.front(), seq.back());
      auto& table = d.comp[seq];
      for (const auto& p : e.at("entries")) {
        const int dd = p.at("dim").get<int>();
        std::vector<int> key{dd};
        const Json& cells = p.at("cells");
        if (cells.size() != hs.size()) throw InputError("composition entry does not match the object sequence");
        for (std::size_t i = 0; i < hs.size(); ++i) key.push_back(cell_in(hs[i], cells[i].get<std::string>(), dd).idx);
        table[key] = cell_in(target, p.at("value").get<std::string>(), dd).idx;
      }
    }
    return d;
  });
}

Json to_json(const Report& r) {
  Json laws = Json::array();
  for (const auto& l : r.laws) laws.push_back(report_law(l));
  return Json{{"suite", r.suite}, {"ok", r.ok()}, {"failures", r.failures()}, {"laws", laws}};
}

}  // namespace globcat
