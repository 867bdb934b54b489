#include "globcat/setmt.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace globcat {

std::string to_string(const Val& v) {
  if (v.kids.empty()) return v.head;
  std::string s = v.head + "<";
  for (std::size_t i = 0; i < v.kids.size(); ++i) {
    if (i) s += ",";
    s += to_string(v.kids[i]);
  }
  return s + ">";
}

Val leaf(const std::string& s) { return Val{s, {}}; }

int SetOperad::index(int n, const std::string& op) const {
  if (n < 0 || n > max_arity) return -1;
  auto it = std::find(ops[n].begin(), ops[n].end(), op);
  return it == ops[n].end() ? -1 : static_cast<int>(it - ops[n].begin());
}

std::optional<int> SetOperad::compose(int outer,
                                      const std::vector<std::pair<int, int>>& inner) const {
  const int k = static_cast<int>(inner.size());
  int total = 0;
  std::vector<int> key{k, outer};
  for (auto [n, i] : inner) {
    total += n;
    key.push_back(n);
    key.push_back(i);
  }
  if (k > max_arity || total > max_arity) return std::nullopt;
  auto it = subst.find(key);
  if (it == subst.end()) throw InputError("operad '" + name + "' has no substitution entry");
  return it->second;
}

SetOperad make_set_operad(std::string name, int max_arity,
                          std::vector<std::vector<std::string>> ops, std::string unit,
                          const ComposeFn& fn) {
  SetOperad o;
  o.name = std::move(name);
  o.max_arity = max_arity;
  o.ops = std::move(ops);
  o.ops.resize(max_arity + 1);
  o.unit = std::move(unit);
  if (max_arity < 1 || o.index(1, o.unit) < 0) throw InputError("operad unit must be a unary op");
  for (int k = 0; k <= max_arity; ++k)
    for (int x = 0; x < o.arity_count(k); ++x) {
      std::vector<std::pair<int, int>> inner;
      std::function<void(int, int)> go = [&](int i, int used) {
        if (i == k) {
          std::vector<int> key{k, x};
          for (auto [n, j] : inner) {
            key.push_back(n);
            key.push_back(j);
          }
          o.subst[key] = fn(k, x, inner);
          return;
        }
        for (int n = 0; used + n <= max_arity; ++n)
          for (int j = 0; j < o.arity_count(n); ++j) {
            inner.push_back({n, j});
            go(i + 1, used + n);
            inner.pop_back();
          }
      };
      go(0, 0);
    }
  return o;
}

SetOperad terminal_operad(int max_arity, bool nullary) {
  std::vector<std::vector<std::string>> ops(max_arity + 1);
  for (int n = nullary ? 0 : 1; n <= max_arity; ++n) ops[n] = {"t"};
  return make_set_operad(nullary ? "terminal" : "positive", max_arity, ops, "t",
                         [](int, int, const auto&) { return 0; });
}

SetOperad unit_operad(int max_arity) {
  std::vector<std::vector<std::string>> ops(max_arity + 1);
  ops[1] = {"u"};
  return make_set_operad("unit", max_arity, ops, "u", [](int, int, const auto&) { return 0; });
}

SetOperad parity_operad(int max_arity) {
  std::vector<std::vector<std::string>> ops(max_arity + 1, std::vector<std::string>{"0", "1"});
  return make_set_operad("parity", max_arity, ops, "0", [](int, int outer, const auto& inner) {
    int s = outer;
    for (auto [n, j] : inner) s += j;
    return s % 2;
  });
}

Report check_set_operad(const SetOperad& o) {
  Report r;
  r.suite = "set-operad";
  auto& lu = r.law("left-unit");
  auto& ru = r.law("right-unit");
  auto& as = r.law("associativity");
  const int u = o.index(1, o.unit);
  for (int n = 0; n <= o.max_arity; ++n)
    for (int x = 0; x < o.arity_count(n); ++x) {
      std::string w = o.ops[n][x] + "/" + std::to_string(n);
      lu.record(o.compose(u, {{n, x}}) == x, w);
      std::vector<std::pair<int, int>> units(n, {1, u});
      ru.record(o.compose(x, units) == x, w);
    }
  // x in E_k, y_i in E_{n_i}, z_ij in E_{m_ij}, sums bounded by max_arity.
  const int cap = o.max_arity;
  for (int k = 0; k <= cap; ++k)
    for (int x = 0; x < o.arity_count(k); ++x) {
      std::vector<std::pair<int, int>> ys;
      std::function<void(int, int)> pick_y = [&](int i, int sum_n) {
        if (i == k) {
          // Flatten the inner positions and choose z for each.
          std::vector<std::pair<int, int>> zs;
          std::function<void(int, int)> pick_z = [&](int j, int sum_m) {
            if (j == sum_n) {
              int xy = *o.compose(x, ys);
              auto lhs = o.compose(xy, zs);
              std::vector<std::pair<int, int>> inner;
              int pos = 0;
              for (auto [n, y] : ys) {
                std::vector<std::pair<int, int>> part(zs.begin() + pos, zs.begin() + pos + n);
                int m = 0;
                for (auto [mm, z] : part) m += mm;
                inner.push_back({m, *o.compose(y, part)});
                pos += n;
              }
              auto rhs = o.compose(x, inner);
              as.record(lhs == rhs, o.ops[k][x]);
              return;
            }
            for (int m = 0; sum_m + m <= cap; ++m)
              for (int z = 0; z < o.arity_count(m); ++z) {
                zs.push_back({m, z});
                pick_z(j + 1, sum_m + m);
                zs.pop_back();
              }
          };
          pick_z(0, 0);
          return;
        }
        for (int n = 0; sum_n + n <= cap; ++n)
          for (int y = 0; y < o.arity_count(n); ++y) {
            ys.push_back({n, y});
            pick_y(i + 1, sum_n + n);
            ys.pop_back();
          }
      };
      pick_y(0, 0);
    }
  return r;
}

SetMTPtr mt_unit() { return std::make_shared<const SetMT>(); }

SetMTPtr mt_operad(std::shared_ptr<const SetOperad> o) {
  SetMT e;
  e.kind = SetMT::Kind::operad;
  e.op = std::move(o);
  return std::make_shared<const SetMT>(std::move(e));
}

SetMTPtr mt_product(SetMTPtr a, SetMTPtr b) {
  SetMT e;
  e.kind = SetMT::Kind::product;
  e.left = std::move(a);
  e.right = std::move(b);
  return std::make_shared<const SetMT>(std::move(e));
}

std::string describe(const SetMT& e) {
  switch (e.kind) {
    case SetMT::Kind::unit: return "I";
    case SetMT::Kind::operad: return e.op->name;
    case SetMT::Kind::product: return "(" + describe(*e.left) + " o " + describe(*e.right) + ")";
  }
  return "?";
}

namespace {

void append_int(std::string& s, int v) {
  char buf[12];
  int n = 0;
  do {
    buf[n++] = static_cast<char>('0' + v % 10);
    v /= 10;
  } while (v > 0);
  while (n > 0) s += buf[--n];
}

std::string tag_of(const int* ns, std::size_t count) {
  std::string s = "c(";
  for (std::size_t i = 0; i < count; ++i) {
    if (i) s += ',';
    append_int(s, ns[i]);
  }
  s += ')';
  return s;
}

void parse_tag(const std::string& tag, std::vector<int>& out) {
  out.clear();
  if (tag.size() < 3 || tag.compare(0, 2, "c(") != 0 || tag.back() != ')')
    throw InputError("not a summand tag: " + tag);
  const std::size_t end = tag.size() - 1;
  std::size_t i = 2;
  while (i < end) {
    int v = 0;
    std::size_t start = i;
    for (; i < end && tag[i] != ','; ++i) {
      if (tag[i] < '0' || tag[i] > '9') throw InputError("not a summand tag: " + tag);
      v = v * 10 + (tag[i] - '0');
    }
    if (i == start) throw InputError("not a summand tag: " + tag);
    out.push_back(v);
    if (i < end) ++i;
  }
}

}  // namespace

std::string summand_tag(const std::vector<int>& ns) { return tag_of(ns.data(), ns.size()); }

std::vector<int> summand_parts(const std::string& tag) {
  std::vector<int> out;
  parse_tag(tag, out);
  return out;
}

namespace {

void product_of(const std::vector<std::vector<Val>>& xs, std::size_t i, std::vector<Val>& cur,
                const std::function<void(const std::vector<Val>&)>& emit) {
  if (i == xs.size()) {
    emit(cur);
    return;
  }
  for (const auto& v : xs[i]) {
    cur.push_back(v);
    product_of(xs, i + 1, cur, emit);
    cur.pop_back();
  }
}

// Compositions of n into k parts, zeros allowed.
void compositions(int n, int k, std::vector<int>& cur,
                  const std::function<void(const std::vector<int>&)>& emit) {
  if (static_cast<int>(cur.size()) == k) {
    if (n == 0) emit(cur);
    return;
  }
  for (int a = 0; a <= n; ++a) {
    cur.push_back(a);
    compositions(n - a, k, cur, emit);
    cur.pop_back();
  }
}

// Non-owning callable reference; keeps the recursive map free of allocation.
class ArgFn {
 public:
  template <class F>
  ArgFn(F& f) : obj_(&f), call_([](void* o, int i, Val& v) { (*static_cast<F*>(o))(i, v); }) {}
  void operator()(int i, Val& v) const { call_(obj_, i, v); }

 private:
  void* obj_;
  void (*call_)(void*, int, Val&);
};

// Rewrites every argument of v in place, in order.
void fmap_in(const SetMT& e, Val& v, ArgFn f, int& pos) {
  switch (e.kind) {
    case SetMT::Kind::unit: f(pos++, v); return;
    case SetMT::Kind::operad:
      for (auto& k : v.kids) f(pos++, k);
      return;
    case SetMT::Kind::product: {
      if (v.kids.size() != 1) throw InputError("malformed summand element " + to_string(v));
      int dummy = 0;
      auto inner = [&](int, Val& b) { fmap_in(*e.right, b, f, pos); };
      fmap_in(*e.left, v.kids[0], ArgFn(inner), dummy);
      return;
    }
  }
}

Val tagged(std::string tag, Val v) {
  Val out{std::move(tag), {}};
  out.kids.push_back(std::move(v));
  return out;
}

}  // namespace

void for_each_element(const SetMT& e, const std::vector<std::vector<Val>>& xs, int bound,
                      const std::function<void(Val&&)>& emit) {
  const int n = static_cast<int>(xs.size());
  switch (e.kind) {
    case SetMT::Kind::unit:
      if (n == 1)
        for (Val v : xs[0]) emit(std::move(v));
      return;
    case SetMT::Kind::operad: {
      if (n > bound || n > e.op->max_arity) return;
      std::vector<Val> cur;
      for (const auto& op : e.op->ops[n])
        product_of(xs, 0, cur, [&](const std::vector<Val>& args) { emit(Val{op, args}); });
      return;
    }
    case SetMT::Kind::product: {
      for (int k = 0; k <= bound; ++k) {
        if (e.left->kind == SetMT::Kind::unit && k != 1) continue;
        std::vector<int> cur;
        compositions(n, k, cur, [&](const std::vector<int>& ns) {
          int weight = 0;
          for (int m : ns) weight += std::max(1, m);
          if (weight > bound) return;
          std::vector<std::vector<Val>> ys;
          int off = 0;
          for (int m : ns) {
            std::vector<std::vector<Val>> slice(xs.begin() + off, xs.begin() + off + m);
            ys.push_back(elements(*e.right, slice, bound));
            off += m;
            if (ys.back().empty()) return;
          }
          const std::string tag = summand_tag(ns);
          for_each_element(*e.left, ys, bound, [&](Val&& a) {
            Val v{tag, {}};
            v.kids.push_back(std::move(a));
            emit(std::move(v));
          });
        });
      }
      return;
    }
  }
}

std::vector<Val> elements(const SetMT& e, const std::vector<std::vector<Val>>& xs, int bound) {
  std::vector<Val> out;
  for_each_element(e, xs, bound, [&](Val&& v) { out.push_back(std::move(v)); });
  return out;
}

bool is_element(const SetMT& e, const Val& v, int k,
                const std::function<bool(int, const Val&)>& member) {
  switch (e.kind) {
    case SetMT::Kind::unit: return k == 1 && member(0, v);
    case SetMT::Kind::operad: {
      if (static_cast<int>(v.kids.size()) != k || e.op->index(k, v.head) < 0) return false;
      for (int i = 0; i < k; ++i)
        if (!member(i, v.kids[i])) return false;
      return true;
    }
    case SetMT::Kind::product: {
      if (v.kids.size() != 1 || v.head.compare(0, 2, "c(") != 0) return false;
      const auto ns = summand_parts(v.head);
      std::vector<int> off{0};
      for (int n : ns) off.push_back(off.back() + n);
      if (off.back() != k) return false;
      return is_element(*e.left, v.kids[0], static_cast<int>(ns.size()),
                        [&](int i, const Val& b) {
                          return is_element(*e.right, b, ns[i], [&](int j, const Val& x) {
                            return member(off[i] + j, x);
                          });
                        });
    }
  }
  return false;
}

Val fmap(const SetMT& e, const Val& v, const std::function<Val(int, const Val&)>& f) {
  Val out = v;
  int pos = 0;
  auto g = [&](int i, Val& x) { x = f(i, x); };
  fmap_in(e, out, ArgFn(g), pos);
  return out;
}

std::vector<Val> arguments(const SetMT& e, const Val& v) {
  std::vector<Val> out;
  fmap(e, v, [&](int, const Val& x) {
    out.push_back(x);
    return x;
  });
  return out;
}

Val mt_unit_map(const SetMT& e, const Val& x) {
  switch (e.kind) {
    case SetMT::Kind::unit: return x;
    case SetMT::Kind::operad: return Val{e.op->unit, {x}};
    case SetMT::Kind::product:
      return Val{summand_tag({1}), {mt_unit_map(*e.left, mt_unit_map(*e.right, x))}};
  }
  return x;
}

Val assoc_map(const SetMT& e, Val v) {
  if (v.kids.size() != 1 || v.kids[0].kids.size() != 1)
    throw InputError("assoc_map expects a doubly tagged element");
  thread_local std::vector<int> ms, ks, starts, ns;
  parse_tag(v.head, ms);
  parse_tag(v.kids[0].head, ks);
  starts.clear();
  ns.clear();
  std::size_t off = 0;
  for (int k : ks) {
    if (off + k > ms.size()) throw InputError("summand tags do not nest");
    int sum = 0;
    for (int j = 0; j < k; ++j) sum += ms[off + j];
    starts.push_back(static_cast<int>(off));
    ns.push_back(sum);
    off += k;
  }
  if (off != ms.size()) throw InputError("summand tags do not nest");
  Val inner = std::move(v.kids[0].kids[0]);
  int pos = 0;
  auto retag = [&](int i, Val& f) {
    f = tagged(tag_of(ms.data() + starts[i], static_cast<std::size_t>(ks[i])), std::move(f));
  };
  fmap_in(e, inner, ArgFn(retag), pos);
  return tagged(tag_of(ns.data(), ns.size()), std::move(inner));
}

Val left_unitor(const Val& v) {
  if (v.kids.size() != 1 || summand_parts(v.head).size() != 1)
    throw InputError("left unitor expects a c(n) element");
  return v.kids[0];
}

Val right_unitor(const Val& v) {
  auto ns = summand_parts(v.head);
  for (int n : ns)
    if (n != 1) throw InputError("right unitor expects a c(1,..,1) element");
  if (v.kids.size() != 1) throw InputError("malformed summand element");
  return v.kids[0];
}

Val whisker_right(Val v, const std::function<Val(Val)>& f) {
  if (v.kids.size() != 1) throw InputError("malformed summand element");
  v.kids[0] = f(std::move(v.kids[0]));
  return v;
}

Val whisker_left(const SetMT& e, Val v, const std::function<Val(Val)>& f) {
  if (v.kids.size() != 1) throw InputError("malformed summand element");
  int pos = 0;
  auto g = [&](int, Val& x) { x = f(std::move(x)); };
  fmap_in(e, v.kids[0], ArgFn(g), pos);
  return v;
}

namespace {

// Builds the witness text only on failure.
void note(LawResult& l, bool ok, const Val& v) { l.record(ok, ok ? std::string() : to_string(v)); }

std::vector<std::vector<Val>> singletons(int n) {
  std::vector<std::vector<Val>> xs;
  for (int i = 0; i < n; ++i) xs.push_back({leaf("x" + std::to_string(i + 1))});
  return xs;
}

}  // namespace

Report check_pentagon(const SetMTPtr& e, const SetMTPtr& f, const SetMTPtr& g,
                      const SetMTPtr& h, int bound, int injective_grade) {
  Report r;
  r.suite = "pentagon";
  auto& pent = r.law("pentagon");
  auto& lands = r.law("lands-in-target");
  auto& inj = r.law("injective");
  auto ef = mt_product(e, f);
  auto source = mt_product(mt_product(ef, g), h);
  auto target = mt_product(e, mt_product(f, mt_product(g, h)));
  for (int n = 0; n <= bound; ++n) {
    auto xs = singletons(n);
    auto member = [&](int i, const Val& x) { return x == xs[i][0]; };
    std::set<Val> image;
    for_each_element(*source, xs, bound, [&](Val&& v) {
      Val top = assoc_map(*e, assoc_map(*ef, v));
      Val bottom = whisker_left(
          *e, assoc_map(*e, whisker_right(v, [&](Val w) { return assoc_map(*e, std::move(w)); })),
          [&](Val w) { return assoc_map(*f, std::move(w)); });
      note(pent, top == bottom, v);
      note(lands, is_element(*target, top, n, member), v);
      if (n <= injective_grade) note(inj, image.insert(std::move(top)).second, v);
    });
  }
  return r;
}

Report check_triangle(const SetMTPtr& e, const SetMTPtr& f, int bound) {
  Report r;
  r.suite = "triangle";
  auto& tri = r.law("triangle");
  auto& lu = r.law("left-unitor-inverse");
  auto& ru = r.law("right-unitor-inverse");
  auto source = mt_product(mt_product(e, mt_unit()), f);
  for (int n = 0; n <= bound; ++n) {
    auto xs = singletons(n);
    for (const auto& v : elements(*source, xs, bound)) {
      Val a = whisker_left(*e, assoc_map(*e, v), left_unitor);
      Val b = whisker_right(v, right_unitor);
      tri.record(a == b, to_string(v));
    }
    // lambda and rho invert the injections c_(n) and c_(1,..,1).
    for (const auto& v : elements(*f, xs, bound))
      lu.record(left_unitor(Val{summand_tag({n}), {v}}) == v, to_string(v));
    std::set<Val> via_i;
    for (const auto& v : elements(*mt_product(e, mt_unit()), xs, bound))
      via_i.insert(right_unitor(v));
    auto direct = elements(*e, xs, bound);
    ru.record(via_i == std::set<Val>(direct.begin(), direct.end()), describe(*e));
  }
  return r;
}

Report check_distributive(const SetMTPtr& e, int bound) {
  Report r;
  r.suite = "distributive";
  auto& law = r.law("coproduct-preservation");
  const std::vector<Val> a{leaf("a0"), leaf("a1")}, b{leaf("b0")};
  std::vector<Val> ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  for (int n = 1; n <= std::min(bound, 3); ++n)
    for (int p = 0; p < n; ++p) {
      auto with = [&](const std::vector<Val>& xp) {
        auto xs = singletons(n);
        xs[p] = xp;
        return elements(*e, xs, bound);
      };
      auto whole = with(ab), left = with(a), right = with(b);
      std::set<Val> joined(left.begin(), left.end());
      bool disjoint = true;
      for (const auto& v : right) disjoint &= joined.insert(v).second;
      law.record(disjoint && joined == std::set<Val>(whole.begin(), whole.end()) &&
                     whole.size() == joined.size(),
                 describe(*e) + " n=" + std::to_string(n) + " p=" + std::to_string(p));
    }
  return r;
}

std::string gamma_tag(int n) { return "G" + std::to_string(n); }

namespace {

int gamma_grade(const Val& v) {
  if (v.head.size() < 2 || v.head[0] != 'G') throw InputError("not a graded element " + to_string(v));
  return std::stoi(v.head.substr(1));
}

}  // namespace

std::vector<Val> gamma_elements(const SetMT& e, const std::vector<Val>& x, int bound) {
  std::vector<Val> out;
  for (int n = 0; n <= bound; ++n) {
    std::vector<std::vector<Val>> xs(n, x);
    for (auto& v : elements(e, xs, bound)) out.push_back(Val{gamma_tag(n), {std::move(v)}});
  }
  return out;
}

std::vector<std::pair<Val, int>> gamma_weighted(const SetMT& e,
                                                const std::vector<std::pair<Val, int>>& x,
                                                int bound, int budget) {
  std::vector<std::pair<Val, int>> out;
  for (int n = 0; n <= bound; ++n) {
    std::vector<int> pick;
    std::function<void(int, int)> go = [&](int i, int used) {
      if (i == n) {
        std::vector<std::vector<Val>> xs;
        for (int j : pick) xs.push_back({x[j].first});
        // Every argument costs at least 1, so nullary pieces cannot pile up.
        for (auto& v : elements(e, xs, bound))
          out.push_back({Val{gamma_tag(n), {std::move(v)}}, std::max(1, used)});
        return;
      }
      for (int j = 0; j < static_cast<int>(x.size()); ++j) {
        if (used + x[j].second > budget) continue;
        pick.push_back(j);
        go(i + 1, used + x[j].second);
        pick.pop_back();
      }
    };
    go(0, 0);
  }
  return out;
}

Val gamma_map(const SetMT& e, const Val& v, const std::function<Val(const Val&)>& f) {
  return Val{v.head, {fmap(e, v.kids.at(0), [&](int, const Val& x) { return f(x); })}};
}

Val gamma_unit(const SetMT& e, const Val& x) { return Val{gamma_tag(1), {mt_unit_map(e, x)}}; }

std::optional<Val> gamma_mult(const SetOperad& o, const Val& v) {
  const Val& outer = v.kids.at(0);
  const int k = static_cast<int>(outer.kids.size());
  const int x = o.index(k, outer.head);
  if (x < 0) throw InputError("unknown operation " + outer.head);
  std::vector<std::pair<int, int>> inner;
  std::vector<Val> args;
  for (const auto& g : outer.kids) {
    const Val& op = g.kids.at(0);
    const int n = gamma_grade(g);
    inner.push_back({n, o.index(n, op.head)});
    args.insert(args.end(), op.kids.begin(), op.kids.end());
  }
  auto res = o.compose(x, inner);
  if (!res) return std::nullopt;
  const int total = static_cast<int>(args.size());
  return Val{gamma_tag(total), {Val{o.ops[total][*res], args}}};
}

Val gamma0(const Val& x) { return Val{gamma_tag(1), {x}}; }

Val gamma2(const SetMT& e, const Val& v) {
  const Val& a = v.kids.at(0);
  std::vector<int> ns;
  for (const auto& g : arguments(e, a)) ns.push_back(gamma_grade(g));
  Val inner = fmap(e, a, [](int, const Val& g) { return g.kids.at(0); });
  int total = 0;
  for (int n : ns) total += n;
  return Val{gamma_tag(total), {Val{summand_tag(ns), {inner}}}};
}

Report check_gamma_monoidal(const SetMTPtr& e, const SetMTPtr& f, const SetMTPtr& g,
                            const std::vector<Val>& x, int bound) {
  Report r;
  r.suite = "gamma-monoidal";
  auto& as = r.law("associativity");
  auto& lu = r.law("left-unit");
  auto& ru = r.law("right-unit");
  auto& iso = r.law("gamma2-bijective");
  std::vector<std::pair<Val, int>> base;
  for (const auto& v : x) base.push_back({v, 1});
  auto gx = gamma_weighted(*g, base, bound, bound);
  auto fgx = gamma_weighted(*f, gx, bound, bound);
  auto efgx = gamma_weighted(*e, fgx, bound, bound);
  auto ef = mt_product(e, f);
  for (const auto& [v, w] : efgx) {
    Val lhs = gamma2(*ef, gamma2(*e, v));
    lhs = Val{lhs.head, {assoc_map(*e, lhs.kids.at(0))}};
    Val rhs = gamma2(*e, gamma_map(*e, v, [&](const Val& y) { return gamma2(*f, y); }));
    as.record(lhs == rhs, to_string(v));
  }
  auto fx = gamma_weighted(*f, base, bound, bound);
  for (const auto& [v, w] : fx) {
    Val l = gamma2(*mt_unit(), gamma0(v));
    lu.record(Val{l.head, {left_unitor(l.kids.at(0))}} == v, to_string(v));
    Val rr = gamma2(*f, gamma_map(*f, v, gamma0));
    ru.record(Val{rr.head, {right_unitor(rr.kids.at(0))}} == v, to_string(v));
  }
  // gamma2 : Gamma(E)Gamma(F)X -> Gamma(E o F)X, compared on grades <= bound.
  auto efx = gamma_weighted(*e, fx, bound, bound);
  std::set<Val> image;
  bool injective = true;
  for (const auto& [v, w] : efx) injective &= image.insert(gamma2(*e, v)).second;
  auto direct = gamma_elements(*ef, x, bound);
  iso.record(injective && image == std::set<Val>(direct.begin(), direct.end()),
             describe(*e) + "," + describe(*f));
  return r;
}

Report check_gamma_monad(const SetOperad& o, const std::vector<Val>& x, int bound) {
  Report r;
  r.suite = "gamma-monad";
  auto& lu = r.law("left-unit");
  auto& ru = r.law("right-unit");
  auto& as = r.law("associativity");
  auto e = mt_operad(std::make_shared<const SetOperad>(o));
  std::vector<std::pair<Val, int>> base;
  for (const auto& v : x) base.push_back({v, 1});
  auto gx = gamma_weighted(*e, base, bound, bound);
  for (const auto& [v, w] : gx) {
    lu.record(gamma_mult(o, gamma_unit(*e, v)) == v, to_string(v));
    ru.record(gamma_mult(o, gamma_map(*e, v, [&](const Val& y) { return gamma_unit(*e, y); })) == v,
              to_string(v));
  }
  auto ggx = gamma_weighted(*e, gx, bound, bound);
  auto gggx = gamma_weighted(*e, ggx, bound, bound);
  for (const auto& [v, w] : gggx) {
    auto flat = gamma_mult(o, v);
    if (!flat) {
      ++as.skipped;
      continue;
    }
    auto lhs = gamma_mult(o, *flat);
    bool inner_ok = true;
    Val mapped = gamma_map(*e, v, [&](const Val& y) {
      auto m = gamma_mult(o, y);
      inner_ok &= m.has_value();
      return m ? *m : y;
    });
    if (!inner_ok || !lhs) {
      ++as.skipped;
      continue;
    }
    auto rhs = gamma_mult(o, mapped);
    as.record(rhs && *lhs == *rhs, to_string(v));
  }
  return r;
}

EMonoid monoid_from_binary(const SetOperad& o, const std::vector<Val>& carrier,
                           const std::vector<std::vector<int>>& mult, int unit) {
  EMonoid m;
  m.carrier = carrier;
  const int c = static_cast<int>(carrier.size());
  for (int n = 0; n <= o.max_arity; ++n)
    for (int x = 0; x < o.arity_count(n); ++x) {
      std::vector<int> args(n, 0);
      std::function<void(int)> go = [&](int i) {
        if (i == n) {
          int acc = unit;
          for (int a : args) acc = mult[acc][a];
          std::vector<int> key{n, x};
          key.insert(key.end(), args.begin(), args.end());
          m.act[key] = acc;
          return;
        }
        for (int a = 0; a < c; ++a) {
          args[i] = a;
          go(i + 1);
        }
      };
      go(0);
    }
  return m;
}

namespace {

int act_of(const EMonoid& m, int n, int x, const std::vector<int>& args) {
  std::vector<int> key{n, x};
  key.insert(key.end(), args.begin(), args.end());
  auto it = m.act.find(key);
  if (it == m.act.end()) throw InputError("monoid action table is incomplete");
  return it->second;
}

int index_in(const std::vector<Val>& c, const Val& v) {
  auto it = std::find(c.begin(), c.end(), v);
  if (it == c.end()) throw InputError("value outside the carrier: " + to_string(v));
  return static_cast<int>(it - c.begin());
}

}  // namespace

Report check_emonoid(const SetOperad& o, const EMonoid& m) {
  Report r;
  r.suite = "emonoid";
  auto& un = r.law("unit");
  auto& as = r.law("associativity");
  const int c = static_cast<int>(m.carrier.size());
  const int u = o.index(1, o.unit);
  for (int a = 0; a < c; ++a) un.record(act_of(m, 1, u, {a}) == a, to_string(m.carrier[a]));
  for (int k = 0; k <= o.max_arity; ++k)
    for (int x = 0; x < o.arity_count(k); ++x) {
      std::vector<std::pair<int, int>> ys;
      std::function<void(int, int)> pick = [&](int i, int total) {
        if (i == k) {
          int xy = *o.compose(x, ys);
          std::vector<int> args(total, 0);
          std::function<void(int)> go = [&](int j) {
            if (j == total) {
              int lhs = act_of(m, total, xy, args);
              std::vector<int> inner;
              int off = 0;
              for (auto [n, y] : ys) {
                std::vector<int> part(args.begin() + off, args.begin() + off + n);
                inner.push_back(act_of(m, n, y, part));
                off += n;
              }
              as.record(lhs == act_of(m, k, x, inner), o.ops[k][x]);
              return;
            }
            for (int a = 0; a < c; ++a) {
              args[j] = a;
              go(j + 1);
            }
          };
          go(0);
          return;
        }
        for (int n = 0; total + n <= o.max_arity; ++n)
          for (int y = 0; y < o.arity_count(n); ++y) {
            ys.push_back({n, y});
            pick(i + 1, total + n);
            ys.pop_back();
          }
      };
      pick(0, 0);
    }
  return r;
}

GammaAlgebra monoid_to_algebra(const SetOperad& o, const EMonoid& m) {
  GammaAlgebra a;
  a.carrier = m.carrier;
  auto e = mt_operad(std::make_shared<const SetOperad>(o));
  for (const auto& v : gamma_elements(*e, m.carrier, o.max_arity)) {
    const Val& op = v.kids.at(0);
    const int n = static_cast<int>(op.kids.size());
    std::vector<int> args;
    for (const auto& y : op.kids) args.push_back(index_in(m.carrier, y));
    a.structure[v] = act_of(m, n, o.index(n, op.head), args);
  }
  return a;
}

EMonoid algebra_to_monoid(const SetOperad& o, const GammaAlgebra& a) {
  EMonoid m;
  m.carrier = a.carrier;
  for (const auto& [v, res] : a.structure) {
    const Val& op = v.kids.at(0);
    const int n = static_cast<int>(op.kids.size());
    std::vector<int> key{n, o.index(n, op.head)};
    for (const auto& y : op.kids) key.push_back(index_in(a.carrier, y));
    m.act[key] = res;
  }
  return m;
}

Report check_gamma_algebra(const SetOperad& o, const GammaAlgebra& a) {
  Report r;
  r.suite = "gamma-algebra";
  auto& un = r.law("unit");
  auto& as = r.law("associativity");
  auto e = mt_operad(std::make_shared<const SetOperad>(o));
  auto structure = [&](const Val& v) {
    auto it = a.structure.find(v);
    if (it == a.structure.end()) throw InputError("structure map undefined at " + to_string(v));
    return it->second;
  };
  for (std::size_t i = 0; i < a.carrier.size(); ++i)
    un.record(structure(gamma_unit(*e, a.carrier[i])) == static_cast<int>(i),
              to_string(a.carrier[i]));
  std::vector<std::pair<Val, int>> base;
  for (const auto& v : a.carrier) base.push_back({v, 1});
  auto gx = gamma_weighted(*e, base, o.max_arity, o.max_arity);
  for (const auto& [w, weight] : gamma_weighted(*e, gx, o.max_arity, o.max_arity)) {
    auto flat = gamma_mult(o, w);
    if (!flat) {
      ++as.skipped;
      continue;
    }
    Val evaluated = gamma_map(*e, w, [&](const Val& y) { return a.carrier[structure(y)]; });
    as.record(structure(*flat) == structure(evaluated), to_string(w));
  }
  return r;
}

}  // namespace globcat
