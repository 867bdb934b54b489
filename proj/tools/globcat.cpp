// Command-line front end: enumeration, composition, check suites and
// conversions. Exit status: 0 success, 1 check failure, 2 bad input.

#include <chrono>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "globcat/json_io.hpp"
#include "globcat/samples.hpp"
#include "globcat/suites.hpp"

namespace {

using namespace globcat;

struct Options {
  int dim = 2;
  int max_size = 4;
  int arity_bound = -1;  // -1: the suite's own default
  int len_bound = -1;
  int outer_size = 2;
  std::string format = "json";
  std::string carrier, operad, ecat, tables;
  std::vector<std::string> set_operads;
  std::string suite, kind, input;
};

int or_default(int v, int d) { return v < 0 ? d : v; }

GlobSet loop_graph() { return GlobSetBuilder(1).cell("v").cell("l", "v", "v").build(); }

GlobSet five_cells() {
  return GlobSetBuilder(2)
      .cell("v")
      .cell("l", "v", "v")
      .cell("m", "v", "v")
      .cell("a", "l", "m")
      .cell("b", "l", "l")
      .build();
}

GlobSet load_carrier(const Options& o, GlobSet fallback) {
  return o.carrier.empty() ? fallback : globset_from_json(read_json_file(o.carrier));
}

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int finish(const Report& r, const Json& instances, const Options& o, double secs) {
  if (o.format == "text") {
    for (const auto& l : r.laws) {
      std::cout << l.law << " checked=" << l.checked << " failed=" << l.failed << " skipped=" << l.skipped << "\n";
      for (const auto& c : l.counterexamples) std::cout << "  counterexample: " << c << "\n";
    }
  } else {
    Json j = to_json(r);
    j["instances"] = instances;
    emit(j);
  }
  long checked = 0;
  for (const auto& l : r.laws) checked += l.checked;
  std::cerr << r.suite << ": " << r.laws.size() << " laws, " << checked << " instances, " << r.failures()
            << " failures (" << secs << " s)\n";
  return r.ok() ? 0 : 1;
}

std::vector<SetOperad> set_operad_panel(const Options& o, int bound) {
  std::vector<SetOperad> panel;
  for (const auto& f : o.set_operads) panel.push_back(set_operad_from_json(read_json_file(f)));
  if (panel.empty())
    panel = {unit_operad(bound), terminal_operad(bound), terminal_operad(bound, false), parity_operad(bound)};
  return panel;
}

std::vector<std::pair<std::string, CompositionTables>> tables_panel(const Options& o,
                                                                    std::vector<std::pair<std::string, CompositionTables>> fallback) {
  if (o.tables.empty()) return fallback;
  return {{o.tables, tables_from_json(read_json_file(o.tables))}};
}

int cmd_trees(const Options& o) {
  if (o.dim < 0 || o.max_size < 1) throw InputError("--dim must be >= 0 and --max-size >= 1");
  auto trees = enumerate_trees(o.dim, o.max_size);
  if (o.format == "text") {
    for (const auto& t : trees) std::cout << to_text(t) << "\n";
  } else {
    Json j = Json::array();
    for (const auto& t : trees) j.push_back(to_json(t));
    emit(j);
  }
  std::cerr << trees.size() << " trees\n";
  return 0;
}

int cmd_free(const Options& o) {
  if (o.carrier.empty()) throw InputError("free needs --carrier");
  if (o.dim < 0 || o.max_size < 1) throw InputError("--dim must be >= 0 and --max-size >= 1");
  GlobSet x = load_carrier(o, {});
  auto cells = free_cells(x, o.dim, o.max_size);
  if (o.format == "text") {
    for (const auto& c : cells) std::cout << cell_text(x, c) << "\n";
  } else {
    Json j = Json::array();
    for (const auto& c : cells) j.push_back(to_json(x, c));
    emit(j);
  }
  std::cerr << cells.size() << " cells\n";
  return 0;
}

int cmd_mu(const Options& o) {
  Json in = read_json_file(o.input);
  GlobSet x = globset_from_json(in.at("carrier"));
  FreeOverFree f = free_over_free_from_json(in, x);
  MuResult r = mu_factor(f);
  if (o.format == "text") {
    std::cout << cell_text(x, r.cell) << "\n";
  } else {
    emit(Json{{"cell", to_json(x, r.cell)}, {"factor", to_json(glob_of_tree(r.cell.tree), r.g)}});
  }
  std::cerr << "mu: tree " << to_text(r.cell.tree) << "\n";
  return 0;
}

int cmd_check(const Options& o) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  Json inst = Json::array();
  const std::string& s = o.suite;
  if (s == "monad") {
    GlobSet x = load_carrier(o, five_cells());
    MonadBounds b{o.dim, o.max_size, std::min(3, o.max_size), o.outer_size};
    r = check_monad(x, b);
    inst.push_back({{"carrier", o.carrier.empty() ? "five-cells" : o.carrier}, {"dim", o.dim}, {"max_size", o.max_size}});
  } else if (s == "tight") {
    r = check_tight(o.dim, o.max_size);
    inst.push_back({{"dim", o.dim}, {"max_size", o.max_size}});
  } else if (s == "multitensor") {
    GlobSet x = load_carrier(o, loop_graph());
    MTOperadPtr e = o.operad.empty() ? tcross(x.trunc()) : table_operad(to_mt_operad(operad_from_json(read_json_file(o.operad))));
    MTBounds b{or_default(o.arity_bound, 2), std::min(o.max_size, 3), o.outer_size, std::min(o.dim, e->trunc())};
    r = check_multitensor(*e, x, b);
    inst.push_back({{"multitensor", e->name()}, {"carrier", o.carrier.empty() ? "loop" : o.carrier}});
  } else if (s == "pentagon") {
    const int bound = or_default(o.arity_bound, 2);
    auto panel = set_operad_panel(o, bound);
    r = check_pentagon_panel(panel, bound);
    for (const auto& p : panel) inst.push_back(p.name);
  } else if (s == "gamma") {
    const int bound = or_default(o.len_bound, 3);
    auto panel = o.set_operads.empty() ? std::vector<SetOperad>{terminal_operad(bound)} : set_operad_panel(o, bound);
    r.suite = "gamma";
    for (const auto& p : panel) {
      auto e = mt_operad(std::make_shared<const SetOperad>(p));
      r.merge(check_gamma_monad(p, {leaf("a"), leaf("b")}, bound));
      r.merge(check_gamma_monoidal(e, e, e, {leaf("a")}, bound));
      inst.push_back(p.name);
    }
  } else if (s == "distlaw") {
    GlobSet x = load_carrier(o, loop_graph());
    std::vector<GlobSet> targets{x};
    if (o.carrier.empty()) targets.push_back(GlobSetBuilder(1).cell("v").cell("l", "v", "v").cell("m", "v", "v").build());
    r = check_distributive_law(x, targets, DistBounds{or_default(o.len_bound, 2), std::min(o.max_size, 3), o.outer_size});
    inst.push_back({{"carrier", o.carrier.empty() ? "loop" : o.carrier}, {"targets", targets.size()}});
  } else if (s == "operad") {
    Operad a = o.operad.empty() ? identity_operad(std::min(o.dim, 2), std::min(o.max_size, 3))
                                : operad_from_json(read_json_file(o.operad));
    r = check_operad(a, OperadBounds{std::min(o.max_size, 3)});
    inst.push_back(o.operad.empty() ? a.coll.name : o.operad);
  } else if (s == "ecat") {
    if (!o.ecat.empty()) {
      r = check_ecat(ecat_from_json(read_json_file(o.ecat)), {o.outer_size});
      inst.push_back(o.ecat);
    } else {
      const ECatBounds b{or_default(o.len_bound, 2), std::min(o.max_size, 3)};
      r.suite = "ecat";
      for (const auto& [name, ct] : tables_panel(o, {{"chain", chain_category()}})) {
        auto view = tcross(ct.cells.trunc() - 1);
        r.merge(check_ecat(algebra_to_ecat(view, algebra_from_tables(*view, ct, b), b), {o.outer_size}));
        inst.push_back(name);
      }
    }
  } else if (s == "bar-roundtrip") {
    r.suite = "bar-roundtrip";
    if (!o.ecat.empty()) {
      r.merge(check_bar_roundtrip(ecat_from_json(read_json_file(o.ecat))));
      inst.push_back(o.ecat);
    } else {
      const ECatBounds b{or_default(o.len_bound, 2), std::min(o.max_size, 3)};
      for (const auto& [name, ct] : tables_panel(o, {{"arrow", arrow_category()}, {"cyclic3", cyclic_monoid(3)}, {"z2-two-category", z2_two_category()}})) {
        r.merge(check_bar_roundtrip(ct, b));
        inst.push_back(name);
      }
    }
  } else if (s == "psi") {
    r.suite = "psi";
    const ECatBounds b{or_default(o.len_bound, 3), std::min(o.max_size, 3)};
    for (const auto& [name, ct] : tables_panel(o, {{"chain", chain_category()}, {"parallel-two-category", parallel_two_category()}})) {
      r.merge(check_psi(ct, b));
      inst.push_back(name);
    }
  } else {
    throw InputError("unknown suite '" + s + "'");
  }
  return finish(r, inst, o, seconds_since(t0));
}

int cmd_convert(const Options& o) {
  Json in = read_json_file(o.input);
  const std::string& k = o.kind;
  const ECatBounds flag_bounds{or_default(o.len_bound, 2), std::min(o.max_size, 3)};
  if (k == "alg-to-ecat") {
    if (in.contains("composites")) {
      CompositionTables ct = tables_from_json(in);
      auto view = tcross(ct.cells.trunc() - 1);
      emit(to_json(algebra_to_ecat(view, algebra_from_tables(*view, ct, flag_bounds), flag_bounds)));
    } else {
      ViewedAlgebra a = algebra_from_json(in);
      emit(to_json(algebra_to_ecat(a.view, a.alg, a.bounds)));
    }
  } else if (k == "tables-to-alg") {
    CompositionTables ct = tables_from_json(in);
    auto view = tcross(ct.cells.trunc() - 1);
    emit(to_json(*view, algebra_from_tables(*view, ct, flag_bounds), flag_bounds));
  } else if (k == "ecat-to-alg") {
    ECat c = ecat_from_json(in);
    emit(to_json(*c.e, ecat_to_algebra(c), c.bounds));
  } else if (k == "alg-to-tables") {
    emit(to_json(tables_from_algebra(algebra_from_json(in).alg)));
  } else if (k == "tcross-to-algcat") {
    ECat c = ecat_from_json(in);
    if (c.e->name() != "tcross") throw InputError("tcross-to-algcat needs a category over the product multitensor");
    emit(to_json(tcross_to_algcat(c)));
  } else if (k == "algcat-to-tcross") {
    emit(to_json(algcat_to_tcross(algcat_from_json(in))));
  } else if (k == "operad-to-mt") {
    Operad a = operad_from_json(in);
    Json j = to_json(to_mt_operad(a));
    j["support"] = a.support;
    emit(j);
  } else if (k == "mt-to-operad") {
    emit(to_json(from_mt_operad(mt_table_from_json(in), in.value("support", o.max_size))));
  } else if (k == "mult-to-collection") {
    MTTable t = mt_table_from_json(in);
    emit(to_json(collection_from_mt_ops(t.name, t.trunc, t.ops)));
  } else if (k == "collection-to-mult") {
    Collection c = collection_from_json(in);
    emit(to_json(MTTable{c.name, c.trunc - 1, bar_operations(c), {}, {}}));
  } else {
    throw InputError("unknown conversion '" + k + "'");
  }
  return 0;
}

int cmd_validate(const Options& o) {
  Json in = read_json_file(o.input);
  const std::string& k = o.kind;
  Json out{{"kind", k}, {"valid", true}};
  if (k == "globset") {
    GlobSet x = globset_from_json(in);
    out["cells"] = x.total();
  } else if (k == "tree") {
    out["size"] = tree_from_json(in).size();
  } else if (k == "freecell" || k == "free-over-free") {
    if (o.carrier.empty()) throw InputError("validate " + k + " needs --carrier");
    GlobSet x = load_carrier(o, {});
    if (k == "freecell") {
      FreeCell c = freecell_from_json(in, x);
      if (!is_free_cell(c, x)) throw InputError("not a free cell");
      out["dim"] = c.dim();
    } else {
      out["dim"] = free_over_free_from_json(in, x).tree.dim;
    }
  } else if (k == "tables") {
    CompositionTables ct = tables_from_json(in);
    out["strict"] = check_strict(ct).ok();
  } else if (k == "set-operad") {
    SetOperad s = set_operad_from_json(in);
    out["max_arity"] = s.max_arity;
  } else if (k == "operad") {
    out["operations"] = operad_from_json(in).coll.ops.size();
  } else if (k == "collection") {
    out["operations"] = collection_from_json(in).ops.size();
  } else if (k == "mt-table") {
    out["operations"] = mt_table_from_json(in).ops.size();
  } else if (k == "ecat") {
    out["objects"] = ecat_from_json(in).carrier.count(0);
  } else if (k == "algebra") {
    out["entries"] = algebra_from_json(in).alg.act.size();
  } else if (k == "algcat") {
    out["objects"] = algcat_from_json(in).carrier.count(0);
  } else {
    throw InputError("unknown kind '" + k + "'");
  }
  emit(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"globular pasting, operads and enrichment"};
  app.require_subcommand(1);
  Options o;
  auto common = [&](CLI::App* c) {
    c->add_option("--dim", o.dim, "dimension")->capture_default_str();
    c->add_option("--max-size", o.max_size, "tree size bound (node count)")->capture_default_str();
    c->add_option("--arity-bound", o.arity_bound, "arity or grade bound");
    c->add_option("--len-bound", o.len_bound, "word or object-sequence length bound");
    c->add_option("--outer-size", o.outer_size, "bound on outer trees in associativity laws")->capture_default_str();
    c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    c->add_option("--carrier", o.carrier, "globular set JSON");
  };
  auto* trees = app.add_subcommand("trees", "enumerate trees");
  common(trees);
  auto* free = app.add_subcommand("free", "enumerate free cells over a carrier");
  common(free);
  auto* mu = app.add_subcommand("mu", "compose a map glob(tree) -> TX");
  common(mu);
  mu->add_option("input", o.input, "JSON with carrier, tree and cells")->required();
  auto* check = app.add_subcommand("check", "run a law suite");
  common(check);
  check->add_option("suite", o.suite, "suite")
      ->required()
      ->check(CLI::IsMember({"monad", "tight", "multitensor", "pentagon", "gamma", "distlaw", "operad", "ecat",
                             "bar-roundtrip", "psi"}));
  check->add_option("--operad", o.operad, "operad JSON");
  check->add_option("--set-operad", o.set_operads, "set operad JSON (repeatable)");
  check->add_option("--ecat", o.ecat, "enriched category JSON");
  check->add_option("--tables", o.tables, "composition tables JSON");
  auto* convert = app.add_subcommand("convert", "convert between presentations");
  common(convert);
  convert->add_option("kind", o.kind, "conversion")
      ->required()
      ->check(CLI::IsMember({"alg-to-ecat", "ecat-to-alg", "tables-to-alg", "alg-to-tables", "tcross-to-algcat",
                             "algcat-to-tcross", "operad-to-mt", "mt-to-operad", "mult-to-collection",
                             "collection-to-mult"}));
  convert->add_option("input", o.input, "input JSON")->required();
  auto* validate = app.add_subcommand("validate", "parse and check the structure of a file");
  common(validate);
  validate->add_option("kind", o.kind, "kind")
      ->required()
      ->check(CLI::IsMember({"globset", "tree", "freecell", "free-over-free", "tables", "set-operad", "operad",
                             "collection", "mt-table", "ecat", "algebra", "algcat"}));
  validate->add_option("input", o.input, "input JSON")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  try {
    if (*trees) return cmd_trees(o);
    if (*free) return cmd_free(o);
    if (*mu) return cmd_mu(o);
    if (*check) return cmd_check(o);
    if (*convert) return cmd_convert(o);
    if (*validate) return cmd_validate(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
