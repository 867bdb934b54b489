#include "globcat/samples.hpp"

namespace globcat {

CompositionTables strict_from_rule(const GlobSet& cells, const std::map<std::string, std::string>& identities,
                                   const CompositionRule& rule) {
  const int n = cells.trunc();
  CompositionTables ct{cells, std::vector<std::vector<int>>(n), {}};
  for (int d = 0; d < n; ++d)
    for (int i = 0; i < cells.count(d); ++i) {
      auto it = identities.find(cells.id(d, i));
      if (it == identities.end()) throw InputError("no identity on " + cells.id(d, i));
      CellIx u = cells.at(it->second);
      if (u.dim != d + 1) throw InputError("identity on " + cells.id(d, i) + " has the wrong dimension");
      ct.identity[d].push_back(u.idx);
    }
  auto neutral = [&](int d, int k, int a) { return ct.identity_at(k, cells.src_at(d, a, k), d) == a; };
  for (int d = 1; d <= n; ++d)
    for (int k = 0; k < d; ++k)
      for (int a = 0; a < cells.count(d); ++a)
        for (int b = 0; b < cells.count(d); ++b) {
          if (cells.tgt_at(d, a, k) != cells.src_at(d, b, k)) continue;
          int v;
          if (neutral(d, k, a)) {
            v = b;
          } else if (neutral(d, k, b)) {
            v = a;
          } else {
            auto r = rule(d, k, cells.id(d, a), cells.id(d, b));
            if (!r) throw InputError("no composite of " + cells.id(d, a) + " and " + cells.id(d, b));
            CellIx c = cells.at(*r);
            if (c.dim != d) throw InputError("composite " + *r + " has the wrong dimension");
            v = c.idx;
          }
          ct.comp[{d, k, a, b}] = v;
        }
  return ct;
}

namespace {

std::optional<std::string> none(int, int, const std::string&, const std::string&) { return std::nullopt; }

}  // namespace

CompositionTables arrow_category() {
  GlobSet x = GlobSetBuilder(1).cell("a").cell("b").cell("ia", "a", "a").cell("ib", "b", "b").cell("f", "a", "b").build();
  return strict_from_rule(x, {{"a", "ia"}, {"b", "ib"}}, none);
}

CompositionTables cyclic_monoid(int n) {
  GlobSetBuilder b(1);
  b.cell("o");
  for (int i = 0; i < n; ++i) b.cell("r" + std::to_string(i), "o", "o");
  return strict_from_rule(b.build(), {{"o", "r0"}}, [n](int, int, const std::string& a, const std::string& c) {
    return "r" + std::to_string((std::stoi(a.substr(1)) + std::stoi(c.substr(1))) % n);
  });
}

CompositionTables chain_category() {
  GlobSet x = GlobSetBuilder(1)
                  .cell("a").cell("b").cell("c")
                  .cell("ia", "a", "a").cell("ib", "b", "b").cell("ic", "c", "c")
                  .cell("f", "a", "b").cell("g", "b", "c").cell("gf", "a", "c")
                  .build();
  return strict_from_rule(x, {{"a", "ia"}, {"b", "ib"}, {"c", "ic"}},
                          [](int, int, const std::string& a, const std::string& b) -> std::optional<std::string> {
                            if (a == "f" && b == "g") return "gf";
                            return std::nullopt;
                          });
}

CompositionTables z2_two_category() {
  GlobSet x = GlobSetBuilder(2).cell("o").cell("e", "o", "o").cell("ie", "e", "e").cell("s", "e", "e").build();
  return strict_from_rule(x, {{"o", "e"}, {"e", "ie"}},
                          [](int, int, const std::string& a, const std::string& b) -> std::optional<std::string> {
                            if (a == "s" && b == "s") return "ie";
                            return std::nullopt;
                          });
}

CompositionTables z2_two_group() {
  GlobSet x = GlobSetBuilder(2)
                  .cell("o").cell("e", "o", "o").cell("u", "o", "o")
                  .cell("ie", "e", "e").cell("s", "e", "e").cell("iu", "u", "u").cell("su", "u", "u")
                  .build();
  // A 2-cell is (1-cell part, 2-cell part) in Z/2 x Z/2. Horizontal composition
  // adds both parts, vertical keeps the 1-cell part.
  static const std::map<std::string, std::pair<int, int>> two{{"ie", {0, 0}}, {"s", {0, 1}}, {"iu", {1, 0}}, {"su", {1, 1}}};
  return strict_from_rule(x, {{"o", "e"}, {"e", "ie"}, {"u", "iu"}},
                          [](int d, int k, const std::string& a, const std::string& b) -> std::optional<std::string> {
                            if (d == 1) return a == b ? "e" : "u";
                            auto [p, q] = two.at(a);
                            auto [p2, q2] = two.at(b);
                            std::pair<int, int> r{k == 0 ? (p + p2) % 2 : p, (q + q2) % 2};
                            for (const auto& [id, v] : two)
                              if (v == r) return id;
                            return std::nullopt;
                          });
}

CompositionTables loop_two_category() {
  GlobSet x = GlobSetBuilder(2)
                  .cell("x").cell("y")
                  .cell("ix", "x", "x").cell("iy", "y", "y").cell("f", "x", "y")
                  .cell("iix", "ix", "ix").cell("iiy", "iy", "iy").cell("if", "f", "f").cell("t", "f", "f")
                  .build();
  return strict_from_rule(x, {{"x", "ix"}, {"y", "iy"}, {"ix", "iix"}, {"iy", "iiy"}, {"f", "if"}},
                          [](int, int, const std::string& a, const std::string& b) -> std::optional<std::string> {
                            if (a == "t" && b == "t") return "if";
                            return std::nullopt;
                          });
}

CompositionTables parallel_two_category() {
  GlobSet x = GlobSetBuilder(2)
                  .cell("x").cell("y")
                  .cell("ix", "x", "x").cell("iy", "y", "y").cell("f", "x", "y").cell("g", "x", "y")
                  .cell("iix", "ix", "ix").cell("iiy", "iy", "iy").cell("if", "f", "f").cell("ig", "g", "g")
                  .cell("al", "f", "g")
                  .build();
  return strict_from_rule(x, {{"x", "ix"}, {"y", "iy"}, {"ix", "iix"}, {"iy", "iiy"}, {"f", "if"}, {"g", "ig"}}, none);
}

}  // namespace globcat
