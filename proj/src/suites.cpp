#include "globcat/suites.hpp"

#include <memory>

namespace globcat {

Report check_tight(int max_dim, int max_size) {
  Report r;
  r.suite = "tight";
  auto& tight = r.law("isomorphic-realizations-are-equal");
  auto& order = r.law("order-preserving-on-0-cells");
  for (int d = 0; d <= max_dim; ++d) {
    const auto trees = enumerate_trees(d, max_size);
    for (const auto& p : trees)
      for (const auto& q : trees) {
        RigidityReport rr = rigidity_check(p, q);
        const std::string w = to_text(p) + " ~ " + to_text(q);
        tight.record(rr.tight && (p == q ? rr.isos == 1 && rr.non_identity == 0 : rr.isos == 0), w);
        order.record(rr.order_preserving, w);
      }
  }
  return r;
}

Report check_pentagon_panel(const std::vector<SetOperad>& panel, int bound, int injective_grade) {
  Report r;
  r.suite = "pentagon";
  std::vector<SetMTPtr> es;
  for (const auto& o : panel) es.push_back(mt_operad(std::make_shared<const SetOperad>(o)));
  for (const auto& e : es)
    for (const auto& f : es) {
      r.merge(check_triangle(e, f, bound));
      for (const auto& g : es)
        for (const auto& h : es) r.merge(check_pentagon(e, f, g, h, bound, injective_grade));
    }
  return r;
}

Report check_bar_roundtrip(const CompositionTables& ct, const ECatBounds& b) {
  Report r;
  r.suite = "bar-roundtrip";
  auto view = tcross(ct.cells.trunc() - 1);
  AlgebraTable alg = algebra_from_tables(*view, ct, b);
  ECat c = algebra_to_ecat(view, alg, b);
  r.merge(check_ecat(c));
  r.law("ecat-to-algebra-inverts").record(ecat_to_algebra(c) == alg);
  r.law("algebra-to-ecat-inverts").record(algebra_to_ecat(view, ecat_to_algebra(c), b) == c);
  r.law("tables-recovered").record(tables_from_algebra(alg) == ct);
  return r;
}

Report check_bar_roundtrip(const ECat& c) {
  Report r;
  r.suite = "bar-roundtrip";
  r.merge(check_ecat(c));
  AlgebraTable alg = ecat_to_algebra(c);
  r.law("algebra-to-ecat-inverts").record(algebra_to_ecat(c.e, alg, c.bounds) == c);
  r.law("ecat-to-algebra-inverts").record(ecat_to_algebra(algebra_to_ecat(c.e, alg, c.bounds)) == alg);
  return r;
}

Report check_psi(const CompositionTables& ct, const ECatBounds& b) {
  Report r;
  r.suite = "psi";
  const int n = ct.cells.trunc();
  EnrichedCat e = psi(ct, b);
  CompositionTables back = psi_inverse(e, b);
  r.law("level").record(e.level == n);
  r.law("inverse-is-strict").record(check_strict(back).ok());
  r.law("inverse-recovers-tables").record(canonical(back) == canonical(ct));
  r.law("enrichment-recovered").record(psi(back, b) == e);
  auto& phi_sq = r.law("truncation-square-phi");
  auto& psi_sq = r.law("truncation-square-psi");
  for (int m = 1; m < n; ++m) {
    CompositionTables low = truncate(ct, m);
    phi_sq.record(truncate_homs(phi(ct, b), m - 1) == phi(low, b), "truncation to " + std::to_string(m));
    psi_sq.record(truncate(e, m) == psi(low, b), "truncation to " + std::to_string(m));
  }
  return r;
}

}  // namespace globcat
